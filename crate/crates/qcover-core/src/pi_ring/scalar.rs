//! The integral coefficient ring `Z[q,q^-1][p]/(p^2 - 1)` and its super
//! quantum combinatorics.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::laurent::LaurentPoly;
use super::Sign;

/// An element `f + g*p` of `Z[q,q^-1][p]/(p^2-1)`, with `{1, p}` as a free
/// basis over the Laurent polynomials. Equality is componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PiScalar {
    pub even: LaurentPoly,
    pub odd: LaurentPoly,
}

impl PiScalar {
    pub fn zero() -> Self {
        PiScalar { even: LaurentPoly::zero(), odd: LaurentPoly::zero() }
    }

    pub fn one() -> Self {
        PiScalar { even: LaurentPoly::one(), odd: LaurentPoly::zero() }
    }

    /// The parity parameter `p` itself.
    pub fn pi() -> Self {
        PiScalar { even: LaurentPoly::zero(), odd: LaurentPoly::one() }
    }

    /// `p^k`.
    pub fn pi_pow(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            PiScalar::one()
        } else {
            PiScalar::pi()
        }
    }

    pub fn q_pow(e: i64) -> Self {
        PiScalar { even: LaurentPoly::q_pow(e), odd: LaurentPoly::zero() }
    }

    /// `(p*q)^e = p^e q^e`, defined for all integers `e` since `p*q` is a
    /// unit.
    pub fn pi_q_pow(e: i64) -> Self {
        PiScalar::pi_pow(e).mul(&PiScalar::q_pow(e))
    }

    pub fn from_int(n: i64) -> Self {
        PiScalar { even: LaurentPoly::from_int(n), odd: LaurentPoly::zero() }
    }

    pub fn from_parts(even: LaurentPoly, odd: LaurentPoly) -> Self {
        PiScalar { even, odd }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.even.is_one() && self.odd.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        PiScalar { even: self.even.add(&other.even), odd: self.odd.add(&other.odd) }
    }

    pub fn neg(&self) -> Self {
        PiScalar { even: self.even.neg(), odd: self.odd.neg() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product with the reduction `p^2 -> 1`:
    /// `(f1 + g1 p)(f2 + g2 p) = (f1 f2 + g1 g2) + (f1 g2 + g1 f2) p`.
    pub fn mul(&self, other: &Self) -> Self {
        PiScalar {
            even: self.even.mul(&other.even).add(&self.odd.mul(&other.odd)),
            odd: self.even.mul(&other.odd).add(&self.odd.mul(&other.even)),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = PiScalar::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// The ring homomorphism `p -> sign`.
    pub fn specialize(&self, sign: Sign) -> LaurentPoly {
        match sign {
            Sign::Plus => self.even.add(&self.odd),
            Sign::Minus => self.even.sub(&self.odd),
        }
    }

    /// The twisted bar involution `q -> p q^-1`, `p -> p`; on monomials
    /// `q^n -> p^n q^-n`.
    pub fn bar(&self) -> Self {
        let mut out = PiScalar::zero();
        for (e, c) in self.even.iter() {
            if e.rem_euclid(2) == 0 {
                out.even.add_term(-e, c);
            } else {
                out.odd.add_term(-e, c);
            }
        }
        for (e, c) in self.odd.iter() {
            // p * bar(q^e) = p^{e+1} q^{-e}
            if (e + 1).rem_euclid(2) == 0 {
                out.even.add_term(-e, c);
            } else {
                out.odd.add_term(-e, c);
            }
        }
        out
    }

    /// Exact division certified through both specializations: succeeds iff
    /// `self = quot * divisor` for some element of the integral ring.
    pub fn exact_div(&self, divisor: &Self) -> Option<PiScalar> {
        let qp = self.specialize(Sign::Plus).exact_div(&divisor.specialize(Sign::Plus))?;
        let qm = self.specialize(Sign::Minus).exact_div(&divisor.specialize(Sign::Minus))?;
        // even = (qp + qm)/2, odd = (qp - qm)/2
        let two = LaurentPoly::from_int(2);
        let even = qp.add(&qm).exact_div(&two)?;
        let odd = qp.sub(&qm).exact_div(&two)?;
        let out = PiScalar { even, odd };
        if out.mul(divisor) == *self {
            Some(out)
        } else {
            None
        }
    }

    /// Membership in `N[q, q^-1, p]`: all coefficients of both parts
    /// nonnegative.
    pub fn is_positive_cone(&self) -> bool {
        self.even.coeffs_nonnegative() && self.odd.coeffs_nonnegative()
    }

    /// Membership in `q^-1 Z[q^-1, p]`: every `q`-exponent strictly
    /// negative in both parts.
    pub fn is_q_minus_lattice(&self) -> bool {
        self.even.exponents_negative() && self.odd.exponents_negative()
    }

    /// The component supported on strictly negative `q`-exponents.
    pub fn negative_exponent_part(&self) -> Self {
        PiScalar {
            even: self.even.negative_exponent_part(),
            odd: self.odd.negative_exponent_part(),
        }
    }

    /// Coefficient of `q^0` in both parts, as a pair (even, odd).
    pub fn constant_coeffs(&self) -> (BigInt, BigInt) {
        (self.even.coeff(0), self.odd.coeff(0))
    }
}

/// The super quantum integer `[n] = ((pq)^n - q^-n)/(pq - q^-1)`, computed
/// division-free: `[n] = sum_{i=0}^{n-1} p^{n-1-i} q^{n-1-2i}` for `n >= 0`
/// and `[-n] = -p^n [n]`.
pub fn qint(n: i64) -> PiScalar {
    if n < 0 {
        return PiScalar::pi_pow(-n).mul(&qint(-n)).neg();
    }
    let mut out = PiScalar::zero();
    for i in 0..n {
        let e = n - 1 - 2 * i;
        if (n - 1 - i).rem_euclid(2) == 0 {
            out.even.add_term(e, &BigInt::one());
        } else {
            out.odd.add_term(e, &BigInt::one());
        }
    }
    out
}

/// `[a]! = [1][2]...[a]`.
pub fn qfact(a: i64) -> PiScalar {
    assert!(a >= 0, "factorial of a negative index");
    let mut out = PiScalar::one();
    for i in 1..=a {
        out = out.mul(&qint(i));
    }
    out
}

/// The super quantum binomial, `prod_{i=1}^{a} [n+i-a] / [a]!`, certified
/// integral by exact division.
pub fn qbinom(n: i64, a: i64) -> PiScalar {
    assert!(a >= 0, "binomial with a negative lower index");
    let mut num = PiScalar::one();
    for i in 1..=a {
        num = num.mul(&qint(n + i - a));
    }
    num.exact_div(&qfact(a))
        .expect("quantum binomial is integral; inexact division means a broken invariant")
}

/// Quasi-R-matrix coefficient
/// `a_n = (-1)^n [n]! (pq)^{-binom(n,2)} (pq - q^-1)^n`.
pub fn theta_coeff(n: i64) -> PiScalar {
    assert!(n >= 0);
    let choose2 = n * (n - 1) / 2;
    let mut out = qfact(n);
    if n % 2 == 1 {
        out = out.neg();
    }
    out = out.mul(&PiScalar::pi_q_pow(-choose2));
    out.mul(&pq_minus_qinv().pow(n as u32))
}

/// `pq - q^-1`, the denominator of the super quantum integers.
pub fn pq_minus_qinv() -> PiScalar {
    PiScalar {
        even: LaurentPoly::q_pow(-1).neg(),
        odd: LaurentPoly::q_pow(1),
    }
}

/// Cones recognized by [`cone_membership`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cone {
    /// `N[q, q^-1, p]`.
    Positive,
    /// `q^-1 Z[q^-1, p]`.
    QMinusLattice,
}

pub fn cone_membership(x: &PiScalar, cone: Cone) -> bool {
    match cone {
        Cone::Positive => x.is_positive_cone(),
        Cone::QMinusLattice => x.is_q_minus_lattice(),
    }
}

impl fmt::Display for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_scalar(self))
    }
}
