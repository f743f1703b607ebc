//! The fraction-level coefficient ring `Q(q)[p]/(p^2 - 1)`.
//!
//! This ring has zero divisors (`(1+p)(1-p) = 0`), so there is no fraction
//! field; invertibility of `f + g*p` is equivalent to both specializations
//! `p -> +1` and `p -> -1` being nonzero, i.e. `f^2 - g^2 != 0`.

use std::fmt;

use super::laurent::LaurentPoly;
use super::poly::IntPoly;
use super::ratfunc::RatFunc;
use super::scalar::PiScalar;
use super::Sign;
use crate::error::Error;

/// An element `f + g*p` of `Q(q)[p]/(p^2-1)`, each part a reduced rational
/// function.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PiRational {
    pub even: RatFunc,
    pub odd: RatFunc,
}

impl PiRational {
    pub fn zero() -> Self {
        PiRational { even: RatFunc::zero(), odd: RatFunc::zero() }
    }

    pub fn one() -> Self {
        PiRational { even: RatFunc::one(), odd: RatFunc::zero() }
    }

    pub fn pi() -> Self {
        PiRational { even: RatFunc::zero(), odd: RatFunc::one() }
    }

    pub fn from_int(n: i64) -> Self {
        PiRational { even: RatFunc::from_int(n), odd: RatFunc::zero() }
    }

    pub fn q_pow(e: i64) -> Self {
        PiScalar::q_pow(e).into()
    }

    pub fn pi_pow(k: i64) -> Self {
        PiScalar::pi_pow(k).into()
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.even.is_one() && self.odd.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        PiRational { even: self.even.add(&other.even), odd: self.odd.add(&other.odd) }
    }

    pub fn neg(&self) -> Self {
        PiRational { even: self.even.neg(), odd: self.odd.neg() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        PiRational {
            even: self.even.mul(&other.even).add(&self.odd.mul(&other.odd)),
            odd: self.even.mul(&other.odd).add(&self.odd.mul(&other.even)),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = PiRational::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// `(f + g p)^-1 = (f - g p)/(f^2 - g^2)`, failing on zero divisors.
    pub fn invert(&self) -> Result<Self, Error> {
        let norm = self.even.mul(&self.even).sub(&self.odd.mul(&self.odd));
        if norm.is_zero() {
            let vanishing_at = if self.specialize(Sign::Plus).is_zero() { 1 } else { -1 };
            return Err(Error::ZeroDivisor { vanishing_at });
        }
        let inv = norm.inverse().expect("norm checked nonzero");
        Ok(PiRational { even: self.even.mul(&inv), odd: self.odd.neg().mul(&inv) })
    }

    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.mul(&other.invert()?))
    }

    /// The ring homomorphism `p -> sign`, landing in `Q(q)`.
    pub fn specialize(&self, sign: Sign) -> RatFunc {
        match sign {
            Sign::Plus => self.even.add(&self.odd),
            Sign::Minus => self.even.sub(&self.odd),
        }
    }

    /// The twisted bar involution `q -> p q^-1` extended to fractions.
    pub fn bar(&self) -> Self {
        let be = bar_ratfunc(&self.even);
        let bo = bar_ratfunc(&self.odd).mul(&PiRational::pi());
        be.add(&bo)
    }

    /// Truncation back into the integral ring when every denominator is a
    /// power of `q`.
    pub fn to_scalar(&self) -> Option<PiScalar> {
        Some(PiScalar::from_parts(self.even.to_laurent()?, self.odd.to_laurent()?))
    }

    /// Common-denominator form `(numerator, denominator)` with the numerator
    /// in the integral ring and the denominator an integer polynomial with
    /// positive leading coefficient; contents reduced.
    pub fn as_fraction(&self) -> (PiScalar, IntPoly) {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::One;

        let g = self.even.den().gcd(self.odd.den());
        let den = self.even.den().mul(&self.odd.den().exact_div(&g).expect("gcd divides"));
        let me = self.even.num().mul(&den.exact_div(self.even.den()).expect("lcm divides"));
        let mo = self.odd.num().mul(&den.exact_div(self.odd.den()).expect("lcm divides"));
        let joint = me.content().gcd(&mo.content()).gcd(&den.content()).max(BigInt::one());
        let scale_down = |p: &IntPoly| {
            IntPoly::from_coeffs(p.coeffs().iter().map(|c| c / &joint).collect())
        };
        let den = scale_down(&den);
        // q is a unit: move any pure q-power out of the denominator.
        let v = den.valuation() as i64;
        let den = IntPoly::from_coeffs(den.coeffs()[v as usize..].to_vec());
        let num = PiScalar::from_parts(
            poly_to_laurent(&scale_down(&me)).mul_monomial(&BigInt::one(), -v),
            poly_to_laurent(&scale_down(&mo)).mul_monomial(&BigInt::one(), -v),
        );
        (num, den)
    }
}

fn poly_to_laurent(p: &IntPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        out.add_term(i as i64, c);
    }
    out
}

/// Apply `q -> p q^-1` to a single rational function, producing a
/// `p`-twisted fraction.
fn bar_ratfunc(f: &RatFunc) -> PiRational {
    let num: PiRational = laurent_bar(f.num()).into();
    let den: PiRational = laurent_bar(f.den()).into();
    num.mul(&den.invert().expect("bar of a nonzero polynomial stays invertible"))
}

/// `q -> p q^-1` on an integer polynomial, as an integral scalar.
fn laurent_bar(p: &IntPoly) -> PiScalar {
    let mut out = PiScalar::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        let e = i as i64;
        if e.rem_euclid(2) == 0 {
            out.even.add_term(-e, c);
        } else {
            out.odd.add_term(-e, c);
        }
    }
    out
}

impl From<PiScalar> for PiRational {
    fn from(x: PiScalar) -> Self {
        PiRational {
            even: RatFunc::from_laurent(&x.even),
            odd: RatFunc::from_laurent(&x.odd),
        }
    }
}

impl From<&PiScalar> for PiRational {
    fn from(x: &PiScalar) -> Self {
        x.clone().into()
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_rational(self))
    }
}

#[cfg(test)]
mod tests {
    use super::super::scalar::{pq_minus_qinv, qint};
    use super::*;

    #[test]
    fn embedding_roundtrip() {
        let x = qint(5).mul(&PiScalar::pi()).add(&PiScalar::q_pow(-3));
        let r: PiRational = (&x).into();
        assert_eq!(r.to_scalar().unwrap(), x);
    }

    #[test]
    fn zero_divisor_detected() {
        // 1 + p vanishes at p -> -1
        let x = PiRational::one().add(&PiRational::pi());
        match x.invert() {
            Err(Error::ZeroDivisor { vanishing_at }) => assert_eq!(vanishing_at, -1),
            other => panic!("expected zero divisor, got {other:?}"),
        }
        // (1 + pq)(1 - pq) = 1 - q^2
        let a = PiRational::one().add(&PiRational::pi().mul(&PiRational::q_pow(1)));
        let b = PiRational::one().sub(&PiRational::pi().mul(&PiRational::q_pow(1)));
        let expect: PiRational = PiScalar::one().sub(&PiScalar::q_pow(2)).into();
        assert_eq!(a.mul(&b), expect);
    }

    #[test]
    fn invert_pq_minus_qinv() {
        // (pq - q^-1)^-1 = (pq + q^-1)/(q^2 - q^-2)
        let x: PiRational = pq_minus_qinv().into();
        let inv = x.invert().unwrap();
        let num: PiRational = qint(2).into();
        let den: PiRational = PiScalar::q_pow(2).sub(&PiScalar::q_pow(-2)).into();
        assert_eq!(inv, num.div(&den).unwrap());
        assert_eq!(inv.mul(&x), PiRational::one());
    }

    #[test]
    fn bar_is_an_involution_on_fractions() {
        let x: PiRational = qint(3).into();
        let y = x.div(&pq_minus_qinv().into()).unwrap().add(&PiRational::pi());
        assert_eq!(y.bar().bar(), y);
        // bar commutes with the embedding
        let z = qint(4).mul(&PiScalar::q_pow(3));
        let zr: PiRational = (&z).into();
        assert_eq!(zr.bar().to_scalar().unwrap(), z.bar());
    }

    #[test]
    fn specialization_is_a_homomorphism() {
        let a: PiRational = qint(3).into();
        let b = PiRational::pi().mul(&PiRational::q_pow(-2)).add(&PiRational::from_int(7));
        for sign in [Sign::Plus, Sign::Minus] {
            assert_eq!(
                a.mul(&b).specialize(sign),
                a.specialize(sign).mul(&b.specialize(sign))
            );
        }
    }
}
