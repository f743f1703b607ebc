//! Rational functions in `q` over the rationals, as reduced fractions of
//! integer polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::poly::IntPoly;
use crate::error::Error;

/// An element of `Q(q)`. Canonical form: `num/den` with no common polynomial
/// factor over `Q`, coprime integer contents, and `den` with positive leading
/// coefficient. Equality of values is then equality of representations.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: IntPoly::one(), den: IntPoly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    /// Build and reduce `num/den`. Panics on a zero denominator.
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides numerator");
        let mut den = den.exact_div(&g).expect("gcd divides denominator");
        // den integer-primitive, positive leading; rational content stays in num.
        let mut c = den.content();
        if den.leading().is_negative() {
            c = -c;
        }
        den = IntPoly::from_coeffs(den.coeffs().iter().map(|x| x / &c).collect());
        // The numerator keeps a reduced rational scale: divide num by what it
        // shares with c, then multiply den by the leftover.
        let nc = num.content();
        let g2 = nc.gcd(&c).max(BigInt::one());
        let c_rest = &c / &g2;
        num = IntPoly::from_coeffs(num.coeffs().iter().map(|x| x / &g2).collect());
        if !c_rest.is_one() {
            den = den.mul_scalar(&c_rest.abs());
            if c_rest.is_negative() {
                num = num.neg();
            }
        }
        RatFunc { num, den }
    }

    pub fn from_laurent(x: &LaurentPoly) -> Self {
        if x.is_zero() {
            return RatFunc::zero();
        }
        let (min, _) = x.exponent_range().unwrap();
        let shift = if min < 0 { -min } else { 0 };
        let (_, max) = x.exponent_range().unwrap();
        let mut coeffs = vec![BigInt::zero(); (max + shift + 1) as usize];
        for (e, c) in x.iter() {
            coeffs[(e + shift) as usize] = c.clone();
        }
        RatFunc::new(IntPoly::from_coeffs(coeffs), IntPoly::monomial(BigInt::one(), shift as usize))
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc { num: IntPoly::monomial(BigInt::from(n), 0), den: IntPoly::one() }
    }

    /// Back to a Laurent polynomial when the denominator is a power of `q`.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let v = self.den.valuation();
        if self.den.degree() != v as i64 || !self.den.leading().is_one() {
            return None;
        }
        let mut out = LaurentPoly::zero();
        for (i, c) in self.num.coeffs().iter().enumerate() {
            out.add_term(i as i64 - v as i64, c);
        }
        Some(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::new(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Substitute `q -> -q`.
    pub fn substitute_neg_q(&self) -> Self {
        RatFunc::new(self.num.substitute_neg_q(), self.den.substitute_neg_q())
    }
}

impl std::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let show = |p: &IntPoly| -> String {
            let mut l = LaurentPoly::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                l.add_term(i as i64, c);
            }
            format!("{l}")
        };
        if self.den.is_one() {
            write!(f, "{}", show(&self.num))
        } else {
            write!(f, "({})/({})", show(&self.num), show(&self.den))
        }
    }
}
