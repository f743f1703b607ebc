//! Sparse integer Laurent polynomials in `q`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element of `Z[q, q^-1]`, stored as a sparse exponent -> coefficient
/// table with no zero entries.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(BigInt::one(), 0)
    }

    /// `c * q^e`, dropping the term when `c = 0`.
    pub fn monomial(c: BigInt, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn q_pow(e: i64) -> Self {
        LaurentPoly::monomial(BigInt::one(), e)
    }

    pub fn from_int(n: i64) -> Self {
        LaurentPoly::monomial(BigInt::from(n), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Smallest and largest exponent with a nonzero coefficient.
    pub fn exponent_range(&self) -> Option<(i64, i64)> {
        let min = *self.terms.keys().next()?;
        let max = *self.terms.keys().next_back()?;
        Some((min, max))
    }

    pub fn add_term(&mut self, e: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(*e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in other.iter() {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    pub fn mul_monomial(&self, c: &BigInt, e: i64) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e0, c0)| (e0 + e, c0 * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = LaurentPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitute `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Exact division, `None` when the divisor does not divide exactly
    /// over `Z[q, q^-1]`. Both operands are shifted so the division runs as
    /// ordinary polynomial division; exactness is unaffected because `q` is
    /// a unit.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (smin, _) = self.exponent_range().unwrap();
        let (dmin, dmax) = divisor.exponent_range().unwrap();
        let ddeg = dmax - dmin;
        let dlead = divisor.coeff(dmax);
        let mut rem = self.mul_monomial(&BigInt::one(), -smin);
        let mut quot = LaurentPoly::zero();
        while let Some((_, rmax)) = rem.exponent_range() {
            if rmax < ddeg {
                return None;
            }
            let rlead = rem.coeff(rmax);
            let (qc, qr) = num_integer::Integer::div_rem(&rlead, &dlead);
            if qr.is_zero() {
                let shift = rmax - ddeg;
                quot.add_term(shift, &qc);
                rem = rem.sub(&divisor.mul_monomial(&qc, shift - dmin));
            } else {
                return None;
            }
        }
        Some(quot.mul_monomial(&BigInt::one(), smin - dmin))
    }

    /// All coefficients nonnegative (membership in `N[q, q^-1]`).
    pub fn coeffs_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// All exponents strictly negative (membership in `q^-1 Z[q^-1]`).
    pub fn exponents_negative(&self) -> bool {
        self.terms.keys().all(|e| *e < 0)
    }

    /// The part supported on strictly negative exponents.
    pub fn negative_exponent_part(&self) -> Self {
        LaurentPoly {
            terms: self.terms.range(..0).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Plain rendering, descending exponent: `q^2 + -3 + q^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (*e, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{c}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::q_pow(1)
    }

    #[test]
    fn arithmetic_basics() {
        let x = q().add(&LaurentPoly::q_pow(-1));
        let y = q().sub(&LaurentPoly::q_pow(-1));
        assert_eq!(x.mul(&y), LaurentPoly::q_pow(2).sub(&LaurentPoly::q_pow(-2)));
        assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn exact_division() {
        let num = LaurentPoly::q_pow(2).sub(&LaurentPoly::q_pow(-2));
        let den = q().add(&LaurentPoly::q_pow(-1));
        let quot = num.exact_div(&den).unwrap();
        assert_eq!(quot, q().sub(&LaurentPoly::q_pow(-1)));
        // q^2 + 1 + q^-2 is not divisible by q + q^-1
        let odd_sum = LaurentPoly::q_pow(2).add(&LaurentPoly::one()).add(&LaurentPoly::q_pow(-2));
        assert!(odd_sum.exact_div(&den).is_none());
        assert!(num.exact_div(&q().add(&LaurentPoly::from_int(2))).is_none());
    }

    #[test]
    fn cone_tests() {
        let x = q().add(&LaurentPoly::q_pow(-1));
        assert!(x.coeffs_nonnegative());
        assert!(!x.exponents_negative());
        assert!(LaurentPoly::q_pow(-3).exponents_negative());
        assert!(!x.neg().coeffs_nonnegative());
    }
}
