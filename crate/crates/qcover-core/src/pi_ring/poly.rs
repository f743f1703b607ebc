//! Dense integer polynomials in `q`, used as numerators and denominators of
//! rational functions. Kept separate from [`LaurentPoly`](super::LaurentPoly)
//! because gcd and fraction reduction want ordinary polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An element of `Z[q]` as a dense coefficient vector, lowest degree first,
/// with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Multiplicity of the root q = 0, i.e. the lowest nonzero degree.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// gcd of all coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_normalized(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Pseudo-remainder of `self` by `other` (leading-coefficient scaled).
    fn pseudo_rem(&self, other: &Self) -> Self {
        let d = other.degree();
        let lead = other.leading();
        let mut rem = self.clone();
        while !rem.is_zero() && rem.degree() >= d {
            let shift = (rem.degree() - d) as usize;
            let rl = rem.leading();
            rem = rem.mul_scalar(&lead).sub(&other.mul_scalar(&rl).shift(shift));
        }
        rem
    }

    fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// gcd over `Q[q]`, returned integer-primitive with positive leading
    /// coefficient. Primitive Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_normalized();
        let mut b = other.primitive_normalized();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_normalized();
            a = b;
            b = r;
        }
        a.primitive_normalized()
    }

    /// Exact division over `Q[q]`: `None` if the division leaves a
    /// remainder, otherwise the quotient scaled back to have integer
    /// coefficients times `1/denom_scale`. Only used for divisions that are
    /// known exact after gcd reduction, so the result is demanded integral.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        // Long division over Q, tracked as integer coefficients with a
        // common denominator equal to a power of the divisor's leading
        // coefficient.
        let d = other.degree();
        let lead = other.leading();
        let mut rem = self.clone();
        let mut quot_terms: Vec<(usize, BigInt, u32)> = vec![]; // (deg, num, lead_power)
        let mut power = 0u32;
        while !rem.is_zero() && rem.degree() >= d {
            let shift = (rem.degree() - d) as usize;
            let rl = rem.leading();
            rem = rem.mul_scalar(&lead).sub(&other.mul_scalar(&rl).shift(shift));
            power += 1;
            quot_terms.push((shift, rl, power));
        }
        if !rem.is_zero() {
            return None;
        }
        // quotient = sum rl * lead^{power - p} / lead^{power}
        let mut num = IntPoly::zero();
        for (deg, rl, p) in &quot_terms {
            let scale = lead.pow(power - p);
            num = num.add(&IntPoly::monomial(rl * scale, *deg));
        }
        let den = lead.pow(power);
        let mut out = Vec::with_capacity(num.coeffs.len());
        for c in &num.coeffs {
            let (q, r) = c.div_rem(&den);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(IntPoly::from_coeffs(out))
    }

    /// Evaluate the sign-alternating substitution `q -> -q`.
    pub fn substitute_neg_q(&self) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }
}
