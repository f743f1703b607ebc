//! Natively specialized reference pipeline.
//!
//! Everything here recomputes the modified-algebra canonical basis from
//! scratch in the specialized ring `Z[q, q^-1]` with `p` already set to
//! `+1` (quantum sl(2)) or `-1` (the superalgebra), using only plain
//! Laurent arithmetic. Nothing is obtained by specializing covering-level
//! results, so this module serves as an independent oracle for the
//! specialization functors.

use std::collections::BTreeMap;

use crate::pi_ring::{LaurentPoly, Sign};
use crate::udot::{CbIndex, UdotMonomial};

fn sign_pow(sign: Sign, k: i64) -> i64 {
    match sign.pow(k) {
        Sign::Plus => 1,
        Sign::Minus => -1,
    }
}

/// The specialized quantum integer
/// `[n] = sum_{i=0}^{n-1} sign^{n-1-i} q^{n-1-2i}`, with
/// `[-n] = -sign^n [n]`.
pub fn qint_native(n: i64, sign: Sign) -> LaurentPoly {
    if n < 0 {
        let mut out = qint_native(-n, sign).neg();
        if sign_pow(sign, n) < 0 {
            out = out.neg();
        }
        return out;
    }
    let mut out = LaurentPoly::zero();
    for i in 0..n {
        let c = num_bigint::BigInt::from(sign_pow(sign, n - 1 - i));
        out.add_term(n - 1 - 2 * i, &c);
    }
    out
}

pub fn qfact_native(a: i64, sign: Sign) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for i in 1..=a {
        out = out.mul(&qint_native(i, sign));
    }
    out
}

/// Specialized quantum binomial via exact Laurent division.
pub fn qbinom_native(n: i64, a: i64, sign: Sign) -> LaurentPoly {
    assert!(a >= 0);
    let mut num = LaurentPoly::one();
    for i in 1..=a {
        num = num.mul(&qint_native(n + i - a, sign));
    }
    num.exact_div(&qfact_native(a, sign))
        .expect("specialized quantum binomial is integral")
}

/// A specialized modified-algebra element in the standard basis
/// `E^(a) 1_n F^(b)`.
pub type SpecializedUdot = BTreeMap<UdotMonomial, LaurentPoly>;

/// The rewrite `F^(s) 1_n E^(r)` into the standard basis, natively at the
/// given sign: the covering-level identity with every `p` replaced by the
/// sign, including the sector twist `sign^{eps i}` with `eps = n mod 2`.
pub fn fe_to_ef_native(s: i64, n: i64, r: i64, sign: Sign) -> SpecializedUdot {
    let eps = n.rem_euclid(2);
    let mut out = SpecializedUdot::new();
    for i in 0..=r.min(s) {
        let sgn = sign_pow(sign, r * s + i * (i - 1) / 2 + eps * i);
        let mut coeff = qbinom_native(r + s - n, i, sign);
        if sgn < 0 {
            coeff = coeff.neg();
        }
        if coeff.is_zero() {
            continue;
        }
        let m = UdotMonomial::new(r - i, n - 2 * s - 2 * r + 2 * i, s - i);
        let entry = out.entry(m).or_insert_with(LaurentPoly::zero);
        *entry = entry.add(&coeff);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The canonical basis element for `(a, b, k)`, natively specialized:
/// `E^(a) 1_{k-2b} F^(b)` when `k <= b - a`, and
/// `sign^{ab} F^(b) 1_{k+2a} E^(a)` rewritten into the standard basis when
/// `k >= b - a`.
pub fn cb_element_native(idx: CbIndex, sign: Sign) -> SpecializedUdot {
    let CbIndex { a, b, k } = idx;
    if k <= b - a {
        let mut out = SpecializedUdot::new();
        out.insert(UdotMonomial::new(a, k - 2 * b, b), LaurentPoly::one());
        return out;
    }
    let n = k + 2 * a;
    let mut out = fe_to_ef_native(b, n, a, sign);
    if sign_pow(sign, a * b) < 0 {
        for c in out.values_mut() {
            *c = c.neg();
        }
    }
    out
}

/// The full native canonical-basis table on a box.
pub fn cb_table_native(max_ab: i64, max_k: i64, sign: Sign) -> BTreeMap<CbIndex, SpecializedUdot> {
    let mut out = BTreeMap::new();
    for a in 0..=max_ab {
        for b in 0..=max_ab {
            for k in -max_k..=max_k {
                let idx = CbIndex { a, b, k };
                out.insert(idx, cb_element_native(idx, sign));
            }
        }
    }
    out
}
