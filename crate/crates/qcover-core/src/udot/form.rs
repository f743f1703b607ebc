//! The contravariant bilinear form on the modified algebra.
//!
//! Computed by its defining properties: distinct blocks are orthogonal;
//! `(u x, y) = (x, rho(u) y)` strips divided powers off the first argument;
//! two pure lowering monomials at the same idempotent pair to
//! `p^a q^{C(a+1,2)} (pq - q^-1)^{-a} ([a]!)^{-1}`; symmetry swaps the
//! arguments when the first one still carries no raising power but the
//! second does. Each strip removes raising degree and adds none, so the
//! recursion terminates.

use super::{bimodule_left, UdotElement, UdotMonomial};
use crate::pi_ring::{pq_minus_qinv, qfact, PiRational, PiScalar};
use crate::upi::{apply_morphism, Morphism, PbwElement};

/// `(theta^(a), theta^(a))` on the half algebra:
/// `p^a q^{C(a+1,2)} (pq - q^-1)^{-a} ([a]!)^{-1}`.
pub fn lowering_pairing(a: i64) -> PiRational {
    let num = PiScalar::pi_pow(a).mul(&PiScalar::q_pow(a * (a + 1) / 2));
    let den = pq_minus_qinv().pow(a as u32).mul(&qfact(a));
    PiRational::from(num).mul(&PiRational::from(den).invert().expect("denominator invertible"))
}

pub fn bilinear_form(x: &UdotElement, y: &UdotElement) -> PiRational {
    let mut out = PiRational::zero();
    for (mx, cx) in x.terms() {
        out = out.add(&cx.mul(&form_against(mx, y)));
    }
    out
}

/// `(mx, y)` for a single standard monomial against an element.
fn form_against(mx: &UdotMonomial, y: &UdotElement) -> PiRational {
    // block orthogonality
    let mut blocked = UdotElement::zero();
    for (my, cy) in y.terms() {
        if my.left_weight() == mx.left_weight() && my.right_weight() == mx.right_weight() {
            blocked.add_term(*my, cy.clone());
        }
    }
    if blocked.is_zero() {
        return PiRational::zero();
    }
    if mx.a > 0 {
        // (E^(a) x', y) = (x', rho(E^(a)) y)
        let rho_e = apply_morphism(Morphism::Rho, &PbwElement::e_divided(mx.sector(), mx.a));
        let stripped = UdotMonomial::new(0, mx.n, mx.b);
        return form_against(&stripped, &bimodule_left(&rho_e, &blocked));
    }
    // first argument is a pure lowering monomial; split the second
    let mut out = PiRational::zero();
    for (my, cy) in blocked.terms() {
        if my.a == 0 {
            // both pure lowering at the same idempotent, hence my.b == mx.b
            debug_assert_eq!(my.b, mx.b);
            out = out.add(&cy.mul(&lowering_pairing(mx.b)));
        } else {
            // symmetry swap, then the raising power gets stripped
            out = out.add(&cy.mul(&form_against(my, &UdotElement::monomial(*mx))));
        }
    }
    out
}
