//! The bar involution and the three linear (anti-)automorphisms, applied in
//! PBW coordinates and re-normalized.

use super::element::{divided_power_of, Morphism, PbwElement, PbwMonomial};
use crate::pi_ring::{PiRational, PiScalar};

pub fn apply_morphism(name: Morphism, x: &PbwElement) -> PbwElement {
    let mut out = PbwElement::zero();
    for (m, c) in x.terms() {
        let image = match name {
            Morphism::Psi => psi_monomial(m),
            Morphism::Omega => omega_monomial(m),
            Morphism::Tau => tau_monomial(m),
            Morphism::Rho => rho_monomial(m),
        };
        let coeff = if name == Morphism::Psi { c.bar() } else { c.clone() };
        out = out.add(&image.scale(&coeff));
    }
    out
}

/// `psi` is an algebra automorphism fixing `E`, `F` and their divided
/// powers, with `psi(K^b) = p^{eps b} K^-b`; coefficients are barred by the
/// caller.
fn psi_monomial(m: &PbwMonomial) -> PbwElement {
    let twist = PiScalar::pi_pow(m.sector.parity() * m.k);
    PbwElement::monomial(PbwMonomial::new(m.sector, m.f, -m.k, m.e)).scale_scalar(&twist)
}

/// `omega(F^(a) K^b E^(c)) = p^{a(1-eps)} E^(a) K^-b F^(c)`, re-normalized.
fn omega_monomial(m: &PbwMonomial) -> PbwElement {
    let s = m.sector;
    let twist = PiRational::pi_pow(m.f * (1 - s.parity()));
    PbwElement::e_divided(s, m.f)
        .mul(&PbwElement::generator_k(s, -m.k))
        .mul(&PbwElement::f_divided(s, m.e))
        .scale(&twist)
}

/// `tau` reverses products: `tau(F^(a) K^b E^(c)) = tau(E)^(c) K^-b F^(a)`
/// with `tau(E) = p^{1-eps} E`.
fn tau_monomial(m: &PbwMonomial) -> PbwElement {
    let s = m.sector;
    let twist = PiRational::pi_pow(m.e * (1 - s.parity()));
    PbwElement::e_divided(s, m.e)
        .mul(&PbwElement::generator_k(s, -m.k))
        .mul(&PbwElement::f_divided(s, m.f))
        .scale(&twist)
}

/// `rho` reverses products with `rho(E) = qKF`, `rho(F) = qK^-1 E`,
/// `rho(K) = K`.
fn rho_monomial(m: &PbwMonomial) -> PbwElement {
    let s = m.sector;
    let rho_e = PbwElement::monomial(PbwMonomial::new(s, 1, 1, 0)).scale(&PiRational::q_pow(-1));
    let rho_f = PbwElement::monomial(PbwMonomial::new(s, 0, -1, 1)).scale(&PiRational::q_pow(1));
    divided_power_of(&rho_e, m.e)
        .mul(&PbwElement::generator_k(s, m.k))
        .mul(&divided_power_of(&rho_f, m.f))
}
