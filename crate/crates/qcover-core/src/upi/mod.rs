//! The covering algebra as a computational object.
//!
//! The algebra is the direct sum of two sectors, each generated by
//! `E, F, K, K^-1` with the sector-dependent commutator relation
//! `EF - p FE = (p^eps K - K^-1)/(pq - q^-1)`. Elements are kept in PBW
//! normal form: linear combinations of divided-power monomials
//! `F^(a) K^b E^(c)` with a sector tag, coefficients in `Q(q)[p]/(p^2-1)`.
//! Divided powers are primitive basis data, which keeps the integral form
//! visible: an element is integral exactly when every coefficient embeds
//! back into `Z[q,q^-1][p]`.

mod element;
mod hopf;
mod morphism;
pub mod text;

pub use element::{Morphism, PbwElement, PbwMonomial, Sector};
pub use hopf::{antipode, coproduct, counit, multiply_contract, Tensor3Element, TensorElement};
pub use morphism::apply_morphism;

use crate::pi_ring::{pq_minus_qinv, PiRational, PiScalar};

/// `[K_eps; n] = ((pq)^n p^eps K - q^-n K^-1) / (pq - q^-1)` as a PBW
/// element of the given sector.
pub fn k_bracket(sector: Sector, n: i64) -> PbwElement {
    let denom_inv: PiRational = PiRational::from(pq_minus_qinv())
        .invert()
        .expect("pq - q^-1 is invertible");
    let k_coeff = PiRational::from(PiScalar::pi_pow(n + sector.parity()).mul(&PiScalar::q_pow(n)))
        .mul(&denom_inv);
    let kinv_coeff = PiRational::from(PiScalar::q_pow(-n)).mul(&denom_inv).neg();
    let mut out = PbwElement::zero();
    out.add_term(PbwMonomial::new(sector, 0, 1, 0), k_coeff);
    out.add_term(PbwMonomial::new(sector, 0, -1, 0), kinv_coeff);
    out
}

/// `binom(K_eps; n, a) = prod_{j=1}^a [K_eps; n+j-a] / [a]!`.
pub fn k_binom(sector: Sector, n: i64, a: i64) -> PbwElement {
    assert!(a >= 0, "binomial with negative lower index");
    let mut out = PbwElement::idempotent(sector);
    for j in 1..=a {
        out = out.mul(&k_bracket(sector, n + j - a));
    }
    out.scale_div_scalar(&crate::pi_ring::qfact(a))
}

/// The Casimir element
/// `C = p F E + (p^{1-eps} K q + K^-1 q^-1)/(pq - q^-1)^2`.
pub fn casimir(sector: Sector) -> PbwElement {
    let denom_sq_inv: PiRational = PiRational::from(pq_minus_qinv().pow(2))
        .invert()
        .expect("(pq - q^-1)^2 is invertible");
    let mut out = PbwElement::zero();
    out.add_term(PbwMonomial::new(sector, 1, 0, 1), PiRational::pi());
    out.add_term(
        PbwMonomial::new(sector, 0, 1, 0),
        PiRational::from(PiScalar::pi_pow(1 - sector.parity()).mul(&PiScalar::q_pow(1)))
            .mul(&denom_sq_inv),
    );
    out.add_term(
        PbwMonomial::new(sector, 0, -1, 0),
        PiRational::q_pow(-1).mul(&denom_sq_inv),
    );
    out
}

/// The same Casimir written through `EF`:
/// `C = E F + (p^eps K q^-1 + p K^-1 q)/(pq - q^-1)^2`. Normal-forming this
/// expression must reproduce [`casimir`]; exposed for the verification
/// suites.
pub fn casimir_ef_form(sector: Sector) -> PbwElement {
    let denom_sq_inv: PiRational = PiRational::from(pq_minus_qinv().pow(2))
        .invert()
        .expect("(pq - q^-1)^2 is invertible");
    let ef = PbwElement::generator_e(sector).mul(&PbwElement::generator_f(sector));
    let mut rest = PbwElement::zero();
    rest.add_term(
        PbwMonomial::new(sector, 0, 1, 0),
        PiRational::from(PiScalar::pi_pow(sector.parity()).mul(&PiScalar::q_pow(-1)))
            .mul(&denom_sq_inv),
    );
    rest.add_term(
        PbwMonomial::new(sector, 0, -1, 0),
        PiRational::pi().mul(&PiRational::q_pow(1)).mul(&denom_sq_inv),
    );
    ef.add(&rest)
}
