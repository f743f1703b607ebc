//! The quasi-R-matrix as an operator on tensor modules, and the antilinear
//! involution built from it.

use super::{ModuleVector, WeightModule};
use crate::pi_ring::{theta_coeff, PiRational};
use crate::upi::PbwMonomial;

/// Summation bound for the operator: beyond the smaller factor dimension,
/// `F^(n) (x) E^(n)` annihilates everything. The bound term itself is
/// asserted zero by the callers below.
pub fn theta_truncation_bound(module: &WeightModule) -> i64 {
    let (l, r) = module.tensor_factors().expect("quasi-R-matrix acts on tensor modules");
    l.dim.min(r.dim) as i64
}

fn theta_sum(module: &WeightModule, v: &ModuleVector, bar_coeffs: bool) -> ModuleVector {
    let (left, right) = module.tensor_factors().expect("quasi-R-matrix acts on tensor modules");
    let bound = theta_truncation_bound(module);
    let mut out = ModuleVector::zero();
    for n in 0..=bound {
        let mut coeff: PiRational = theta_coeff(n).into();
        if bar_coeffs {
            coeff = coeff.bar();
        }
        // Theta^n = a_n F^(n) (x) E^(n), summed over the sector pairs that
        // act; on fixed factors only one pair survives, so the factor
        // sectors can be read off directly.
        let m1 = PbwMonomial::new(left.sector, n, 0, 0);
        let m2 = PbwMonomial::new(right.sector, 0, 0, n);
        let mut term = crate::upi::TensorElement::zero();
        term.add_term(m1, m2, coeff);
        let contribution = module.act_tensor_element(&term, v);
        if n == bound {
            assert!(
                contribution.is_zero(),
                "truncation bound for the quasi-R-matrix is too small"
            );
        }
        out = out.add(&contribution);
    }
    out
}

/// Apply `Theta = sum_n a_n F^(n) (x) E^(n)` to a vector of a tensor
/// module; the sum is finite because both generators act nilpotently.
pub fn theta_apply(module: &WeightModule, v: &ModuleVector) -> ModuleVector {
    theta_sum(module, v, false)
}

/// Apply `bar(Theta)` (coefficients barred, monomials fixed).
pub fn theta_bar_apply(module: &WeightModule, v: &ModuleVector) -> ModuleVector {
    theta_sum(module, v, true)
}

/// The antilinear involution `Psi = Theta o (bar x bar)`, where the
/// factor-wise bar fixes each standard basis vector and bars coefficients.
pub fn psi_apply(module: &WeightModule, v: &ModuleVector) -> ModuleVector {
    theta_apply(module, &v.bar())
}
