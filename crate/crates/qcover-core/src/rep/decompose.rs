//! Casimir separation and isotypic decomposition.

use super::{linalg, ModuleVector, WeightModule};
use crate::pi_ring::{pq_minus_qinv, PiRational, PiScalar, RatFunc, Sign};
use crate::upi::{casimir, PbwMonomial, Sector};

/// The scalar by which the squared Casimir acts on the highest-weight
/// module of weight `+-q^n` (independent of the sign):
/// `((pq)^{n+1} + q^{-(n+1)})^2 / (pq - q^-1)^4`, the square of the value
/// the Casimir takes on a parity-matched highest weight vector.
pub fn casimir_scalar(n: i64) -> PiRational {
    let num = PiScalar::pi_q_pow(n + 1).add(&PiScalar::q_pow(-(n + 1)));
    let denom: PiRational = PiRational::from(pq_minus_qinv().pow(4))
        .invert()
        .expect("denominator invertible");
    PiRational::from(num.mul(&num)).mul(&denom)
}

/// Matrix of the squared Casimir in the module basis.
pub fn casimir_square_matrix(module: &WeightModule) -> Vec<Vec<PiRational>> {
    let c = casimir(module.sector);
    let c2 = c.mul(&c);
    module.matrix_of(&c2)
}

/// Isotypic content of a finite-dimensional weight module, as
/// `(n, multiplicity)` pairs grouped by the squared-Casimir eigenvalue.
/// The eigenspace computation runs at both specializations over the
/// rational function field; the results must agree, and the kernels must
/// exhaust the module. A mismatch panics, because every finite-dimensional
/// weight module is a sum of the classified simples.
pub fn casimir_decompose(module: &WeightModule) -> Vec<(i64, usize)> {
    let c2 = casimir_square_matrix(module);
    let mut candidates: Vec<i64> = module
        .weights
        .iter()
        .copied()
        .filter(|w| *w >= 0)
        .collect();
    candidates.sort_unstable();
    candidates.dedup();
    candidates.reverse();
    let mut result: Option<Vec<(i64, usize)>> = None;
    for sign in [Sign::Plus, Sign::Minus] {
        let specialized: Vec<Vec<RatFunc>> =
            c2.iter().map(|row| row.iter().map(|x| x.specialize(sign)).collect()).collect();
        let mut found = Vec::new();
        let mut accounted = 0usize;
        for n in &candidates {
            let lambda = casimir_scalar(*n).specialize(sign);
            let mut shifted = specialized.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = row[i].sub(&lambda);
            }
            let dim = linalg::kernel_dimension(shifted);
            assert!(
                dim.is_multiple_of((n + 1) as usize),
                "squared-Casimir eigenspace is not a multiple of the simple dimension"
            );
            let mult = dim / ((n + 1) as usize);
            if mult > 0 {
                found.push((*n, mult));
                accounted += dim;
            }
        }
        assert!(
            accounted == module.dim,
            "squared-Casimir eigenvalues do not exhaust the module: got {accounted} of {}",
            module.dim
        );
        match &result {
            None => result = Some(found),
            Some(prev) => assert!(
                *prev == found,
                "specializations disagree on the isotypic content"
            ),
        }
    }
    result.expect("both specializations ran")
}

/// Independent oracle: multiplicity of `L(w)` equals the number of
/// independent singular vectors of weight `w`, computed as the kernel of
/// the raising generator restricted to each weight space (per
/// specialization; both must agree).
pub fn singular_vector_multiplicities(module: &WeightModule) -> Vec<(i64, usize)> {
    let e_matrix =
        module.matrix_of(&crate::upi::PbwElement::generator_e(module.sector));
    let mut weights: Vec<i64> =
        module.weights.iter().copied().filter(|w| *w >= 0).collect();
    weights.sort_unstable();
    weights.dedup();
    weights.reverse();
    let mut result: Option<Vec<(i64, usize)>> = None;
    for sign in [Sign::Plus, Sign::Minus] {
        let mut found = Vec::new();
        for w in &weights {
            let cols: Vec<usize> =
                (0..module.dim).filter(|i| module.weights[*i] == *w).collect();
            if cols.is_empty() {
                continue;
            }
            let restricted: Vec<Vec<RatFunc>> = (0..module.dim)
                .map(|i| cols.iter().map(|j| e_matrix[i][*j].specialize(sign)).collect())
                .collect();
            let dim = linalg::kernel_dimension(restricted);
            if dim > 0 {
                found.push((*w, dim));
            }
        }
        match &result {
            None => result = Some(found),
            Some(prev) => assert!(*prev == found, "specializations disagree on singular vectors"),
        }
    }
    result.expect("both specializations ran")
}

/// Degrees `t >= 1` with `E . F^(t) v = 0` in a truncated Verma module;
/// exact over the covering ring, no specialization involved.
pub fn verma_singular_degrees(sector: Sector, n: i64, sign: Sign, cutoff: i64) -> Vec<i64> {
    let module = WeightModule::verma_truncated(sector, n, sign, cutoff);
    let mut out = Vec::new();
    for t in 1..=cutoff {
        let image = module.act_monomial(
            &PbwMonomial::new(sector, 0, 0, 1),
            &ModuleVector::basis(t as usize),
        );
        if image.is_zero() {
            out.push(t);
        }
    }
    out
}
