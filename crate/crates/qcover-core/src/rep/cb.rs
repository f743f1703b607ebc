//! Canonical bases of the standard tensor modules.
//!
//! The module `^w L(s) (x) L(t)` has standard basis
//! `E^(a) eta (x) F^(b) nu`. For each index pair there is a unique
//! `Psi`-invariant element equal to the standard vector plus corrections at
//! `(a-j, b-j)` with coefficients in `q^-1 Z[q^-1, p]`. Where
//! `s - a >= t - b` the corrections have a closed form; elsewhere they come
//! out of the generic bar-triangular solver, and the two routes agree on
//! the overlap.

use std::collections::BTreeMap;

use super::{psi_apply, ModuleVector, WeightModule};
use crate::cb::{triangular_bar_solve, TriangularSystem};
use crate::pi_ring::{qbinom, PiRational, PiScalar};

/// The canonical basis of `^w L(s) (x) L(t)`, keyed by `(a, b)`.
#[derive(Clone, Debug)]
pub struct TensorCbTable {
    pub s: i64,
    pub t: i64,
    pub entries: BTreeMap<(i64, i64), ModuleVector>,
}

/// Closed-form entry, valid exactly when `s - a >= t - b`:
/// the coefficient at `(a-j, b-j)` is
/// `p^{sj + C(j+1,2) - bj} q^{j(a-j-s)} binom(j-b+t, j)`.
pub fn tensor_cb_closed_entry(s: i64, t: i64, a: i64, b: i64) -> Option<ModuleVector> {
    if s - a < t - b {
        return None;
    }
    let mut out = ModuleVector::zero();
    for j in 0..=a.min(b) {
        let coeff = PiScalar::pi_pow(s * j + j * (j + 1) / 2 - b * j)
            .mul(&PiScalar::q_pow(j * (a - j - s)))
            .mul(&qbinom(j - b + t, j));
        out.add_term(((a - j) * (t + 1) + (b - j)) as usize, coeff.into());
    }
    Some(out)
}

/// Solve one diagonal of the module with the bar-triangular recursion and
/// return the requested entry. The chain is ordered by increasing `a`; the
/// involution expands each standard vector at indices further down the
/// chain, so the bar matrix of the system is unitriangular with integral
/// entries.
pub fn tensor_cb_solver_entry(module: &WeightModule, s: i64, t: i64, a: i64, b: i64) -> ModuleVector {
    let chain = diagonal_chain(s, t, a - b);
    let sys = diagonal_system(module, t, &chain);
    let p = triangular_bar_solve(&sys).expect("tensor module bar matrix is well formed");
    let pos = chain.iter().position(|x| *x == (a, b)).expect("entry lies on its diagonal");
    let mut out = ModuleVector::zero();
    for (i, (ai, bi)) in chain.iter().enumerate() {
        out.add_term((ai * (t + 1) + bi) as usize, PiRational::from(p[i][pos].clone()));
    }
    out
}

/// All indices `(a, b)` with `a - b = d`, ascending.
fn diagonal_chain(s: i64, t: i64, d: i64) -> Vec<(i64, i64)> {
    let mut chain = Vec::new();
    for a in 0..=s {
        let b = a - d;
        if (0..=t).contains(&b) {
            chain.push((a, b));
        }
    }
    chain
}

#[allow(clippy::needless_range_loop)]
fn diagonal_system(module: &WeightModule, t: i64, chain: &[(i64, i64)]) -> TriangularSystem {
    let size = chain.len();
    let mut le = vec![vec![false; size]; size];
    let mut bar_matrix = vec![vec![PiScalar::zero(); size]; size];
    for (j, (aj, bj)) in chain.iter().enumerate() {
        for i in 0..=j {
            le[i][j] = true;
        }
        let image = psi_apply(module, &ModuleVector::basis((aj * (t + 1) + bj) as usize));
        for (idx, c) in image.coeffs() {
            let (ai, bi) = ((*idx as i64) / (t + 1), (*idx as i64) % (t + 1));
            let i = chain
                .iter()
                .position(|x| *x == (ai, bi))
                .expect("the involution preserves diagonals");
            bar_matrix[i][j] = c
                .to_scalar()
                .expect("the involution preserves the integral lattice");
        }
    }
    TriangularSystem { size, le, bar_matrix }
}

/// The full canonical basis table: closed form where it applies, solver on
/// the complementary region.
pub fn tensor_cb(s: i64, t: i64) -> TensorCbTable {
    assert!(s >= 0 && t >= 0);
    let module = WeightModule::standard_tensor(s, t);
    let mut entries = BTreeMap::new();
    for a in 0..=s {
        for b in 0..=t {
            let v = match tensor_cb_closed_entry(s, t, a, b) {
                Some(v) => v,
                None => tensor_cb_solver_entry(&module, s, t, a, b),
            };
            entries.insert((a, b), v);
        }
    }
    TensorCbTable { s, t, entries }
}
