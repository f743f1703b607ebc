//! Finite-dimensional weight modules and their tensor calculus.
//!
//! A module carries an ordered basis with a weight, a parity, and a
//! `K`-eigenvalue sign per basis vector, plus explicit matrices for the
//! raising and lowering generators of its sector. Only one sector acts
//! nontrivially on any module built here; the other idempotent acts as
//! zero, which the action routines enforce uniformly.

mod cb;
mod decompose;
pub mod linalg;
mod theta;

pub use cb::{tensor_cb, tensor_cb_closed_entry, tensor_cb_solver_entry, TensorCbTable};
pub use decompose::{
    casimir_decompose, casimir_scalar, casimir_square_matrix, singular_vector_multiplicities,
    verma_singular_degrees,
};
pub use theta::{psi_apply, theta_apply, theta_bar_apply, theta_truncation_bound};

use std::collections::BTreeMap;
use std::fmt;

use crate::pi_ring::{pq_minus_qinv, qfact, qint, PiRational, PiScalar, Sign};
use crate::upi::{PbwElement, PbwMonomial, Sector, TensorElement};

/// How a module was built; tensor factors stay accessible for the operators
/// that act factor-wise.
#[derive(Clone, Debug)]
pub enum ModuleKind {
    Simple { n: i64, sign: Sign },
    VermaTruncated { n: i64, sign: Sign, cutoff: i64 },
    OmegaTwist(Box<WeightModule>),
    Tensor(Box<WeightModule>, Box<WeightModule>),
}

/// A finite-dimensional weight module with exact generator actions.
#[derive(Clone, Debug)]
pub struct WeightModule {
    pub kind: ModuleKind,
    pub sector: Sector,
    pub dim: usize,
    pub labels: Vec<String>,
    pub weights: Vec<i64>,
    pub parities: Vec<i64>,
    pub k_signs: Vec<Sign>,
    e_mat: Vec<Vec<PiRational>>,
    f_mat: Vec<Vec<PiRational>>,
}

/// A vector in a module: sparse coefficients over the basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ModuleVector {
    coeffs: BTreeMap<usize, PiRational>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector { coeffs: BTreeMap::new() }
    }

    pub fn basis(i: usize) -> Self {
        let mut v = ModuleVector::zero();
        v.add_term(i, PiRational::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&usize, &PiRational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, i: usize) -> PiRational {
        self.coeffs.get(&i).cloned().unwrap_or_else(PiRational::zero)
    }

    pub fn add_term(&mut self, i: usize, c: PiRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(i).or_insert_with(PiRational::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, c) in other.coeffs() {
            out.add_term(*i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&PiRational::from_int(-1)))
    }

    pub fn scale(&self, c: &PiRational) -> Self {
        if c.is_zero() {
            return ModuleVector::zero();
        }
        let mut out = ModuleVector::zero();
        for (i, c0) in self.coeffs() {
            out.add_term(*i, c0.mul(c));
        }
        out
    }

    /// Bar the coefficients; the standard basis vectors are fixed by the
    /// module-level bar.
    pub fn bar(&self) -> Self {
        ModuleVector { coeffs: self.coeffs.iter().map(|(i, c)| (*i, c.bar())).collect() }
    }
}

impl WeightModule {
    /// The simple module `L(n, sign)`: basis `F^(j) v` for `0 <= j <= n`,
    /// sector `n mod 2`, highest weight `sign * q^n`.
    pub fn simple(n: i64, sign: Sign) -> Self {
        assert!(n >= 0, "simple modules are indexed by nonnegative n");
        let sector = Sector::from_parity(n);
        Self::lowering_string(ModuleKind::Simple { n, sign }, sector, n, sign, n)
    }

    /// A truncated Verma module with highest weight `sign * q^n` over the
    /// chosen sector; the basis is `F^(j) v` for `0 <= j <= cutoff`.
    /// Unlike a simple module the sector is free, so weights of mismatched
    /// parity are allowed (they admit no singular vectors).
    pub fn verma_truncated(sector: Sector, n: i64, sign: Sign, cutoff: i64) -> Self {
        assert!(cutoff >= 1, "cutoff must be at least 1");
        Self::lowering_string(
            ModuleKind::VermaTruncated { n, sign, cutoff },
            sector,
            n,
            sign,
            cutoff,
        )
    }

    /// Common construction: basis `F^(j) v`, `j = 0..=top`, with
    /// `F F^(j)v = [j+1] F^(j+1)v` and
    /// `E F^(j)v = p^{j+1} eval([K; 1-j]) F^(j-1)v`.
    fn lowering_string(kind: ModuleKind, sector: Sector, n: i64, sign: Sign, top: i64) -> Self {
        let dim = (top + 1) as usize;
        let mut e_mat = zero_matrix(dim);
        let mut f_mat = zero_matrix(dim);
        for j in 0..=top {
            let ju = j as usize;
            if j < top {
                f_mat[ju + 1][ju] = qint(j + 1).into();
            }
            if j > 0 {
                let eval = k_bracket_eval(sector, 1 - j, sign, n);
                e_mat[ju - 1][ju] = eval.mul(&PiRational::pi_pow(j + 1));
            }
        }
        WeightModule {
            kind,
            sector,
            dim,
            labels: (0..=top).map(|j| format!("F^({j})v")).collect(),
            weights: (0..=top).map(|j| n - 2 * j).collect(),
            parities: (0..=top).map(|j| j.rem_euclid(2)).collect(),
            k_signs: vec![sign; dim],
            e_mat,
            f_mat,
        }
    }

    /// The twist along the automorphism exchanging raising and lowering
    /// operators: the same space with `u` acting as `omega(u)`.
    pub fn omega_twist(inner: WeightModule) -> Self {
        let sector = inner.sector;
        let twist = PiRational::pi_pow(1 - sector.parity());
        WeightModule {
            sector,
            dim: inner.dim,
            labels: inner.labels.clone(),
            weights: inner.weights.iter().map(|w| -w).collect(),
            parities: inner.parities.clone(),
            k_signs: inner.k_signs.clone(),
            e_mat: inner.f_mat.clone(),
            f_mat: scale_matrix(&inner.e_mat, &twist),
            kind: ModuleKind::OmegaTwist(Box::new(inner)),
        }
    }

    /// Tensor product with the super sign rule
    /// `(u (x) v)(m (x) n) = p^{p(v)p(m)} um (x) vn`, the action coming
    /// through the coproduct.
    pub fn tensor(left: WeightModule, right: WeightModule) -> Self {
        let sector = Sector::from_parity(left.sector.parity() + right.sector.parity());
        let dim = left.dim * right.dim;
        let idx = |i: usize, j: usize| i * right.dim + j;
        let mut e_mat = zero_matrix(dim);
        let mut f_mat = zero_matrix(dim);
        for i in 0..left.dim {
            for j in 0..right.dim {
                let col = idx(i, j);
                // E = E (x) e + p^{eps_1} K (x) E
                for (r, c) in column(&left.e_mat, i) {
                    e_mat[idx(r, j)][col] = c;
                }
                let k_eig = k_eigenvalue(&left, i, 1);
                let sign = PiRational::pi_pow(left.sector.parity() + left.parities[i]);
                for (r, c) in column(&right.e_mat, j) {
                    let entry = c.mul(&k_eig).mul(&sign);
                    e_mat[idx(i, r)][col] = e_mat[idx(i, r)][col].add(&entry);
                }
                // F = F (x) K^-1 + e (x) F
                let kinv_eig = k_eigenvalue(&right, j, -1);
                for (r, c) in column(&left.f_mat, i) {
                    f_mat[idx(r, j)][col] = c.mul(&kinv_eig);
                }
                let sign = PiRational::pi_pow(left.parities[i]);
                for (r, c) in column(&right.f_mat, j) {
                    let entry = c.mul(&sign);
                    f_mat[idx(i, r)][col] = f_mat[idx(i, r)][col].add(&entry);
                }
            }
        }
        let mut labels = Vec::with_capacity(dim);
        let mut weights = Vec::with_capacity(dim);
        let mut parities = Vec::with_capacity(dim);
        let mut k_signs = Vec::with_capacity(dim);
        for i in 0..left.dim {
            for j in 0..right.dim {
                labels.push(format!("{} (x) {}", left.labels[i], right.labels[j]));
                weights.push(left.weights[i] + right.weights[j]);
                parities.push((left.parities[i] + right.parities[j]).rem_euclid(2));
                k_signs.push(match (left.k_signs[i], right.k_signs[j]) {
                    (Sign::Plus, s) | (s, Sign::Plus) => s,
                    (Sign::Minus, Sign::Minus) => Sign::Plus,
                });
            }
        }
        WeightModule {
            sector,
            dim,
            labels,
            weights,
            parities,
            k_signs,
            e_mat,
            f_mat,
            kind: ModuleKind::Tensor(Box::new(left), Box::new(right)),
        }
    }

    /// The standard tensor module `^w L(s) (x) L(t)` carrying the canonical
    /// basis; index `(a, b)` is `E^(a) eta (x) F^(b) nu`.
    pub fn standard_tensor(s: i64, t: i64) -> Self {
        WeightModule::tensor(
            WeightModule::omega_twist(WeightModule::simple(s, Sign::Plus)),
            WeightModule::simple(t, Sign::Plus),
        )
    }

    pub fn tensor_factors(&self) -> Option<(&WeightModule, &WeightModule)> {
        match &self.kind {
            ModuleKind::Tensor(l, r) => Some((l, r)),
            _ => None,
        }
    }

    /// Flattened index of the pair `(i, j)` in a tensor module.
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        let (_, r) = self.tensor_factors().expect("pair_index needs a tensor module");
        i * r.dim + j
    }

    /// Apply a single PBW monomial (with its implicit idempotent).
    pub fn act_monomial(&self, m: &PbwMonomial, v: &ModuleVector) -> ModuleVector {
        if m.sector != self.sector {
            return ModuleVector::zero();
        }
        let mut cur = self.apply_divided(&self.e_mat, m.e, v);
        if m.k != 0 {
            let mut shifted = ModuleVector::zero();
            for (i, c) in cur.coeffs() {
                shifted.add_term(*i, c.mul(&k_eigenvalue(self, *i, m.k)));
            }
            cur = shifted;
        }
        self.apply_divided(&self.f_mat, m.f, &cur)
    }

    /// Apply an algebra element.
    pub fn act(&self, x: &PbwElement, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (m, c) in x.terms() {
            out = out.add(&self.act_monomial(m, v).scale(c));
        }
        out
    }

    /// Apply an element of the tensor square through the factor actions,
    /// with the super sign rule.
    pub fn act_tensor_element(&self, x: &TensorElement, v: &ModuleVector) -> ModuleVector {
        let (left, right) = self
            .tensor_factors()
            .expect("tensor-square elements act on tensor modules");
        let mut out = ModuleVector::zero();
        for ((m1, m2), c) in x.terms() {
            for (idx, cv) in v.coeffs() {
                let (i, j) = (idx / right.dim, idx % right.dim);
                let sign = PiRational::pi_pow(m2.parity() * left.parities[i]);
                let lv = left.act_monomial(m1, &ModuleVector::basis(i));
                if lv.is_zero() {
                    continue;
                }
                let rv = right.act_monomial(m2, &ModuleVector::basis(j));
                let scale = c.mul(cv).mul(&sign);
                for (li, lc) in lv.coeffs() {
                    for (rj, rc) in rv.coeffs() {
                        out.add_term(li * right.dim + rj, scale.mul(lc).mul(rc));
                    }
                }
            }
        }
        out
    }

    /// Projection onto the weight-`w` subspace.
    pub fn project_weight(&self, w: i64, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (i, c) in v.coeffs() {
            if self.weights[*i] == w {
                out.add_term(*i, c.clone());
            }
        }
        out
    }

    /// Matrix of an algebra element in the module basis.
    #[allow(clippy::needless_range_loop)]
    pub fn matrix_of(&self, x: &PbwElement) -> Vec<Vec<PiRational>> {
        let mut mat = zero_matrix(self.dim);
        for j in 0..self.dim {
            let img = self.act(x, &ModuleVector::basis(j));
            for (i, c) in img.coeffs() {
                mat[*i][j] = c.clone();
            }
        }
        mat
    }

    fn apply_divided(
        &self,
        mat: &[Vec<PiRational>],
        power: i64,
        v: &ModuleVector,
    ) -> ModuleVector {
        if power == 0 {
            return v.clone();
        }
        let mut cur = v.clone();
        for _ in 0..power {
            cur = apply_matrix(mat, &cur);
            if cur.is_zero() {
                return cur;
            }
        }
        cur.scale(
            &PiRational::from(qfact(power))
                .invert()
                .expect("quantum factorial is invertible"),
        )
    }
}

/// `[K_sector; m]` evaluated on a vector of weight `w` in the `sign`
/// family: `sign * (p^{m+sector} q^{m+w} - q^{-(m+w)})/(pq - q^-1)`.
pub fn k_bracket_eval(sector: Sector, m: i64, sign: Sign, w: i64) -> PiRational {
    let num = PiScalar::pi_pow(m + sector.parity())
        .mul(&PiScalar::q_pow(m + w))
        .sub(&PiScalar::q_pow(-(m + w)));
    let denom_inv = PiRational::from(pq_minus_qinv()).invert().expect("invertible");
    let val = PiRational::from(num).mul(&denom_inv);
    match sign {
        Sign::Plus => val,
        Sign::Minus => val.neg(),
    }
}

/// Eigenvalue of `K^pow` on basis vector `i`: `(sign q^w)^pow`.
fn k_eigenvalue(module: &WeightModule, i: usize, pow: i64) -> PiRational {
    let q_part = PiRational::q_pow(module.weights[i] * pow);
    match module.k_signs[i].pow(pow) {
        Sign::Plus => q_part,
        Sign::Minus => q_part.neg(),
    }
}

fn zero_matrix(dim: usize) -> Vec<Vec<PiRational>> {
    vec![vec![PiRational::zero(); dim]; dim]
}

fn scale_matrix(mat: &[Vec<PiRational>], c: &PiRational) -> Vec<Vec<PiRational>> {
    mat.iter().map(|row| row.iter().map(|x| x.mul(c)).collect()).collect()
}

fn column(mat: &[Vec<PiRational>], j: usize) -> Vec<(usize, PiRational)> {
    let mut out = Vec::new();
    for (i, row) in mat.iter().enumerate() {
        if !row[j].is_zero() {
            out.push((i, row[j].clone()));
        }
    }
    out
}

fn apply_matrix(mat: &[Vec<PiRational>], v: &ModuleVector) -> ModuleVector {
    let mut out = ModuleVector::zero();
    for (j, c) in v.coeffs() {
        for (i, row) in mat.iter().enumerate() {
            if !row[*j].is_zero() {
                out.add_term(i, row[*j].mul(c));
            }
        }
    }
    out
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "[{i}]")?;
            } else {
                write!(f, "({}) * [{i}]", crate::pi_ring::format_rational(c))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
