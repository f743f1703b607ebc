//! The modified (idempotented) covering algebra.
//!
//! The unit is replaced by weight idempotents `1_n`; the sector of every
//! piece is forced to `n mod 2`, so monomials drop the sector tag. The
//! canonical storage form is `E^(a) 1_n F^(b)`; the opposite order is
//! rewritten at construction through the divided-power identities, except
//! that canonical basis elements remember their natural shape for display.

mod form;
pub mod text;

pub use form::{bilinear_form, lowering_pairing};

use std::collections::BTreeMap;
use std::fmt;

use crate::pi_ring::{qbinom, PiRational, PiScalar};
use crate::rep::{ModuleVector, WeightModule};
use crate::upi::{apply_morphism, coproduct, Morphism, PbwElement, PbwMonomial, Sector};
use crate::Error;

/// `E^(a) 1_n F^(b)` with sector `n mod 2`. Lives in the block with left
/// weight `n + 2a` and right weight `n + 2b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UdotMonomial {
    pub a: i64,
    pub n: i64,
    pub b: i64,
}

impl UdotMonomial {
    pub fn new(a: i64, n: i64, b: i64) -> Self {
        assert!(a >= 0 && b >= 0, "divided-power exponents must be nonnegative");
        UdotMonomial { a, n, b }
    }

    pub fn idempotent(n: i64) -> Self {
        UdotMonomial { a: 0, n, b: 0 }
    }

    pub fn left_weight(&self) -> i64 {
        self.n + 2 * self.a
    }

    pub fn right_weight(&self) -> i64 {
        self.n + 2 * self.b
    }

    pub fn sector(&self) -> Sector {
        Sector::from_parity(self.n)
    }

    /// Total divided-power degree.
    pub fn degree(&self) -> i64 {
        self.a + self.b
    }
}

/// Which order a monomial is written in at an API boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialForm {
    /// `E^(a) 1_n F^(b)` (canonical storage form).
    EF,
    /// `F^(a) 1_n E^(b)`, rewritten on construction.
    FE,
}

/// Index of a canonical basis element `E^(a) <>_k F^(b)`. Realized as
/// `E^(a) 1_{k-2b} F^(b)` when `k <= b - a` and as
/// `p^{ab} F^(b) 1_{k+2a} E^(a)` when `k >= b - a`; at `k = b - a` the two
/// coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CbIndex {
    pub a: i64,
    pub b: i64,
    pub k: i64,
}

impl CbIndex {
    pub fn new(a: i64, b: i64, k: i64) -> Self {
        assert!(a >= 0 && b >= 0);
        CbIndex { a, b, k }
    }

    /// Left weight of the element: `k + 2(a - b)`.
    pub fn left_weight(&self) -> i64 {
        self.k + 2 * (self.a - self.b)
    }

    pub fn right_weight(&self) -> i64 {
        self.k
    }
}

/// A finite linear combination of standard monomials in EF form.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UdotElement {
    terms: BTreeMap<UdotMonomial, PiRational>,
}

impl UdotElement {
    pub fn zero() -> Self {
        UdotElement { terms: BTreeMap::new() }
    }

    pub fn idempotent(n: i64) -> Self {
        UdotElement::monomial(UdotMonomial::idempotent(n))
    }

    pub fn monomial(m: UdotMonomial) -> Self {
        let mut out = UdotElement::zero();
        out.add_term(m, PiRational::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UdotMonomial, &PiRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &UdotMonomial) -> PiRational {
        self.terms.get(m).cloned().unwrap_or_else(PiRational::zero)
    }

    pub fn add_term(&mut self, m: UdotMonomial, c: PiRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(PiRational::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        UdotElement { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &PiRational) -> Self {
        if c.is_zero() {
            return UdotElement::zero();
        }
        let mut out = UdotElement::zero();
        for (m, c0) in self.terms() {
            out.add_term(*m, c0.mul(c));
        }
        out
    }

    pub fn scale_scalar(&self, c: &PiScalar) -> Self {
        self.scale(&c.into())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.to_scalar().is_some())
    }

    /// The antilinear bar involution: every standard monomial is a
    /// bimodule word in bar-fixed elements, so only coefficients change.
    pub fn bar(&self) -> Self {
        UdotElement { terms: self.terms.iter().map(|(m, c)| (*m, c.bar())).collect() }
    }

    /// Product under `p_{k,l}(x) p_{m,n}(y) = delta_{l,m} p_{k,n}(xy)`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = UdotElement::zero();
        for (x, cx) in self.terms() {
            for (y, cy) in other.terms() {
                if x.right_weight() != y.left_weight() {
                    continue;
                }
                // x y = E^(xa) [F^(xb) 1_{yn+2yc} E^(ya)] F^(yb)
                let inner = fe_to_ef(x.b, y.n + 2 * y.a, y.a);
                let c = cx.mul(cy);
                for (m, cm) in inner.terms() {
                    let merged = merge_e_left(x.a, *m).and_then(|(c1, m)| {
                        merge_f_right(m, y.b).map(|(c2, m)| (c1.mul(&c2), m))
                    });
                    if let Some((cmerge, mono)) = merged {
                        out.add_term(mono, c.mul(cm).mul(&cmerge.into()));
                    }
                }
            }
        }
        out
    }
}

/// `E^(r) E^(a) = binom(r + a, r) E^(r+a)` merged onto the left.
fn merge_e_left(r: i64, m: UdotMonomial) -> Option<(PiScalar, UdotMonomial)> {
    Some((qbinom(r + m.a, r), UdotMonomial::new(r + m.a, m.n, m.b)))
}

/// `F^(b) F^(s) = binom(b + s, s) F^(b+s)` merged onto the right.
fn merge_f_right(m: UdotMonomial, s: i64) -> Option<(PiScalar, UdotMonomial)> {
    Some((qbinom(m.b + s, s), UdotMonomial::new(m.a, m.n, m.b + s)))
}

/// The core rewrite into the storage form:
/// `F^(s) 1_n E^(r) = p^{rs} sum_i p^{C(i,2) + eps i} binom(r+s-n, i)
///  E^(r-i) 1_{n-2s-2r+2i} F^(s-i)` with `eps = n mod 2`.
pub fn fe_to_ef(s: i64, n: i64, r: i64) -> UdotElement {
    let eps = n.rem_euclid(2);
    let mut out = UdotElement::zero();
    for i in 0..=r.min(s) {
        let coeff = PiScalar::pi_pow(r * s + i * (i - 1) / 2 + eps * i).mul(&qbinom(r + s - n, i));
        out.add_term(
            UdotMonomial::new(r - i, n - 2 * s - 2 * r + 2 * i, s - i),
            coeff.into(),
        );
    }
    out
}

/// A standard monomial in either order, normalized to storage form.
pub fn standard_monomial(form: MonomialForm, a: i64, n: i64, b: i64) -> UdotElement {
    match form {
        MonomialForm::EF => UdotElement::monomial(UdotMonomial::new(a, n, b)),
        MonomialForm::FE => fe_to_ef(a, n, b),
    }
}

/// Left action of the algebra on the bimodule: embed the acting monomial
/// at the matching idempotent and multiply.
pub fn bimodule_left(u: &PbwElement, x: &UdotElement) -> UdotElement {
    let mut out = UdotElement::zero();
    for (xm, cx) in x.terms() {
        let left = xm.left_weight();
        for (um, cu) in u.terms() {
            if um.sector != Sector::from_parity(left) {
                continue;
            }
            // u 1_left = q^{k (left + 2e)} F^(f) 1_{left+2e} E^(e)
            let scale = PiRational::q_pow(um.k * (left + 2 * um.e));
            let embedded = fe_to_ef(um.f, left + 2 * um.e, um.e);
            out = out.add(
                &embedded
                    .mul(&UdotElement::monomial(*xm))
                    .scale(&cu.mul(cx).mul(&scale)),
            );
        }
    }
    out
}

/// Right action: embed at the right weight and multiply.
pub fn bimodule_right(x: &UdotElement, v: &PbwElement) -> UdotElement {
    let mut out = UdotElement::zero();
    for (xm, cx) in x.terms() {
        let right = xm.right_weight();
        for (vm, cv) in v.terms() {
            if vm.sector != Sector::from_parity(right) {
                continue;
            }
            // 1_right v = q^{k (right + 2f)} F^(f) 1_{right+2f} E^(e)
            let scale = PiRational::q_pow(vm.k * (right + 2 * vm.f));
            let embedded = fe_to_ef(vm.f, right + 2 * vm.f, vm.e);
            out = out.add(
                &UdotElement::monomial(*xm)
                    .mul(&embedded)
                    .scale(&cv.mul(cx).mul(&scale)),
            );
        }
    }
    out
}

/// The two-sided action `u . x . v`.
pub fn bimodule_act(u: &PbwElement, x: &UdotElement, v: &PbwElement) -> UdotElement {
    bimodule_left(u, &bimodule_right(x, v))
}

/// Transport of the (anti-)automorphisms through the bimodule structure;
/// the bar involution is [`UdotElement::bar`].
pub fn udot_apply_morphism(name: Morphism, x: &UdotElement) -> UdotElement {
    if name == Morphism::Psi {
        return x.bar();
    }
    let mut out = UdotElement::zero();
    for (m, c) in x.terms() {
        let s = m.sector();
        let e_part = PbwElement::e_divided(s, m.a);
        let f_part = PbwElement::f_divided(s, m.b);
        let image = match name {
            Morphism::Omega => bimodule_act(
                &apply_morphism(Morphism::Omega, &e_part),
                &UdotElement::idempotent(-m.n),
                &apply_morphism(Morphism::Omega, &f_part),
            ),
            Morphism::Tau => bimodule_act(
                &apply_morphism(Morphism::Tau, &f_part),
                &UdotElement::idempotent(-m.n),
                &apply_morphism(Morphism::Tau, &e_part),
            ),
            Morphism::Rho => bimodule_act(
                &apply_morphism(Morphism::Rho, &f_part),
                &UdotElement::idempotent(m.n),
                &apply_morphism(Morphism::Rho, &e_part),
            ),
            Morphism::Psi => unreachable!(),
        };
        out = out.add(&image.scale(c));
    }
    out
}

/// The canonical basis element for an index, in storage form.
pub fn cb_element(idx: CbIndex) -> UdotElement {
    let CbIndex { a, b, k } = idx;
    if k <= b - a {
        UdotElement::monomial(UdotMonomial::new(a, k - 2 * b, b))
    } else {
        let n = k + 2 * a;
        fe_to_ef(b, n, a).scale(&PiRational::pi_pow(a * b))
    }
}

/// Expansion of an element in the canonical basis. The change of basis is
/// unitriangular with integral entries; on integral inputs the output
/// coefficients are demanded integral.
pub fn cb_expand(x: &UdotElement) -> BTreeMap<CbIndex, PiRational> {
    let input_integral = x.is_integral();
    let mut out: BTreeMap<CbIndex, PiRational> = BTreeMap::new();
    let mut add = |idx: CbIndex, c: PiRational| {
        if c.is_zero() {
            return;
        }
        let entry = out.entry(idx).or_insert_with(PiRational::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            out.remove(&idx);
        }
    };
    for (m, c) in x.terms() {
        let k = m.right_weight();
        if -m.n >= m.a + m.b {
            add(CbIndex::new(m.a, m.b, k), c.clone());
        } else {
            // E^(a) 1_m F^(b) = p^{ab} sum_i p^{C(i+1,2)} binom(a+b+m, i)
            //                   F^(b-i) 1_{2a+2b+m-2i} E^(a-i)
            // and each F-form monomial is p^{a'b'} times a basis element.
            for i in 0..=m.a.min(m.b) {
                let (a2, b2) = (m.a - i, m.b - i);
                let coeff = PiScalar::pi_pow(m.a * m.b + i * (i + 1) / 2 + a2 * b2)
                    .mul(&qbinom(m.a + m.b + m.n, i));
                add(CbIndex::new(a2, b2, k), c.mul(&coeff.into()));
            }
        }
    }
    if input_integral {
        for (idx, c) in &out {
            assert!(
                c.to_scalar().is_some(),
                "canonical expansion of an integral element produced a non-integral \
                 coefficient at ({}, {}, {})",
                idx.a,
                idx.b,
                idx.k
            );
        }
    }
    out
}

/// Structure constants of a product of canonical basis elements. Every
/// constant must land in the positive cone `N[q, q^-1, p]`; a violation is
/// a hard error.
pub fn structure_constants(i1: CbIndex, i2: CbIndex) -> Result<BTreeMap<CbIndex, PiScalar>, Error> {
    let product = cb_element(i1).mul(&cb_element(i2));
    let mut out = BTreeMap::new();
    for (idx, c) in cb_expand(&product) {
        let scalar = c
            .to_scalar()
            .expect("products of canonical basis elements stay integral");
        if !scalar.is_positive_cone() {
            return Err(Error::PositivityViolation {
                a: idx.a,
                b: idx.b,
                k: idx.k,
                scalar: crate::pi_ring::format_scalar(&scalar),
            });
        }
        out.insert(idx, scalar);
    }
    Ok(out)
}

/// Evaluate an element on the highest tensor vector `eta (x) nu` of the
/// standard tensor module with `t - s = k`, through the unital-module
/// correspondence: `F^(b)` acts, the weight-`n` component is selected, then
/// `E^(a)` acts.
pub fn act_on_tensor(x: &UdotElement, s: i64, t: i64) -> ModuleVector {
    let module = WeightModule::standard_tensor(s, t);
    act_on_module(x, &module, &ModuleVector::basis(0))
}

/// The unital action on any weight module vector.
pub fn act_on_module(x: &UdotElement, module: &WeightModule, v: &ModuleVector) -> ModuleVector {
    let mut out = ModuleVector::zero();
    for (m, c) in x.terms() {
        if m.sector() != module.sector {
            continue;
        }
        let lowered = module.act_monomial(&PbwMonomial::new(module.sector, m.b, 0, 0), v);
        let projected = module.project_weight(m.n, &lowered);
        let raised = module.act_monomial(&PbwMonomial::new(module.sector, 0, 0, m.a), &projected);
        out = out.add(&raised.scale(c));
    }
    out
}

/// A pair expansion over two blocks of the modified algebra.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UdotTensorElement {
    pub terms: BTreeMap<(UdotMonomial, UdotMonomial), PiRational>,
}

impl UdotTensorElement {
    pub fn add_term(&mut self, m1: UdotMonomial, m2: UdotMonomial, c: PiRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((m1, m2)).or_insert_with(PiRational::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&(m1, m2));
        }
    }
}

/// The component `Delta_{a,b,c,d}` of the coproduct: project `Delta` of a
/// lift through `p_{a,c} (x) p_{b,d}`. Terms of `x` outside the block
/// `(a+b, c+d)` contribute nothing.
pub fn coproduct_dot(x: &UdotElement, a: i64, b: i64, c: i64, d: i64) -> UdotTensorElement {
    let mut out = UdotTensorElement::default();
    for (m, cm) in x.terms() {
        if m.left_weight() != a + b || m.right_weight() != c + d {
            continue;
        }
        let s = m.sector();
        let lift = PbwElement::e_divided(s, m.a).mul(&PbwElement::f_divided(s, m.b));
        for ((p1, p2), cd) in coproduct(&lift).terms() {
            let (Some(left), Some(right)) = (project_block(p1, a, c), project_block(p2, b, d))
            else {
                continue;
            };
            let coeff = cm.mul(cd);
            for (lm, lc) in left.terms() {
                for (rm, rc) in right.terms() {
                    out.add_term(*lm, *rm, coeff.mul(lc).mul(rc));
                }
            }
        }
    }
    out
}

/// `p_{lw, rw}` applied to a PBW monomial: `None` when the parities or the
/// weight do not match, otherwise the `K`-power becomes a scalar and the
/// word is rewritten into storage form.
fn project_block(m: &PbwMonomial, lw: i64, rw: i64) -> Option<UdotElement> {
    if (lw - rw).rem_euclid(2) != 0 || m.sector != Sector::from_parity(rw) {
        return None;
    }
    if m.weight() != lw - rw {
        return None;
    }
    let scale = PiRational::q_pow(m.k * (rw + 2 * m.e));
    Some(fe_to_ef(m.f, rw + 2 * m.e, m.e).scale(&scale))
}

impl fmt::Display for UdotElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", text::format_element(self))
    }
}

impl fmt::Display for UdotMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", text::format_monomial(self))
    }
}

#[cfg(test)]
mod tests;
