//! Hopf structure: coproduct into the twisted tensor square, counit, and
//! antipode.

use std::collections::BTreeMap;
use std::fmt;

use super::element::{PbwElement, PbwMonomial, Sector};
use crate::pi_ring::{PiRational, PiScalar};

/// An element of the tensor square, with the super multiplication
/// `(a (x) b)(c (x) d) = p^{p(b)p(c)} ac (x) bd`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(PbwMonomial, PbwMonomial), PiRational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement { terms: BTreeMap::new() }
    }

    /// `1 (x) 1` with the unit expanded over both sectors.
    pub fn one() -> Self {
        let mut out = TensorElement::zero();
        for s1 in Sector::BOTH {
            for s2 in Sector::BOTH {
                out.add_term(
                    PbwMonomial::new(s1, 0, 0, 0),
                    PbwMonomial::new(s2, 0, 0, 0),
                    PiRational::one(),
                );
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PbwMonomial, PbwMonomial), &PiRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m1: PbwMonomial, m2: PbwMonomial, c: PiRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((m1, m2)).or_insert_with(PiRational::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&(m1, m2));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((m1, m2), c) in other.terms() {
            out.add_term(*m1, *m2, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&PiRational::from_int(-1)))
    }

    pub fn scale(&self, c: &PiRational) -> Self {
        if c.is_zero() {
            return TensorElement::zero();
        }
        let mut out = TensorElement::zero();
        for ((m1, m2), c0) in self.terms() {
            out.add_term(*m1, *m2, c0.mul(c));
        }
        out
    }

    /// Twisted tensor product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TensorElement::zero();
        for ((a, b), c1) in self.terms() {
            for ((x, y), c2) in other.terms() {
                let left = PbwElement::monomial(*a).mul(&PbwElement::monomial(*x));
                if left.is_zero() {
                    continue;
                }
                let right = PbwElement::monomial(*b).mul(&PbwElement::monomial(*y));
                if right.is_zero() {
                    continue;
                }
                let sign = PiRational::pi_pow(b.parity() * x.parity());
                let c = c1.mul(c2).mul(&sign);
                for (lm, lc) in left.terms() {
                    for (rm, rc) in right.terms() {
                        out.add_term(*lm, *rm, c.mul(lc).mul(rc));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = TensorElement::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Apply the bar involution factor-wise (antilinear on coefficients).
    pub fn bar(&self) -> Self {
        let mut out = TensorElement::zero();
        for ((m1, m2), c) in self.terms() {
            let im1 = super::apply_morphism(super::Morphism::Psi, &PbwElement::monomial(*m1));
            let im2 = super::apply_morphism(super::Morphism::Psi, &PbwElement::monomial(*m2));
            for (a, ca) in im1.terms() {
                for (b, cb) in im2.terms() {
                    out.add_term(*a, *b, c.bar().mul(ca).mul(cb));
                }
            }
        }
        out
    }

    /// Apply `Delta (x) id` (re-expansion of the first factor).
    pub fn coproduct_left(&self) -> Tensor3Element {
        let mut out = Tensor3Element::zero();
        for ((m1, m2), c) in self.terms() {
            for ((a, b), c2) in coproduct_monomial(m1).terms() {
                out.add_term(*a, *b, *m2, c.mul(c2));
            }
        }
        out
    }

    /// Apply `id (x) Delta` (re-expansion of the second factor).
    pub fn coproduct_right(&self) -> Tensor3Element {
        let mut out = Tensor3Element::zero();
        for ((m1, m2), c) in self.terms() {
            for ((a, b), c2) in coproduct_monomial(m2).terms() {
                out.add_term(*m1, *a, *b, c.mul(c2));
            }
        }
        out
    }
}

/// Triple tensors, used to state coassociativity.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tensor3Element {
    terms: BTreeMap<(PbwMonomial, PbwMonomial, PbwMonomial), PiRational>,
}

impl Tensor3Element {
    pub fn zero() -> Self {
        Tensor3Element { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, m1: PbwMonomial, m2: PbwMonomial, m3: PbwMonomial, c: PiRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((m1, m2, m3)).or_insert_with(PiRational::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&(m1, m2, m3));
        }
    }
}

/// `Delta_{eps,kappa}(E^(p))` assembled from the closed divided-power
/// formula `sum_{a+b=p} p^{eps b} q^{ab} E^(a) K^b (x) E^(b)`, already in
/// PBW coordinates on each side.
fn coproduct_e_power(eps: Sector, kappa: Sector, p: i64) -> TensorElement {
    let mut out = TensorElement::zero();
    for a in 0..=p {
        let b = p - a;
        // E^(a) K^b = q^{-2ab} K^b E^(a), so the PBW coefficient is q^{-ab}
        let coeff = PiScalar::pi_pow(eps.parity() * b).mul(&PiScalar::q_pow(-a * b));
        out.add_term(
            PbwMonomial::new(eps, 0, b, a),
            PbwMonomial::new(kappa, 0, 0, b),
            PiRational::from(coeff),
        );
    }
    out
}

/// `Delta_{eps,kappa}(F^(p)) = sum_{a+b=p} (pq)^{-ab} F^(a) (x) K^-a F^(b)`.
fn coproduct_f_power(eps: Sector, kappa: Sector, p: i64) -> TensorElement {
    let mut out = TensorElement::zero();
    for a in 0..=p {
        let b = p - a;
        // K^-a F^(b) = q^{2ab} F^(b) K^-a, so (pq)^{-ab} q^{2ab} = p^{ab} q^{ab}
        let coeff = PiScalar::pi_pow(a * b).mul(&PiScalar::q_pow(a * b));
        out.add_term(
            PbwMonomial::new(eps, a, 0, 0),
            PbwMonomial::new(kappa, b, -a, 0),
            PiRational::from(coeff),
        );
    }
    out
}

fn coproduct_monomial(m: &PbwMonomial) -> TensorElement {
    let mut out = TensorElement::zero();
    for eps in Sector::BOTH {
        let kappa = if eps.parity() == m.sector.parity() { Sector::Zero } else { Sector::One };
        let df = coproduct_f_power(eps, kappa, m.f);
        let dk = {
            let mut t = TensorElement::zero();
            t.add_term(
                PbwMonomial::new(eps, 0, m.k, 0),
                PbwMonomial::new(kappa, 0, m.k, 0),
                PiRational::one(),
            );
            t
        };
        let de = coproduct_e_power(eps, kappa, m.e);
        out = out.add(&df.mul(&dk).mul(&de));
    }
    out
}

/// The coproduct, extended multiplicatively from the generators through the
/// closed divided-power formulas.
pub fn coproduct(x: &PbwElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, c) in x.terms() {
        out = out.add(&coproduct_monomial(m).scale(c));
    }
    out
}

/// The counit: an algebra map killing `e_1`, `E_0`, `F_0` and sending
/// `K_0^b` to 1.
pub fn counit(x: &PbwElement) -> PiRational {
    let mut out = PiRational::zero();
    for (m, c) in x.terms() {
        if m.sector == Sector::Zero && m.f == 0 && m.e == 0 {
            out = out.add(c);
        }
    }
    out
}

/// The antipode: the super anti-automorphism
/// (`S(xy) = p^{p(x)p(y)} S(y) S(x)`) with `S(K) = K^-1`, `S(F) = -F K`,
/// `S(E) = -p^eps K^-1 E`. Reversing `F^(a) K^b E^(c)` and the odd factors
/// inside each divided power contributes `p^{ac + C(a,2) + C(c,2)}`.
pub fn antipode(x: &PbwElement) -> PbwElement {
    let mut out = PbwElement::zero();
    for (m, c) in x.terms() {
        let s = m.sector;
        let (a, ce) = (m.f, m.e);
        let s_f = PbwElement::monomial(PbwMonomial::new(s, 1, 1, 0)).neg();
        let s_e = PbwElement::monomial(PbwMonomial::new(s, 0, -1, 1))
            .scale(&PiRational::pi_pow(s.parity()))
            .neg();
        let sign = PiRational::pi_pow(a * ce + a * (a - 1) / 2 + ce * (ce - 1) / 2);
        let image = super::element::divided_power_of(&s_e, ce)
            .mul(&PbwElement::generator_k(s, -m.k))
            .mul(&super::element::divided_power_of(&s_f, a));
        out = out.add(&image.scale(&c.mul(&sign)));
    }
    out
}

/// The multiplication map `U (x) U -> U`; cross-sector pairs die because
/// the component product vanishes.
pub fn multiply_contract(x: &TensorElement) -> PbwElement {
    let mut out = PbwElement::zero();
    for ((m1, m2), c) in x.terms() {
        let prod = PbwElement::monomial(*m1).mul(&PbwElement::monomial(*m2));
        out = out.add(&prod.scale(c));
    }
    out
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((m1, m2), c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = super::text::format_coeff_prefix(c);
            write!(
                f,
                "{}{} (x) {}",
                coeff,
                super::text::format_monomial(m1),
                super::text::format_monomial(m2)
            )?;
        }
        Ok(())
    }
}
