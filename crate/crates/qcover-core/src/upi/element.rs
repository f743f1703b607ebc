//! PBW monomials and elements, with normal-form multiplication.

use std::collections::BTreeMap;
use std::fmt;

use crate::pi_ring::{qbinom, qfact, PiRational, PiScalar};

/// Which summand of the algebra an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sector {
    Zero,
    One,
}

impl Sector {
    pub fn parity(self) -> i64 {
        match self {
            Sector::Zero => 0,
            Sector::One => 1,
        }
    }

    pub fn from_parity(n: i64) -> Sector {
        if n.rem_euclid(2) == 0 {
            Sector::Zero
        } else {
            Sector::One
        }
    }

    pub fn other(self) -> Sector {
        match self {
            Sector::Zero => Sector::One,
            Sector::One => Sector::Zero,
        }
    }

    pub const BOTH: [Sector; 2] = [Sector::Zero, Sector::One];
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parity())
    }
}

/// A divided-power PBW monomial `F^(a) K^b E^(c)` in one sector. The
/// all-zero monomial is the sector idempotent; the unit of the algebra is
/// the sum of both idempotents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial {
    pub sector: Sector,
    pub f: i64,
    pub k: i64,
    pub e: i64,
}

impl PbwMonomial {
    pub fn new(sector: Sector, f: i64, k: i64, e: i64) -> Self {
        assert!(f >= 0 && e >= 0, "divided-power exponents must be nonnegative");
        PbwMonomial { sector, f, k, e }
    }

    /// The weight grading: `|E| = 2`, `|F| = -2`, `|K| = 0`.
    pub fn weight(&self) -> i64 {
        2 * self.e - 2 * self.f
    }

    /// The parity grading: `E` and `F` are odd, `K` is even.
    pub fn parity(&self) -> i64 {
        (self.f + self.e).rem_euclid(2)
    }
}

/// The names of the four distinguished (anti-)automorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Morphism {
    /// Antilinear bar involution: fixes `E`, `F`; `K -> p^eps K^-1`.
    Psi,
    /// Linear automorphism: `E -> F`, `F -> p^{1-eps} E`, `K -> K^-1`.
    Omega,
    /// Linear anti-involution: `E -> p^{1-eps} E`, `F -> F`, `K -> K^-1`.
    Tau,
    /// Linear anti-involution: `E -> qKF`, `F -> qK^-1 E`, `K -> K`.
    Rho,
}

impl std::str::FromStr for Morphism {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "psi" => Ok(Morphism::Psi),
            "omega" => Ok(Morphism::Omega),
            "tau" => Ok(Morphism::Tau),
            "rho" => Ok(Morphism::Rho),
            _ => Err(crate::Error::parse(0, format!("unknown morphism `{s}`"))),
        }
    }
}

/// A finite linear combination of PBW monomials. No zero coefficients are
/// stored; equality is map equality, which is exactly PBW-basis equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PbwElement {
    terms: BTreeMap<PbwMonomial, PiRational>,
}

impl PbwElement {
    pub fn zero() -> Self {
        PbwElement { terms: BTreeMap::new() }
    }

    /// The unit `e_0 + e_1`.
    pub fn one() -> Self {
        let mut out = PbwElement::zero();
        for sector in Sector::BOTH {
            out.add_term(PbwMonomial::new(sector, 0, 0, 0), PiRational::one());
        }
        out
    }

    pub fn idempotent(sector: Sector) -> Self {
        PbwElement::monomial(PbwMonomial::new(sector, 0, 0, 0))
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        let mut out = PbwElement::zero();
        out.add_term(m, PiRational::one());
        out
    }

    pub fn generator_e(sector: Sector) -> Self {
        PbwElement::monomial(PbwMonomial::new(sector, 0, 0, 1))
    }

    pub fn generator_f(sector: Sector) -> Self {
        PbwElement::monomial(PbwMonomial::new(sector, 1, 0, 0))
    }

    pub fn generator_k(sector: Sector, pow: i64) -> Self {
        PbwElement::monomial(PbwMonomial::new(sector, 0, pow, 0))
    }

    /// `E^(a)` as a basis monomial.
    pub fn e_divided(sector: Sector, a: i64) -> Self {
        PbwElement::monomial(PbwMonomial::new(sector, 0, 0, a))
    }

    /// `F^(a)` as a basis monomial.
    pub fn f_divided(sector: Sector, a: i64) -> Self {
        PbwElement::monomial(PbwMonomial::new(sector, a, 0, 0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &PiRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> PiRational {
        self.terms.get(m).cloned().unwrap_or_else(PiRational::zero)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: PiRational) {
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
        PbwElement { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &PiRational) -> Self {
        if c.is_zero() {
            return PbwElement::zero();
        }
        let mut out = PbwElement::zero();
        for (m, c0) in self.terms() {
            out.add_term(*m, c0.mul(c));
        }
        out
    }

    pub fn scale_scalar(&self, c: &PiScalar) -> Self {
        self.scale(&c.into())
    }

    /// Divide by an integral scalar that is invertible at both
    /// specializations (quantum factorials, powers of `pq - q^-1`, ...).
    pub fn scale_div_scalar(&self, c: &PiScalar) -> Self {
        let inv = PiRational::from(c)
            .invert()
            .expect("scalar divisor must be invertible in the fraction ring");
        self.scale(&inv)
    }

    /// Product in PBW normal form. Cross-sector products vanish.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = PbwElement::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                if m1.sector != m2.sector {
                    continue;
                }
                mul_monomials(&mut out, m1, m2, &c1.mul(c2));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = PbwElement::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// The common weight of all monomials, when homogeneous.
    pub fn weight_homogeneous(&self) -> Option<i64> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight();
        it.all(|m| m.weight() == w).then_some(w)
    }

    pub fn parity_homogeneous(&self) -> Option<i64> {
        let mut it = self.terms.keys();
        let p = it.next()?.parity();
        it.all(|m| m.parity() == p).then_some(p)
    }

    /// Every coefficient embeds into the integral ring.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.to_scalar().is_some())
    }

    /// Antilinear coefficient bar, leaving monomials untouched. The full
    /// bar involution on the algebra is [`Morphism::Psi`].
    pub fn bar_coefficients(&self) -> Self {
        PbwElement { terms: self.terms.iter().map(|(m, c)| (*m, c.bar())).collect() }
    }
}

/// `out += c * (m1 * m2)` for same-sector monomials, using the
/// divided-power commutation rule
/// `E^(r) F^(s) = p^{rs} sum_i p^{C(i+1,2)} F^(s-i) [K; 2i-(r+s) choose i] E^(r-i)`
/// with the `K`-binomial expanded into `K`-powers.
fn mul_monomials(out: &mut PbwElement, m1: &PbwMonomial, m2: &PbwMonomial, c: &PiRational) {
    let sector = m1.sector;
    let (a1, b1, c1) = (m1.f, m1.k, m1.e);
    let (a2, b2, c2) = (m2.f, m2.k, m2.e);
    for i in 0..=c1.min(a2) {
        let mut coeff = PiScalar::pi_pow(c1 * a2 + i * (i + 1) / 2)
            .mul(&PiScalar::q_pow(-2 * b1 * (a2 - i) - 2 * b2 * (c1 - i)));
        coeff = coeff.mul(&qbinom(a1 + a2 - i, a1));
        coeff = coeff.mul(&qbinom(c1 + c2 - i, c2));
        let coeff = c.mul(&coeff.into());
        let f_new = a1 + a2 - i;
        let e_new = c1 + c2 - i;
        if i == 0 {
            out.add_term(PbwMonomial::new(sector, f_new, b1 + b2, e_new), coeff);
        } else {
            for (mk, ck) in super::k_binom(sector, 2 * i - (c1 + a2), i).terms() {
                out.add_term(
                    PbwMonomial::new(sector, f_new, b1 + mk.k + b2, e_new),
                    coeff.mul(ck),
                );
            }
        }
    }
}

/// `x^a / [a]!` built by repeated multiplication; used where a divided
/// power of a non-generator element is needed.
pub(crate) fn divided_power_of(x: &PbwElement, a: i64) -> PbwElement {
    assert!(a >= 0);
    let mut out = PbwElement::one();
    for _ in 0..a {
        out = out.mul(x);
    }
    out.scale_div_scalar(&qfact(a))
}

impl fmt::Display for PbwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_element(self))
    }
}
