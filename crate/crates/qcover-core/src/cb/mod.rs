//! Generic bar-triangular canonical-basis solver, plus the specialization
//! functors and the natively specialized reference pipelines used to
//! cross-check them.

mod solver;
pub mod specialized;

pub use solver::{
    solve_generic, triangular_bar_solve, validate_generic, BarSolvable, OspScalar, SlScalar,
    TriangularSystem,
};

use std::collections::BTreeMap;

use crate::error::Error;
use crate::pi_ring::{LaurentPoly, Sign};
use crate::udot::UdotElement;

/// Coefficient-wise specialization `p -> sign` of a modified-algebra
/// element. At `+1` the image lives in the modified quantum algebra of
/// sl(2) (two commuting copies glued over the weight lattice); at `-1` in
/// the single-parameter modified superalgebra. Fails if a coefficient has
/// a true denominator after specializing.
pub fn specialize_udot(
    x: &UdotElement,
    sign: Sign,
) -> Result<BTreeMap<crate::udot::UdotMonomial, LaurentPoly>, Error> {
    let mut out = BTreeMap::new();
    for (m, c) in x.terms() {
        let specialized = c.specialize(sign);
        let laurent = specialized
            .to_laurent()
            .ok_or_else(|| Error::NonIntegral(format!("{specialized} at {m}")))?;
        if !laurent.is_zero() {
            out.insert(*m, laurent);
        }
    }
    Ok(out)
}
