//! Coefficient rings for the covering algebra.
//!
//! The integral ring is `Z[q,q^-1][p]/(p^2-1)` ([`PiScalar`]); fraction-level
//! arithmetic happens in `Q(q)[p]/(p^2-1)` ([`PiRational`]). Both store the
//! even and odd `p`-parts separately, since `{1, p}` is a free basis. The
//! super quantum integers, factorials, binomials, the quasi-R-matrix
//! coefficients, the twisted bar map, and the specializations `p -> +1, -1`
//! all live here.

mod laurent;
mod poly;
mod ratfunc;
mod rational;
mod scalar;
pub mod text;

pub use laurent::LaurentPoly;
pub use poly::IntPoly;
pub use ratfunc::RatFunc;
pub use rational::PiRational;
pub use scalar::{cone_membership, pq_minus_qinv, qbinom, qfact, qint, theta_coeff, Cone, PiScalar};
pub use text::{format_rational, format_scalar, parse_rational, parse_scalar};

/// A choice of specialization `p -> +1` or `p -> -1`, also used for the
/// highest-weight sign of the simple modules `L(n, +-)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `sign^k`.
    pub fn pow(self, k: i64) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => {
                if k.rem_euclid(2) == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            }
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+1" | "1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            _ => Err(crate::Error::parse(0, format!("expected +1 or -1, got `{s}`"))),
        }
    }
}
