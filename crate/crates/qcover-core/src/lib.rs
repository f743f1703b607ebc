//! Exact symbolic computation for the covering quantum algebra of osp(1|2).
//!
//! Everything is computed over the coefficient ring `Z[q,q^-1][p]/(p^2-1)`
//! (written `p` for the parity parameter) or its rational extension
//! `Q(q)[p]/(p^2-1)`, with no floating point anywhere. The crate is organized
//! around the objects it computes with:
//!
//! - [`pi_ring`]: the coefficient rings, super quantum integers `[n]`,
//!   binomials, the twisted bar map `q -> p*q^-1`, and the two
//!   specializations `p -> +1` (quantum sl(2)) and `p -> -1` (quantum
//!   osp(1|2)).
//! - [`upi`]: the two-sector algebra itself in PBW normal form
//!   `F^(a) K^b E^(c)`, its (anti-)automorphisms, Casimir, and the Hopf
//!   structure maps.
//! - [`rep`]: finite-dimensional weight modules, tensor products with the
//!   super sign rule, the quasi-R-matrix, and canonical bases of tensor
//!   modules.
//! - [`udot`]: the modified (idempotented) algebra, its canonical basis,
//!   structure constants, and the contravariant bilinear form.
//! - [`cb`]: the generic bar-triangular basis solver and the natively
//!   specialized reference pipelines used to cross-check specialization.
//! - [`suites`]: batch verification suites behind the `qcover verify`
//!   command.
//!
//! The `parallel` feature (on by default) runs the embarrassingly parallel
//! batch computations on a rayon pool; without it everything is sequential.

pub mod cb;
pub mod error;
pub mod par;
pub mod pi_ring;
pub mod rep;
pub mod suites;
pub mod udot;
pub mod upi;

pub use error::Error;
pub use pi_ring::{LaurentPoly, PiRational, PiScalar, Sign};
