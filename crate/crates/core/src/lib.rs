//! Exact computation in generalized power series fields `k((G))`.
//!
//! Coefficients live in `k = Q` and exponents in `G = Q^r` with the
//! lexicographic order. Supports are finite; operations that are inherently
//! infinite (inversion, logarithm, exponential) return truncations that carry
//! an explicit cutoff and are exact below it.
//!
//! The crate is organised bottom-up:
//!
//! * [`ordgroup`]: the ordered exponent group, its natural valuation and
//!   convex subgroups.
//! * [`lexprod`]: lexicographic powers of ordered sets, the `d ⊕ S` operation
//!   and a procedure that exhibits a gap in the image of any order embedding of
//!   a cofinal subset of `Γ` into `Δ^Γ`.
//! * [`hahnseries`]: series arithmetic, the canonical valuation, field order,
//!   additive and multiplicative decompositions and regrouping along convex
//!   subgroups.
//! * [`explog`]: logarithmic cross-sections, the logarithm on positive
//!   elements, the partial exponential and decidable membership in the image
//!   of the logarithm.
//! * [`cli`]: expression parser, canonical printer, command runner and REPL
//!   behind the `hahn` binary.
//!
//! Runnable walkthroughs live in `examples/`; start with
//! `cargo run --example series_arithmetic`.

pub mod cli;
pub mod error;
pub mod explog;
pub mod hahnseries;
pub mod lexprod;
pub mod ordgroup;

pub use error::{Error, Result};
pub use explog::{CrossSection, LogMode, LogResult, LogValue};
pub use hahnseries::{Cutoff, NestedSeries, Series};
pub use lexprod::{IndexSet, SupportMap, Witness};
pub use ordgroup::{ArchClass, ConvexLevel, GroupElement};

/// Exact rational scalar used for coefficients and exponent coordinates.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
