//! Disconjugacy and nonoscillation calculators for linear differential
//! equations with Riemann-Liouville fractional damping.
//!
//! The crate provides, for equations of the forms
//!
//! ```text
//! x''(t)     + g(t)·D_a^β x(t) + f(t)·x(t) = 0      (0 < β ≤ 1)
//! D_a^α x(t) + g(t)·D_a^β x(t) + f(t)·x(t) = 0      (1 < α ≤ 2, α − β ≥ 1)
//! ```
//!
//! * certified interval-length bounds that rule out nontrivial solutions
//!   vanishing at both endpoints ([`bounds`]),
//! * nonoscillation radii for the constant-coefficient case, expressed
//!   through zeros of two-parameter Mittag-Leffler functions ([`zeros`]),
//! * the underlying machinery: fractional integrals/derivatives on
//!   polynomial, power, and tabulated data ([`fracops`]), gamma/beta and
//!   Mittag-Leffler evaluation with certified truncation error ([`specfun`]),
//!   and adaptive quadrature for weakly singular integrands ([`quad`]).
//!
//! Every radius and bound is cross-checked against a brute-force zero
//! scanner; the companion command-line crate wires those checks into a
//! `verify` subcommand.

// Guards of the form `!(x > 0.0)` intentionally reject NaN together with
// the out-of-range values; `x <= 0.0` would let NaN through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Reference values and double-double tails are written out in full.
#![allow(clippy::excessive_precision)]

mod dd;

pub mod bounds;
pub mod error;
pub mod fracops;
pub mod quad;
pub mod report;
pub mod specfun;
pub mod zeros;

pub use bounds::{BoundBranch, BoundReport, ProblemSpec};
pub use error::{Error, Result};
pub use fracops::{OrderPair, RealFn, Regime};
pub use quad::{QuadConfig, QuadOutcome};
pub use specfun::{MlEvaluation, MlParams};
pub use zeros::ZeroScanResult;
