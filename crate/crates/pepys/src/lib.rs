//! Exact-arithmetic toolkit for the Newton-Pepys dice problem.
//!
//! The classic question: which is likeliest: at least one six from 6 fair
//! dice, at least two sixes from 12, or at least three from 18? This crate
//! answers it (and its weighted-dice, deeper-sequence generalizations) with
//! arbitrary-precision rational arithmetic: every probability is an exact
//! fraction until the moment it is rendered.
//!
//! Modules:
//!
//! - [`exact_core`]: canonical big rationals, exact binomial pmf/tail/cdf,
//!   decimal rendering, and a brute-force enumeration oracle over complete
//!   dice-outcome spaces.
//! - [`median_mode`]: exact binomial mean/median/mode and the coincidence
//!   of all three when the mean is an integer.
//! - [`approx`]: the float-valued approximation chain
//!   `1/2 + 0.4 * 1.07 / sqrt(n)` and its error report against exact values.
//! - [`ordering`]: the sequence `P(X >= k | N = r*k)`, its monotonicity,
//!   and the certified bisection search for the probability where the
//!   ordering reverses.
//! - [`newton_argument`]: the Peter/James win decomposition, literal
//!   scoring of shared-luck throw sequences, the dominance counterexample,
//!   and a seeded, reproducible Monte Carlo verifier.
//!
//! Everything except the Monte Carlo sampler is a pure function over
//! immutable values; all types are safe to share and send across threads.

pub mod approx;
pub mod error;
pub mod exact_core;
pub mod median_mode;
pub mod newton_argument;
pub mod ordering;

pub use error::{Error, Result};
pub use exact_core::{ExactRational, Probability};
