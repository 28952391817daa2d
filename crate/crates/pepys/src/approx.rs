//! The float-valued approximation chain for integer-mean binomial tails,
//! reported against the exact values.
//!
//! Three approximations are chained together for `P(X >= n*p)`:
//!
//! 1. modal bump: `1/2 + 0.4 * P(X = n*p)` (the tail exceeds one half by a
//!    fixed share of the modal probability),
//! 2. the De Moivre modal estimate `P(X = n*p) ~ 1/sqrt(2*pi*n*p*(1-p))`,
//!    which at `p = 1/6` is `~1.07/sqrt(n)`,
//! 3. their composition `1/2 + 0.4 * 1.07 / sqrt(n)`.
//!
//! The coefficients 0.4 and 1.07 are fixed literals, not fitted. Exact
//! values remain the ground truth everywhere; these exist to explain the
//! ranking, not to compute it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_core::{binom_tail, ExactRational, Probability};
use crate::median_mode::{binom_mean, modal_probability};

/// Share of the modal probability by which the tail exceeds one half.
pub const MODAL_SHARE_COEFF: f64 = 0.4;

/// `sqrt(n) * P(X = n/6)` plateau constant for `p = 1/6`.
pub const ROOT_N_COEFF: f64 = 1.07;

/// All approximations for one `(n, p)` with integer mean, next to the exact
/// values and absolute errors.
#[derive(Clone, Debug, Serialize)]
pub struct ApproxReport {
    pub n: u64,
    pub p: Probability,
    pub exact_tail: ExactRational,
    pub exact_modal: ExactRational,
    pub modal_tail: f64,
    pub modal_tail_abs_error: f64,
    pub demoivre_modal: f64,
    pub demoivre_abs_error: f64,
    pub chained: f64,
    pub chained_abs_error: f64,
}

/// `1/2 + 0.4 * P(X = n*p)`, the modal-bump tail approximation. The pmf is
/// computed exactly and converted to float once. Errors when `n*p` is not
/// an integer.
pub fn modal_tail_approx(n: u64, p: &Probability) -> Result<f64> {
    let modal = modal_probability(n, p)?;
    Ok(0.5 + MODAL_SHARE_COEFF * modal.to_f64())
}

/// De Moivre's modal estimate `1 / sqrt(2*pi*n*p*(1-p))`. Errors on the
/// degenerate probabilities 0 and 1.
pub fn demoivre_modal_approx(n: u64, p: &Probability) -> Result<f64> {
    if p.is_zero() || p.is_one() {
        return Err(Error::DegenerateProbability);
    }
    let variance = n as f64 * p.to_f64() * p.complement().to_f64();
    Ok(1.0 / (2.0 * std::f64::consts::PI * variance).sqrt())
}

/// The fully chained approximation `1/2 + 0.4 * 1.07 / sqrt(n)`. The formula
/// is defined for any `n >= 1`, but is only meaningful for the `p = 1/6`
/// family with integer mean.
pub fn chained_approx(n: u64) -> f64 {
    0.5 + MODAL_SHARE_COEFF * ROOT_N_COEFF / (n as f64).sqrt()
}

/// Assembles every approximation plus exact references and absolute errors.
/// Errors when `n*p` is not an integer or `p` is degenerate.
pub fn approx_report(n: u64, p: &Probability) -> Result<ApproxReport> {
    let mean = binom_mean(n, p);
    if !mean.is_integer() {
        return Err(Error::NonIntegerMean { mean });
    }
    let m = u64::try_from(mean.to_integer()).expect("mean within 0..=n");
    let exact_tail = binom_tail(n, m, p).into_value();
    let exact_modal = modal_probability(n, p)?.into_value();
    let modal_tail = modal_tail_approx(n, p)?;
    let demoivre_modal = demoivre_modal_approx(n, p)?;
    let chained = chained_approx(n);
    let exact_tail_f = exact_tail.to_f64();
    let exact_modal_f = exact_modal.to_f64();
    Ok(ApproxReport {
        n,
        p: p.clone(),
        exact_tail,
        exact_modal,
        modal_tail,
        modal_tail_abs_error: (modal_tail - exact_tail_f).abs(),
        demoivre_modal,
        demoivre_abs_error: (demoivre_modal - exact_modal_f).abs(),
        chained,
        chained_abs_error: (chained - exact_tail_f).abs(),
    })
}
