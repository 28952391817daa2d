//! Exact binomial mean, median, and mode, and the checks around their
//! coincidence when the mean is an integer.
//!
//! The median convention is the standard discrete one: the smallest integer
//! `m` with `P(X <= m) >= 1/2`, decided by exact comparison. Mode ties (two
//! consecutive maximizers of the pmf) are reported as both values.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_core::{binom_cdf, binom_pmf, binom_tail, pmf_row, ExactRational, Probability};

/// Mean, median, and mode(s) of one binomial distribution, with the exact
/// mean-median gap.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CentralSummary {
    pub mean: ExactRational,
    pub median: u64,
    pub modes: Vec<u64>,
    pub mean_median_gap: ExactRational,
}

impl CentralSummary {
    /// The gap bound check: strictly below `7/10` exactly, and below `ln 2`
    /// in floating point. (`ln 2` is irrational, so the exact comparison
    /// uses the stated relaxation `7/10`.)
    pub fn gap_within_bound(&self) -> bool {
        self.mean_median_gap < ExactRational::new(7, 10).expect("nonzero")
            && self.mean_median_gap.to_f64() < std::f64::consts::LN_2
    }
}

/// Exact mean `n * p`.
pub fn binom_mean(n: u64, p: &Probability) -> ExactRational {
    ExactRational::from_integer(n) * p.value()
}

/// Smallest `m` with `P(X <= m) >= 1/2`, by exact cumulative scan.
pub fn binom_median(n: u64, p: &Probability) -> u64 {
    let half = ExactRational::new(1, 2).expect("nonzero");
    let mut cumulative = ExactRational::zero();
    for (k, term) in pmf_row(n, p).into_iter().enumerate() {
        cumulative = cumulative + term;
        if cumulative >= half {
            return k as u64;
        }
    }
    // The row sums to exactly 1, so the scan always returns by k = n.
    unreachable!("cumulative pmf reached the end below 1/2")
}

/// All maximizers of the pmf, by exact scan: one value generically, two
/// consecutive values on an exact tie.
pub fn binom_modes(n: u64, p: &Probability) -> Vec<u64> {
    let row = pmf_row(n, p);
    let max = row.iter().max().expect("row is nonempty").clone();
    row.into_iter()
        .enumerate()
        .filter(|(_, value)| *value == max)
        .map(|(k, _)| k as u64)
        .collect()
}

/// Assembles mean, median, modes, and the exact `|mean - median|` gap.
pub fn central_summary(n: u64, p: &Probability) -> CentralSummary {
    let mean = binom_mean(n, p);
    let median = binom_median(n, p);
    let modes = binom_modes(n, p);
    let mean_median_gap = (&mean - ExactRational::from_integer(median)).abs();
    let summary = CentralSummary {
        mean,
        median,
        modes,
        mean_median_gap,
    };
    debug_assert!(summary.gap_within_bound());
    summary
}

/// For an integer mean `m = n * p`, the exact pair
/// `(P(X >= m), P(X <= m))`. Errors when `n * p` is not an integer.
pub fn integer_mean_tails(n: u64, p: &Probability) -> Result<(Probability, Probability)> {
    let mean = binom_mean(n, p);
    if !mean.is_integer() {
        return Err(Error::NonIntegerMean { mean });
    }
    let m: u64 = u64::try_from(mean.to_integer())
        .expect("integer mean of a binomial is within 0..=n");
    Ok((binom_tail(n, m, p), binom_cdf(n, m as i64, p)))
}

/// Convenience for callers that need the modal probability `P(X = n*p)`
/// when the mean is an integer.
pub fn modal_probability(n: u64, p: &Probability) -> Result<Probability> {
    let mean = binom_mean(n, p);
    if !mean.is_integer() {
        return Err(Error::NonIntegerMean { mean });
    }
    let m: u64 = u64::try_from(mean.to_integer()).expect("mean within 0..=n");
    Ok(binom_pmf(n, m, p))
}
