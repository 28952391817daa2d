//! Exact arbitrary-precision rational arithmetic over binomial
//! distributions, plus a brute-force enumeration oracle over complete
//! dice-outcome spaces.
//!
//! All operations are pure functions over immutable values and are safe to
//! call from any number of threads.

mod binomial;
mod enumerate;
mod rational;

pub use binomial::{binom_cdf, binom_coeff, binom_pmf, binom_tail};
pub(crate) use binomial::pmf_row;
pub use enumerate::{
    brute_force_count_with_cap, brute_force_tail, brute_force_tail_with_cap, DiceSpace,
    DEFAULT_ENUM_CAP,
};
pub use rational::{ExactRational, Probability};

use crate::error::{Error, Result};

/// One proposition of the form "throw `num_dice` dice and get at least
/// `threshold` successes", each die succeeding with `success_prob`.
///
/// A threshold above `num_dice` is allowed and simply has probability 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wager {
    num_dice: u64,
    threshold: u64,
    success_prob: Probability,
}

impl Wager {
    pub fn new(num_dice: u64, threshold: u64, success_prob: Probability) -> Result<Self> {
        if num_dice == 0 {
            return Err(Error::InvalidParameter("a wager needs at least one die".into()));
        }
        Ok(Self {
            num_dice,
            threshold,
            success_prob,
        })
    }

    pub fn num_dice(&self) -> u64 {
        self.num_dice
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn success_prob(&self) -> &Probability {
        &self.success_prob
    }

    /// Exact probability of winning the wager.
    pub fn probability(&self) -> Probability {
        binom_tail(self.num_dice, self.threshold, &self.success_prob)
    }
}

/// Fixed-point decimal rendering of an exact rational; see
/// [`ExactRational::render_decimal`].
pub fn render_decimal(x: &ExactRational, digits: u32) -> String {
    x.render_decimal(digits)
}
