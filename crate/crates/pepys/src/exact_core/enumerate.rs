//! Brute-force enumeration over complete dice-outcome spaces.
//!
//! This is the from-first-principles route: it visits every one of the
//! `faces^num_dice` equally likely outcome tuples and counts the ones with
//! enough successes, with no binomial shortcut anywhere. It exists to
//! cross-check the formula path on small spaces.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use super::rational::Probability;
use crate::error::{Error, Result};

/// Default ceiling on the number of outcomes a full enumeration may visit.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

/// A complete sample space of `num_dice` independent fair dice with `faces`
/// faces each, of which the first `success_faces` count as a success.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiceSpace {
    num_dice: u64,
    faces: u64,
    success_faces: u64,
}

impl DiceSpace {
    pub fn new(num_dice: u64, faces: u64, success_faces: u64) -> Result<Self> {
        if num_dice == 0 {
            return Err(Error::InvalidDiceSpace("need at least one die".into()));
        }
        if faces < 2 {
            return Err(Error::InvalidDiceSpace("need at least two faces".into()));
        }
        if success_faces == 0 || success_faces > faces {
            return Err(Error::InvalidDiceSpace(
                "success faces must be between 1 and the face count".into(),
            ));
        }
        Ok(Self {
            num_dice,
            faces,
            success_faces,
        })
    }

    pub fn num_dice(&self) -> u64 {
        self.num_dice
    }

    pub fn faces(&self) -> u64 {
        self.faces
    }

    pub fn success_faces(&self) -> u64 {
        self.success_faces
    }

    /// The implied per-die success probability `success_faces / faces`.
    pub fn success_prob(&self) -> Probability {
        Probability::from_ratio(self.success_faces, self.faces).expect("0 < s <= f")
    }

    /// `faces^num_dice`, exact (may exceed any machine word).
    pub fn outcome_count(&self) -> BigUint {
        let exp = u32::try_from(self.num_dice).expect("dice count exceeds the supported range");
        BigUint::from(self.faces).pow(exp)
    }
}

/// Enumerates every outcome tuple and counts those with at least `threshold`
/// successes. Returns `(matching, total)` where `total = faces^num_dice`.
fn enumerate_counts(space: &DiceSpace, threshold: u64, cap: u64) -> Result<(u64, u64)> {
    let outcomes = space.outcome_count();
    let total = match outcomes.to_u64() {
        Some(total) if total <= cap => total,
        _ => {
            return Err(Error::EnumerationCapExceeded { outcomes, cap });
        }
    };

    // Odometer over base-`faces` digit tuples. Digits below `success_faces`
    // are successes; the running success count is updated incrementally, so
    // each of the `total` tuples costs amortized O(1).
    let n = space.num_dice as usize;
    let faces = space.faces;
    let success_faces = space.success_faces;
    let mut digits = vec![0u64; n];
    // All-zero tuple: every die shows a success face (success_faces >= 1).
    let mut successes = space.num_dice;
    let mut matching = 0u64;

    for _ in 0..total {
        if successes >= threshold {
            matching += 1;
        }
        for slot in digits.iter_mut() {
            let old = *slot;
            if old + 1 == faces {
                *slot = 0;
                // Rolling over to face 0, which is always a success face.
                if old >= success_faces {
                    successes += 1;
                }
            } else {
                *slot = old + 1;
                if old + 1 == success_faces {
                    successes -= 1;
                }
                break;
            }
        }
    }
    Ok((matching, total))
}

/// Exact `P(at least threshold successes)` by full enumeration, under the
/// default cap of [`DEFAULT_ENUM_CAP`] outcomes.
pub fn brute_force_tail(space: &DiceSpace, threshold: u64) -> Result<Probability> {
    brute_force_tail_with_cap(space, threshold, DEFAULT_ENUM_CAP)
}

/// Exact `P(at least threshold successes)` by full enumeration, refusing to
/// enumerate more than `cap` outcomes.
pub fn brute_force_tail_with_cap(
    space: &DiceSpace,
    threshold: u64,
    cap: u64,
) -> Result<Probability> {
    let (matching, total) = enumerate_counts(space, threshold, cap)?;
    Probability::from_ratio(BigInt::from(matching), BigInt::from(total))
}

/// Raw enumeration tally: `(matching outcomes, total outcomes)`.
pub fn brute_force_count_with_cap(
    space: &DiceSpace,
    threshold: u64,
    cap: u64,
) -> Result<(u64, u64)> {
    enumerate_counts(space, threshold, cap)
}
