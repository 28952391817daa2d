//! The generalized Pepys sequence `P(X >= k)` for `N = r*k` dice, its
//! ordering as the success probability varies, and the exact-arithmetic
//! crossover search for the probability where two wagers trade places.
//!
//! Bisection here evaluates signs exactly with rational arithmetic at
//! rational midpoints, so the returned bracket is certified rather than
//! floating-approximate; the tolerance only bounds the bracket width.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_core::{binom_tail, ExactRational, Probability};

/// The family of wagers "at least `k` successes with `r*k` dice" for
/// `k = 1..=k_max`, all at one success probability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PepysFamily {
    dice_per_unit: u64,
    k_max: u64,
    success_prob: Probability,
}

impl PepysFamily {
    pub fn new(dice_per_unit: u64, k_max: u64, success_prob: Probability) -> Result<Self> {
        if dice_per_unit == 0 {
            return Err(Error::InvalidParameter("dice per unit must be at least 1".into()));
        }
        if k_max == 0 {
            return Err(Error::InvalidParameter("k_max must be at least 1".into()));
        }
        Ok(Self {
            dice_per_unit,
            k_max,
            success_prob,
        })
    }

    pub fn dice_per_unit(&self) -> u64 {
        self.dice_per_unit
    }

    pub fn k_max(&self) -> u64 {
        self.k_max
    }

    pub fn success_prob(&self) -> &Probability {
        &self.success_prob
    }
}

/// A certified crossover bracket: the tail difference changes sign between
/// the two rational endpoints (or both endpoints equal an exact root).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossoverResult {
    pub k_pair: (u64, u64),
    pub bracket: (ExactRational, ExactRational),
    pub midpoint: f64,
    pub iterations: u32,
}

/// `[P(X >= k | N = r*k, p)]` for `k = 1..=k_max`, exact.
pub fn pepys_sequence(family: &PepysFamily) -> Vec<Probability> {
    (1..=family.k_max)
        .map(|k| binom_tail(family.dice_per_unit * k, k, &family.success_prob))
        .collect()
}

/// True iff every term strictly exceeds its successor (exact comparisons).
/// Errors on sequences shorter than 2.
pub fn is_strictly_decreasing(seq: &[Probability]) -> Result<bool> {
    if seq.len() < 2 {
        return Err(Error::SequenceTooShort(seq.len()));
    }
    Ok(seq.windows(2).all(|pair| pair[0] > pair[1]))
}

/// The exact tail difference `P(X >= k1 | r*k1 dice) - P(X >= k2 | r*k2 dice)`
/// at success probability `p`.
fn tail_gap(k1: u64, k2: u64, unit: u64, p: &Probability) -> ExactRational {
    binom_tail(unit * k1, k1, p).into_value() - binom_tail(unit * k2, k2, p).into_value()
}

fn sign(x: &ExactRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Searches for the success probability where wagers `k1` and `k2` trade
/// places, by bisection with exact sign evaluation.
///
/// For `(k1, k2, unit) = (1, 2, 6)` the search starts from the bracket
/// `[1/6, 1/4]`; otherwise a sign change is sought on the grid `i/64`.
/// The returned bracket has width at most `tol`. If a grid point or a
/// midpoint hits the root exactly, the bracket degenerates to that point.
pub fn crossover_probability(
    k1: u64,
    k2: u64,
    unit: u64,
    tol: &ExactRational,
) -> Result<CrossoverResult> {
    if k1 == 0 || unit == 0 {
        return Err(Error::InvalidParameter("thresholds and unit must be at least 1".into()));
    }
    if k1 >= k2 {
        return Err(Error::InvalidParameter("k1 must be strictly below k2".into()));
    }
    if tol.is_zero() || tol.is_negative() {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }

    let gap_at = |x: &ExactRational| -> ExactRational {
        let p = Probability::new(x.clone()).expect("bracket stays within (0, 1)");
        tail_gap(k1, k2, unit, &p)
    };

    let (mut lo, mut hi, sign_lo) = match find_bracket(k1, k2, unit, &gap_at)? {
        Bracket::SignChange { lo, hi, sign_lo } => (lo, hi, sign_lo),
        Bracket::ExactRoot(root) => {
            let midpoint = root.to_f64();
            return Ok(CrossoverResult {
                k_pair: (k1, k2),
                bracket: (root.clone(), root),
                midpoint,
                iterations: 0,
            });
        }
    };

    let mut iterations = 0u32;
    let two = ExactRational::from_integer(2);
    while (&hi - &lo) > *tol {
        let mid = (&lo + &hi) / &two;
        let s = sign(&gap_at(&mid));
        iterations += 1;
        if s == 0 {
            lo = mid.clone();
            hi = mid;
            break;
        }
        // Replacing lo keeps its sign, so sign_lo never changes.
        if s == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let midpoint = ((&lo + &hi) / two).to_f64();
    Ok(CrossoverResult {
        k_pair: (k1, k2),
        bracket: (lo, hi),
        midpoint,
        iterations,
    })
}

enum Bracket {
    SignChange {
        lo: ExactRational,
        hi: ExactRational,
        sign_lo: i8,
    },
    ExactRoot(ExactRational),
}

fn find_bracket(
    k1: u64,
    k2: u64,
    unit: u64,
    gap_at: &dyn Fn(&ExactRational) -> ExactRational,
) -> Result<Bracket> {
    if (k1, k2, unit) == (1, 2, 6) {
        let lo = ExactRational::new(1, 6).expect("nonzero");
        let hi = ExactRational::new(1, 4).expect("nonzero");
        let s_lo = sign(&gap_at(&lo));
        let s_hi = sign(&gap_at(&hi));
        if s_lo != 0 && s_hi != 0 && s_lo != s_hi {
            return Ok(Bracket::SignChange {
                lo,
                hi,
                sign_lo: s_lo,
            });
        }
    }
    // Coarse certified scan over p = i/64.
    let mut previous: Option<(ExactRational, i8)> = None;
    for i in 1..64u64 {
        let x = ExactRational::new(i, 64).expect("nonzero");
        let s = sign(&gap_at(&x));
        if s == 0 {
            return Ok(Bracket::ExactRoot(x));
        }
        if let Some((prev_x, prev_s)) = &previous {
            if *prev_s != s {
                return Ok(Bracket::SignChange {
                    lo: prev_x.clone(),
                    hi: x,
                    sign_lo: *prev_s,
                });
            }
        }
        previous = Some((x, s));
    }
    Err(Error::NoSignChange { k1, k2, unit })
}

/// One ranked grid point: the exact tails for `k = 1..=k_max` and the
/// thresholds sorted from most to least probable (ties broken by smaller k).
#[derive(Clone, Debug, Serialize)]
pub struct OrderingRow {
    pub p: Probability,
    pub tails: Vec<Probability>,
    pub ranking: Vec<u64>,
}

/// Ranks the family's wagers at every grid probability, exactly.
pub fn ordering_table(family: &PepysFamily, p_grid: &[Probability]) -> Vec<OrderingRow> {
    p_grid
        .iter()
        .map(|p| {
            let scoped = PepysFamily {
                dice_per_unit: family.dice_per_unit,
                k_max: family.k_max,
                success_prob: p.clone(),
            };
            let tails = pepys_sequence(&scoped);
            let mut ranking: Vec<u64> = (1..=family.k_max).collect();
            ranking.sort_by(|a, b| {
                let ta = &tails[(a - 1) as usize];
                let tb = &tails[(b - 1) as usize];
                tb.cmp(ta).then(a.cmp(b))
            });
            OrderingRow {
                p: p.clone(),
                tails,
                ranking,
            }
        })
        .collect()
}
