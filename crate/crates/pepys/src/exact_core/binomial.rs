//! Exact binomial coefficients, pmf, tail, and cdf.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::rational::{ExactRational, Probability};

fn exponent(e: u64) -> u32 {
    u32::try_from(e).expect("trial count exceeds the supported range")
}

/// `C(n, k)` by the multiplicative rule; every intermediate division is exact.
/// Returns 0 when `k > n`.
pub fn binom_coeff(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 0..k {
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}

/// Exact `P(X = k)` for `X ~ Binomial(n, p)`: `C(n,k) * p^k * (1-p)^(n-k)`.
/// Returns exact 0 when `k > n`.
pub fn binom_pmf(n: u64, k: u64, p: &Probability) -> Probability {
    if k > n {
        return Probability::zero();
    }
    let coeff = ExactRational::from_integer(BigInt::from(binom_coeff(n, k)));
    let succ = p.value().pow(exponent(k));
    let fail = p.complement().value().pow(exponent(n - k));
    Probability::new(coeff * succ * fail).expect("pmf is within [0, 1]")
}

/// Exact upper tail `P(X >= k)`, computed as the literal sum of pmf terms
/// from `k` up to `n`. Returns exact 1 for `k = 0` and exact 0 for `k > n`.
pub fn binom_tail(n: u64, k: u64, p: &Probability) -> Probability {
    if k == 0 {
        return Probability::one();
    }
    if k > n {
        return Probability::zero();
    }
    if p.is_zero() {
        return Probability::zero();
    }
    if p.is_one() {
        return Probability::one();
    }
    // pmf(j+1) = pmf(j) * (n-j)/(j+1) * p/(1-p), exact at every step.
    let step = p.value() / p.complement().value();
    let mut term = binom_pmf(n, k, p).into_value();
    let mut sum = term.clone();
    for j in k..n {
        term = term * ExactRational::new(n - j, j + 1).expect("j < n") * &step;
        sum = sum + &term;
    }
    Probability::new(sum).expect("tail is within [0, 1]")
}

/// Exact lower tail `P(X <= k)`, the literal sum of pmf terms from 0 to `k`.
/// Returns exact 0 for `k < 0` and exact 1 for `k >= n`.
pub fn binom_cdf(n: u64, k: i64, p: &Probability) -> Probability {
    if k < 0 {
        return Probability::zero();
    }
    let k = k as u64;
    if k >= n {
        return Probability::one();
    }
    if p.is_zero() {
        return Probability::one();
    }
    if p.is_one() {
        return Probability::zero();
    }
    let step = p.value() / p.complement().value();
    let mut term = p.complement().value().pow(exponent(n));
    let mut sum = term.clone();
    for j in 0..k {
        term = term * ExactRational::new(n - j, j + 1).expect("j < n") * &step;
        sum = sum + &term;
    }
    Probability::new(sum).expect("cdf is within [0, 1]")
}

/// The full exact pmf row `[P(X = 0), ..., P(X = n)]`, shared by the scans
/// for medians and modes.
pub(crate) fn pmf_row(n: u64, p: &Probability) -> Vec<ExactRational> {
    let len = (n + 1) as usize;
    if p.is_zero() {
        let mut row = vec![ExactRational::zero(); len];
        row[0] = ExactRational::one();
        return row;
    }
    if p.is_one() {
        let mut row = vec![ExactRational::zero(); len];
        row[len - 1] = ExactRational::one();
        return row;
    }
    let step = p.value() / p.complement().value();
    let mut row = Vec::with_capacity(len);
    let mut term = p.complement().value().pow(exponent(n));
    row.push(term.clone());
    for j in 0..n {
        term = term * ExactRational::new(n - j, j + 1).expect("j < n") * &step;
        row.push(term.clone());
    }
    row
}
