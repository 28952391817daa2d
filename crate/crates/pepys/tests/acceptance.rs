//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Run with `cargo test --test acceptance -- --nocapture` to see them.

use std::str::FromStr;

use num_bigint::BigInt;

use pepys::approx::chained_approx;
use pepys::exact_core::{binom_tail, brute_force_tail, DiceSpace, ExactRational, Probability};
use pepys::median_mode::{binom_mean, binom_median, binom_modes, integer_mean_tails};
use pepys::newton_argument::{decompose_argument, monte_carlo_decomposition, SimConfig};
use pepys::ordering::{crossover_probability, is_strictly_decreasing, pepys_sequence, PepysFamily};

fn prob(text: &str) -> Probability {
    Probability::from_str(text).unwrap()
}

fn rat(text: &str) -> ExactRational {
    ExactRational::from_str(text).unwrap()
}

/// Renders `value` as `numerator/denominator` over the given denominator
/// (the classical presentation over the full outcome count), asserting the
/// scaling is exact.
fn presented_over(value: &ExactRational, denominator: &BigInt) -> String {
    let scaled = value * ExactRational::from_integer(denominator.clone());
    assert!(scaled.is_integer(), "{value} is not a multiple of 1/{denominator}");
    format!("{}/{}", scaled.to_integer(), denominator)
}

#[test]
fn criterion_01_golden_fractions() {
    let sixth = prob("1/6");
    // (dice, threshold, classical string over 6^dice).
    let cases = [
        (6u64, 1u64, "31031/46656"),
        (12, 2, "1346704211/2176782336"),
        (18, 3, "60666401980916/101559956668416"),
    ];
    for (dice, threshold, golden) in cases {
        let tail = binom_tail(dice, threshold, &sixth);
        // Exact value identity (canonical forms are bit-identical).
        assert_eq!(tail.value(), &rat(golden), "value for ({dice}, {threshold})");
        // String-exact in the classical presentation over 6^dice.
        let denominator = BigInt::from(6u32).pow(dice as u32);
        assert_eq!(
            presented_over(tail.value(), &denominator),
            golden,
            "presentation for ({dice}, {threshold})"
        );
    }
    println!("criterion 01: PASS - golden fractions for (6,1), (12,2), (18,3) at p = 1/6");
}

#[test]
fn criterion_02_golden_decimals() {
    let sixth = prob("1/6");
    let cases = [(6u64, 1u64, "0.665"), (12, 2, "0.619"), (18, 3, "0.597")];
    for (dice, threshold, golden) in cases {
        assert_eq!(
            binom_tail(dice, threshold, &sixth).render_decimal(3),
            golden,
            "({dice}, {threshold})"
        );
    }
    println!("criterion 02: PASS - golden decimals 0.665 / 0.619 / 0.597 at 3 digits");
}

#[test]
fn criterion_03_evans_reversal() {
    let quarter = prob("1/4");
    let first = binom_tail(6, 1, &quarter);
    let second = binom_tail(12, 2, &quarter);
    assert_eq!(first.render_decimal(4), "0.8220");
    assert_eq!(second.render_decimal(4), "0.8416");
    assert!(second > first, "the twelve-dice wager must beat the six-dice one at p = 1/4");
    println!("criterion 03: PASS - quarter-weighted dice render 0.8220 < 0.8416 and B > A exactly");
}

#[test]
fn criterion_04_chained_approximation() {
    let sixth = prob("1/6");
    let cases = [(6u64, "0.67"), (12, "0.62"), (18, "0.60")];
    for (dice, golden) in cases {
        let chained = chained_approx(dice);
        assert_eq!(format!("{chained:.2}"), golden, "chained at n = {dice}");
        let exact = binom_tail(dice, dice / 6, &sixth);
        assert_eq!(exact.render_decimal(2), golden, "exact at n = {dice}");
    }
    println!("criterion 04: PASS - chained approximation matches exact values at 2 digits (0.67/0.62/0.60)");
}

#[test]
fn criterion_05_argument_decomposition() {
    let sixth = prob("1/6");
    let d = decompose_argument(&sixth).unwrap();
    assert_eq!(d.peter_multi_share, rat("12281/31031"));
    assert_eq!(d.james_lopsided_share, rat("383781250/1346704211"));
    assert_eq!(d.peter_multi_share.render_decimal(2), "0.40");
    assert_eq!(d.james_lopsided_share.render_decimal(2), "0.28");

    // Independent route: raw power expansions and the two-half convolution,
    // no tail machinery.
    let p = rat("1/6");
    let q = rat("5/6");
    let none = q.pow(6);
    let exactly_one = ExactRational::from_integer(6) * &p * q.pow(5);
    let peter_win = ExactRational::one() - &none;
    let peter_multi = ExactRational::one() - &none - &exactly_one;
    assert_eq!(d.peter_multi_share, &peter_multi / &peter_win);

    // pmf(6, i, 1/6) from scratch for i = 0..=6, then convolve the halves.
    let coeffs = [1u64, 6, 15, 20, 15, 6, 1];
    let half_pmf: Vec<ExactRational> = (0..=6u32)
        .map(|i| ExactRational::from_integer(coeffs[i as usize]) * p.pow(i) * q.pow(6 - i))
        .collect();
    let mut james_win = ExactRational::zero();
    for i in 0..=6usize {
        for j in 0..=6usize {
            if i + j >= 2 {
                james_win = james_win + &half_pmf[i] * &half_pmf[j];
            }
        }
    }
    let lopsided = ExactRational::from_integer(2) * &peter_multi * &none;
    assert_eq!(d.james_lopsided_share, &lopsided / &james_win);

    println!("criterion 05: PASS - shares 12281/31031 (0.40) and 383781250/1346704211 (0.28) match the convolution route");
}

#[test]
fn criterion_06_coincidence_sweep() {
    let grid = ["1/6", "1/4", "1/3", "1/2", "2/3"];
    let half = Probability::from_ratio(1, 2).unwrap();
    let mut checked = 0u32;
    for text in grid {
        let p = prob(text);
        for n in 1..=200u64 {
            let mean = binom_mean(n, &p);
            if !mean.is_integer() {
                continue;
            }
            let m = u64::try_from(mean.to_integer()).unwrap();
            assert_eq!(binom_median(n, &p), m, "median != mean at n={n} p={text}");
            assert!(
                binom_modes(n, &p).contains(&m),
                "mean not among modes at n={n} p={text}"
            );
            let (upper, lower) = integer_mean_tails(n, &p).unwrap();
            assert!(upper >= half, "P(X >= np) < 1/2 at n={n} p={text}");
            assert!(lower >= half, "P(X <= np) < 1/2 at n={n} p={text}");
            checked += 1;
        }
    }
    assert!(checked > 300, "sweep unexpectedly small: {checked}");
    println!("criterion 06: PASS - mean = median = mode and both tails >= 1/2 on {checked} integer-mean cases");
}

#[test]
fn criterion_07_hamza_bound_instances() {
    let bound = rat("7/10");
    let mut checked = 0u32;
    for i in 1..=11u64 {
        let p = Probability::from_ratio(i, 12).unwrap();
        for n in 1..=200u64 {
            let mean = binom_mean(n, &p);
            let median = ExactRational::from_integer(binom_median(n, &p));
            let gap = (mean - median).abs();
            assert!(gap < bound, "gap {gap} >= 7/10 at n={n} p={i}/12");
            checked += 1;
        }
    }
    assert_eq!(checked, 2200);
    println!("criterion 07: PASS - |mean - median| < 7/10 exactly on all {checked} (n, p) pairs");
}

#[test]
fn criterion_08_sequence_monotonicity() {
    let family = PepysFamily::new(6, 20, prob("1/6")).unwrap();
    let seq = pepys_sequence(&family);
    assert_eq!(seq.len(), 20);
    assert!(is_strictly_decreasing(&seq).unwrap());
    println!("criterion 08: PASS - P(X >= k | 6k dice, 1/6) strictly decreasing through k = 20");
}

/// Independent oracle for criterion 9: the crossover probability satisfies
/// `(1-p)^5 * (1 + 11p) = 1`, obtained by reducing the tail difference
/// algebraically. Bisected here with exact rational signs, no library
/// search code involved.
fn polynomial_oracle_midpoint(tol: &ExactRational) -> f64 {
    let value = |p: &ExactRational| -> ExactRational {
        let one_minus = ExactRational::one() - p;
        one_minus.pow(5) * (ExactRational::one() + ExactRational::from_integer(11) * p)
            - ExactRational::one()
    };
    let mut lo = rat("1/6");
    let mut hi = rat("1/4");
    let sign_lo = !value(&lo).is_negative();
    assert!(sign_lo, "oracle expects positive value at 1/6");
    assert!(value(&hi).is_negative(), "oracle expects negative value at 1/4");
    let two = ExactRational::from_integer(2);
    while (&hi - &lo) > *tol {
        let mid = (&lo + &hi) / &two;
        let v = value(&mid);
        if v.is_zero() {
            return mid.to_f64();
        }
        if v.is_negative() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    ((lo + hi) / two).to_f64()
}

#[test]
fn criterion_09_crossover_oracle_agreement() {
    let tol = ExactRational::new(1, 1_000_000_000u64).unwrap();
    let result = crossover_probability(1, 2, 6, &tol).unwrap();
    let oracle = polynomial_oracle_midpoint(&tol);
    assert!(
        (result.midpoint - oracle).abs() <= 1e-9,
        "bisection midpoint {} vs polynomial oracle {oracle}",
        result.midpoint
    );
    println!(
        "criterion 09: PASS - crossover midpoint {:.10} agrees with the polynomial root within 1e-9",
        result.midpoint
    );
}

#[test]
fn criterion_10_enumeration_equivalence() {
    let mut checked = 0u32;
    for n in 1..=8u64 {
        for faces in 2..=6u64 {
            for success_faces in 1..faces {
                let space = DiceSpace::new(n, faces, success_faces).unwrap();
                let p = space.success_prob();
                for threshold in 0..=n {
                    let enumerated = brute_force_tail(&space, threshold).unwrap();
                    let formula = binom_tail(n, threshold, &p);
                    assert_eq!(
                        enumerated, formula,
                        "n={n} faces={faces} s={success_faces} k={threshold}"
                    );
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 15 * (2..=9u32).sum::<u32>());
    println!("criterion 10: PASS - brute-force enumeration equals the formula on all {checked} cases");
}

#[test]
fn criterion_11_monte_carlo_sanity() {
    let p = prob("1/6");
    let cfg = SimConfig::with_default_generator(1_000_000, 20060).unwrap();
    let report = monte_carlo_decomposition(&p, &cfg);
    let rerun = monte_carlo_decomposition(&p, &cfg);
    assert_eq!(report, rerun, "rerun with the same config must be bit-identical");

    let exact = decompose_argument(&p).unwrap();
    let checks = [
        ("peter_win", &report.peter_win, exact.peter_win.to_f64()),
        ("peter_multi_share", &report.peter_multi_share, exact.peter_multi_share.to_f64()),
        ("james_win", &report.james_win, exact.james_win.to_f64()),
        (
            "james_lopsided_share",
            &report.james_lopsided_share,
            exact.james_lopsided_share.to_f64(),
        ),
    ];
    for (name, estimate, truth) in checks {
        let sigma = (estimate.value - truth).abs() / estimate.std_error;
        assert!(
            sigma <= 4.0,
            "{name}: estimate {} is {sigma:.2} standard errors from exact {truth}",
            estimate.value
        );
    }
    println!("criterion 11: PASS - 10^6-trial estimates within 4 standard errors, rerun bit-identical");
}
