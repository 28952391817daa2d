//! Command-line interface: every library operation behind subcommands, with
//! plain, JSON, and CSV output. Plain output is a projection of the JSON
//! report; exact fractions always serialize as "a/b" strings.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::str::FromStr;

use serde_json::{json, Value};

use pepys::approx::approx_report;
use pepys::error::Error;
use pepys::exact_core::{
    binom_tail, brute_force_count_with_cap, DiceSpace, ExactRational, Probability, Wager,
    DEFAULT_ENUM_CAP,
};
use pepys::median_mode::{central_summary, integer_mean_tails};
use pepys::newton_argument::{decompose_argument, monte_carlo_decomposition, SimConfig};
use pepys::ordering::{
    crossover_probability, is_strictly_decreasing, ordering_table, pepys_sequence, PepysFamily,
};

const USAGE: &str = "\
pepys - exact-arithmetic calculator for the Newton-Pepys dice problem

Usage: pepys <command> [--flag value ...]

Commands:
  solve      Exact P(X >= threshold) for one set of dice
               --dice N --threshold K [--prob a/b] [--digits D]
  sequence   The family P(X >= k) with N = unit*k dice, k = 1..kmax
               [--unit R] [--kmax K] [--prob a/b | --grid p1,p2,...] [--digits D]
  approx     Approximation chain vs the exact tail (integer mean only)
               --dice N [--prob a/b]
  median     Exact mean, median, mode(s), and the mean-median gap
               --dice N [--prob a/b]
  crossover  Certified bisection for the probability where two wagers swap
               [--k1 A] [--k2 B] [--unit R] [--tol a/b]
  argument   Exact six- vs twelve-dice win decomposition
               [--prob a/b] [--digits D]
  simulate   Seeded, reproducible Monte Carlo check of the decomposition
               [--prob a/b] [--trials T] [--seed S]
  oracle     Brute-force enumeration over a complete dice space
               --dice N --faces F --success-faces S --threshold K
               [--enum-cap C] [--digits D]

Common flags:
  --format plain|json|csv   output format            (default plain)
  --digits D                decimal digits, D >= 1   (default 3)
  --prob a/b                success probability      (default 1/6)

Environment:
  PEPYS_ENUM_CAP   overrides the default enumeration cap (10000000);
                   the --enum-cap flag overrides both.

Exit codes: 0 success, 2 usage error, 3 domain error.";

enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Domain(err)
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage_err(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Plain,
    Json,
    Csv,
}

/// One finished invocation: the JSON pieces plus the plain and CSV
/// projections of the same values.
struct Report {
    command: &'static str,
    inputs: Value,
    results: Value,
    plain: String,
    csv: String,
}

impl Report {
    fn emit(&self, format: OutputFormat) {
        match format {
            OutputFormat::Plain => println!("{}", self.plain),
            OutputFormat::Json => {
                let doc = json!({
                    "command": self.command,
                    "inputs": self.inputs,
                    "results": self.results,
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("valid json"));
            }
            OutputFormat::Csv => print!("{}", self.csv),
        }
    }
}

struct Flags {
    values: BTreeMap<String, String>,
}

impl Flags {
    fn parse(args: &[String], allowed: &[&str]) -> CliResult<Self> {
        let mut values = BTreeMap::new();
        let mut iter = args.iter().peekable();
        while let Some(arg) = iter.next() {
            let Some(stripped) = arg.strip_prefix("--") else {
                return Err(usage_err(format!("unexpected argument {arg:?}")));
            };
            let (key, value) = match stripped.split_once('=') {
                Some((key, value)) => (key.to_string(), value.to_string()),
                None => {
                    let value = iter
                        .next()
                        .ok_or_else(|| usage_err(format!("flag --{stripped} needs a value")))?;
                    (stripped.to_string(), value.clone())
                }
            };
            if !allowed.contains(&key.as_str()) {
                return Err(usage_err(format!("unknown flag --{key} for this command")));
            }
            if values.insert(key.clone(), value).is_some() {
                return Err(usage_err(format!("flag --{key} given twice")));
            }
        }
        Ok(Self { values })
    }

    fn str(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn u64(&self, key: &str) -> CliResult<Option<u64>> {
        self.str(key)
            .map(|raw| {
                raw.parse::<u64>().map_err(|_| {
                    usage_err(format!("--{key} expects a non-negative integer, got {raw:?}"))
                })
            })
            .transpose()
    }

    fn u64_or(&self, key: &str, default: u64) -> CliResult<u64> {
        Ok(self.u64(key)?.unwrap_or(default))
    }

    fn require_u64(&self, key: &str) -> CliResult<u64> {
        self.u64(key)?
            .ok_or_else(|| usage_err(format!("missing required flag --{key}")))
    }

    fn positive_u64(&self, key: &str, default: u64) -> CliResult<u64> {
        let value = self.u64_or(key, default)?;
        if value == 0 {
            return Err(usage_err(format!("--{key} must be at least 1")));
        }
        Ok(value)
    }

    fn digits(&self) -> CliResult<u32> {
        match self.str("digits") {
            None => Ok(3),
            Some(raw) => {
                let digits: u32 = raw
                    .parse()
                    .map_err(|_| usage_err(format!("--digits expects an integer, got {raw:?}")))?;
                if digits == 0 {
                    return Err(usage_err("--digits must be at least 1"));
                }
                Ok(digits)
            }
        }
    }

    fn prob_or_default(&self) -> CliResult<Probability> {
        match self.str("prob") {
            None => Ok(Probability::from_ratio(1, 6).expect("1/6 is a probability")),
            Some(raw) => {
                Probability::from_str(raw).map_err(|err| usage_err(format!("--prob: {err}")))
            }
        }
    }

    fn rational(&self, key: &str) -> CliResult<Option<ExactRational>> {
        self.str(key)
            .map(|raw| {
                ExactRational::from_str(raw).map_err(|err| usage_err(format!("--{key}: {err}")))
            })
            .transpose()
    }

    fn format(&self) -> CliResult<OutputFormat> {
        match self.str("format") {
            None | Some("plain") => Ok(OutputFormat::Plain),
            Some("json") => Ok(OutputFormat::Json),
            Some("csv") => Ok(OutputFormat::Csv),
            Some(other) => Err(usage_err(format!(
                "--format expects plain, json, or csv, got {other:?}"
            ))),
        }
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `pepys --help` for usage");
            ExitCode::from(2)
        }
        Err(CliError::Domain(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
    }
}

fn run(args: &[String]) -> CliResult<()> {
    let Some(command) = args.first() else {
        return Err(usage_err("missing command"));
    };
    if command == "--help" || command == "-h" || command == "help" {
        println!("{USAGE}");
        return Ok(());
    }
    let rest = &args[1..];
    let (report, format) = match command.as_str() {
        "solve" => cmd_solve(rest)?,
        "sequence" => cmd_sequence(rest)?,
        "approx" => cmd_approx(rest)?,
        "median" => cmd_median(rest)?,
        "crossover" => cmd_crossover(rest)?,
        "argument" => cmd_argument(rest)?,
        "simulate" => cmd_simulate(rest)?,
        "oracle" => cmd_oracle(rest)?,
        other => return Err(usage_err(format!("unknown command {other:?}"))),
    };
    report.emit(format);
    Ok(())
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn cmd_solve(args: &[String]) -> CliResult<(Report, OutputFormat)> {
    let flags = Flags::parse(args, &["dice", "threshold", "prob", "digits", "format"])?;
    let dice = flags.require_u64("dice")?;
    if dice == 0 {
        return Err(usage_err("--dice must be at least 1"));
    }
    let threshold = flags.require_u64("threshold")?;
    let prob = flags.prob_or_default()?;
    let digits = flags.digits()?;
    let format = flags.format()?;

    let wager = Wager::new(dice, threshold, prob.clone())?;
    let tail = wager.probability();
    let decimal = tail.render_decimal(digits);
    let mean = pepys::median_mode::binom_mean(dice, &prob);

    let mut plain = format!(
        "P(X >= {threshold} | {dice} dice, p = {prob}) = {tail}\ndecimal ({digits} digits) = {decimal}\n"
    );
    let integer_mean_check = if mean.is_integer() {
        let (upper, lower) = integer_mean_tails(dice, &prob)?;
        let half = Probability::from_ratio(1, 2).expect("1/2");
        let upper_ok = upper >= half;
        let lower_ok = lower >= half;
        plain.push_str(&format!(
            "integer mean Np = {mean}:\n  P(X >= {mean}) = {upper} >= 1/2: {}\n  P(X <= {mean}) = {lower} >= 1/2: {}\n",
            yes_no(upper_ok),
            yes_no(lower_ok),
        ));
        let upper_decimal = upper.render_decimal(digits);
        let lower_decimal = lower.render_decimal(digits);
        json!({
            "mean": mean.clone(),
            "upper_tail": upper,
            "upper_tail_decimal": upper_decimal,
            "upper_ge_half": upper_ok,
            "lower_tail": lower,
            "lower_tail_decimal": lower_decimal,
            "lower_ge_half": lower_ok,
        })
    } else {
        Value::Null
    };

    let csv = format!(
        "dice,threshold,prob,probability,decimal\n{dice},{threshold},{prob},{tail},{decimal}\n"
    );
    let mean_is_integer = mean.is_integer();
    let report = Report {
        command: "solve",
        inputs: json!({
            "dice": dice,
            "threshold": threshold,
            "prob": prob,
            "digits": digits,
        }),
        results: json!({
            "probability": tail,
            "decimal": decimal,
            "mean": mean,
            "mean_is_integer": mean_is_integer,
            "integer_mean_check": integer_mean_check,
        }),
        plain,
        csv,
    };
    Ok((report, format))
}

fn cmd_sequence(args: &[String]) -> CliResult<(Report, OutputFormat)> {
    let flags = Flags::parse(args, &["unit", "kmax", "prob", "grid", "digits", "format"])?;
    let unit = flags.positive_u64("unit", 6)?;
    let k_max = flags.positive_u64("kmax", 3)?;
    let digits = flags.digits()?;
    let format = flags.format()?;

    if let Some(grid_raw) = flags.str("grid") {
        if flags.str("prob").is_some() {
            return Err(usage_err("--grid and --prob are mutually exclusive"));
        }
        let grid: Vec<Probability> = grid_raw
            .split(',')
            .map(|piece| {
                Probability::from_str(piece).map_err(|err| usage_err(format!("--grid: {err}")))
            })
            .collect::<CliResult<_>>()?;
        let family = PepysFamily::new(unit, k_max, grid[0].clone())?;
        let rows = ordering_table(&family, &grid);

        let mut plain = format!("ranking of P(X >= k | {unit}k dice) for k = 1..{k_max}\n");
        let mut csv = String::from("p,k,dice,threshold,probability,decimal,rank\n");
        for row in &rows {
            let ranking_text = row
                .ranking
                .iter()
                .map(|k| format!("k={k}"))
                .collect::<Vec<_>>()
                .join(" > ");
            plain.push_str(&format!("p = {}: {ranking_text}\n", row.p));
            for (idx, tail) in row.tails.iter().enumerate() {
                let k = idx as u64 + 1;
                let rank = row.ranking.iter().position(|r| *r == k).expect("k ranked") + 1;
                csv.push_str(&format!(
                    "{},{k},{dice},{k},{tail},{decimal},{rank}\n",
                    row.p,
                    dice = unit * k,
                    decimal = tail.render_decimal(digits),
                ));
            }
        }
        let report = Report {
            command: "sequence",
            inputs: json!({
                "unit": unit,
                "k_max": k_max,
                "grid": grid,
                "digits": digits,
            }),
            results: json!({ "grid": rows }),
            plain,
            csv,
        };
        return Ok((report, format));
    }

    let prob = flags.prob_or_default()?;
    let family = PepysFamily::new(unit, k_max, prob.clone())?;
    let seq = pepys_sequence(&family);
    let ranking = ordering_table(&family, std::slice::from_ref(&prob))
        .remove(0)
        .ranking;
    let decreasing = if seq.len() >= 2 {
        Value::Bool(is_strictly_decreasing(&seq)?)
    } else {
        Value::Null
    };

    let mut plain = format!("P(X >= k | {unit}k dice, p = {prob}) for k = 1..{k_max}\n");
    let mut terms = Vec::new();
    let mut csv = String::from("k,dice,threshold,probability,decimal\n");
    for (idx, tail) in seq.iter().enumerate() {
        let k = idx as u64 + 1;
        let dice = unit * k;
        let decimal = tail.render_decimal(digits);
        plain.push_str(&format!("  k = {k} ({dice} dice): {tail} = {decimal}\n"));
        csv.push_str(&format!("{k},{dice},{k},{tail},{decimal}\n"));
        terms.push(json!({
            "k": k,
            "dice": dice,
            "probability": tail,
            "decimal": decimal,
        }));
    }
    let ranking_text = ranking
        .iter()
        .map(|k| format!("k={k}"))
        .collect::<Vec<_>>()
        .join(" > ");
    plain.push_str(&format!("ranking: {ranking_text}\n"));
    match &decreasing {
        Value::Bool(flag) => {
            plain.push_str(&format!("strictly decreasing: {}\n", yes_no(*flag)));
        }
        _ => plain.push_str("strictly decreasing: n/a (single term)\n"),
    }

    let report = Report {
        command: "sequence",
        inputs: json!({
            "unit": unit,
            "k_max": k_max,
            "prob": prob,
            "digits": digits,
        }),
        results: json!({
            "terms": terms,
            "ranking": ranking,
            "strictly_decreasing": decreasing,
        }),
        plain,
        csv,
    };
    Ok((report, format))
}

fn cmd_approx(args: &[String]) -> CliResult<(Report, OutputFormat)> {
    let flags = Flags::parse(args, &["dice", "prob", "format"])?;
    let dice = flags.require_u64("dice")?;
    if dice == 0 {
        return Err(usage_err("--dice must be at least 1"));
    }
    let prob = flags.prob_or_default()?;
    let format = flags.format()?;

    let report_data = approx_report(dice, &prob)?;
    let exact_2dp = report_data.exact_tail.render_decimal(2);
    let chained_2dp = format!("{:.2}", report_data.chained);

    let plain = format!(
        "approximations of P(X >= Np | {dice} dice, p = {prob})\n\
         exact tail     = {} = {}\n\
         modal bump     = {:.6}  (1/2 + 0.4*P(X = Np); abs error {:.6})\n\
         modal estimate = {:.6}  (1/sqrt(2*pi*Np*(1-p)); exact modal {:.6})\n\
         chained        = {:.6}  (1/2 + 0.4*1.07/sqrt(N); abs error {:.6})\n\
         chained at 2 digits = {chained_2dp}, exact at 2 digits = {exact_2dp}\n",
        report_data.exact_tail,
        report_data.exact_tail.render_decimal(4),
        report_data.modal_tail,
        report_data.modal_tail_abs_error,
        report_data.demoivre_modal,
        report_data.exact_modal.to_f64(),
        report_data.chained,
        report_data.chained_abs_error,
    );
    let csv = format!(
        "dice,prob,exact_tail,exact_decimal,modal_tail,demoivre_modal,chained,chained_abs_error\n\
         {dice},{prob},{},{},{},{},{},{}\n",
        report_data.exact_tail,
        report_data.exact_tail.render_decimal(4),
        report_data.modal_tail,
        report_data.demoivre_modal,
        report_data.chained,
        report_data.chained_abs_error,
    );
    let mut results = serde_json::to_value(&report_data).expect("report serializes");
    results["chained_2dp"] = Value::String(chained_2dp);
    results["exact_2dp"] = Value::String(exact_2dp);

    let report = Report {
        command: "approx",
        inputs: json!({ "dice": dice, "prob": prob }),
        results,
        plain,
        csv,
    };
    Ok((report, format))
}

fn cmd_median(args: &[String]) -> CliResult<(Report, OutputFormat)> {
    let flags = Flags::parse(args, &["dice", "prob", "digits", "format"])?;
    let dice = flags.require_u64("dice")?;
    if dice == 0 {
        return Err(usage_err("--dice must be at least 1"));
    }
    let prob = flags.prob_or_default()?;
    let digits = flags.digits()?;
    let format = flags.format()?;

    let summary = central_summary(dice, &prob);
    let modes_text = summary
        .modes
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(";");
    let plain = format!(
        "binomial({dice}, {prob}) central summary\n\
         mean    = {} = {}\n\
         median  = {}\n\
         mode(s) = {:?}\n\
         |mean - median| = {} = {}\n\
         gap below bound (7/10 exactly, ln 2 in float): {}\n",
        summary.mean,
        summary.mean.render_decimal(digits),
        summary.median,
        summary.modes,
        summary.mean_median_gap,
        summary.mean_median_gap.render_decimal(digits),
        yes_no(summary.gap_within_bound()),
    );
    let csv = format!(
        "dice,prob,mean,median,modes,gap,gap_decimal\n{dice},{prob},{},{},{modes_text},{},{}\n",
        summary.mean,
        summary.median,
        summary.mean_median_gap,
        summary.mean_median_gap.render_decimal(digits),
    );
    let mut results = serde_json::to_value(&summary).expect("summary serializes");
    results["gap_decimal"] = Value::String(summary.mean_median_gap.render_decimal(digits));
    results["gap_within_bound"] = Value::Bool(summary.gap_within_bound());

    let report = Report {
        command: "median",
        inputs: json!({ "dice": dice, "prob": prob, "digits": digits }),
        results,
        plain,
        csv,
    };
    Ok((report, format))
}

fn cmd_crossover(args: &[String]) -> CliResult<(Report, OutputFormat)> {
    let flags = Flags::parse(args, &["k1", "k2", "unit", "tol", "format"])?;
    let k1 = flags.positive_u64("k1", 1)?;
    let k2 = flags.positive_u64("k2", 2)?;
    let unit = flags.positive_u64("unit", 6)?;
    let tol = match flags.rational("tol")? {
        Some(tol) => tol,
        None => ExactRational::new(1, 1_000_000_000u64).expect("nonzero"),
    };
    let format = flags.format()?;

    let result = crossover_probability(k1, k2, unit, &tol)?;
    let (lo, hi) = result.bracket.clone();
    let plain = format!(
        "crossover of P(X >= {k1} | {n1} dice) vs P(X >= {k2} | {n2} dice)\n\
         bracket = [{lo}, {hi}]\n\
         bracket decimals = [{}, {}]\n\
         midpoint ~= {}\n\
         iterations = {}\n",
        lo.render_decimal(10),
        hi.render_decimal(10),
        result.midpoint,
        result.iterations,
        n1 = unit * k1,
        n2 = unit * k2,
    );
    let csv = format!(
        "k1,k2,unit,bracket_low,bracket_high,midpoint,iterations\n\
         {k1},{k2},{unit},{lo},{hi},{},{}\n",
        result.midpoint, result.iterations,
    );
    let mut results = serde_json::to_value(&result).expect("crossover serializes");
    results["bracket_low_decimal"] = Value::String(lo.render_decimal(10));
    results["bracket_high_decimal"] = Value::String(hi.render_decimal(10));

    let report = Report {
        command: "crossover",
        inputs: json!({ "k1": k1, "k2": k2, "unit": unit, "tol": tol }),
        results,
        plain,
        csv,
    };
    Ok((report, format))
}

fn cmd_argument(args: &[String]) -> CliResult<(Report, OutputFormat)> {
    let flags = Flags::parse(args, &["prob", "digits", "format"])?;
    let prob = flags.prob_or_default()?;
    let digits = flags.digits()?;
    let format = flags.format()?;

    let d = decompose_argument(&prob)?;
    let multi_share_rounded = d.peter_multi_share.render_decimal(2);
    let lopsided_share_rounded = d.james_lopsided_share.render_decimal(2);
    let plain = format!(
        "win decomposition at p = {prob} (six dice vs twelve dice)\n\
         P(X >= 1 | 6 dice)  = {} = {}\n\
         P(X >= 2 | 6 dice)  = {} = {}\n\
         multi-success share of six-dice wins   = {} ~= {multi_share_rounded}\n\
         P(X >= 2 | 12 dice) = {} = {}\n\
         lopsided wins (one half >= 2, other 0) = {} = {}\n\
         lopsided share of twelve-dice wins     = {} ~= {lopsided_share_rounded}\n",
        d.peter_win,
        d.peter_win.render_decimal(digits),
        d.peter_multi,
        d.peter_multi.render_decimal(digits),
        d.peter_multi_share,
        d.james_win,
        d.james_win.render_decimal(digits),
        d.james_lopsided,
        d.james_lopsided.render_decimal(digits),
        d.james_lopsided_share,
    );
    let csv = format!(
        "prob,peter_win,peter_multi,peter_multi_share,james_win,james_lopsided,james_lopsided_share\n\
         {prob},{},{},{},{},{},{}\n",
        d.peter_win, d.peter_multi, d.peter_multi_share, d.james_win, d.james_lopsided,
        d.james_lopsided_share,
    );
    let mut results = serde_json::to_value(&d).expect("decomposition serializes");
    results["peter_multi_share_rounded"] = Value::String(multi_share_rounded);
    results["james_lopsided_share_rounded"] = Value::String(lopsided_share_rounded);

    let report = Report {
        command: "argument",
        inputs: json!({ "prob": prob, "digits": digits }),
        results,
        plain,
        csv,
    };
    Ok((report, format))
}

fn cmd_simulate(args: &[String]) -> CliResult<(Report, OutputFormat)> {
    let flags = Flags::parse(args, &["prob", "trials", "seed", "format"])?;
    let prob = flags.prob_or_default()?;
    let trials = flags.positive_u64("trials", 100_000)?;
    let seed = flags.u64_or("seed", 0)?;
    let format = flags.format()?;

    let cfg = SimConfig::with_default_generator(trials, seed)?;
    let report_data = monte_carlo_decomposition(&prob, &cfg);
    // Exact references are unavailable at the degenerate probabilities.
    let exact = decompose_argument(&prob).ok();

    let exact_values: [(&str, Option<f64>); 4] = match &exact {
        Some(d) => [
            ("peter_win", Some(d.peter_win.to_f64())),
            ("peter_multi_share", Some(d.peter_multi_share.to_f64())),
            ("james_win", Some(d.james_win.to_f64())),
            ("james_lopsided_share", Some(d.james_lopsided_share.to_f64())),
        ],
        None => [
            ("peter_win", None),
            ("peter_multi_share", None),
            ("james_win", None),
            ("james_lopsided_share", None),
        ],
    };
    let estimates = [
        &report_data.peter_win,
        &report_data.peter_multi_share,
        &report_data.james_win,
        &report_data.james_lopsided_share,
    ];

    let mut plain = format!(
        "monte carlo decomposition check: {trials} trials, seed {seed}, generator {}\n",
        report_data.generator_id
    );
    let mut csv = String::from("quantity,estimate,std_error,exact\n");
    for ((name, exact_value), estimate) in exact_values.iter().zip(estimates) {
        let exact_text = exact_value.map_or(String::from("n/a"), |v| format!("{v:.6}"));
        plain.push_str(&format!(
            "  {name:<22} = {:.6} +- {:.6}   exact {exact_text}\n",
            estimate.value, estimate.std_error
        ));
        csv.push_str(&format!(
            "{name},{},{},{exact_text}\n",
            estimate.value, estimate.std_error
        ));
    }

    let exact_json = match &exact {
        Some(d) => serde_json::to_value(d).expect("decomposition serializes"),
        None => Value::Null,
    };
    let report = Report {
        command: "simulate",
        inputs: json!({ "prob": prob, "trials": trials, "seed": seed }),
        results: json!({
            "report": report_data,
            "exact": exact_json,
        }),
        plain,
        csv,
    };
    Ok((report, format))
}

fn enumeration_cap(flags: &Flags) -> CliResult<u64> {
    if let Some(cap) = flags.u64("enum-cap")? {
        return Ok(cap);
    }
    match std::env::var("PEPYS_ENUM_CAP") {
        Ok(raw) => raw
            .parse::<u64>()
            .map_err(|_| usage_err(format!("PEPYS_ENUM_CAP expects an integer, got {raw:?}"))),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn cmd_oracle(args: &[String]) -> CliResult<(Report, OutputFormat)> {
    let flags = Flags::parse(
        args,
        &["dice", "faces", "success-faces", "threshold", "enum-cap", "digits", "format"],
    )?;
    let dice = flags.require_u64("dice")?;
    let faces = flags.require_u64("faces")?;
    let success_faces = flags.require_u64("success-faces")?;
    let threshold = flags.require_u64("threshold")?;
    let cap = enumeration_cap(&flags)?;
    let digits = flags.digits()?;
    let format = flags.format()?;

    let space = DiceSpace::new(dice, faces, success_faces)?;
    let (matching, total) = brute_force_count_with_cap(&space, threshold, cap)?;
    let probability = Probability::from_ratio(matching, total).expect("count <= total");
    let decimal = probability.render_decimal(digits);
    let formula = binom_tail(dice, threshold, &space.success_prob());
    let matches_formula = probability == formula;

    let plain = format!(
        "full enumeration: {dice} dice, {faces} faces, {success_faces} success face(s), threshold {threshold}\n\
         outcomes = {total}\n\
         outcomes with >= {threshold} successes = {matching}\n\
         probability = {probability} = {decimal}\n\
         matches binomial formula: {}\n",
        yes_no(matches_formula),
    );
    let csv = format!(
        "dice,faces,success_faces,threshold,outcomes,matching,probability,decimal\n\
         {dice},{faces},{success_faces},{threshold},{total},{matching},{probability},{decimal}\n",
    );
    let report = Report {
        command: "oracle",
        inputs: json!({
            "dice": dice,
            "faces": faces,
            "success_faces": success_faces,
            "threshold": threshold,
            "enum_cap": cap,
            "digits": digits,
        }),
        results: json!({
            "outcomes": total.to_string(),
            "matching": matching,
            "probability": probability,
            "decimal": decimal,
            "matches_formula": matches_formula,
        }),
        plain,
        csv,
    };
    Ok((report, format))
}
