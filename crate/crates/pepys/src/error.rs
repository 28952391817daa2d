//! Crate-wide error type.

use num_bigint::BigUint;

use crate::exact_core::ExactRational;

/// Errors produced by the library's fallible operations.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A rational was constructed with denominator zero.
    ZeroDenominator,
    /// A rational (or probability) could not be parsed from text.
    InvalidRational(String),
    /// A probability value fell outside `[0, 1]`.
    ProbabilityOutOfRange(ExactRational),
    /// A dice space was described with invalid parameters.
    InvalidDiceSpace(String),
    /// Full enumeration was requested for an outcome space larger than the cap.
    EnumerationCapExceeded { outcomes: BigUint, cap: u64 },
    /// An operation requiring an integer mean `n * p` was called with a
    /// fractional one.
    NonIntegerMean { mean: ExactRational },
    /// An operation excludes the degenerate probabilities 0 and 1.
    DegenerateProbability,
    /// A throw sequence of odd length cannot be scored in pairs.
    OddSequenceLength(usize),
    /// A sequence was too short for the requested comparison.
    SequenceTooShort(usize),
    /// No sign change was found when searching for a crossover bracket.
    NoSignChange { k1: u64, k2: u64, unit: u64 },
    /// A struct constructor received an out-of-domain argument.
    InvalidParameter(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "rational denominator must be nonzero"),
            Error::InvalidRational(text) => {
                write!(f, "cannot parse {text:?} as a rational (expected \"a/b\" or an integer)")
            }
            Error::ProbabilityOutOfRange(value) => {
                write!(f, "probability {value} is outside [0, 1]")
            }
            Error::InvalidDiceSpace(reason) => write!(f, "invalid dice space: {reason}"),
            Error::EnumerationCapExceeded { outcomes, cap } => write!(
                f,
                "enumeration of {outcomes} outcomes exceeds the cap of {cap}"
            ),
            Error::NonIntegerMean { mean } => {
                write!(f, "mean {mean} is not an integer")
            }
            Error::DegenerateProbability => {
                write!(f, "probability must be strictly between 0 and 1")
            }
            Error::OddSequenceLength(len) => {
                write!(f, "throw sequence has odd length {len}; pairs require an even count")
            }
            Error::SequenceTooShort(len) => {
                write!(f, "sequence of length {len} is too short to compare (need at least 2)")
            }
            Error::NoSignChange { k1, k2, unit } => write!(
                f,
                "no crossover bracket found for thresholds {k1} vs {k2} with {unit} dice per unit"
            ),
            Error::InvalidParameter(reason) => write!(f, "invalid parameter: {reason}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
