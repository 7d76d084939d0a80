//! Crate-wide error type.
//!
//! Constructors validate their inputs eagerly and return [`Error`] on bad
//! data; algorithms may then assume validity and stay panic-free.

use std::fmt;

/// Errors produced by constructors, parsers and the cohomology engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A letter was zero (letters are 1-based positive integers).
    ZeroLetter,
    /// A letter exceeded the alphabet bound for the requested operation.
    LetterOutOfRange { letter: u32, bound: u32 },
    /// A word was not weakly increasing, so it is not a row.
    NotARow(String),
    /// A word was not strictly decreasing, so it is not a column.
    NotAColumn(String),
    /// A list of rows violated the tableau stacking condition.
    NotATableau(String),
    /// Text could not be parsed as a word, tableau or other object.
    Parse(String),
    /// A crystal operator index was outside `1..n`.
    BadCrystalIndex { index: u32, n: u32 },
    /// A braid generator index was 0 or too large for the tuple width.
    BadGenerator { index: usize, width: usize },
    /// The modulus of a prime field was not prime.
    NotPrime(u64),
    /// Two cochains lived over different bases or degrees.
    DegreeMismatch { left: usize, right: usize },
    /// A computation exceeded a configured resource cap.
    ResourceLimit(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroLetter => write!(f, "letters are 1-based; 0 is not a letter"),
            Error::LetterOutOfRange { letter, bound } => {
                write!(f, "letter {letter} is outside the alphabet 1..={bound}")
            }
            Error::NotARow(w) => write!(f, "\"{w}\" is not weakly increasing, so not a row"),
            Error::NotAColumn(w) => {
                write!(f, "\"{w}\" is not strictly decreasing, so not a column")
            }
            Error::NotATableau(why) => write!(f, "rows do not stack into a tableau: {why}"),
            Error::Parse(why) => write!(f, "parse error: {why}"),
            Error::BadCrystalIndex { index, n } => {
                write!(f, "crystal index {index} must satisfy 1 <= i < n = {n}")
            }
            Error::BadGenerator { index, width } => {
                write!(f, "braid generator b_{index} does not act on a width-{width} tuple")
            }
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::ResourceLimit(why) => write!(f, "resource cap exceeded: {why}"),
        }
    }
}

impl std::error::Error for Error {}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
