use alloc::string::String;
use core::fmt;

/// Errors raised by the exact-arithmetic engine and the analyses built on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidArgument(String),
    Parse(String),
    /// The polynomial has no real root in the search window.
    NoRoot,
    /// More than one real root in the search window and no hint to pick one.
    AmbiguousRoot { count: usize },
    /// Irreducibility of the defining polynomial could not be certified.
    Uncertified(String),
    /// Interval refinement hit the precision limit before the sign was known.
    UndecidableComparison,
    PrecisionExceeded { limit: u32 },
    FieldMismatch,
    DivisionByZero,
    Domain(String),
    Range(String),
    Hypothesis(String),
    BranchBudget { iterate: usize, max_iterate: usize },
    Classification(String),
    NotMarkov(String),
    WrongRegime(String),
    Certificate(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(m) => write!(f, "invalid argument: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::NoRoot => write!(f, "polynomial has no real root in the search window (default (1, 2))"),
            Error::AmbiguousRoot { count } => {
                write!(f, "polynomial has {count} real roots in the search window; supply a hint")
            }
            Error::Uncertified(m) => write!(f, "could not certify irreducibility: {m}"),
            Error::UndecidableComparison => {
                write!(f, "comparison undecided at the precision limit (field misconfigured?)")
            }
            Error::PrecisionExceeded { limit } => {
                write!(f, "requested width is below 2^-{limit}")
            }
            Error::FieldMismatch => write!(f, "elements belong to different fields"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Range(m) => write!(f, "range error: {m}"),
            Error::Hypothesis(m) => write!(f, "hypothesis violated: {m}"),
            Error::BranchBudget { iterate, max_iterate } => {
                write!(f, "iterate {iterate} exceeds the branch budget (max iterate {max_iterate})")
            }
            Error::Classification(m) => write!(f, "classification error: {m}"),
            Error::NotMarkov(m) => write!(f, "not a Markov partition: {m}"),
            Error::WrongRegime(m) => write!(f, "wrong regime: {m}"),
            Error::Certificate(m) => write!(f, "certificate failure: {m}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
