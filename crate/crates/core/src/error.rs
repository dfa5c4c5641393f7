use std::fmt;

/// Every failure the library can report.
///
/// Each variant carries a stable code (see [`Error::code`]) so front ends can
/// match on failures without parsing messages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    RankMismatch {
        expected: usize,
        found: usize,
    },
    InvalidLevel {
        level: usize,
        rank: usize,
    },
    InvalidClass(String),
    ZeroHasNoValue,
    ValueAboveCutoff,
    AmbiguousComparison,
    ZeroDivision,
    CutoffTooCoarse,
    /// A finite cutoff that no power of the expansion variable ever reaches,
    /// so infinitely many terms would be needed.
    CutoffUnreachable,
    /// An infinite expansion was requested with an infinite cutoff.
    InfiniteExpansion,
    NotInValuationRing,
    NotPositive,
    NotInfinitesimal,
    TruncatedInput,
    NotInLogDomain,
    ConstantNotExponentiable,
    IncomparableConstants,
    InvalidCrossSection(String),
    OracleInconsistent(String),
    DomainExhausted,
    Syntax {
        pos: usize,
        msg: String,
    },
    UnknownName(String),
    Usage(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::RankMismatch { .. } => "E001",
            Error::InvalidLevel { .. } => "E002",
            Error::InvalidClass(_) => "E003",
            Error::ZeroHasNoValue => "E004",
            Error::ValueAboveCutoff => "E005",
            Error::AmbiguousComparison => "E006",
            Error::ZeroDivision => "E007",
            Error::CutoffTooCoarse => "E008",
            Error::CutoffUnreachable => "E009",
            Error::InfiniteExpansion => "E010",
            Error::NotInValuationRing => "E011",
            Error::NotPositive => "E012",
            Error::NotInfinitesimal => "E013",
            Error::TruncatedInput => "E014",
            Error::NotInLogDomain => "E015",
            Error::ConstantNotExponentiable => "E016",
            Error::IncomparableConstants => "E017",
            Error::InvalidCrossSection(_) => "E018",
            Error::OracleInconsistent(_) => "E019",
            Error::DomainExhausted => "E020",
            Error::Syntax { .. } => "E021",
            Error::UnknownName(_) => "E022",
            Error::Usage(_) => "E023",
        }
    }

    /// True for malformed input (as opposed to a well-formed request the
    /// mathematics refuses).
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::UnknownName(_) | Error::Usage(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected rank {expected}, found rank {found}")
            }
            Error::InvalidLevel { level, rank } => {
                write!(f, "invalid convex level {level} for rank {rank}")
            }
            Error::InvalidClass(msg) => write!(f, "invalid archimedean class: {msg}"),
            Error::ZeroHasNoValue => f.write_str("zero has no value"),
            Error::ValueAboveCutoff => f.write_str("value unknown: no terms below the truncation bound"),
            Error::AmbiguousComparison => {
                f.write_str("ambiguous comparison: difference vanishes below the truncation bound")
            }
            Error::ZeroDivision => f.write_str("division by zero"),
            Error::CutoffTooCoarse => {
                f.write_str("cutoff too coarse: input is not known far enough to reach the target")
            }
            Error::CutoffUnreachable => {
                f.write_str("cutoff unreachable: infinitely many terms lie below the requested cutoff")
            }
            Error::InfiniteExpansion => f.write_str("infinite expansion: a finite cutoff is required"),
            Error::NotInValuationRing => f.write_str("not in valuation ring"),
            Error::NotPositive => f.write_str("not positive"),
            Error::NotInfinitesimal => f.write_str("not infinitesimal"),
            Error::TruncatedInput => f.write_str("truncated input: an exact series is required"),
            Error::NotInLogDomain => f.write_str("not in log domain"),
            Error::ConstantNotExponentiable => f.write_str("constant term not exponentiable over the rationals"),
            Error::IncomparableConstants => f.write_str("incomparable constant logarithms"),
            Error::InvalidCrossSection(msg) => write!(f, "invalid cross-section: {msg}"),
            Error::OracleInconsistent(msg) => write!(f, "oracle inconsistent: {msg}"),
            Error::DomainExhausted => f.write_str("oracle domain exhausted"),
            Error::Syntax { pos, msg } => write!(f, "syntax error at {pos}: {msg}"),
            Error::UnknownName(name) => write!(f, "unknown name `{name}`"),
            Error::Usage(msg) => write!(f, "usage: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
