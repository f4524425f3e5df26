use thiserror::Error;

/// Errors raised by the semigroup, term, band and language layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("empty table")]
    EmptyTable,
    #[error("entry ({row},{col}) = {value} is outside [0, {order})")]
    OutOfRangeEntry { row: usize, col: usize, value: i64, order: usize },
    #[error("associativity fails: ({0}·{1})·{2} != {0}·({1}·{2})")]
    AssociativityViolation(usize, usize, usize),
    #[error("{0} is not an identity: fails at element {1}")]
    BadIdentity(usize, usize),
    #[error("element {0} is out of range")]
    NoSuchElement(usize),
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("not a congruence: classes of {0} and {1} are not preserved")]
    NotACongruence(usize, usize),
    #[error("congruence has {got} entries but the semigroup has order {expected}")]
    CongruenceSizeMismatch { got: usize, expected: usize },
    #[error("transformations have mismatched degrees {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("transformation image {value} out of range for degree {degree}")]
    BadTransformation { value: usize, degree: usize },
    #[error("at least one generator is required")]
    NoGenerators,
    #[error("closure exceeded the element budget of {0}")]
    ClosureBudgetExceeded(usize),
    #[error("{what} exceeds the budget of {limit}")]
    BudgetExceeded { what: String, limit: u64 },
    #[error("{needed} assignments exceed the budget of {limit}")]
    AssignmentBudgetExceeded { needed: u128, limit: u64 },
    #[error("semigroup has no identity; the predicate {0} is a monoid predicate")]
    NotAMonoid(String),
    #[error("semigroup is not a band")]
    NotABand,
    #[error("syntax error at {position}: expected {expected}")]
    Syntax { position: usize, expected: String },
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("unknown identity set {0}")]
    UnknownName(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("alphabets differ")]
    AlphabetMismatch,
    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(char),
    #[error("decision routes disagree: {0}")]
    RouteDisagreement(String),
    #[error("no least element among candidate congruences: {0}")]
    NoLeastElement(String),
    #[error("cross-check failed: {0}")]
    CrossCheckFailed(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    /// True for the budget family, which callers treat as soft failures.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::ClosureBudgetExceeded(_)
                | Error::BudgetExceeded { .. }
                | Error::AssignmentBudgetExceeded { .. }
        )
    }

    /// True for malformed input (tables, files, term syntax).
    pub fn is_input(&self) -> bool {
        matches!(
            self,
            Error::NotSquare { .. }
                | Error::EmptyTable
                | Error::OutOfRangeEntry { .. }
                | Error::AssociativityViolation(..)
                | Error::BadIdentity(..)
                | Error::DegreeMismatch(..)
                | Error::BadTransformation { .. }
                | Error::NoGenerators
                | Error::Syntax { .. }
                | Error::UnknownName(_)
                | Error::Parse { .. }
                | Error::AlphabetMismatch
                | Error::UnknownLetter(_)
                | Error::InvalidArgument(_)
                | Error::NoSuchElement(_)
                | Error::NotIdempotent(_)
                | Error::NotABand
                | Error::NotAMonoid(_)
                | Error::UnboundVariable(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Resource caps shared by closure, enumeration and identity checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of elements produced by a closure.
    pub elements: usize,
    /// Maximum number of variable assignments enumerated by one identity check.
    pub assignments: u64,
    /// Word-length bound for brute-force language cross-checks.
    pub word_len: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { elements: 5000, assignments: 1_000_000_000, word_len: 10 }
    }
}
