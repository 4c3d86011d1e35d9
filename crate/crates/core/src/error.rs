use thiserror::Error;

/// Errors raised while building degree data, tables, or bound reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order violation: {0}")]
    OrderViolation(String),
    #[error("positivity violation: {0}")]
    PositivityViolation(String),
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("size error: {0}")]
    SizeError(String),
    #[error("range error: {0}")]
    RangeError(String),
    #[error("generator budget exceeded at row {row}: {count} generators > cap {cap}")]
    BudgetExceeded { row: usize, count: u128, cap: u64 },
    #[error("inconsistent table: {0}")]
    InconsistentTable(String),
    #[error("non-positive denominator in bound at index {index}")]
    DenominatorError { index: usize },
    #[error("non-integral result: {0}")]
    NonIntegralResult(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
