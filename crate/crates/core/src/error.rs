use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("variable index 0 at byte {pos} (variables start at X1)")]
    ZeroVariable { pos: usize },

    #[error("repetition count 0 at byte {pos} (counts start at 1)")]
    ZeroCount { pos: usize },

    #[error("invalid algebra descriptor: {0}")]
    Descriptor(String),

    #[error("invalid truth value `{value}`: {msg}")]
    TruthValue { value: String, msg: String },

    #[error("{value} is not an element of {algebra}")]
    NotInCarrier { value: String, algebra: String },

    #[error("operation `{op}` needs a finite algebra, got {algebra}")]
    InfiniteAlgebra { op: &'static str, algebra: String },

    #[error("variable X{0} is not in the valuation's support")]
    UnsupportedVariable(u32),

    #[error("invalid valuation: {0}")]
    Valuation(String),

    #[error("table violates {axiom} at ({a}, {b}, {c})")]
    AxiomViolation {
        axiom: &'static str,
        a: usize,
        b: usize,
        c: usize,
    },

    #[error("malformed operation table: {0}")]
    Table(String),

    #[error("function is not monotone nondecreasing between x = {0} and the next breakpoint")]
    NonMonotone(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no {what} found within the search bounds")]
    SearchExhausted { what: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
