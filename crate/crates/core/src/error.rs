use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid semiring descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("table violates {axiom}: witness ({witness})")]
    AxiomViolation { axiom: String, witness: String },

    #[error("scalar {value} does not belong to {semiring}")]
    CrossSemiring { semiring: String, value: String },

    #[error("malformed {semiring} literal {literal:?}: {reason}")]
    MalformedScalar {
        semiring: String,
        literal: String,
        reason: String,
    },

    #[error("literal {literal:?} lies outside the carrier of {semiring}")]
    OutOfCarrier { semiring: String, literal: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("semiring mismatch: {left} vs {right}")]
    SemiringMismatch { left: String, right: String },

    #[error("unknown letter {0:?}")]
    UnknownLetter(char),

    #[error("{what} needs {needed} but the budget is {budget}")]
    BudgetExceeded {
        what: String,
        needed: String,
        budget: usize,
    },

    #[error("{operation} is undecidable here: no decision procedure for {semiring}")]
    Undecidable { operation: String, semiring: String },

    #[error("no finite length bound available for {0}")]
    NoFiniteBound(String),

    #[error("exhaustive enumeration requires a finite carrier, {0} is infinite")]
    InfiniteCarrier(String),

    #[error("quasipower constant N_{r} for alphabet size {sigma} is too large to materialize")]
    ConstantTooLarge { r: usize, sigma: usize },

    #[error("word of length {len} is too short: order {order} needs length at least {required}")]
    WordTooShort {
        len: usize,
        order: usize,
        required: String,
    },

    #[error("no quasipower of order {0} found in the word")]
    NoQuasipower(usize),

    #[error("no nonempty subword with a pseudoregular matrix in {0:?}")]
    NoWitness(String),

    #[error("{0:?} is not in the support")]
    NotInSupport(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid automaton file: {0}")]
    Format(String),

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },

    #[error("internal invariant broken: {0}")]
    Invariant(String),
}
