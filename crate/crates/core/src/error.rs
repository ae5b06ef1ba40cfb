use thiserror::Error;

/// Errors raised by the library.
///
/// Outcomes that carry mathematical content (a missing p-th root, a
/// non-additive polynomial, a disjointness certificate) are returned as
/// ordinary values by the operations that produce them, not through this
/// type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("descriptor mismatch: {left} vs {right}")]
    DescriptorMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("invalid field descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("field {0} is infinite")]
    InfiniteField(String),
    #[error("operation requires a finite field, got {0}")]
    NotFinite(String),
    #[error("{0} is not a subfield of {1}")]
    NotASubfield(String, String),
    #[error("not a subgroup: {a} + {b} is missing")]
    NotASubgroup { a: String, b: String },
    #[error("inputs must not all be zero")]
    ZeroInput,
    #[error("{0} has a p-th root; the witness search needs a non-p-th power")]
    PerfectFieldMisuse(String),
    #[error("trace of {0} is nonzero")]
    NonzeroTrace(String),
    #[error("{0} does not divide the polynomial")]
    NotAFactor(String),
    #[error("{0} is not irreducible")]
    NotIrreducible(String),
    #[error("factor degree {0} is divisible by the characteristic")]
    DegreeDivisibleByP(usize),
    #[error("denominator has a factor of degree above the place bound: {0}")]
    UnfactoredDenominator(String),
    #[error("value not determined below precision {0}")]
    BelowPrecision(String),
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("valuation precondition failed: {0}")]
    PreconditionValuation(String),
    #[error("value {0} is divisible by p; reduce by Artin-Schreier shifts first")]
    DivisibleValue(String),
    #[error("search space of {required} candidates exceeds the budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// The variant name, for structured output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DescriptorMismatch { .. } => "DescriptorMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::DivisionByZeroPolynomial => "DivisionByZeroPolynomial",
            Error::InvalidDescriptor(_) => "InvalidDescriptor",
            Error::InfiniteField(_) => "InfiniteField",
            Error::NotFinite(_) => "NotFinite",
            Error::NotASubfield(..) => "NotASubfield",
            Error::NotASubgroup { .. } => "NotASubgroup",
            Error::ZeroInput => "ZeroInput",
            Error::PerfectFieldMisuse(_) => "PerfectFieldMisuse",
            Error::NonzeroTrace(_) => "NonzeroTrace",
            Error::NotAFactor(_) => "NotAFactor",
            Error::NotIrreducible(_) => "NotIrreducible",
            Error::DegreeDivisibleByP(_) => "DegreeDivisibleByP",
            Error::UnfactoredDenominator(_) => "UnfactoredDenominator",
            Error::BelowPrecision(_) => "BelowPrecision",
            Error::PrecisionExhausted(_) => "PrecisionExhausted",
            Error::PreconditionValuation(_) => "PreconditionValuation",
            Error::DivisibleValue(_) => "DivisibleValue",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::Unsupported(_) => "Unsupported",
            Error::Parse { .. } => "Parse",
        }
    }
}
