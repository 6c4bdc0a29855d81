use num_bigint::BigUint;

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter that must be prime is not.
    NotPrime(u64),
    /// A structurally invalid parameter (out-of-range index, bad modulus, ...).
    InvalidParameter(String),
    /// An element does not belong to the ring it was used with.
    DomainMismatch(String),
    /// An exhaustive enumeration would exceed the configured budget.
    BudgetExceeded { required: BigUint, budget: u64 },
    /// A ring-spec, element, or matrix literal failed to parse.
    Parse(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::DomainMismatch(msg) => write!(f, "domain mismatch: {msg}"),
            Error::BudgetExceeded { required, budget } => write!(
                f,
                "enumeration needs {required} determinant evaluations, budget is {budget}; \
                 raise the budget or use sampled mode"
            ),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
