use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported modulus {modulus}: {reason}")]
    UnsupportedModulus { modulus: u64, reason: &'static str },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,

    #[error("prime {0} is of bad reduction")]
    BadPrime(u64),

    #[error("polynomial is not squarefree; gcd witness {witness}")]
    NotSquarefree { witness: String },

    #[error("invalid generator {matrix}: {reason}")]
    InvalidGenerator { matrix: String, reason: String },

    #[error("group exceeds the realization cap of {0} elements")]
    SizeLimit(usize),

    #[error("modulus mismatch: expected {expected}, found {found}")]
    ModulusMismatch { expected: u32, found: u32 },

    #[error("{0}")]
    Invalid(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("integrity violation: {0}")]
    Integrity(String),

    #[error("config {path}: {msg}")]
    Config { path: String, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
