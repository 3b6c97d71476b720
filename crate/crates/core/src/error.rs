use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("traces are not a virtual character of mu_{d}: mismatch at s={index}")]
    Decode { d: usize, index: usize },

    #[error("representation modulus mismatch: expected {expected}, found {found}")]
    ModulusMismatch { expected: usize, found: usize },

    #[error("line {line}: all coefficients are zero")]
    ZeroForm { line: usize },

    #[error("line {second} duplicates line {first}")]
    DuplicateLine { first: usize, second: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown builtin arrangement `{0}`")]
    UnknownBuiltin(String),

    #[error("invalid ordinary singularity: need 2 <= k <= d, got k={k}, d={d}")]
    InvalidSing { k: usize, d: usize },

    #[error("degree {d} too small (need d >= 3)")]
    DegreeTooSmall { d: usize },

    #[error("negative multiplicity {value} at (p,q)=({p},{q}), character lambda^{k}")]
    NegativeMultiplicity { p: i32, q: i32, k: usize, value: i64 },

    #[error("spectrum sum rule violated: sum of m_a is {got}, expected chi(F)-1 = {expected}")]
    SumRuleViolation { expected: i64, got: i64 },

    #[error("H^3(X) data must be supported on (2,1) and (1,2), found ({p},{q})")]
    BadH3Support { p: i32, q: i32 },

    #[error("only {found} admissible primes below search bound {bound} (wanted {wanted})")]
    NotEnoughPrimes { wanted: usize, found: usize, bound: u64 },

    #[error("bad prime {q}: {reason}")]
    BadPrime { q: u64, reason: String },

    #[error("counts are not polynomial in q (witness prime {witness})")]
    NotPolynomialCount { witness: u64 },

    #[error("need at least {needed} primes to fit degree <= {degree}, got {got}")]
    InsufficientPrimes { needed: usize, got: usize, degree: usize },

    #[error("fitted coefficient of t^{power} is not integral at twist {twist}")]
    NonIntegral { power: usize, twist: usize },
}

impl Error {
    /// Stable machine-readable identifier, used by the CLI error object.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Decode { .. } => "decode_error",
            Error::ModulusMismatch { .. } => "modulus_mismatch",
            Error::ZeroForm { .. } => "zero_form",
            Error::DuplicateLine { .. } => "duplicate_line",
            Error::Parse { .. } => "parse_error",
            Error::UnknownBuiltin(_) => "unknown_builtin",
            Error::InvalidSing { .. } => "invalid_singularity",
            Error::DegreeTooSmall { .. } => "degree_too_small",
            Error::NegativeMultiplicity { .. } => "negative_multiplicity",
            Error::SumRuleViolation { .. } => "sum_rule_violation",
            Error::BadH3Support { .. } => "bad_h3_support",
            Error::NotEnoughPrimes { .. } => "not_enough_primes",
            Error::BadPrime { .. } => "bad_prime",
            Error::NotPolynomialCount { .. } => "not_polynomial_count",
            Error::InsufficientPrimes { .. } => "insufficient_primes",
            Error::NonIntegral { .. } => "non_integral",
        }
    }
}
