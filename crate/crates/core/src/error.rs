use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vector has {found} entries but the ring has {expected} variables")]
    Dimension { expected: usize, found: usize },

    #[error("ring mismatch: {0} variables vs {1} variables")]
    RingMismatch(usize, usize),

    #[error("colon by the zero ideal is undefined")]
    ZeroColon,

    #[error("exponent overflow")]
    Overflow,

    #[error("decomposition undefined: {0}")]
    DecompositionUndefined(&'static str),

    #[error("dimension of the unit ideal is undefined")]
    DimensionUndefined,

    #[error("squarefree monomial ideal required")]
    SquarefreeRequired,

    #[error("invalid field characteristic {0}: must be 0 or a prime")]
    Field(u64),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid ring: {0}")]
    Ring(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::Ring(_)
            | Error::Usage(_)
            | Error::Dimension { .. }
            | Error::RingMismatch(..)
            | Error::Field(_) => 1,
            Error::Hypothesis(_)
            | Error::DecompositionUndefined(_)
            | Error::DimensionUndefined
            | Error::ZeroColon
            | Error::SquarefreeRequired => 2,
            Error::Invariant(_) => 3,
            Error::SizeLimit(_) | Error::Overflow => 4,
        }
    }

    /// Short machine-readable name used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Dimension { .. } => "dimension",
            Error::RingMismatch(..) => "ring-mismatch",
            Error::ZeroColon => "zero-colon",
            Error::Overflow => "overflow",
            Error::DecompositionUndefined(_) => "decomposition-undefined",
            Error::DimensionUndefined => "dimension-undefined",
            Error::SquarefreeRequired => "squarefree-required",
            Error::Field(_) => "field",
            Error::SizeLimit(_) => "size-limit",
            Error::Hypothesis(_) => "hypothesis",
            Error::Parse { .. } => "parse",
            Error::Ring(_) => "ring",
            Error::Usage(_) => "usage",
            Error::Invariant(_) => "invariant",
        }
    }
}
