use thiserror::Error;

/// Errors raised by the library. Domain errors map to CLI exit code 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index schemes differ: {0} vs {1}")]
    SchemeMismatch(String, String),
    #[error("non-integral weight: {0}")]
    NonIntegral(String),
    #[error("weight is non-integral or singular: {0}")]
    NonIntegralOrSingular(String),
    #[error("weights lie in different blocks: {0} and {1}")]
    DifferentBlocks(String, String),
    #[error("{0} is not a co-atom s_i.0 of the block of 0")]
    NotACoatom(String),
    #[error("permutations live on different windows (sizes {0} and {1})")]
    WindowMismatch(usize, usize),
    #[error("{0} is not strictly below {1} in Bruhat order")]
    NotStrictlyBelow(String, String),
    #[error("{0} is not in the ideal")]
    NotInIdeal(String),
    #[error("{0} is not in the coideal")]
    NotInCoideal(String),
    #[error("unsupported rank {0}")]
    BadRank(usize),
    #[error("weight space too large: dimension {dim} exceeds limit {limit}")]
    DepthTooLarge { dim: usize, limit: usize },
    #[error("computed window too small: needs depth {needed}, have {have}")]
    WindowTooSmall { needed: i64, have: i64 },
    #[error("invalid index window: {0}")]
    InvalidWindow(String),
    #[error("value does not fit in 64 bits")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("corrupt cache file: {0}")]
    CorruptCache(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SchemeMismatch(..) => "SchemeMismatch",
            Error::NonIntegral(_) => "NonIntegral",
            Error::NonIntegralOrSingular(_) => "NonIntegralOrSingular",
            Error::DifferentBlocks(..) => "DifferentBlocks",
            Error::NotACoatom(_) => "NotACoatom",
            Error::WindowMismatch(..) => "WindowMismatch",
            Error::NotStrictlyBelow(..) => "NotStrictlyBelow",
            Error::NotInIdeal(_) => "NotInIdeal",
            Error::NotInCoideal(_) => "NotInCoideal",
            Error::BadRank(_) => "BadRank",
            Error::DepthTooLarge { .. } => "DepthTooLarge",
            Error::WindowTooSmall { .. } => "WindowTooSmall",
            Error::InvalidWindow(_) => "InvalidWindow",
            Error::Overflow => "Overflow",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
            Error::CorruptCache(_) => "CorruptCache",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
