use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("operands live over different groups")]
    GroupMismatch,

    #[error("operands have incompatible coefficient modules")]
    ModuleMismatch,

    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: i64, found: i64 },

    #[error("{op} is undefined in degree {degree}")]
    InvalidDegree { op: &'static str, degree: i64 },

    #[error("element is not in a tensor product module")]
    NotTensor,

    #[error("no group element named {0:?}")]
    UnknownElement(String),

    #[error("size guard exceeded: {basis} basis elements > limit {limit}")]
    SizeGuard { basis: u128, limit: u128 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Field {
            field: field.into(),
            message: message.into(),
        }
    }
}
