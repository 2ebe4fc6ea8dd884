use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix")]
    Singular,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("multi-index length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("homogenization degree {requested} is below the polynomial degree {actual}")]
    DegreeTooSmall { requested: u32, actual: u32 },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("variable rosters differ")]
    RosterMismatch,
    #[error("variable `{0}` is not in the roster")]
    UnknownVariable(String),
    #[error("ideal needs at least one nonzero generator")]
    EmptyIdeal,
    #[error("monomial order {0} is not allowed here: {1}")]
    OrderKind(String, &'static str),
    #[error("generic initial object did not stabilize after {retries} retries")]
    GenericityFailure { retries: u32 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("components have different degrees")]
    DegreeMismatch,
    #[error("more negative components ({neg}) than components ({count})")]
    TooManyNegatives { neg: usize, count: usize },
    #[error("form is not divisible by the source norm: the map does not take the source hyperquadric into the target")]
    NotDivisible,
    #[error("form is not Hermitian: {0}")]
    NotHermitian(String),
    #[error("all components of the map vanish")]
    AllComponentsZero,
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("signatures differ between the compared reports")]
    SignatureMismatch,
    #[error("unknown catalog map `{0}`")]
    UnknownName(String),
    #[error("missing parameter `{0}`")]
    MissingParam(String),
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParam { name: String, reason: String },
    #[error("syntax error at offset {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("negative exponent at offset {0}")]
    NegativeExponent(usize),
}
