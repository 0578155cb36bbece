use thiserror::Error;

/// Everything that can go wrong across the library.
///
/// [`Error::code`] gives a stable identifier used by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("order is indeterminate: the difference vanished below the truncation horizon")]
    IndeterminateOrder,
    #[error("operand is infinite")]
    InfiniteOperand,
    #[error("operand is zero")]
    ZeroOperand,
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("pole or domain error: {0}")]
    PoleOrDomain(String),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("expression is not algebraic (contains `{0}`)")]
    NonAlgebraicInput(String),
    #[error("expression is not a polynomial in `{0}`")]
    NotPolynomial(String),
    #[error("f(A+E) - f(A) vanishes identically")]
    ZeroDifference,
    #[error("tangent is horizontal at a point off the axis: the subtangent is infinite")]
    InfiniteSubtangent,
    #[error("sequence diverges: the value at the infinite index is infinite")]
    Divergent,
    #[error("not supported: {0}")]
    NotSupported(String),
    #[error("bracket stalled at width {width} above tolerance at the working precision")]
    PrecisionExhausted { width: String },
    #[error("window {window} too small, need at least {needed}")]
    WindowTooSmall { window: u32, needed: u32 },
    #[error("difference quotient is infinite")]
    NonFiniteQuotient,
    #[error("curve is flat at this point: the infinitely close normals do not meet at a finite point")]
    FlatPoint,
    #[error("no sign change on the bracket")]
    NoSignChange,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::IndeterminateOrder => "IndeterminateOrder",
            Error::InfiniteOperand => "InfiniteOperand",
            Error::ZeroOperand => "ZeroOperand",
            Error::Syntax { .. } => "SyntaxError",
            Error::PoleOrDomain(_) => "PoleOrDomainError",
            Error::UnboundVariable(_) => "UnboundVariable",
            Error::NonAlgebraicInput(_) => "NonAlgebraicInput",
            Error::NotPolynomial(_) => "NotPolynomial",
            Error::ZeroDifference => "ZeroDifference",
            Error::InfiniteSubtangent => "InfiniteSubtangent",
            Error::Divergent => "Divergent",
            Error::NotSupported(_) => "NotSupported",
            Error::PrecisionExhausted { .. } => "PrecisionExhausted",
            Error::WindowTooSmall { .. } => "WindowTooSmall",
            Error::NonFiniteQuotient => "NonFiniteQuotient",
            Error::FlatPoint => "FlatPoint",
            Error::NoSignChange => "NoSignChange",
            Error::Parse(_) => "ParseError",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
