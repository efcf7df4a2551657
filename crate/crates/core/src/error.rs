use thiserror::Error;

/// Errors raised by the ideal, complex and classification operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed monomial `{text}`: {reason}")]
    Parse { text: String, reason: String },

    #[error("variable index {index} outside 1..={n}")]
    OutOfRange { index: usize, n: usize },

    #[error("variable x{index} repeated; monomial is not square-free")]
    NotSquareFree { index: usize },

    #[error("unsupported number of variables {n} (must be 1..=64)")]
    VariableCount { n: usize },

    #[error("degree {d} outside 0..={n}")]
    DegreeOutOfRange { d: usize, n: usize },

    #[error("vertices not covered by any facet: {}", list_indices(.vertices))]
    UncoveredVertices { vertices: Vec<usize> },

    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,

    #[error("mixed degrees in a uniform-degree set")]
    MixedDegree,

    #[error("upper shadow of degree {degree} in {n} variables is out of range")]
    DegreeOverflow { degree: usize, n: usize },

    #[error("lower shadow of degree {degree} is out of range")]
    DegreeUnderflow { degree: usize },

    #[error("unsupported n = {n} (need n >= 4)")]
    UnsupportedN { n: usize },

    #[error("search space too large: {reason}")]
    SearchTooLarge { reason: String },

    #[error("ideal is not generated in degree {degree} only")]
    NotEquigenerated { degree: usize },

    #[error("prime of height {height} is neither n-2 nor n-1 (n = {n})")]
    WrongHeight { height: usize, n: usize },

    #[error("ideal is not a quasi f-ideal of degree 2")]
    NotQuasiDeg2,

    #[error("invalid partition set: {reason}")]
    InvalidA { reason: String },

    #[error("invalid completion set: {reason}")]
    InvalidD { reason: String },

    #[error("type (0, {b}) is not admissible for n = {n}")]
    InadmissibleType { n: usize, b: i64 },

    #[error("constructed ideal failed verification: {reason}")]
    InternalVerificationFailure { reason: String },

    #[error("negative degree {m}")]
    NegativeDegree { m: i64 },

    #[error("computation too large: {reason}")]
    TooLarge { reason: String },

    #[error("invalid ideal file: {reason}")]
    Format { reason: String },
}

impl Error {
    /// Stable variant name, used as the structured error tag on the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "ParseError",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::NotSquareFree { .. } => "NotSquareFree",
            Error::VariableCount { .. } => "VariableCount",
            Error::DegreeOutOfRange { .. } => "DegreeOutOfRange",
            Error::UncoveredVertices { .. } => "UncoveredVertices",
            Error::ZeroIdeal => "ZeroIdeal",
            Error::MixedDegree => "MixedDegree",
            Error::DegreeOverflow { .. } => "DegreeOverflow",
            Error::DegreeUnderflow { .. } => "DegreeUnderflow",
            Error::UnsupportedN { .. } => "UnsupportedN",
            Error::SearchTooLarge { .. } => "SearchTooLarge",
            Error::NotEquigenerated { .. } => "NotEquigenerated",
            Error::WrongHeight { .. } => "WrongHeight",
            Error::NotQuasiDeg2 => "NotQuasiDeg2",
            Error::InvalidA { .. } => "InvalidA",
            Error::InvalidD { .. } => "InvalidD",
            Error::InadmissibleType { .. } => "InadmissibleType",
            Error::InternalVerificationFailure { .. } => "InternalVerificationFailure",
            Error::NegativeDegree { .. } => "NegativeDegree",
            Error::TooLarge { .. } => "TooLarge",
            Error::Format { .. } => "FormatError",
        }
    }
}

fn list_indices(v: &[usize]) -> String {
    v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")
}

pub type Result<T> = std::result::Result<T, Error>;
