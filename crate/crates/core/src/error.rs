use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field backend mismatch: {0} vs {1}")]
    BackendMismatch(String, String),
    #[error("variable count mismatch: {0} vs {1}")]
    VarCountMismatch(usize, usize),
    #[error("variable index {index} out of range for {nvars} variables")]
    VarIndex { index: usize, nvars: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("points are projectively equal")]
    CoincidentPoints,
    #[error("binary form is identically zero")]
    ZeroForm,
    #[error("operation requires an exact field backend")]
    InexactBackend,
    #[error("operation requires a prime field")]
    NotPrimeField,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("polynomial is not homogeneous")]
    NonHomogeneous,
    #[error("point does not lie on the cubic")]
    PointNotOnCubic,
    #[error("cubic is singular at the given point")]
    SingularPoint,
    #[error("line is not contained in the cubic")]
    LineNotOnCubic,
    #[error("point does not lie on the line")]
    PointNotOnLine,
    #[error("point is an Eckardt point")]
    EckardtPoint,
    #[error("normal quadrics have rank {0}; the cubic is singular along the line")]
    SingularAlongLine(usize),
    #[error("lines are not pairwise skew")]
    NotSkew,
    #[error("lines do not lie in a common 3-plane")]
    NotInCommonP3,
    #[error("quadric condition matrix has rank {0} < 9")]
    DegeneratePencil(usize),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("codimension {codim} exceeds the Jacobian size {rows}x{cols}")]
    CodimTooLarge { codim: usize, rows: usize, cols: usize },
    #[error("bad reduction modulo {p}: {reason}")]
    BadReduction { p: u64, reason: String },
    #[error("the scheme is empty")]
    EmptyScheme,
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("sampling budget exhausted: {0}")]
    SamplingExhausted(String),
}
