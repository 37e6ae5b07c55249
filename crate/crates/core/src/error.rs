use thiserror::Error;

/// Errors across the whole engine.
///
/// The variants split into two families: invalid input (rejected before any
/// mathematics runs) and mathematical degeneracies (a precondition of the
/// construction fails on a legal input). The CLI maps the former to exit
/// code 3 and the latter to exit code 2.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    // ---- field kernel ----
    #[error("modulus is not irreducible over its base field")]
    ModulusNotIrreducible,
    #[error("operation requires characteristic 3, field has characteristic {0}")]
    UnsupportedCharacteristic(u64),
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("polynomial degree too small (need degree >= 1)")]
    DegreeTooSmall,
    #[error("fields are incompatible: {0}")]
    FieldMismatch(String),
    #[error("operation not supported over this field: {0}")]
    UnsupportedField(String),

    // ---- projective geometry ----
    #[error("point set is degenerate (rank too small)")]
    DegeneratePointSet,
    #[error("line is contained in the hyperplane")]
    LineInHyperplane,
    #[error("point lies in the projection center")]
    ProjectionCenter,
    #[error("no conic passes through the given points")]
    NoConic,
    #[error("conic bundle through the points has dimension >= 2")]
    DegenerateBundle,
    #[error("conic is not smooth (rank < 3)")]
    NotSmoothConic,

    // ---- genus-2 curves / torsion ----
    #[error("curve is singular (right-hand side not squarefree)")]
    SingularCurve,
    #[error("jacobian is not ordinary (b1 = 0 after normalization)")]
    NotOrdinary,
    #[error("value is not a root of the torsion quartic")]
    NotAQuarticRoot,
    #[error("no quintic model over the base field: degree-6 input without rational branch point")]
    QuinticModelUnavailable,

    // ---- secant pipeline ----
    #[error("the four secant intersection points do not span a plane (rank {0})")]
    CoplanarityViolated(usize),
    #[error("fitted conic has rank 1")]
    DegenerateConic,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),

    // ---- Burkhardt / Coble ----
    #[error("kernel is degenerate (dimension {0}, expected 1)")]
    KernelDegenerate(usize),
    #[error("no consistent correction makes the quadric system a gradient: {0}")]
    IntegrabilityFailure(String),

    // ---- complex pipeline ----
    #[error("translate intersection is not a plane (dimension {0})")]
    TranslateDegenerate(usize),
    #[error("root isolation failed: {0}")]
    RootIsolationFailure(String),
    #[error("branch locus count is {0}, expected 6")]
    BranchLocusFailure(usize),
    #[error("no usable coordinate projection on the twisted cubic")]
    CoordinateFailure,

    // ---- input / schema ----
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Exit code the CLI uses for this error: 3 for invalid input,
    /// 2 for a mathematical degeneracy.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_)
            | Error::ModulusNotIrreducible
            | Error::UnsupportedCharacteristic(_)
            | Error::UnsupportedField(_)
            | Error::QuinticModelUnavailable
            | Error::ZeroPolynomial
            | Error::DegreeTooSmall => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
