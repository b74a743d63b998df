use thiserror::Error;

/// Errors surfaced by the lattice, group and symbolic layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-invertible coordinate change")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("resultant of zero form")]
    ZeroForm,
    #[error("gcd of two zero forms")]
    BothFormsZero,
    #[error("generator is not homogeneous")]
    InhomogeneousGenerator,
    #[error("reflection axis must be a root")]
    NotARoot,
    #[error("configuration not embeddable in E6: {0}")]
    NotEmbeddable(String),
    #[error("bad singularity configuration: {0}")]
    ConfigParse(String),
    #[error("line is not on the surface")]
    LineNotOnSurface,
    #[error("not a singular point")]
    NotSingular,
    #[error("point is not on the hypersurface")]
    PointNotOnSurface,
    #[error("surface singular along line (non-normal)")]
    SingularAlongLine,
    #[error("increase jet bound or singularity non-isolated")]
    NoJetStabilization,
    #[error("lines must be incident")]
    LinesNotIncident,
    #[error("dual-map data degenerate")]
    DegenerateDualMap,
    #[error("missing line-type assignment for orbits: {0}")]
    MissingLineTypes(String),
    #[error("internal invariant violation: {0}")]
    Invariant(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("bad json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
