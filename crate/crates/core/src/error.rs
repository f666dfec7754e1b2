use thiserror::Error;

/// Failure classes used to pick process exit codes in the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// A precondition or guard was violated (bad window, band edge, ...).
    Guard,
    /// A numerical procedure failed (no convergence, overflow, ...).
    Numeric,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension for {what}: must be at least 1")]
    InvalidDimension { what: &'static str },

    #[error("operator size {requested} exceeds the configured maximum {max}")]
    SizeLimit { requested: usize, max: usize },

    #[error("matrix is not exactly symmetric at entry ({i},{j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("Jacobi eigensolver did not converge for dim {dim} after {sweeps} sweeps")]
    EigenConvergence { dim: usize, sweeps: usize },

    #[error(
        "band-edge violation at eigenvalue index {j}: |lambda_star - d_j| = {gap:.6e} \
         leaves margin {margin:.6e} <= guard {guard:.6e}"
    )]
    BandEdge {
        j: usize,
        gap: f64,
        margin: f64,
        guard: f64,
    },

    #[error("critical-angle argument {value:.6e} at index {j} lies outside (-2, 2)")]
    BandArgument { j: usize, value: f64 },

    #[error("evolution diverged at step {step}: state norm {norm:.3e} exceeds {limit:.1e}")]
    Divergence { step: usize, norm: f64, limit: f64 },

    #[error("zero count {found} does not match expected {expected} after grid refinement")]
    Resolution { expected: usize, found: usize },

    #[error("the ratio (2 - lambda_star)/(2 + lambda_star) is undefined at lambda_star = -2")]
    UndefinedRatio,

    #[error(
        "lambda_star fails the spectral-ratio condition: \
         (2-l*)/(2+l*) = {ratio:.6e} coincides with d_{j}/d_{jp} within {tol:.1e}"
    )]
    StrangeCondition {
        ratio: f64,
        j: usize,
        jp: usize,
        tol: f64,
    },

    #[error("covariance matrix not positive semidefinite: smallest eigenvalue {min_eig:.3e}")]
    CovarianceNotPsd { min_eig: f64 },

    #[error("{trials} trials give no statistical power; need at least {min}")]
    StatisticalPower { trials: usize, min: usize },

    #[error("insufficient data: {what}")]
    InsufficientData { what: &'static str },

    #[error(
        "window ({lo:.6}, {hi:.6}) is not strictly inside the elliptic band ({band_lo:.6}, {band_hi:.6})"
    )]
    WindowOutsideBand {
        lo: f64,
        hi: f64,
        band_lo: f64,
        band_hi: f64,
    },

    #[error("empty input: {what}")]
    EmptyInput { what: &'static str },
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::EigenConvergence { .. }
            | Error::Divergence { .. }
            | Error::Resolution { .. } => ErrorClass::Numeric,
            _ => ErrorClass::Guard,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
