use num_complex::Complex64;
use thiserror::Error;

/// Everything that can go wrong in a geometric construction or audit.
///
/// Numeric failures carry the offending magnitudes so reports can show how far
/// from the threshold a rejected input was.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("cannot projectivize: |z| = {norm:.3e} is below the zero threshold {threshold:.3e}")]
    ZeroVector { norm: f64, threshold: f64 },

    #[error("non-finite component in ({z1}, {z2}, {z3})")]
    NonFinite {
        z1: Complex64,
        z2: Complex64,
        z3: Complex64,
    },

    #[error(
        "degenerate quadric: restricted discriminant {discriminant:.3e} \
         (relative size {relative:.3e}) does not separate two lines"
    )]
    DegenerateQuadric { discriminant: f64, relative: f64 },

    #[error("graph chart is singular at z1 = {z1}: |det J| = {det:.3e}")]
    ChartSingular { z1: Complex64, det: f64 },

    #[error("iteration stalled after {iterations} steps, residual {residual:.3e}")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("{what}")]
    Domain { what: String },

    #[error("line crossing at |w| = {modulus:.6} lies outside the closed unit disc")]
    CrossingOutsideDisc { modulus: f64 },

    #[error("invalid configuration: {reason}")]
    ConfigInvalid { reason: String },

    #[error("first {checked} Taylor coefficients all below {threshold:.1e}; no leading direction")]
    AllCoefficientsZero { checked: usize, threshold: f64 },

    #[error(
        "denominator modulus {min:.3e} on the boundary circle at t = {t}; Cauchy data unusable"
    )]
    BoundaryPole { t: f64, min: f64 },

    #[error("continuation hypothesis violated: {reason}")]
    HypothesisViolated { reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown tolerance name `{0}`")]
    UnknownTolerance(String),
}

impl Error {
    pub fn domain(what: impl Into<String>) -> Self {
        Error::Domain { what: what.into() }
    }

    pub fn invalid(reason: impl Into<String>) -> Self {
        Error::ConfigInvalid {
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
