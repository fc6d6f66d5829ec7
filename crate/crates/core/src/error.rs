use thiserror::Error;

/// Errors raised by geometry, arc-length and pattern operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("family exponent m = {0} is excluded (m must not be -1, 0 or 1)")]
    ExcludedExponent(f64),

    #[error("invalid surface parameters: {0}")]
    InvalidSurface(String),

    #[error("parameter radius r = {r} is outside the domain [{r_min}, {r_max}]")]
    OutsideDomain { r: f64, r_min: f64, r_max: f64 },

    #[error("{quantity} is singular at r = 0 for m = {m}")]
    Singular { quantity: &'static str, m: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no self-intersection at r = {r} (requires r >= sqrt(3))")]
    NoIntersection { r: f64 },

    #[error("target arc length {target} is outside the achievable range [0, {max}]")]
    UnreachableArc { target: f64, max: f64 },

    #[error("root finder did not converge within {0} iterations")]
    NoConvergence(usize),

    #[error("quadrature did not reach tolerance (estimated error {0:e})")]
    QuadratureFailed(f64),

    #[error("scale fit failed: {0}")]
    ScaleFit(String),

    #[error("schedule infeasible at round {round}: {reason}")]
    Infeasible { round: u32, reason: String },

    #[error("unknown output format `{0}`")]
    UnknownFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
