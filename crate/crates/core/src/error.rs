use thiserror::Error;

/// Failures raised by the group kernel, the τ machinery and the steppers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The argument lies outside the injectivity domain of a τ-map inverse.
    #[error("out of domain: rotation angle {angle} exceeds limit {limit} (step size too large?)")]
    OutOfDomain { angle: f64, limit: f64 },

    /// A linear map that must be invertible was (numerically) singular.
    #[error("singular linear map in {0}")]
    Singular(&'static str),

    /// An implicit solve did not reach its tolerance.
    #[error("solver diverged after {iterations} iterations (last residual {residual:e})")]
    SolverDiverged { iterations: usize, residual: f64 },

    /// A closed form is only available for θ = 0.
    #[error("theta = {0} is not supported here (closed forms exist only for theta = 0)")]
    UnsupportedTheta(f64),

    /// A parameter violated its stated invariant.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// The adaptive reference integrator shrank its step below the representable limit.
    #[error("step size underflow at t = {time}")]
    StepSizeUnderflow { time: f64 },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
