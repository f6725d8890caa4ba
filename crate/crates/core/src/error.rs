use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Failure modes shared by every module of the crate.
///
/// [`Error::is_numerical`] separates failures of a numerical method
/// (non-convergence, quadrature) from rejected inputs.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid order: Re(alpha) must be > 0, got {0}")]
    InvalidOrder(Complex64),

    #[error("invalid derivative order: Re(nu) must be > 0, got {0}")]
    InvalidDerivativeOrder(Complex64),

    #[error("Mittag-Leffler evaluation did not reach tolerance: best {best} with error bound {bound:e}")]
    NonConvergent { best: Complex64, bound: f64 },

    #[error("argument lies in an uncertified sector of the asymptotic expansion (arg z = {arg})")]
    SectorUnsupported { arg: f64 },

    #[error("quadrature failed: estimated error {estimate:e} above tolerance {tolerance:e}")]
    QuadratureFailure { estimate: f64, tolerance: f64 },

    #[error("power (t + i0)^mu is singular at t = 0 for mu = {0}")]
    SingularAtZero(Complex64),

    #[error("causal evolution requires t >= 0, got {0}")]
    NegativeTime(f64),

    #[error("momentum grid too narrow: edge amplitude ratio {ratio:e} exceeds {limit:e}")]
    GridTooNarrow { ratio: f64, limit: f64 },

    #[error("samples do not vanish at the well walls (ratio {0:e})")]
    BoundaryViolation(f64),

    #[error("samples do not decay at the grid edges (ratio {0:e})")]
    EdgeDecayViolation(f64),

    #[error("negative-order derivative of a spectrum that does not vanish at k = 0")]
    OriginSingularity,

    #[error("primitive ambiguity is only available for lambda = -1 or -2, got {0}")]
    UnsupportedLambda(i32),

    #[error("closed-form Green function is undefined at zero time separation")]
    ZeroTimeSeparation,

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

impl Error {
    /// True for failures of a numerical method rather than of the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergent { .. } | Error::QuadratureFailure { .. } | Error::SectorUnsupported { .. }
        )
    }
}
