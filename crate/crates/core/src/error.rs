use thiserror::Error;

/// Failure modes shared by every module.
///
/// Values are never NaN or infinite on success; anything that cannot be
/// represented as a finite complex number is reported here instead.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole at {0}")]
    PoleAt(i64),
    #[error("series or asymptotic evaluation did not converge: {0}")]
    ConvergenceFailure(&'static str),
    #[error("argument lies on the branch cut")]
    BranchCut,
    #[error("connection formula is indeterminate (0/0 in both terms)")]
    IndeterminateConnection,
    #[error("triple is not on the quadric ω² = λ² + μ² (residual {0:e})")]
    OffQuadric(f64),
    #[error("(ω, λ, μ) = 0: use a zero-fiber point")]
    ZeroTriple,
    #[error("projective ray [0:0]")]
    ZeroRay,
    #[error("chart pole: the requested chart is undefined at this ray")]
    ChartPole,
    #[error("parameter lies on an exceptional set")]
    ExceptionalPoint,
    #[error("ODE integrator failed (step size underflow at x = {0})")]
    StepFailure(f64),
    #[error("spectral parameter hits the spectrum")]
    SpectrumHit,
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("quadrature tolerance not met (estimate {0:e})")]
    ToleranceNotMet(f64),
    #[error("Mellin spectrum aliased: {0:e} relative mass in top octave")]
    AliasWarning(f64),
}

impl Error {
    /// Short machine-readable tag, as used in CLI error objects.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::PoleAt(_) => "PoleAt",
            Error::ConvergenceFailure(_) => "ConvergenceFailure",
            Error::BranchCut => "BranchCut",
            Error::IndeterminateConnection => "IndeterminateConnection",
            Error::OffQuadric(_) => "OffQuadric",
            Error::ZeroTriple => "ZeroTriple",
            Error::ZeroRay => "ZeroRay",
            Error::ChartPole => "ChartPole",
            Error::ExceptionalPoint => "ExceptionalPoint",
            Error::StepFailure(_) => "StepFailure",
            Error::SpectrumHit => "SpectrumHit",
            Error::DomainError(_) => "DomainError",
            Error::ToleranceNotMet(_) => "ToleranceNotMet",
            Error::AliasWarning(_) => "AliasWarning",
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::DomainError(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
