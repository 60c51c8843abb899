use crate::sides::Kind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid side {index}: {reason}")]
    InvalidSides { index: usize, reason: String },
    #[error("no closing quadrilateral for the requested angle")]
    NoClosing,
    #[error("degenerate pivot: the two circle centres coincide")]
    DegeneratePivot,
    #[error("degenerate fold axis{}", step.map(|s| format!(" at step {s}")).unwrap_or_default())]
    DegenerateAxis { step: Option<usize> },
    #[error("conic side lengths have no folding period")]
    ConicInput,
    #[error("side lengths are not of elliptic type ({0:?})")]
    NotElliptic(Kind),
    #[error("quadrilaterals live in different geometries")]
    MixedGeometry,
    #[error("point is off the angle curve (residual {0:e})")]
    OffCurve(f64),
    #[error("indeterminate fraction 0/0")]
    IndeterminateFraction,
    #[error("leading coefficient of the diagonal quadratic vanishes")]
    DegenerateLeading,
    #[error("side lengths are not of a degenerate kind")]
    NotDegenerate,
    #[error("modulus {0} outside [0, 1)")]
    ModulusOutOfRange(f64),
    #[error("argument {0} outside the admissible range")]
    OutOfRange(f64),
    #[error("pole of the imaginary transformation at u = {0}")]
    PoleAt(f64),
    #[error("multiple-angle recursion hits a pole at step {0}")]
    RecursionPole(usize),
    #[error("no parametrization for kind {0:?}")]
    DegenerateKind(Kind),
    #[error("parameter {0} is not admissible")]
    PoleAtParameter(f64),
    #[error("quadrilateral is not on the real locus (mismatch {0:e})")]
    NoMatch(f64),
    #[error("degenerate denominator")]
    DegenerateDenominator,
    #[error("conjugate construction failed (mismatch {0:e})")]
    ConstructionFailed(f64),
    #[error("confocal curves do not intersect")]
    NoIntersection,
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error("exact values must share one quadratic field")]
    MixedRadicands,
}

impl Error {
    /// Errors caused by invalid input rather than a failed computation.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidSides { .. }
                | Error::MixedGeometry
                | Error::NotElliptic(_)
                | Error::ConicInput
                | Error::NotDegenerate
                | Error::DegenerateKind(_)
                | Error::ModulusOutOfRange(_)
                | Error::OutOfRange(_)
                | Error::Unsupported(_)
                | Error::MixedRadicands
        )
    }
}
