use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed jet: {0}")]
    MalformedJet(String),

    #[error("point outside field domain: {0}")]
    OutsideDomain(String),

    #[error("non-finite derivative at {0}")]
    NonFiniteDerivative(String),

    #[error("not strongly pseudoconvex at {0}")]
    NotPseudoconvex(String),

    #[error("neither graph branch is strongly pseudoconvex at the base center")]
    NoPseudoconvexBranch,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("polynomial is not holomorphic (contains conjugate variables)")]
    NotHolomorphic,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("parse error in polynomial literal: {0}")]
    PolyParse(String),

    #[error("extrapolation failed to converge: {0}")]
    ExtrapolationFailed(String),

    #[error("ill-conditioned fit (condition number {0:.3e})")]
    IllConditionedFit(f64),

    #[error("quadrature refinement diverges: {0}")]
    DivergentIntegral(String),

    #[error("optimizer failed: {0}")]
    OptimizerFailed(String),

    #[error("{0}")]
    Unsupported(String),
}
