use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate polynomial: every coefficient is below 1e-300 in magnitude")]
    DegeneratePolynomial,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("x = {x} lies outside the domain of the {family} potential")]
    Domain { x: f64, family: &'static str },

    #[error("energy is singular: shifted parameter a_{k} vanishes")]
    SingularEnergy { k: i64 },

    #[error("level {k} is not a bound state (the potential has {count} bound states)")]
    NoSuchBoundState { k: usize, count: usize },

    #[error("continued fraction hits a pole at x = {x}")]
    PoleHit { x: f64 },

    #[error("v_n and w_k coincide at x = {x}; resample")]
    Coincidence { x: f64 },

    #[error("extension is singular in the domain: {reason}")]
    Regularity { reason: String, branch: String },

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("no extra lower state: psi_- is not normalizable (strict isospectrality)")]
    NoExtraState,

    #[error("potential is not finite at grid point x = {x}")]
    NonFinitePotential { x: f64 },

    #[error("requested {requested} levels but only {resolvable} are resolvable on this grid")]
    CountExceedsResolvable { requested: usize, resolvable: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("quadrature did not converge: estimate {estimate}, error {error}")]
    QuadratureNonConvergence { estimate: f64, error: f64 },
}
