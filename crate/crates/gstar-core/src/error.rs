use thiserror::Error;

use crate::approx::ApproxKind;

/// Errors raised by domain validation and numerical guards.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degrees of freedom must be finite and > 1, got {0}")]
    InvalidDegreesOfFreedom(f64),

    #[error("Wallis-ratio argument must be finite and > -1/2, got {0}")]
    InvalidWallisArgument(f64),

    #[error("log-gamma argument must be finite and > 0, got {0}")]
    LogGammaDomain(f64),

    #[error("half-integer gamma requires two_x >= 1")]
    HalfIntegerDomain,

    #[error("gamma(two_x = {two_x} over 2) overflows f64; use log_gamma instead")]
    GammaOverflow { two_x: u32 },

    #[error("approximation order must be in 1..=6, got {0}")]
    OrderOutOfRange(u32),

    #[error("radicand nonpositive; p{order} requires m > {min_m}")]
    RadicandNonpositive { order: u32, m: f64, min_m: f64 },

    #[error("Wallis polynomial of order {order} is nonpositive at x = {x}")]
    WallisRadicandNonpositive { order: u32, x: f64 },

    #[error("need at least 2 observations, got {n}")]
    InsufficientData { n: usize },

    #[error("observation {index} is not finite ({value})")]
    NonFinite { index: usize, value: f64 },

    #[error("pooled standard deviation is zero; effect size is undefined")]
    ZeroPooledSd,

    #[error("the exact kind has no approximation error")]
    ExactHasNoDelta,

    #[error("sweep range invalid: start {start} (must be > 1), end {end} (must be >= start), step {step} (must be > 0)")]
    InvalidSweepRange { start: f64, end: f64, step: f64 },

    #[error("sweep requires at least one non-exact approximation kind")]
    InvalidSweepKinds,

    #[error("{kind} is not valid at m = {m}")]
    KindDomain { kind: ApproxKind, m: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
