//! Exact and approximate small-sample correction factors for standardized
//! mean differences.
//!
//! The multiplicative correction J(m) = Γ(m/2) / (√(m/2) Γ((m−1)/2)) turns
//! Cohen's d into the unbiased g*. This crate provides:
//!
//! - a double-double-backed reference evaluation of J, the Wallis ratio
//!   Γ(x+1)/Γ(x+1/2), and log-gamma ([`gamma`]);
//! - the classical approximation 1 − 3/(4m−1) and six root-of-polynomial
//!   approximants of increasing accuracy ([`approx`]);
//! - effect-size computation from two-group data ([`effect`]);
//! - absolute-error tables, ordering checks, and grid sweeps ([`accuracy`]).
//!
//! ```
//! use gstar_core::{hedges_g_star, summarize, ApproxKind};
//!
//! let gi = summarize(&[1.0, 2.0, 3.0]).unwrap();
//! let gj = summarize(&[3.0, 4.0, 5.0]).unwrap();
//! let r = hedges_g_star(&gi, &gj, ApproxKind::Exact).unwrap();
//! assert_eq!(r.cohens_d, 2.0);
//! assert!((r.g_star - 1.5957691216057308).abs() < 1e-15);
//! ```

pub mod accuracy;
pub mod approx;
mod dd;
pub mod effect;
mod error;
pub mod gamma;

pub use accuracy::{
    delta, reference_table, sweep, verify_ordering, ErrorRow, OrderingReport, SweepConfig,
    ORDERING_CHAIN, TABLE_M,
};
pub use approx::{
    approx_value, hedges_h, min_valid_m, p_approx, radicand_polynomial, wallis_approx,
    wallis_polynomial, ApproxKind, Coefficient, RadicandPolynomial, WallisPolynomial,
};
pub use effect::{hedges_g_star, pooled_sd, summarize, EffectSizeResult, GroupSample};
pub use error::{Error, Result};
pub use gamma::{
    gamma_half_integer, j_exact, log_gamma, wallis_ratio_exact, DegreesOfFreedom, WallisArgument,
};
