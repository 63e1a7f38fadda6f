//! Closed-form approximations of the correction factor: the classical
//! 1 − 3/(4m−1), the six root-of-polynomial Wallis-ratio approximants, and
//! the equivalent radicand polynomials in powers of 1/m that result from
//! substituting x = m/2 − 1.
//!
//! Coefficients are exact dyadic rationals; radicands are evaluated by a
//! single Horner pass so every caller sees the identical floating-point
//! value.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gamma::{j_exact, DegreesOfFreedom, WallisArgument};

/// Selects which correction-factor evaluation to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ApproxKind {
    /// The reference J(m) itself.
    Exact,
    /// 1 − 3/(4m − 1).
    Hedges,
    /// The 2k-th-root polynomial approximant of order k ∈ 1..=6.
    Mortici(u32),
}

impl ApproxKind {
    /// The seven kinds that approximate J (everything except `Exact`),
    /// in ascending order of expected error at moderate m.
    pub fn non_exact() -> [ApproxKind; 7] {
        [
            ApproxKind::Hedges,
            ApproxKind::Mortici(1),
            ApproxKind::Mortici(2),
            ApproxKind::Mortici(3),
            ApproxKind::Mortici(4),
            ApproxKind::Mortici(5),
            ApproxKind::Mortici(6),
        ]
    }
}

impl fmt::Display for ApproxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ApproxKind::Exact => write!(f, "exact"),
            ApproxKind::Hedges => write!(f, "hedges"),
            ApproxKind::Mortici(k) => write!(f, "p{k}"),
        }
    }
}

impl FromStr for ApproxKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exact" => Ok(ApproxKind::Exact),
            "hedges" => Ok(ApproxKind::Hedges),
            "p1" => Ok(ApproxKind::Mortici(1)),
            "p2" => Ok(ApproxKind::Mortici(2)),
            "p3" => Ok(ApproxKind::Mortici(3)),
            "p4" => Ok(ApproxKind::Mortici(4)),
            "p5" => Ok(ApproxKind::Mortici(5)),
            "p6" => Ok(ApproxKind::Mortici(6)),
            other => Err(format!(
                "unknown kind `{other}` (expected exact, hedges, or p1..p6)"
            )),
        }
    }
}

/// An exact rational coefficient. Every coefficient used here is dyadic, so
/// `as_f64` performs no rounding at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coefficient {
    pub num: i64,
    pub den: i64,
}

impl Coefficient {
    const fn new(num: i64, den: i64) -> Self {
        Coefficient { num, den }
    }

    #[inline]
    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

const fn c(num: i64, den: i64) -> Coefficient {
    Coefficient::new(num, den)
}

/// Wallis-ratio approximant polynomials in x, ascending powers x^0..x^k.
/// W_k(x) ≈ (poly_k(x))^(1/2k); the leading coefficient is always 1.
const WALLIS_COEFFS: [&[Coefficient]; 6] = [
    &[c(1, 4), c(1, 1)],
    &[c(1, 8), c(1, 2), c(1, 1)],
    &[c(5, 128), c(9, 32), c(3, 4), c(1, 1)],
    &[c(0, 1), c(1, 8), c(1, 2), c(1, 1), c(1, 1)],
    &[c(3, 8192), c(75, 2048), c(35, 128), c(25, 32), c(5, 4), c(1, 1)],
    &[c(11, 1024), c(3, 256), c(15, 128), c(1, 2), c(9, 8), c(3, 2), c(1, 1)],
];

/// Radicand polynomials in u = 1/m, ascending powers u^0..u^k.
/// P_k(m) = (poly_k(1/m))^(1/2k); the constant coefficient is always 1.
const RADICAND_COEFFS: [&[Coefficient]; 6] = [
    &[c(1, 1), c(-3, 2)],
    &[c(1, 1), c(-3, 1), c(5, 2)],
    &[c(1, 1), c(-9, 2), c(57, 8), c(-63, 16)],
    &[c(1, 1), c(-6, 1), c(14, 1), c(-15, 1), c(6, 1)],
    &[c(1, 1), c(-15, 2), c(185, 8), c(-585, 16), c(3755, 128), c(-2409, 256)],
    &[c(1, 1), c(-9, 1), c(69, 2), c(-72, 1), c(687, 8), c(-441, 8), c(247, 16)],
];

/// Smallest m for which each radicand stays positive; orders 2 and 6 are
/// positive over the whole m > 1 domain, so their bound is the domain edge.
/// Order 5's radicand has its largest real root at u ≈ 0.505486.
const MIN_VALID_M: [f64; 6] = [1.5, 1.0, 1.5, 2.0, 1.9782947599182685, 1.0];

/// The polynomial under the 2k-th root of a Wallis-ratio approximant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallisPolynomial {
    order: u32,
    coefficients: &'static [Coefficient],
}

impl WallisPolynomial {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn root_degree(&self) -> u32 {
        2 * self.order
    }

    /// Coefficients in ascending powers of x; the x^k coefficient is 1.
    pub fn coefficients(&self) -> &[Coefficient] {
        self.coefficients
    }
}

/// The degree-k polynomial in u = 1/m under the 2k-th root of P_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicandPolynomial {
    order: u32,
    coefficients: &'static [Coefficient],
}

impl RadicandPolynomial {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn root_degree(&self) -> u32 {
        2 * self.order
    }

    /// Coefficients in ascending powers of 1/m; the constant term is 1.
    pub fn coefficients(&self) -> &[Coefficient] {
        self.coefficients
    }
}

fn check_order(order: u32) -> Result<usize> {
    if (1..=6).contains(&order) {
        Ok((order - 1) as usize)
    } else {
        Err(Error::OrderOutOfRange(order))
    }
}

/// Horner evaluation of a coefficient list given in ascending powers.
fn horner(coeffs: &[Coefficient], t: f64) -> f64 {
    let mut acc = 0.0;
    for coef in coeffs.iter().rev() {
        acc = acc * t + coef.as_f64();
    }
    acc
}

/// r^(1/(2·order)), keeping the root's extra error within a few ulp.
fn root_2k(r: f64, order: u32) -> f64 {
    if order == 1 {
        r.sqrt()
    } else {
        (r.ln() / f64::from(2 * order)).exp()
    }
}

/// Hedges' classical approximation H(m) = 1 − 3/(4m − 1).
pub fn hedges_h(m: DegreesOfFreedom) -> f64 {
    1.0 - 3.0 / (4.0 * m.get() - 1.0)
}

/// The order-k Wallis approximant polynomial (in x), k ∈ 1..=6.
pub fn wallis_polynomial(order: u32) -> Result<WallisPolynomial> {
    let idx = check_order(order)?;
    Ok(WallisPolynomial {
        order,
        coefficients: WALLIS_COEFFS[idx],
    })
}

/// The order-k radicand polynomial (in 1/m), k ∈ 1..=6.
pub fn radicand_polynomial(order: u32) -> Result<RadicandPolynomial> {
    let idx = check_order(order)?;
    Ok(RadicandPolynomial {
        order,
        coefficients: RADICAND_COEFFS[idx],
    })
}

/// W_k(x) = (poly_k(x))^(1/2k), the order-k Wallis-ratio approximant.
pub fn wallis_approx(order: u32, x: WallisArgument) -> Result<f64> {
    let idx = check_order(order)?;
    let r = horner(WALLIS_COEFFS[idx], x.get());
    if r <= 0.0 {
        return Err(Error::WallisRadicandNonpositive { order, x: x.get() });
    }
    Ok(root_2k(r, order))
}

/// Smallest m above which the order-k radicand is strictly positive.
pub fn min_valid_m(order: u32) -> Result<f64> {
    let idx = check_order(order)?;
    Ok(MIN_VALID_M[idx])
}

/// P_k(m) = (poly_k(1/m))^(1/2k), the order-k approximation of J(m).
///
/// Fails with [`Error::RadicandNonpositive`] when the radicand is ≤ 0 (for
/// example order 4 at m = 2, where it is exactly zero while J(2) ≈ 0.564).
pub fn p_approx(order: u32, m: DegreesOfFreedom) -> Result<f64> {
    let idx = check_order(order)?;
    let u = 1.0 / m.get();
    let r = horner(RADICAND_COEFFS[idx], u);
    if r <= 0.0 {
        return Err(Error::RadicandNonpositive {
            order,
            m: m.get(),
            min_m: MIN_VALID_M[idx],
        });
    }
    Ok(root_2k(r, order))
}

/// Uniform dispatcher: `Exact` is bit-identical to [`j_exact`], `Hedges` to
/// [`hedges_h`], and `Mortici(k)` to [`p_approx`].
pub fn approx_value(kind: ApproxKind, m: DegreesOfFreedom) -> Result<f64> {
    match kind {
        ApproxKind::Exact => Ok(j_exact(m)),
        ApproxKind::Hedges => Ok(hedges_h(m)),
        ApproxKind::Mortici(order) => p_approx(order, m),
    }
}
