//! Standardized mean differences from two-group data: pooled standard
//! deviation, Cohen's d, and the bias-corrected g* with a selectable
//! correction-factor method.

use crate::approx::{approx_value, ApproxKind};
use crate::error::{Error, Result};
use crate::gamma::DegreesOfFreedom;

/// One group's observations with summary statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupSample {
    values: Vec<f64>,
    mean: f64,
    variance: f64,
}

impl GroupSample {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Unbiased sample variance (divisor n − 1).
    pub fn variance(&self) -> f64 {
        self.variance
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Everything computed for one two-group comparison. `g_star` is always
/// exactly `correction_value * cohens_d`.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectSizeResult {
    /// ȳ_j − ȳ_i: second group's mean minus the first's.
    pub mean_difference: f64,
    pub pooled_sd: f64,
    pub cohens_d: f64,
    pub correction: ApproxKind,
    pub correction_value: f64,
    pub g_star: f64,
    /// n_i + n_j − 2.
    pub m: f64,
}

/// Summarize observations into a [`GroupSample`] using the corrected two-pass
/// variance algorithm (mean first, then centered sums), which keeps the
/// variance accurate even when the data sit on a large offset.
pub fn summarize(values: &[f64]) -> Result<GroupSample> {
    if values.len() < 2 {
        return Err(Error::InsufficientData { n: values.len() });
    }
    for (index, &value) in values.iter().enumerate() {
        if !value.is_finite() {
            return Err(Error::NonFinite { index, value });
        }
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let mut sum_sq = 0.0;
    let mut sum_dev = 0.0;
    for &value in values {
        let d = value - mean;
        sum_sq += d * d;
        sum_dev += d;
    }
    // the sum_dev term cancels the residual rounding of the mean
    let variance = (sum_sq - sum_dev * sum_dev / n) / (n - 1.0);
    Ok(GroupSample {
        values: values.to_vec(),
        mean,
        variance: variance.max(0.0),
    })
}

/// Pooled standard deviation √(((n_j−1)s_j² + (n_i−1)s_i²) / (n_i+n_j−2)).
pub fn pooled_sd(gi: &GroupSample, gj: &GroupSample) -> f64 {
    let ni = gi.n() as f64;
    let nj = gj.n() as f64;
    (((nj - 1.0) * gj.variance() + (ni - 1.0) * gi.variance()) / (nj + ni - 2.0)).sqrt()
}

/// Bias-corrected standardized mean difference between two groups, with the
/// first group as i and the second as j (positive g* means group j's mean is
/// larger).
pub fn hedges_g_star(
    gi: &GroupSample,
    gj: &GroupSample,
    kind: ApproxKind,
) -> Result<EffectSizeResult> {
    let m = (gi.n() + gj.n() - 2) as f64;
    let dof = DegreesOfFreedom::new(m)?;
    let pooled = pooled_sd(gi, gj);
    if pooled == 0.0 {
        return Err(Error::ZeroPooledSd);
    }
    let correction_value = approx_value(kind, dof)?;
    let mean_difference = gj.mean() - gi.mean();
    let cohens_d = mean_difference / pooled;
    Ok(EffectSizeResult {
        mean_difference,
        pooled_sd: pooled,
        cohens_d,
        correction: kind,
        correction_value,
        g_star: correction_value * cohens_d,
        m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summarize_small_samples() {
        let g = summarize(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.mean(), 2.0);
        assert_eq!(g.variance(), 1.0);

        let constant = summarize(&[5.0, 5.0, 5.0, 5.0]).unwrap();
        assert_eq!(constant.mean(), 5.0);
        assert_eq!(constant.variance(), 0.0);
    }

    #[test]
    fn summarize_is_shift_stable() {
        // naive sum-of-squares arithmetic would lose this variance entirely
        let g = summarize(&[1e9 + 1.0, 1e9 + 2.0, 1e9 + 3.0]).unwrap();
        assert_eq!(g.variance(), 1.0);
    }

    #[test]
    fn summarize_rejects_bad_input() {
        assert!(matches!(
            summarize(&[1.0]),
            Err(Error::InsufficientData { n: 1 })
        ));
        assert!(matches!(summarize(&[]), Err(Error::InsufficientData { n: 0 })));
        assert!(matches!(
            summarize(&[1.0, f64::NAN]),
            Err(Error::NonFinite { index: 1, .. })
        ));
        assert!(matches!(
            summarize(&[f64::INFINITY, 1.0]),
            Err(Error::NonFinite { index: 0, .. })
        ));
    }

    #[test]
    fn pooled_sd_known_points() {
        let a = summarize(&[0.0, 1.0, 2.0]).unwrap(); // variance 1
        let b = summarize(&[5.0, 6.0, 7.0]).unwrap(); // variance 1
        assert_eq!(pooled_sd(&a, &b), 1.0);

        let ca = summarize(&[3.0, 3.0]).unwrap();
        let cb = summarize(&[4.0, 4.0, 4.0]).unwrap();
        assert_eq!(pooled_sd(&ca, &cb), 0.0);

        // n_i = 3, s_i² = 4, n_j = 5, s_j² = 1 → √((4·1 + 2·4)/6) = √2
        let gi = summarize(&[0.0, 2.0, 4.0]).unwrap();
        assert_eq!(gi.variance(), 4.0);
        let gj = summarize(&[1.0, 1.0, 2.0, 3.0, 3.0]).unwrap();
        assert_eq!(gj.variance(), 1.0);
        assert_eq!(pooled_sd(&gi, &gj), 2f64.sqrt());
    }

    #[test]
    fn desk_example() {
        let gi = summarize(&[1.0, 2.0, 3.0]).unwrap();
        let gj = summarize(&[3.0, 4.0, 5.0]).unwrap();

        let exact = hedges_g_star(&gi, &gj, ApproxKind::Exact).unwrap();
        assert_eq!(exact.m, 4.0);
        assert_eq!(exact.cohens_d, 2.0);
        assert_eq!(exact.correction_value, 0.7978845608028654); // √(2/π)
        assert!((exact.g_star - 1.5957691216057308).abs() < 1e-15);

        let hedges = hedges_g_star(&gi, &gj, ApproxKind::Hedges).unwrap();
        assert_eq!(hedges.correction_value, 0.8);
        assert_eq!(hedges.g_star, 1.6);
    }

    #[test]
    fn identical_groups_give_zero() {
        let g = summarize(&[1.0, 2.0, 3.0]).unwrap();
        let r = hedges_g_star(&g, &g, ApproxKind::Exact).unwrap();
        assert_eq!(r.g_star, 0.0);
        assert_eq!(r.mean_difference, 0.0);
    }

    #[test]
    fn constant_groups_are_rejected() {
        let a = summarize(&[2.0, 2.0, 2.0]).unwrap();
        let b = summarize(&[2.0, 2.0]).unwrap();
        assert!(matches!(
            hedges_g_star(&a, &b, ApproxKind::Exact),
            Err(Error::ZeroPooledSd)
        ));
    }

    #[test]
    fn antisymmetry_is_exact() {
        let gi = summarize(&[0.5, 1.5, 4.0, 2.0]).unwrap();
        let gj = summarize(&[3.0, 7.0, 5.5]).unwrap();
        let ab = hedges_g_star(&gi, &gj, ApproxKind::Mortici(3)).unwrap();
        let ba = hedges_g_star(&gj, &gi, ApproxKind::Mortici(3)).unwrap();
        assert_eq!(ab.g_star, -ba.g_star);
        assert_eq!(ab.cohens_d, -ba.cohens_d);
        assert_eq!(ab.mean_difference, -ba.mean_difference);
        assert_eq!(ab.pooled_sd, ba.pooled_sd);
        assert_eq!(ab.correction_value, ba.correction_value);
    }

    #[test]
    fn shrinkage_toward_zero() {
        let gi = summarize(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        let gj = summarize(&[2.0, 4.0, 5.0]).unwrap();
        let r = hedges_g_star(&gi, &gj, ApproxKind::Exact).unwrap();
        assert!(r.g_star.abs() < r.cohens_d.abs());
        assert!(r.correction_value > 0.0 && r.correction_value < 1.0);
    }

    #[test]
    fn radicand_errors_propagate() {
        // two groups of 2 give m = 2, where order 4's radicand is exactly 0
        let a = summarize(&[1.0, 2.0]).unwrap();
        let b = summarize(&[3.0, 5.0]).unwrap();
        assert!(matches!(
            hedges_g_star(&a, &b, ApproxKind::Mortici(4)),
            Err(Error::RadicandNonpositive { order: 4, .. })
        ));
    }
}
