//! Absolute-error analysis of the approximations against the exact J(m):
//! per-point deltas, the six-row reference accuracy table, the error-ordering
//! check, and grid sweeps for plotting.

use rayon::prelude::*;

use crate::approx::{approx_value, ApproxKind};
use crate::error::{Error, Result};
use crate::gamma::{j_exact, DegreesOfFreedom};

/// The m values of the reference accuracy table.
pub const TABLE_M: [f64; 6] = [10.0, 30.0, 50.0, 70.0, 100.0, 200.0];

/// Expected error ordering at moderate m, best first:
/// δ6 < δ5 < δ4 < δ3 < δ2 < δ0 < δ1.
pub const ORDERING_CHAIN: [ApproxKind; 7] = [
    ApproxKind::Mortici(6),
    ApproxKind::Mortici(5),
    ApproxKind::Mortici(4),
    ApproxKind::Mortici(3),
    ApproxKind::Mortici(2),
    ApproxKind::Hedges,
    ApproxKind::Mortici(1),
];

/// One grid row: m plus the absolute error of each requested kind.
/// `None` marks a point where the kind's radicand is not positive.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRow {
    pub m: f64,
    pub deltas: Vec<(ApproxKind, Option<f64>)>,
}

impl ErrorRow {
    pub fn delta(&self, kind: ApproxKind) -> Option<f64> {
        self.deltas.iter().find(|(k, _)| *k == kind).and_then(|(_, d)| *d)
    }
}

/// |approximation(m) − J(m)| for one of the seven non-exact kinds.
pub fn delta(kind: ApproxKind, m: DegreesOfFreedom) -> Result<f64> {
    if kind == ApproxKind::Exact {
        return Err(Error::ExactHasNoDelta);
    }
    Ok((approx_value(kind, m)? - j_exact(m)).abs())
}

fn row_for(m: f64, kinds: &[ApproxKind]) -> ErrorRow {
    let dof = DegreesOfFreedom::new(m).expect("grid m is validated > 1");
    let deltas = kinds
        .iter()
        .map(|&kind| (kind, delta(kind, dof).ok()))
        .collect();
    ErrorRow { m, deltas }
}

/// The reference accuracy table: rows for m ∈ {10, 30, 50, 70, 100, 200}
/// with all seven deltas present.
pub fn reference_table() -> Vec<ErrorRow> {
    TABLE_M
        .iter()
        .map(|&m| row_for(m, &ApproxKind::non_exact()))
        .collect()
}

/// Outcome of checking the error ordering at one m.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderingReport {
    pub m: f64,
    pub floor: f64,
    /// True iff every comparable pair in the chain is strictly ordered.
    pub holds: bool,
    /// Kinds whose delta sits below the floor; pairs drawn entirely from
    /// this set are not compared.
    pub below_floor: Vec<ApproxKind>,
    /// Ordered pairs (expected smaller, expected larger) that failed,
    /// with their delta values.
    pub violations: Vec<(ApproxKind, ApproxKind, f64, f64)>,
}

/// Check δ6 < δ5 < δ4 < δ3 < δ2 < δ0 < δ1 at m, treating any pair with both
/// deltas below `floor` as incomparable rather than as a failure. Intended
/// for m ≥ 10; kinds whose delta is undefined at m are skipped entirely.
pub fn verify_ordering(m: DegreesOfFreedom, floor: f64) -> OrderingReport {
    let values: Vec<(ApproxKind, Option<f64>)> = ORDERING_CHAIN
        .iter()
        .map(|&kind| (kind, delta(kind, m).ok()))
        .collect();

    let below_floor = values
        .iter()
        .filter_map(|&(kind, d)| match d {
            Some(v) if v < floor => Some(kind),
            _ => None,
        })
        .collect();

    let mut violations = Vec::new();
    for (i, &(ka, da)) in values.iter().enumerate() {
        for &(kb, db) in &values[i + 1..] {
            let (Some(da), Some(db)) = (da, db) else { continue };
            if da < floor && db < floor {
                continue;
            }
            if !(da < db) {
                violations.push((ka, kb, da, db));
            }
        }
    }

    OrderingReport {
        m: m.get(),
        floor,
        holds: violations.is_empty(),
        below_floor,
        violations,
    }
}

/// Grid description for [`sweep`]. Validated on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    start: f64,
    end: f64,
    step: f64,
    kinds: Vec<ApproxKind>,
}

impl SweepConfig {
    pub fn new(start: f64, end: f64, step: f64, kinds: Vec<ApproxKind>) -> Result<Self> {
        if !(start.is_finite() && end.is_finite() && step.is_finite())
            || start <= 1.0
            || end < start
            || step <= 0.0
        {
            return Err(Error::InvalidSweepRange { start, end, step });
        }
        if kinds.is_empty() || kinds.contains(&ApproxKind::Exact) {
            return Err(Error::InvalidSweepKinds);
        }
        Ok(SweepConfig { start, end, step, kinds })
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn end(&self) -> f64 {
        self.end
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn kinds(&self) -> &[ApproxKind] {
        &self.kinds
    }

    /// Grid points start, start+step, …, ≤ end (with a tiny tolerance so
    /// that an exact multiple landing on `end` is kept).
    pub fn points(&self) -> Vec<f64> {
        let count = ((self.end - self.start) / self.step * (1.0 + 1e-12)).floor() as usize + 1;
        (0..count).map(|i| self.start + i as f64 * self.step).collect()
    }
}

/// Evaluate the absolute errors of the configured kinds over the grid.
/// Points are independent and evaluated in parallel; rows come back in
/// ascending m and are identical to sequential evaluation. Per-point domain
/// failures become `None` entries instead of aborting the sweep.
pub fn sweep(config: &SweepConfig) -> Vec<ErrorRow> {
    config
        .points()
        .into_par_iter()
        .map(|m| row_for(m, &config.kinds))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dof(m: f64) -> DegreesOfFreedom {
        DegreesOfFreedom::new(m).unwrap()
    }

    fn assert_close(got: f64, want: f64, rel: f64) {
        assert!(
            ((got - want) / want).abs() <= rel,
            "got {got:e}, want {want:e}"
        );
    }

    #[test]
    fn delta_known_points() {
        // frozen high-precision reference values
        assert_close(delta(ApproxKind::Hedges, dof(10.0)).unwrap(), 3.3131502383597355e-4, 1e-10);
        assert_close(delta(ApproxKind::Mortici(2), dof(50.0)).unwrap(), 5.556732621422838e-9, 1e-6);
        assert_close(delta(ApproxKind::Mortici(3), dof(30.0)).unwrap(), 4.0260901860078225e-8, 1e-7);
    }

    #[test]
    fn delta_rejects_exact() {
        assert!(matches!(
            delta(ApproxKind::Exact, dof(10.0)),
            Err(Error::ExactHasNoDelta)
        ));
    }

    #[test]
    fn delta_propagates_domain_errors() {
        // order 1's radicand is exactly 0 at m = 1.5
        assert!(matches!(
            delta(ApproxKind::Mortici(1), dof(1.5)),
            Err(Error::RadicandNonpositive { order: 1, .. })
        ));
    }

    #[test]
    fn reference_table_shape() {
        let table = reference_table();
        assert_eq!(table.len(), 6);
        for (row, want_m) in table.iter().zip(TABLE_M) {
            assert_eq!(row.m, want_m);
            assert_eq!(row.deltas.len(), 7);
            assert!(row.deltas.iter().all(|(_, d)| d.is_some()));
            assert!(row.deltas.iter().all(|(_, d)| d.unwrap() >= 0.0));
        }
    }

    #[test]
    fn reference_table_row_30() {
        // frozen oracle values for the m = 30 row
        let table = reference_table();
        let row = &table[1];
        assert_close(row.delta(ApproxKind::Hedges).unwrap(), 3.553775198455216e-5, 1e-9);
        assert_close(row.delta(ApproxKind::Mortici(1)).unwrap(), 7.494373350561178e-5, 1e-9);
        assert_close(row.delta(ApproxKind::Mortici(2)).unwrap(), 4.602927127301137e-8, 1e-7);
        assert_close(row.delta(ApproxKind::Mortici(3)).unwrap(), 4.0260901860078225e-8, 1e-7);
        assert_close(row.delta(ApproxKind::Mortici(4)).unwrap(), 1.1295763782819881e-10, 1e-4);
        assert_close(row.delta(ApproxKind::Mortici(5)).unwrap(), 1.0674792282713408e-10, 1e-4);
        assert_close(row.delta(ApproxKind::Mortici(6)).unwrap(), 6.189050918728925e-13, 1e-2);
    }

    #[test]
    fn ordering_holds_at_10_with_zero_floor() {
        let report = verify_ordering(dof(10.0), 0.0);
        assert!(report.holds, "violations: {:?}", report.violations);
        assert!(report.below_floor.is_empty());
    }

    #[test]
    fn ordering_at_200_with_floor() {
        let report = verify_ordering(dof(200.0), 1e-13);
        assert!(report.holds, "violations: {:?}", report.violations);
        // the three highest orders sit below the binary64 floor there
        for kind in [ApproxKind::Mortici(4), ApproxKind::Mortici(5), ApproxKind::Mortici(6)] {
            assert!(report.below_floor.contains(&kind));
        }
        assert!(!report.below_floor.contains(&ApproxKind::Hedges));
        assert!(!report.below_floor.contains(&ApproxKind::Mortici(2)));
    }

    #[test]
    fn ordering_reports_violations_at_small_m() {
        // well below the m ≥ 10 regime the chain genuinely breaks:
        // at m = 2.5, δ2 ≈ 7.2e-3 exceeds δ0 ≈ 5.1e-3
        let report = verify_ordering(dof(2.5), 0.0);
        assert!(!report.holds);
        assert!(report
            .violations
            .iter()
            .any(|&(a, b, ..)| a == ApproxKind::Mortici(2) && b == ApproxKind::Hedges));
    }

    #[test]
    fn single_point_sweep_matches_table() {
        let config = SweepConfig::new(10.0, 10.0, 1.0, ApproxKind::non_exact().to_vec()).unwrap();
        let rows = sweep(&config);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0], reference_table()[0]);
    }

    #[test]
    fn sweep_grid_and_gaps() {
        // from 1.2 to 2.2, order 1 is undefined until m > 1.5
        let config = SweepConfig::new(
            1.2,
            2.2,
            0.1,
            vec![ApproxKind::Mortici(1), ApproxKind::Mortici(2)],
        )
        .unwrap();
        let rows = sweep(&config);
        assert_eq!(rows.len(), 11);
        assert_eq!(rows[0].delta(ApproxKind::Mortici(1)), None);
        assert!(rows[0].delta(ApproxKind::Mortici(2)).is_some());
        assert!(rows[10].delta(ApproxKind::Mortici(1)).is_some());
    }

    #[test]
    fn sweep_config_validation() {
        assert!(matches!(
            SweepConfig::new(10.0, 9.0, 1.0, vec![ApproxKind::Hedges]),
            Err(Error::InvalidSweepRange { .. })
        ));
        assert!(matches!(
            SweepConfig::new(10.0, 20.0, 0.0, vec![ApproxKind::Hedges]),
            Err(Error::InvalidSweepRange { .. })
        ));
        assert!(matches!(
            SweepConfig::new(0.5, 20.0, 1.0, vec![ApproxKind::Hedges]),
            Err(Error::InvalidSweepRange { .. })
        ));
        assert!(matches!(
            SweepConfig::new(10.0, 20.0, 1.0, vec![]),
            Err(Error::InvalidSweepKinds)
        ));
        assert!(matches!(
            SweepConfig::new(10.0, 20.0, 1.0, vec![ApproxKind::Exact]),
            Err(Error::InvalidSweepKinds)
        ));
    }

    #[test]
    fn sweep_point_count_is_robust() {
        let config =
            SweepConfig::new(10.0, 200.0, 1.0, vec![ApproxKind::Hedges]).unwrap();
        assert_eq!(config.points().len(), 191);
        let first = config.points()[0];
        let last = *config.points().last().unwrap();
        assert_eq!(first, 10.0);
        assert_eq!(last, 200.0);
    }
}
