//! Trajectory runs and the empirical convergence-order study.

use geomint_core::reference::DEFAULT_TOLERANCE;
use geomint_core::{
    euler_poincare_step, lie_poisson_step, reference_oracle, EulerPoincareState, LieGroup, LiePoissonState, SO3,
};

use crate::config::{IntegratorChoice, RunConfig};
use crate::error::CliError;
use crate::record::TrajectoryRecord;

/// Runs `cfg.steps` steps and returns the records for `k = 0..=steps`.
///
/// Nothing is written here; a failed step aborts the run with its index.
pub fn simulate(cfg: &RunConfig) -> Result<Vec<TrajectoryRecord>, CliError> {
    let inertia = &cfg.inertia;
    let mut records = Vec::with_capacity(cfg.steps + 1);
    let time = |k: usize| k as f64 * cfg.step;
    let fail = |step: usize| move |source| CliError::Step { step, source };
    match cfg.integrator {
        IntegratorChoice::LiePoisson => {
            let icfg = cfg.integrator_config();
            let map = cfg.map();
            let mut s = LiePoissonState::new(cfg.g0, cfg.mu0);
            records.push(TrajectoryRecord::from_momentum(0, 0.0, &s.g, &s.mu, inertia));
            for k in 1..=cfg.steps {
                s = lie_poisson_step(inertia, &icfg, &map, &s).map_err(fail(k))?.state;
                records.push(TrajectoryRecord::from_momentum(k, time(k), &s.g, &s.mu, inertia));
            }
        }
        IntegratorChoice::EulerPoincare => {
            let icfg = cfg.integrator_config();
            let map = cfg.map();
            let mut s = EulerPoincareState::new(cfg.g0, inertia.apply_inverse(&cfg.mu0));
            records.push(TrajectoryRecord::from_velocity(0, 0.0, &s.g, &s.xi, inertia));
            for k in 1..=cfg.steps {
                s = euler_poincare_step(inertia, &icfg, &map, &s).map_err(fail(k))?;
                records.push(TrajectoryRecord::from_velocity(k, time(k), &s.g, &s.xi, inertia));
            }
        }
        IntegratorChoice::Reference => {
            let mut s = LiePoissonState::new(cfg.g0, cfg.mu0);
            records.push(TrajectoryRecord::from_momentum(0, 0.0, &s.g, &s.mu, inertia));
            for k in 1..=cfg.steps {
                s = reference_oracle(inertia, &s, cfg.step, DEFAULT_TOLERANCE).map_err(fail(k))?;
                records.push(TrajectoryRecord::from_momentum(k, time(k), &s.g, &s.mu, inertia));
            }
        }
    }
    Ok(records)
}

/// Terminal state of a run, as `(g, mu)`; Euler-Poincaré states are mapped
/// through `mu = I xi`.
pub fn terminal_state(cfg: &RunConfig) -> Result<LiePoissonState<SO3>, CliError> {
    let inertia = &cfg.inertia;
    match cfg.integrator {
        IntegratorChoice::LiePoisson => {
            let icfg = cfg.integrator_config();
            let map = cfg.map();
            let mut s = LiePoissonState::new(cfg.g0, cfg.mu0);
            for k in 1..=cfg.steps {
                s = lie_poisson_step(inertia, &icfg, &map, &s)
                    .map_err(|source| CliError::Step { step: k, source })?
                    .state;
            }
            Ok(s)
        }
        IntegratorChoice::EulerPoincare => {
            let icfg = cfg.integrator_config();
            let map = cfg.map();
            let mut s = EulerPoincareState::new(cfg.g0, inertia.apply_inverse(&cfg.mu0));
            for k in 1..=cfg.steps {
                s = euler_poincare_step(inertia, &icfg, &map, &s).map_err(|source| CliError::Step { step: k, source })?;
            }
            Ok(LiePoissonState::new(s.g, inertia.apply(&s.xi)))
        }
        IntegratorChoice::Reference => {
            let s0 = LiePoissonState::new(cfg.g0, cfg.mu0);
            Ok(reference_oracle(inertia, &s0, cfg.total_time(), DEFAULT_TOLERANCE)?)
        }
    }
}

/// Errors below this are treated as roundoff.
pub const EXACT_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct OrderRow {
    pub step: f64,
    pub steps: usize,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrderReport {
    pub total_time: f64,
    pub rows: Vec<OrderRow>,
    /// Least-squares slope of `log(error)` against `log(step)`; `None` when exact.
    pub slope: Option<f64>,
    pub monotone: bool,
}

impl OrderReport {
    pub fn exact(&self) -> bool {
        self.slope.is_none()
    }
}

impl std::fmt::Display for OrderReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "total time {}", self.total_time)?;
        writeln!(f, "{:>12} {:>8} {:>24}", "step", "steps", "terminal error")?;
        for row in &self.rows {
            writeln!(f, "{:>12.4e} {:>8} {:>24.16e}", row.step, row.steps, row.error)?;
        }
        match self.slope {
            None => writeln!(f, "slope: exact (all errors below {EXACT_THRESHOLD:e})"),
            Some(p) => writeln!(
                f,
                "slope: {p:.4} ({})",
                if self.monotone { "monotone decay" } else { "NOT monotone" }
            ),
        }
    }
}

fn distance(a: &LiePoissonState<SO3>, b: &LiePoissonState<SO3>) -> f64 {
    a.g.distance(&b.g) + (a.mu - b.mu).norm()
}

/// Least-squares slope of `y` against `x`.
pub fn fit_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

/// Runs `cfg` at each step size over `cfg.total_time()` and compares the
/// terminal state with the reference oracle. Step sizes run concurrently.
pub fn order_study(cfg: &RunConfig, steps: &[f64]) -> Result<OrderReport, CliError> {
    if steps.len() < 3 {
        return Err(CliError::Config("order study needs at least 3 step sizes".into()));
    }
    for pair in steps.windows(2) {
        if ((pair[1] / pair[0]) - 0.5).abs() > 1e-9 {
            return Err(CliError::Config(format!(
                "each step size must halve the previous one ({} -> {})",
                pair[0], pair[1]
            )));
        }
    }
    let total_time = cfg.total_time();
    let mut runs = Vec::with_capacity(steps.len());
    for &step in steps {
        if !(step.is_finite() && step > 0.0) {
            return Err(CliError::Config(format!("step size {step} must be positive")));
        }
        let n = (total_time / step).round();
        if n < 1.0 || ((n * step - total_time) / total_time).abs() > 1e-9 {
            return Err(CliError::Config(format!(
                "step size {step} does not divide the total time {total_time}"
            )));
        }
        runs.push(RunConfig {
            step,
            steps: n as usize,
            ..cfg.clone()
        });
    }
    let s0 = LiePoissonState::new(cfg.g0, cfg.mu0);

    let (reference, terminals) = std::thread::scope(|scope| {
        let reference = scope.spawn(|| reference_oracle(&cfg.inertia, &s0, total_time, DEFAULT_TOLERANCE));
        let handles: Vec<_> = runs.iter().map(|run| scope.spawn(move || terminal_state(run))).collect();
        let terminals: Vec<_> = handles.into_iter().map(|h| h.join().expect("run thread panicked")).collect();
        (reference.join().expect("reference thread panicked"), terminals)
    });
    let reference = reference?;

    let mut rows = Vec::with_capacity(runs.len());
    for (run, terminal) in runs.iter().zip(terminals) {
        rows.push(OrderRow {
            step: run.step,
            steps: run.steps,
            error: distance(&terminal?, &reference),
        });
    }
    let slope = if rows.iter().all(|r| r.error < EXACT_THRESHOLD) {
        None
    } else {
        let x: Vec<f64> = rows.iter().map(|r| r.step.ln()).collect();
        let y: Vec<f64> = rows.iter().map(|r| r.error.max(f64::MIN_POSITIVE).ln()).collect();
        Some(fit_slope(&x, &y))
    };
    let monotone = rows.windows(2).all(|w| w[1].error < w[0].error);
    Ok(OrderReport {
        total_time,
        rows,
        slope,
        monotone,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use geomint_core::{CoalgebraVector, SolverSettings};

    #[test]
    fn records_cover_every_step() {
        let cfg = RunConfig::canonical(1e-2, 25);
        let records = simulate(&cfg).unwrap();
        assert_eq!(records.len(), 26);
        assert!(records.windows(2).all(|w| w[1].k == w[0].k + 1 && w[1].time > w[0].time));
        let c0 = records[0].casimir;
        assert!(records.iter().all(|r| ((r.casimir - c0) / c0).abs() <= 1e-12));
    }

    #[test]
    fn tiny_step_stays_at_initial_state() {
        let cfg = RunConfig::canonical(1e-12, 1);
        let records = simulate(&cfg).unwrap();
        let (a, b) = (&records[0], &records[1]);
        assert!(a.g.iter().zip(b.g).all(|(x, y)| (x - y).abs() < 1e-11));
        assert!(a.m.iter().zip(b.m).all(|(x, y)| (x - y).abs() < 1e-11));
    }

    #[test]
    fn every_integrator_runs() {
        for integrator in [IntegratorChoice::LiePoisson, IntegratorChoice::EulerPoincare, IntegratorChoice::Reference] {
            let cfg = RunConfig {
                integrator,
                ..RunConfig::canonical(1e-2, 10)
            };
            let records = simulate(&cfg).unwrap();
            assert_eq!(records.len(), 11);
            assert!(records.iter().all(|r| r.orth_residual < 1e-12));
        }
    }

    #[test]
    fn step_failure_reports_index() {
        let mut cfg = RunConfig::canonical(1e-2, 3);
        cfg.settings = SolverSettings::new(1e-13, 0);
        match simulate(&cfg) {
            Err(CliError::Step { step, source }) => {
                assert_eq!(step, 1);
                assert!(matches!(source, geomint_core::Error::SolverDiverged { .. }), "{source:?}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn slope_of_exact_power_law() {
        let x = [1e-2f64, 5e-3, 2.5e-3].map(f64::ln);
        let y = [1e-2f64, 5e-3, 2.5e-3].map(|t| (3.0 * t * t).ln());
        assert!((fit_slope(&x, &y) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn principal_axis_order_study_is_exact() {
        let cfg = RunConfig {
            mu0: CoalgebraVector::basis(0),
            ..RunConfig::canonical(1e-2, 100)
        };
        let report = order_study(&cfg, &[1e-2, 5e-3, 2.5e-3]).unwrap();
        assert!(report.exact(), "{report}");
    }

    #[test]
    fn reference_against_reference_is_exact() {
        let cfg = RunConfig {
            integrator: IntegratorChoice::Reference,
            ..RunConfig::canonical(1e-2, 100)
        };
        let report = order_study(&cfg, &[1e-2, 5e-3, 2.5e-3]).unwrap();
        assert!(report.rows.iter().all(|r| r.error == 0.0));
        assert!(report.exact());
    }

    #[test]
    fn order_study_validates_steps() {
        let cfg = RunConfig::canonical(1e-2, 100);
        assert!(matches!(order_study(&cfg, &[1e-2, 5e-3]), Err(CliError::Config(_))));
        assert!(matches!(order_study(&cfg, &[1e-2, 4e-3, 2e-3]), Err(CliError::Config(_))));
        assert!(matches!(order_study(&cfg, &[0.3, 0.15, 0.075]), Err(CliError::Config(_))));
    }
}
