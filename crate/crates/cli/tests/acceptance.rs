//! Acceptance gate. Runs every criterion on the canonical free rigid body,
//! prints one PASS/FAIL line each and exits non-zero if any fails.

use std::time::{Duration, Instant};

use geomint_cli::run::order_study;
use geomint_cli::suites::{run_suite, DEFAULT_SEED, SUITES};
use geomint_cli::{simulate, RunConfig};
use geomint_core::{
    euler_poincare_residual, euler_poincare_step, lie_poisson_residual, lie_poisson_step, CoalgebraVector,
    EulerPoincareState, LieGroup, LiePoissonState, SO3,
};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

fn casimir_and_orthogonality() -> (Outcome, Outcome) {
    let cfg = RunConfig::canonical(1e-2, 10_000);
    let (records, elapsed) = timed(|| simulate(&cfg).expect("canonical run"));
    let c0 = records[0].casimir;
    let drift = records.iter().map(|r| ((r.casimir - c0) / c0).abs()).fold(0.0, f64::max);
    let orth = records.iter().map(|r| r.orth_residual).fold(0.0, f64::max);
    let secs = elapsed.as_secs_f64();
    (
        outcome(
            drift <= 1e-12 && secs <= 5.0,
            format!("max relative Casimir drift {drift:.3e} (<= 1e-12), runtime {secs:.2} s (<= 5 s)"),
        ),
        outcome(orth <= 1e-8, format!("max |g^T g - I|_F {orth:.3e} (<= 1e-8)")),
    )
}

fn convergence_order() -> Outcome {
    let cfg = RunConfig::canonical(1e-2, 100);
    let (report, elapsed) = timed(|| order_study(&cfg, &[1e-2, 5e-3, 2.5e-3]).expect("order study"));
    let secs = elapsed.as_secs_f64();
    let errors: Vec<String> = report.rows.iter().map(|r| format!("{:.3e}", r.error)).collect();
    match report.slope {
        Some(p) => outcome(
            (0.8..=2.2).contains(&p) && report.monotone && secs <= 10.0,
            format!(
                "slope {p:.4} (in [0.8, 2.2]), errors [{}] {}, runtime {secs:.2} s (<= 10 s)",
                errors.join(", "),
                if report.monotone { "monotone" } else { "NOT monotone" }
            ),
        ),
        None => outcome(false, format!("errors [{}] all at roundoff, no slope to fit", errors.join(", "))),
    }
}

fn energy_stability() -> Outcome {
    let cfg = RunConfig::canonical(1e-3, 10_000);
    let records = simulate(&cfg).expect("canonical run");
    let h0 = records[0].energy;
    let deviation: Vec<f64> = records[1..].iter().map(|r| (r.energy - h0).abs()).collect();
    let decile = deviation.len() / 10;
    let mean = |s: &[f64]| s.iter().sum::<f64>() / s.len() as f64;
    let first = mean(&deviation[..decile]);
    let last = mean(&deviation[deviation.len() - decile..]);
    outcome(
        last <= 2.0 * first,
        format!(
            "mean |h - h0| first decile {first:.3e}, last decile {last:.3e}, ratio {:.3} (<= 2)",
            last / first
        ),
    )
}

fn relative_equilibrium() -> Outcome {
    let mut cfg = RunConfig::canonical(1e-2, 1000);
    cfg.mu0 = CoalgebraVector::basis(0);
    let records = simulate(&cfg).expect("principal-axis run");
    let mut mu_dev = 0.0f64;
    let mut g_dev = 0.0f64;
    for r in &records {
        mu_dev = mu_dev.max(((r.m[0] - 1.0).powi(2) + r.m[1].powi(2) + r.m[2].powi(2)).sqrt());
        // angular velocity I⁻¹ mu = e1, so the accumulated angle is k t
        let expected = SO3::rot_x(r.k as f64 * cfg.step).flatten();
        let d = r.g.iter().zip(&expected).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
        g_dev = g_dev.max(d);
    }
    outcome(
        mu_dev <= 1e-12 && g_dev <= 1e-9,
        format!("max |mu_k - mu0| {mu_dev:.3e} (<= 1e-12), max |g_k - Rx(kt)|_F {g_dev:.3e} (<= 1e-9)"),
    )
}

fn structural_suites() -> Outcome {
    let mut failed = Vec::new();
    let mut checks = 0;
    for name in SUITES {
        let report = run_suite(name, DEFAULT_SEED).expect("known suite");
        checks += report.checks.len();
        for c in report.checks.iter().filter(|c| !c.passed()) {
            failed.push(format!("{name}/{} worst {:.3e} > {:.0e}", c.name, c.worst, c.tolerance));
        }
    }
    if failed.is_empty() {
        outcome(true, format!("{checks} checks over {} suites, 500 samples each, seed {DEFAULT_SEED}", SUITES.len()))
    } else {
        outcome(false, failed.join("; "))
    }
}

fn legendre_consistency() -> Outcome {
    let t = 1e-3;
    let cfg = RunConfig::canonical(t, 1);
    let icfg = cfg.integrator_config();
    let map = cfg.map();
    let lp = lie_poisson_step(&cfg.inertia, &icfg, &map, &LiePoissonState::new(cfg.g0, cfg.mu0))
        .expect("lie-poisson step")
        .state;
    let xi0 = cfg.inertia.apply_inverse(&cfg.mu0);
    let ep = euler_poincare_step(&cfg.inertia, &icfg, &map, &EulerPoincareState::new(cfg.g0, xi0)).expect("ep step");
    let diff = (cfg.inertia.apply(&ep.xi) - lp.mu).norm();
    outcome(diff <= 10.0 * t * t, format!("|I xi_1 - mu_1| {diff:.3e} (<= 10 t^2 = {:.1e})", 10.0 * t * t))
}

fn step_equation_residuals() -> Outcome {
    let cfg = RunConfig::canonical(1e-2, 10_000);
    let icfg = cfg.integrator_config();
    let map = cfg.map();
    let inertia = &cfg.inertia;
    let mut lp = LiePoissonState::new(cfg.g0, cfg.mu0);
    let mut ep = EulerPoincareState::new(cfg.g0, inertia.apply_inverse(&cfg.mu0));
    let (mut worst_lp, mut worst_ep) = (0.0f64, 0.0f64);
    for _ in 0..cfg.steps {
        let next = lie_poisson_step(inertia, &icfg, &map, &lp).expect("lie-poisson step").state;
        worst_lp = worst_lp.max(lie_poisson_residual(inertia, &icfg, &map, &lp, &next).expect("lift inverse"));
        lp = next;
        let next = euler_poincare_step(inertia, &icfg, &map, &ep).expect("ep step");
        worst_ep = worst_ep.max(euler_poincare_residual(inertia, &icfg, &map, &ep, &next).expect("lift inverse"));
        ep = next;
    }
    outcome(
        worst_lp <= 1e-10 && worst_ep <= 1e-10,
        format!(
            "max residual over {} steps: lie-poisson {worst_lp:.3e}, euler-poincare {worst_ep:.3e} (<= 1e-10)",
            cfg.steps
        ),
    )
}

fn main() {
    let (c1, c2) = casimir_and_orthogonality();
    let results = [
        ("1 casimir conservation", c1),
        ("2 group-manifold preservation", c2),
        ("3 convergence order", convergence_order()),
        ("4 energy stability", energy_stability()),
        ("5 relative equilibrium", relative_equilibrium()),
        ("6 structural property suites", structural_suites()),
        ("7 euler-poincare / lie-poisson consistency", legendre_consistency()),
        ("8 step-equation residual", step_equation_residuals()),
    ];
    let mut failures = 0;
    for (name, o) in &results {
        println!("[{}] criterion {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        failures += usize::from(!o.passed);
    }
    println!("acceptance: {} passed, {failures} failed", results.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
