//! Randomized structural property suites behind `geomint check`.

use geomint_core::bundles::{tg_inverse, tg_mult, tstarg_inverse, tstarg_mult, ttg_inverse, ttg_mult};
use geomint_core::lifts::{cotangent_lift, cotangent_lift_inverse, tangent_lift, tangent_lift_inverse};
use geomint_core::tulczyjew::{alpha, alpha_inv, beta, beta_inv, kappa};
use geomint_core::{
    algebra::pairing, euler_poincare_residual, euler_poincare_step, lie_poisson_residual, lie_poisson_step, Alg,
    AlgebraVector, CoAlg, CoalgebraVector, DiscretizationMap, EulerPoincareState, InertiaOperator, IntegratorConfig,
    LieGroup, LiePoissonState, TTGPoint, TTStarGPoint, TauFamily, TauMap, TrivializedCotangentPoint,
    TrivializedTangentPoint, SO3,
};
use geomint_core::nalgebra::Vector3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SUITES: [&str; 6] = ["algebra", "bundles", "tulczyjew", "retraction", "lifts", "integrators"];
pub const SAMPLES: usize = 500;
pub const DEFAULT_SEED: u64 = 0x9e0_1e7;
pub const SEED_ENV: &str = "GEOMINT_SEED";

/// Seed from `GEOMINT_SEED`, or the fixed default.
pub fn seed_from_env() -> Result<u64, String> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|e| format!("{SEED_ENV}={v:?} is not an unsigned integer: {e}")),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    /// Largest error seen over all samples.
    pub worst: f64,
    pub tolerance: f64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.worst <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }
}

impl std::fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {}/{}: worst {:.3e} (tolerance {:.0e})",
                if c.passed() { "PASS" } else { "FAIL" },
                self.suite,
                c.name,
                c.worst,
                c.tolerance
            )?;
        }
        Ok(())
    }
}

struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    fn vec3(&mut self, bound: f64) -> Vector3<f64> {
        Vector3::from_fn(|_, _| self.rng.random_range(-bound..bound))
    }

    /// Uniform in the ball of radius `r`.
    fn ball(&mut self, r: f64) -> Vector3<f64> {
        loop {
            let v = self.vec3(1.0);
            if v.norm_squared() <= 1.0 {
                return v * r;
            }
        }
    }

    fn alg(&mut self, bound: f64) -> Alg<SO3> {
        AlgebraVector::new(self.vec3(bound))
    }

    fn coalg(&mut self, bound: f64) -> CoAlg<SO3> {
        CoalgebraVector::new(self.vec3(bound))
    }

    fn rotation(&mut self) -> SO3 {
        SO3::exp(&AlgebraVector::new(self.ball(3.0)))
    }

    fn tau(&mut self) -> TauMap {
        if self.rng.random_bool(0.5) {
            TauMap::EXP
        } else {
            TauMap::CAYLEY
        }
    }
}

struct Tally {
    checks: Vec<CheckResult>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: Vec::new() }
    }

    fn check(&mut self, name: &'static str, tolerance: f64, mut sample: impl FnMut() -> f64) {
        let mut worst = 0.0f64;
        for _ in 0..SAMPLES {
            let e = sample();
            // NaN counts as a failure
            worst = if e.is_nan() { f64::INFINITY } else { worst.max(e) };
        }
        self.checks.push(CheckResult { name, worst, tolerance });
    }
}

const THETAS: [f64; 4] = [0.0, 0.25, 0.5, 1.0];

fn suite_seed(seed: u64, suite: &str) -> u64 {
    suite.bytes().fold(seed, |acc, b| acc.rotate_left(5) ^ u64::from(b))
}

/// Runs the named suite with `SAMPLES` random draws per check.
pub fn run_suite(name: &str, seed: u64) -> Option<SuiteReport> {
    let suite = *SUITES.iter().find(|s| **s == name)?;
    let mut s = Sampler {
        rng: ChaCha8Rng::seed_from_u64(suite_seed(seed, suite)),
    };
    let mut t = Tally::new();
    match suite {
        "algebra" => algebra(&mut s, &mut t),
        "bundles" => bundles(&mut s, &mut t),
        "tulczyjew" => tulczyjew(&mut s, &mut t),
        "retraction" => retraction(&mut s, &mut t),
        "lifts" => lifts(&mut s, &mut t),
        "integrators" => integrators(&mut s, &mut t),
        _ => unreachable!(),
    }
    Some(SuiteReport { suite, checks: t.checks })
}

fn algebra(s: &mut Sampler, t: &mut Tally) {
    t.check("group_associativity", 1e-12, || {
        let (a, b, c) = (s.rotation(), s.rotation(), s.rotation());
        a.compose(&b).compose(&c).distance(&a.compose(&b.compose(&c)))
    });
    t.check("group_inverse", 1e-12, || {
        let a = s.rotation();
        a.compose(&a.inverse()).distance(&SO3::identity()) + a.inverse().compose(&a).distance(&SO3::identity())
    });
    t.check("adjoint_homomorphism", 1e-12, || {
        let (a, b, xi) = (s.rotation(), s.rotation(), s.alg(2.0));
        (a.compose(&b).adjoint(&xi) - a.adjoint(&b.adjoint(&xi))).norm()
    });
    t.check("coadjoint_dual_of_adjoint", 1e-12, || {
        let (a, xi, mu) = (s.rotation(), s.alg(2.0), s.coalg(2.0));
        (pairing(&a.coadjoint(&mu), &xi) - pairing(&mu, &a.adjoint(&xi))).abs()
    });
    t.check("jacobi_identity", 1e-12, || {
        let (x, y, z) = (s.alg(2.0), s.alg(2.0), s.alg(2.0));
        let b = SO3::bracket;
        (b(&x, &b(&y, &z)) + b(&y, &b(&z, &x)) + b(&z, &b(&x, &y))).norm()
    });
    t.check("ad_star_dual_of_bracket", 1e-12, || {
        let (x, y, mu) = (s.alg(2.0), s.alg(2.0), s.coalg(2.0));
        (pairing(&SO3::ad_star(&x, &mu), &y) - pairing(&mu, &SO3::bracket(&x, &y))).abs()
    });
    t.check("hat_vee_round_trip", 0.0, || {
        let v = s.vec3(5.0);
        (SO3::vee(&SO3::hat(&v)) - v).norm()
    });
}

fn bundles(s: &mut Sampler, t: &mut Tally) {
    let tg = |s: &mut Sampler| TrivializedTangentPoint::new(s.rotation(), s.alg(2.0));
    let tsg = |s: &mut Sampler| TrivializedCotangentPoint::new(s.rotation(), s.coalg(2.0));
    let ttg = |s: &mut Sampler| TTGPoint::new(s.rotation(), s.alg(2.0), s.alg(2.0), s.alg(2.0));
    t.check("tg_associativity", 1e-12, || {
        let (a, b, c) = (tg(s), tg(s), tg(s));
        tg_mult(&tg_mult(&a, &b), &c).distance(&tg_mult(&a, &tg_mult(&b, &c)))
    });
    t.check("tg_inverse", 1e-12, || {
        let a = tg(s);
        let e = TrivializedTangentPoint::identity();
        tg_mult(&a, &tg_inverse(&a)).distance(&e) + tg_mult(&tg_inverse(&a), &a).distance(&e)
    });
    t.check("tstarg_associativity", 1e-12, || {
        let (a, b, c) = (tsg(s), tsg(s), tsg(s));
        tstarg_mult(&tstarg_mult(&a, &b), &c).distance(&tstarg_mult(&a, &tstarg_mult(&b, &c)))
    });
    t.check("tstarg_inverse", 1e-12, || {
        let a = tsg(s);
        let e = TrivializedCotangentPoint::identity();
        tstarg_mult(&a, &tstarg_inverse(&a)).distance(&e) + tstarg_mult(&tstarg_inverse(&a), &a).distance(&e)
    });
    t.check("ttg_associativity", 1e-12, || {
        let (a, b, c) = (ttg(s), ttg(s), ttg(s));
        ttg_mult(&ttg_mult(&a, &b), &c).distance(&ttg_mult(&a, &ttg_mult(&b, &c)))
    });
    t.check("ttg_inverse", 1e-12, || {
        let a = ttg(s);
        let e = TTGPoint::identity();
        ttg_mult(&a, &ttg_inverse(&a)).distance(&e) + ttg_mult(&ttg_inverse(&a), &a).distance(&e)
    });
    t.check("ttg_identity", 1e-12, || {
        let a = ttg(s);
        let e = TTGPoint::identity();
        ttg_mult(&a, &e).distance(&a) + ttg_mult(&e, &a).distance(&a)
    });
}

fn tulczyjew(s: &mut Sampler, t: &mut Tally) {
    let ttg = |s: &mut Sampler| TTGPoint::new(s.rotation(), s.alg(2.0), s.alg(2.0), s.alg(2.0));
    let ttsg = |s: &mut Sampler| TTStarGPoint::new(s.rotation(), s.coalg(2.0), s.alg(2.0), s.coalg(2.0));
    t.check("kappa_involution", 1e-14, || {
        let p = ttg(s);
        kappa(&kappa(&p)).distance(&p)
    });
    t.check("kappa_projection_swap", 1e-14, || {
        let p = ttg(s);
        let q = kappa(&p);
        q.pr12().distance(&p.pr13()) + q.pr13().distance(&p.pr12())
    });
    t.check("alpha_round_trip", 1e-13, || {
        let p = ttsg(s);
        let q = alpha(&p);
        alpha_inv(&q).distance(&p) + alpha(&alpha_inv(&q)).distance(&q)
    });
    t.check("beta_round_trip", 1e-13, || {
        let p = ttsg(s);
        let q = beta(&p);
        beta_inv(&q).distance(&p) + beta(&beta_inv(&q)).distance(&q)
    });
}

fn retraction(s: &mut Sampler, t: &mut Tally) {
    t.check("tau_inverse_pair", 1e-12, || {
        let (tau, xi) = (s.tau(), AlgebraVector::new(s.ball(3.0)));
        let a = tau.tau::<SO3>(&xi).unwrap();
        let b = tau.tau::<SO3>(&-xi).unwrap();
        a.compose(&b).distance(&SO3::identity())
    });
    t.check("tau_at_zero", 0.0, || {
        let tau = s.tau();
        tau.tau::<SO3>(&AlgebraVector::zero()).unwrap().distance(&SO3::identity())
    });
    t.check("dtau_left_finite_difference", 1e-5, || {
        let (tau, xi, eta) = (s.tau(), AlgebraVector::new(s.ball(2.0)), AlgebraVector::new(s.ball(1.0)));
        let h = 1e-6;
        let base = tau.tau::<SO3>(&xi).unwrap();
        let moved = tau.tau::<SO3>(&(xi + eta * h)).unwrap();
        let fd = SO3::vee_skew(&((base.matrix().transpose() * (moved.matrix() - base.matrix())) / h));
        (tau.dtau_l::<SO3>(&xi, &eta).into_coords() - fd).norm()
    });
    t.check("dtau_left_inverse", 1e-11, || {
        let (tau, xi, eta) = (s.tau(), AlgebraVector::new(s.ball(2.0)), s.alg(1.0));
        (tau.dtau_l_inv::<SO3>(&xi, &tau.dtau_l::<SO3>(&xi, &eta)).unwrap() - eta).norm()
    });
    t.check("dtau_dual_adjoint", 1e-12, || {
        let (tau, xi, eta, mu) = (s.tau(), AlgebraVector::new(s.ball(2.0)), s.alg(1.0), s.coalg(1.0));
        (pairing(&tau.dtau_l_dual::<SO3>(&xi, &mu), &eta) - pairing(&mu, &tau.dtau_l::<SO3>(&xi, &eta))).abs()
    });
    t.check("retraction_derivative_at_zero", 1e-8, || {
        // d/dh τ(h xi) at h = 0 is xi
        let (tau, xi) = (s.tau(), s.alg(1.0));
        let h = 1e-6;
        let p = tau.tau::<SO3>(&(xi * h)).unwrap();
        let m = tau.tau::<SO3>(&(xi * -h)).unwrap();
        (SO3::vee_skew(&((p.matrix() - m.matrix()) / (2.0 * h))) - xi.into_coords()).norm()
    });
    t.check("discretization_condition_i", 0.0, || {
        let theta = THETAS[s.rng.random_range(0..4)];
        let map = DiscretizationMap::new(s.tau(), theta).unwrap();
        let g = s.rotation();
        let (a, b) = map.rd(&g, &AlgebraVector::zero()).unwrap();
        a.distance(&g) + b.distance(&g)
    });
    t.check("discretization_condition_ii", 1e-8, || {
        let theta = THETAS[s.rng.random_range(0..4)];
        let map = DiscretizationMap::new(s.tau(), theta).unwrap();
        let (g, v) = (s.rotation(), s.alg(1.0));
        let h = 1e-6;
        let (ap, bp) = map.rd(&g, &(v * h)).unwrap();
        let (am, bm) = map.rd(&g, &(v * -h)).unwrap();
        let leg = |p: &SO3, m: &SO3| SO3::vee_skew(&((g.matrix().transpose() * (p.matrix() - m.matrix())) / (2.0 * h)));
        (leg(&bp, &bm) - leg(&ap, &am) - v.into_coords()).norm()
    });
    t.check("rd_round_trip", 1e-11, || {
        let theta = THETAS[s.rng.random_range(0..4)];
        let map = DiscretizationMap::new(s.tau(), theta).unwrap();
        // angle of g0⁻¹ g1 below π/2
        let (g, xi) = (s.rotation(), AlgebraVector::new(s.ball(1.5)));
        let (g0, g1) = map.rd(&g, &xi).unwrap();
        let (gb, xb) = map.rd_inv(&g0, &g1).unwrap();
        let (r0, r1) = map.rd(&gb, &xb).unwrap();
        gb.distance(&g) + (xb - xi).norm() + r0.distance(&g0) + r1.distance(&g1)
    });
}

fn lifts(s: &mut Sampler, t: &mut Tally) {
    let map = |s: &mut Sampler| DiscretizationMap::new(s.tau(), THETAS[s.rng.random_range(0..4)]).unwrap();
    t.check("tangent_lift_round_trip", 1e-10, || {
        let m = map(s);
        let p = TTGPoint::new(s.rotation(), s.alg(2.0), AlgebraVector::new(s.ball(1.0)), s.alg(2.0));
        let (a, b) = tangent_lift(&m, &p).unwrap();
        let back = tangent_lift_inverse(&m, &a, &b).unwrap();
        let (a2, b2) = tangent_lift(&m, &back).unwrap();
        back.distance(&p) + a2.distance(&a) + b2.distance(&b)
    });
    t.check("cotangent_lift_round_trip", 1e-10, || {
        let m = map(s);
        let p = TTStarGPoint::new(s.rotation(), s.coalg(2.0), AlgebraVector::new(s.ball(1.0)), s.coalg(2.0));
        let (a, b) = cotangent_lift(&m, &p).unwrap();
        let back = cotangent_lift_inverse(&m, &a, &b).unwrap();
        let (a2, b2) = cotangent_lift(&m, &back).unwrap();
        back.distance(&p) + a2.distance(&a) + b2.distance(&b)
    });
    t.check("cotangent_lift_base_is_rd", 1e-15, || {
        let m = map(s);
        let p = TTStarGPoint::new(s.rotation(), s.coalg(2.0), AlgebraVector::new(s.ball(1.0)), s.coalg(2.0));
        let (a, b) = cotangent_lift(&m, &p).unwrap();
        let (g0, g1) = m.rd(&p.g, &p.xi_bar).unwrap();
        a.g.distance(&g0) + b.g.distance(&g1)
    });
    t.check("lift_linearity", 1e-12, || {
        let m = DiscretizationMap::forward(s.tau());
        let c = s.rng.random_range(-3.0..3.0);
        let p = TTGPoint::new(s.rotation(), s.alg(2.0), AlgebraVector::new(s.ball(1.0)), s.alg(2.0));
        let (a, b) = tangent_lift(&m, &p).unwrap();
        let (sa, sb) = tangent_lift(&m, &TTGPoint::new(p.g, p.xi * c, p.xi_bar, p.xi_tilde * c)).unwrap();
        let q = TTStarGPoint::new(s.rotation(), s.coalg(2.0), AlgebraVector::new(s.ball(1.0)), s.coalg(2.0));
        let (qa, qb) = cotangent_lift(&m, &q).unwrap();
        let (qsa, qsb) = cotangent_lift(&m, &TTStarGPoint::new(q.g, q.mu * c, q.xi_bar, q.mu_tilde * c)).unwrap();
        (sa.xi - a.xi * c).norm() + (sb.xi - b.xi * c).norm() + (qsa.mu - qa.mu * c).norm() + (qsb.mu - qb.mu * c).norm()
    });
}

fn integrators(s: &mut Sampler, t: &mut Tally) {
    let inertia = |s: &mut Sampler| {
        let d = [s.rng.random_range(0.5..3.0), s.rng.random_range(0.5..3.0), s.rng.random_range(0.5..3.0)];
        InertiaOperator::<SO3>::diagonal(&d).unwrap()
    };
    let cfg = IntegratorConfig::new(1e-2).unwrap();
    t.check("lie_poisson_step_residual", 1e-10, || {
        let (i, map) = (inertia(s), DiscretizationMap::forward(s.tau()));
        let a = LiePoissonState::new(s.rotation(), s.coalg(2.0));
        let b = lie_poisson_step(&i, &cfg, &map, &a).unwrap().state;
        lie_poisson_residual(&i, &cfg, &map, &a, &b).unwrap()
    });
    t.check("lie_poisson_casimir", 1e-13, || {
        let (i, map) = (inertia(s), DiscretizationMap::forward(s.tau()));
        let a = LiePoissonState::new(s.rotation(), s.coalg(2.0));
        let b = lie_poisson_step(&i, &cfg, &map, &a).unwrap().state;
        (b.mu.norm() - a.mu.norm()).abs() / a.mu.norm()
    });
    t.check("euler_poincare_step_residual", 1e-11, || {
        let (i, map) = (inertia(s), DiscretizationMap::forward(s.tau()));
        let a = EulerPoincareState::new(s.rotation(), s.alg(2.0));
        let b = euler_poincare_step(&i, &cfg, &map, &a).unwrap();
        euler_poincare_residual(&i, &cfg, &map, &a, &b).unwrap()
    });
    t.check("relative_equilibrium", 1e-14, || {
        let (i, map) = (inertia(s), DiscretizationMap::forward(s.tau()));
        let axis = s.rng.random_range(0..3);
        let mu = CoalgebraVector::basis(axis) * s.rng.random_range(-2.0..2.0);
        let a = LiePoissonState::new(s.rotation(), mu);
        let b = lie_poisson_step(&i, &cfg, &map, &a).unwrap().state;
        (b.mu - a.mu).norm()
    });
}
