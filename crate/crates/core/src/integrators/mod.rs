//! Euler-Poincaré, Lie-Poisson and Euler-Arnold dynamics for quadratic
//! kinetic energy, and the discretization-map integrators built from them.

pub mod solver;

use crate::algebra::{apply_op, Alg, AlgebraVector, CoAlg, CoalgebraVector, Coords, LieGroup, Operator};
use crate::bundles::{TTGPoint, TTStarGPoint, TrivializedCotangentPoint, TrivializedTangentPoint};
use crate::error::{Error, Result};
use crate::lifts::{cotangent_lift_inverse, tangent_lift, tangent_lift_inverse};
use crate::retraction::{DiscretizationMap, TauFamily};

pub use solver::{fixed_point_solve, newton_solve, solve, SolverKind, SolverSettings};

/// Symmetric positive-definite map `I: g → g*`, with its inverse cached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InertiaOperator<G: LieGroup> {
    matrix: Operator<G>,
    inverse: Operator<G>,
}

impl<G: LieGroup> InertiaOperator<G> {
    pub fn new(matrix: Operator<G>) -> Result<Self> {
        let n = G::Coords::dim();
        let entry = |i, j| G::Coords::operator_entry(&matrix, i, j);
        let scale = (0..n).map(|i| entry(i, i).abs()).fold(0.0, f64::max);
        for i in 0..n {
            for j in 0..i {
                if !entry(i, j).is_finite() || (entry(i, j) - entry(j, i)).abs() > 1e-14 * scale.max(1.0) {
                    return Err(Error::invalid("inertia", "matrix is not symmetric"));
                }
            }
        }
        if !cholesky_succeeds(n, entry) {
            return Err(Error::invalid("inertia", "matrix is not positive definite"));
        }
        let inverse = G::Coords::invert(&matrix)
            .ok_or_else(|| Error::invalid("inertia", "matrix is singular"))?;
        Ok(InertiaOperator { matrix, inverse })
    }

    pub fn diagonal(diag: &[f64]) -> Result<Self> {
        let n = G::Coords::dim();
        if diag.len() != n {
            return Err(Error::invalid(
                "inertia",
                format!("expected {n} diagonal entries, got {}", diag.len()),
            ));
        }
        Self::new(G::Coords::operator_from_fn(|i, j| if i == j { diag[i] } else { 0.0 }))
    }

    pub fn identity() -> Self {
        InertiaOperator {
            matrix: G::Coords::identity_operator(),
            inverse: G::Coords::identity_operator(),
        }
    }

    pub fn matrix(&self) -> &Operator<G> {
        &self.matrix
    }

    /// `I(xi)`.
    pub fn apply(&self, xi: &Alg<G>) -> CoAlg<G> {
        CoalgebraVector::new(G::Coords::apply(&self.matrix, xi.coords()))
    }

    /// `I⁻¹(mu)`.
    pub fn apply_inverse(&self, mu: &CoAlg<G>) -> Alg<G> {
        AlgebraVector::new(G::Coords::apply(&self.inverse, mu.coords()))
    }

    /// Reduced Hamiltonian `h(mu) = ½ <mu, I⁻¹ mu>`.
    pub fn hamiltonian(&self, mu: &CoAlg<G>) -> f64 {
        0.5 * crate::algebra::pairing(mu, &self.apply_inverse(mu))
    }

    /// Reduced Lagrangian `l(xi) = ½ <I xi, xi>`.
    pub fn lagrangian(&self, xi: &Alg<G>) -> f64 {
        0.5 * crate::algebra::pairing(&self.apply(xi), xi)
    }
}

fn cholesky_succeeds(n: usize, entry: impl Fn(usize, usize) -> f64) -> bool {
    let mut l = vec![0.0; n * n];
    for j in 0..n {
        let mut d = entry(j, j);
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if !(d > 0.0) {
            return false;
        }
        let d = d.sqrt();
        l[j * n + j] = d;
        for i in j + 1..n {
            let mut s = entry(i, j);
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / d;
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiePoissonState<G: LieGroup> {
    pub g: G,
    pub mu: CoAlg<G>,
}

impl<G: LieGroup> LiePoissonState<G> {
    pub fn new(g: G, mu: CoAlg<G>) -> Self {
        LiePoissonState { g, mu }
    }

    pub fn as_point(&self) -> TrivializedCotangentPoint<G> {
        TrivializedCotangentPoint::new(self.g, self.mu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerPoincareState<G: LieGroup> {
    pub g: G,
    pub xi: Alg<G>,
}

impl<G: LieGroup> EulerPoincareState<G> {
    pub fn new(g: G, xi: Alg<G>) -> Self {
        EulerPoincareState { g, xi }
    }

    pub fn as_point(&self) -> TrivializedTangentPoint<G> {
        TrivializedTangentPoint::new(self.g, self.xi)
    }
}

/// Which sign of the step the Lie-Poisson update uses.
///
/// `Literal` solves `xi + t I⁻¹(d^{L*}_xi τ(mu_{k+1})) = 0` as written, which
/// moves `g` against the continuous flow `ġ = g I⁻¹(mu)`. `Forward` solves the
/// same equations with the step negated, which tracks the continuous flow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FlowOrientation {
    Literal,
    #[default]
    Forward,
}

impl FlowOrientation {
    /// The step `s` substituted into `s X̃(pr12(R⁻¹(..))) = R⁻¹(..)`.
    pub fn signed_step(self, t: f64) -> f64 {
        match self {
            FlowOrientation::Literal => t,
            FlowOrientation::Forward => -t,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    step: f64,
    pub solver: SolverKind,
    pub settings: SolverSettings,
    pub orientation: FlowOrientation,
}

impl IntegratorConfig {
    /// `step` must be finite and non-negative; `0` yields identity steps.
    pub fn new(step: f64) -> Result<Self> {
        if !(step.is_finite() && step >= 0.0) {
            return Err(Error::invalid("step", format!("{step} must be finite and >= 0")));
        }
        Ok(IntegratorConfig {
            step,
            solver: SolverKind::default(),
            settings: SolverSettings::default(),
            orientation: FlowOrientation::default(),
        })
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn with_orientation(mut self, orientation: FlowOrientation) -> Self {
        self.orientation = orientation;
        self
    }

    pub fn with_solver(mut self, solver: SolverKind) -> Self {
        self.solver = solver;
        self
    }

    pub fn with_settings(mut self, tolerance: f64, max_iterations: usize) -> Result<Self> {
        if !(tolerance.is_finite() && tolerance > 0.0) {
            return Err(Error::invalid("tolerance", "must be positive"));
        }
        self.settings = SolverSettings::new(tolerance, max_iterations);
        Ok(self)
    }
}

/// Trivialized Lie-Poisson field `X̃(g, mu) = (g, mu; I⁻¹ mu, 0)` for `h(mu) = ½<mu, I⁻¹ mu>`.
pub fn lie_poisson_vf<G: LieGroup>(inertia: &InertiaOperator<G>, s: &LiePoissonState<G>) -> TTStarGPoint<G> {
    TTStarGPoint::new(s.g, s.mu, inertia.apply_inverse(&s.mu), CoalgebraVector::zero())
}

/// `xi̇ = I⁻¹(ad*_xi(I xi))`.
pub fn euler_arnold_rhs<G: LieGroup>(inertia: &InertiaOperator<G>, xi: &Alg<G>) -> Alg<G> {
    inertia.apply_inverse(&G::ad_star(xi, &inertia.apply(xi)))
}

/// Trivialized Euler-Poincaré field `X̃(g, xi) = (g, xi; xi, I⁻¹(ad*_xi(I xi)))`.
pub fn euler_poincare_vf<G: LieGroup>(inertia: &InertiaOperator<G>, s: &EulerPoincareState<G>) -> TTGPoint<G> {
    TTGPoint::new(s.g, s.xi, s.xi, euler_arnold_rhs(inertia, &s.xi))
}

/// Continuous Lie-Poisson right-hand side `mu̇ = ad*_{I⁻¹ mu} mu`.
pub fn lie_poisson_rhs<G: LieGroup>(inertia: &InertiaOperator<G>, mu: &CoAlg<G>) -> CoAlg<G> {
    G::ad_star(&inertia.apply_inverse(mu), mu)
}

fn require_theta_zero(map: &DiscretizationMap) -> Result<()> {
    if map.theta() == 0.0 {
        Ok(())
    } else {
        Err(Error::UnsupportedTheta(map.theta()))
    }
}

/// Result of one Lie-Poisson step, with the group increment `xi_{k,k+1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiePoissonStep<G: LieGroup> {
    pub state: LiePoissonState<G>,
    pub increment: Alg<G>,
}

/// One step of the `θ = 0` Lie-Poisson integrator:
///
/// ```text
/// xi + s I⁻¹(d^{L*}_xi τ(mu_{k+1})) = 0
/// mu_{k+1} = Ad*_{τ(xi)} mu_k
/// g_{k+1}  = g_k τ(xi)
/// ```
///
/// with `s = cfg.orientation.signed_step(t)`. The second line is substituted
/// into the first and the result solved for `xi`.
pub fn lie_poisson_step<G: TauFamily>(
    inertia: &InertiaOperator<G>,
    cfg: &IntegratorConfig,
    map: &DiscretizationMap,
    s: &LiePoissonState<G>,
) -> Result<LiePoissonStep<G>> {
    require_theta_zero(map)?;
    if cfg.step == 0.0 {
        return Ok(LiePoissonStep {
            state: *s,
            increment: AlgebraVector::zero(),
        });
    }
    let signed = cfg.orientation.signed_step(cfg.step);
    let tau = map.tau;
    let mu_k = s.mu;
    let residual = |xi: &Alg<G>| -> Result<Alg<G>> {
        let mu_next = tau.tau::<G>(xi)?.coadjoint(&mu_k);
        Ok(*xi + inertia.apply_inverse(&tau.dtau_l_dual::<G>(xi, &mu_next)) * signed)
    };
    let guess = inertia.apply_inverse(&mu_k) * -signed;
    let xi = solve(cfg.solver, residual, guess, &cfg.settings)?;
    let step = tau.tau::<G>(&xi)?;
    Ok(LiePoissonStep {
        state: LiePoissonState::new(s.g.compose(&step), step.coadjoint(&mu_k)),
        increment: xi,
    })
}

/// Residual of `s X̃(pr12(R̃_d^T*⁻¹(a; b))) = R̃_d^T*⁻¹(a; b)` for an
/// accepted Lie-Poisson step, summed over the two fiber slots.
pub fn lie_poisson_residual<G: TauFamily>(
    inertia: &InertiaOperator<G>,
    cfg: &IntegratorConfig,
    map: &DiscretizationMap,
    from: &LiePoissonState<G>,
    to: &LiePoissonState<G>,
) -> Result<f64> {
    let signed = cfg.orientation.signed_step(cfg.step);
    let lifted = cotangent_lift_inverse(map, &from.as_point(), &to.as_point())?;
    let field = lie_poisson_vf(inertia, &LiePoissonState::new(lifted.g, lifted.mu));
    Ok((field.xi_bar * signed - lifted.xi_bar).norm() + (field.mu_tilde * signed - lifted.mu_tilde).norm())
}

/// One step of the `θ = 0` Euler-Poincaré integrator.
///
/// The third slot of the step equation fixes `xi_bar = t xi_k`, hence
/// `g_{k+1} = g_k τ(t xi_k)`; the fourth fixes `xi_tilde = t I⁻¹(ad*_{xi_k}(I xi_k))`.
/// The new state is the second output of the tangent lift at that point.
pub fn euler_poincare_step<G: TauFamily>(
    inertia: &InertiaOperator<G>,
    cfg: &IntegratorConfig,
    map: &DiscretizationMap,
    s: &EulerPoincareState<G>,
) -> Result<EulerPoincareState<G>> {
    require_theta_zero(map)?;
    if cfg.step == 0.0 {
        return Ok(*s);
    }
    let t = cfg.step;
    let p = TTGPoint::new(s.g, s.xi, s.xi * t, euler_arnold_rhs(inertia, &s.xi) * t);
    let (_, next) = tangent_lift(map, &p)?;
    Ok(EulerPoincareState::new(next.g, next.xi))
}

/// Residual of `t X̃(pr12(R̃_d^T⁻¹(a; b))) = R̃_d^T⁻¹(a; b)` for an accepted
/// Euler-Poincaré step.
pub fn euler_poincare_residual<G: TauFamily>(
    inertia: &InertiaOperator<G>,
    cfg: &IntegratorConfig,
    map: &DiscretizationMap,
    from: &EulerPoincareState<G>,
    to: &EulerPoincareState<G>,
) -> Result<f64> {
    let t = cfg.step;
    let lifted = tangent_lift_inverse(map, &from.as_point(), &to.as_point())?;
    let field = euler_poincare_vf(inertia, &EulerPoincareState::new(lifted.g, lifted.xi));
    Ok((field.xi_bar * t - lifted.xi_bar).norm() + (field.xi_tilde * t - lifted.xi_tilde).norm())
}

/// One step of `t X(τ_M(R_d⁻¹(g_k, g_{k+1}))) = R_d⁻¹(g_k, g_{k+1})` for the
/// trivialized field `g ↦ (g, f(g))`.
///
/// With `(g, xi) = R̃_d⁻¹(g_k, g_{k+1})` the equation reads `xi = t f(g)` and
/// `g = g_k τ(θ xi)`. For `θ = 0` the step is explicit.
pub fn group_flow_step<G, F>(f: F, cfg: &IntegratorConfig, map: &DiscretizationMap, g_k: &G) -> Result<G>
where
    G: TauFamily,
    F: Fn(&G) -> Alg<G>,
{
    let t = cfg.step;
    let theta = map.theta();
    let xi = if theta == 0.0 {
        f(g_k) * t
    } else {
        let residual = |xi: &Alg<G>| -> Result<Alg<G>> {
            let base = g_k.compose(&map.tau.tau(&(*xi * theta))?);
            Ok(*xi - f(&base) * t)
        };
        solve(cfg.solver, residual, f(g_k) * t, &cfg.settings)?
    };
    let (_, next) = map.rd(&g_k.compose(&map.tau.tau(&(xi * theta))?), &xi)?;
    Ok(next)
}

/// Eq. (11)-style residual `‖xi − t f(g)‖` with `(g, xi) = R̃_d⁻¹(g_k, g_{k+1})`.
pub fn group_flow_residual<G, F>(f: F, cfg: &IntegratorConfig, map: &DiscretizationMap, g_k: &G, g_next: &G) -> Result<f64>
where
    G: TauFamily,
    F: Fn(&G) -> Alg<G>,
{
    let (g, xi) = map.rd_inv(g_k, g_next)?;
    Ok((xi - f(&g) * cfg.step).norm())
}

/// Applies `apply_op` with the inertia operator; exposed for diagnostics.
pub fn inertia_times<G: LieGroup>(inertia: &InertiaOperator<G>, xi: &Alg<G>) -> Alg<G> {
    apply_op::<G::Coords>(inertia.matrix(), xi)
}
