//! τ-maps, their left-trivialized tangents, and the θ-family of trivialized
//! discretization maps
//!
//! ```text
//! R̃_d(g, xi) = (g τ(−θ xi), g τ((1 − θ) xi)).
//! ```
//!
//! `d^L_xi τ (eta) = τ(−xi) · T_xi τ(eta)` is handled as a linear operator on
//! algebra coordinates, so its dual is the transposed operator under the
//! coordinate pairing.

use crate::algebra::{apply_dual, apply_op, Alg, CoAlg, Coords, LieGroup, Operator};
use crate::error::{Error, Result};
use crate::integrators::solver::{newton_solve, SolverSettings};

/// Groups that supply the exponential and Cayley τ-maps in closed form.
pub trait TauFamily: LieGroup {
    fn exp(xi: &Alg<Self>) -> Self;
    /// Inverse of `exp` on its injectivity domain.
    fn log(&self) -> Result<Alg<Self>>;
    fn dexp_left(xi: &Alg<Self>) -> Operator<Self>;
    fn dexp_left_inv(xi: &Alg<Self>) -> Result<Operator<Self>>;

    fn cay(xi: &Alg<Self>) -> Result<Self>;
    fn cay_inv(&self) -> Result<Alg<Self>>;
    fn dcay_left(xi: &Alg<Self>) -> Operator<Self>;
    fn dcay_left_inv(xi: &Alg<Self>) -> Result<Operator<Self>>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TauKind {
    Exponential,
    Cayley,
}

/// A local diffeomorphism `τ: g → G` with `τ(0) = e` and `τ(xi) τ(−xi) = e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TauMap {
    pub kind: TauKind,
}

impl TauMap {
    pub const EXP: TauMap = TauMap {
        kind: TauKind::Exponential,
    };
    pub const CAYLEY: TauMap = TauMap {
        kind: TauKind::Cayley,
    };

    pub fn new(kind: TauKind) -> Self {
        TauMap { kind }
    }

    pub fn tau<G: TauFamily>(&self, xi: &Alg<G>) -> Result<G> {
        match self.kind {
            TauKind::Exponential => Ok(G::exp(xi)),
            TauKind::Cayley => G::cay(xi),
        }
    }

    /// Errors with `OutOfDomain` when `g` is outside the injectivity domain.
    pub fn tau_inv<G: TauFamily>(&self, g: &G) -> Result<Alg<G>> {
        match self.kind {
            TauKind::Exponential => g.log(),
            TauKind::Cayley => g.cay_inv(),
        }
    }

    /// Matrix of `d^L_xi τ` in algebra coordinates.
    pub fn dtau_left<G: TauFamily>(&self, xi: &Alg<G>) -> Operator<G> {
        match self.kind {
            TauKind::Exponential => G::dexp_left(xi),
            TauKind::Cayley => G::dcay_left(xi),
        }
    }

    pub fn dtau_left_inverse<G: TauFamily>(&self, xi: &Alg<G>) -> Result<Operator<G>> {
        match self.kind {
            TauKind::Exponential => G::dexp_left_inv(xi),
            TauKind::Cayley => G::dcay_left_inv(xi),
        }
    }

    pub fn dtau_l<G: TauFamily>(&self, xi: &Alg<G>, eta: &Alg<G>) -> Alg<G> {
        apply_op::<G::Coords>(&self.dtau_left::<G>(xi), eta)
    }

    pub fn dtau_l_inv<G: TauFamily>(&self, xi: &Alg<G>, eta: &Alg<G>) -> Result<Alg<G>> {
        Ok(apply_op::<G::Coords>(&self.dtau_left_inverse::<G>(xi)?, eta))
    }

    /// `d^{L*}_xi τ (mu)`, the adjoint of `dtau_l(xi, ·)` under the pairing.
    pub fn dtau_l_dual<G: TauFamily>(&self, xi: &Alg<G>, mu: &CoAlg<G>) -> CoAlg<G> {
        apply_dual::<G::Coords>(&self.dtau_left::<G>(xi), mu)
    }

    pub fn dtau_l_dual_inv<G: TauFamily>(&self, xi: &Alg<G>, mu: &CoAlg<G>) -> Result<CoAlg<G>> {
        Ok(apply_dual::<G::Coords>(&self.dtau_left_inverse::<G>(xi)?, mu))
    }
}

/// `R̃_d(g, xi) = (g τ(−θ xi), g τ((1 − θ) xi))` for a fixed `θ ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscretizationMap {
    pub tau: TauMap,
    theta: f64,
}

impl DiscretizationMap {
    pub fn new(tau: TauMap, theta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&theta) {
            return Err(Error::invalid("theta", format!("{theta} is not in [0, 1]")));
        }
        Ok(DiscretizationMap { tau, theta })
    }

    /// The `θ = 0` map `(g, xi) ↦ (g, g τ(xi))`.
    pub fn forward(tau: TauMap) -> Self {
        DiscretizationMap { tau, theta: 0.0 }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn rd<G: TauFamily>(&self, g: &G, xi: &Alg<G>) -> Result<(G, G)> {
        if self.theta == 0.0 {
            return Ok((*g, g.compose(&self.tau.tau(xi)?)));
        }
        let first = g.compose(&self.tau.tau(&(*xi * -self.theta))?);
        let second = g.compose(&self.tau.tau(&(*xi * (1.0 - self.theta)))?);
        Ok((first, second))
    }

    /// The unique `(g, xi)` with `rd(g, xi) = (g0, g1)`.
    ///
    /// Both legs move along the one-parameter family `s ↦ τ(s d)` through the
    /// direction `d = tau_inv(g0⁻¹ g1)`, so only a scalar rescaling of `d`
    /// has to be found.
    pub fn rd_inv<G: TauFamily>(&self, g0: &G, g1: &G) -> Result<(G, Alg<G>)> {
        let delta = g0.inverse().compose(g1);
        let d = self.tau.tau_inv(&delta)?;
        if self.theta == 0.0 {
            return Ok((*g0, d));
        }
        let dd = d.norm().powi(2);
        if dd == 0.0 {
            return Ok((*g0, d));
        }
        let residual = |lambda: f64| -> Result<f64> {
            let xi = d * lambda;
            let composite = self
                .tau
                .tau::<G>(&(xi * self.theta))?
                .compose(&self.tau.tau(&(xi * (1.0 - self.theta)))?);
            let back = self.tau.tau_inv(&composite)?;
            Ok(d.coords().dot(back.coords()) / dd - 1.0)
        };
        let mut lambda = 1.0;
        for _ in 0..60 {
            let r = residual(lambda)?;
            if r.abs() <= 4.0 * f64::EPSILON {
                break;
            }
            let h = 1e-6 * lambda.abs().max(1.0);
            let slope = (residual(lambda + h)? - residual(lambda - h)?) / (2.0 * h);
            if slope.abs() < f64::MIN_POSITIVE {
                return Err(Error::Singular("rd_inv rescaling"));
            }
            let step = r / slope;
            lambda -= step;
            if step.abs() <= f64::EPSILON * lambda.abs() {
                break;
            }
        }
        let xi = d * lambda;
        Ok((g0.compose(&self.tau.tau(&(xi * self.theta))?), xi))
    }

    /// `rd_inv` by a multivariate Newton solve with a finite-difference
    /// Jacobian. Makes no commutativity assumption on τ.
    pub fn rd_inv_newton<G: TauFamily>(&self, g0: &G, g1: &G) -> Result<(G, Alg<G>)> {
        let delta = g0.inverse().compose(g1);
        let d = self.tau.tau_inv(&delta)?;
        let theta = self.theta;
        let tau = self.tau;
        let residual = |xi: &Alg<G>| -> Result<Alg<G>> {
            let composite = tau
                .tau::<G>(&(*xi * theta))?
                .compose(&tau.tau(&(*xi * (1.0 - theta)))?);
            // zero exactly when the composite equals delta
            tau.tau_inv(&delta.inverse().compose(&composite))
        };
        let xi = newton_solve(residual, d, &SolverSettings::new(1e-14, 50))?;
        Ok((g0.compose(&self.tau.tau(&(xi * theta))?), xi))
    }
}
