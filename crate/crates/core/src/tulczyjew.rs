//! Trivialized Tulczyjew triple and the sign-flip map `Φ̃` on `T*(G × G)`.
//!
//! ```text
//! alpha(g, mu, xi, nu)   = (g, xi, nu + ad*_xi mu, mu)
//! beta(g, mu, eta, nu)   = (g, mu, nu + ad*_eta mu, −eta)
//! kappa(g, xi, eta, zeta) = (g, eta, xi, zeta + [xi, eta])
//! ```

use crate::algebra::{CoAlg, LieGroup};
use crate::bundles::{TStarTGPoint, TStarTStarGPoint, TTGPoint, TTStarGPoint, TrivializedCotangentPoint};

/// Left-trivialized covector on `G × G`: base pair `(g, h)` and fibers `(mu, nu)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CotangentPairPoint<G: LieGroup> {
    pub g: G,
    pub h: G,
    pub mu: CoAlg<G>,
    pub nu: CoAlg<G>,
}

pub fn alpha<G: LieGroup>(p: &TTStarGPoint<G>) -> TStarTGPoint<G> {
    TStarTGPoint::new(
        p.g,
        p.xi_bar,
        p.mu_tilde + G::ad_star(&p.xi_bar, &p.mu),
        p.mu,
    )
}

/// `(g, xi, p_bar, p_tilde) ↦ (g, p_tilde, xi, p_bar − ad*_xi p_tilde)`.
pub fn alpha_inv<G: LieGroup>(q: &TStarTGPoint<G>) -> TTStarGPoint<G> {
    TTStarGPoint::new(
        q.g,
        q.p_tilde,
        q.xi,
        q.p_bar - G::ad_star(&q.xi, &q.p_tilde),
    )
}

pub fn beta<G: LieGroup>(p: &TTStarGPoint<G>) -> TStarTStarGPoint<G> {
    TStarTStarGPoint::new(
        p.g,
        p.mu,
        p.mu_tilde + G::ad_star(&p.xi_bar, &p.mu),
        -p.xi_bar,
    )
}

/// `(g, mu, nu, eta) ↦ (g, mu, −eta, nu − ad*_{−eta} mu)`.
pub fn beta_inv<G: LieGroup>(q: &TStarTStarGPoint<G>) -> TTStarGPoint<G> {
    let xi_bar = -q.eta;
    TTStarGPoint::new(q.g, q.mu, xi_bar, q.nu - G::ad_star(&xi_bar, &q.mu))
}

/// Canonical flip. An involution.
pub fn kappa<G: LieGroup>(p: &TTGPoint<G>) -> TTGPoint<G> {
    TTGPoint::new(
        p.g,
        p.xi_bar,
        p.xi,
        p.xi_tilde + G::bracket(&p.xi, &p.xi_bar),
    )
}

/// `Φ̃(g, mu; h, nu) = (g, h; mu, −nu)`.
pub fn phi<G: LieGroup>(
    a: &TrivializedCotangentPoint<G>,
    b: &TrivializedCotangentPoint<G>,
) -> CotangentPairPoint<G> {
    CotangentPairPoint {
        g: a.g,
        h: b.g,
        mu: a.mu,
        nu: -b.mu,
    }
}

pub fn phi_inv<G: LieGroup>(
    p: &CotangentPairPoint<G>,
) -> (TrivializedCotangentPoint<G>, TrivializedCotangentPoint<G>) {
    (
        TrivializedCotangentPoint::new(p.g, p.mu),
        TrivializedCotangentPoint::new(p.h, -p.nu),
    )
}
