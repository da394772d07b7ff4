//! Tangent and cotangent lifts of the trivialized discretization map
//!
//! ```text
//! R̃_d^T  = T R̃_d ∘ κ̃            : TTG  → TG × TG
//! R̃_d^T* = Φ̃ ∘ (T* R̃_d)⁻¹ ∘ α̃    : TT*G → T*G × T*G
//! ```
//!
//! All maps work in left-trivialized coordinates on both sides. A tangent
//! vector at `(g, xi) ∈ G ⋉ g` is given by the algebra element
//! `(zeta, eta) ∈ g ⋉ g`; in the product chart it is `(g·zeta, eta + [xi, zeta])`.
//!
//! For `θ = 0` every map has a closed form. For other `θ` the leg tangents
//! are still closed form, and the inverses solve the assembled `2n × 2n`
//! linear system.

use nalgebra::{DMatrix, DVector};

use crate::algebra::{Alg, AlgebraVector, CoAlg, CoalgebraVector, Coords};
use crate::bundles::{TStarTGPoint, TTGPoint, TTStarGPoint, TrivializedCotangentPoint, TrivializedTangentPoint};
use crate::error::{Error, Result};
use crate::retraction::{DiscretizationMap, TauFamily};
use crate::tulczyjew::{alpha, alpha_inv, kappa};

type TangentPair<G> = (TrivializedTangentPoint<G>, TrivializedTangentPoint<G>);
type CotangentPair<G> = (TrivializedCotangentPoint<G>, TrivializedCotangentPoint<G>);

/// Tangent of the leg `(g, xi) ↦ g τ(c xi)` applied to the velocity
/// `(zeta, eta_chart)` written in the product chart.
fn leg_tangent<G: TauFamily>(
    map: &DiscretizationMap,
    c: f64,
    g: &G,
    xi: &Alg<G>,
    zeta: &Alg<G>,
    eta_chart: &Alg<G>,
) -> Result<TrivializedTangentPoint<G>> {
    if c == 0.0 {
        return Ok(TrivializedTangentPoint::new(*g, *zeta));
    }
    let scaled = *xi * c;
    let tau = map.tau.tau::<G>(&scaled)?;
    let velocity = tau.inverse().adjoint(zeta) + map.tau.dtau_l::<G>(&scaled, eta_chart) * c;
    Ok(TrivializedTangentPoint::new(g.compose(&tau), velocity))
}

/// `T R̃_d` at the point `(p.g, p.xi)` applied to the trivialized velocity
/// `(p.xi_bar, p.xi_tilde)`.
///
/// For `θ = 0` this returns
/// `((g, zeta), (g τ(xi), Ad_{τ(−xi)} zeta + d^L_xi τ(eta + [xi, zeta])))`.
pub fn tangent_of_rd<G: TauFamily>(map: &DiscretizationMap, p: &TTGPoint<G>) -> Result<TangentPair<G>> {
    let theta = map.theta();
    let eta_chart = p.xi_tilde + G::bracket(&p.xi, &p.xi_bar);
    Ok((
        leg_tangent(map, -theta, &p.g, &p.xi, &p.xi_bar, &eta_chart)?,
        leg_tangent(map, 1.0 - theta, &p.g, &p.xi, &p.xi_bar, &eta_chart)?,
    ))
}

/// `R̃_d^T = T R̃_d ∘ κ̃`.
pub fn tangent_lift<G: TauFamily>(map: &DiscretizationMap, p: &TTGPoint<G>) -> Result<TangentPair<G>> {
    tangent_of_rd(map, &kappa(p))
}

/// Matrix of the linear map `(zeta, eta) ↦ (leg1 velocity, leg2 velocity)` at `(g, xi)`.
fn leg_jacobian<G: TauFamily>(map: &DiscretizationMap, g: &G, xi: &Alg<G>) -> Result<DMatrix<f64>> {
    let n = G::Coords::dim();
    let mut m = DMatrix::zeros(2 * n, 2 * n);
    for j in 0..2 * n {
        let (zeta, eta) = if j < n {
            (Alg::<G>::basis(j), Alg::<G>::zero())
        } else {
            (Alg::<G>::zero(), Alg::<G>::basis(j - n))
        };
        let (a, b) = tangent_of_rd(map, &TTGPoint::new(*g, *xi, zeta, eta))?;
        for i in 0..n {
            m[(i, j)] = a.xi.coords().component(i);
            m[(n + i, j)] = b.xi.coords().component(i);
        }
    }
    Ok(m)
}

fn split<V: Coords>(v: &DVector<f64>) -> (V, V) {
    let n = V::dim();
    (V::from_fn(|i| v[i]), V::from_fn(|i| v[n + i]))
}

fn stack<V: Coords>(a: &V, b: &V) -> DVector<f64> {
    let n = V::dim();
    DVector::from_fn(2 * n, |i, _| if i < n { a.component(i) } else { b.component(i - n) })
}

/// The unique `p` with `tangent_lift(p) = (a, b)`.
///
/// For `θ = 0`: `p = (g_k, xi_k, xi_bar, d^L_{xi_bar}τ⁻¹(xi_{k+1} − Ad_{τ(−xi_bar)} xi_k))`
/// with `xi_bar = τ⁻¹(g_k⁻¹ g_{k+1})`.
pub fn tangent_lift_inverse<G: TauFamily>(
    map: &DiscretizationMap,
    a: &TrivializedTangentPoint<G>,
    b: &TrivializedTangentPoint<G>,
) -> Result<TTGPoint<G>> {
    let (g, xi_bar) = map.rd_inv(&a.g, &b.g)?;
    if map.theta() == 0.0 {
        let tau_inv = map.tau.tau::<G>(&xi_bar)?.inverse();
        let rhs = b.xi - tau_inv.adjoint(&a.xi);
        let xi_tilde = map.tau.dtau_l_inv::<G>(&xi_bar, &rhs)?;
        return Ok(TTGPoint::new(g, a.xi, xi_bar, xi_tilde));
    }
    // Solve for the velocity (zeta, eta) at (g, xi_bar), then undo κ̃.
    let m = leg_jacobian(map, &g, &xi_bar)?;
    let rhs = stack(a.xi.coords(), b.xi.coords());
    let sol = m.lu().solve(&rhs).ok_or(Error::Singular("tangent lift"))?;
    let (zeta, eta) = split::<G::Coords>(&sol);
    Ok(kappa(&TTGPoint::new(
        g,
        xi_bar,
        AlgebraVector::new(zeta),
        AlgebraVector::new(eta),
    )))
}

/// `R̃_d^T* = Φ̃ ∘ (T* R̃_d)⁻¹ ∘ α̃`.
///
/// For `θ = 0`, with `(g, xi, P, M) = α̃(p)` and `b = (d^{L*}_xi τ)⁻¹ M`, the
/// result is `((g, P − ad*_xi M − Ad*_{τ(−xi)} b), (g τ(xi), −b))`.
pub fn cotangent_lift<G: TauFamily>(map: &DiscretizationMap, p: &TTStarGPoint<G>) -> Result<CotangentPair<G>> {
    let TStarTGPoint {
        g,
        xi,
        p_bar,
        p_tilde,
    } = alpha(p);
    let (g0, g1) = map.rd(&g, &xi)?;
    let (c0, c1) = if map.theta() == 0.0 {
        let c1 = map.tau.dtau_l_dual_inv::<G>(&xi, &p_tilde)?;
        let tau_inv = map.tau.tau::<G>(&xi)?.inverse();
        let c0 = p_bar - G::ad_star(&xi, &p_tilde) - tau_inv.coadjoint(&c1);
        (c0, c1)
    } else {
        let m = leg_jacobian(map, &g, &xi)?;
        let rhs = stack(p_bar.coords(), p_tilde.coords());
        let sol = m
            .transpose()
            .lu()
            .solve(&rhs)
            .ok_or(Error::Singular("cotangent lift"))?;
        let (c0, c1) = split::<G::Coords>(&sol);
        (CoalgebraVector::new(c0), CoalgebraVector::new(c1))
    };
    // Φ̃ flips the sign of the second covector.
    Ok((
        TrivializedCotangentPoint::new(g0, c0),
        TrivializedCotangentPoint::new(g1, -c1),
    ))
}

/// The unique `p` with `cotangent_lift(p) = (a, b)`.
///
/// For `θ = 0`, with `xi = τ⁻¹(g_k⁻¹ g_{k+1})`:
/// `(g_k, −d^{L*}_xi τ(mu_{k+1}), xi, mu_k − Ad*_{g_{k+1}⁻¹ g_k}(mu_{k+1}))`.
pub fn cotangent_lift_inverse<G: TauFamily>(
    map: &DiscretizationMap,
    a: &TrivializedCotangentPoint<G>,
    b: &TrivializedCotangentPoint<G>,
) -> Result<TTStarGPoint<G>> {
    if map.theta() == 0.0 {
        let (g, xi) = map.rd_inv(&a.g, &b.g)?;
        let back = b.g.inverse().compose(&a.g);
        return Ok(TTStarGPoint::new(
            g,
            -map.tau.dtau_l_dual::<G>(&xi, &b.mu),
            xi,
            a.mu - back.coadjoint(&b.mu),
        ));
    }
    let (g, xi) = map.rd_inv(&a.g, &b.g)?;
    let m = leg_jacobian(map, &g, &xi)?;
    let covector = m.transpose() * stack(a.mu.coords(), &(-b.mu).into_coords());
    let (p_bar, p_tilde) = split::<G::Coords>(&covector);
    Ok(alpha_inv(&TStarTGPoint::new(
        g,
        xi,
        CoalgebraVector::new(p_bar),
        CoalgebraVector::new(p_tilde),
    )))
}

/// Trivialized cotangent map `T* R̃_d`: covectors `(c0, c1)` at the two legs
/// over `(g, xi)` pulled back to a covector `(P, M)` at `(g, xi)`.
pub fn cotangent_of_rd<G: TauFamily>(
    map: &DiscretizationMap,
    g: &G,
    xi: &Alg<G>,
    c0: &CoAlg<G>,
    c1: &CoAlg<G>,
) -> Result<(CoAlg<G>, CoAlg<G>)> {
    let m = leg_jacobian(map, g, xi)?;
    let covector = m.transpose() * stack(c0.coords(), c1.coords());
    let (p, q) = split::<G::Coords>(&covector);
    Ok((CoalgebraVector::new(p), CoalgebraVector::new(q)))
}
