//! Left-trivialized tangent, cotangent and second-order bundles as
//! semidirect products.
//!
//! ```text
//! TG    ≅ G ⋉ g                    (g, xi)(h, eta) = (gh, Ad_{h⁻¹} xi + eta)
//! T*G   ≅ G ⋉ g*                   (g, mu)(h, nu)  = (gh, Ad*_{h⁻¹} mu + nu)
//! TTG   ≅ (G ⋉ g) ⋉ (g ⋉ g)
//! TT*G  ≅ (G ⋉ g*) ⋉ (g ⋉ g*)
//! T*TG  ≅ (G ⋉ g) ⋉ (g* ⋉ g*)
//! T*T*G ≅ (G ⋉ g*) ⋉ (g* ⋉ g)
//! ```
//!
//! Only `G ⋉ g`, `G ⋉ g*` and `TTG` carry group laws. The other three
//! second-order bundles are plain four-slot containers.
//!
//! A `TTGPoint (g, xi, xi_bar, xi_tilde)` is the left translate of the algebra
//! element `(xi_bar, xi_tilde)` of `G ⋉ g` to the point `(g, xi)`. In the
//! product chart `G × g` this is the velocity `(g·xi_bar, xi_tilde + [xi, xi_bar])`.

use crate::algebra::{Alg, CoAlg, LieGroup};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrivializedTangentPoint<G: LieGroup> {
    pub g: G,
    pub xi: Alg<G>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrivializedCotangentPoint<G: LieGroup> {
    pub g: G,
    pub mu: CoAlg<G>,
}

/// Point of `(G ⋉ g) ⋉ (g ⋉ g)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TTGPoint<G: LieGroup> {
    pub g: G,
    pub xi: Alg<G>,
    pub xi_bar: Alg<G>,
    pub xi_tilde: Alg<G>,
}

/// Point of `(G ⋉ g*) ⋉ (g ⋉ g*)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TTStarGPoint<G: LieGroup> {
    pub g: G,
    pub mu: CoAlg<G>,
    pub xi_bar: Alg<G>,
    pub mu_tilde: CoAlg<G>,
}

/// Point of `(G ⋉ g) ⋉ (g* ⋉ g*)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TStarTGPoint<G: LieGroup> {
    pub g: G,
    pub xi: Alg<G>,
    pub p_bar: CoAlg<G>,
    pub p_tilde: CoAlg<G>,
}

/// Point of `(G ⋉ g*) ⋉ (g* ⋉ g)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TStarTStarGPoint<G: LieGroup> {
    pub g: G,
    pub mu: CoAlg<G>,
    pub nu: CoAlg<G>,
    pub eta: Alg<G>,
}

impl<G: LieGroup> TrivializedTangentPoint<G> {
    pub fn new(g: G, xi: Alg<G>) -> Self {
        Self { g, xi }
    }

    pub fn identity() -> Self {
        Self::new(G::identity(), Alg::<G>::zero())
    }

    /// Sum of the base distance and the fiber distance.
    pub fn distance(&self, other: &Self) -> f64 {
        self.g.distance(&other.g) + (self.xi - other.xi).norm()
    }
}

impl<G: LieGroup> TrivializedCotangentPoint<G> {
    pub fn new(g: G, mu: CoAlg<G>) -> Self {
        Self { g, mu }
    }

    pub fn identity() -> Self {
        Self::new(G::identity(), CoAlg::<G>::zero())
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.g.distance(&other.g) + (self.mu - other.mu).norm()
    }
}

impl<G: LieGroup> TTGPoint<G> {
    pub fn new(g: G, xi: Alg<G>, xi_bar: Alg<G>, xi_tilde: Alg<G>) -> Self {
        Self {
            g,
            xi,
            xi_bar,
            xi_tilde,
        }
    }

    pub fn identity() -> Self {
        let z = Alg::<G>::zero();
        Self::new(G::identity(), z, z, z)
    }

    /// Projection onto slots 1 and 2.
    pub fn pr12(&self) -> TrivializedTangentPoint<G> {
        TrivializedTangentPoint::new(self.g, self.xi)
    }

    /// Projection onto slots 1 and 3.
    pub fn pr13(&self) -> TrivializedTangentPoint<G> {
        TrivializedTangentPoint::new(self.g, self.xi_bar)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.g.distance(&other.g)
            + (self.xi - other.xi).norm()
            + (self.xi_bar - other.xi_bar).norm()
            + (self.xi_tilde - other.xi_tilde).norm()
    }
}

impl<G: LieGroup> TTStarGPoint<G> {
    pub fn new(g: G, mu: CoAlg<G>, xi_bar: Alg<G>, mu_tilde: CoAlg<G>) -> Self {
        Self {
            g,
            mu,
            xi_bar,
            mu_tilde,
        }
    }

    pub fn pr12(&self) -> TrivializedCotangentPoint<G> {
        TrivializedCotangentPoint::new(self.g, self.mu)
    }

    pub fn pr13(&self) -> TrivializedTangentPoint<G> {
        TrivializedTangentPoint::new(self.g, self.xi_bar)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.g.distance(&other.g)
            + (self.mu - other.mu).norm()
            + (self.xi_bar - other.xi_bar).norm()
            + (self.mu_tilde - other.mu_tilde).norm()
    }
}

impl<G: LieGroup> TStarTGPoint<G> {
    pub fn new(g: G, xi: Alg<G>, p_bar: CoAlg<G>, p_tilde: CoAlg<G>) -> Self {
        Self {
            g,
            xi,
            p_bar,
            p_tilde,
        }
    }

    pub fn pr12(&self) -> TrivializedTangentPoint<G> {
        TrivializedTangentPoint::new(self.g, self.xi)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.g.distance(&other.g)
            + (self.xi - other.xi).norm()
            + (self.p_bar - other.p_bar).norm()
            + (self.p_tilde - other.p_tilde).norm()
    }
}

impl<G: LieGroup> TStarTStarGPoint<G> {
    pub fn new(g: G, mu: CoAlg<G>, nu: CoAlg<G>, eta: Alg<G>) -> Self {
        Self { g, mu, nu, eta }
    }

    pub fn pr12(&self) -> TrivializedCotangentPoint<G> {
        TrivializedCotangentPoint::new(self.g, self.mu)
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.g.distance(&other.g)
            + (self.mu - other.mu).norm()
            + (self.nu - other.nu).norm()
            + (self.eta - other.eta).norm()
    }
}

/// `(g, xi)(h, eta) = (gh, Ad_{h⁻¹} xi + eta)`.
pub fn tg_mult<G: LieGroup>(
    a: &TrivializedTangentPoint<G>,
    b: &TrivializedTangentPoint<G>,
) -> TrivializedTangentPoint<G> {
    let h_inv = b.g.inverse();
    TrivializedTangentPoint::new(a.g.compose(&b.g), h_inv.adjoint(&a.xi) + b.xi)
}

/// `(g, xi)⁻¹ = (g⁻¹, −Ad_g xi)`.
pub fn tg_inverse<G: LieGroup>(a: &TrivializedTangentPoint<G>) -> TrivializedTangentPoint<G> {
    TrivializedTangentPoint::new(a.g.inverse(), -a.g.adjoint(&a.xi))
}

/// `(g, mu)(h, nu) = (gh, Ad*_{h⁻¹} mu + nu)` with `Ad*` read as the left
/// coadjoint action `Ad*_{h⁻¹} = (Ad_h)^T`, the reading under which the law
/// is associative. In terms of [`LieGroup::coadjoint`] this is `coadjoint(h, mu)`.
pub fn tstarg_mult<G: LieGroup>(
    a: &TrivializedCotangentPoint<G>,
    b: &TrivializedCotangentPoint<G>,
) -> TrivializedCotangentPoint<G> {
    TrivializedCotangentPoint::new(a.g.compose(&b.g), b.g.coadjoint(&a.mu) + b.mu)
}

/// `(g, mu)⁻¹ = (g⁻¹, −Ad*_g mu)`, with the same left-action reading of `Ad*`.
pub fn tstarg_inverse<G: LieGroup>(
    a: &TrivializedCotangentPoint<G>,
) -> TrivializedCotangentPoint<G> {
    let g_inv = a.g.inverse();
    TrivializedCotangentPoint::new(g_inv, -g_inv.coadjoint(&a.mu))
}

/// Group law of `(G ⋉ g) ⋉ (g ⋉ g)`:
///
/// ```text
/// (gh, Ad_{h⁻¹}xi + eta, Ad_{h⁻¹}xi_bar + eta_bar,
///      Ad_{h⁻¹}(xi_tilde + [xi_bar, Ad_h eta]) + eta_tilde)
/// ```
pub fn ttg_mult<G: LieGroup>(a: &TTGPoint<G>, b: &TTGPoint<G>) -> TTGPoint<G> {
    let h = &b.g;
    let h_inv = h.inverse();
    let twist = G::bracket(&a.xi_bar, &h.adjoint(&b.xi));
    TTGPoint::new(
        a.g.compose(h),
        h_inv.adjoint(&a.xi) + b.xi,
        h_inv.adjoint(&a.xi_bar) + b.xi_bar,
        h_inv.adjoint(&(a.xi_tilde + twist)) + b.xi_tilde,
    )
}

/// `(g⁻¹, −Ad_g xi, −Ad_g xi_bar, −Ad_g(xi_tilde + [xi, xi_bar]))`.
pub fn ttg_inverse<G: LieGroup>(a: &TTGPoint<G>) -> TTGPoint<G> {
    let g = &a.g;
    TTGPoint::new(
        g.inverse(),
        -g.adjoint(&a.xi),
        -g.adjoint(&a.xi_bar),
        -g.adjoint(&(a.xi_tilde + G::bracket(&a.xi, &a.xi_bar))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgebraVector, CoalgebraVector, SO3};
    use nalgebra::Vector3;
    use std::f64::consts::FRAC_PI_2;

    fn e(i: usize) -> Alg<SO3> {
        AlgebraVector::basis(i)
    }

    fn sample_g() -> SO3 {
        SO3::rot_z(0.8).compose(&SO3::rot_x(-0.3))
    }

    #[test]
    fn tg_identity_and_inverse() {
        let a = TrivializedTangentPoint::new(sample_g(), AlgebraVector::new(Vector3::new(0.1, 2.0, -0.4)));
        assert_eq!(tg_mult(&TrivializedTangentPoint::identity(), &a), a);
        let id = tg_mult(&a, &tg_inverse(&a));
        assert!(id.distance(&TrivializedTangentPoint::identity()) < 1e-14);
    }

    #[test]
    fn tg_mult_worked_value() {
        let a = TrivializedTangentPoint::new(SO3::rot_z(FRAC_PI_2), e(0));
        let b = TrivializedTangentPoint::new(SO3::identity(), e(1));
        let c = tg_mult(&a, &b);
        assert_eq!(c.g, SO3::rot_z(FRAC_PI_2));
        assert_eq!(c.xi, e(0) + e(1));
    }

    #[test]
    fn tg_inverse_worked_values() {
        let xi = AlgebraVector::new(Vector3::new(0.3, -0.2, 0.5));
        let a = TrivializedTangentPoint::new(SO3::identity(), xi);
        assert_eq!(tg_inverse(&a), TrivializedTangentPoint::new(SO3::identity(), -xi));
        let b = TrivializedTangentPoint::new(SO3::rot_z(FRAC_PI_2), e(0));
        let inv = tg_inverse(&b);
        assert!(inv.g.distance(&SO3::rot_z(-FRAC_PI_2)) < 1e-15);
        assert!((inv.xi + e(1)).norm() < 1e-15);
        assert!(tg_inverse(&inv).distance(&b) < 1e-15);
    }

    #[test]
    fn tg_fiber_over_identity_is_vector_addition() {
        let xi = AlgebraVector::new(Vector3::new(0.3, -0.2, 0.5));
        let eta = AlgebraVector::new(Vector3::new(-1.0, 0.7, 0.0));
        let c = tg_mult(
            &TrivializedTangentPoint::new(SO3::identity(), xi),
            &TrivializedTangentPoint::new(SO3::identity(), eta),
        );
        assert_eq!(c.xi, xi + eta);
    }

    #[test]
    fn tstarg_identity_and_inverse() {
        let a = TrivializedCotangentPoint::new(sample_g(), CoalgebraVector::new(Vector3::new(1.0, -0.5, 0.25)));
        assert_eq!(tstarg_mult(&TrivializedCotangentPoint::identity(), &a), a);
        let id = tstarg_mult(&a, &tstarg_inverse(&a));
        assert!(id.distance(&TrivializedCotangentPoint::identity()) < 1e-14);
    }

    #[test]
    fn ttg_identity_laws() {
        let a = TTGPoint::new(
            sample_g(),
            AlgebraVector::new(Vector3::new(0.1, 0.2, 0.3)),
            AlgebraVector::new(Vector3::new(-0.4, 0.5, 0.0)),
            AlgebraVector::new(Vector3::new(0.0, -1.0, 2.0)),
        );
        assert_eq!(ttg_mult(&TTGPoint::identity(), &a), a);
        assert_eq!(ttg_mult(&a, &TTGPoint::identity()), a);
        assert!(ttg_mult(&a, &ttg_inverse(&a)).distance(&TTGPoint::identity()) < 1e-14);
        assert!(ttg_mult(&ttg_inverse(&a), &a).distance(&TTGPoint::identity()) < 1e-14);
    }

    #[test]
    fn ttg_inverse_worked_value() {
        assert_eq!(ttg_inverse(&TTGPoint::<SO3>::identity()), TTGPoint::identity());
        let a = TTGPoint::new(SO3::identity(), e(0), e(1), AlgebraVector::zero());
        let inv = ttg_inverse(&a);
        assert_eq!(inv, TTGPoint::new(SO3::identity(), -e(0), -e(1), -e(2)));
        assert!(ttg_inverse(&inv).distance(&a) < 1e-15);
    }
}
