//! The rotation group SO(3) stored as full 3×3 matrices.
//!
//! Algebra coordinates use the basis `e1, e2, e3` with `hat(e_i)` the
//! infinitesimal rotation about the `i`-th axis, so that `hat(xi) eta = xi × eta`.

use nalgebra::{Matrix3, Vector3};

use super::{Alg, AlgebraVector, CoAlg, CoalgebraVector, LieGroup, LieGroupDescriptor, Operator};
use crate::error::{Error, Result};
use crate::retraction::TauFamily;

/// Below this angle the trigonometric coefficients switch to Taylor series.
const SMALL_ANGLE: f64 = 1e-4;
/// Below this angle, coefficients with cancelling leading terms use their series.
const SERIES_ANGLE: f64 = 1e-2;

/// `tau_inv` refuses rotation angles within this margin of π.
pub const PI_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SO3 {
    mat: Matrix3<f64>,
}

impl SO3 {
    /// Wraps a matrix after checking `‖RᵀR − I‖_F ≤ 1e-9` and `det R > 0`.
    pub fn from_matrix(mat: Matrix3<f64>) -> Result<Self> {
        let orth = (mat.transpose() * mat - Matrix3::identity()).norm();
        if !orth.is_finite() || orth > 1e-9 {
            return Err(Error::invalid(
                "rotation",
                format!("orthogonality residual {orth:e} exceeds 1e-9"),
            ));
        }
        if mat.determinant() <= 0.0 {
            return Err(Error::invalid("rotation", "determinant must be positive"));
        }
        Ok(SO3 { mat })
    }

    /// Wraps a matrix without validation. Drift is visible via `manifold_residual`.
    pub fn from_matrix_unchecked(mat: Matrix3<f64>) -> Self {
        SO3 { mat }
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.mat
    }

    pub fn rot_x(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        SO3::from_matrix_unchecked(Matrix3::new(1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c))
    }

    pub fn rot_y(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        SO3::from_matrix_unchecked(Matrix3::new(c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c))
    }

    pub fn rot_z(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        SO3::from_matrix_unchecked(Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0))
    }

    /// Rotation by `angle` about `axis` (normalized internally).
    pub fn from_axis_angle(axis: Vector3<f64>, angle: f64) -> Result<Self> {
        let n = axis.norm();
        if !(n.is_finite() && n > 0.0) || !angle.is_finite() {
            return Err(Error::invalid("axis", "axis must be a finite non-zero vector"));
        }
        Ok(rodrigues(&(axis * (angle / n))))
    }

    pub fn hat(xi: &Vector3<f64>) -> Matrix3<f64> {
        Matrix3::new(0.0, -xi.z, xi.y, xi.z, 0.0, -xi.x, -xi.y, xi.x, 0.0)
    }

    /// Inverse of [`SO3::hat`]; reads the three independent entries only.
    pub fn vee(m: &Matrix3<f64>) -> Vector3<f64> {
        Vector3::new(m[(2, 1)], m[(0, 2)], m[(1, 0)])
    }

    /// `vee` of the skew-symmetric part of an arbitrary matrix.
    pub fn vee_skew(m: &Matrix3<f64>) -> Vector3<f64> {
        SO3::vee(&((m - m.transpose()) * 0.5))
    }

    /// Rotation angle in `[0, π]`.
    pub fn angle(&self) -> f64 {
        let v = SO3::vee_skew(&self.mat);
        let c = 0.5 * (self.mat.trace() - 1.0);
        v.norm().atan2(c)
    }

    fn check_injectivity(&self) -> Result<f64> {
        let angle = self.angle();
        let limit = std::f64::consts::PI - PI_MARGIN;
        if angle >= limit {
            Err(Error::OutOfDomain { angle, limit })
        } else {
            Ok(angle)
        }
    }
}

impl LieGroup for SO3 {
    type Coords = Vector3<f64>;

    fn descriptor() -> LieGroupDescriptor {
        LieGroupDescriptor {
            name: "SO(3)",
            dimension: 3,
            basis_labels: &["e1", "e2", "e3"],
            tolerance: 1e-12,
        }
    }

    fn identity() -> Self {
        SO3 {
            mat: Matrix3::identity(),
        }
    }

    fn compose(&self, other: &Self) -> Self {
        SO3 {
            mat: self.mat * other.mat,
        }
    }

    fn inverse(&self) -> Self {
        SO3 {
            mat: self.mat.transpose(),
        }
    }

    fn adjoint(&self, xi: &Alg<Self>) -> Alg<Self> {
        AlgebraVector::new(self.mat * xi.coords())
    }

    fn coadjoint(&self, mu: &CoAlg<Self>) -> CoAlg<Self> {
        CoalgebraVector::new(self.mat.tr_mul(mu.coords()))
    }

    fn bracket(xi: &Alg<Self>, eta: &Alg<Self>) -> Alg<Self> {
        AlgebraVector::new(xi.coords().cross(eta.coords()))
    }

    fn ad_star(xi: &Alg<Self>, mu: &CoAlg<Self>) -> CoAlg<Self> {
        CoalgebraVector::new(mu.coords().cross(xi.coords()))
    }

    fn distance(&self, other: &Self) -> f64 {
        (self.mat - other.mat).norm()
    }

    fn manifold_residual(&self) -> f64 {
        (self.mat.transpose() * self.mat - Matrix3::identity()).norm()
    }

    fn project_to_group(&self) -> Self {
        let svd = self.mat.svd(true, true);
        let (u, v_t) = (svd.u.unwrap(), svd.v_t.unwrap());
        let mut r = u * v_t;
        if r.determinant() < 0.0 {
            let mut u = u;
            u.column_mut(2).neg_mut();
            r = u * v_t;
        }
        SO3 { mat: r }
    }

    fn flatten(&self) -> Vec<f64> {
        let m = &self.mat;
        (0..3)
            .flat_map(|i| (0..3).map(move |j| m[(i, j)]))
            .collect()
    }
}

/// `sin θ / θ`, `(1 − cos θ)/θ²`, `(θ − sin θ)/θ³`.
fn rodrigues_coefficients(theta: f64) -> (f64, f64, f64) {
    let t2 = theta * theta;
    if theta < SMALL_ANGLE {
        return (
            1.0 - t2 / 6.0 + t2 * t2 / 120.0,
            0.5 - t2 / 24.0 + t2 * t2 / 720.0,
            1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0,
        );
    }
    let s = theta.sin();
    let half = (0.5 * theta).sin();
    let c = if theta < SERIES_ANGLE {
        1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0 - t2 * t2 * t2 / 362880.0
    } else {
        (theta - s) / (t2 * theta)
    };
    (s / theta, 2.0 * half * half / t2, c)
}

fn rodrigues(xi: &Vector3<f64>) -> SO3 {
    let (a, b, _) = rodrigues_coefficients(xi.norm());
    let k = SO3::hat(xi);
    SO3 {
        mat: Matrix3::identity() + k * a + k * k * b,
    }
}

impl TauFamily for SO3 {
    fn exp(xi: &Alg<Self>) -> Self {
        rodrigues(xi.coords())
    }

    fn log(&self) -> Result<Alg<Self>> {
        let theta = self.check_injectivity()?;
        let v = SO3::vee_skew(&self.mat);
        let scale = if theta < SMALL_ANGLE {
            let t2 = theta * theta;
            1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0
        } else {
            theta / theta.sin()
        };
        Ok(AlgebraVector::new(v * scale))
    }

    fn dexp_left(xi: &Alg<Self>) -> Operator<Self> {
        let (_, b, c) = rodrigues_coefficients(xi.norm());
        let k = SO3::hat(xi.coords());
        Matrix3::identity() - k * b + k * k * c
    }

    fn dexp_left_inv(xi: &Alg<Self>) -> Result<Operator<Self>> {
        let theta = xi.norm();
        let two_pi = 2.0 * std::f64::consts::PI;
        if theta >= two_pi - 1e-6 {
            return Err(Error::Singular("dexp_left_inv"));
        }
        let coef = if theta < SERIES_ANGLE {
            let t2 = theta * theta;
            1.0 / 12.0 + t2 / 720.0 + t2 * t2 / 30240.0 + t2 * t2 * t2 / 1209600.0
        } else {
            1.0 / (theta * theta) - 1.0 / ((0.5 * theta).tan() * 2.0 * theta)
        };
        let k = SO3::hat(xi.coords());
        Ok(Matrix3::identity() + k * 0.5 + k * k * coef)
    }

    fn cay(xi: &Alg<Self>) -> Result<Self> {
        let half = SO3::hat(xi.coords()) * 0.5;
        let lhs = Matrix3::identity() - half;
        let rhs = Matrix3::identity() + half;
        lhs.lu()
            .solve(&rhs)
            .map(|mat| SO3 { mat })
            .ok_or(Error::Singular("cayley"))
    }

    fn cay_inv(&self) -> Result<Alg<Self>> {
        self.check_injectivity()?;
        let denom = 1.0 + self.mat.trace();
        let v = SO3::vee(&(self.mat - self.mat.transpose()));
        Ok(AlgebraVector::new(v * (2.0 / denom)))
    }

    fn dcay_left(xi: &Alg<Self>) -> Operator<Self> {
        let k = SO3::hat(xi.coords());
        (Matrix3::identity() - k * 0.5) / (1.0 + 0.25 * xi.coords().norm_squared())
    }

    fn dcay_left_inv(xi: &Alg<Self>) -> Result<Operator<Self>> {
        let x = xi.coords();
        Ok(Matrix3::identity() + SO3::hat(x) * 0.5 + x * x.transpose() * 0.25)
    }
}
