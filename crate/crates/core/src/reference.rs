//! High-accuracy reference solution of the rigid-body Lie-Poisson system on
//! SO(3), used as a test oracle.
//!
//! Integrates `mu̇ = mu × I⁻¹ mu`, `Ṙ = R hat(I⁻¹ mu)` in plain coordinates with
//! the Dormand-Prince 5(4) pair and adaptive steps. `R` is pushed back onto
//! SO(3) by polar decomposition after every accepted step, since the scheme
//! itself knows nothing about the group.

use nalgebra::{Matrix3, SVector, Vector3};

use crate::algebra::{CoalgebraVector, LieGroup, SO3};
use crate::error::{Error, Result};
use crate::integrators::{InertiaOperator, LiePoissonState};

type State = SVector<f64, 12>;

const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

/// Local error tolerance used when none is given.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

fn pack(g: &SO3, mu: &Vector3<f64>) -> State {
    let mut y = State::zeros();
    y.fixed_rows_mut::<3>(0).copy_from(mu);
    for (k, v) in g.matrix().iter().enumerate() {
        y[3 + k] = *v;
    }
    y
}

fn unpack(y: &State) -> (Matrix3<f64>, Vector3<f64>) {
    let mu = y.fixed_rows::<3>(0).into_owned();
    let r = Matrix3::from_iterator(y.iter().skip(3).copied());
    (r, mu)
}

fn rhs(inertia: &InertiaOperator<SO3>, y: &State) -> State {
    let (r, mu) = unpack(y);
    let omega = inertia.apply_inverse(&CoalgebraVector::new(mu)).into_coords();
    let r_dot = r * SO3::hat(&omega);
    let mut dy = State::zeros();
    dy.fixed_rows_mut::<3>(0).copy_from(&mu.cross(&omega));
    for (k, v) in r_dot.iter().enumerate() {
        dy[3 + k] = *v;
    }
    dy
}

fn reorthonormalize(y: &State) -> State {
    let (r, mu) = unpack(y);
    let g = SO3::from_matrix_unchecked(r).project_to_group();
    pack(&g, &mu)
}

/// Integrates from `s0` over `[0, t_total]` with local error tolerance `tol`.
pub fn reference_oracle(
    inertia: &InertiaOperator<SO3>,
    s0: &LiePoissonState<SO3>,
    t_total: f64,
    tol: f64,
) -> Result<LiePoissonState<SO3>> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::invalid("tol", "must be positive"));
    }
    if !(t_total.is_finite() && t_total >= 0.0) {
        return Err(Error::invalid("t_total", "must be finite and >= 0"));
    }
    let mut y = pack(&s0.g, s0.mu.coords());
    let mut t = 0.0;
    let mut h = (1e-2f64).min(t_total);
    let h_min = 1e-14 * t_total.max(1.0);
    let mut k = [State::zeros(); 7];
    k[0] = rhs(inertia, &y);

    while t < t_total {
        if t + h > t_total {
            h = t_total - t;
        }
        for i in 1..7 {
            let mut yi = y;
            for (j, kj) in k.iter().enumerate().take(i) {
                if A[i][j] != 0.0 {
                    yi += kj * (h * A[i][j]);
                }
            }
            k[i] = rhs(inertia, &yi);
        }
        let mut y5 = y;
        let mut err = State::zeros();
        for i in 0..7 {
            y5 += k[i] * (h * B5[i]);
            err += k[i] * (h * (B5[i] - B4[i]));
        }
        let scaled = err
            .iter()
            .zip(y.iter().zip(y5.iter()))
            .map(|(e, (a, b))| {
                let sc = tol + tol * a.abs().max(b.abs());
                (e / sc) * (e / sc)
            })
            .sum::<f64>();
        let err_norm = (scaled / 12.0).sqrt();

        if err_norm <= 1.0 {
            t += h;
            y = reorthonormalize(&y5);
            // First-same-as-last only holds before projection; recompute.
            k[0] = rhs(inertia, &y);
        }
        let factor = if err_norm == 0.0 {
            5.0
        } else {
            (0.9 * err_norm.powf(-0.2)).clamp(0.2, 5.0)
        };
        h *= factor;
        if t < t_total && h < h_min {
            return Err(Error::StepSizeUnderflow { time: t });
        }
    }
    let (r, mu) = unpack(&y);
    Ok(LiePoissonState::new(
        SO3::from_matrix_unchecked(r),
        CoalgebraVector::new(mu),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canonical() -> (InertiaOperator<SO3>, LiePoissonState<SO3>) {
        let inertia = InertiaOperator::diagonal(&[1.0, 2.0, 3.0]).unwrap();
        let mu = CoalgebraVector::new(Vector3::new(1.0, 1.0, 1.0) / 3f64.sqrt());
        (inertia, LiePoissonState::new(SO3::identity(), mu))
    }

    #[test]
    fn zero_time_returns_initial_state() {
        let (inertia, s0) = canonical();
        let s = reference_oracle(&inertia, &s0, 0.0, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(s, s0);
    }

    #[test]
    fn principal_axis_is_uniform_rotation() {
        let (inertia, _) = canonical();
        let s0 = LiePoissonState::new(SO3::identity(), CoalgebraVector::basis(0));
        let s = reference_oracle(&inertia, &s0, 2.5, DEFAULT_TOLERANCE).unwrap();
        assert!((s.mu - s0.mu).norm() < 1e-14);
        assert!(s.g.distance(&SO3::rot_x(2.5)) < 1e-10);
    }

    #[test]
    fn casimir_is_conserved() {
        let (inertia, s0) = canonical();
        let s = reference_oracle(&inertia, &s0, 5.0, DEFAULT_TOLERANCE).unwrap();
        assert!((s.mu.norm() - s0.mu.norm()).abs() < 1e-10);
        assert!((inertia.hamiltonian(&s.mu) - inertia.hamiltonian(&s0.mu)).abs() < 1e-10);
        assert!(s.g.manifold_residual() < 1e-12);
    }

    #[test]
    fn rejects_bad_tolerance() {
        let (inertia, s0) = canonical();
        assert!(matches!(
            reference_oracle(&inertia, &s0, 1.0, 0.0),
            Err(Error::InvalidParameter { .. })
        ));
    }
}
