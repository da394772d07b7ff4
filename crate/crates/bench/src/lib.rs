//! Shared fixtures for the stepper benchmarks.

use geomint_core::{CoalgebraVector, InertiaOperator, LieGroup, LiePoissonState, SO3};

/// The canonical free rigid body: `I = diag(1, 2, 3)`, `mu0 = (1, 1, 1)/√3`, `g0 = e`.
pub fn rigid_body() -> (InertiaOperator<SO3>, LiePoissonState<SO3>) {
    let inertia = InertiaOperator::diagonal(&[1.0, 2.0, 3.0]).expect("diag(1,2,3) is SPD");
    let mu = CoalgebraVector::from_fn(|_| 1.0 / 3f64.sqrt());
    (inertia, LiePoissonState::new(SO3::identity(), mu))
}
