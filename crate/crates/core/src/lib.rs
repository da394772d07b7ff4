//! Structure-preserving integrators on Lie groups built from retraction maps,
//! the trivialized Tulczyjew triple and lifted discretization maps.
//!
//! The concrete group shipped here is [`SO3`]. The free rigid body is the
//! running example:
//!
//! ```
//! use geomint_core::{
//!     CoalgebraVector, DiscretizationMap, InertiaOperator, IntegratorConfig, LieGroup,
//!     LiePoissonState, SO3, TauMap, lie_poisson_step,
//! };
//! use nalgebra::Vector3;
//!
//! let inertia = InertiaOperator::<SO3>::diagonal(&[1.0, 2.0, 3.0]).unwrap();
//! let cfg = IntegratorConfig::new(1e-2).unwrap();
//! let map = DiscretizationMap::forward(TauMap::EXP);
//! let mut s = LiePoissonState::new(SO3::identity(), CoalgebraVector::new(Vector3::new(0.6, 0.0, 0.8)));
//! for _ in 0..100 {
//!     s = lie_poisson_step(&inertia, &cfg, &map, &s).unwrap().state;
//! }
//! assert!((s.mu.norm() - 1.0).abs() < 1e-12);
//! ```

pub mod algebra;
pub mod bundles;
pub mod error;
pub mod integrators;
pub mod lifts;
pub mod reference;
pub mod retraction;
pub mod tulczyjew;

pub use nalgebra;

pub use algebra::{Alg, AlgebraVector, CoAlg, CoalgebraVector, Coords, LieGroup, LieGroupDescriptor, Operator, SO3};
pub use bundles::{
    TStarTGPoint, TStarTStarGPoint, TTGPoint, TTStarGPoint, TrivializedCotangentPoint, TrivializedTangentPoint,
};
pub use error::{Error, Result};
pub use integrators::{
    euler_arnold_rhs, euler_poincare_residual, euler_poincare_step, euler_poincare_vf, group_flow_step,
    lie_poisson_residual, lie_poisson_step, lie_poisson_vf, EulerPoincareState, FlowOrientation, InertiaOperator,
    IntegratorConfig, LiePoissonState, LiePoissonStep, SolverKind, SolverSettings,
};
pub use reference::reference_oracle;
pub use retraction::{DiscretizationMap, TauFamily, TauKind, TauMap};
