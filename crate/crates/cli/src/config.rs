//! JSON run configuration.
//!
//! ```json
//! {
//!   "group": "SO3",
//!   "tau": "exp",
//!   "theta": 0.0,
//!   "step": 0.01,
//!   "steps": 10000,
//!   "inertia": [1.0, 2.0, 3.0],
//!   "initial_rotation": [0.0, 0.0, 1.0, 0.0],
//!   "initial_momentum": [0.5773502691896258, 0.5773502691896258, 0.5773502691896258],
//!   "integrator": "lie_poisson",
//!   "orientation": "forward",
//!   "solver": "fixed_point",
//!   "tolerance": 1e-13,
//!   "max_iterations": 100,
//!   "output": "trajectory.csv",
//!   "format": "csv"
//! }
//! ```
//!
//! `inertia` is either three diagonal entries or a full 3×3 matrix given row by
//! row. Exactly one of `initial_momentum` and `initial_velocity` must be set.

use std::path::{Path, PathBuf};

use geomint_core::{
    AlgebraVector, CoAlg, CoalgebraVector, DiscretizationMap, FlowOrientation, InertiaOperator, IntegratorConfig,
    LieGroup, SolverKind, SolverSettings, TauMap, SO3,
};
use geomint_core::nalgebra::{Matrix3, Vector3};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum TauChoice {
    #[default]
    #[serde(alias = "exponential")]
    Exp,
    Cayley,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum IntegratorChoice {
    #[default]
    LiePoisson,
    EulerPoincare,
    Reference,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum OrientationChoice {
    #[default]
    Forward,
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum SolverChoice {
    #[default]
    FixedPoint,
    Newton,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum InertiaSpec {
    Diagonal([f64; 3]),
    Full([[f64; 3]; 3]),
}

fn default_group() -> String {
    "SO3".to_string()
}

/// The configuration document as written.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default = "default_group")]
    pub group: String,
    #[serde(default)]
    pub tau: TauChoice,
    #[serde(default)]
    pub theta: f64,
    pub step: f64,
    pub steps: usize,
    pub inertia: InertiaSpec,
    #[serde(default)]
    pub initial_rotation: Option<[f64; 4]>,
    #[serde(default)]
    pub initial_momentum: Option<[f64; 3]>,
    #[serde(default)]
    pub initial_velocity: Option<[f64; 3]>,
    #[serde(default)]
    pub integrator: IntegratorChoice,
    #[serde(default)]
    pub orientation: OrientationChoice,
    #[serde(default)]
    pub solver: SolverChoice,
    #[serde(default)]
    pub tolerance: Option<f64>,
    #[serde(default)]
    pub max_iterations: Option<usize>,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub format: OutputFormat,
}

/// A validated run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub tau: TauMap,
    pub theta: f64,
    pub step: f64,
    pub steps: usize,
    pub inertia: InertiaOperator<SO3>,
    pub g0: SO3,
    pub mu0: CoAlg<SO3>,
    pub integrator: IntegratorChoice,
    pub orientation: FlowOrientation,
    pub solver: SolverKind,
    pub settings: SolverSettings,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
}

impl RunConfig {
    /// The canonical free rigid body: `I = diag(1, 2, 3)`, `mu0 = (1, 1, 1)/√3`,
    /// `g0 = e`, `τ = exp`, `θ = 0`.
    pub fn canonical(step: f64, steps: usize) -> Self {
        RunConfig {
            tau: TauMap::EXP,
            theta: 0.0,
            step,
            steps,
            inertia: InertiaOperator::diagonal(&[1.0, 2.0, 3.0]).expect("diag(1,2,3) is SPD"),
            g0: SO3::identity(),
            mu0: CoalgebraVector::new(Vector3::repeat(1.0 / 3f64.sqrt())),
            integrator: IntegratorChoice::LiePoisson,
            orientation: FlowOrientation::Forward,
            solver: SolverKind::FixedPoint,
            settings: SolverSettings::default(),
            output: None,
            format: OutputFormat::Csv,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let file: ConfigFile = serde_json::from_str(text).map_err(|e| {
            CliError::Config(format!("line {}, column {}: {e}", e.line(), e.column()))
        })?;
        file.validate()
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn integrator_config(&self) -> IntegratorConfig {
        IntegratorConfig::new(self.step)
            .expect("step validated")
            .with_orientation(self.orientation)
            .with_solver(self.solver)
            .with_settings(self.settings.tolerance, self.settings.max_iterations)
            .expect("tolerance validated")
    }

    pub fn map(&self) -> DiscretizationMap {
        DiscretizationMap::new(self.tau, self.theta).expect("theta validated")
    }

    pub fn total_time(&self) -> f64 {
        self.step * self.steps as f64
    }
}

fn bad(field: &str, reason: impl std::fmt::Display) -> CliError {
    CliError::Config(format!("field `{field}`: {reason}"))
}

impl ConfigFile {
    pub fn validate(self) -> Result<RunConfig, CliError> {
        if !matches!(self.group.as_str(), "SO3" | "so3" | "SO(3)" | "so(3)") {
            return Err(bad("group", format!("unsupported group {:?}; only SO3 is available", self.group)));
        }
        if !(self.step.is_finite() && self.step > 0.0) {
            return Err(bad("step", format!("must be a positive number, got {}", self.step)));
        }
        if self.steps == 0 {
            return Err(bad("steps", "must be at least 1"));
        }
        if !(0.0..=1.0).contains(&self.theta) {
            return Err(bad("theta", format!("must lie in [0, 1], got {}", self.theta)));
        }
        if self.theta != 0.0 && self.integrator != IntegratorChoice::Reference {
            return Err(bad("theta", "the lie_poisson and euler_poincare steppers require theta = 0"));
        }
        let defaults = SolverSettings::default();
        let tolerance = self.tolerance.unwrap_or(defaults.tolerance);
        if !(tolerance.is_finite() && tolerance > 0.0) {
            return Err(bad("tolerance", format!("must be a positive number, got {tolerance}")));
        }
        let settings = SolverSettings::new(tolerance, self.max_iterations.unwrap_or(defaults.max_iterations));
        let matrix = match self.inertia {
            InertiaSpec::Diagonal(d) => Matrix3::from_diagonal(&Vector3::from(d)),
            InertiaSpec::Full(rows) => Matrix3::from_fn(|i, j| rows[i][j]),
        };
        let inertia = InertiaOperator::<SO3>::new(matrix).map_err(|e| bad("inertia", e))?;
        let g0 = match self.initial_rotation {
            None => SO3::identity(),
            Some([x, y, z, angle]) => {
                SO3::from_axis_angle(Vector3::new(x, y, z), angle).map_err(|e| bad("initial_rotation", e))?
            }
        };
        let mu0 = match (self.initial_momentum, self.initial_velocity) {
            (Some(m), None) => CoalgebraVector::new(Vector3::from(m)),
            (None, Some(v)) => inertia.apply(&AlgebraVector::new(Vector3::from(v))),
            (Some(_), Some(_)) => {
                return Err(bad("initial_momentum", "give either initial_momentum or initial_velocity, not both"))
            }
            (None, None) => return Err(bad("initial_momentum", "one of initial_momentum or initial_velocity is required")),
        };
        if !mu0.coords().iter().all(|v| v.is_finite()) {
            return Err(bad("initial_momentum", "must be finite"));
        }
        Ok(RunConfig {
            tau: match self.tau {
                TauChoice::Exp => TauMap::EXP,
                TauChoice::Cayley => TauMap::CAYLEY,
            },
            theta: self.theta,
            step: self.step,
            steps: self.steps,
            inertia,
            g0,
            mu0,
            integrator: self.integrator,
            orientation: match self.orientation {
                OrientationChoice::Forward => FlowOrientation::Forward,
                OrientationChoice::Literal => FlowOrientation::Literal,
            },
            solver: match self.solver {
                SolverChoice::FixedPoint => SolverKind::FixedPoint,
                SolverChoice::Newton => SolverKind::Newton,
            },
            settings,
            output: self.output,
            format: self.format,
        })
    }
}
