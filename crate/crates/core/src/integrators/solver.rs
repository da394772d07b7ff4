//! Root finding for the implicit step equations on algebra coordinates.

use crate::algebra::{AlgebraVector, Coords};
use crate::error::{Error, Result};

/// Finite-difference step for the Newton Jacobian.
pub const JACOBIAN_STEP: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SolverKind {
    /// Plain iteration `x ← x − r(x)`, falling back to Newton if it fails.
    #[default]
    FixedPoint,
    Newton,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverSettings {
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl SolverSettings {
    pub fn new(tolerance: f64, max_iterations: usize) -> Self {
        SolverSettings {
            tolerance,
            max_iterations,
        }
    }
}

impl Default for SolverSettings {
    fn default() -> Self {
        SolverSettings::new(1e-13, 100)
    }
}

/// Solves `r(x) = 0` by the iteration `x ← x − r(x)`.
///
/// Converges when `x ↦ x − r(x)` is a contraction near the root. Reports
/// `SolverDiverged` with the last residual norm otherwise.
pub fn fixed_point_solve<V, F>(
    mut residual: F,
    guess: AlgebraVector<V>,
    settings: &SolverSettings,
) -> Result<AlgebraVector<V>>
where
    V: Coords,
    F: FnMut(&AlgebraVector<V>) -> Result<AlgebraVector<V>>,
{
    let mut x = guess;
    let mut last = f64::INFINITY;
    for iteration in 0..=settings.max_iterations {
        let r = residual(&x)?;
        let norm = r.norm();
        if !norm.is_finite() {
            return Err(Error::SolverDiverged {
                iterations: iteration,
                residual: norm,
            });
        }
        if norm <= settings.tolerance {
            return Ok(x);
        }
        last = norm;
        x -= r;
    }
    Err(Error::SolverDiverged {
        iterations: settings.max_iterations,
        residual: last,
    })
}

/// Newton iteration with a forward-difference Jacobian (`h = 1e-7`).
pub fn newton_solve<V, F>(
    mut residual: F,
    guess: AlgebraVector<V>,
    settings: &SolverSettings,
) -> Result<AlgebraVector<V>>
where
    V: Coords,
    F: FnMut(&AlgebraVector<V>) -> Result<AlgebraVector<V>>,
{
    let n = V::dim();
    let mut x = guess;
    let mut last = f64::INFINITY;
    for iteration in 0..=settings.max_iterations {
        let r = residual(&x)?;
        let norm = r.norm();
        if !norm.is_finite() {
            return Err(Error::SolverDiverged {
                iterations: iteration,
                residual: norm,
            });
        }
        if norm <= settings.tolerance {
            return Ok(x);
        }
        last = norm;
        let mut columns = Vec::with_capacity(n);
        for j in 0..n {
            let probe = x + AlgebraVector::<V>::basis(j) * JACOBIAN_STEP;
            columns.push((residual(&probe)? - r) * (1.0 / JACOBIAN_STEP));
        }
        let jac = V::operator_from_fn(|i, j| columns[j].coords().component(i));
        let jac_inv = V::invert(&jac).ok_or(Error::Singular("newton jacobian"))?;
        let step = AlgebraVector::new(V::apply(&jac_inv, r.coords()));
        x -= step;
    }
    Err(Error::SolverDiverged {
        iterations: settings.max_iterations,
        residual: last,
    })
}

/// Dispatches on `kind`. `FixedPoint` retries with Newton when the plain
/// iteration fails to converge.
pub fn solve<V, F>(
    kind: SolverKind,
    mut residual: F,
    guess: AlgebraVector<V>,
    settings: &SolverSettings,
) -> Result<AlgebraVector<V>>
where
    V: Coords,
    F: FnMut(&AlgebraVector<V>) -> Result<AlgebraVector<V>>,
{
    match kind {
        SolverKind::Newton => newton_solve(residual, guess, settings),
        SolverKind::FixedPoint => match fixed_point_solve(&mut residual, guess, settings) {
            Err(Error::SolverDiverged { .. }) => newton_solve(residual, guess, settings),
            other => other,
        },
    }
}
