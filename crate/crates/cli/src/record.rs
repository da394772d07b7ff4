//! One output row per step and the CSV/JSON writers.

use std::io::Write;

use geomint_core::{CoAlg, InertiaOperator, LieGroup, SO3};
use serde::Serialize;

use crate::config::OutputFormat;

pub const CSV_HEADER: &str =
    "k,time,g00,g01,g02,g10,g11,g12,g20,g21,g22,m1,m2,m3,energy,casimir,orth_residual";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectoryRecord {
    pub k: usize,
    pub time: f64,
    /// Row-major entries of `g`.
    pub g: [f64; 9],
    /// `mu` for Lie-Poisson and reference runs, `xi` for Euler-Poincaré runs.
    pub m: [f64; 3],
    pub energy: f64,
    pub casimir: f64,
    pub orth_residual: f64,
}

impl TrajectoryRecord {
    /// Record for a momentum state: energy `h(mu)` and Casimir `‖mu‖`.
    pub fn from_momentum(k: usize, time: f64, g: &SO3, mu: &CoAlg<SO3>, inertia: &InertiaOperator<SO3>) -> Self {
        Self::build(k, time, g, mu.to_vec(), inertia.hamiltonian(mu), mu.norm())
    }

    /// Record for a velocity state: energy `l(xi)` and Casimir `‖I xi‖`.
    pub fn from_velocity(
        k: usize,
        time: f64,
        g: &SO3,
        xi: &geomint_core::Alg<SO3>,
        inertia: &InertiaOperator<SO3>,
    ) -> Self {
        Self::build(k, time, g, xi.to_vec(), inertia.lagrangian(xi), inertia.apply(xi).norm())
    }

    fn build(k: usize, time: f64, g: &SO3, m: Vec<f64>, energy: f64, casimir: f64) -> Self {
        let flat = g.flatten();
        TrajectoryRecord {
            k,
            time,
            g: std::array::from_fn(|i| flat[i]),
            m: [m[0], m[1], m[2]],
            energy,
            casimir,
            orth_residual: g.manifold_residual(),
        }
    }

    pub fn csv_row(&self) -> String {
        let mut row = self.k.to_string();
        let values = std::iter::once(self.time)
            .chain(self.g)
            .chain(self.m)
            .chain([self.energy, self.casimir, self.orth_residual]);
        for v in values {
            row.push(',');
            row.push_str(&format!("{v:.16e}"));
        }
        row
    }
}

pub fn write_records<W: Write>(out: &mut W, records: &[TrajectoryRecord], format: OutputFormat) -> std::io::Result<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in records {
                writeln!(out, "{}", r.csv_row())?;
            }
        }
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, records)?;
            writeln!(out)?;
        }
    }
    out.flush()
}
