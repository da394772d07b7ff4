//! Library side of the `geomint` command: configuration, trajectory runs,
//! the convergence-order study and the property suites.

pub mod config;
pub mod error;
pub mod record;
pub mod run;
pub mod suites;

pub use config::{IntegratorChoice, OutputFormat, RunConfig};
pub use error::CliError;
pub use record::{write_records, TrajectoryRecord, CSV_HEADER};
pub use run::{order_study, simulate, OrderReport};
pub use suites::{run_suite, SuiteReport, SUITES};
