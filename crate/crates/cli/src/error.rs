use thiserror::Error;

pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;
pub const EXIT_SUITE: i32 = 5;
pub const EXIT_IO: i32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error("step {step}: {source}")]
    Step {
        step: usize,
        #[source]
        source: geomint_core::Error,
    },

    #[error("{0}")]
    Core(#[from] geomint_core::Error),

    #[error("unknown suite {name:?}; valid suites: {valid}")]
    UnknownSuite { name: String, valid: String },

    #[error("{failed} property check(s) failed")]
    SuiteFailed { failed: usize },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

fn core_exit_code(e: &geomint_core::Error) -> i32 {
    use geomint_core::Error as E;
    match e {
        E::OutOfDomain { .. } => EXIT_DOMAIN,
        E::SolverDiverged { .. } | E::Singular(_) | E::StepSizeUnderflow { .. } => EXIT_SOLVER,
        E::InvalidParameter { .. } | E::UnsupportedTheta(_) => EXIT_CONFIG,
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::UnknownSuite { .. } => EXIT_CONFIG,
            CliError::Step { source, .. } => core_exit_code(source),
            CliError::Core(e) => core_exit_code(e),
            CliError::SuiteFailed { .. } => EXIT_SUITE,
            CliError::Io(_) => EXIT_IO,
        }
    }
}
