use std::fs::File;
use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use geomint_cli::{order_study, run_suite, simulate, write_records, CliError, RunConfig, SUITES};

#[derive(Parser)]
#[command(name = "geomint", version, about = "Structure-preserving Lie group integrators for the free rigid body")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one trajectory and write one record per step.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        /// Overrides the `output` field of the config; `-` writes to stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Terminal error against the reference solution for a halving sequence of steps.
    Order {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "1e-2,5e-3,2.5e-3")]
        steps: Vec<f64>,
    },
    /// Run randomized property suites.
    Check {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Simulate { config, output } => {
            let cfg = RunConfig::load(&config)?;
            let records = simulate(&cfg)?;
            match output.or(cfg.output.clone()) {
                Some(path) if path.as_os_str() != "-" => {
                    let mut out = BufWriter::new(File::create(&path)?);
                    write_records(&mut out, &records, cfg.format)?;
                    eprintln!("wrote {} records to {}", records.len(), path.display());
                }
                _ => write_records(&mut io::stdout().lock(), &records, cfg.format)?,
            }
            Ok(())
        }
        Command::Order { config, steps } => {
            let cfg = RunConfig::load(&config)?;
            let report = order_study(&cfg, &steps)?;
            print!("{report}");
            Ok(())
        }
        Command::Check { suite } => {
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else if SUITES.contains(&suite.as_str()) {
                vec![suite.as_str()]
            } else {
                return Err(CliError::UnknownSuite {
                    name: suite,
                    valid: format!("{}, all", SUITES.join(", ")),
                });
            };
            let seed = geomint_cli::suites::seed_from_env().map_err(CliError::Config)?;
            println!("seed {seed}");
            let mut failed = 0;
            for name in names {
                let report = run_suite(name, seed).expect("suite name checked");
                print!("{report}");
                failed += report.failures();
            }
            if failed > 0 {
                return Err(CliError::SuiteFailed { failed });
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
