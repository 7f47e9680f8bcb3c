use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qgwalk_cli::commands;
use qgwalk_cli::config::env_tolerance;
use qgwalk_cli::{CliError, Result};

/// Random walks on the Kac-Paljutkin and Sekine quantum groups.
#[derive(Parser)]
#[command(name = "qgwalk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Trace QTV distance and bounds; CSV `k,qtv,lower,upper`.
    Run {
        config: PathBuf,
        /// CSV destination; a `.meta.json` sidecar is written next to it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify the limit of the walk as JSON.
    Classify { config: PathBuf },
    /// List the central idempotent states of KP_n as JSON.
    Idempotents {
        #[arg(long)]
        n: usize,
    },
    /// Distances of the cosine walk around k = n^2.
    Cutoff {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        c: Vec<f64>,
        /// Directory for `cutoff.csv`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn execute(cli: Cli) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    let io = |e| CliError::io("<stdout>", e);
    match cli.command {
        Command::Run { config, out } => {
            let config = commands::load_config(&config)?;
            if let Some(output) = commands::run_to(&config, out.as_deref())? {
                stdout.write_all(output.csv.as_bytes()).map_err(io)?;
                eprintln!("{}", serde_json::to_string(&output.meta)?);
            }
        }
        Command::Classify { config } => {
            let config = commands::load_config(&config)?;
            let json = qgwalk_cli::report::classification_json(&commands::classify(&config)?);
            writeln!(stdout, "{}", serde_json::to_string_pretty(&json)?).map_err(io)?;
        }
        Command::Idempotents { n } => {
            let json = commands::idempotents(n, env_tolerance()?)?;
            writeln!(stdout, "{}", serde_json::to_string_pretty(&json)?).map_err(io)?;
        }
        Command::Cutoff { n, c, out } => {
            if let Some(csv) = commands::cutoff_to(&n, &c, out.as_deref())? {
                stdout.write_all(csv.as_bytes()).map_err(io)?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qgwalk: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
