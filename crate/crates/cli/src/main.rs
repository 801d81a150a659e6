use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use eit_bragg_cli::app::{self, Options};
use eit_bragg_cli::Command;

/// Reflection spectra, Bloch dispersion and band gaps of EIT media.
///
/// All parameters come from the config file; there are no environment
/// variable overrides. Exit status: 0 success, 1 invalid config or
/// parameters, 2 oracle mismatch (validate), 3 I/O failure.
#[derive(Parser)]
#[command(name = "eit-bragg", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// TOML run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Directory that relative output paths are resolved against.
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Override the number of sweep points.
    #[arg(long)]
    points: Option<usize>,
    /// Reflectivity threshold for numeric gap detection.
    #[arg(long)]
    threshold: Option<f64>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = Args::parse();
    let opts = Options {
        config: args.config,
        out_dir: args.out_dir,
        points: args.points,
        threshold: args.threshold,
    };
    match app::execute(args.command, &opts) {
        Ok(outcome) => {
            for line in &outcome.summary {
                println!("{line}");
            }
            for path in &outcome.written {
                println!("wrote {}", path.display());
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
