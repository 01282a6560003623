//! Command-line driver: verifies `.ent` instances and runs the separability,
//! Frobenius and Galois pipelines, emitting certificate reports.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use entwine::report::{self, CommandError, Report, EXIT_INPUT};

#[derive(Parser)]
#[command(
    name = "entwine",
    about = "exact checks for entwining structures over small linear categories",
    version
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum Functor {
    F,
    G,
}

#[derive(Subcommand)]
enum Command {
    /// Structurally verify every block of an instance file.
    Verify { file: PathBuf },
    /// Decide separability of the forgetful functor (F) or its adjoint (G).
    Sep {
        #[arg(long, value_enum, ignore_case = true)]
        functor: Functor,
        file: PathBuf,
    },
    /// Decide whether the adjunction is a Frobenius pair.
    Frobenius {
        /// Seed for the invertibility search; falls back to ENTWINE_SEED.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of sampling trials for large solution spaces.
        #[arg(long, default_value_t = 64)]
        trials: u32,
        file: PathBuf,
    },
    /// Run the coalgebra-Galois pipeline on a coactions instance.
    Galois { file: PathBuf },
}

fn read(file: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))
}

fn seed_fallback(cli_seed: Option<u64>) -> u64 {
    cli_seed
        .or_else(|| std::env::var("ENTWINE_SEED").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(0x5eed)
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (file, result): (PathBuf, Result<(Report, i32), CommandError>) = match &cli.command {
        Command::Verify { file } => {
            let text = match read(file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(EXIT_INPUT as u8);
                }
            };
            (file.clone(), report::cmd_verify(&text, &file.display().to_string()))
        }
        Command::Sep { functor, file } => {
            let text = match read(file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(EXIT_INPUT as u8);
                }
            };
            let which = match functor {
                Functor::F => 'F',
                Functor::G => 'G',
            };
            (file.clone(), report::cmd_separability(&text, &file.display().to_string(), which))
        }
        Command::Frobenius { seed, trials, file } => {
            let text = match read(file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(EXIT_INPUT as u8);
                }
            };
            let seed = seed_fallback(*seed);
            (file.clone(), report::cmd_frobenius(&text, &file.display().to_string(), seed, *trials))
        }
        Command::Galois { file } => {
            let text = match read(file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(EXIT_INPUT as u8);
                }
            };
            (file.clone(), report::cmd_galois(&text, &file.display().to_string()))
        }
    };
    match result {
        Ok((report, code)) => {
            emit(&report, cli.format);
            ExitCode::from(code as u8)
        }
        Err(err) => {
            eprint!("{}", err.render(&file.display().to_string()));
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
