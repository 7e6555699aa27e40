//! Command-line interface: construct certified (period, index) instances,
//! analyze user-supplied (group, cocycle) files, verify inputs, and generate
//! random test cocycles.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input or admissibility
//! error, 3 resource cap exceeded, 4 internal cross-check failure.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use perindex::{certify, io as pio, parse_instance, Error};

#[derive(Parser)]
#[command(name = "perindex", version, about = "Period and index invariants of 2-cocycle classes on finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Construct and certify an instance with the given period and index.
    Example {
        /// Target period m (must divide the index, same prime divisors).
        #[arg(long)]
        period: u64,
        /// Target index n.
        #[arg(long)]
        index: u64,
        /// Seed for the numerical decomposition.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze a (group, cocycle) instance file.
    Analyze {
        path: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that an instance file contains a valid group and cocycle.
    Verify { path: PathBuf },
    /// Generate a seeded random bilinear cocycle instance file.
    Random {
        /// Invariant factors of the abelian group, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        factors: Vec<u64>,
        /// Value modulus N.
        #[arg(long)]
        modulus: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

fn error_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_)
        | Error::Verification(_)
        | Error::Inadmissible(_)
        | Error::Unsupported(_) => EXIT_INPUT,
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        Error::IllConditioned(_) | Error::InternalConsistency(_) => EXIT_INTERNAL,
    }
}

fn emit(content: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes())
        }
    }
}

fn run() -> u8 {
    let cli = Cli::parse();
    match cli.command {
        Command::Example {
            period,
            index,
            seed,
            format,
            out,
        } => {
            let cert = match certify(period, index, seed) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {e}");
                    return error_code(&e);
                }
            };
            let report = pio::certificate_report(&cert);
            let content = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            if let Err(e) = emit(&content, out.as_ref()) {
                eprintln!("error: cannot write report: {e}");
                return EXIT_INPUT;
            }
            if cert.is_valid() {
                EXIT_OK
            } else {
                eprintln!("error: certificate checks failed");
                EXIT_INTERNAL
            }
        }
        Command::Analyze {
            path,
            seed,
            format,
            out,
        } => {
            let text = match std::fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", path.display());
                    return EXIT_INPUT;
                }
            };
            let parsed = match parse_instance(&text) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: {e}");
                    return error_code(&e);
                }
            };
            let report = match pio::analyze(&parsed, seed) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return error_code(&e);
                }
            };
            let content = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            if let Err(e) = emit(&content, out.as_ref()) {
                eprintln!("error: cannot write report: {e}");
                return EXIT_INPUT;
            }
            if report.all_checks_pass() {
                EXIT_OK
            } else {
                eprintln!("error: internal cross-checks failed");
                EXIT_INTERNAL
            }
        }
        Command::Verify { path } => {
            let text = match std::fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", path.display());
                    return EXIT_INPUT;
                }
            };
            match parse_instance(&text) {
                Ok(_) => {
                    println!("ok: group table and cocycle are valid");
                    EXIT_OK
                }
                Err(Error::Verification(msg)) => {
                    eprintln!("invalid: {msg}");
                    EXIT_VERIFY_FAILED
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    error_code(&e)
                }
            }
        }
        Command::Random {
            factors,
            modulus,
            seed,
            out,
        } => {
            let file = match pio::random_instance_file(&factors, modulus, seed) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return error_code(&e);
                }
            };
            let content = pio::instance_file_to_json(&file);
            if let Err(e) = emit(&content, out.as_ref()) {
                eprintln!("error: cannot write instance: {e}");
                return EXIT_INPUT;
            }
            EXIT_OK
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run())
}
