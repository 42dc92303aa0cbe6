use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dec_cli::commands::{cmd_d, cmd_info, cmd_pullback, cmd_wedge, ProductMethod};
use dec_cli::documents::ComplexDocument;
use dec_cli::verify::{self, VerifyOptions};
use dec_cli::CliError;

/// Exact discrete exterior calculus on simplicial complexes.
#[derive(Debug, Parser)]
#[command(name = "dec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Discrete exterior derivative of a cochain.
    D {
        #[arg(short = 'c', long)]
        complex: PathBuf,
        #[arg(short = 'x', long)]
        cochain: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Wedge product of two cochains.
    Wedge {
        #[arg(short = 'c', long)]
        complex: PathBuf,
        /// Left then right factor.
        #[arg(short = 'x', long, num_args = 1, required = true)]
        cochain: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        method: ProductMethod,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Pull a cochain on the target complex back along a simplicial map.
    Pullback {
        /// Source complex.
        #[arg(short = 'c', long)]
        complex: PathBuf,
        #[arg(short = 't', long)]
        target_complex: PathBuf,
        #[arg(short = 'm', long)]
        map: PathBuf,
        #[arg(short = 'x', long)]
        cochain: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check every identity on random rational cochains.
    Verify {
        #[arg(short = 'c', long)]
        complex: PathBuf,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, hide = true)]
        corrupt_wedge: bool,
    },
    /// Simplex counts and Euler characteristic.
    Info {
        #[arg(short = 'c', long)]
        complex: PathBuf,
    },
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::parse(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn use_color() -> bool {
    std::env::var("DEC_COLOR").map_or(true, |v| v != "0") && std::io::stdout().is_terminal()
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::D { complex, cochain, output } => emit(&cmd_d(&complex, &cochain)?, output.as_deref())?,
        Command::Wedge { complex, cochain, method, output } => {
            let [left, right] = cochain.as_slice() else {
                return Err(CliError::Parse {
                    source_name: "arguments".into(),
                    message: format!("wedge takes exactly two cochains (-x A -x B), got {}", cochain.len()),
                });
            };
            let (text, warning) = cmd_wedge(&complex, left, right, method)?;
            if let Some(w) = warning {
                eprintln!("{w}");
            }
            emit(&text, output.as_deref())?;
        }
        Command::Pullback { complex, target_complex, map, cochain, output } => {
            emit(&cmd_pullback(&complex, &target_complex, &map, &cochain)?, output.as_deref())?
        }
        Command::Verify { complex, trials, seed, max_degree, corrupt_wedge } => {
            let x = ComplexDocument::load(&complex)?;
            let report = verify::run(&x, &VerifyOptions { trials, seed, max_degree, corrupt_wedge });
            print!("{}", report.render(use_color()));
            if !report.passed() {
                return Ok(ExitCode::from(3));
            }
        }
        Command::Info { complex } => print!("{}", cmd_info(&complex)?),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
