use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

/// Writes Φ_N in the sparse "[i,j] c" format.
#[derive(Parser)]
#[command(name = "isogate-modgen", version)]
struct Args {
    /// Level N: a prime or the square of a prime.
    #[arg(long)]
    level: u64,
    /// Output file.
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let phi = match isogate_modgen::modular_polynomial(args.level) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let text = format!("# classical modular polynomial of level {}\n{}", args.level, phi.to_text());
    if let Err(e) = std::fs::write(&args.out, text) {
        eprintln!("error: {}: {e}", args.out.display());
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
