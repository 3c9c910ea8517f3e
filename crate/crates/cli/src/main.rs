//! `isogate`: runs the verification checks and exposes the individual
//! computations behind them.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use isogate_core::exact::rational::parse_rational;
use isogate_core::gl2::{standard_group, MatrixGroup, StandardName};
use isogate_core::jmatch::{builtin_family, match_constant};
use isogate_core::lift::{analyze_lift, lift_subgroups};
use isogate_core::modpoly::{isogeny_degree_witness, load_modpoly};
use isogate_core::pipeline::config::{load_config, Config};
use isogate_core::pipeline::{emit_report, run_checks, Format, RunOptions};
use isogate_core::x091::{self, HypCurve, QuadricModel};
use isogate_core::{Error, Result};

#[derive(Parser)]
#[command(name = "isogate", version, about = "Re-executes the computational checks of the cyclic isogeny classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the registered checks and emit a report.
    Run {
        /// Only run checks whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        /// JSON configuration with data files and group generators.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include per-check wall time (makes the report non-reproducible).
        #[arg(long)]
        timings: bool,
        /// Worker threads (default: all cores).
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Match a j-family against a constant j-value.
    Jmatch {
        #[arg(long)]
        family: String,
        /// Rational "num/den" or integer.
        #[arg(long, allow_hyphen_values = true)]
        constant: String,
    },
    /// Enumerate and classify lifts to level p².
    Lifts {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(["3", "5", "7"]))]
        prime: String,
        /// `ns` for the split Cartan normalizer, or `config:NAME`.
        #[arg(long, default_value = "ns")]
        target: String,
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Factor degrees of Φ_N(X, j) from a coefficient file.
    Modpoly {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        j: String,
        /// Skip the full factorization; report pattern bounds only.
        #[arg(long)]
        no_factor: bool,
    },
    /// The X₀(91) model and its genus-2 quotient.
    X091 {
        #[command(subcommand)]
        what: X091Command,
    },
}

#[derive(Subcommand)]
enum X091Command {
    /// The ten quadrics and their signs under w91.
    Model,
    /// The cusps and the CM points P, P^σ, with their w91 images.
    Points,
    /// Zeta data of the quotient curve at a good prime.
    Quotient {
        #[arg(long)]
        prime: u64,
    },
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn config_or_default(path: Option<&PathBuf>) -> Result<Config> {
    match path {
        Some(p) => load_config(p),
        None => Ok(Config::default()),
    }
}

fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Run { filter, config, format, out, timings, workers } => {
            let config = config_or_default(config.as_ref())?;
            let report = run_checks(&config, &RunOptions { filter, workers, timings })?;
            let text = emit_report(&report, format);
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| Error::Config { path: path.display().to_string(), msg: e.to_string() })?
                }
                None => print!("{text}"),
            }
            Ok(if report.has_failures() { ExitCode::FAILURE } else { ExitCode::SUCCESS })
        }
        Command::Jmatch { family, constant } => {
            let fam = builtin_family(&family)?;
            let c = parse_rational(&constant)?;
            let m = match_constant(&fam, &c);
            print_json(&json!({
                "family": m.family,
                "constant": m.constant.to_string(),
                "elimination": m.elimination.to_string(),
                "elimination_degree": m.elimination.deg(),
                "rational_roots": m.rational_roots.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "quadratic_fields": m.quadratic_fields.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "verdict": m.verdict,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Lifts { prime, target, config } => {
            let p: u32 = prime.parse().expect("validated by clap");
            let g: MatrixGroup = match target.as_str() {
                "ns" => standard_group(StandardName::SplitCartanNormalizer, p)?,
                t => {
                    let Some(name) = t.strip_prefix("config:") else {
                        return Err(Error::Config { path: "--target".into(), msg: format!("expected ns or config:NAME, got {t}") });
                    };
                    let cfg = config_or_default(config.as_ref())?;
                    let g = cfg
                        .group(name)
                        .ok_or_else(|| Error::Config { path: format!("groups.{name}"), msg: "not present in the configuration".into() })?;
                    if g.modulus() != p {
                        return Err(Error::ModulusMismatch { expected: p, found: g.modulus() });
                    }
                    g.clone()
                }
            };
            let e = lift_subgroups(&g, p)?;
            let classes = e.classes.iter().map(|c| analyze_lift(c, p)).collect::<Result<Vec<_>>>()?;
            print_json(&json!({
                "prime": p,
                "target_order": e.target_order,
                "stable_subspaces": e.stable_subspaces,
                "candidates": e.candidates,
                "classes": classes,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Modpoly { level, file, j, no_factor } => {
            let phi = load_modpoly(level, &file)?;
            let j = parse_rational(&j)?;
            let w = isogeny_degree_witness(&phi, &j, !no_factor)?;
            print_json(&serde_json::to_value(&w)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::X091 { what } => {
            match what {
                X091Command::Model => {
                    let m = QuadricModel::x0_91();
                    print_json(&json!({
                        "quadrics": m.quadrics.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "w91_signs": x091::involution_consistency(&m)?,
                    }));
                }
                X091Command::Points => {
                    let m = QuadricModel::x0_91();
                    let p = x091::model::cm_point();
                    let mut pts: Vec<(String, _)> =
                        x091::model::cusps().into_iter().enumerate().map(|(i, c)| (format!("cusp{}", i + 1), c)).collect();
                    pts.push(("P".into(), p.clone()));
                    pts.push(("P_sigma".into(), p.conj()));
                    let rows: Vec<Value> = pts
                        .iter()
                        .map(|(name, q)| {
                            let r = x091::verify_model_point(&m, q);
                            json!({ "name": name, "point": r.point, "on_curve": r.on_curve, "w91_image": x091::atkin_lehner(q).to_string() })
                        })
                        .collect();
                    print_json(&Value::Array(rows));
                }
                X091Command::Quotient { prime } => {
                    let z = x091::jacobian_order(&HypCurve::x0_91_plus(), prime)?;
                    print_json(&serde_json::to_value(&z)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
