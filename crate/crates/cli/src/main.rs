//! `coms`: command-line front end for the coms-core library.

mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use coms_core::arrangement::{self, ApartmentOptions, DEFAULT_EPSILON};
use coms_core::format::{self, parse_arrangement, parse_covectors_any};
use coms_core::reconstruction::{self, maximal_elements, verify_reconstruction};
use coms_core::{axioms, minors, poset, ComError, ReconstructOptions, SignSystem, TopeSet};

#[derive(Parser)]
#[command(
    name = "coms",
    version,
    about = "Sign-vector tools for conditional oriented matroids"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Write results to FILE instead of stdout.
    #[arg(short, long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the covector axioms and classify the system.
    Check {
        /// Covector file (text or JSON), `-` for stdin.
        input: PathBuf,
    },
    /// Rebuild all covectors from a tope set.
    Reconstruct {
        /// Tope file (text or JSON), `-` for stdin.
        input: PathBuf,
        /// Use the oriented-matroid rule X∘T instead of X∘-T.
        #[arg(long)]
        om: bool,
        /// Check that the result is a COM with the given topes; exit 1 if not.
        #[arg(long)]
        verify: bool,
        /// Allow tope supports above the default size limit.
        #[arg(long)]
        force: bool,
    },
    /// Print the maximal covectors.
    Topes { input: PathBuf },
    /// Delete and/or contract elements (deletion is applied first).
    Minor {
        input: PathBuf,
        #[arg(long, value_delimiter = ',', value_name = "LABELS")]
        delete: Vec<String>,
        #[arg(long, value_delimiter = ',', value_name = "LABELS")]
        contract: Vec<String>,
    },
    /// Covector poset with ranks and covering pairs.
    Poset {
        input: PathBuf,
        /// Emit the Hasse diagram in Graphviz DOT.
        #[arg(long)]
        dot: bool,
    },
    /// f-polynomial of a covector file or of an arrangement apartment.
    Fpoly {
        #[arg(
            required_unless_present = "arrangement",
            conflicts_with = "arrangement"
        )]
        input: Option<PathBuf>,
        /// Arrangement JSON with sample points.
        #[arg(long, value_name = "JSON")]
        arrangement: Option<PathBuf>,
        #[arg(long, requires = "arrangement")]
        reduce: bool,
        #[arg(long, requires = "arrangement", value_parser = parse_epsilon)]
        epsilon: Option<f64>,
    },
    /// Covectors of the apartment sampled by the points of an arrangement file.
    FromArrangement {
        input: PathBuf,
        /// Drop hyperplanes that miss the apartment.
        #[arg(long)]
        reduce: bool,
        /// Tolerance for floating-point inputs.
        #[arg(long, value_parser = parse_epsilon)]
        epsilon: Option<f64>,
        #[arg(long)]
        force: bool,
    },
}

fn parse_epsilon(text: &str) -> Result<f64, String> {
    let value: f64 = text.parse().map_err(|e| format!("{e}"))?;
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err("epsilon must be a positive number".into())
    }
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<ComError> for Failure {
    fn from(err: ComError) -> Self {
        if err.is_parse_error() {
            Failure::Usage(err.to_string())
        } else {
            Failure::Domain(err.to_string())
        }
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("coms: error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("coms: error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Check { input } => {
            let system = read_system(input)?;
            let report = axioms::check_all(&system);
            let om = report.is_om()?;
            let text = if json {
                render::check_json(&system, &report, om)
            } else {
                render::check_text(&system, &report, om)
            };
            emit(cli, &text)
        }
        Command::Reconstruct {
            input,
            om,
            verify,
            force,
        } => {
            let topes = TopeSet::from_system(read_system(input)?)?;
            let options = ReconstructOptions { force: *force };
            let result = if *om {
                reconstruction::reconstruct_om(&topes, options)?
            } else {
                reconstruction::reconstruct_com(&topes, options)?
            };
            emit_system(cli, &result)?;
            if *verify {
                let v = verify_reconstruction(&topes, &result);
                if !v.ok() {
                    return Err(Failure::Domain(format!(
                        "verification failed: result is a COM: {}, topes match input: {}",
                        yes_no(v.is_com),
                        yes_no(v.topes_match)
                    )));
                }
                eprintln!("coms: verified: result is a COM with the input topes");
            }
            Ok(())
        }
        Command::Topes { input } => {
            let maximal = maximal_elements(&read_system(input)?)?;
            if let Err(err) = TopeSet::from_system(maximal.clone()) {
                eprintln!("coms: warning: {err}");
            }
            emit_system(cli, &maximal)
        }
        Command::Minor {
            input,
            delete,
            contract,
        } => {
            let system = read_system(input)?;
            let deleted = minors::delete(&system, delete)?;
            let result = minors::contract(&deleted, contract)?;
            emit_system(cli, &result)
        }
        Command::Poset { input, dot } => {
            let p = poset::build_poset(&read_system(input)?)?;
            let text = if *dot {
                p.to_dot()
            } else if json {
                render::poset_json(&p)
            } else {
                render::poset_text(&p)
            };
            emit(cli, &text)
        }
        Command::Fpoly {
            input,
            arrangement,
            reduce,
            epsilon,
        } => {
            let system = match (input, arrangement) {
                (Some(path), _) => read_system(path)?,
                (None, Some(path)) => apartment(path, *reduce, *epsilon, false)?,
                (None, None) => unreachable!("clap requires one input"),
            };
            let f = poset::f_polynomial(&system)?;
            let text = if json {
                render::fpoly_json(&f)
            } else {
                format!("{}\n", f.render())
            };
            emit(cli, &text)
        }
        Command::FromArrangement {
            input,
            reduce,
            epsilon,
            force,
        } => {
            let system = apartment(input, *reduce, *epsilon, *force)?;
            emit_system(cli, &system)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn apartment(path: &Path, reduce: bool, epsilon: Option<f64>, force: bool) -> Outcome<SignSystem> {
    let input = parse_arrangement(&read_input(path)?)?;
    let options = ApartmentOptions {
        epsilon: epsilon.unwrap_or(DEFAULT_EPSILON),
        reduce,
        reconstruct: ReconstructOptions { force },
    };
    Ok(arrangement::apartment_to_com(
        &input.arrangement,
        &input.points,
        options,
    )?)
}

fn read_input(path: &Path) -> Outcome<String> {
    let mut text = String::new();
    let result = if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn read_system(path: &Path) -> Outcome<SignSystem> {
    Ok(parse_covectors_any(&read_input(path)?)?)
}

fn emit_system(cli: &Cli, system: &SignSystem) -> Outcome {
    let text = match cli.format {
        Format::Text => format::write_covectors(system),
        Format::Json => format!("{}\n", format::write_covectors_json(system)),
    };
    emit(cli, &text)
}

fn emit(cli: &Cli, text: &str) -> Outcome {
    let result = match &cli.output {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    result.map_err(|e| Failure::Domain(format!("cannot write output: {e}")))
}
