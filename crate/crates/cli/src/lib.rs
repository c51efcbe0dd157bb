//! Argument parsing and command execution for the `brauer-i2n` binary.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors.

use std::io::Write;
use std::path::PathBuf;

use brauer_i2n::diagram::{enumerate_monoid, odd_double_factorial};
use brauer_i2n::embedding::{image_rank, orbit_report, solve_theta, verify_presentation};
use brauer_i2n::particle::{
    classify_relation, closed_form, simulate, trace_svg, trace_text, BoxSpec,
};
use brauer_i2n::presentation::{normal_forms, rank_formula};
use brauer_i2n::render::{render_ascii, render_svg};
use brauer_i2n::BrauerDiagram;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `t` accepted by `atype-rank`; the monoid at `t = 7` has 2 027 025 elements.
pub const MAX_ATYPE_T: usize = 7;

#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(
    name = "brauer-i2n",
    version,
    about = "Brauer algebras of type I2(n) inside type A Brauer diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Solve the δ-exponents, check every relation, rank and injectivity
    Verify {
        #[arg(long, value_parser = n_parser())]
        n: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Rank of the image of φ against the rank formula
    Rank {
        #[arg(long, value_parser = n_parser())]
        n: usize,
    },
    /// Values of the δ-exponent parameters
    Theta {
        #[arg(long, value_parser = n_parser())]
        n: usize,
    },
    /// Orbit sizes of the seed admissible sets
    Orbits {
        #[arg(long, value_parser = n_parser())]
        n: usize,
    },
    /// The normal-form monomials
    NormalForms {
        #[arg(long, value_parser = n_parser())]
        n: usize,
    },
    /// Run the particle in the 2m × 2k box
    Particle {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// Print the visited points instead of the summary
        #[arg(long)]
        trace: bool,
        /// Also write the folded and unfolded paths as SVG
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Draw a diagram read from a JSON file
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = PictureFormat::Ascii)]
        format: PictureFormat,
    },
    /// Size of the Brauer monoid of type A_t
    AtypeRank {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_ATYPE_T as u64))]
        t: u64,
    },
}

fn n_parser() -> clap::builder::RangedU64ValueParser<usize> {
    clap::builder::RangedU64ValueParser::new().range(5..=64)
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PictureFormat {
    Ascii,
    Svg,
}

/// Parses `argv` without the program name.
pub fn parse_args<I, S>(argv: I) -> Result<Command, clap::Error>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("brauer-i2n"))
        .chain(argv.into_iter().map(Into::into));
    Cli::try_parse_from(args).map(|cli| cli.command)
}

#[derive(Serialize)]
struct RankOutput {
    n: usize,
    image_rank: usize,
    formula_rank: usize,
}

#[derive(Serialize)]
struct ThetaOutput<'a> {
    n: usize,
    theta: &'a brauer_i2n::presentation::ThetaParameters,
}

#[derive(Serialize)]
struct NormalForm {
    family: String,
    word: String,
}

#[derive(Serialize)]
struct NormalFormsOutput {
    n: usize,
    count: usize,
    formula: usize,
    forms: Vec<NormalForm>,
}

#[derive(Serialize)]
struct ParticleOutput {
    stop: (usize, usize),
    m: usize,
    k: usize,
    lcm: usize,
    steps: usize,
    closed_form: (usize, usize),
    relation: &'static str,
}

#[derive(Serialize)]
struct AtypeOutput {
    t: usize,
    count: usize,
    expected: u128,
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serialization is infallible")
}

/// Runs `cmd`, writing results to `out` and diagnostics to `err`.
pub fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run(cmd, out) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn failed(message: impl ToString) -> Self {
        Failure {
            code: EXIT_FAILED,
            message: message.to_string(),
        }
    }
}

fn library(e: brauer_i2n::Error) -> Failure {
    match e {
        brauer_i2n::Error::RelationFailure { .. }
        | brauer_i2n::Error::ThetaInconsistency { .. } => Failure::failed(e),
        _ => Failure::usage(e),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .and_then(|_| {
            if text.ends_with('\n') {
                Ok(())
            } else {
                out.write_all(b"\n")
            }
        })
        .map_err(|e| Failure::failed(format!("cannot write output: {e}")))
}

fn run(cmd: &Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Verify { n, format } => {
            let report = verify_presentation(*n).map_err(library)?;
            let text = match format {
                ReportFormat::Json => report.to_json(),
                ReportFormat::Text => report.to_text(),
            };
            emit(out, &text)?;
            if report.passed() {
                Ok(EXIT_OK)
            } else {
                Err(Failure::failed(format!("verification failed for n = {n}")))
            }
        }
        Command::Rank { n } => {
            let rank = image_rank(*n).map_err(library)?;
            let formula = rank_formula(*n);
            emit(
                out,
                &json(&RankOutput {
                    n: *n,
                    image_rank: rank,
                    formula_rank: formula,
                }),
            )?;
            if rank == formula {
                Ok(EXIT_OK)
            } else {
                Err(Failure::failed(format!(
                    "image rank {rank} differs from {formula}"
                )))
            }
        }
        Command::Theta { n } => {
            let theta = solve_theta(*n).map_err(library)?;
            emit(
                out,
                &json(&ThetaOutput {
                    n: *n,
                    theta: &theta,
                }),
            )?;
            Ok(EXIT_OK)
        }
        Command::Orbits { n } => {
            let report = orbit_report(*n).map_err(library)?;
            emit(out, &json(&report))?;
            Ok(EXIT_OK)
        }
        Command::NormalForms { n } => {
            let forms: Vec<NormalForm> = normal_forms(*n)
                .map_err(library)?
                .iter()
                .map(|m| NormalForm {
                    family: m.family.name(),
                    word: m.to_string(),
                })
                .collect();
            let output = NormalFormsOutput {
                n: *n,
                count: forms.len(),
                formula: rank_formula(*n),
                forms,
            };
            emit(out, &json(&output))?;
            Ok(EXIT_OK)
        }
        Command::Particle { m, k, trace, svg } => {
            let spec = BoxSpec::new(*m, *k).map_err(library)?;
            let sim = simulate(&spec);
            if let Some(path) = svg {
                std::fs::write(path, trace_svg(&spec, &sim))
                    .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
            }
            let expected = closed_form(&spec);
            if *trace {
                emit(out, &trace_text(&sim.trace))?;
            } else {
                emit(
                    out,
                    &json(&ParticleOutput {
                        stop: sim.stop.coords(&spec),
                        m: *m,
                        k: *k,
                        lcm: spec.lcm(),
                        steps: sim.steps(),
                        closed_form: expected.coords(&spec),
                        relation: classify_relation(&spec).tag(),
                    }),
                )?;
            }
            if sim.stop == expected {
                Ok(EXIT_OK)
            } else {
                Err(Failure::failed(
                    "simulated stop differs from the closed form",
                ))
            }
        }
        Command::Render { input, format } => {
            let text = std::fs::read_to_string(input)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", input.display())))?;
            let d = BrauerDiagram::from_json(&text).map_err(library)?;
            let picture = match format {
                PictureFormat::Ascii => render_ascii(&d).map_err(library)?,
                PictureFormat::Svg => render_svg(&d),
            };
            emit(out, &picture)?;
            Ok(EXIT_OK)
        }
        Command::AtypeRank { t } => {
            let t = *t as usize;
            let count = enumerate_monoid(t).map_err(library)?.len();
            let expected = odd_double_factorial(t + 1);
            emit(out, &json(&AtypeOutput { t, count, expected }))?;
            if count as u128 == expected {
                Ok(EXIT_OK)
            } else {
                Err(Failure::failed(format!(
                    "monoid has {count} elements, expected {expected}"
                )))
            }
        }
    }
}
