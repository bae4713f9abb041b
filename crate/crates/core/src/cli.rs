//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failed, 2 no root in `(0, 1)`,
//! 64 usage error, 74 I/O error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classes::ClassId;
use crate::error::Error;
use crate::format::round_json;
use crate::plot::{render_svg, PlotRequest};
use crate::poly::DEFAULT_TOL;
use crate::radius::{radius_table, solve_radius, RadiusQuery};
use crate::regions::TargetRegion;
use crate::report;
use crate::sampler::{verify_radius, DEFAULT_GRID, DEFAULT_MARGIN, DEFAULT_SAMPLES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_NO_ROOT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Parser)]
#[command(
    name = "starrad",
    version,
    about = "Sharp radii of starlikeness for three close-to-star classes"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a single radius
    Radius {
        #[command(flatten)]
        query: QueryArgs,
        /// Bisection width
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Print every radius of the three classes
    Table {
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Monte-Carlo check of a radius; JSON report on stdout
    Verify {
        #[command(flatten)]
        query: QueryArgs,
        /// Number of class members (the first is the extremal function)
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Points on the test circle
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        /// Relative distance from the radius, inward for membership and
        /// outward for falsification
        #[arg(long, default_value_t = DEFAULT_MARGIN, allow_negative_numbers = true)]
        margin: f64,
        #[arg(long, env = "STARRAD_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Draw a region boundary, an image disk and the extremal image as SVG
    Plot {
        #[arg(long, value_parser = parse_class)]
        class: Option<ClassId>,
        #[arg(long, value_parser = parse_region_token)]
        region: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        /// Radius of the disk |z| <= r to map
        #[arg(long, allow_negative_numbers = true)]
        r: Option<f64>,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Boundary polyline of the sine, cardioid or rational region as CSV (t, re, im)
    Boundary {
        #[arg(long, value_parser = parse_region_token)]
        region: String,
        #[arg(long, default_value_t = 1024)]
        points: usize,
    },
}

#[derive(Debug, Args)]
struct QueryArgs {
    #[arg(long, value_parser = parse_class)]
    class: ClassId,
    /// halfplane, lemniscate, parabola, exponential, sine, lune, rational or cardioid
    #[arg(long, value_parser = parse_region_token)]
    region: String,
    /// Order of starlikeness, only with --region halfplane
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Svg,
    Table,
}

const REGION_TOKENS: [&str; 8] = [
    "halfplane",
    "lemniscate",
    "parabola",
    "exponential",
    "sine",
    "lune",
    "rational",
    "cardioid",
];

fn parse_class(s: &str) -> Result<ClassId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_region_token(s: &str) -> Result<String, String> {
    if REGION_TOKENS.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("expected one of {}", REGION_TOKENS.join(", ")))
    }
}

/// Combines a region token and an optional order into a region.
fn build_region(token: &str, alpha: Option<f64>) -> Result<TargetRegion, String> {
    match (token, alpha) {
        ("halfplane", Some(a)) if (0.0..1.0).contains(&a) => Ok(TargetRegion::HalfPlane(a)),
        ("halfplane", Some(a)) => Err(format!("--alpha {a} must lie in [0, 1)")),
        ("halfplane", None) => Err("--region halfplane requires --alpha".into()),
        (_, Some(_)) => Err(format!(
            "--alpha is only valid with --region halfplane, not {token}"
        )),
        (t, None) => t.parse().map_err(|e: Error| e.to_string()),
    }
}

enum Failure {
    Usage(String),
    NoRoot(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoRootInInterval { .. } => Failure::NoRoot(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Io(e.to_string())
}

fn check_tol(tol: f64) -> Result<(), Failure> {
    if tol > 0.0 && tol < 1.0 {
        Ok(())
    } else {
        Err(Failure::Usage(format!("--tol {tol} must lie in (0, 1)")))
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::NoRoot(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_NO_ROOT
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_IO
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Radius { query, tol, format } => {
            check_tol(tol)?;
            let region = build_region(&query.region, query.alpha).map_err(Failure::Usage)?;
            let result = solve_radius(&RadiusQuery::new(query.class, region), tol)?;
            let text = match format {
                OutputFormat::Json => report::single_to_json(&result),
                OutputFormat::Csv => report::to_csv(std::slice::from_ref(&result)),
                OutputFormat::Table => report::to_table(std::slice::from_ref(&result)),
                OutputFormat::Svg => {
                    return Err(Failure::Usage(
                        "svg output is only available from plot".into(),
                    ))
                }
            };
            out.write_all(text.as_bytes()).map_err(io_failure)?;
            if let Some(w) = result.warning {
                writeln!(err, "warning: {w}").map_err(io_failure)?;
            }
            Ok(EXIT_OK)
        }
        Command::Table { format, tol } => {
            check_tol(tol)?;
            let results = radius_table(tol);
            let text = match format {
                OutputFormat::Json => report::to_json(&results),
                OutputFormat::Csv => report::to_csv(&results),
                OutputFormat::Table => report::to_table(&results),
                OutputFormat::Svg => {
                    return Err(Failure::Usage(
                        "svg output is only available from plot".into(),
                    ))
                }
            };
            out.write_all(text.as_bytes()).map_err(io_failure)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            query,
            samples,
            grid,
            margin,
            seed,
            tol,
        } => {
            check_tol(tol)?;
            let region = build_region(&query.region, query.alpha).map_err(Failure::Usage)?;
            if !(margin > 0.0 && margin < 1.0) {
                return Err(Failure::Usage(format!(
                    "--margin {margin} must lie in (0, 1)"
                )));
            }
            let solved = solve_radius(&RadiusQuery::new(query.class, region), tol)?;
            if let Some(w) = solved.warning {
                writeln!(err, "warning: {w}").map_err(io_failure)?;
            }
            let rep = verify_radius(
                query.class,
                region,
                solved.radius,
                samples,
                grid,
                margin,
                seed,
            )?;
            let value = round_json(serde_json::to_value(&rep).expect("report serializes"));
            let text = serde_json::to_string_pretty(&value).expect("json") + "\n";
            out.write_all(text.as_bytes()).map_err(io_failure)?;
            Ok(if rep.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            })
        }
        Command::Plot {
            class,
            region,
            alpha,
            r,
            out: path,
        } => {
            let region = region
                .map(|t| build_region(&t, alpha))
                .transpose()
                .map_err(Failure::Usage)?;
            if region.is_none() && alpha.is_some() {
                return Err(Failure::Usage("--alpha needs --region halfplane".into()));
            }
            if r.is_some() != class.is_some() {
                return Err(Failure::Usage("--class and --r go together".into()));
            }
            let svg = render_svg(&PlotRequest { class, region, r })?;
            std::fs::write(&path, svg)
                .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            Ok(EXIT_OK)
        }
        Command::Boundary { region, points } => {
            let region = build_region(&region, None).map_err(Failure::Usage)?;
            let poly = region.boundary_polyline(points)?;
            let csv = poly.to_csv().map_err(|e| Failure::Io(e.to_string()))?;
            out.write_all(csv.as_bytes()).map_err(io_failure)?;
            Ok(EXIT_OK)
        }
    }
}
