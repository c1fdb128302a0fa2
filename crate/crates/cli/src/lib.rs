//! Command-line front end for `intcircle`.
//!
//! Exit codes: 0 success, 2 unreadable or malformed input, 3 domain error,
//! 4 no circle of the requested radius, 5 output path not writable.

pub mod pointfile;
pub mod report;
pub mod svg;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use intcircle::construct::{center_for_radius, unit_center_crt, unit_center_search, DEFAULT_SEARCH_BOUND};
use intcircle::polygons::farey_starburst;
use intcircle::tori::covering_primes;
use intcircle::{int_distance, ConstructError, PointSet, SpectrumError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use report::SpectrumReport;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cannot read {path}: {message}")]
    Input { path: String, message: String },
    #[error("malformed report: {0}")]
    Json(String),
    #[error("{0}")]
    Domain(String),
    #[error("no circle of radius {radius}: {certificate}")]
    NoCircle { radius: BigInt, certificate: String },
    #[error("cannot write {path}: {message}")]
    Unwritable { path: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Input { .. } | CliError::Json(_) => 2,
            CliError::Domain(_) => 3,
            CliError::NoCircle { .. } => 4,
            CliError::Unwritable { .. } => 5,
        }
    }
}

impl From<SpectrumError> for CliError {
    fn from(e: SpectrumError) -> Self {
        CliError::Domain(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "intcircle", version, about = "Integer circumscribed circles of lattice point sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integer and rational spectra of radii.
    Spectrum {
        input: PathBuf,
        /// Print a certificate for every divisor of g.
        #[arg(long)]
        certify: bool,
        #[arg(long)]
        json: bool,
    },
    /// A circumscribed circle of the given radius, or a refutation.
    Circle {
        input: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        radius: BigInt,
    },
    /// Lattice points of the unit circle about the origin, by argument.
    Starburst {
        #[arg(long)]
        bound: u64,
        /// Write an SVG figure instead of the point list.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Share of primitive lattice points in [-N, N]² against 6/π².
    Density {
        #[arg(long)]
        n: u64,
    },
    /// Covering tori, transparency, and a unit center when one exists.
    Check { input: PathBuf },
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version come back as errors that belong on stdout
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            if let CliError::NoCircle { radius, certificate } = &e {
                let _ = writeln!(out, "radius = {radius}\nrefutation: {certificate}");
            }
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    let text = match command {
        Command::Spectrum { input, certify, json } => cmd_spectrum(input, *certify, *json)?,
        Command::Circle { input, radius } => cmd_circle(input, radius)?,
        Command::Starburst { bound, svg } => cmd_starburst(*bound, svg.as_deref())?,
        Command::Density { n } => density_report(*n)?.render(),
        Command::Check { input } => cmd_check(input)?,
    };
    out.write_all(text.as_bytes()).map_err(|e| CliError::Unwritable { path: "stdout".into(), message: e.to_string() })
}

fn require_points(s: &PointSet, at_least: usize) -> Result<(), CliError> {
    if s.len() < at_least {
        return Err(CliError::Domain(format!("need at least {at_least} point(s), found {}", s.len())));
    }
    Ok(())
}

pub fn cmd_spectrum(input: &Path, certify: bool, json: bool) -> Result<String, CliError> {
    let s = pointfile::read(input)?;
    require_points(&s, 2)?;
    let report = SpectrumReport::build(&s, certify)?;
    Ok(if json { report.to_json() + "\n" } else { report.render_text() })
}

fn audit_line(s: &PointSet, center: &intcircle::LatticePoint, radius: &BigInt) -> (bool, String) {
    let distances: Vec<BigInt> = s.iter().map(|p| int_distance(center, p)).collect();
    let ok = distances.iter().all(|d| d == radius);
    let listed: Vec<String> = distances.iter().map(|d| d.to_string()).collect();
    (ok, format!("audit: id(center, p) = [{}] {}", listed.join(", "), if ok { "OK" } else { "FAILED" }))
}

pub fn cmd_circle(input: &Path, radius: &BigInt) -> Result<String, CliError> {
    let s = pointfile::read(input)?;
    require_points(&s, 1)?;
    if !radius.is_positive() {
        return Err(CliError::Domain(format!("radius must be positive, got {radius}")));
    }
    match center_for_radius(&s, radius) {
        Ok(circle) => {
            let (ok, audit) = audit_line(&s, circle.center(), radius);
            assert!(ok, "constructed center failed its audit");
            Ok(format!("center = {}\nradius = {radius}\n{audit}\n", circle.center()))
        }
        Err(ConstructError::Refuted { radius, certificate }) => {
            Err(CliError::NoCircle { radius, certificate: certificate.to_string() })
        }
        Err(e) => Err(CliError::Domain(e.to_string())),
    }
}

pub fn cmd_starburst(bound: u64, svg: Option<&Path>) -> Result<String, CliError> {
    let points = farey_starburst(bound).map_err(|e| CliError::Domain(e.to_string()))?;
    match svg {
        None => Ok(points.iter().map(|p| format!("{} {}\n", p.x, p.y)).collect()),
        Some(path) => {
            std::fs::write(path, svg::starburst_svg(&points, bound))
                .map_err(|e| CliError::Unwritable { path: path.display().to_string(), message: e.to_string() })?;
            Ok(format!("wrote {} points to {}\n", points.len(), path.display()))
        }
    }
}

/// Exact count behind the density display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub n: u64,
    pub primitive: u64,
    pub total: u64,
}

impl DensityReport {
    /// The ratio in lowest terms.
    pub fn reduced(&self) -> (u64, u64) {
        let g = self.primitive.gcd(&self.total);
        (self.primitive / g, self.total / g)
    }

    pub fn ratio(&self) -> f64 {
        self.primitive as f64 / self.total as f64
    }

    pub fn render(&self) -> String {
        let (p, q) = self.reduced();
        let reference = 6.0 / std::f64::consts::PI.powi(2);
        format!(
            "N          = {}\nprimitive  = {}\ntotal      = {}\nratio      = {p}/{q}\nratio      ~ {:.6}\n6/pi^2     ~ {reference:.6}\ndifference ~ {:.6}\n",
            self.n,
            self.primitive,
            self.total,
            self.ratio(),
            (self.ratio() - reference).abs()
        )
    }
}

/// Counts `(x, y) ≠ 0` in `[-N, N]²` with `gcd(|x|, |y|) = 1`, splitting
/// the rows of the positive quadrant across threads.
pub fn density_report(n: u64) -> Result<DensityReport, CliError> {
    if n < 10 {
        return Err(CliError::Domain(format!("N must be at least 10, got {n}")));
    }
    let workers = std::thread::available_parallelism().map_or(1, |w| w.get()).min(n as usize) as u64;
    let quadrant: u64 = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    (1..=n)
                        .filter(|x| x % workers == w)
                        .map(|x| (1..=n).filter(|y| x.gcd(y) == 1).count() as u64)
                        .sum::<u64>()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).sum()
    });
    // four open quadrants plus (±1, 0) and (0, ±1)
    let primitive = 4 * quadrant + 4;
    let side = 2 * n + 1;
    Ok(DensityReport { n, primitive, total: side * side - 1 })
}

pub fn cmd_check(input: &Path) -> Result<String, CliError> {
    let s = pointfile::read(input)?;
    require_points(&s, 1)?;
    let primes = covering_primes(&s);
    let listed: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
    let mut out = format!(
        "points          = {}\ncovering primes = [{}]\ntransparent     = {}\n",
        s.len(),
        listed.join(", "),
        if primes.is_empty() { "yes" } else { "no" }
    );
    if !primes.is_empty() {
        return Ok(out);
    }
    let one = BigInt::from(1);
    if let Some(center) = unit_center_search(&s, DEFAULT_SEARCH_BOUND) {
        let (ok, audit) = audit_line(&s, &center, &one);
        assert!(ok, "search returned a bad center");
        out.push_str(&format!("unit center     = {center} (ring search)\n{audit}\n"));
        return Ok(out);
    }
    let (center, trace) = unit_center_crt(&s).map_err(|e| CliError::Domain(e.to_string()))?;
    let (ok, audit) = audit_line(&s, &center, &one);
    assert!(ok, "construction returned a bad center");
    out.push_str(&format!("unit center     = {center} (crt construction)\n{trace}\n{audit}\n"));
    Ok(out)
}
