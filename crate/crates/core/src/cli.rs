//! Command-line front end. The binary is a one-line wrapper around [`run`].
//!
//! Exit codes for `detect` and `ppt`: 0 entangled (certified), 1
//! inconclusive, 2 separable. Anything above 2 is an error: 3 for bad
//! arguments, 4 for failures while running a command.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::ggm::GellMannBasis;
use crate::io::{read_density_file, write_basis, write_density, write_scan_csv};
use crate::linalg::BipartiteShape;
use crate::search::{
    self, evaluate_identity, linspace, DetectionReport, SearchConfig, StateFamily,
};
use crate::states::{self, DensityMatrix};
use crate::witness::{ppt_check, LevelPair, Verdict, DEFAULT_TOL};

pub const EXIT_USAGE: i32 = 3;
pub const EXIT_FAILURE: i32 = 4;

pub fn exit_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::EntangledCertified => 0,
        Verdict::Inconclusive => 1,
        Verdict::Separable => 2,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ggm-entangle",
    version,
    about = "Entanglement detection with SU(n) generator inequalities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dump the generalized Gell-Mann basis of SU(n).
    Basis {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        dim: u32,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a density-matrix file for one of the built-in families.
    MakeState(MakeStateArgs),
    /// Test a density-matrix file against the separability inequality.
    Detect(DetectArgs),
    /// Tabulate f over a (family parameter, p) grid with U = rotation(p), V = I.
    Scan(ScanArgs),
    /// Minimum eigenvalue of the partial transpose.
    Ppt {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MakeFamily {
    Werner,
    Iso23,
    Horodecki33,
    Schmidt,
    Random,
    Separable,
    Mixed,
}

#[derive(Debug, Args)]
pub struct MakeStateArgs {
    #[arg(value_enum)]
    pub family: MakeFamily,
    /// Mixing parameter for `werner` and `iso23`.
    #[arg(long)]
    pub a: Option<f64>,
    /// Parameter for `horodecki33`.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Schmidt angle for `schmidt`.
    #[arg(long)]
    pub theta: Option<f64>,
    /// Subsystem dimensions for `schmidt`, `random`, `separable`, `mixed`.
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    pub dims: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of product terms for `separable`.
    #[arg(long, default_value_t = 4)]
    pub terms: usize,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    pub path: PathBuf,
    /// Search over local unitaries instead of using identities.
    #[arg(long)]
    pub optimize: bool,
    /// Restrict to one level pair.
    #[arg(long, num_args = 2, value_names = ["J", "K"])]
    pub pair: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 16)]
    pub restarts: usize,
    #[arg(long, default_value_t = 400)]
    pub max_iters: usize,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Print one JSON record instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    pub family: String,
    #[arg(long)]
    pub param_min: Option<f64>,
    #[arg(long)]
    pub param_max: Option<f64>,
    #[arg(long, default_value_t = 101)]
    pub param_steps: usize,
    #[arg(long, default_value_t = 101)]
    pub p_steps: usize,
    #[arg(long, num_args = 2, value_names = ["J", "K"], default_values_t = [1, 2])]
    pub pair: Vec<usize>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Failure while running a command, split by exit code.
enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Run(Error::Io(e))
    }
}

fn with_output(
    out: Option<&Path>,
    stdout: &mut dyn Write,
    f: impl FnOnce(&mut dyn Write) -> Result<()>,
) -> Result<()> {
    match out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            f(&mut w)?;
            w.flush()?;
            Ok(())
        }
        None => f(stdout),
    }
}

fn required(value: Option<f64>, flag: &str, family: &str) -> std::result::Result<f64, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("`{family}` requires --{flag}")))
}

fn shape_arg(
    dims: &Option<Vec<usize>>,
    family: &str,
) -> std::result::Result<BipartiteShape, Failure> {
    match dims.as_deref() {
        Some([m, n]) => Ok(BipartiteShape::new(*m, *n)?),
        _ => Err(Failure::Usage(format!("`{family}` requires --dims M N"))),
    }
}

fn make_state(args: &MakeStateArgs) -> std::result::Result<DensityMatrix, Failure> {
    Ok(match args.family {
        MakeFamily::Werner => states::werner(required(args.a, "a", "werner")?)?,
        MakeFamily::Iso23 => states::iso23(required(args.a, "a", "iso23")?)?,
        MakeFamily::Horodecki33 => {
            states::horodecki33(required(args.alpha, "alpha", "horodecki33")?)?
        }
        MakeFamily::Schmidt => {
            let theta = required(args.theta, "theta", "schmidt")?;
            states::schmidt_pure(theta, shape_arg(&args.dims, "schmidt")?)?
        }
        MakeFamily::Random => states::random_density(shape_arg(&args.dims, "random")?, args.seed)?,
        MakeFamily::Separable => {
            states::random_separable(shape_arg(&args.dims, "separable")?, args.terms, args.seed)?.0
        }
        MakeFamily::Mixed => DensityMatrix::maximally_mixed(shape_arg(&args.dims, "mixed")?),
    })
}

fn pair_arg(pair: &Option<Vec<usize>>, shape: BipartiteShape) -> Result<Option<Vec<LevelPair>>> {
    match pair.as_deref() {
        Some([j, k]) => Ok(Some(vec![LevelPair::new(*j, *k, shape)?])),
        _ => Ok(None),
    }
}

pub fn format_report(report: &DetectionReport) -> String {
    let y = &report.y_values;
    format!(
        "verdict: {}\n\
         inequality verdict: {}\n\
         best f: {}\n\
         level pair: {}\n\
         Y values: y1={} y2={} y3={}\n\
         ppt min eigenvalue: {}\n\
         ppt verdict: {}\n\
         evaluations: {}\n\
         theta_a: {:?}\n\
         theta_b: {:?}\n",
        report.verdict,
        report.inequality_verdict,
        report.best_f,
        report.best_pair,
        y.y1,
        y.y2,
        y.y3,
        report.ppt_min,
        report.ppt_verdict,
        report.evaluations,
        report.best_params.theta_a,
        report.best_params.theta_b,
    )
}

pub fn detect(args: &DetectArgs) -> Result<DetectionReport> {
    let rho = read_density_file(&args.path)?;
    let pairs = pair_arg(&args.pair, rho.shape())?;
    if args.optimize {
        let cfg = SearchConfig {
            restarts: args.restarts,
            max_iters: args.max_iters,
            seed: args.seed,
            pairs,
            tol: args.tol,
            ..SearchConfig::default()
        };
        search::maximize_violation(&rho, &cfg)
    } else {
        evaluate_identity(&rho, pairs.as_deref(), args.tol)
    }
}

fn scan(args: &ScanArgs, stdout: &mut dyn Write) -> std::result::Result<(), Failure> {
    let family: StateFamily = args.family.parse()?;
    let (lo, hi) = family.param_range();
    let params = linspace(
        args.param_min.unwrap_or(lo),
        args.param_max.unwrap_or(hi),
        args.param_steps,
    )?;
    let p_grid = linspace(0.0, std::f64::consts::PI, args.p_steps)?;
    let pair = match args.pair.as_slice() {
        [j, k] => LevelPair::new(*j, *k, family.shape())?,
        _ => return Err(Failure::Usage("--pair takes two values".into())),
    };
    let rows = search::scan_1d(family, &params, &p_grid, pair)?;
    with_output(args.out.as_deref(), stdout, |w| write_scan_csv(w, &rows))?;
    Ok(())
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> std::result::Result<i32, Failure> {
    match cli.command {
        Command::Basis { dim, out } => {
            let basis = GellMannBasis::new(dim as usize)?;
            with_output(out.as_deref(), stdout, |w| write_basis(w, &basis))?;
            Ok(0)
        }
        Command::MakeState(args) => {
            let rho = make_state(&args)?;
            with_output(args.out.as_deref(), stdout, |w| write_density(w, &rho))?;
            Ok(0)
        }
        Command::Detect(args) => {
            let report = detect(&args)?;
            if args.json {
                let line = serde_json::to_string(&report).expect("report serializes");
                writeln!(stdout, "{line}")?;
            } else {
                write!(stdout, "{}", format_report(&report))?;
            }
            Ok(exit_code(report.verdict))
        }
        Command::Scan(args) => {
            scan(&args, stdout)?;
            Ok(0)
        }
        Command::Ppt { path, json } => {
            let rho = read_density_file(&path)?;
            let rep = ppt_check(&rho)?;
            if json {
                let line = serde_json::to_string(&rep).expect("report serializes");
                writeln!(stdout, "{line}")?;
            } else {
                writeln!(stdout, "ppt min eigenvalue: {}", rep.min_eigenvalue)?;
                writeln!(stdout, "ppt verdict: {}", rep.verdict)?;
            }
            Ok(exit_code(rep.verdict))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    match dispatch(cli, stdout) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Run(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_FAILURE
        }
    }
}
