//! Command-line front end.
//!
//! ```text
//! swsh eval   --s 1/2 --ell 3/2 --m -1/2 --theta 0.7 --phi 0.2 --target edth
//! swsh euler  --theta 0.4 --phi 0 --theta-p 1.2 --phi-p 2
//! swsh verify --theorem all --mode two_point --samples 100 --seed 42
//! swsh sweep  --sum spin2 --s 1 --ell 2 --thetas 0,0.785398,1.570796
//! ```
//!
//! Exit codes: 0 when every check passes, 1 on a numeric failure, 2 on a
//! usage or configuration error.

use std::f64::consts::PI;
use std::fs;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::geometry::{relative_euler, Sheet};
use crate::half::HalfInt;
use crate::report::{self, EulerRecord, EvalRecord, SweepRow};
use crate::swsh::{self, Direction, Ladder, QuantumNumbers};
use crate::theorems::{self, CheckReport, Mode, TheoremId, TheoremParams};

/// Environment variable holding the default verification seed.
pub const SEED_ENV: &str = "SWSH_SEED";

/// Seed used when neither `--seed` nor [`SEED_ENV`] is given.
pub const DEFAULT_SEED: u64 = 42;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Parser)]
#[command(name = "swsh", version, about = "Spin-weighted spherical harmonics and their addition theorems")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format. Defaults to text for eval/euler, json for verify, csv for sweep.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Read input angles in degrees. Reported angles stay in radians.
    #[arg(long, global = true)]
    pub degrees: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Evaluate a harmonic, a derivative, a ladder operator or the DE residual.
    Eval(EvalArgs),
    /// Relative Euler angles of two directions.
    Euler(EulerArgs),
    /// Check addition theorems on seeded random directions.
    Verify(VerifyArgs),
    /// Tabulate an equal-spin coincidence sum against its closed form.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    #[value(name = "Y", alias = "y")]
    Y,
    Dtheta,
    Dphi,
    Edth,
    Edthbar,
    #[value(name = "de_residual")]
    DeResidual,
}

impl Target {
    fn name(self) -> &'static str {
        match self {
            Target::Y => "Y",
            Target::Dtheta => "dtheta",
            Target::Dphi => "dphi",
            Target::Edth => "edth",
            Target::Edthbar => "edthbar",
            Target::DeResidual => "de_residual",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    /// Spin weight, e.g. 1 or -1/2.
    #[arg(long, allow_hyphen_values = true)]
    pub s: HalfInt,
    #[arg(long, allow_hyphen_values = true)]
    pub ell: HalfInt,
    #[arg(long, allow_hyphen_values = true)]
    pub m: HalfInt,
    #[arg(long, allow_hyphen_values = true)]
    pub theta: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub phi: f64,
    #[arg(long, value_enum, default_value = "Y")]
    pub target: Target,
}

#[derive(Debug, Clone, Args)]
pub struct EulerArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub theta: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub phi: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub theta_p: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub phi_p: f64,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Theorem name (base, dthetaleft, mweight, dthetaboth, m2weight, mdtheta, addition1..5) or `all`.
    #[arg(long, default_value = "all")]
    pub theorem: String,

    /// two_point, coincidence, spinsame or `all`.
    #[arg(long, default_value = "two_point")]
    pub mode: String,

    /// Restrict to this s.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<HalfInt>,

    /// Restrict to this s'.
    #[arg(long, allow_hyphen_values = true)]
    pub sprime: Option<HalfInt>,

    /// Restrict to this l.
    #[arg(long)]
    pub ell: Option<HalfInt>,

    /// Largest |s| and |s'| on the grid.
    #[arg(long, default_value = "2")]
    pub max_spin: HalfInt,

    /// Largest l on the grid.
    #[arg(long, default_value = "8")]
    pub ell_max: HalfInt,

    /// Random directions (or direction pairs) per grid point.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,

    /// Tolerance per unit of 2l+1, overriding the per-mode default.
    #[arg(long)]
    pub tol_scale: Option<f64>,

    #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Worker threads. Report order does not depend on this.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Which equal-spin sum: spin1..spin5, or a theorem name.
    #[arg(long)]
    pub sum: TheoremId,
    #[arg(long, allow_hyphen_values = true)]
    pub s: HalfInt,
    #[arg(long)]
    pub ell: HalfInt,
    /// Explicit colatitudes, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "steps")]
    pub thetas: Option<Vec<f64>>,
    /// Number of evenly spaced colatitudes from 0 to pi inclusive.
    #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u64).range(1..))]
    pub steps: u64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub phi: f64,
    /// Tolerance per unit of 2l+1 for the abs_err column.
    #[arg(long)]
    pub tol_scale: Option<f64>,
}

/// Result of one command: report text and exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
    /// Human-readable summary for the error stream.
    pub summary: Option<String>,
}

/// Captured result of a full invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn angle(x: f64, degrees: bool) -> f64 {
    if degrees {
        x.to_radians()
    } else {
        x
    }
}

fn check_tol_scale(t: Option<f64>) -> Result<Option<f64>> {
    match t {
        Some(x) if !(x.is_finite() && x > 0.0) => Err(Error::Config(format!("--tol-scale must be positive, got {x}"))),
        _ => Ok(t),
    }
}

fn lines(rows: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    out
}

pub fn cmd_eval(args: &EvalArgs, format: Format, degrees: bool) -> Result<Outcome> {
    let q = QuantumNumbers::new(args.s, args.ell, args.m)?;
    let dir = Direction::new(angle(args.theta, degrees), angle(args.phi, degrees))?;
    let value = match args.target {
        Target::Y => swsh::swsh_eval(q, dir),
        Target::Dtheta => swsh::dtheta(q, dir),
        Target::Dphi => swsh::dphi(q, dir),
        Target::Edth => swsh::edth_analytic(q, dir, Ladder::Raise),
        Target::Edthbar => swsh::edth_analytic(q, dir, Ladder::Lower),
        Target::DeResidual => swsh::de_residual(q, dir)?.into(),
    };
    let rec = EvalRecord {
        s: args.s,
        ell: args.ell,
        m: args.m,
        theta: dir.theta(),
        phi: dir.phi(),
        target: args.target.name().to_owned(),
        value,
    };
    let report = match format {
        Format::Json => lines([rec.json()]),
        Format::Csv => lines([report::EVAL_HEADER.to_owned(), rec.csv()]),
        Format::Text => lines([rec.text()]),
    };
    Ok(Outcome { code: EXIT_PASS, report, summary: None })
}

pub fn cmd_euler(args: &EulerArgs, format: Format, degrees: bool) -> Result<Outcome> {
    let dir = Direction::new(angle(args.theta, degrees), angle(args.phi, degrees))?;
    let dirp = Direction::new(angle(args.theta_p, degrees), angle(args.phi_p, degrees))?;
    let eu = relative_euler(dir, dirp);
    let rec = EulerRecord {
        theta: dir.theta(),
        phi: dir.phi(),
        theta_p: dirp.theta(),
        phi_p: dirp.phi(),
        alpha: eu.alpha,
        beta: eu.beta,
        gamma: eu.gamma,
        sheet: match eu.sheet {
            Sheet::Same => "same",
            Sheet::Flipped => "flipped",
        },
    };
    let report = match format {
        Format::Json => lines([rec.json()]),
        Format::Csv => lines([report::EULER_HEADER.to_owned(), rec.csv()]),
        Format::Text => lines([rec.text()]),
    };
    Ok(Outcome { code: EXIT_PASS, report, summary: None })
}

/// One unit of verification work.
#[derive(Clone, Copy, Debug)]
struct Task {
    id: TheoremId,
    mode: Mode,
    params: TheoremParams,
}

fn parse_theorems(name: &str) -> Result<Vec<TheoremId>> {
    if name.eq_ignore_ascii_case("all") {
        Ok(TheoremId::ALL.to_vec())
    } else {
        Ok(vec![name.parse()?])
    }
}

fn parse_modes(name: &str) -> Result<Vec<Mode>> {
    if name.eq_ignore_ascii_case("all") {
        Ok(vec![Mode::TwoPoint, Mode::Coincidence, Mode::SpinSame])
    } else {
        Ok(vec![name.parse()?])
    }
}

/// The `(s, s', l)` points selected by the verify flags, in grid order.
fn select_params(args: &VerifyArgs) -> Result<Vec<TheoremParams>> {
    if let (Some(s), Some(sp), Some(l)) = (args.s, args.sprime, args.ell) {
        return Ok(vec![TheoremParams::new(s, sp, l)?]);
    }
    if args.max_spin < HalfInt::ZERO || args.ell_max < HalfInt::ZERO {
        return Err(Error::Config("--max-spin and --ell-max must be non-negative".into()));
    }
    let grid: Vec<_> = theorems::parameter_grid(args.max_spin.twice(), args.ell_max.twice())
        .into_iter()
        .filter(|p| args.s.is_none_or(|s| p.s() == s))
        .filter(|p| args.sprime.is_none_or(|s| p.sprime() == s))
        .filter(|p| args.ell.is_none_or(|l| p.ell() == l))
        .collect();
    if grid.is_empty() {
        return Err(Error::Config("the selected parameter grid is empty".into()));
    }
    Ok(grid)
}

fn run_tasks(
    tasks: &[Task],
    samples: usize,
    tol_scale: Option<f64>,
    seed: u64,
    jobs: usize,
) -> Result<Vec<CheckReport>> {
    let one = |t: &Task| {
        let tol = tol_scale.unwrap_or_else(|| t.mode.tol_scale(t.id)) * t.params.dim();
        theorems::verify(t.id, &t.params, samples, tol, seed, t.mode)
    };
    if jobs <= 1 {
        return tasks.iter().map(one).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<CheckReport>>>> = Mutex::new(vec![None; tasks.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(tasks.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(t) = tasks.get(i) else { break };
                let r = one(t);
                slots.lock().expect("no worker panics while holding the lock")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("workers have finished").into_iter().map(|r| r.expect("every task was run")).collect()
}

pub fn cmd_verify(args: &VerifyArgs, format: Format) -> Result<Outcome> {
    let ids = parse_theorems(&args.theorem)?;
    let modes = parse_modes(&args.mode)?;
    let params = select_params(args)?;
    let tol_scale = check_tol_scale(args.tol_scale)?;
    let samples = usize::try_from(args.samples).map_err(|_| Error::Config("--samples is too large".into()))?;

    let mut tasks = Vec::new();
    for &mode in &modes {
        for &id in &ids {
            for &p in &params {
                if mode == Mode::SpinSame && p.s() != p.sprime() {
                    continue;
                }
                tasks.push(Task { id, mode, params: p });
            }
        }
    }
    if tasks.is_empty() {
        return Err(Error::Config("equal-spin mode needs at least one grid point with s = s'".into()));
    }

    let reports = run_tasks(&tasks, samples, tol_scale, args.seed, args.jobs as usize)?;
    let failed = reports.iter().filter(|r| !r.pass).count();
    let report = match format {
        Format::Json => lines(reports.iter().map(report::check_json)),
        Format::Csv => {
            lines(std::iter::once(report::CHECK_FIELDS.join(",")).chain(reports.iter().map(report::check_csv)))
        }
        Format::Text => lines(reports.iter().map(report::check_text)),
    };
    let summary = format!("{} of {} checks passed (seed {})", reports.len() - failed, reports.len(), args.seed);
    let code = if failed == 0 { EXIT_PASS } else { EXIT_FAIL };
    Ok(Outcome { code, report, summary: Some(summary) })
}

/// Evenly spaced colatitudes `0, pi/(n-1), ..., pi`; a single step gives `0`.
fn theta_grid(steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![0.0];
    }
    (0..steps).map(|i| if i + 1 == steps { PI } else { PI * i as f64 / (steps - 1) as f64 }).collect()
}

pub fn cmd_sweep(args: &SweepArgs, format: Format, degrees: bool) -> Result<Outcome> {
    let p = TheoremParams::new(args.s, args.s, args.ell)?;
    let tol = check_tol_scale(args.tol_scale)?.unwrap_or_else(|| Mode::SpinSame.tol_scale(args.sum)) * p.dim();
    let thetas = match &args.thetas {
        Some(t) => t.iter().map(|&x| angle(x, degrees)).collect(),
        None => theta_grid(args.steps as usize),
    };
    let phi = angle(args.phi, degrees);
    let mut rows = Vec::with_capacity(thetas.len());
    for theta in thetas {
        let dir = Direction::new(theta, phi)?;
        rows.push(SweepRow {
            theta: dir.theta(),
            lhs: theorems::mode_sum(args.sum, &p, dir, dir),
            rhs: theorems::spinsame_rhs(args.sum, args.s, args.ell, dir)?,
        });
    }
    let worst = rows.iter().map(SweepRow::abs_err).fold(0.0, |a: f64, b| if b.is_nan() { b } else { a.max(b) });
    let report = match format {
        Format::Json => lines(rows.iter().map(SweepRow::json)),
        Format::Csv => lines(std::iter::once(report::SWEEP_HEADER.to_owned()).chain(rows.iter().map(SweepRow::csv))),
        Format::Text => lines(
            std::iter::once(format!("{:>22} {:>22} {:>22} {:>10}", "theta", "lhs_re", "rhs_re", "abs_err"))
                .chain(rows.iter().map(SweepRow::text)),
        ),
    };
    let pass = worst <= tol;
    let summary = format!(
        "{} s={} l={}: max abs_err {worst:.3e}, tolerance {tol:.3e}: {}",
        args.sum,
        args.s,
        args.ell,
        if pass { "pass" } else { "FAIL" }
    );
    Ok(Outcome { code: if pass { EXIT_PASS } else { EXIT_FAIL }, report, summary: Some(summary) })
}

/// Run a parsed configuration. Writes to `--output` when given.
pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let outcome = match &cfg.command {
        Command::Eval(a) => cmd_eval(a, cfg.format.unwrap_or(Format::Text), cfg.degrees)?,
        Command::Euler(a) => cmd_euler(a, cfg.format.unwrap_or(Format::Text), cfg.degrees)?,
        Command::Verify(a) => cmd_verify(a, cfg.format.unwrap_or(Format::Json))?,
        Command::Sweep(a) => cmd_sweep(a, cfg.format.unwrap_or(Format::Csv), cfg.degrees)?,
    };
    if let Some(path) = &cfg.output {
        fs::write(path, &outcome.report).map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?;
        return Ok(Outcome { report: String::new(), ..outcome });
    }
    Ok(outcome)
}

/// Parse and run `args` (program name first), capturing all output.
pub fn invoke<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Invocation { code, stdout: String::new(), stderr: text }
            } else {
                Invocation { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match run(&cfg) {
        Ok(o) => Invocation { code: o.code, stdout: o.report, stderr: o.summary.map(|s| s + "\n").unwrap_or_default() },
        Err(e) => Invocation { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn main() -> i32 {
    let inv = invoke(std::env::args_os());
    print!("{}", inv.stdout);
    eprint!("{}", inv.stderr);
    inv.code
}
