//! Command-line front end: grid verification of the discrete forms,
//! Krawtchouk tables (evaluation, zeros, enclosure bounds, ratio
//! envelopes, decay-rate probe) and the randomized conjecture search.
//!
//! Exit codes: 0 when every asserted inequality held, 1 when a
//! mathematical assertion failed (a potential finding — float candidates
//! are re-verified in exact rational arithmetic first), 2 on usage or
//! input errors. Output is deterministic for a fixed argument list.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::forms::v_form;
use crate::krawtchouk::{
    extreme_zero_bound, kraw_eval, kraw_zeros, ratio_envelope, scaling_probe, KrawError,
    KrawParams, SCALING_SLOPE_WINDOW,
};
use crate::poly::{DensePoly, RootPoly};
use crate::report::{fmt_float, Cell, Table};
use crate::scalar::{rat_from_f64, Rat, Scalar};
use crate::scan::{report_from_samples, scan, Grid};
use crate::search::{search_conjecture, ConjectureSearch};

#[derive(Debug, Parser)]
#[command(
    name = "turan",
    version,
    about = "Discrete Turán-form verification and Krawtchouk extreme-zero bounds"
)]
pub struct Cli {
    #[command(flatten)]
    pub run: RunOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct RunOpts {
    /// Float precision in bits (64 is the only supported width; exact
    /// rechecks always use arbitrary-precision rationals)
    #[arg(long, global = true, default_value_t = 64)]
    pub precision: u32,

    /// Tolerance below which a scanned value counts as a violation candidate
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,

    /// Seed for randomized searches (fully determines the trial sequence)
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Table output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write the table to this path instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Scan the order-m discrete Turán form of a polynomial over a grid
    Vform(VformArgs),
    /// Krawtchouk polynomial computations
    Kraw {
        #[command(subcommand)]
        cmd: KrawCmd,
    },
    /// Randomized counterexample search for the conjectured discrete
    /// degree-sharpened form (exact recheck before reporting)
    SearchConjecture(SearchArgs),
}

#[derive(Debug, Args)]
pub struct VformArgs {
    /// Roots of a real-rooted polynomial, comma-separated
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub roots: Option<Vec<f64>>,

    /// Ascending coefficients c0,c1,..., an alternative to --roots
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "roots")]
    pub coeffs: Option<Vec<f64>>,

    /// Leading coefficient used with --roots
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub leading: f64,

    /// Order of the form
    #[arg(short)]
    pub m: u32,

    /// Grid as start:stop:step (default: span of the roots +-3, step
    /// min(0.1, mesh/8))
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum KrawCmd {
    /// Evaluate K_k^n at a point
    Eval {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        k: u32,
        #[arg(short, allow_hyphen_values = true)]
        x: f64,
    },
    /// All k zeros, ascending
    Zeros {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        k: u32,
    },
    /// Extreme-zero enclosure report (admissible pairs only)
    Bounds {
        #[arg(short)]
        n: Option<u32>,
        #[arg(short)]
        k: Option<u32>,
        /// Sweep every admissible (n, k) with n up to this value
        #[arg(long)]
        n_max: Option<u32>,
    },
    /// Two-sided envelope of V_2(K(x+1))/V_2(K(x)) at integer x
    Envelope {
        #[arg(short)]
        n: u32,
        #[arg(short)]
        k: u32,
        /// Single evaluation point (default: every integer x where the
        /// envelope preconditions hold)
        #[arg(long, allow_hyphen_values = true)]
        x: Option<f64>,
    },
    /// Decay-rate probe of sqrt(R)/|Delta| along x = n/2 + eps*sqrt(k(n-k))
    Scaling {
        #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
        eps: f64,
        /// n values, comma-separated
        #[arg(long, value_delimiter = ',', default_values_t = vec![64u32, 128, 256, 512, 1024])]
        n_list: Vec<u32>,
        /// k = n / k_div
        #[arg(long, default_value_t = 4)]
        k_div: u32,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Largest candidate degree
    #[arg(long, default_value_t = 8)]
    pub degree_max: u32,

    /// Number of random trials (must be at least 1)
    #[arg(long)]
    pub trials: u64,
}

/// Captured result of a run; `main` only prints it.
#[derive(Debug)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct CmdOut {
    table: Table,
    summary: String,
    exit: i32,
}

/// Parses and executes an argument list. Never panics on user input.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliOutput {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => CliOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };

    if cli.run.precision != 64 {
        return usage_error(format!(
            "unsupported --precision {}: floats are 64-bit; exact checks use rationals",
            cli.run.precision
        ));
    }
    if !(cli.run.tol.is_finite() && cli.run.tol >= 0.0) {
        return usage_error("--tol must be a finite nonnegative number".into());
    }

    let result = match &cli.command {
        Command::Vform(args) => cmd_vform(&cli.run, args),
        Command::Kraw { cmd } => cmd_kraw(cmd),
        Command::SearchConjecture(args) => cmd_search(&cli.run, args),
    };

    match result {
        Err(message) => usage_error(message),
        Ok(out) => {
            let rendered = out.table.render(cli.run.format == Format::Json);
            let (stdout, write_err) = match &cli.run.out {
                None => (rendered, None),
                Some(path) => match std::fs::write(path, rendered) {
                    Ok(()) => (String::new(), None),
                    Err(e) => (String::new(), Some(format!("cannot write {}: {e}", path.display()))),
                },
            };
            if let Some(msg) = write_err {
                return usage_error(msg);
            }
            CliOutput {
                code: out.exit,
                stdout,
                stderr: out.summary,
            }
        }
    }
}

fn usage_error(message: String) -> CliOutput {
    CliOutput {
        code: 2,
        stdout: String::new(),
        stderr: format!("error: {message}\n"),
    }
}

fn parse_grid(spec: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid must be start:stop:step, got {spec:?}"));
    }
    let nums: Result<Vec<f64>, _> = parts.iter().map(|p| p.parse::<f64>()).collect();
    let nums = nums.map_err(|e| format!("bad grid component in {spec:?}: {e}"))?;
    Grid::new(nums[0], nums[1], nums[2]).map_err(|e| e.to_string())
}

enum PolySpec {
    Roots(RootPoly<f64>),
    Coeffs(DensePoly<f64>),
}

impl PolySpec {
    fn eval(&self, x: f64) -> f64 {
        match self {
            PolySpec::Roots(p) => p.eval(&x),
            PolySpec::Coeffs(p) => p.eval(&x),
        }
    }

    /// Exact recheck of the order-m form at a float sample.
    fn form_negative_exact(&self, m: u32, x: f64) -> bool {
        let x = rat_from_f64(x);
        let value = match self {
            PolySpec::Roots(p) => {
                let exact = RootPoly::new(
                    rat_from_f64(*p.leading()),
                    p.roots().iter().copied().map(rat_from_f64).collect(),
                )
                .expect("validated earlier");
                v_form(|u: &Rat| exact.eval(u), m, &x)
            }
            PolySpec::Coeffs(p) => {
                let exact =
                    DensePoly::new(p.coeffs().iter().copied().map(rat_from_f64).collect());
                v_form(|u: &Rat| exact.eval(u), m, &x)
            }
        };
        value < Rat::zero()
    }
}

fn cmd_vform(run: &RunOpts, args: &VformArgs) -> Result<CmdOut, String> {
    let poly = match (&args.roots, &args.coeffs) {
        (Some(roots), None) => PolySpec::Roots(
            RootPoly::new(args.leading, roots.clone()).map_err(|e| e.to_string())?,
        ),
        (None, Some(coeffs)) => {
            if coeffs.iter().any(|c| !c.is_finite()) {
                return Err("coefficients must be finite".into());
            }
            PolySpec::Coeffs(DensePoly::new(coeffs.clone()))
        }
        _ => return Err("exactly one of --roots or --coeffs is required".into()),
    };
    let grid = match &args.grid {
        Some(spec) => parse_grid(spec)?,
        None => match &poly {
            PolySpec::Roots(p) => Grid::default_for(p),
            PolySpec::Coeffs(_) => Grid::new(-5.0, 5.0, 0.1).expect("static grid"),
        },
    };

    let samples = scan(|x| v_form(|u: &f64| poly.eval(*u), args.m, &x), &grid);
    let report = report_from_samples("vform", &grid, &samples, run.tol);
    let verified: Vec<(f64, f64)> = report
        .violations
        .iter()
        .copied()
        .filter(|&(x, _)| poly.form_negative_exact(args.m, x))
        .collect();

    let mut table = Table::new(vec!["x", "value"]);
    for (x, v) in &samples {
        table.push(vec![Cell::Float(*x), Cell::Float(*v)]);
    }
    let mut summary = String::new();
    let _ = writeln!(
        summary,
        "vform: m={} samples={} min={} argmin={} tol={}",
        args.m,
        samples.len(),
        fmt_float(report.min_value),
        fmt_float(report.argmin),
        fmt_float(run.tol),
    );
    let _ = writeln!(
        summary,
        "vform: float candidates below -tol: {}, verified negative in exact arithmetic: {}",
        report.violations.len(),
        verified.len()
    );
    for (x, v) in verified.iter().take(10) {
        let _ = writeln!(summary, "vform: violation at x={} value={}", fmt_float(*x), fmt_float(*v));
    }
    Ok(CmdOut {
        table,
        summary,
        exit: i32::from(!verified.is_empty()),
    })
}

fn cmd_kraw(cmd: &KrawCmd) -> Result<CmdOut, String> {
    match cmd {
        KrawCmd::Eval { n, k, x } => {
            KrawParams::new(*n, *k).map_err(|e| e.to_string())?;
            if !x.is_finite() {
                return Err("x must be finite".into());
            }
            let mut table = Table::new(vec!["n", "k", "x", "value"]);
            table.push(vec![
                Cell::UInt(u64::from(*n)),
                Cell::UInt(u64::from(*k)),
                Cell::Float(*x),
                Cell::Float(kraw_eval(*n, *k, x)),
            ]);
            Ok(CmdOut {
                table,
                summary: String::new(),
                exit: 0,
            })
        }
        KrawCmd::Zeros { n, k } => {
            KrawParams::new(*n, *k).map_err(|e| e.to_string())?;
            if *k < 1 || 2 * *k > *n {
                return Err(format!("need 1 <= k <= n/2, got n={n}, k={k}"));
            }
            let zeros = kraw_zeros(*n, *k, 1e-12);
            let mut table = Table::new(vec!["index", "zero"]);
            for (i, z) in zeros.iter().enumerate() {
                table.push(vec![Cell::UInt(i as u64), Cell::Float(*z)]);
            }
            Ok(CmdOut {
                table,
                summary: format!("zeros: n={n} k={k} count={}\n", zeros.len()),
                exit: 0,
            })
        }
        KrawCmd::Bounds { n, k, n_max } => cmd_bounds(*n, *k, *n_max),
        KrawCmd::Envelope { n, k, x } => cmd_envelope(*n, *k, *x),
        KrawCmd::Scaling { eps, n_list, k_div } => {
            if *k_div == 0 {
                return Err("--k-div must be positive".into());
            }
            let fit = scaling_probe(*eps, |n| n / k_div, n_list).map_err(|e| e.to_string())?;
            let mut table = Table::new(vec!["n", "k", "x", "sqrt_r", "abs_delta", "ratio"]);
            for p in &fit.points {
                table.push(vec![
                    Cell::UInt(u64::from(p.n)),
                    Cell::UInt(u64::from(p.k)),
                    Cell::Float(p.x),
                    Cell::Float(p.sqrt_radicand),
                    Cell::Float(p.abs_delta),
                    Cell::Float(p.ratio()),
                ]);
            }
            let (lo, hi) = SCALING_SLOPE_WINDOW;
            let ok = fit.slope > lo && fit.slope < hi;
            let summary = format!(
                "scaling: slope={} window=({lo},{hi}) {}\n",
                fmt_float(fit.slope),
                if ok { "PASS" } else { "FAIL" }
            );
            Ok(CmdOut {
                table,
                summary,
                exit: i32::from(!ok),
            })
        }
    }
}

fn bounds_row(table: &mut Table, report: &crate::krawtchouk::BoundReport) {
    table.push(vec![
        Cell::UInt(u64::from(report.n)),
        Cell::UInt(u64::from(report.k)),
        Cell::Bool(true),
        Cell::Float(report.half_width),
        Cell::Float(report.x1_lower),
        Cell::Float(report.min_zero()),
        Cell::Float(report.max_zero()),
        Cell::Float(report.slack_low),
        Cell::Float(report.slack_high),
    ]);
}

const BOUNDS_COLUMNS: [&str; 9] = [
    "n",
    "k",
    "admissible",
    "half_width",
    "x1_lower",
    "min_zero",
    "max_zero",
    "slack_low",
    "slack_high",
];

/// Slack tolerance for asserting the float-computed enclosure.
const SLACK_TOL: f64 = 1e-9;

fn cmd_bounds(n: Option<u32>, k: Option<u32>, n_max: Option<u32>) -> Result<CmdOut, String> {
    let mut table = Table::new(BOUNDS_COLUMNS.to_vec());
    let mut failures = 0u64;
    let mut pairs = 0u64;
    let mut check = |report: &crate::krawtchouk::BoundReport| {
        pairs += 1;
        if report.slack_low < -SLACK_TOL
            || report.slack_high < -SLACK_TOL
            || report.min_zero() - report.x1_lower < -SLACK_TOL
        {
            failures += 1;
        }
    };
    match (n, k, n_max) {
        (Some(n), Some(k), None) => {
            let report = extreme_zero_bound(n, k).map_err(|e| e.to_string())?;
            check(&report);
            bounds_row(&mut table, &report);
        }
        (Some(n), None, None) => {
            for k in 2..=KrawParams::max_admissible_k(n).ok_or_else(|| {
                format!("no admissible k for n={n}")
            })? {
                let report = extreme_zero_bound(n, k).map_err(|e| e.to_string())?;
                check(&report);
                bounds_row(&mut table, &report);
            }
        }
        (None, None, Some(n_max)) => {
            for n in 2..=n_max {
                if let Some(k_max) = KrawParams::max_admissible_k(n) {
                    for k in 2..=k_max {
                        let report = extreme_zero_bound(n, k).map_err(|e| e.to_string())?;
                        check(&report);
                        bounds_row(&mut table, &report);
                    }
                }
            }
        }
        _ => return Err("pass -n with optional -k, or --n-max alone".into()),
    }
    let summary = format!(
        "bounds: pairs={pairs} enclosure_failures={failures}\n"
    );
    Ok(CmdOut {
        table,
        summary,
        exit: i32::from(failures > 0),
    })
}

fn cmd_envelope(n: u32, k: u32, x: Option<f64>) -> Result<CmdOut, String> {
    let params = KrawParams::new(n, k).map_err(|e| e.to_string())?;
    if !params.admissible() {
        return Err(KrawError::NotAdmissible { n, k }.to_string());
    }
    let xs: Vec<f64> = match x {
        Some(x) => vec![x],
        None => (2..n.saturating_sub(3)).map(f64::from).collect(),
    };
    let mut table = Table::new(vec!["x", "lo", "ratio", "hi"]);
    let mut skipped = 0u64;
    let mut violations = 0u64;
    let rel_tol = 1e-9;
    for x in xs {
        match ratio_envelope(n, k, x) {
            Err(KrawError::PreconditionFailed { .. }) => skipped += 1,
            Err(e) => return Err(e.to_string()),
            Ok((lo, hi)) => {
                let v_here = v_form(|u: &f64| kraw_eval(n, k, u), 2, &x);
                let v_next = v_form(|u: &f64| kraw_eval(n, k, u), 2, &(x + 1.0));
                let ratio = v_next / v_here;
                let slack = rel_tol * ratio.abs();
                if !(lo - slack <= ratio && ratio <= hi + slack) {
                    violations += 1;
                }
                table.push(vec![
                    Cell::Float(x),
                    Cell::Float(lo),
                    Cell::Float(ratio),
                    Cell::Float(hi),
                ]);
            }
        }
    }
    let summary = format!(
        "envelope: n={n} k={k} rows={} skipped={skipped} sandwich_violations={violations} (rel tol {rel_tol:e})\n",
        table.rows.len(),
    );
    Ok(CmdOut {
        table,
        summary,
        exit: i32::from(violations > 0),
    })
}

fn cmd_search(run: &RunOpts, args: &SearchArgs) -> Result<CmdOut, String> {
    if args.trials < 1 {
        return Err("--trials must be at least 1".into());
    }
    if args.degree_max < 1 {
        return Err("--degree-max must be at least 1".into());
    }
    let cfg = ConjectureSearch::new(args.degree_max, args.trials, run.seed, run.tol);
    let report = search_conjecture(&cfg);
    let mut table = Table::new(vec![
        "trials",
        "min_value",
        "witness_x",
        "witness_leading",
        "witness_roots",
        "float_candidates",
        "exact_counterexample",
    ]);
    let roots = report
        .witness_roots
        .iter()
        .map(|r| fmt_float(*r))
        .collect::<Vec<_>>()
        .join(";");
    table.push(vec![
        Cell::UInt(report.trials),
        Cell::Float(report.min_value),
        Cell::Float(report.witness_x),
        Cell::Float(report.witness_leading),
        Cell::Str(roots),
        Cell::UInt(report.float_candidates),
        Cell::Bool(report.exact_counterexample),
    ]);
    let summary = format!(
        "search-conjecture: trials={} seed={} min={} exact_counterexample={}\n",
        report.trials,
        run.seed,
        fmt_float(report.min_value),
        report.exact_counterexample
    );
    Ok(CmdOut {
        table,
        summary,
        exit: i32::from(report.exact_counterexample),
    })
}
