//! Command-line front end.
//!
//! Exit codes: `0` success, `1` a verification check failed, `2` invalid
//! input (flags, ranges or body files), `3` an output path could not be
//! written.
//!
//! The sweep CSV has the fixed header `alpha,c1,c2,d,lambda0`, where
//! `lambda0` is the homothety ratio of the maximizing truncated cone and is
//! written as `inf` when the maximizer is a cone with its apex down.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::bodies::{AnalyticProfile, Body, CutSpec, Direction, NumericProfile};
use crate::constants;
use crate::error::Error;
use crate::extremal;
use crate::json;
use crate::measure;
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNWRITABLE: i32 = 3;

/// Default number of knots when a symmetral has to be resampled.
pub const DEFAULT_KNOT_BUDGET: usize = 1025;

#[derive(Debug, Parser)]
#[command(name = "grunbaum", version, about = "Sharp bounds for off-centroid hyperplane cuts of convex bodies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print C1, C2 and D for one (n, alpha) as JSON.
    Constants {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = constants::DEFAULT_C2_TOL)]
        tol: f64,
    },
    /// Tabulate the constants on an evenly spaced alpha grid as CSV.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        alpha_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value_t = constants::DEFAULT_C2_TOL)]
        tol: f64,
    },
    /// Check the inequalities on a body file; prints JSON-lines reports.
    Verify {
        #[arg(long)]
        body: PathBuf,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        alpha: f64,
        /// Comma-separated components; defaults to the first axis.
        #[arg(long, allow_hyphen_values = true)]
        direction: Option<String>,
        #[arg(long, allow_hyphen_values = true, default_value_t = verify::EXACT_TOL)]
        tol: f64,
        /// Monte Carlo samples for the sampled cut-ratio check; 0 skips it.
        #[arg(long, default_value_t = 0)]
        mc_samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write an extremal body as a body file.
    Extremal {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
        /// Apex height of `double-cone`; defaults to the optimal height for `--alpha`.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<f64>,
        /// Top radius of `truncated-cone`; defaults to the maximizer for `--alpha`.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<f64>,
        #[arg(long, allow_hyphen_values = true, default_value_t = constants::DEFAULT_C2_TOL)]
        tol: f64,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the Schwarz symmetral of a body file as a profile.
    Symmetrize {
        #[arg(long)]
        body: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        direction: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_KNOT_BUDGET)]
        knot_budget: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    GrunbaumCone,
    ReflectedCone,
    DoubleCone,
    TruncatedCone,
    Lower,
    Upper,
    T5Cone,
}

/// A failure together with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = match &e {
            Error::InvalidBody(diags) => {
                let mut m = String::from("invalid body:");
                for d in diags {
                    let _ = write!(m, "\n  {d}");
                }
                m
            }
            other => other.to_string(),
        };
        Failure { code: EXIT_INVALID, message }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: message.into(),
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_INVALID
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Constants { n, alpha, tol } => cmd_constants(n, alpha, tol, stdout),
        Command::Sweep {
            n,
            alpha_min,
            alpha_max,
            steps,
            out,
            tol,
        } => cmd_sweep(n, alpha_min, alpha_max, steps, tol, &out),
        Command::Verify {
            body,
            alpha,
            direction,
            tol,
            mc_samples,
            seed,
        } => cmd_verify(&body, alpha, direction.as_deref(), tol, mc_samples, seed, stdout),
        Command::Extremal {
            kind,
            n,
            alpha,
            beta,
            lambda,
            tol,
            out,
        } => cmd_extremal(kind, n, alpha, beta, lambda, tol, out.as_deref(), stdout, stderr),
        Command::Symmetrize {
            body,
            direction,
            out,
            knot_budget,
        } => cmd_symmetrize(&body, direction.as_deref(), out.as_deref(), knot_budget, stdout),
    }
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> std::result::Result<(), Failure> {
    let unwritable = |p: &Path, e: std::io::Error| Failure {
        code: EXIT_UNWRITABLE,
        message: format!("cannot write {}: {e}", p.display()),
    };
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| unwritable(p, e)),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| unwritable(Path::new("<stdout>"), e)),
    }
}

/// Comma-separated reals, normalized; `None` gives the first axis.
pub fn parse_direction(text: Option<&str>, dim: usize) -> crate::error::Result<Direction> {
    let Some(text) = text else {
        return Direction::axis(dim, 0);
    };
    let coords = text
        .split(',')
        .map(|c| c.trim().parse::<f64>().map_err(|e| Error::Parse(format!("direction component {c:?}: {e}"))))
        .collect::<crate::error::Result<Vec<f64>>>()?;
    if coords.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: coords.len(),
        });
    }
    Direction::new(coords)
}

fn read_body(path: &Path) -> std::result::Result<Body, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    Ok(json::parse_body(&text)?)
}

fn cmd_constants(n: usize, alpha: f64, tol: f64, stdout: &mut dyn Write) -> CmdResult {
    let b = constants::bounds(alpha, n, tol)?;
    let c2 = &b.c2;
    let lambda = c2.argmax_lambda.is_finite().then_some(c2.argmax_lambda);
    let v = json!({
        "n": n,
        "alpha": alpha,
        "c1": b.c1,
        "c2": c2.value,
        "c2_argmax_lambda": lambda,
        "d": b.d,
        "method": c2.method.as_str(),
    });
    emit(None, &format!("{v}\n"), stdout)?;
    Ok(EXIT_OK)
}

/// `steps` evenly spaced values from `lo` to `hi` inclusive.
fn alpha_grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![lo];
    }
    let h = (hi - lo) / (steps - 1) as f64;
    (0..steps)
        .map(|i| if i + 1 == steps { hi } else { lo + h * i as f64 })
        .collect()
}

/// CSV rows for the sweep, header included.
pub fn sweep_csv(n: usize, alpha_min: f64, alpha_max: f64, steps: usize, tol: f64) -> crate::error::Result<String> {
    let nf = n as f64;
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    if !(alpha_min > -1.0 && alpha_min < alpha_max && alpha_max < nf) {
        return Err(Error::OutOfRange {
            name: "alpha range",
            value: alpha_max,
            expected: "-1 < alpha_min < alpha_max < n",
        });
    }
    if steps == 0 {
        return Err(Error::OutOfRange {
            name: "steps",
            value: 0.0,
            expected: "steps >= 1",
        });
    }
    let rows = alpha_grid(alpha_min, alpha_max, steps)
        .par_iter()
        .map(|&a| {
            let b = constants::bounds(a, n, tol)?;
            let l = b.c2.argmax_lambda;
            let l = if l.is_finite() { l.to_string() } else { "inf".to_string() };
            Ok(format!("{a},{},{},{},{l}\n", b.c1, b.c2.value, b.d))
        })
        .collect::<crate::error::Result<Vec<String>>>()?;
    let mut csv = String::from("alpha,c1,c2,d,lambda0\n");
    rows.iter().for_each(|r| csv.push_str(r));
    Ok(csv)
}

fn cmd_sweep(n: usize, alpha_min: f64, alpha_max: f64, steps: usize, tol: f64, out: &Path) -> CmdResult {
    let csv = sweep_csv(n, alpha_min, alpha_max, steps, tol)?;
    emit(Some(out), &csv, &mut std::io::sink())?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    path: &Path,
    alpha: f64,
    direction: Option<&str>,
    tol: f64,
    mc_samples: u64,
    seed: u64,
    stdout: &mut dyn Write,
) -> CmdResult {
    let body = read_body(path)?;
    let dir = parse_direction(direction, body.dim())?;
    let cut = CutSpec::new(dir, alpha)?;
    let reports = verify::verify_body(&body, &cut, tol, mc_samples, seed)?;
    emit(None, &json::reports_to_lines(&reports), stdout)?;
    Ok(if reports.iter().all(|r| r.pass) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn need_alpha(alpha: Option<f64>, kind: &str) -> std::result::Result<f64, Failure> {
    alpha.ok_or_else(|| invalid(format!("--alpha is required for {kind}")))
}

#[allow(clippy::too_many_arguments)]
fn cmd_extremal(
    kind: Kind,
    n: usize,
    alpha: Option<f64>,
    beta: Option<f64>,
    lambda: Option<f64>,
    tol: f64,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CmdResult {
    let profile = match kind {
        Kind::GrunbaumCone => extremal::grunbaum_cone(n)?,
        Kind::ReflectedCone => extremal::reflected_grunbaum_cone(n)?,
        Kind::DoubleCone => {
            let beta = match beta {
                Some(b) => b,
                None => constants::beta0(need_alpha(alpha, "double-cone without --beta")?, n)?,
            };
            extremal::double_cone(beta, n)?
        }
        Kind::TruncatedCone => {
            let lambda = match lambda {
                Some(l) => l,
                None => {
                    let a = need_alpha(alpha, "truncated-cone without --lambda")?;
                    constants::c2(a, n, tol)?.argmax_lambda
                }
            };
            extremal::truncated_cone(lambda, n)?
        }
        Kind::Lower => extremal::lower_extremizer(need_alpha(alpha, "lower")?, n)?,
        Kind::Upper => extremal::upper_extremizer(need_alpha(alpha, "upper")?, n, tol)?,
        Kind::T5Cone => {
            let a = need_alpha(alpha, "t5-cone")?;
            CutSpec::new(Direction::axis(n.max(2), 0)?, a)?;
            if n >= 2 && a > 1.0 / n as f64 {
                let _ = writeln!(
                    stderr,
                    "note: D({a}, {n}) = 0 and no cone attains it; writing the reflected cone"
                );
                extremal::reflected_grunbaum_cone(n)?
            } else {
                extremal::theorem5_equality_cone(a, n)?
            }
        }
    };
    let text = json::body_to_json(&Body::Profile(profile))?;
    emit(out, &format!("{text}\n"), stdout)?;
    Ok(EXIT_OK)
}

/// Piecewise-linear profile through the symmetral radius at the breakpoints
/// and on a uniform grid of `knot_budget` heights, replaced by its least
/// concave majorant.
pub fn resample(p: &NumericProfile, knot_budget: usize) -> crate::error::Result<AnalyticProfile> {
    let (lo, hi) = (p.t_min(), p.t_max());
    let budget = knot_budget.max(2);
    let mut ts: Vec<f64> = (0..budget)
        .map(|i| lo + (hi - lo) * i as f64 / (budget - 1) as f64)
        .chain(p.breakpoints().iter().copied())
        .filter(|t| (lo..=hi).contains(t))
        .collect();
    ts.push(hi);
    ts.sort_by(f64::total_cmp);
    ts.dedup_by(|a, b| (*a - *b).abs() <= 1e-14 * (hi - lo));
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(ts.len());
    for (t, r) in ts.into_iter().map(|t| (t, p.radius_at(t))) {
        while let [.., (t0, r0), (t1, r1)] = hull[..] {
            if (t1 - t0) * (r - r0) - (r1 - r0) * (t - t0) >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((t, r));
    }
    AnalyticProfile::new(p.dim(), hull)
}

fn cmd_symmetrize(
    path: &Path,
    direction: Option<&str>,
    out: Option<&Path>,
    knot_budget: usize,
    stdout: &mut dyn Write,
) -> CmdResult {
    let body = read_body(path)?;
    let dir = parse_direction(direction, body.dim())?;
    let profile = match measure::schwarz_symmetral(&body, &dir)? {
        Body::Profile(p) => p,
        Body::Numeric(p) => resample(&p, knot_budget)?,
        Body::Polytope(_) => unreachable!("symmetrals are bodies of revolution"),
    };
    let text = json::body_to_json(&Body::Profile(profile))?;
    emit(out, &format!("{text}\n"), stdout)?;
    Ok(EXIT_OK)
}
