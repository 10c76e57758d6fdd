//! Command-line front end: prints the sharp length/modulus constant, runs
//! grid verification suites, sweeps quantities to CSV or JSON, evaluates
//! ratios for user-supplied atomic measures, and probes sharpness along the
//! extremal map.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 numerical failure. Machine-readable output goes to stdout (or `--out`),
//! human summaries to stderr.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hallgh_core::hall::{self, HallError, VerificationReport};
use hallgh_core::quadrature::{self, QuadConfig, QuadError};
use hallgh_core::specfun::{self, OrderAlpha};
use hallgh_core::starlike::{self, StarlikeError};

use std::f64::consts::PI;

#[derive(Parser)]
#[command(name = "hallgh", version, about = "Numerical verification of the sharp Gehring-Hayman constant for starlike maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print beta(alpha), the crude bound 1 + (1-alpha) (log 4)^alpha, and
    /// their gap.
    Constant {
        #[arg(long)]
        alpha: f64,
    },
    /// Run a verification suite; JSON report to stdout, summary to stderr.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Order parameter (used by the main suite only).
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        /// Grid points per axis; default depends on the suite.
        #[arg(long)]
        grid: Option<usize>,
        /// Worst-margin tolerance; default depends on the suite.
        #[arg(long)]
        tol: Option<f64>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep a quantity over a parameter grid.
    Sweep {
        /// main: rows alpha,s,t,I_sum,bound,margin over an (s,t) grid.
        /// u: rows alpha,a,U,G_gamma_at_1 over an a grid.
        /// g1: rows a,G1 over an a grid (alpha-independent).
        #[arg(long, value_enum, default_value_t = What::Main)]
        what: What,
        /// Comma-separated list (`0,0.25,0.5`) or range (`start:stop:count`).
        #[arg(long, default_value = "0.5")]
        alphas: String,
        /// Grid points per axis.
        #[arg(long, default_value_t = 20)]
        grid: usize,
        /// Quadrature tolerance for each row.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Evaluate the length/modulus ratio for a measure loaded from JSON
    /// (schema: {"alpha": a, "atoms": [{"t": angle, "w": weight}, ...]}).
    Ratio {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        r: f64,
        #[arg(long)]
        theta: f64,
    },
    /// Tabulate the extremal boundary limit for T geometric from 1 down to
    /// T_min, alongside beta(alpha).
    Sharpness {
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 1e-6)]
        t_min: f64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Lemma2,
    Lemma3,
    Lemma4,
    Lemma5,
    Main,
    All,
}

impl Suite {
    fn default_grid(self) -> usize {
        match self {
            Suite::Lemma2 => 50,
            Suite::Lemma3 => 20,
            Suite::Lemma4 => 1000,
            Suite::Lemma5 => 19,
            Suite::Main => 30,
            Suite::All => unreachable!("expanded before lookup"),
        }
    }

    fn default_tol(self) -> f64 {
        match self {
            Suite::Lemma2 => 1e-12,
            Suite::Lemma3 => 1e-8,
            Suite::Lemma4 => 1e-12,
            Suite::Lemma5 => 1e-8,
            Suite::Main => 1e-6,
            Suite::All => unreachable!("expanded before lookup"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Main,
    U,
    G1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Parameters of one sweep run, assembled from the command line.
struct SweepSpec {
    alphas: Vec<f64>,
    grid: usize,
    tol: f64,
    out: Option<PathBuf>,
    format: Format,
}

enum Failure {
    /// Margins violated the tolerance; details already on stderr.
    Verification,
    Usage(String),
    Numerical(String),
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn from_quad(q: QuadError) -> Failure {
    match q {
        QuadError::InvalidTolerance(_)
        | QuadError::InvalidInterval(..)
        | QuadError::InvalidExponent(_) => usage(q.to_string()),
        _ => Failure::Numerical(q.to_string()),
    }
}

fn from_starlike(e: StarlikeError) -> Failure {
    match e {
        StarlikeError::Quad(q) => from_quad(q),
        StarlikeError::DegenerateModulus => Failure::Numerical(e.to_string()),
        other => usage(other.to_string()),
    }
}

fn from_hall(e: HallError) -> Failure {
    match e {
        HallError::Quad(q) => from_quad(q),
        HallError::Starlike(s) => from_starlike(s),
        other => usage(other.to_string()),
    }
}

fn parse_order(alpha: f64) -> Result<OrderAlpha, Failure> {
    OrderAlpha::new(alpha).map_err(|e| usage(e.to_string()))
}

/// 15 significant digits, the CSV/table number format.
fn fmt15(x: f64) -> String {
    format!("{x:.14e}")
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
    }
}

fn main() -> ExitCode {
    if let Some(budget) = std::env::var_os("HALLGH_MAX_EVALS") {
        match budget.to_str().and_then(|s| s.trim().parse::<u64>().ok()) {
            Some(v) if v > 0 => quadrature::set_default_max_evals(v),
            _ => {
                eprintln!("error: HALLGH_MAX_EVALS must be a positive integer, got {budget:?}");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Constant { alpha } => cmd_constant(alpha),
        Command::Verify { suite, alpha, grid, tol, out } => {
            cmd_verify(suite, alpha, grid, tol, out.as_deref())
        }
        Command::Sweep { what, alphas, grid, tol, out, format } => {
            let alphas = match parse_alphas(&alphas) {
                Ok(v) => v,
                Err(f) => return fail(f),
            };
            cmd_sweep(what, &SweepSpec { alphas, grid, tol, out, format })
        }
        Command::Ratio { measure, r, theta } => cmd_ratio(&measure, r, theta),
        Command::Sharpness { alpha, t_min } => cmd_sharpness(alpha, t_min),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> ExitCode {
    match f {
        Failure::Verification => ExitCode::from(1),
        Failure::Usage(m) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Failure::Numerical(m) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

fn cmd_constant(alpha: f64) -> Result<(), Failure> {
    let order = parse_order(alpha)?;
    let beta = specfun::hall_constant(order);
    let crude = specfun::hall_crude_bound(order);
    println!("alpha  {}", fmt15(alpha));
    println!("beta   {}", fmt15(beta));
    println!("crude  {}", fmt15(crude));
    println!("gap    {}", fmt15(crude - beta));
    Ok(())
}

fn cmd_verify(
    suite: Suite,
    alpha: f64,
    grid: Option<usize>,
    tol: Option<f64>,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let order = parse_order(alpha)?;
    let suites: &[Suite] = match suite {
        Suite::All => &[Suite::Lemma2, Suite::Lemma3, Suite::Lemma4, Suite::Lemma5, Suite::Main],
        _ => std::slice::from_ref(&suite),
    };
    let mut reports: Vec<VerificationReport> = Vec::with_capacity(suites.len());
    for &s in suites {
        let g = grid.unwrap_or_else(|| s.default_grid());
        let t = tol.unwrap_or_else(|| s.default_tol());
        let report = match s {
            Suite::Lemma2 => hall::verify_lemma2(g, t),
            Suite::Lemma3 => hall::verify_lemma3(g, t),
            Suite::Lemma4 => hall::verify_lemma4(g, t),
            Suite::Lemma5 => hall::verify_lemma5(g, t),
            Suite::Main => hall::verify_main_claim(order, g, t),
            Suite::All => unreachable!(),
        }
        .map_err(from_hall)?;
        eprintln!("{report}");
        reports.push(report);
    }
    let json = if reports.len() == 1 {
        serde_json::to_string_pretty(&reports[0])
    } else {
        serde_json::to_string_pretty(&reports)
    }
    .expect("report serialization cannot fail");
    emit(out, &format!("{json}\n"))?;
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn parse_alphas(text: &str) -> Result<Vec<f64>, Failure> {
    let bad = |t: &str| usage(format!("cannot parse alpha list {t:?}"));
    let values: Vec<f64> = if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        let [start, stop, count] = parts[..] else {
            return Err(bad(text));
        };
        let start: f64 = start.trim().parse().map_err(|_| bad(text))?;
        let stop: f64 = stop.trim().parse().map_err(|_| bad(text))?;
        let count: usize = count.trim().parse().map_err(|_| bad(text))?;
        if count == 0 {
            return Err(bad(text));
        }
        if count == 1 {
            vec![start]
        } else {
            (0..count)
                .map(|i| start + (stop - start) * i as f64 / (count - 1) as f64)
                .collect()
        }
    } else {
        text.split(',')
            .map(|p| p.trim().parse::<f64>().map_err(|_| bad(text)))
            .collect::<Result<_, _>>()?
    };
    for &a in &values {
        if !a.is_finite() || !(0.0..1.0).contains(&a) {
            return Err(usage(format!("alpha must lie in [0, 1), got {a}")));
        }
    }
    Ok(values)
}

fn cmd_sweep(what: What, spec: &SweepSpec) -> Result<(), Failure> {
    if spec.grid < 2 {
        return Err(usage(format!("grid size must be at least 2, got {}", spec.grid)));
    }
    if !spec.tol.is_finite() || spec.tol <= 0.0 {
        return Err(usage(format!("tolerance must be positive, got {}", spec.tol)));
    }
    let (header, rows) = sweep_rows(what, spec)?;
    let text = match spec.format {
        Format::Csv => {
            let mut text = header.join(",");
            text.push('\n');
            for row in &rows {
                let cells: Vec<String> = row.iter().map(|&x| fmt15(x)).collect();
                let _ = writeln!(text, "{}", cells.join(","));
            }
            text
        }
        Format::Json => {
            let objects: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    header
                        .iter()
                        .zip(row)
                        .map(|(k, v)| (k.to_string(), serde_json::json!(v)))
                        .collect::<serde_json::Map<_, _>>()
                        .into()
                })
                .collect();
            let mut text = serde_json::to_string_pretty(&objects)
                .expect("row serialization cannot fail");
            text.push('\n');
            text
        }
    };
    emit(spec.out.as_deref(), &text)?;
    eprintln!("{} rows", rows.len());
    Ok(())
}

fn sweep_rows(what: What, spec: &SweepSpec) -> Result<(Vec<&'static str>, Vec<Vec<f64>>), Failure> {
    let n = spec.grid;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let header: Vec<&'static str> = match what {
        What::Main => {
            for &alpha in &spec.alphas {
                let order = parse_order(alpha)?;
                let bound = 2.0 * (specfun::hall_constant(order) - 1.0);
                for i in 1..=n {
                    for j in 1..=n {
                        let s = PI * i as f64 / (n as f64 + 1.0);
                        let t = PI * j as f64 / (n as f64 + 1.0);
                        let sum = hall::i_angles(s, t, order, spec.tol).map_err(from_hall)?
                            + hall::i_angles(t, s, order, spec.tol).map_err(from_hall)?;
                        rows.push(vec![alpha, s, t, sum, bound, bound - sum]);
                    }
                }
            }
            vec!["alpha", "s", "t", "I_sum", "bound", "margin"]
        }
        What::U => {
            for &alpha in &spec.alphas {
                let order = parse_order(alpha)?;
                let gamma = order.gamma_param();
                let at_one = hall::g_gamma(1.0, gamma, spec.tol).map_err(from_hall)?;
                for i in 1..=n {
                    let a = i as f64 / n as f64;
                    let u = hall::upper_bound_u(a, gamma, spec.tol).map_err(from_hall)?;
                    rows.push(vec![alpha, a, u, at_one]);
                }
            }
            vec!["alpha", "a", "U", "G_gamma_at_1"]
        }
        What::G1 => {
            for i in 1..=n {
                let a = i as f64 / (n as f64 + 1.0);
                rows.push(vec![a, hall::g1_closed(a).map_err(from_hall)?]);
            }
            vec!["a", "G1"]
        }
    };
    Ok((header, rows))
}

fn cmd_ratio(measure: &Path, r: f64, theta: f64) -> Result<(), Failure> {
    let text = std::fs::read_to_string(measure)
        .map_err(|e| usage(format!("cannot read {}: {e}", measure.display())))?;
    let load = starlike::load_measure_json(&text).map_err(from_starlike)?;
    if load.renormalization_warning {
        return Err(usage(format!(
            "measure weights sum to {} (off from 1 by more than 1e-6); \
             fix the file rather than relying on renormalization",
            load.raw_weight_sum
        )));
    }
    if !r.is_finite() || r <= 0.0 || r >= 1.0 {
        return Err(usage(format!("r must lie in (0, 1), got {r}")));
    }
    if !theta.is_finite() {
        return Err(usage(format!("theta must be finite, got {theta}")));
    }
    let map = &load.map;
    let cfg = QuadConfig::default();
    let ell = map.ray_length_cfg(r, theta, &cfg).map_err(from_starlike)?;
    let modulus = map.abs_map_polar(r, theta);
    if modulus < 1e-300 {
        return Err(Failure::Numerical(format!("map modulus underflowed at r={r}, theta={theta}")));
    }
    let ratio = ell / modulus;
    let beta = specfun::hall_constant(map.order());
    println!("ell      {}", fmt15(ell));
    println!("modulus  {}", fmt15(modulus));
    println!("ratio    {}", fmt15(ratio));
    println!("beta     {}", fmt15(beta));
    println!("slack    {}", fmt15(beta - ratio));
    Ok(())
}

fn cmd_sharpness(alpha: f64, t_min: f64) -> Result<(), Failure> {
    let order = parse_order(alpha)?;
    if !t_min.is_finite() || t_min <= 0.0 || t_min > 1.0 {
        return Err(usage(format!("T_min must lie in (0, 1], got {t_min}")));
    }
    let gamma = order.gamma_param();
    let beta = specfun::hall_constant(order);
    println!("T,extremal_limit,beta,gap");
    let mut last = (1.0, beta);
    for k in 0.. {
        let t = 10f64.powi(-k);
        if t < t_min * (1.0 - 1e-9) {
            break;
        }
        let v = hall::extremal_limit(t, gamma, 1e-10).map_err(from_hall)?;
        println!("{},{},{},{}", fmt15(t), fmt15(v), fmt15(beta), fmt15(beta - v));
        last = (t, v);
    }
    eprintln!(
        "extremal limit at T={:.1e} is {:.9}; beta(alpha) = {:.9}",
        last.0, last.1, beta
    );
    Ok(())
}
