//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 for argument errors, 1 for numerical failure.
//! All numeric output is the shortest round-trip decimal form of the
//! underlying binary64 value, so identical invocations are byte-identical.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hermite_zeros::{
    asymptotic, comparison, hermite,
    quadrature::{self, NodeSource},
    solver, Error, Method, Parity, SolverConfig,
};

#[derive(Parser)]
#[command(
    name = "hermite-zeros",
    version,
    about = "Hermite polynomial zeros from equal-area circle partitions, with exact refinement and Gauss-Hermite quadrature"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the segment equation theta + sin(theta) = M for theta.
    Solve {
        /// Area measure M in [0, pi].
        #[arg(long)]
        m: f64,
    },
    /// Print the zero set of H_n.
    Zeros {
        /// Polynomial degree.
        #[arg(long)]
        n: u32,
        /// Zero construction: circle-partition estimates or refined zeros.
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Emit the approximate-vs-exact zero table over a degree sweep.
    Compare {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = ParityArg::Both)]
        parity: ParityArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Write to this path (atomically) instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Append per-degree min/max/mean abs_err lines prefixed with '#'.
        #[arg(long)]
        summary: bool,
    },
    /// Build a Gauss-Hermite rule and integrate a test function.
    Quad {
        /// Node count.
        #[arg(long)]
        n: u32,
        /// Node source for the rule.
        #[arg(long, value_enum)]
        nodes: NodesArg,
        /// Test integrand family (weight exp(-x^2) is implicit).
        #[arg(long, value_enum)]
        integrand: IntegrandArg,
        /// Monomial degree k, cosine frequency a, or exponential rate b.
        #[arg(long)]
        param: f64,
    },
    /// Print the spin-system disk: radius and q-basis cell boundaries.
    Spin {
        /// Spin S; 2S must be a positive integer.
        #[arg(long)]
        s: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Asymptotic,
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
    Both,
}

impl From<ParityArg> for Parity {
    fn from(value: ParityArg) -> Self {
        match value {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
            ParityArg::Both => Parity::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum NodesArg {
    Exact,
    Asymptotic,
}

#[derive(Clone, Copy, ValueEnum)]
enum IntegrandArg {
    Monomial,
    Cos,
    Exp,
}

/// Top-level failure: a message plus the exit code it maps to.
struct Failure {
    message: String,
    code: u8,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure {
            code: if err.is_usage() { 2 } else { 1 },
            message: err.to_string(),
        }
    }
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 2,
        }
    }

    fn io(err: std::io::Error) -> Self {
        Failure {
            message: format!("i/o error: {err}"),
            code: 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    let config = SolverConfig::default();
    match command {
        Command::Solve { m } => {
            let theta = solver::invert_segment_area(m, &config)?;
            let residual = theta + theta.sin() - m.clamp(0.0, std::f64::consts::PI);
            Ok(format!("theta = {theta}\nresidual = {residual}\n"))
        }
        Command::Zeros { n, method, format } => zeros_output(n, method, format, &config),
        Command::Compare {
            n_min,
            n_max,
            parity,
            format,
            out,
            summary,
        } => {
            if n_min < 1 || n_min > n_max {
                return Err(Failure::usage(format!(
                    "require 1 <= n-min <= n-max (got {n_min}..{n_max})"
                )));
            }
            if summary && matches!(format, FormatArg::Json) {
                return Err(Failure::usage(
                    "--summary is only available with csv output",
                ));
            }
            let rows = comparison::sweep(n_min, n_max, parity.into(), &config)?;
            let rendered = match format {
                FormatArg::Csv => comparison::to_csv(&rows, summary),
                FormatArg::Json => {
                    let mut s = comparison::to_json(&rows);
                    s.push('\n');
                    s
                }
            };
            match out {
                Some(path) => {
                    write_atomically(&path, &rendered).map_err(Failure::io)?;
                    Ok(String::new())
                }
                None => Ok(rendered),
            }
        }
        Command::Quad {
            n,
            nodes,
            integrand,
            param,
        } => quad_output(n, nodes, integrand, param, &config),
        Command::Spin { s } => {
            let domain = asymptotic::spin_domain(s, &config)?;
            let mut out = String::new();
            let _ = writeln!(out, "S = {}", domain.spin);
            let _ = writeln!(out, "n = {}", domain.n);
            let _ = writeln!(out, "radius = {}", domain.radius);
            let _ = writeln!(out, "boundaries:");
            for b in &domain.boundaries {
                let _ = writeln!(out, "{b}");
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct AsymptoticZeroRow {
    n: u32,
    j: u32,
    #[serde(rename = "M")]
    m: f64,
    theta: f64,
    x: f64,
}

#[derive(Serialize)]
struct ExactZeroRow {
    n: u32,
    j: u32,
    x: f64,
}

fn zeros_output(
    n: u32,
    method: MethodArg,
    format: FormatArg,
    config: &SolverConfig,
) -> Result<String, Failure> {
    match method {
        MethodArg::Asymptotic => {
            let estimates = asymptotic::positive_estimates(n, config)?;
            // One row per zero, ascending: mirrored negatives first, then
            // the nonnegative estimates; mirrors keep j, M and theta.
            let mut rows: Vec<AsymptoticZeroRow> = estimates
                .iter()
                .rev()
                .filter(|e| e.x > 0.0)
                .map(|e| AsymptoticZeroRow {
                    n,
                    j: e.j,
                    m: e.m,
                    theta: e.theta,
                    x: -e.x,
                })
                .collect();
            rows.extend(estimates.iter().map(|e| AsymptoticZeroRow {
                n,
                j: e.j,
                m: e.m,
                theta: e.theta,
                x: e.x,
            }));
            match format {
                FormatArg::Csv => {
                    let mut out = String::from("n,j,M,theta,x\n");
                    for r in &rows {
                        let _ = writeln!(out, "{},{},{},{},{}", r.n, r.j, r.m, r.theta, r.x);
                    }
                    Ok(out)
                }
                FormatArg::Json => Ok(format!(
                    "{}\n",
                    serde_json::to_string(&rows).expect("rows serialize infallibly")
                )),
            }
        }
        MethodArg::Exact => {
            let set = hermite::exact_zero_set(n, config)?;
            debug_assert_eq!(set.method, Method::Exact);
            let rows: Vec<ExactZeroRow> = set
                .values
                .iter()
                .enumerate()
                .map(|(rank, &x)| ExactZeroRow {
                    n,
                    j: asymptotic::center_out_index(n, rank),
                    x,
                })
                .collect();
            match format {
                FormatArg::Csv => {
                    let mut out = String::from("n,j,x\n");
                    for r in &rows {
                        let _ = writeln!(out, "{},{},{}", r.n, r.j, r.x);
                    }
                    Ok(out)
                }
                FormatArg::Json => Ok(format!(
                    "{}\n",
                    serde_json::to_string(&rows).expect("rows serialize infallibly")
                )),
            }
        }
    }
}

fn quad_output(
    n: u32,
    nodes: NodesArg,
    integrand: IntegrandArg,
    param: f64,
    config: &SolverConfig,
) -> Result<String, Failure> {
    if n == 0 {
        return Err(Failure::usage("quad requires --n >= 1"));
    }
    let source = match nodes {
        NodesArg::Exact => NodeSource::ExactNodes,
        NodesArg::Asymptotic => NodeSource::AsymptoticNodes,
    };
    let rule = quadrature::build_rule(n, source, config)?;

    let (label, result, reference) = match integrand {
        IntegrandArg::Monomial => {
            if !(param.is_finite() && param >= 0.0 && param == param.round() && param <= 1000.0) {
                return Err(Failure::usage(
                    "monomial degree --param must be an integer in 0..=1000",
                ));
            }
            let k = param as u32;
            let result = quadrature::integrate(&rule, |x| x.powi(k as i32));
            (format!("x^{k}"), result, quadrature::gaussian_moment(k))
        }
        IntegrandArg::Cos => {
            if !param.is_finite() {
                return Err(Failure::usage("cosine frequency --param must be finite"));
            }
            let result = quadrature::integrate(&rule, |x| (param * x).cos());
            (
                format!("cos({param}*x)"),
                result,
                quadrature::cosine_reference(param),
            )
        }
        IntegrandArg::Exp => {
            if !param.is_finite() {
                return Err(Failure::usage("exponential rate --param must be finite"));
            }
            let result = quadrature::integrate(&rule, |x| (param * x).exp());
            (
                format!("exp({param}*x)"),
                result,
                quadrature::exponential_reference(param),
            )
        }
    };

    let mut out = String::from("node,weight\n");
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        let _ = writeln!(out, "{x},{w}");
    }
    let _ = writeln!(out, "# integrand {label}");
    let _ = writeln!(out, "# result {result}");
    let _ = writeln!(out, "# reference {reference}");
    let _ = writeln!(out, "# abs_error {}", (result - reference).abs());
    Ok(out)
}

/// Writes via a temp file in the target directory and renames into place, so
/// a failed run leaves no partial output.
fn write_atomically(path: &Path, contents: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)
}
