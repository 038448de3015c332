//! `hosoya` - exact calculator for the Hosoya triangle and the matrix
//! families embedded in it.
//!
//! Exit codes: 0 success (and all identity checks equal), 1 when a
//! verification sweep finds a mismatch, 2 on usage errors. Data goes to
//! stdout, diagnostics to stderr; numbers are always exact decimal strings.

mod render;

use std::fmt;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hosoya_core::eigen::{antidiagonal_eigen, eigen_report_json, rank_one_eigen, EigenPair};
use hosoya_core::graph::{adjacency_graph, components, structure_check, to_dot};
use hosoya_core::identities::{verify_range, IdentityCheck, RangeSpec};
use hosoya_core::triangle::{render_centered, rows_json, rows_strings};
use hosoya_core::{
    antidiagonal, backslash_matrix, persymmetric, skew_band, Error as CoreError, ExactMatrix,
    SeedPair,
};

#[derive(Parser)]
#[command(
    name = "hosoya",
    version,
    about = "Exact calculator for the Hosoya triangle and its matrix families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first rows of the triangle.
    Triangle {
        rows: i64,
        /// Seed values a b generalizing the first two rows.
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
        seed: Option<Vec<i64>>,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Construct a matrix family member and print it exactly.
    Matrix {
        /// One of: backslash, persymmetric, antidiagonal, skewband.
        family: String,
        /// backslash: m n t - persymmetric: n - antidiagonal: n - skewband: n lo
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Exact eigenvalues and eigenvectors of a family member.
    Eigen {
        /// One of: backslash, persymmetric, antidiagonal.
        family: String,
        /// backslash: m n t - persymmetric: n - antidiagonal: n
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Verify a named identity over a parameter grid.
    Verify {
        /// One of: trace, lemma1a, lemma1b, norms, det_sign, graph.
        identity: String,
        #[arg(long, default_value_t = 10)]
        max_n: i64,
        /// Bound for the third parameter where one is swept (default: max-n).
        #[arg(long)]
        max_t: Option<i64>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Export the loop-graph of B(n) mod 2.
    Graph {
        n: i64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Check the complete-graph-plus-isolated-vertices structure
        /// (defined for n = 3k+2).
        #[arg(long)]
        check: bool,
    },
}

enum AppError {
    Usage(String),
    Core(CoreError),
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Usage(msg) => write!(f, "{msg}"),
            AppError::Core(err) => write!(f, "{err}"),
        }
    }
}

impl From<CoreError> for AppError {
    fn from(err: CoreError) -> Self {
        AppError::Core(err)
    }
}

fn usage(msg: impl Into<String>) -> AppError {
    AppError::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// Exit code for a verification outcome: 0 all equal, 1 otherwise.
fn exit_code_for_checks(checks: &[IdentityCheck]) -> ExitCode {
    if checks.iter().all(IdentityCheck::is_equal) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn expect_params<const N: usize>(
    family: &str,
    names: &str,
    params: &[i64],
) -> Result<[i64; N], AppError> {
    params.try_into().map_err(|_| {
        usage(format!(
            "family {family:?} takes {N} parameter(s) ({names}), got {}",
            params.len()
        ))
    })
}

fn build_matrix(family: &str, params: &[i64]) -> Result<ExactMatrix, AppError> {
    match family {
        "backslash" => {
            let [m, n, t] = expect_params::<3>(family, "m n t", params)?;
            Ok(backslash_matrix(m, n, t)?)
        }
        "persymmetric" => {
            let [n] = expect_params::<1>(family, "n", params)?;
            Ok(persymmetric(n)?)
        }
        "antidiagonal" => {
            let [n] = expect_params::<1>(family, "n", params)?;
            Ok(antidiagonal(n)?)
        }
        "skewband" => {
            let [n, lo] = expect_params::<2>(family, "n lo", params)?;
            Ok(skew_band(n, lo)?)
        }
        other => Err(usage(format!(
            "unknown matrix family {other:?}; expected backslash, persymmetric, antidiagonal or skewband"
        ))),
    }
}

fn build_eigen(family: &str, params: &[i64]) -> Result<Vec<EigenPair>, AppError> {
    match family {
        "backslash" => {
            let [m, n, t] = expect_params::<3>(family, "m n t", params)?;
            Ok(rank_one_eigen(m, n, t)?)
        }
        "persymmetric" => {
            let [n] = expect_params::<1>(family, "n", params)?;
            Ok(rank_one_eigen(1, n, n)?)
        }
        "antidiagonal" => {
            let [n] = expect_params::<1>(family, "n", params)?;
            Ok(antidiagonal_eigen(n)?)
        }
        other => Err(usage(format!(
            "unknown eigen family {other:?}; expected backslash, persymmetric or antidiagonal"
        ))),
    }
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON serialization cannot fail")
}

fn run(command: Command) -> Result<ExitCode, AppError> {
    match command {
        Command::Triangle { rows, seed, format } => {
            let seed = match seed {
                Some(values) => SeedPair::from_i64(values[0], values[1])?,
                None => SeedPair::classic(),
            };
            let table = rows_strings(&seed, rows)?;
            match format {
                TableFormat::Text => print!("{}", render_centered(&table)),
                TableFormat::Json => println!("{}", pretty(&rows_json(&table))),
                TableFormat::Csv => print!("{}", render::triangle_csv(&table)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Matrix {
            family,
            params,
            format,
        } => {
            let matrix = build_matrix(&family, &params)?;
            match format {
                TableFormat::Text => print!("{}", render::matrix_text(&matrix)),
                TableFormat::Json => println!("{}", pretty(&matrix.to_json())),
                TableFormat::Csv => print!("{}", render::matrix_csv(&matrix)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eigen {
            family,
            params,
            format,
        } => {
            let pairs = build_eigen(&family, &params)?;
            match format {
                ReportFormat::Text => print!("{}", render::eigen_text(&pairs)),
                ReportFormat::Json => println!("{}", pretty(&eigen_report_json(&pairs))),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            identity,
            max_n,
            max_t,
            format,
        } => {
            let checks = verify_range(&RangeSpec {
                identity,
                max_n,
                max_t,
            })?;
            match format {
                ReportFormat::Text => print!("{}", render::verify_text(&checks)),
                ReportFormat::Json => {
                    let report: Vec<serde_json::Value> =
                        checks.iter().map(IdentityCheck::to_json).collect();
                    println!("{}", pretty(&serde_json::Value::Array(report)));
                }
            }
            Ok(exit_code_for_checks(&checks))
        }
        Command::Graph { n, format, check } => {
            if check {
                if n < 1 || n % 3 != 2 {
                    return Err(usage(format!(
                        "--check applies to n = 3k+2 only (the structure theorem's scope), got n = {n}"
                    )));
                }
                let result = structure_check(n)?;
                match format {
                    GraphFormat::Dot => print!("{}", render::check_text(&result)),
                    GraphFormat::Json => println!("{}", pretty(&result.to_json())),
                }
                return Ok(exit_code_for_checks(std::slice::from_ref(&result)));
            }
            let graph = adjacency_graph(n).map_err(|err| match err {
                CoreError::AsymmetricAdjacency { .. } => usage(format!(
                    "B({n}) mod 2 is not symmetric, so it is not an undirected adjacency \
                     matrix; the graph family exists for n = 3k+2"
                )),
                other => AppError::Core(other),
            })?;
            match format {
                GraphFormat::Dot => print!("{}", to_dot(&graph)),
                GraphFormat::Json => println!("{}", pretty(&components(&graph).to_json())),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
