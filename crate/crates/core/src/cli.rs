//! Command-line front end: generate graphs, compute and compare series,
//! emit results as text or JSON.
//!
//! Exit codes: 0 success, 1 validation/computation error, 2 usage error,
//! 3 method disagreement from `check`. Identical inputs produce
//! byte-identical outputs.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    gen_boolean, gen_complete, gen_subspace, parse_graph, serialize_graph, GenError, GraphError,
    LayeredGraph, ParseError,
};
use crate::hilbert::{
    closed_complete, closed_lnq, closed_qn, dual_series, hilbert_series_with_method,
    CompleteSpec, HilbertError, Method, DEFAULT_CHAIN_CAP, DEFAULT_TRUNCATION,
};
use crate::oracle::count_words;
use crate::series::{IntPoly, IntSeries, RationalFn};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

#[derive(Parser)]
#[command(
    name = "lhilbert",
    version,
    about = "Exact Hilbert series of graded algebras attached to layered graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a built-in graph family as a graph file
    Gen {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// Compute the Hilbert series of a graph file
    Series {
        /// Graph file to read
        file: PathBuf,
        /// Truncation degree of the reported series
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Mobius)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Closed-form series for a built-in family
    Closed {
        #[command(subcommand)]
        form: ClosedCmd,
    },
    /// Koszul-dual series of a graph file
    Dual {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Run every method on a graph file and compare coefficients
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        degree: usize,
    },
    /// Validate a graph file and report its shape
    Info { file: PathBuf },
}

#[derive(Args)]
struct GenOut {
    /// Write the graph file here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Subset lattice of {1,...,n}
    Boolean {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=20))]
        n: u32,
        #[command(flatten)]
        out: GenOut,
    },
    /// Subspace lattice of F_q^n, q prime
    Subspace {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=6))]
        n: u32,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        out: GenOut,
    },
    /// Complete layered graph with level sizes m_n,...,m_1,1 (top first)
    Complete {
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<u64>,
        #[command(flatten)]
        out: GenOut,
    },
}

#[derive(Args)]
struct ClosedOut {
    /// Truncation degree of the reported expansion
    #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
    degree: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Subcommand)]
enum ClosedCmd {
    /// Subset-lattice family: (1 - t)/(1 - t(2 - t)^n)
    Qn {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=1000))]
        n: u32,
        #[command(flatten)]
        out: ClosedOut,
    },
    /// Subspace-lattice family at integer q >= 1
    Lnq {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=1000))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        q: u64,
        #[command(flatten)]
        out: ClosedOut,
    },
    /// Complete layered graph with level sizes m_n,...,m_1,1 (top first)
    Complete {
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<u64>,
        #[command(flatten)]
        out: ClosedOut,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Mobius,
    Chains,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Serialize, Deserialize)]
struct ClosedReport {
    numerator: IntPoly,
    denominator: IntPoly,
    #[serde(with = "crate::series::biglist")]
    series: Vec<BigInt>,
    truncation: usize,
}

#[derive(Serialize, Deserialize)]
struct OracleReport {
    #[serde(with = "crate::series::biglist")]
    counts: Vec<BigInt>,
    truncation: usize,
}

/// Runs the CLI on explicit arguments and streams, returning the exit
/// code. `main` is a thin wrapper over this.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Gen { family } => cmd_gen(family, out),
        Command::Series {
            file,
            degree,
            method,
            format,
        } => cmd_series(&file, degree, method, format, out),
        Command::Closed { form } => cmd_closed(form, out),
        Command::Dual {
            file,
            degree,
            format,
        } => cmd_dual(&file, degree, format, out),
        Command::Check { file, degree } => cmd_check(&file, degree, out),
        Command::Info { file } => cmd_info(&file, out),
    }
}

fn load_graph(path: &Path) -> Result<LayeredGraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_graph(&text)?)
}

fn graph_label(g: &LayeredGraph, path: &Path) -> String {
    g.name()
        .map(str::to_string)
        .unwrap_or_else(|| path.display().to_string())
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serialization");
    text.push('\n');
    text
}

fn cmd_gen(family: FamilyCmd, out: &mut dyn Write) -> Result<i32, CliError> {
    let (graph, dest) = match family {
        FamilyCmd::Boolean { n, out } => (gen_boolean(n), out.output),
        FamilyCmd::Subspace { n, q, out } => (gen_subspace(n, q)?, out.output),
        FamilyCmd::Complete { m, out } => (gen_complete(&m)?, out.output),
    };
    let text = serialize_graph(&graph);
    match dest {
        Some(path) => std::fs::write(&path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?,
        None => emit(out, &text)?,
    }
    Ok(EXIT_OK)
}

fn cmd_series(
    path: &Path,
    degree: usize,
    method: MethodArg,
    format: FormatArg,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = load_graph(path)?;
    let label = graph_label(&g, path);
    match method {
        MethodArg::Oracle => {
            let counts = count_words(&g, degree);
            match format {
                FormatArg::Json => {
                    let report = OracleReport {
                        counts: counts.counts().to_vec(),
                        truncation: degree,
                    };
                    emit(out, &to_pretty_json(&report))?;
                }
                FormatArg::Text => {
                    let series = IntSeries::from_coeff_vec(counts.counts().to_vec());
                    let text = format!(
                        "graph: {label}\nmethod: oracle\nseries: {series}\n"
                    );
                    emit(out, &text)?;
                }
            }
        }
        MethodArg::Mobius | MethodArg::Chains => {
            let m = if method == MethodArg::Mobius {
                Method::Mobius
            } else {
                Method::Chains
            };
            let result = hilbert_series_with_method(&g, degree, m, DEFAULT_CHAIN_CAP)?;
            match format {
                FormatArg::Json => emit(out, &to_pretty_json(&result))?,
                FormatArg::Text => {
                    let text = format!(
                        "graph: {label}\nmethod: {}\ndenominator: {}\nseries: {}\n",
                        result.method, result.denominator, result.series
                    );
                    emit(out, &text)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn closed_report(rf: &RationalFn, degree: usize, format: FormatArg) -> String {
    let series = rf.expand(degree);
    match format {
        FormatArg::Json => to_pretty_json(&ClosedReport {
            numerator: rf.num().clone(),
            denominator: rf.den().clone(),
            series: series.coeffs().to_vec(),
            truncation: degree,
        }),
        FormatArg::Text => format!("closed form: {rf}\nseries: {series}\n"),
    }
}

fn cmd_closed(form: ClosedCmd, out: &mut dyn Write) -> Result<i32, CliError> {
    let (rf, opts) = match form {
        ClosedCmd::Qn { n, out } => (closed_qn(n), out),
        ClosedCmd::Lnq { n, q, out } => (closed_lnq(n, q), out),
        ClosedCmd::Complete { m, out } => {
            let spec = CompleteSpec::new(m)?;
            (closed_complete(&spec), out)
        }
    };
    emit(out, &closed_report(&rf, opts.degree, opts.format))?;
    Ok(EXIT_OK)
}

fn cmd_dual(
    path: &Path,
    degree: usize,
    format: FormatArg,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let g = load_graph(path)?;
    let label = graph_label(&g, path);
    let dual = dual_series(&g, degree);
    match format {
        FormatArg::Json => emit(out, &to_pretty_json(&dual))?,
        FormatArg::Text => {
            let polynomial = match &dual.polynomial {
                Some(p) => p.to_string(),
                None => "none (denominator does not factor through 1 + t)".to_string(),
            };
            let text = format!(
                "graph: {label}\ndual series: {}\ndual polynomial: {polynomial}\n",
                dual.series
            );
            emit(out, &text)?;
        }
    }
    Ok(EXIT_OK)
}

fn coeff_row(label: &str, coeffs: &[BigInt]) -> String {
    let rendered: Vec<String> = coeffs.iter().map(BigInt::to_string).collect();
    format!("{label}: {}", rendered.join(" "))
}

fn cmd_check(path: &Path, degree: usize, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(path)?;
    let label = graph_label(&g, path);
    let mobius = hilbert_series_with_method(&g, degree, Method::Mobius, DEFAULT_CHAIN_CAP)?;
    let chains = hilbert_series_with_method(&g, degree, Method::Chains, DEFAULT_CHAIN_CAP)?;
    let oracle = count_words(&g, degree);

    let rows: [(&str, &[BigInt]); 3] = [
        ("mobius", mobius.series.coeffs()),
        ("chains", chains.series.coeffs()),
        ("oracle", oracle.counts()),
    ];
    let agree = rows.iter().all(|(_, c)| *c == rows[0].1);

    let mut text = format!("graph: {label}\n");
    if agree {
        for (name, coeffs) in rows {
            text.push_str(&coeff_row(name, coeffs));
            text.push('\n');
        }
        text.push_str(&format!("check: all methods agree up to degree {degree}\n"));
        emit(out, &text)?;
        Ok(EXIT_OK)
    } else {
        text.push_str("degree\tmobius\tchains\toracle\n");
        for d in 0..=degree {
            let mismatch = !(rows[0].1[d] == rows[1].1[d] && rows[1].1[d] == rows[2].1[d]);
            text.push_str(&format!(
                "{d}\t{}\t{}\t{}{}\n",
                rows[0].1[d],
                rows[1].1[d],
                rows[2].1[d],
                if mismatch { "\t<-- mismatch" } else { "" }
            ));
        }
        text.push_str("check: methods disagree\n");
        emit(out, &text)?;
        Ok(EXIT_MISMATCH)
    }
}

fn cmd_info(path: &Path, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = load_graph(path)?;
    let level_counts = g.level_counts();
    let edge_counts = g.edge_level_counts();
    let by_level: Vec<String> = (0..=g.top_level())
        .rev()
        .map(|l| level_counts.get(&l).copied().unwrap_or(0).to_string())
        .collect();
    let edges_by_level: Vec<String> = (1..=g.top_level())
        .rev()
        .map(|l| edge_counts.get(&l).copied().unwrap_or(0).to_string())
        .collect();
    let mut text = String::new();
    if let Some(name) = g.name() {
        text.push_str(&format!("name: {name}\n"));
    }
    text.push_str(&format!("top level: {}\n", g.top_level()));
    text.push_str(&format!(
        "vertices: {} (by level, top first: {})\n",
        g.vertex_count(),
        by_level.join(" ")
    ));
    text.push_str(&format!(
        "edges: {} (by tail level, top first: {})\n",
        g.edge_count(),
        if edges_by_level.is_empty() {
            "-".to_string()
        } else {
            edges_by_level.join(" ")
        }
    ));
    text.push_str("validation: ok\n");
    emit(out, &text)?;
    Ok(EXIT_OK)
}
