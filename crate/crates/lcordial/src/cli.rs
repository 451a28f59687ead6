//! `lcordial` command line.
//!
//! Exit codes: 0 on success, 1 for invalid arguments or IO failures, 2 when
//! an internal cross-check fails (method disagreement, size mismatch,
//! non-integral size bracket, failing verify suite). Output is buffered and
//! only written once the command has succeeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use lcordial_core::cordial::{decide, CordialVerdict, Method};
use lcordial_core::legraph::{size_closed_form, LegendreGraph};
use lcordial_core::numtheory::legendre_symbol;
use lcordial_core::{LegendreValue, OddPrime};
use thiserror::Error;

use crate::export::{write_dot, write_edge_list};
use crate::parallel::sweep_parallel;
use crate::svg::emit_svg_lineplot;
use crate::table_csv::emit_csv;
use crate::verify::run_all;

/// Largest order accepted by `check`, `size`, `survey` and `verify`.
pub const MAX_ORDER: u64 = 100_000;
/// Largest order accepted by `graph`, which materializes every edge.
pub const MAX_GRAPH_ORDER: u64 = 5_000;
/// Largest modulus; keeps every intermediate well inside `i64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;
/// Largest survey bound `m`.
pub const MAX_BOUND: u64 = 10_000_000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Io(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) | CliError::Io(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

impl From<lcordial_core::Error> for CliError {
    fn from(e: lcordial_core::Error) -> Self {
        match e {
            lcordial_core::Error::SizeNotIntegral { .. } => CliError::Internal(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "lcordial",
    version,
    about = "Legendre cordial labeling of complete graphs",
    after_help = "Bounds: n <= 100000 (graph: n <= 5000), odd primes p < 2^32, survey bounds m <= 10000000."
)]
pub struct CliConfig {
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Edges,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    Direct,
    Theorem,
    #[value(name = "paper-alg")]
    PaperAlg,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Legendre symbol (a/p), printed as 1 or -1.
    Symbol {
        #[arg(allow_hyphen_values = true)]
        a: i64,
        #[arg(value_parser = parse_prime)]
        p: OddPrime,
    },
    /// Export L_n^k(id, p).
    Graph {
        #[arg(value_parser = clap::value_parser!(u64).range(2..=MAX_GRAPH_ORDER))]
        n: u64,
        #[arg(value_parser = parse_prime)]
        p: OddPrime,
        #[arg(allow_hyphen_values = true, value_parser = parse_k)]
        k: LegendreValue,
        #[arg(long, value_enum, default_value = "edges")]
        format: GraphFormat,
    },
    /// Decide whether K_n is Legendre cordial modulo p.
    Check {
        #[arg(value_parser = parse_order)]
        n: u64,
        #[arg(value_parser = parse_prime)]
        p: OddPrime,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodChoice,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Closed-form size of L_n^k(f, p).
    Size {
        #[arg(value_parser = parse_order)]
        n: u64,
        #[arg(value_parser = parse_prime)]
        p: OddPrime,
        #[arg(allow_hyphen_values = true, value_parser = parse_k)]
        k: LegendreValue,
        /// Print q, psi, S1, S2 and S as well.
        #[arg(long)]
        breakdown: bool,
        /// Also enumerate the graph and compare.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Sweep J(n, m) over a range of orders and a list of bounds.
    Survey {
        #[arg(long, value_parser = parse_order)]
        n_min: u64,
        #[arg(long, value_parser = parse_order)]
        n_max: u64,
        /// Comma-separated bounds, e.g. 10,50,100.
        #[arg(long = "m", value_delimiter = ',', required = true, value_parser = parse_bound)]
        m: Vec<u64>,
        /// CSV destination; without it the CSV goes to the primary output.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        /// Add a `primes` column listing each 𝕁(n, m).
        #[arg(long)]
        with_sets: bool,
    },
    /// Run every closed-form vs enumeration cross-check.
    Verify {
        #[arg(long, default_value_t = 60, value_parser = parse_order)]
        n_max: u64,
        #[arg(long, default_value_t = 37, value_parser = clap::value_parser!(u64).range(3..=MAX_ORDER))]
        p_max: u64,
    },
}

fn parse_prime(s: &str) -> Result<OddPrime, String> {
    let v: u64 = s
        .parse()
        .map_err(|e| format!("p must be an odd prime: {e}"))?;
    if v > MAX_PRIME {
        return Err(format!("p must be at most {MAX_PRIME}"));
    }
    OddPrime::new(v).map_err(|_| "p must be an odd prime".to_owned())
}

fn parse_order(s: &str) -> Result<u64, String> {
    let v: u64 = s
        .parse()
        .map_err(|e| format!("n must be an integer: {e}"))?;
    if v < 2 {
        return Err("n must be at least 2".to_owned());
    }
    if v > MAX_ORDER {
        return Err(format!("n must be at most {MAX_ORDER}"));
    }
    Ok(v)
}

fn parse_bound(s: &str) -> Result<u64, String> {
    let v: u64 = s
        .trim()
        .parse()
        .map_err(|e| format!("malformed m value {s:?}: {e}"))?;
    if !(3..=MAX_BOUND).contains(&v) {
        return Err(format!("m must lie in [3, {MAX_BOUND}]"));
    }
    Ok(v)
}

fn parse_k(s: &str) -> Result<LegendreValue, String> {
    match s {
        "1" | "+1" => Ok(LegendreValue::Residue),
        "-1" => Ok(LegendreValue::Nonresidue),
        _ => Err("k must be 1 or -1".to_owned()),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn verdict_line(v: &CordialVerdict) -> String {
    let mut line = format!("{} cordial={}", v.method, v.cordial);
    if let Some(c) = v.counts {
        line.push_str(&format!(" e0={} e1={}", c.e0, c.e1));
    }
    if let (Some(s), Some(t)) = (v.s_value, v.t_value) {
        line.push_str(&format!(" S={s} T={t}"));
    }
    line
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn check(
    n: u64,
    p: OddPrime,
    method: MethodChoice,
    format: OutputFormat,
) -> Result<String, CliError> {
    let methods: Vec<Method> = match method {
        MethodChoice::Direct => vec![Method::Direct],
        MethodChoice::Theorem => vec![Method::Theorem],
        MethodChoice::PaperAlg => vec![Method::PaperAlgorithm],
        MethodChoice::All => Method::ALL.to_vec(),
    };
    let verdicts: Vec<CordialVerdict> = methods.iter().map(|&m| decide(m, n, p)).collect();
    if verdicts.iter().any(|v| v.cordial != verdicts[0].cordial) {
        let lines: Vec<String> = verdicts.iter().map(verdict_line).collect();
        return Err(CliError::Internal(format!(
            "methods disagree on K_{n} mod {p}: {}",
            lines.join("; ")
        )));
    }
    Ok(match format {
        OutputFormat::Json if verdicts.len() == 1 => json(&verdicts[0]) + "\n",
        OutputFormat::Json => json(&verdicts) + "\n",
        OutputFormat::Text => {
            let mut s = format!("n={n} p={p} cordial={}\n", verdicts[0].cordial);
            for v in &verdicts {
                s.push_str(&verdict_line(v));
                s.push('\n');
            }
            s
        }
    })
}

fn size(
    n: u64,
    p: OddPrime,
    k: LegendreValue,
    breakdown: bool,
    verify: bool,
    format: OutputFormat,
) -> Result<String, CliError> {
    let b = size_closed_form(n, p, k)?;
    let enumerated = if verify {
        if n > MAX_GRAPH_ORDER {
            return Err(CliError::Invalid(format!(
                "--verify enumerates the graph and needs n <= {MAX_GRAPH_ORDER}"
            )));
        }
        let counted = LegendreGraph::with_identity(n, p, k).size() as u64;
        if counted != b.size {
            return Err(CliError::Internal(format!(
                "closed-form size {} of L_{n}^{k}({p}) differs from enumerated {counted}",
                b.size
            )));
        }
        Some(counted)
    } else {
        None
    };
    Ok(match format {
        OutputFormat::Json => json(&b) + "\n",
        OutputFormat::Text if breakdown => {
            let mut s = format!(
                "q={}\npsi={}\ns1={}\ns2={}\ns={}\nsize={}\n",
                b.q, b.psi, b.s1, b.s2, b.s_total, b.size
            );
            if let Some(c) = enumerated {
                s.push_str(&format!("enumerated={c}\n"));
            }
            s
        }
        OutputFormat::Text => {
            let mut s = format!("{}\n", b.size);
            if let Some(c) = enumerated {
                s.push_str(&format!("enumerated={c}\n"));
            }
            s
        }
    })
}

fn execute(cmd: Command, out: &mut Vec<u8>, err: &mut dyn Write) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    match cmd {
        Command::Symbol { a, p } => {
            let v = legendre_symbol(a, p)?;
            writeln!(out, "{v}").map_err(io)?;
        }
        Command::Graph { n, p, k, format } => {
            let g = LegendreGraph::with_identity(n, p, k);
            match format {
                GraphFormat::Edges => write_edge_list(&g, &mut *out),
                GraphFormat::Dot => write_dot(&g, &mut *out),
            }
            .map_err(io)?;
        }
        Command::Check {
            n,
            p,
            method,
            format,
        } => out.extend(check(n, p, method, format)?.bytes()),
        Command::Size {
            n,
            p,
            k,
            breakdown,
            verify,
            format,
        } => out.extend(size(n, p, k, breakdown, verify, format)?.bytes()),
        Command::Survey {
            n_min,
            n_max,
            m,
            csv,
            svg,
            with_sets,
        } => {
            let table = sweep_parallel(n_min, n_max, &m, with_sets)?;
            let mut csv_bytes = Vec::new();
            emit_csv(&table, &mut csv_bytes).map_err(|e| CliError::Io(e.to_string()))?;
            let mut svg_bytes = Vec::new();
            if svg.is_some() {
                emit_svg_lineplot(&table, &mut svg_bytes).map_err(io)?;
            }
            match &csv {
                Some(path) => write_file(path, &csv_bytes)?,
                None => out.extend(csv_bytes),
            }
            if let Some(path) = &svg {
                write_file(path, &svg_bytes)?;
            }
            let _ = writeln!(err, "survey: {} cells", table.cells().len());
        }
        Command::Verify { n_max, p_max } => {
            let results = run_all(n_max, p_max);
            let report: String = results.iter().map(|r| format!("{r}\n")).collect();
            if results.iter().all(|r| r.passed()) {
                out.extend(report.bytes());
            } else {
                let _ = err.write_all(report.as_bytes());
                return Err(CliError::Internal("verify suites failed".to_owned()));
            }
        }
    }
    Ok(())
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    1
                }
            };
        }
    };

    let mut out = Vec::new();
    let result = execute(config.command, &mut out, stderr).and_then(|()| match &config.out {
        Some(path) => write_file(path, &out),
        None => stdout
            .write_all(&out)
            .and_then(|()| stdout.flush())
            .map_err(|e| CliError::Io(e.to_string())),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
