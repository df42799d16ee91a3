//! Command-line front end: invariant queries, classification scans,
//! fixed-point data validation and GKM checks.
//!
//! Exit codes: 0 success, 1 a negative mathematical result (failed check,
//! infeasible certificate), 2 usage error, 3 malformed input.

pub mod fpd;
pub mod gkm_json;
pub mod json;

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use symloc::ci::{self, Multidegree};
use symloc::fixloc::{self, CheckRecord, CheckStatus};
use symloc::gkm;
use thiserror::Error;

use crate::json::{ints, JsonInt};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Upper limits that keep a single invocation at desk scale.
const MAX_DIM: u32 = 256;
const MAX_SCAN_SUM: u32 = 40;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input(_) | CliError::Io(_) => EXIT_INPUT,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "symloc", version, about = "Exact invariants for circle actions and complete intersections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Debug, Args)]
struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Predicate {
    /// Even n with I_JR = 0.
    JrNull,
    /// Odd n >= 3 with Euler characteristic n + 1.
    ChiLinear,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants of the complete intersection X_n(d_1,...,d_k).
    CiInvariants {
        /// Complex dimension n.
        #[arg(long)]
        dim: u32,
        /// Comma-separated degrees; omit for projective space.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        degrees: Vec<u32>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// List multidegrees (all degrees >= 2) satisfying a predicate.
    CiScan {
        #[arg(long)]
        dim: u32,
        #[arg(long, value_enum)]
        predicate: Predicate,
        #[arg(long, default_value_t = 12)]
        max_degree_sum: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Localize and validate fixed-point data read from a JSON file.
    FpdValidate {
        /// Path to the document, or `-` for standard input.
        input: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Check a GKM graph read from a JSON file.
    GkmCheck {
        /// Path to the document, or `-` for standard input.
        input: String,
        /// Comma-separated generic direction for Morse counting.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        xi: Option<Vec<i64>>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Chern-number obstruction to GKM actions on X_n(2,2).
    GkmTwoQuadrics {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        format: FormatArg,
    },
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let out: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.code()
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::CiInvariants { dim, degrees, format } => ci_invariants(dim, degrees, format.format, out),
        Command::CiScan { dim, predicate, max_degree_sum, format } => {
            ci_scan(dim, predicate, max_degree_sum, format.format, out)
        }
        Command::FpdValidate { input, format } => {
            let text = read_input(&input, stdin)?;
            let data = fpd::parse_fpd(&text).map_err(|e| CliError::Input(format!("{input}: {e}")))?;
            fpd_validate(&data, format.format, out)
        }
        Command::GkmCheck { input, xi, format } => {
            let text = read_input(&input, stdin)?;
            let g = gkm_json::parse_gkm(&text).map_err(|e| CliError::Input(format!("{input}: {e}")))?;
            gkm_check(&g, xi.as_deref(), format.format, out)
        }
        Command::GkmTwoQuadrics { n, format } => two_quadrics(n, format.format, out),
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, CliError> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text).map_err(|e| CliError::Input(format!("standard input: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn tuple(degrees: &[u32]) -> String {
    format!("({})", degrees.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
}

fn multidegree(dim: u32, degrees: Vec<u32>) -> Result<Multidegree, CliError> {
    if dim > MAX_DIM {
        return Err(CliError::Usage(format!("--dim {dim} exceeds the supported maximum {MAX_DIM}")));
    }
    Multidegree::new(dim, degrees).map_err(|e| CliError::Usage(e.to_string()))
}

#[derive(Serialize)]
struct InvariantsJson {
    dim: u32,
    degrees: Vec<u32>,
    euler: JsonInt,
    betti: Vec<JsonInt>,
    signature: JsonInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    b_plus: Option<JsonInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b_minus: Option<JsonInt>,
    i_jr: JsonInt,
    c1_cnm1: JsonInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    c2_squared: Option<JsonInt>,
}

fn ci_invariants(dim: u32, degrees: Vec<u32>, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let md = multidegree(dim, degrees)?;
    let r = ci::invariant_report(&md).map_err(|e| CliError::Usage(e.to_string()))?;
    match format {
        Format::Json => emit_json(
            out,
            &InvariantsJson {
                dim: md.dim(),
                degrees: md.degrees().to_vec(),
                euler: JsonInt(r.euler),
                betti: ints(&r.betti),
                signature: JsonInt(r.signature),
                b_plus: r.b_plus.map(JsonInt),
                b_minus: r.b_minus.map(JsonInt),
                i_jr: JsonInt(r.i_jr),
                c1_cnm1: JsonInt(r.c1_cnm1),
                c2_squared: r.c2_squared.map(JsonInt),
            },
        )?,
        Format::Table => {
            writeln!(out, "{md}")?;
            let mut rows =
                vec![("euler", r.euler.to_string()), ("betti", join(&r.betti)), ("signature", r.signature.to_string())];
            if let (Some(p), Some(m)) = (&r.b_plus, &r.b_minus) {
                rows.push(("b_plus", p.to_string()));
                rows.push(("b_minus", m.to_string()));
            }
            rows.push(("i_jr", r.i_jr.to_string()));
            rows.push(("c1_cnm1", r.c1_cnm1.to_string()));
            if let Some(c) = &r.c2_squared {
                rows.push(("c2_squared", c.to_string()));
            }
            for (k, v) in rows {
                writeln!(out, "  {k:<11} {v}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ScanJson<'a> {
    dim: u32,
    predicate: &'a str,
    max_degree_sum: u32,
    results: Vec<Vec<u32>>,
}

fn ci_scan(dim: u32, predicate: Predicate, max_sum: u32, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    if dim > MAX_DIM {
        return Err(CliError::Usage(format!("--dim {dim} exceeds the supported maximum {MAX_DIM}")));
    }
    if max_sum > MAX_SCAN_SUM {
        return Err(CliError::Usage(format!(
            "--max-degree-sum {max_sum} exceeds the supported maximum {MAX_SCAN_SUM}"
        )));
    }
    let (name, found) = match predicate {
        Predicate::JrNull => ("jr-null", ci::scan_jr_null(dim, max_sum)),
        Predicate::ChiLinear => ("chi-linear", ci::scan_chi_linear(dim, max_sum)),
    };
    let found = found.map_err(|e| CliError::Usage(e.to_string()))?;
    let results: Vec<Vec<u32>> = found.iter().map(|m| m.degrees().to_vec()).collect();
    match format {
        Format::Json => emit_json(out, &ScanJson { dim, predicate: name, max_degree_sum: max_sum, results })?,
        Format::Table => {
            writeln!(out, "{name} scan, n = {dim}, degree sum <= {max_sum}: {} found", results.len())?;
            for (d, m) in results.iter().zip(&found) {
                writeln!(out, "  {:<12} {m}", tuple(d))?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    status: String,
    detail: &'a str,
    #[serde(skip_serializing_if = "<[usize]>::is_empty")]
    components: &'a [usize],
}

#[derive(Serialize)]
struct ValidateJson<'a> {
    half_dim: u32,
    localized_betti: Vec<u64>,
    localized_signature: i64,
    i_jr_localized: i64,
    checks: Vec<CheckJson<'a>>,
    passed: bool,
}

fn fpd_validate(data: &fixloc::FixedPointData, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut records: Vec<CheckRecord> = fixloc::validate(data).checks;
    records.extend(fixloc::check_inequalities(data));
    if data.half_dim() == 4 {
        records.push(fixloc::check_unimodal_8(data).expect("dimension checked"));
    }
    let passed = records.iter().all(|r| r.status != CheckStatus::Fail);
    let betti = fixloc::localize_betti(data);
    let sigma = fixloc::localize_signature(data);
    let jr = fixloc::i_jr_localized(data);
    match format {
        Format::Json => emit_json(
            out,
            &ValidateJson {
                half_dim: data.half_dim(),
                localized_betti: betti,
                localized_signature: sigma,
                i_jr_localized: jr,
                checks: records
                    .iter()
                    .map(|r| CheckJson {
                        name: r.name,
                        status: r.status.to_string(),
                        detail: &r.detail,
                        components: &r.components,
                    })
                    .collect(),
                passed,
            },
        )?,
        Format::Table => {
            writeln!(out, "half dimension      {}", data.half_dim())?;
            writeln!(out, "localized betti     {}", join(&betti))?;
            writeln!(out, "localized signature {sigma}")?;
            writeln!(out, "i_jr (localized)    {jr}")?;
            for (i, r) in records.iter().enumerate() {
                writeln!(out, "{:>3}  {:<28} {:<8} {}", i + 1, r.name, r.status, r.detail)?;
            }
            writeln!(out, "{}", if passed { "all checks passed" } else { "some checks failed" })?;
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_NEGATIVE })
}

#[derive(Serialize)]
struct GkmJson {
    rank: usize,
    valence: usize,
    vertices: usize,
    edges: usize,
    euler: usize,
    regular_valence: bool,
    edge_count_identity: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    morse_betti: Option<Vec<u64>>,
}

fn gkm_check(g: &gkm::GkmGraph, xi: Option<&[i64]>, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let regular = g.check_valence();
    let identity = gkm::edge_count_identity(g);
    let morse = match (xi, &regular) {
        (Some(xi), Ok(())) => Some(gkm::morse_betti(g, xi).map_err(|e| CliError::Usage(format!("--xi: {e}")))?),
        _ => None,
    };
    let report = GkmJson {
        rank: g.rank(),
        valence: g.valence(),
        vertices: g.vertices().len(),
        edges: g.edges().len(),
        euler: gkm::euler(g),
        regular_valence: regular.is_ok(),
        edge_count_identity: identity,
        morse_betti: morse,
    };
    match format {
        Format::Json => emit_json(out, &report)?,
        Format::Table => {
            writeln!(out, "rank                {}", report.rank)?;
            writeln!(out, "valence             {}", report.valence)?;
            writeln!(out, "vertices            {}", report.vertices)?;
            writeln!(out, "edges               {}", report.edges)?;
            writeln!(out, "euler               {}", report.euler)?;
            match &regular {
                Ok(()) => writeln!(out, "regular valence     yes")?,
                Err(e) => writeln!(out, "regular valence     no ({e})")?,
            }
            writeln!(out, "edge count identity {}", if identity { "holds" } else { "fails" })?;
            if let Some(b) = &report.morse_betti {
                writeln!(out, "morse betti         {}", join(b))?;
            }
        }
    }
    Ok(if report.regular_valence && identity { EXIT_OK } else { EXIT_NEGATIVE })
}

#[derive(Serialize)]
struct CertificateJson {
    n: u32,
    required: i128,
    lower_bound: i128,
    feasible: bool,
}

fn two_quadrics(n: u32, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    if n > MAX_DIM {
        return Err(CliError::Usage(format!("--n {n} exceeds the supported maximum {MAX_DIM}")));
    }
    let c = gkm::two_quadrics_feasibility(n).map_err(|e| CliError::Usage(e.to_string()))?;
    match format {
        Format::Json => emit_json(
            out,
            &CertificateJson { n: c.n, required: c.required, lower_bound: c.lower_bound, feasible: c.feasible },
        )?,
        Format::Table => {
            writeln!(out, "X_{n}(2,2)")?;
            writeln!(out, "  required     {}", c.required)?;
            writeln!(out, "  lower_bound  {}", c.lower_bound)?;
            writeln!(out, "  feasible     {}", if c.feasible { "yes" } else { "no" })?;
        }
    }
    Ok(if c.feasible { EXIT_OK } else { EXIT_NEGATIVE })
}
