//! Command-line front end.
//!
//! Exit codes: 0 when a check passes (or a plain computation succeeds), 1
//! when a verified statement fails, 2 on invalid invocation.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cone;
use crate::lhseq::LhSequence;
use crate::minors::{ell_s, SubsetS};
use crate::polyring::LaurentPoly;
use crate::verify::{self, Conjecture, Failure, Status, TableDiff, VerificationReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `n` for the subset-minor checks without `--long`.
pub const MAX_N_SHORT: usize = 10;
/// Largest sequence index without `--long`.
pub const MAX_I_SHORT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    /// Count Lecture Hall partitions directly.
    Lattice,
    /// Expand the product formula.
    Product,
}

#[derive(Debug, Parser)]
#[command(
    name = "lecture-hall",
    version,
    about = "Lecture Hall polynomials, subset minors and cone checks"
)]
pub struct RunConfig {
    /// Output format; `verify` defaults to json, everything else to text.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Write the result to this file (atomically) instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Directory for results when `--output` is not given.
    #[arg(long, global = true, env = "LECTURE_HALL_OUT_DIR")]
    pub output_dir: Option<PathBuf>,

    /// Allow long-running bounds (n > 10 or i > 12).
    #[arg(long, global = true)]
    pub long: bool,

    /// Print minor-cache statistics to standard error.
    #[arg(long, global = true)]
    pub cache_stats: bool,

    /// Worker threads for per-subset work.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,

    /// Write `elapsed_ms` as 0 so reports are byte-identical across runs.
    #[arg(long, global = true)]
    pub no_timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Lecture Hall polynomial l_i.
    Ell {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        i: u64,
    },
    /// Print the subset minor l_S.
    EllS {
        /// Comma-separated strictly increasing positive integers; "" is the empty set.
        #[arg(long, value_parser = parse_subset)]
        set: SubsetS,
    },
    /// Run a verification pipeline and emit a report.
    Verify {
        #[arg(long, value_enum)]
        conjecture: Conjecture,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_i: Option<u64>,
        #[arg(long, default_value_t = 20)]
        max_total: u64,
        /// phi table (`subset;vector` rows) to diff against.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Dump one side of the bivariate Lecture Hall identity as `a,b,count` rows.
    Series {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 20)]
        max_total: u64,
        #[arg(long, value_enum, default_value_t = Side::Lattice)]
        side: Side,
    },
    /// Leading exponent vectors of l_S for every S in the power set of [n-1], or one S.
    Phi {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: Option<u64>,
        #[arg(long, value_parser = parse_subset)]
        set: Option<SubsetS>,
    },
    /// The Hilbert basis of the length-n Lecture Hall cone.
    HilbertBasis {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
}

fn parse_subset(s: &str) -> Result<SubsetS, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub output: String,
    /// File name used under `--output-dir`.
    pub default_name: String,
    pub exit_code: i32,
    /// Diagnostics for standard error.
    pub notes: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] crate::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            // computation errors mean the solver premise broke: a failed check
            CliError::Compute(_) => EXIT_FAIL,
            CliError::Io { .. } => EXIT_USAGE,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn require_long(cfg: &RunConfig, what: &str, value: usize, limit: usize) -> Result<(), CliError> {
    if value > limit && !cfg.long {
        return Err(usage(format!(
            "{what} = {value} exceeds {limit}; pass --long to allow it"
        )));
    }
    Ok(())
}

/// Runs the parsed command without touching stdout or the filesystem
/// (except for reading `--table`).
pub fn execute(cfg: &RunConfig) -> Result<Execution, CliError> {
    let run = || execute_inner(cfg);
    match cfg.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build()
            .map_err(|e| usage(format!("cannot build thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}

fn execute_inner(cfg: &RunConfig) -> Result<Execution, CliError> {
    let text_like = cfg.format.unwrap_or(Format::Text);
    let mut notes = Vec::new();
    let done = |output: String, default_name: String, notes: Vec<String>| Execution {
        output,
        default_name,
        exit_code: EXIT_PASS,
        notes,
    };
    match &cfg.command {
        Command::Ell { i } => {
            let i = *i as usize;
            require_long(cfg, "i", i, MAX_I_SHORT)?;
            let mut seq = LhSequence::new();
            let poly = seq.extend(i)?.clone();
            let out = render_poly(&poly, text_like, json!({ "i": i }));
            Ok(done(out, format!("ell-{i}.{}", ext(text_like)), notes))
        }
        Command::EllS { set } => {
            let top = set.largest().map_or(1, |m| m + 1);
            require_long(cfg, "max(S)+1", top, MAX_I_SHORT)?;
            let seq = LhSequence::with_len(top)?;
            let poly = ell_s(&seq, set)?;
            stats_note(cfg, &seq, &mut notes);
            let out = render_poly(&poly, text_like, json!({ "S": set.elements() }));
            let name = format!(
                "ell-s-{}.{}",
                set.to_csv().replace(',', "-"),
                ext(text_like)
            );
            Ok(done(out, name, notes))
        }
        Command::Verify {
            conjecture,
            n,
            max_i,
            max_total,
            table,
        } => run_verify(cfg, *conjecture, *n, *max_i, *max_total, table.as_deref()),
        Command::Series { n, max_total, side } => {
            let n = *n as usize;
            let series = match side {
                Side::Lattice => cone::lh_series(n, *max_total),
                Side::Product => cone::product_series(n, *max_total),
            };
            let fmt = cfg.format.unwrap_or(Format::Csv);
            let out = match fmt {
                Format::Text | Format::Csv => series.to_csv(),
                Format::Json => json_line(&json!({
                    "n": n,
                    "max_total": max_total,
                    "side": format!("{side:?}").to_lowercase(),
                    "coeffs": series.entries(),
                })),
            };
            let side_name = format!("{side:?}").to_lowercase();
            Ok(done(
                out,
                format!("series-{side_name}-n{n}-t{max_total}.{}", ext(fmt)),
                notes,
            ))
        }
        Command::Phi { n, set } => {
            let subsets = match (n, set) {
                (Some(n), None) => SubsetS::all_subsets_of(*n as usize - 1),
                (None, Some(s)) => vec![s.clone()],
                _ => return Err(usage("phi needs exactly one of --n or --set")),
            };
            let top = subsets
                .iter()
                .filter_map(SubsetS::largest)
                .max()
                .map_or(1, |m| m + 1);
            require_long(cfg, "n", top, MAX_N_SHORT)?;
            let seq = LhSequence::with_len(top)?;
            let entries = subsets
                .iter()
                .map(|s| verify::phi(&seq, s))
                .collect::<crate::Result<Vec<_>>>()?;
            stats_note(cfg, &seq, &mut notes);
            let out = match text_like {
                Format::Csv => verify::phi_csv(&entries),
                Format::Text => {
                    let mut s = String::new();
                    for e in &entries {
                        let v: Vec<String> = e.vector.iter().map(i64::to_string).collect();
                        writeln!(s, "{} -> ({})", e.subset, v.join(", ")).expect("write to String");
                    }
                    s
                }
                Format::Json => json_line(&json!(entries
                    .iter()
                    .map(|e| json!({
                        "S": e.subset.elements(),
                        "vector": e.vector,
                        "lead_coeff": e.lead_coeff.to_string().parse::<i64>().ok(),
                    }))
                    .collect::<Vec<_>>())),
            };
            Ok(done(out, format!("phi-n{top}.{}", ext(text_like)), notes))
        }
        Command::HilbertBasis { n } => {
            let n = *n as usize;
            let basis = cone::hilbert_basis(n);
            let join = |v: &Vec<i64>| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
            let out = match text_like {
                Format::Text => basis.iter().map(|v| format!("({})\n", join(v))).collect(),
                Format::Csv => basis.iter().map(|v| format!("{}\n", join(v))).collect(),
                Format::Json => json_line(&json!(basis)),
            };
            Ok(done(
                out,
                format!("hilbert-basis-n{n}.{}", ext(text_like)),
                notes,
            ))
        }
    }
}

fn run_verify(
    cfg: &RunConfig,
    conjecture: Conjecture,
    n: Option<u64>,
    max_i: Option<u64>,
    max_total: u64,
    table: Option<&Path>,
) -> Result<Execution, CliError> {
    let mut notes = Vec::new();
    let mut seq = LhSequence::new();
    let mut report = match conjecture {
        Conjecture::Pi => {
            let i = max_i
                .or(n)
                .ok_or_else(|| usage("--conjecture pi needs --max-i"))?
                as usize;
            require_long(cfg, "max-i", i, MAX_I_SHORT)?;
            verify::verify_pi(&mut seq, i)?
        }
        Conjecture::Sagbi | Conjecture::PhiProperties => {
            let n = n
                .ok_or_else(|| usage(format!("--conjecture {} needs --n", conjecture.as_str())))?
                as usize;
            require_long(cfg, "n", n, MAX_N_SHORT)?;
            if conjecture == Conjecture::Sagbi {
                verify::verify_sagbi(&mut seq, n)?
            } else {
                verify::verify_phi_properties(&mut seq, n)?
            }
        }
        Conjecture::Lht => {
            let n = n.ok_or_else(|| usage("--conjecture lht needs --n"))? as usize;
            verify::verify_lht(n, max_total)?
        }
    };
    if let Some(path) = table {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let table = verify::parse_phi_table(&text)?;
        let diffs = verify::compare_table(&report, &table);
        notes.push(format!("table diff: {} rows", diffs.len()));
        apply_table_diffs(&mut report, diffs);
    }
    if conjecture != Conjecture::Lht {
        stats_note(cfg, &seq, &mut notes);
    }

    let fmt = cfg.format.unwrap_or(Format::Json);
    let output = match fmt {
        Format::Json => report.to_json(!cfg.no_timing),
        Format::Csv => report.phi_csv(),
        Format::Text => summary(&report),
    };
    Ok(Execution {
        output,
        default_name: format!("{}-n{}.{}", conjecture.as_str(), report.n, ext(fmt)),
        exit_code: if report.passed() {
            EXIT_PASS
        } else {
            EXIT_FAIL
        },
        notes,
    })
}

/// Folds table differences into the report as failures.
pub fn apply_table_diffs(report: &mut VerificationReport, diffs: Vec<TableDiff>) {
    for d in diffs {
        let failure = match d {
            TableDiff::Mismatch {
                subset,
                computed,
                expected,
            } => Failure {
                subset,
                reason: format!("table mismatch: computed {computed:?}, table has {expected:?}"),
            },
            TableDiff::Missing { subset } => Failure {
                subset,
                reason: "table row not covered by the computation".to_string(),
            },
        };
        report.failures.push(failure);
    }
    if !report.failures.is_empty() {
        report.status = Status::Fail;
    }
}

fn summary(report: &VerificationReport) -> String {
    let mut s = format!(
        "{} n={}: {} ({} entries, {} failures, unit leading coefficients: {})\n",
        report.conjecture.as_str(),
        report.n,
        if report.passed() { "pass" } else { "fail" },
        report.entries.len(),
        report.failures.len(),
        report.unit_leading_coeffs,
    );
    for f in &report.failures {
        writeln!(s, "  {}: {}", f.subset, f.reason).expect("write to String");
    }
    s
}

fn stats_note(cfg: &RunConfig, seq: &LhSequence, notes: &mut Vec<String>) {
    if cfg.cache_stats {
        let st = seq.memo().stats();
        notes.push(format!(
            "minor cache: {} entries, {} hits, {} misses",
            st.entries, st.hits, st.misses
        ));
    }
}

fn ext(fmt: Format) -> &'static str {
    match fmt {
        Format::Text => "txt",
        Format::Json => "json",
        Format::Csv => "csv",
    }
}

fn json_line(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}

fn render_poly(poly: &LaurentPoly, fmt: Format, mut header: serde_json::Value) -> String {
    match fmt {
        Format::Text => format!("{poly}\n"),
        Format::Csv => {
            let mut s = String::new();
            for (m, c) in poly.terms().rev() {
                let v: Vec<String> = m.exponents().iter().map(i32::to_string).collect();
                writeln!(s, "{c};{}", v.join(",")).expect("write to String");
            }
            s
        }
        Format::Json => {
            header["poly"] = json!(poly.to_string());
            header["terms"] = json!(poly.len());
            json_line(&header)
        }
    }
}

/// Writes `contents` to `path` via a temporary file in the same directory.
pub fn write_atomically(path: &Path, contents: &str) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir).map_err(io_err)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

/// Parses `args`, runs the command and writes its output. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let exec = match execute(&cfg) {
        Ok(exec) => exec,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    for note in &exec.notes {
        let _ = writeln!(stderr, "{note}");
    }
    let target = cfg
        .output
        .clone()
        .or_else(|| cfg.output_dir.as_ref().map(|d| d.join(&exec.default_name)));
    match target {
        Some(path) => {
            if let Err(e) = write_atomically(&path, &exec.output) {
                let _ = writeln!(stderr, "error: {e}");
                return e.exit_code();
            }
        }
        None => {
            if stdout.write_all(exec.output.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
        }
    }
    exec.exit_code
}
