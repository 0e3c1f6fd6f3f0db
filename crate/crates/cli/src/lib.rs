//! Command-line front end for `sqsum-core`: analyze single graphs, verify
//! inequality suites over corpora, generate family corpora, scan random
//! graphs for tight instances and print the planar-class threshold table.
//!
//! [`run`] is the whole program with its streams injected, so tests can
//! drive it in-process.

pub mod corpus;
pub mod engine;
pub mod report;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sqsum_core::bounds::{corollary_class, Check, CorollaryClass, CorollaryTag, FamilyParams};
use sqsum_core::graph::{encode_graph6, generate, GeneratorSpec};
use sqsum_core::AnalysisOptions;

use engine::{CheckConfig, ScanConfig};
use report::{sig12, GraphRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OPERATIONAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Operational(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Operational(_) => EXIT_OPERATIONAL,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sqsum",
    version,
    about = "Eigenvalue square-sum inequalities on graph corpora"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full record for one graph as JSON.
    Analyze(AnalyzeArgs),
    /// Run checks over a corpus and summarize.
    Verify(VerifyArgs),
    /// Write generated graphs as graph6 lines.
    Generate(GenerateArgs),
    /// Sample random graphs and report the tightest margins.
    Scan(ScanArgs),
    /// Edge thresholds of the sparse-triangle graph classes.
    Thresholds(ThresholdsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Write the main output here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Multiplies the default eigenvalue zero tolerance.
    #[arg(long, default_value_t = 1.0)]
    pub zero_tol_scale: f64,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Comma-separated subset of t11,bn,general,lemma22,thm14,thm31,thm16.
    #[arg(long, value_delimiter = ',')]
    pub checks: Option<Vec<Check>>,
    /// planar, outerplanar, book:K or cycle:K.
    #[arg(long, conflicts_with_all = ["c", "eps"])]
    pub family: Option<CorollaryTag>,
    #[arg(long, requires = "eps")]
    pub c: Option<f64>,
    #[arg(long, requires = "c")]
    pub eps: Option<f64>,
    /// Exponent of the improved clique bound (thm14).
    #[arg(long, default_value_t = 1)]
    pub k: u32,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// graph6 string, `-` for standard input, or a graph6/edge-list file.
    pub input: String,
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub checks: CheckArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// graph6 file, `-` for standard input, or all1..all6.
    pub corpus: String,
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub checks: CheckArgs,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Family spec such as fan:60, gnp:10:0.5:7 or complete_multipartite:2,3.
    pub spec: GeneratorSpec,
    /// Number of graphs; sized families grow by one vertex (or page) per
    /// graph, random families advance the seed.
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub n: usize,
    /// Number of sampled graphs.
    #[arg(long, default_value_t = 10_000)]
    pub budget: u64,
    /// Check whose margin is ranked.
    #[arg(long)]
    pub objective: String,
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub checks: CheckArgs,
}

#[derive(Debug, Args)]
pub struct ThresholdsArgs {
    #[arg(long, default_value_t = 2)]
    pub book_k: usize,
    #[arg(long, default_value_t = 4)]
    pub cycle_k: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

/// Streams the program reads and writes.
pub struct Io<'a> {
    pub stdin: &'a mut dyn BufRead,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Parses `args` (program name first) and runs the command, returning the
/// exit code.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { io.stderr } else { io.stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<i32, CliError> {
    match command {
        Command::Analyze(args) => cmd_analyze(args, io),
        Command::Verify(args) => cmd_verify(args, io),
        Command::Generate(args) => cmd_generate(args, io),
        Command::Scan(args) => cmd_scan(args, io),
        Command::Thresholds(args) => cmd_thresholds(args, io),
    }
}

fn check_config(args: &CheckArgs, common: &CommonArgs) -> Result<CheckConfig, CliError> {
    let family = match (&args.family, args.c, args.eps) {
        (Some(tag), _, _) => Some(corollary_class(*tag).map_err(usage)?.params),
        (None, Some(c), Some(eps)) => Some(FamilyParams::new(eps, c).map_err(usage)?),
        _ => None,
    };
    if args.k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    if !(common.zero_tol_scale > 0.0 && common.zero_tol_scale.is_finite()) {
        return Err(CliError::Usage(format!(
            "--zero-tol-scale must be positive, got {}",
            common.zero_tol_scale
        )));
    }
    let mut checks = args.checks.clone().unwrap_or_else(|| Check::ALL.to_vec());
    checks.sort();
    checks.dedup();
    Ok(CheckConfig {
        checks,
        family,
        k: args.k,
        options: AnalysisOptions {
            zero_tol_scale: common.zero_tol_scale,
            ..AnalysisOptions::default()
        },
    })
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn write_failed(e: io::Error) -> CliError {
    CliError::Operational(format!("writing output: {e}"))
}

/// Runs `f` against `--out` when given, otherwise standard output.
fn with_output(
    out: &Option<PathBuf>,
    stdout: &mut dyn Write,
    f: impl FnOnce(&mut dyn Write) -> Result<(), CliError>,
) -> Result<(), CliError> {
    match out {
        Some(path) => {
            let file =
                File::create(path).map_err(|e| CliError::Operational(format!("creating {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            f(&mut w)?;
            w.flush().map_err(write_failed)
        }
        None => f(stdout),
    }
}

fn write_json(w: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *w, value).map_err(|e| CliError::Operational(format!("writing JSON: {e}")))?;
    writeln!(w).map_err(write_failed)
}

pub fn cmd_analyze(args: AnalyzeArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    let cfg = check_config(&args.checks, &args.common)?;
    let graph = corpus::load_single(&args.input, io.stdin)?;
    let entry = corpus::Entry::new(graph)?;
    let (a, result) = engine::analyze_and_check(&entry, &cfg)?;
    let record: GraphRecord = result.record.clone().with_eigenvalues(&a);
    with_output(&args.common.out, io.stdout, |w| match args.common.format {
        Some(Format::Csv) => engine::write_csv(std::slice::from_ref(&result), w),
        _ => write_json(w, &record),
    })?;
    Ok(if result.failed() { EXIT_VIOLATION } else { EXIT_OK })
}

pub fn cmd_verify(args: VerifyArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    let cfg = check_config(&args.checks, &args.common)?;
    let entries = corpus::load_corpus(&args.corpus, io.stdin)?;
    let v = engine::verify(&args.corpus, &entries, &cfg, args.common.workers)?;
    match args.common.format {
        Some(Format::Csv) => {
            with_output(&args.common.out, io.stdout, |w| engine::write_csv(&v.results, w))?;
            write_json(io.stderr, &v.summary)?;
        }
        _ => with_output(&args.common.out, io.stdout, |w| write_json(w, &v.summary))?,
    }
    if v.summary.proven_violation {
        let _ = writeln!(io.stderr, "error: a proven inequality failed; this indicates a bug");
    }
    Ok(if v.summary.has_violation() {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}

pub fn cmd_generate(args: GenerateArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    let base = match args.common.seed {
        Some(seed) => args.spec.with_seed(seed),
        None => args.spec,
    };
    let mut lines = Vec::with_capacity(args.count);
    for i in 0..args.count {
        let spec = base.step(i).map_err(usage)?;
        let g = generate(&spec).map_err(usage)?;
        lines.push(encode_graph6(&g).map_err(usage)?);
    }
    with_output(&args.common.out, io.stdout, |w| {
        for line in &lines {
            writeln!(w, "{line}").map_err(write_failed)?;
        }
        Ok(())
    })?;
    Ok(EXIT_OK)
}

pub fn cmd_scan(args: ScanArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    let objective: Check = args.objective.parse().map_err(CliError::Usage)?;
    let checks = check_config(&args.checks, &args.common)?;
    let cfg = ScanConfig {
        n: args.n,
        budget: args.budget,
        seed: args.common.seed.unwrap_or(0),
        objective,
        checks,
    };
    let report = engine::scan(&cfg, args.common.workers)?;
    with_output(&args.common.out, io.stdout, |w| write_json(w, &report))?;
    Ok(if report.violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdRow {
    pub class: String,
    pub c: f64,
    pub epsilon: f64,
    pub omega_cap: usize,
    pub triangle_bound: String,
    pub raw_threshold: f64,
    pub edge_threshold: u64,
}

impl From<CorollaryClass> for ThresholdRow {
    fn from(class: CorollaryClass) -> Self {
        ThresholdRow {
            class: class.tag.to_string(),
            c: sig12(class.params.c),
            epsilon: class.params.epsilon,
            omega_cap: class.omega_cap,
            triangle_bound: class.triangle_bound,
            raw_threshold: sig12(class.raw_threshold),
            edge_threshold: class.edge_threshold,
        }
    }
}

pub fn threshold_rows(book_k: usize, cycle_k: usize) -> Result<Vec<ThresholdRow>, CliError> {
    [
        CorollaryTag::Planar,
        CorollaryTag::Outerplanar,
        CorollaryTag::BookFree(book_k),
        CorollaryTag::CycleFree(cycle_k),
    ]
    .into_iter()
    .map(|tag| corollary_class(tag).map(ThresholdRow::from).map_err(usage))
    .collect()
}

pub fn cmd_thresholds(args: ThresholdsArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    let rows = threshold_rows(args.book_k, args.cycle_k)?;
    with_output(&args.out, io.stdout, |w| match args.format {
        Some(Format::Json) => write_json(w, &rows),
        Some(Format::Csv) => {
            let mut csv = csv::Writer::from_writer(w);
            for row in &rows {
                csv.serialize(row)
                    .map_err(|e| CliError::Operational(format!("writing CSV: {e}")))?;
            }
            csv.flush().map_err(write_failed)
        }
        None => {
            let line = |w: &mut dyn Write, cols: [&str; 7]| {
                writeln!(
                    w,
                    "{:<12} {:>8} {:>5} {:>9} {:<18} {:>14} {:>10}",
                    cols[0], cols[1], cols[2], cols[3], cols[4], cols[5], cols[6]
                )
                .map_err(write_failed)
            };
            line(
                w,
                [
                    "class",
                    "c",
                    "eps",
                    "omega_cap",
                    "triangles",
                    "raw_threshold",
                    "min_edges",
                ],
            )?;
            for r in &rows {
                line(
                    w,
                    [
                        &r.class,
                        &format!("{:.6}", r.c),
                        &r.epsilon.to_string(),
                        &r.omega_cap.to_string(),
                        &r.triangle_bound,
                        &format!("{:.4}", r.raw_threshold),
                        &r.edge_threshold.to_string(),
                    ],
                )?;
            }
            Ok(())
        }
    })?;
    Ok(EXIT_OK)
}
