//! `cnergy` — common-neighborhood graph energies and theorem checking.

mod family_expr;
mod output;

use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cnergy::energy::EnergyReport;
use cnergy::graph::{enumerate_all_labeled_graphs, parse_edge_list, Graph};
use cnergy::graph6::{encode_graph6, parse_graph6};
use cnergy::scan::{scan_corpus, CheckSelection, ScanOptions, ScanSummary};
use cnergy::spectra::Spectrum;
use cnergy::{matrix, spectra, Tolerances};

use output::{fmt_f64, to_json};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_NUMERIC: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cnergy",
    version,
    about = "Common-neighborhood graph matrices, spectra, energies and theorem checks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the energy report for one or more graphs
    Compute(ComputeArgs),
    /// Run theorem checks over graphs; exits 3 when any check is violated
    Verify(VerifyArgs),
    /// Stream graph6 lines through the checks and flag hyperenergetic graphs
    Scan(ScanArgs),
    /// Expand family expressions to graph6 (without arguments: show the grammar)
    Families(FamiliesArgs),
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Family expression, e.g. K4+K6 or Kmn:2,3 (see `cnergy families`)
    #[arg(long, value_name = "EXPR")]
    family: Option<String>,
    /// Edge-list file, '-' for standard input
    #[arg(long, value_name = "PATH")]
    edges: Option<String>,
    /// File of graph6 lines, '-' for standard input
    #[arg(long, value_name = "PATH")]
    graph6: Option<String>,
}

#[derive(Args, Clone, Copy)]
struct ToleranceArgs {
    /// Override the relative Jacobi convergence tolerance
    #[arg(long, value_name = "T")]
    tau_solve: Option<f64>,
    /// Override the relative eigenvalue grouping tolerance
    #[arg(long, value_name = "T")]
    tau_group: Option<f64>,
    /// Override the absolute equality/violation tolerance
    #[arg(long, value_name = "T")]
    tau_eq: Option<f64>,
    /// Override the Jacobi sweep cap
    #[arg(long, value_name = "N")]
    max_sweeps: Option<usize>,
}

impl ToleranceArgs {
    fn build(&self) -> Result<Tolerances, String> {
        let mut tol = Tolerances::default();
        for (name, value, slot) in [
            ("tau-solve", self.tau_solve, &mut tol.tau_solve),
            ("tau-group", self.tau_group, &mut tol.tau_group),
            ("tau-eq", self.tau_eq, &mut tol.tau_eq),
        ] {
            if let Some(v) = value {
                if !(v > 0.0) {
                    return Err(format!("--{name} must be positive, got {v}"));
                }
                *slot = v;
            }
        }
        if let Some(cap) = self.max_sweeps {
            tol.max_sweeps = cap;
        }
        Ok(tol)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Include the six spectra in the output
    #[arg(long)]
    spectra: bool,
    #[command(flatten)]
    tolerances: ToleranceArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Check all labeled graphs on N vertices (1..=7)
    #[arg(long, value_name = "N")]
    exhaustive: Option<usize>,
    /// "all" or a comma list: identities, finite-sum, maximum-form,
    /// majorization, e-cn-bounds, le-cn-bounds, derived-graph
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for the scan
    #[arg(long, env = "CNERGY_WORKERS", default_value_t = 1)]
    workers: usize,
    #[command(flatten)]
    tolerances: ToleranceArgs,
    /// Invert the direction of one named check (diagnostics: exercises the
    /// violation-reporting path)
    #[arg(long, value_name = "THEOREM_ID", hide = true)]
    flip_check: Option<String>,
}

#[derive(Args)]
struct ScanArgs {
    /// File of graph6 lines, '-' for standard input
    #[arg(long, value_name = "PATH", default_value = "-")]
    graph6: String,
    /// "all" or a comma list of check groups
    #[arg(long, default_value = "all")]
    checks: String,
    /// Stop after this many graphs
    #[arg(long, value_name = "N")]
    limit: Option<usize>,
    /// Fail immediately on a malformed line instead of skipping it
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for the scan
    #[arg(long, env = "CNERGY_WORKERS", default_value_t = 1)]
    workers: usize,
    #[command(flatten)]
    tolerances: ToleranceArgs,
    #[arg(long, value_name = "THEOREM_ID", hide = true)]
    flip_check: Option<String>,
}

#[derive(Args)]
struct FamiliesArgs {
    /// Family expressions to expand, one graph6 line each
    exprs: Vec<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.cmd {
        Command::Compute(args) => cmd_compute(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Families(args) => cmd_families(args),
    };
    ExitCode::from(code)
}

fn input_error(message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    EXIT_INPUT
}

/// Single stdout write; a closed downstream pipe is not an error for a
/// filter-style tool.
fn write_stdout(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn read_source(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn parse_graph6_lines(text: &str, strict: bool) -> Result<Vec<Graph>, String> {
    let mut graphs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with(">>graph6<<") {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => graphs.push(g),
            Err(e) => {
                let message = format!("line {}: {e}", idx + 1);
                if strict {
                    return Err(message);
                }
                eprintln!("warning: skipping {message}");
            }
        }
    }
    Ok(graphs)
}

/// Loads graphs from exactly one of the three input sources.
fn load_graphs(input: &InputArgs) -> Result<Vec<Graph>, String> {
    let chosen = [input.family.is_some(), input.edges.is_some(), input.graph6.is_some()]
        .iter()
        .filter(|&&set| set)
        .count();
    if chosen != 1 {
        return Err("exactly one of --family, --edges, --graph6 is required".to_string());
    }
    if let Some(expr) = &input.family {
        let family = family_expr::parse_family(expr).map_err(|e| e.to_string())?;
        return Ok(vec![family.generate().map_err(|e| e.to_string())?]);
    }
    if let Some(path) = &input.edges {
        let text = read_source(path)?;
        return Ok(vec![parse_edge_list(&text).map_err(|e| e.to_string())?]);
    }
    let path = input.graph6.as_ref().expect("graph6 chosen");
    let graphs = parse_graph6_lines(&read_source(path)?, true)?;
    if graphs.is_empty() {
        return Err("no graphs in the graph6 input".to_string());
    }
    Ok(graphs)
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SpectrumOut {
    values: Vec<f64>,
    grouped: Vec<(f64, usize)>,
}

impl From<Spectrum> for SpectrumOut {
    fn from(s: Spectrum) -> Self {
        Self { values: s.values().to_vec(), grouped: s.grouped().to_vec() }
    }
}

#[derive(Serialize)]
struct SpectraOut {
    adjacency: SpectrumOut,
    laplacian: SpectrumOut,
    signless_laplacian: SpectrumOut,
    cn: SpectrumOut,
    cnl: SpectrumOut,
    cnsl: SpectrumOut,
}

#[derive(Serialize)]
struct ReportEntry {
    index: usize,
    #[serde(flatten)]
    report: EnergyReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectra: Option<SpectraOut>,
}

#[derive(Serialize)]
struct ComputeOutput {
    reports: Vec<ReportEntry>,
}

fn all_spectra(g: &Graph, tol: &Tolerances) -> Result<SpectraOut, cnergy::spectra::SolveError> {
    Ok(SpectraOut {
        adjacency: spectra::eigenvalues(&matrix::adjacency(g), tol)?.into(),
        laplacian: spectra::eigenvalues(&matrix::laplacian(g), tol)?.into(),
        signless_laplacian: spectra::eigenvalues(&matrix::signless_laplacian(g), tol)?.into(),
        cn: spectra::eigenvalues(&matrix::cn_matrix(g), tol)?.into(),
        cnl: spectra::eigenvalues_psd(&matrix::cn_laplacian(g), tol)?.into(),
        cnsl: spectra::eigenvalues_psd(&matrix::cn_signless_laplacian(g), tol)?.into(),
    })
}

fn cmd_compute(args: ComputeArgs) -> u8 {
    let tol = match args.tolerances.build() {
        Ok(tol) => tol,
        Err(e) => return input_error(e),
    };
    let graphs = match load_graphs(&args.input) {
        Ok(graphs) => graphs,
        Err(e) => return input_error(e),
    };

    let mut entries = Vec::new();
    for (index, g) in graphs.iter().enumerate() {
        let report = match EnergyReport::compute(g, &tol) {
            Ok(report) => report,
            Err(e) => {
                eprintln!("error: graph {index}: {e}");
                return EXIT_NUMERIC;
            }
        };
        let spectra_out = if args.spectra {
            match all_spectra(g, &tol) {
                Ok(s) => Some(s),
                Err(e) => {
                    eprintln!("error: graph {index}: {e}");
                    return EXIT_NUMERIC;
                }
            }
        } else {
            None
        };
        entries.push(ReportEntry { index, report, spectra: spectra_out });
    }

    let mut out = String::new();
    match args.format {
        Format::Json => {
            out.push_str(&to_json(&ComputeOutput { reports: entries }));
            out.push('\n');
        }
        Format::Csv => {
            out.push_str(EnergyReport::CSV_HEADER);
            out.push('\n');
            for entry in &entries {
                out.push_str(&entry.report.to_csv_row(fmt_f64));
                out.push('\n');
            }
        }
        Format::Text => {
            for entry in &entries {
                out.push_str(&report_text(entry));
            }
        }
    }
    write_stdout(&out);
    EXIT_OK
}

fn report_text(entry: &ReportEntry) -> String {
    use std::fmt::Write;
    let r = &entry.report;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "graph {}: n={} edges={} zagreb_m1={} trace_cnrs={}",
        entry.index, r.n, r.m_edges, r.zagreb_m1, r.trace_cnrs
    );
    for (name, value) in [
        ("energy", r.energy),
        ("laplacian_energy", r.laplacian_energy),
        ("signless_laplacian_energy", r.signless_laplacian_energy),
        ("cn_energy", r.cn_energy),
        ("cn_laplacian_energy", r.cn_laplacian_energy),
        ("cn_signless_laplacian_energy", r.cn_signless_laplacian_energy),
    ] {
        let _ = writeln!(out, "  {name:<29} {}", fmt_f64(value));
    }
    let f = &r.hyper_flags;
    let mut hyper = Vec::new();
    for (name, set) in [
        ("adjacency", f.hyper),
        ("laplacian", f.l_hyper),
        ("signless-laplacian", f.q_hyper),
        ("cn", f.cn_hyper),
        ("cnl", f.cnl_hyper),
        ("cnsl", f.cnsl_hyper),
    ] {
        if set {
            hyper.push(name);
        }
    }
    let _ = writeln!(
        out,
        "  hyperenergetic: {}",
        if hyper.is_empty() { "none".to_string() } else { hyper.join(", ") }
    );
    if let Some(spectra) = &entry.spectra {
        for (name, spec) in [
            ("adjacency", &spectra.adjacency),
            ("laplacian", &spectra.laplacian),
            ("signless_laplacian", &spectra.signless_laplacian),
            ("cn", &spectra.cn),
            ("cnl", &spectra.cnl),
            ("cnsl", &spectra.cnsl),
        ] {
            let groups: Vec<String> =
                spec.grouped.iter().map(|(v, m)| format!("{} x{m}", fmt_f64(*v))).collect();
            let _ = writeln!(out, "  {name} spectrum: {}", groups.join(", "));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// verify / scan
// ---------------------------------------------------------------------------

/// Splits the corpus across workers in index order and merges the partial
/// summaries; output is identical for any worker count.
fn parallel_scan(
    graphs: Vec<Graph>,
    selection: &CheckSelection,
    opts: &ScanOptions,
    workers: usize,
) -> ScanSummary {
    if workers <= 1 || graphs.len() < 2 {
        return scan_corpus(graphs, selection, opts);
    }
    let chunk = graphs.len().div_ceil(workers * 4).max(1);
    let batches: Vec<(u64, Vec<Graph>)> = graphs
        .chunks(chunk)
        .enumerate()
        .map(|(i, slice)| (opts.start_index + (i * chunk) as u64, slice.to_vec()))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let mut summary = pool.install(|| {
        use rayon::prelude::*;
        batches
            .into_par_iter()
            .map(|(start, batch)| {
                let batch_opts = ScanOptions { start_index: start, ..opts.clone() };
                scan_corpus(batch, selection, &batch_opts)
            })
            .reduce(ScanSummary::default, |mut acc, part| {
                acc.merge(part);
                acc
            })
    });
    summary.finalize();
    summary
}

fn exhaustive_scan(
    n: usize,
    selection: &CheckSelection,
    opts: &ScanOptions,
    workers: usize,
) -> Result<ScanSummary, String> {
    let _ = enumerate_all_labeled_graphs(n).map_err(|e| e.to_string())?;
    let total = 1u64 << (n * (n - 1) / 2);
    if workers <= 1 {
        let graphs = enumerate_all_labeled_graphs(n).expect("validated");
        return Ok(scan_corpus(graphs, selection, opts));
    }
    let ranges: Vec<(u64, u64)> = {
        let parts = (workers * 4).max(1) as u64;
        let step = total.div_ceil(parts).max(1);
        (0..total).step_by(step as usize).map(|lo| (lo, (lo + step).min(total))).collect()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let mut summary = pool.install(|| {
        use rayon::prelude::*;
        ranges
            .into_par_iter()
            .map(|(lo, hi)| {
                let graphs = enumerate_all_labeled_graphs(n)
                    .expect("validated")
                    .skip(lo as usize)
                    .take((hi - lo) as usize);
                let batch_opts = ScanOptions { start_index: lo, ..opts.clone() };
                scan_corpus(graphs, selection, &batch_opts)
            })
            .reduce(ScanSummary::default, |mut acc, part| {
                acc.merge(part);
                acc
            })
    });
    summary.finalize();
    Ok(summary)
}

fn summary_exit_code(summary: &ScanSummary) -> u8 {
    if summary.violation_count() > 0 {
        EXIT_VIOLATION
    } else if !summary.failures.is_empty() {
        EXIT_NUMERIC
    } else {
        EXIT_OK
    }
}

fn summary_text(summary: &ScanSummary, show_hyper: bool) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "graphs checked: {}", summary.graphs);
    let _ = writeln!(out, "violations: {}", summary.violation_count());
    let _ = writeln!(
        out,
        "{:<32} {:>10} {:>10} {:>16} {:>10}",
        "theorem", "checked", "violated", "min slack", "equal"
    );
    for (id, stats) in &summary.theorems {
        let _ = writeln!(
            out,
            "{:<32} {:>10} {:>10} {:>16} {:>10}",
            id,
            stats.checked,
            stats.violations,
            stats.min_slack.map_or("-".to_string(), fmt_f64),
            stats.equality_count
        );
    }
    for v in &summary.violations {
        let _ = writeln!(
            out,
            "VIOLATION #{} {} {}: lhs={} rhs={} slack={}",
            v.index,
            v.graph6,
            v.theorem_id,
            fmt_f64(v.lhs),
            fmt_f64(v.rhs),
            fmt_f64(v.slack)
        );
    }
    for f in &summary.failures {
        let _ = writeln!(out, "FAILURE #{}: {}", f.index, f.message);
    }
    if show_hyper {
        let _ = writeln!(out, "hyperenergetic graphs: {}", summary.hyper_hits.len());
        for hit in &summary.hyper_hits {
            let f = &hit.flags;
            let mut kinds = Vec::new();
            for (name, set) in [
                ("adjacency", f.hyper),
                ("laplacian", f.l_hyper),
                ("signless-laplacian", f.q_hyper),
                ("cn", f.cn_hyper),
                ("cnl", f.cnl_hyper),
                ("cnsl", f.cnsl_hyper),
            ] {
                if set {
                    kinds.push(name);
                }
            }
            let _ = writeln!(out, "  #{} {} [{}]", hit.index, hit.graph6, kinds.join(", "));
        }
    }
    out
}

fn cmd_verify(args: VerifyArgs) -> u8 {
    let tol = match args.tolerances.build() {
        Ok(tol) => tol,
        Err(e) => return input_error(e),
    };
    let selection: CheckSelection = match args.checks.parse() {
        Ok(selection) => selection,
        Err(e) => return input_error(e),
    };
    let opts = ScanOptions {
        tolerances: tol,
        classify_hyper: false,
        flip_check: args.flip_check.clone(),
        ..ScanOptions::default()
    };

    let has_input =
        args.input.family.is_some() || args.input.edges.is_some() || args.input.graph6.is_some();
    let summary = if let Some(n) = args.exhaustive {
        if has_input {
            return input_error("--exhaustive cannot be combined with another input source");
        }
        match exhaustive_scan(n, &selection, &opts, args.workers) {
            Ok(summary) => summary,
            Err(e) => return input_error(e),
        }
    } else {
        let graphs = match load_graphs(&args.input) {
            Ok(graphs) => graphs,
            Err(e) => return input_error(e),
        };
        parallel_scan(graphs, &selection, &opts, args.workers)
    };

    match args.format {
        Format::Json => write_stdout(&format!("{}\n", to_json(&summary))),
        _ => write_stdout(&summary_text(&summary, false)),
    }
    summary_exit_code(&summary)
}

fn cmd_scan(args: ScanArgs) -> u8 {
    let tol = match args.tolerances.build() {
        Ok(tol) => tol,
        Err(e) => return input_error(e),
    };
    let selection: CheckSelection = match args.checks.parse() {
        Ok(selection) => selection,
        Err(e) => return input_error(e),
    };
    let text = match read_source(&args.graph6) {
        Ok(text) => text,
        Err(e) => return input_error(e),
    };
    let mut graphs = match parse_graph6_lines(&text, args.strict) {
        Ok(graphs) => graphs,
        Err(e) => return input_error(e),
    };
    if let Some(limit) = args.limit {
        graphs.truncate(limit);
    }

    let opts = ScanOptions {
        tolerances: tol,
        classify_hyper: true,
        flip_check: args.flip_check.clone(),
        ..ScanOptions::default()
    };
    let summary = parallel_scan(graphs, &selection, &opts, args.workers);

    match args.format {
        Format::Json => write_stdout(&format!("{}\n", to_json(&summary))),
        _ => write_stdout(&summary_text(&summary, true)),
    }
    summary_exit_code(&summary)
}

fn cmd_families(args: FamiliesArgs) -> u8 {
    if args.exprs.is_empty() {
        write_stdout(&format!("{}\n", family_expr::GRAMMAR_HELP));
        return EXIT_OK;
    }
    for expr in &args.exprs {
        let family = match family_expr::parse_family(expr) {
            Ok(family) => family,
            Err(e) => return input_error(format!("{expr}: {e}")),
        };
        let graph = match family.generate() {
            Ok(graph) => graph,
            Err(e) => return input_error(format!("{expr}: {e}")),
        };
        write_stdout(&format!("{}\n", encode_graph6(&graph)));
    }
    EXIT_OK
}
