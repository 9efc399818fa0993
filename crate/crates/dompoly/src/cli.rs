//! The `dompoly` command line.
//!
//! Exit codes: 0 success, 1 bad input, 2 size limit exceeded, 3 two
//! independent computations disagreed, 4 a verified identity failed.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use dompoly_core::count::{coeff_stats, CountError, Counter, Limits, Method};
use dompoly_core::expr::{eval_poly, parse_expr, EvalError, Evaluation, Strategy};
use dompoly_core::verify::{
    verify_agreement, verify_corona_gamma, verify_corona_modes, verify_graph, CheckRecord,
    CheckStatus, ScanSummary, VerifyReport,
};
use dompoly_core::{DomPoly, Graph, GraphError, GraphExpr, HARD_MAX_N};
use serde::Serialize;
use thiserror::Error;

use crate::corpus;
use crate::formats::json::{PolyJson, RecordJson, TraceJson};
use crate::formats::{encode_graph6, parse_edge_list, parse_graph6};
use crate::parallel::{available_threads, par_map, Threaded};

#[derive(Debug, Parser)]
#[command(
    name = "dompoly",
    version,
    about = "Exact domination polynomials of small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest graph order accepted by subset enumeration (at most 32).
    #[arg(long, global = true, env = "DOMPOLY_MAX_N", default_value_t = dompoly_core::DEFAULT_MAX_N)]
    max_n: usize,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Rewrite rules where they apply, enumeration elsewhere.
    Auto,
    /// Enumerate all subsets.
    Enum,
    /// Inclusion-exclusion over closed neighbourhoods.
    Ie,
    /// Rewrite rules only.
    Rewrite,
}

impl MethodArg {
    fn name(self) -> &'static str {
        match self {
            MethodArg::Auto => "auto",
            MethodArg::Enum => "enum",
            MethodArg::Ie => "ie",
            MethodArg::Rewrite => "rewrite",
        }
    }

    fn strategy(self) -> (Strategy, Method) {
        match self {
            MethodArg::Auto => (Strategy::Auto, Method::Bruteforce),
            MethodArg::Enum => (Strategy::EnumerateOnly, Method::Bruteforce),
            MethodArg::Ie => (Strategy::EnumerateOnly, Method::InclusionExclusion),
            MethodArg::Rewrite => (Strategy::RewriteOnly, Method::Bruteforce),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// A file path picks graph6 (`.g6`, `.graph6`) or edge list by extension;
    /// anything else is an expression.
    Auto,
    Expr,
    G6,
    Edges,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Graph expression such as "corona_k1(path(3))", or a graph file.
    input: String,

    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,
}

#[derive(Debug, Args)]
struct PolyArgs {
    #[command(flatten)]
    input: InputArgs,

    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,

    /// Print the rewrite rules that produced the polynomial.
    #[arg(long)]
    trace: bool,

    /// Also run both enumeration backends and compare.
    #[arg(long)]
    cross_check: bool,
}

#[derive(Debug, Args)]
struct RandomArgs {
    /// Number of random graphs.
    #[arg(long)]
    random: Option<usize>,

    #[arg(long, default_value_t = 6)]
    min_order: usize,

    #[arg(long, default_value_t = 14)]
    max_order: usize,

    /// Edge probabilities, one picked uniformly per graph.
    #[arg(long, value_delimiter = ',', default_values_t = [0.2, 0.5, 0.8])]
    p: Vec<f64>,

    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Graph expression or file; omit when using a sweep option.
    input: Option<String>,

    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,

    /// Sweep every labelled graph with at most this many vertices.
    #[arg(long)]
    exhaustive: Option<usize>,

    /// Check the mode structure of G∘K1 for base orders 1..=N.
    #[arg(long)]
    corona_modes: Option<usize>,

    #[command(flatten)]
    random: RandomArgs,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// File with one graph6 string per line.
    corpus: Option<PathBuf>,

    #[arg(long)]
    exhaustive: Option<usize>,

    #[command(flatten)]
    random: RandomArgs,

    /// Counterexample log, one `graph6 coefficients` line per hit.
    #[arg(long, default_value = "unimodality-counterexamples.log")]
    log: PathBuf,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long)]
    exhaustive: Option<usize>,

    #[command(flatten)]
    random: RandomArgs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print D(G,x).
    Poly(PolyArgs),
    /// Tabulate d(G,i) over the support with mode markers.
    Table(PolyArgs),
    /// Check the coefficient identities.
    Verify(VerifyArgs),
    /// Look for graphs whose polynomial is not unimodal.
    Scan(ScanArgs),
    /// Write a graph6 corpus to stdout.
    Generate(GenerateArgs),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    SizeLimit(String),
    #[error("oracle disagreement: {0}")]
    Disagreement(String),
    #[error("{0} check(s) failed")]
    VerifyFailed(usize),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 1,
            CliError::SizeLimit(_) => 2,
            CliError::Disagreement(_) => 3,
            CliError::VerifyFailed(_) => 4,
        }
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        match e {
            CountError::TooLarge { .. } | CountError::DpTooLarge { .. } => {
                CliError::SizeLimit(e.to_string())
            }
            CountError::NegativeCoefficient(_) => CliError::Disagreement(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::TooManyVertices { .. } => CliError::SizeLimit(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::Count(c) => c.into(),
            EvalError::Graph(g) => g.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

struct Ctx {
    limits: Limits,
    threads: usize,
    format: Format,
}

impl Ctx {
    fn counter(&self) -> Threaded {
        Threaded::new(self.limits, self.threads)
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn load_input(text: &str, format: InputFormat) -> Result<GraphExpr, CliError> {
    let path = Path::new(text);
    let format = match format {
        InputFormat::Auto if path.is_file() => match path.extension().and_then(|e| e.to_str()) {
            Some("g6" | "graph6") => InputFormat::G6,
            _ => InputFormat::Edges,
        },
        InputFormat::Auto => InputFormat::Expr,
        f => f,
    };
    let read = || {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
    };
    match format {
        InputFormat::Expr => parse_expr(text).map_err(|e| CliError::Input(e.to_string())),
        InputFormat::Edges => parse_edge_list(&read()?)
            .map(GraphExpr::Literal)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        InputFormat::G6 => {
            let contents = read()?;
            let lines = graph6_lines(&contents);
            match lines.as_slice() {
                [line] => parse_graph6(line)
                    .map(GraphExpr::Literal)
                    .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
                _ => Err(CliError::Input(format!(
                    "{}: expected exactly one graph, found {}",
                    path.display(),
                    lines.len()
                ))),
            }
        }
        InputFormat::Auto => unreachable!(),
    }
}

fn graph6_lines(contents: &str) -> Vec<&str> {
    contents
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect()
}

/// Both subset sweeps on the built graph; exit code 3 if they differ.
fn enumerate_both(ctx: &Ctx, g: &Graph) -> Result<DomPoly, CliError> {
    let counter = ctx.counter();
    let brute = counter.count(g, Method::Bruteforce)?;
    let ie = counter.count(g, Method::InclusionExclusion)?;
    if brute != ie {
        return Err(CliError::Disagreement(format!(
            "enumeration gives {brute}, inclusion-exclusion gives {ie}"
        )));
    }
    Ok(brute)
}

fn evaluate(ctx: &Ctx, args: &PolyArgs) -> Result<(GraphExpr, Evaluation), CliError> {
    let expr = load_input(&args.input.input, args.input.input_format)?;
    let (strategy, method) = args.method.strategy();
    let ev = eval_poly(&expr, strategy, method, &ctx.counter())?;
    if args.cross_check {
        let g = expr.build()?;
        let both = enumerate_both(ctx, &g)?;
        if both != ev.poly {
            return Err(CliError::Disagreement(format!(
                "method {} gives {}, enumeration gives {both}",
                args.method.name(),
                ev.poly
            )));
        }
    }
    Ok((expr, ev))
}

#[derive(Serialize)]
struct PolyOutput<'a> {
    input: &'a str,
    order: usize,
    method: &'static str,
    gamma: Option<usize>,
    coeffs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<TraceJson>>,
}

fn gamma_of(order: usize, p: &DomPoly) -> Option<usize> {
    if order == 0 {
        None
    } else {
        p.min_degree()
    }
}

fn cmd_poly(ctx: &Ctx, args: &PolyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (expr, ev) = evaluate(ctx, args)?;
    let order = expr.order();
    let gamma = gamma_of(order, &ev.poly);
    match ctx.format {
        Format::Json => json_line(
            out,
            &PolyOutput {
                input: &args.input.input,
                order,
                method: args.method.name(),
                gamma,
                coeffs: PolyJson::from(&ev.poly).coeffs,
                trace: args
                    .trace
                    .then(|| ev.trace.iter().map(TraceJson::from).collect()),
            },
        )?,
        Format::Csv => {
            writeln!(out, "degree,count")?;
            for (i, c) in ev.poly.coeffs().iter().enumerate() {
                writeln!(out, "{i},{c}")?;
            }
        }
        Format::Human => {
            writeln!(out, "graph:  {}", args.input.input)?;
            writeln!(out, "order:  {order}")?;
            match gamma {
                Some(g) => writeln!(out, "gamma:  {g}")?,
                None => writeln!(out, "gamma:  undefined (no vertices)")?,
            }
            writeln!(out, "D(G,x): {}", ev.poly)?;
            let coeffs: Vec<String> = ev.poly.coeffs().iter().map(|c| c.to_string()).collect();
            writeln!(out, "coeffs: [{}]", coeffs.join(", "))?;
            if args.trace {
                writeln!(out, "trace:")?;
                for s in &ev.trace {
                    writeln!(
                        out,
                        "  {:<30} {} (order {})",
                        s.rule.as_str(),
                        s.node,
                        s.order
                    )?;
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct TableRow {
    degree: usize,
    count: String,
    mode: bool,
}

fn cmd_table(ctx: &Ctx, args: &PolyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (_, ev) = evaluate(ctx, args)?;
    let p = &ev.poly;
    let modes = p.analyze_modes().map(|m| m.modes).unwrap_or_default();
    let lo = p.min_degree().unwrap_or(0);
    let rows: Vec<TableRow> = p
        .coeffs()
        .iter()
        .enumerate()
        .skip(lo)
        .map(|(i, c)| TableRow {
            degree: i,
            count: c.to_string(),
            mode: modes.contains(&i),
        })
        .collect();
    match ctx.format {
        Format::Json => json_line(out, &rows)?,
        Format::Csv => {
            writeln!(out, "degree,count")?;
            for r in &rows {
                writeln!(out, "{},{}", r.degree, r.count)?;
            }
        }
        Format::Human => {
            let width = rows.iter().map(|r| r.count.len()).max().unwrap_or(0).max(5);
            writeln!(out, "degree  {:>width$}", "count")?;
            for r in &rows {
                let mark = if r.mode { "  <- mode" } else { "" };
                writeln!(out, "{:>6}  {:>width$}{mark}", r.degree, r.count)?;
            }
        }
    }
    Ok(())
}

fn verify_expr(ctx: &Ctx, label: &str, expr: &GraphExpr) -> Result<VerifyReport, CliError> {
    ctx.limits.check(expr.order())?;
    let g = expr.build()?;
    let enumerated = enumerate_both(ctx, &g)?;
    let rewritten = eval_poly(expr, Strategy::Auto, Method::Bruteforce, &ctx.counter())?.poly;
    let st = coeff_stats(&g);

    let mut report = VerifyReport::new(label);
    let agreement = verify_agreement("rewrite_matches_enumeration", &enumerated, &rewritten);
    if agreement.status == CheckStatus::Fail {
        return Err(CliError::Disagreement(format!(
            "rewrite gives {rewritten}, enumeration gives {enumerated}"
        )));
    }
    report.records.push(agreement);
    report.extend(verify_graph(&g, &enumerated, &st).map_err(|e| CliError::Input(e.to_string()))?);
    if let GraphExpr::CoronaK1(base) = expr {
        let n = base.order();
        report.records.push(verify_corona_gamma(&st, n));
        if n >= 1 {
            report.extend(verify_corona_modes(n));
        }
    }
    Ok(report)
}

/// Per-check tallies over many reports.
#[derive(Default, Serialize)]
struct Tally {
    pass: u64,
    fail: u64,
    skipped: u64,
}

#[derive(Default, Serialize)]
struct SweepSummary {
    checked: u64,
    disagreements: u64,
    checks: BTreeMap<&'static str, Tally>,
    failures: Vec<FailureJson>,
}

#[derive(Serialize)]
struct FailureJson {
    graph: String,
    record: RecordJson,
}

impl SweepSummary {
    fn add(&mut self, report: &VerifyReport) {
        self.checked += 1;
        for r in &report.records {
            let t = self.checks.entry(r.name).or_default();
            match r.status {
                CheckStatus::Pass => t.pass += 1,
                CheckStatus::Fail => t.fail += 1,
                CheckStatus::Skipped => t.skipped += 1,
            }
        }
        for r in report.failures() {
            self.failures.push(FailureJson {
                graph: report.id.clone(),
                record: RecordJson::from(r),
            });
        }
    }

    fn failed(&self) -> u64 {
        self.checks.values().map(|t| t.fail).sum()
    }
}

/// Verifies one labelled graph with both sweeps; a disagreement is reported
/// as a failed agreement record.
fn verify_labelled(g: &Graph, limits: &Limits) -> Result<VerifyReport, CountError> {
    let brute = limits.count(g, Method::Bruteforce)?;
    let ie = limits.count(g, Method::InclusionExclusion)?;
    let mut report = VerifyReport::new(encode_graph6(g));
    report.records.push(verify_agreement(
        "enumeration_matches_inclusion_exclusion",
        &brute,
        &ie,
    ));
    report.extend(verify_graph(g, &brute, &coeff_stats(g)).expect("stats from the same graph"));
    Ok(report)
}

fn sweep(ctx: &Ctx, graphs: &[Graph]) -> Result<SweepSummary, CliError> {
    let limits = ctx.limits;
    let reports = par_map(graphs, ctx.threads, |g| verify_labelled(g, &limits));
    let mut summary = SweepSummary::default();
    for r in reports {
        let r = r?;
        if r.records[0].status == CheckStatus::Fail {
            summary.disagreements += 1;
        }
        summary.add(&r);
    }
    Ok(summary)
}

fn write_sweep(
    ctx: &Ctx,
    title: &str,
    summary: &SweepSummary,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match ctx.format {
        Format::Json => json_line(out, summary)?,
        Format::Csv => {
            writeln!(out, "check,pass,fail,skipped")?;
            for (name, t) in &summary.checks {
                writeln!(out, "{name},{},{},{}", t.pass, t.fail, t.skipped)?;
            }
        }
        Format::Human => {
            writeln!(out, "{title}: {} graph(s) checked", summary.checked)?;
            writeln!(out, "oracle disagreements: {}", summary.disagreements)?;
            for (name, t) in &summary.checks {
                writeln!(
                    out,
                    "  {name:<40} pass {:>7}  fail {:>5}  skipped {:>7}",
                    t.pass, t.fail, t.skipped
                )?;
            }
            for f in summary.failures.iter().take(20) {
                writeln!(
                    out,
                    "FAIL {} {} {:?}",
                    f.graph, f.record.name, f.record.note
                )?;
            }
        }
    }
    Ok(())
}

fn sweep_result(summary: &SweepSummary) -> Result<(), CliError> {
    if summary.disagreements > 0 {
        Err(CliError::Disagreement(format!(
            "{} graph(s) where enumeration and inclusion-exclusion differ",
            summary.disagreements
        )))
    } else if summary.failed() > 0 {
        Err(CliError::VerifyFailed(summary.failed() as usize))
    } else {
        Ok(())
    }
}

fn random_corpus(args: &RandomArgs, count: usize) -> Result<Vec<Graph>, CliError> {
    if args.min_order > args.max_order || args.max_order > HARD_MAX_N {
        return Err(CliError::Input(format!(
            "order range {}..={} must be nonempty and at most {HARD_MAX_N}",
            args.min_order, args.max_order
        )));
    }
    if args.p.is_empty() || args.p.iter().any(|p| !(0.0..=1.0).contains(p)) {
        return Err(CliError::Input(
            "edge probabilities must lie in [0, 1]".into(),
        ));
    }
    Ok(corpus::random_graphs(
        args.seed,
        count,
        args.min_order..=args.max_order,
        &args.p,
    ))
}

fn exhaustive_corpus(max_n: usize) -> Result<Vec<Graph>, CliError> {
    if max_n > 7 {
        return Err(CliError::SizeLimit(format!(
            "exhaustive sweeps are limited to 7 vertices, got {max_n}"
        )));
    }
    Ok(corpus::exhaustive(max_n))
}

fn write_report(ctx: &Ctx, report: &VerifyReport, out: &mut dyn Write) -> Result<(), CliError> {
    #[derive(Serialize)]
    struct ReportJson<'a> {
        id: &'a str,
        passed: bool,
        records: Vec<RecordJson>,
    }
    match ctx.format {
        Format::Json => json_line(
            out,
            &ReportJson {
                id: &report.id,
                passed: report.passed(),
                records: report.records.iter().map(RecordJson::from).collect(),
            },
        )?,
        Format::Csv => {
            writeln!(out, "check,status,expected,observed")?;
            for r in &report.records {
                let j = RecordJson::from(r);
                let show = |v: &Option<serde_json::Value>| {
                    v.as_ref()
                        .map(|v| v.to_string())
                        .unwrap_or_default()
                        .replace(',', ";")
                };
                writeln!(
                    out,
                    "{},{},{},{}",
                    j.name,
                    j.status,
                    show(&j.expected),
                    show(&j.observed)
                )?;
            }
        }
        Format::Human => {
            writeln!(out, "{}", report.id)?;
            for r in &report.records {
                writeln!(out, "  {}", describe(r))?;
            }
            writeln!(
                out,
                "{} passed, {} skipped, {} failed",
                report.count(CheckStatus::Pass),
                report.count(CheckStatus::Skipped),
                report.count(CheckStatus::Fail)
            )?;
        }
    }
    Ok(())
}

fn describe(r: &CheckRecord) -> String {
    let j = RecordJson::from(r);
    let mut s = format!("{:<7} {}", j.status, j.name);
    if let (Some(e), Some(o)) = (&j.expected, &j.observed) {
        let _ = write!(s, "  expected {e} observed {o}");
    }
    if !j.note.is_empty() {
        let _ = write!(s, "  ({})", j.note);
    }
    s
}

fn cmd_verify(ctx: &Ctx, args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let modes = [
        args.input.is_some(),
        args.exhaustive.is_some(),
        args.corona_modes.is_some(),
        args.random.random.is_some(),
    ];
    if modes.iter().filter(|&&m| m).count() != 1 {
        return Err(CliError::Input(
            "give exactly one of INPUT, --exhaustive, --corona-modes, --random".into(),
        ));
    }

    if let Some(input) = &args.input {
        let expr = load_input(input, args.input_format)?;
        let report = verify_expr(ctx, input, &expr)?;
        write_report(ctx, &report, out)?;
        return match report.failures().count() {
            0 => Ok(()),
            k => Err(CliError::VerifyFailed(k)),
        };
    }
    if let Some(max_n) = args.corona_modes {
        let mut summary = SweepSummary::default();
        for n in 1..=max_n {
            summary.add(&verify_corona_modes(n));
        }
        write_sweep(ctx, "corona mode structure", &summary, out)?;
        return sweep_result(&summary);
    }
    let (title, graphs) = match (args.exhaustive, args.random.random) {
        (Some(max_n), _) => (
            format!("all labelled graphs on at most {max_n} vertices"),
            exhaustive_corpus(max_n)?,
        ),
        (_, Some(count)) => (
            format!("{count} random graphs (seed {})", args.random.seed),
            random_corpus(&args.random, count)?,
        ),
        _ => unreachable!("one mode selected"),
    };
    let summary = sweep(ctx, &graphs)?;
    write_sweep(ctx, &title, &summary, out)?;
    sweep_result(&summary)
}

/// Unimodality scan over `graphs`, labelled by their graph6 strings.
pub fn scan_graphs(
    graphs: &[Graph],
    limits: &Limits,
    threads: usize,
) -> Result<ScanSummary, CountError> {
    let chunk = graphs.len().div_ceil(threads.max(1)).max(1);
    let chunks: Vec<&[Graph]> = graphs.chunks(chunk).collect();
    let parts = par_map(&chunks, threads, |part| {
        let labelled: Vec<(String, &Graph)> = part.iter().map(|g| (encode_graph6(g), g)).collect();
        dompoly_core::verify::scan_unimodality(labelled, limits, Method::Bruteforce)
    });
    let mut total = ScanSummary::default();
    for p in parts {
        total.merge(p?);
    }
    Ok(total)
}

fn cmd_scan(ctx: &Ctx, args: &ScanArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let sources = [
        args.corpus.is_some(),
        args.exhaustive.is_some(),
        args.random.random.is_some(),
    ];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return Err(CliError::Input(
            "give exactly one of CORPUS, --exhaustive, --random".into(),
        ));
    }
    let graphs = if let Some(path) = &args.corpus {
        let contents = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        graph6_lines(&contents)
            .into_iter()
            .enumerate()
            .filter(|(_, l)| *l != ">>graph6<<")
            .map(|(i, l)| {
                parse_graph6(l).map_err(|e| match e {
                    crate::formats::Graph6Error::TooLarge { .. } => {
                        CliError::SizeLimit(format!("{}:{}: {e}", path.display(), i + 1))
                    }
                    _ => CliError::Input(format!("{}:{}: {e}", path.display(), i + 1)),
                })
            })
            .collect::<Result<Vec<_>, _>>()?
    } else if let Some(max_n) = args.exhaustive {
        exhaustive_corpus(max_n)?
    } else {
        random_corpus(&args.random, args.random.random.unwrap_or(0))?
    };

    let summary = scan_graphs(&graphs, &ctx.limits, ctx.threads)?;

    let mut log = format!(
        "# unimodality scan: {} checked, {} counterexample(s)\n",
        summary.checked,
        summary.counterexamples.len()
    );
    for c in &summary.counterexamples {
        let coeffs: Vec<String> = c.poly.coeffs().iter().map(|x| x.to_string()).collect();
        let _ = writeln!(log, "{} {}", c.label, coeffs.join(","));
    }
    std::fs::write(&args.log, log)?;

    #[derive(Serialize)]
    struct Hit {
        graph6: String,
        coeffs: Vec<String>,
    }
    #[derive(Serialize)]
    struct ScanJson {
        checked: u64,
        counterexamples: Vec<Hit>,
        not_log_concave: u64,
    }
    match ctx.format {
        Format::Json => json_line(
            out,
            &ScanJson {
                checked: summary.checked,
                not_log_concave: summary.not_log_concave,
                counterexamples: summary
                    .counterexamples
                    .iter()
                    .map(|c| Hit {
                        graph6: c.label.clone(),
                        coeffs: PolyJson::from(&c.poly).coeffs,
                    })
                    .collect(),
            },
        )?,
        Format::Csv => {
            writeln!(out, "checked,counterexamples,not_log_concave")?;
            writeln!(
                out,
                "{},{},{}",
                summary.checked,
                summary.counterexamples.len(),
                summary.not_log_concave
            )?;
        }
        Format::Human => {
            writeln!(out, "{} checked", summary.checked)?;
            writeln!(out, "{} counterexamples", summary.counterexamples.len())?;
            writeln!(out, "{} not log-concave", summary.not_log_concave)?;
            for c in &summary.counterexamples {
                writeln!(out, "non-unimodal: {} {}", c.label, c.poly)?;
            }
            writeln!(out, "log written to {}", args.log.display())?;
        }
    }
    Ok(())
}

fn cmd_generate(args: &GenerateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let graphs = match (args.exhaustive, args.random.random) {
        (Some(max_n), None) => exhaustive_corpus(max_n)?,
        (None, Some(count)) => random_corpus(&args.random, count)?,
        _ => {
            return Err(CliError::Input(
                "give exactly one of --exhaustive, --random".into(),
            ))
        }
    };
    for g in &graphs {
        writeln!(out, "{}", encode_graph6(g))?;
    }
    Ok(())
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    if cli.max_n > HARD_MAX_N {
        let _ = writeln!(err, "error: --max-n is at most {HARD_MAX_N}");
        return 1;
    }
    let ctx = Ctx {
        limits: Limits::with_max_n(cli.max_n),
        threads: cli.threads.unwrap_or_else(available_threads).max(1),
        format: cli.format,
    };
    let result = match &cli.command {
        Command::Poly(a) => cmd_poly(&ctx, a, out),
        Command::Table(a) => cmd_table(&ctx, a, out),
        Command::Verify(a) => cmd_verify(&ctx, a, out),
        Command::Scan(a) => cmd_scan(&ctx, a, out),
        Command::Generate(a) => cmd_generate(a, out),
    };
    match result {
        Ok(()) => 0,
        // reader went away (`dompoly generate ... | head`)
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
