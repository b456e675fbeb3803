//! Command-line driver.
//!
//! Exit status: 0 when every check passes, 1 when a check fails (the report
//! is still written), 2 for usage or input errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{int, parse_rational, Rational};
use crate::crab::{mirror_twenty_weights, non_far_crab_weights, render_svg, twenty_weights};
use crate::exceptional::{exceptional_failures, po_failures, Collection, OrderKind};
use crate::root_system::{RootKind, RootSystem, Weight};
use crate::search::falsify::{falsify_variant, FalsifierResult, LemmaId, Variant, DEFAULT_RADIUS_SQ};
use crate::search::{fact_close, fact_forty, fact_nodmz, maxpts_search, SearchReport};
use crate::steinberg::{
    basis_determinant_oracle, replay_paper_bases, steinberg_basis, verify_quadric_obstruction, BasisState,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "excoll", version, about = "Exceptional collections of line bundles on rank-2 flag varieties")]
pub struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Zero all timings so output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    deterministic: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    All,
    Nodmz,
    Forty,
    Close,
    Maxpts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Total,
    WeakBruhat,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dump Cartan data, positive roots, coroots and the Weyl group.
    Roots {
        #[arg(long = "type")]
        kind: String,
    },
    /// Steinberg basis, the re-derived modified bases, and their determinant
    /// checks.
    Steinberg {
        #[arg(long = "type")]
        kind: String,
    },
    /// Check a collection file for exceptionality.
    Verify {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        collection: PathBuf,
        /// Overrides the order stored in the file.
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
    },
    /// Reproduce the G2 search facts.
    Facts {
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Bounded counterexample search for a crab lemma.
    Falsify {
        /// Lemma id, or `all`.
        #[arg(long)]
        lemma: String,
        /// Bound on ‖λ + ρ‖² for scanned crab weights (integer, p/q or decimal).
        #[arg(long = "radius-sq")]
        radius_sq: Option<String>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
        /// Shift one threshold of each lemma by one unit.
        #[arg(long)]
        mutated: bool,
    },
    /// Draw the G2 crab.
    Crab {
        #[arg(long)]
        svg: PathBuf,
        /// Half-width of the drawing in root-length units.
        #[arg(long, default_value_t = 8)]
        extent: u32,
    },
    /// Check that K0 of the B2 quadric is not generated by line bundles.
    Quadric,
}

/// A report that knows its verdict and can render itself.
trait Report: Serialize {
    fn passed(&self) -> bool;
    fn text(&self) -> String;
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>);
}

fn serialize_weights(ws: &[Weight]) -> String {
    ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ")
}

fn report_row(r: &SearchReport) -> Vec<String> {
    vec![
        r.fact.to_string(),
        r.line.map(|l| l.to_string()).unwrap_or_default(),
        r.candidates.to_string(),
        r.maximal_collections.to_string(),
        r.max_length.to_string(),
        r.violations.len().to_string(),
        r.elapsed.as_millis().to_string(),
    ]
}

const REPORT_HEADER: [&str; 7] =
    ["fact", "line", "candidates", "maximal_collections", "max_length", "violations", "elapsed_ms"];

fn report_text(r: &SearchReport) -> String {
    let line = r.line.map(|l| format!(" line {l}")).unwrap_or_default();
    let mut s = format!(
        "{}{}: {} candidates, {} maximal collections, max length {}, {} violations ({} ms)\n",
        r.fact,
        line,
        r.candidates,
        r.maximal_collections,
        r.max_length,
        r.violations.len(),
        r.elapsed.as_millis()
    );
    for v in &r.violations {
        let _ = writeln!(s, "  violation: {}", serialize_weights(&v.weights));
    }
    s
}

#[derive(Serialize)]
struct CloseReport {
    #[serde(flatten)]
    report: SearchReport,
    filtered_nodes: u64,
}

#[derive(Serialize)]
struct FactsAll {
    nodmz: SearchReport,
    close: CloseReport,
    forty: Vec<SearchReport>,
    maxpts: Vec<SearchReport>,
}

/// A single fact serializes as its own object (or array of per-line
/// objects); `all` nests them by name.
#[derive(Serialize)]
#[serde(untagged)]
enum FactsOutput {
    Single(SearchReport),
    Close(CloseReport),
    Lines(Vec<SearchReport>),
    All(Box<FactsAll>),
}

impl FactsOutput {
    fn reports(&self) -> Vec<&SearchReport> {
        match self {
            FactsOutput::Single(r) => vec![r],
            FactsOutput::Close(c) => vec![&c.report],
            FactsOutput::Lines(v) => v.iter().collect(),
            FactsOutput::All(a) => std::iter::once(&a.nodmz)
                .chain(std::iter::once(&a.close.report))
                .chain(&a.forty)
                .chain(&a.maxpts)
                .collect(),
        }
    }

    fn filtered_nodes(&self) -> Option<u64> {
        match self {
            FactsOutput::Close(c) => Some(c.filtered_nodes),
            FactsOutput::All(a) => Some(a.close.filtered_nodes),
            _ => None,
        }
    }
}

impl Report for FactsOutput {
    fn passed(&self) -> bool {
        self.reports().iter().all(|r| r.holds())
    }

    fn text(&self) -> String {
        let mut s: String = self.reports().into_iter().map(report_text).collect();
        if let Some(n) = self.filtered_nodes() {
            let _ = writeln!(s, "close: {n} filtered nodes of length 9 or 10");
        }
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        (REPORT_HEADER.to_vec(), self.reports().into_iter().map(report_row).collect())
    }
}

#[derive(Serialize)]
#[serde(transparent)]
struct FalsifyOutput(Vec<FalsifierResult>);

impl Report for FalsifyOutput {
    fn passed(&self) -> bool {
        self.0.iter().all(FalsifierResult::holds)
    }

    fn text(&self) -> String {
        let mut s = String::new();
        for r in &self.0 {
            let verdict = match &r.counterexample {
                None => "no counterexample".to_string(),
                Some(t) => format!("counterexample {} = {}", r.lemma.tuple_shape(), serialize_weights(t)),
            };
            let _ = write!(
                s,
                "{} [{:?}] radius² {}: {} instances, {}",
                r.lemma, r.variant, r.radius_sq, r.instances_checked, verdict
            );
            if let (Some(m), Some(h)) = (r.max_norm_sq, r.sharp_bound_holds) {
                let _ = write!(s, "; max ‖x+ρ‖² {m}, within 21.1: {h}");
            }
            let _ = writeln!(s, " ({} ms)", r.elapsed.as_millis());
        }
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let header =
            vec!["lemma", "variant", "radius_sq", "instances_checked", "counterexample", "max_norm_sq", "elapsed_ms"];
        let rows = self
            .0
            .iter()
            .map(|r| {
                vec![
                    r.lemma.to_string(),
                    format!("{:?}", r.variant).to_lowercase(),
                    r.radius_sq.to_string(),
                    r.instances_checked.to_string(),
                    r.counterexample.as_deref().map(serialize_weights).unwrap_or_default(),
                    r.max_norm_sq.map(|m| m.to_string()).unwrap_or_default(),
                    r.elapsed.as_millis().to_string(),
                ]
            })
            .collect();
        (header, rows)
    }
}

#[derive(Serialize)]
struct WeylRow {
    word: Vec<u8>,
    matrix: [[i64; 2]; 2],
}

#[derive(Serialize)]
struct RootsOutput {
    kind: RootKind,
    rho: Weight,
    cartan_rows: [Weight; 2],
    gram: Vec<Vec<String>>,
    positive_roots: Vec<Weight>,
    coroot_functionals: Vec<(i64, i64)>,
    weyl_group: Vec<WeylRow>,
}

impl Report for RootsOutput {
    fn passed(&self) -> bool {
        true
    }

    fn text(&self) -> String {
        let mut s = format!("{} ρ = {}\n", self.kind, self.rho);
        let _ = writeln!(s, "simple roots: {} {}", self.cartan_rows[0], self.cartan_rows[1]);
        let _ = writeln!(s, "gram: {:?}", self.gram);
        for (r, f) in self.positive_roots.iter().zip(&self.coroot_functionals) {
            let _ = writeln!(s, "root {r}  coroot {f:?}");
        }
        for w in &self.weyl_group {
            let _ = writeln!(s, "{:?} {:?}", w.word, w.matrix);
        }
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .positive_roots
            .iter()
            .zip(&self.coroot_functionals)
            .map(|(r, f)| {
                vec![self.kind.to_string(), r.a.to_string(), r.b.to_string(), f.0.to_string(), f.1.to_string()]
            })
            .collect();
        (vec!["kind", "root_a", "root_b", "coroot_a", "coroot_b"], rows)
    }
}

#[derive(Serialize)]
struct BasisCheck {
    basis: BasisState,
    determinant_matches: bool,
}

#[derive(Serialize)]
struct SteinbergOutput {
    kind: RootKind,
    steinberg: Vec<(Vec<u8>, Weight)>,
    bases: Vec<BasisCheck>,
}

impl Report for SteinbergOutput {
    fn passed(&self) -> bool {
        self.bases.iter().all(|b| b.determinant_matches)
    }

    fn text(&self) -> String {
        let mut s = format!("{} Steinberg weights\n", self.kind);
        for (w, l) in &self.steinberg {
            let _ = writeln!(s, "  λ_{w:?} = {l}");
        }
        for (i, b) in self.bases.iter().enumerate() {
            let _ = writeln!(
                s,
                "basis {i}: {} after {} substitutions, determinant check {}",
                serialize_weights(&b.basis.weights),
                b.basis.log.len(),
                if b.determinant_matches { "passed" } else { "FAILED" }
            );
        }
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .bases
            .iter()
            .enumerate()
            .map(|(i, b)| {
                vec![
                    i.to_string(),
                    serialize_weights(&b.basis.weights),
                    b.basis.log.len().to_string(),
                    b.determinant_matches.to_string(),
                ]
            })
            .collect();
        (vec!["basis", "weights", "substitutions", "determinant_matches"], rows)
    }
}

#[derive(Serialize)]
struct Failure {
    from_index: usize,
    to_index: usize,
    from: Weight,
    to: Weight,
}

#[derive(Serialize)]
struct VerifyOutput {
    kind: RootKind,
    order: OrderKind,
    length: usize,
    exceptional: bool,
    failures: Vec<Failure>,
}

impl Report for VerifyOutput {
    fn passed(&self) -> bool {
        self.exceptional
    }

    fn text(&self) -> String {
        let mut s = format!(
            "{} collection of {} weights ({:?}): {}\n",
            self.kind,
            self.length,
            self.order,
            if self.exceptional { "exceptional" } else { "NOT exceptional" }
        );
        for f in &self.failures {
            let _ = writeln!(s, "  Ext nonzero from {} (#{}) to {} (#{})", f.from, f.from_index, f.to, f.to_index);
        }
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .failures
            .iter()
            .map(|f| vec![f.from_index.to_string(), f.to_index.to_string(), f.from.to_string(), f.to.to_string()])
            .collect();
        (vec!["from_index", "to_index", "from", "to"], rows)
    }
}

#[derive(Serialize)]
struct CrabOutput {
    svg: String,
    extent: u32,
    twenty_weights: usize,
    mirror_twenty_weights: usize,
    non_far_crab_weights: usize,
}

impl Report for CrabOutput {
    fn passed(&self) -> bool {
        true
    }

    fn text(&self) -> String {
        format!(
            "wrote {} (extent {}); 20 weights: {}, mirror 20 weights: {}, non-far crab weights: {}\n",
            self.svg, self.extent, self.twenty_weights, self.mirror_twenty_weights, self.non_far_crab_weights
        )
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        (
            vec!["svg", "extent", "twenty_weights", "mirror_twenty_weights", "non_far_crab_weights"],
            vec![vec![
                self.svg.clone(),
                self.extent.to_string(),
                self.twenty_weights.to_string(),
                self.mirror_twenty_weights.to_string(),
                self.non_far_crab_weights.to_string(),
            ]],
        )
    }
}

#[derive(Serialize)]
struct QuadricOutput {
    obstruction: bool,
}

impl Report for QuadricOutput {
    fn passed(&self) -> bool {
        self.obstruction
    }

    fn text(&self) -> String {
        format!("B2 quadric: K0 {} generated by line bundles\n", if self.obstruction { "is not" } else { "may be" })
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        (vec!["obstruction"], vec![vec![self.obstruction.to_string()]])
    }
}

/// Input problem, reported with exit status 2.
#[derive(Debug)]
struct InputError(String);

impl From<crate::Error> for InputError {
    fn from(e: crate::Error) -> Self {
        InputError(e.to_string())
    }
}

/// Reads a collection file: either a collection object or a bare JSON array
/// of `[a, b]` pairs (read as a total order).
pub fn read_collection(path: &Path) -> std::result::Result<Collection, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let located = |e: serde_json::Error| {
        let msg = e.to_string();
        let msg = msg.rsplit_once(" at line ").map_or(msg.as_str(), |(m, _)| m);
        format!("{}:{}:{}: {msg}", path.display(), e.line(), e.column())
    };
    let value: serde_json::Value = serde_json::from_str(&text).map_err(located)?;
    if value.is_array() {
        let weights: Vec<Weight> = serde_json::from_str(&text).map_err(located)?;
        Ok(Collection::total(weights))
    } else {
        serde_json::from_str(&text).map_err(located)
    }
}

fn zeroed(d: &mut Duration, deterministic: bool) {
    if deterministic {
        *d = Duration::ZERO;
    }
}

fn render<R: Report>(r: &R, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => r.text(),
        Format::Csv => {
            let (header, rows) = r.csv_rows();
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).expect("in-memory write");
            for row in rows {
                w.write_record(&row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
    }
}

fn execute(cli: &Cli) -> std::result::Result<(String, bool), InputError> {
    let det = cli.deterministic;
    let fmt = cli.format;
    let emit = |r: &dyn ErasedReport| (r.render(fmt), r.passed());
    match &cli.command {
        Command::Roots { kind } => {
            let rs = RootSystem::from_name(kind)?;
            let out = RootsOutput {
                kind: rs.kind(),
                rho: rs.rho(),
                cartan_rows: rs.cartan_rows(),
                gram: rs.gram().iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect(),
                positive_roots: rs.positive_roots().to_vec(),
                coroot_functionals: rs.coroot_functionals().to_vec(),
                weyl_group: rs
                    .weyl_group()
                    .iter()
                    .map(|w| WeylRow { word: w.word().to_vec(), matrix: w.matrix() })
                    .collect(),
            };
            Ok(emit(&out))
        }
        Command::Steinberg { kind } => {
            let rs = RootSystem::from_name(kind)?;
            let basis = steinberg_basis(&rs)?;
            let steinberg =
                rs.weyl_group().iter().map(|w| w.word().to_vec()).zip(basis.weights.iter().copied()).collect();
            let mut states = vec![basis];
            states.extend(replay_paper_bases(&rs)?);
            states.dedup();
            let bases = states
                .into_iter()
                .map(|b| BasisCheck { determinant_matches: basis_determinant_oracle(&rs, &b.weights), basis: b })
                .collect();
            Ok(emit(&SteinbergOutput { kind: rs.kind(), steinberg, bases }))
        }
        Command::Verify { kind, collection, order } => {
            let rs = RootSystem::from_name(kind)?;
            let mut c = read_collection(collection).map_err(InputError)?;
            if let Some(o) = order {
                c.order = match o {
                    OrderArg::Total => OrderKind::Total,
                    OrderArg::WeakBruhat => OrderKind::WeakBruhat,
                };
            }
            let pairs = match c.order {
                OrderKind::Total => exceptional_failures(&rs, &c)?,
                OrderKind::WeakBruhat => po_failures(&rs, &c)?,
            };
            let failures = pairs
                .into_iter()
                .map(|(i, j)| Failure { from_index: i, to_index: j, from: c.weights[i], to: c.weights[j] })
                .collect::<Vec<_>>();
            Ok(emit(&VerifyOutput {
                kind: rs.kind(),
                order: c.order,
                length: c.len(),
                exceptional: failures.is_empty(),
                failures,
            }))
        }
        Command::Facts { which, jobs } => {
            let jobs = usize::from(*jobs);
            let fix = |mut r: SearchReport| {
                zeroed(&mut r.elapsed, det);
                r
            };
            let close = || {
                let c = fact_close(jobs);
                CloseReport { report: fix(c.report), filtered_nodes: c.filtered_nodes }
            };
            let out = match which {
                Which::Nodmz => FactsOutput::Single(fix(fact_nodmz(jobs))),
                Which::Close => FactsOutput::Close(close()),
                Which::Forty => FactsOutput::Lines(fact_forty(jobs).into_iter().map(fix).collect()),
                Which::Maxpts => FactsOutput::Lines(maxpts_search(jobs).into_iter().map(fix).collect()),
                Which::All => FactsOutput::All(Box::new(FactsAll {
                    nodmz: fix(fact_nodmz(jobs)),
                    close: close(),
                    forty: fact_forty(jobs).into_iter().map(fix).collect(),
                    maxpts: maxpts_search(jobs).into_iter().map(fix).collect(),
                })),
            };
            Ok(emit(&out))
        }
        Command::Falsify { lemma, radius_sq, jobs, mutated } => {
            let radius: Rational = match radius_sq {
                None => int(DEFAULT_RADIUS_SQ),
                Some(s) => parse_rational(s).ok_or_else(|| InputError(format!("invalid --radius-sq `{s}`")))?,
            };
            if radius <= int(0) {
                return Err(InputError(format!("--radius-sq must be positive, got {radius}")));
            }
            let lemmas: Vec<LemmaId> =
                if lemma.eq_ignore_ascii_case("all") { LemmaId::ALL.to_vec() } else { vec![lemma.parse()?] };
            let variant = if *mutated { Variant::Mutated } else { Variant::Stated };
            let results = lemmas
                .into_iter()
                .map(|l| {
                    falsify_variant(l, &radius, usize::from(*jobs), variant).map(|mut r| {
                        zeroed(&mut r.elapsed, det);
                        r
                    })
                })
                .collect::<crate::Result<Vec<_>>>()?;
            Ok(emit(&FalsifyOutput(results)))
        }
        Command::Crab { svg, extent } => {
            std::fs::write(svg, render_svg(*extent)).map_err(|e| InputError(format!("{}: {e}", svg.display())))?;
            Ok(emit(&CrabOutput {
                svg: svg.display().to_string(),
                extent: *extent,
                twenty_weights: twenty_weights().len(),
                mirror_twenty_weights: mirror_twenty_weights().len(),
                non_far_crab_weights: non_far_crab_weights().len(),
            }))
        }
        Command::Quadric => Ok(emit(&QuadricOutput { obstruction: verify_quadric_obstruction() })),
    }
}

/// Object-safe view of [`Report`].
trait ErasedReport {
    fn render(&self, format: Format) -> String;
    fn passed(&self) -> bool;
}

impl<R: Report> ErasedReport for R {
    fn render(&self, format: Format) -> String {
        render(self, format)
    }

    fn passed(&self) -> bool {
        Report::passed(self)
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out` or the `--output` file. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Ok((text, passed)) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, text.as_bytes()).map_err(|e| format!("{}: {e}", path.display())),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(msg) = written {
                let _ = writeln!(err, "error: {msg}");
                return EXIT_USAGE;
            }
            if passed {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
    }
}
