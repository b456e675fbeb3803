//! Reproduction of the computer-checked facts about G2 collections.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use super::engine::{Count, Engine, Visitor};
use crate::algebra::{compare_rational_vs_quadratic, int, QuadraticValue};
use crate::crab::{
    crab_line_mask, crab_lines, g2, mirror_singular_lines, mirror_twenty_weights, non_far_crab_weights, norm_sq_int,
    singular_lines, twenty_weights, RHO,
};
use crate::exceptional::Collection;
use crate::root_system::Weight;

/// Longest collection (counting the leading 0) allowed over non-far weights.
pub const NODMZ_MAX_LENGTH: usize = 10;
/// Maximal collections over the non-far crab weights.
pub const NODMZ_MAXIMAL: u64 = 160_017;
/// Most weights of one collection on a single crab line.
pub const MAXPTS_BOUND: usize = 5;
/// Bound on the length of a collection drawn from one line's 20 and mirror 20
/// weights.
pub const FORTY_BOUND: usize = 8;
/// Per-line maximum found by the forty enumeration; kept as a regression value.
pub const FORTY_OBSERVED: usize = 5;
/// `‖λ + ρ‖²` bound for the close fact.
pub const CLOSE_BOUND_SQ: i64 = 25;

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub fact: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    pub candidates: usize,
    pub maximal_collections: u64,
    pub max_length: usize,
    pub violations: Vec<Collection>,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl SearchReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    /// Zeroes the timing so reports compare byte for byte.
    pub fn deterministic(mut self) -> Self {
        self.elapsed = Duration::ZERO;
        self
    }
}

fn line_counts(weights: impl Iterator<Item = Weight>) -> [usize; 6] {
    let mut counts = [0; 6];
    for w in weights {
        let mask = crab_line_mask(w);
        for (k, c) in counts.iter_mut().enumerate() {
            if mask & (1 << k) != 0 {
                *c += 1;
            }
        }
    }
    counts
}

fn non_far_engine() -> Engine {
    Engine::new(g2(), &[Weight::ZERO], non_far_crab_weights()).expect("crab weights extend 0")
}

/// Counting visitor that also flags over-long collections and over-full
/// crab lines.
#[derive(Default)]
struct NodmzVisitor<'a> {
    engine: Option<&'a Engine>,
    count: Count,
    violations: Vec<Vec<u16>>,
}

impl Visitor for NodmzVisitor<'_> {
    fn maximal(&mut self, path: &[u16]) {
        self.count.maximal(path);
        let engine = self.engine.expect("engine attached");
        let too_long = path.len() + 1 > NODMZ_MAX_LENGTH;
        let too_full = line_counts(engine.weights(path)).iter().any(|&c| c > MAXPTS_BOUND);
        if too_long || too_full {
            self.violations.push(path.to_vec());
        }
    }
}

/// Enumerates the maximal collections `0, λ_2, …, λ_n` over the non-far crab
/// weights.
pub fn fact_nodmz(jobs: usize) -> SearchReport {
    let start = Instant::now();
    let engine = non_far_engine();
    let parts = engine.run_split(jobs, || NodmzVisitor { engine: Some(&engine), ..Default::default() });
    let mut maximal = 0;
    let mut longest = 0;
    let mut violations = Vec::new();
    for p in parts {
        maximal += p.count.maximal;
        longest = longest.max(p.count.longest);
        violations.extend(p.violations.iter().map(|v| engine.collection(v)));
    }
    SearchReport {
        fact: "nodmz",
        line: None,
        candidates: engine.candidates().len(),
        maximal_collections: maximal,
        max_length: longest + 1,
        violations,
        elapsed: start.elapsed(),
    }
}

/// Interior-node visitor for the close fact.
struct CloseVisitor<'a> {
    engine: &'a Engine,
    count: Count,
    filtered: u64,
    violations: Vec<Vec<u16>>,
}

impl Visitor for CloseVisitor<'_> {
    fn enter(&mut self, path: &[u16]) {
        let n = path.len() + 1;
        if n != 9 && n != 10 {
            return;
        }
        let counts = line_counts(self.engine.weights(path));
        if counts.iter().any(|&c| c > 2) || !counts.contains(&0) {
            return;
        }
        self.filtered += 1;
        if self.engine.weights(path).any(|w| norm_sq_int(w + RHO) > CLOSE_BOUND_SQ) {
            self.violations.push(path.to_vec());
        }
    }

    fn maximal(&mut self, path: &[u16]) {
        self.count.maximal(path);
    }
}

/// Outcome of [`fact_close`], with the number of filtered nodes examined.
#[derive(Clone, Debug)]
pub struct CloseOutcome {
    pub report: SearchReport,
    pub filtered_nodes: u64,
}

/// Walks the non-far tree and checks every length-9 or length-10 node that
/// passes the line filters.
pub fn fact_close(jobs: usize) -> CloseOutcome {
    let start = Instant::now();
    let engine = non_far_engine();
    let parts = engine.run_split(jobs, || CloseVisitor {
        engine: &engine,
        count: Count::default(),
        filtered: 0,
        violations: Vec::new(),
    });
    let mut maximal = 0;
    let mut longest = 0;
    let mut filtered = 0;
    let mut violations = Vec::new();
    for p in parts {
        maximal += p.count.maximal;
        longest = longest.max(p.count.longest);
        filtered += p.filtered;
        violations.extend(p.violations.iter().map(|v| engine.collection(v)));
    }
    CloseOutcome {
        report: SearchReport {
            fact: "close",
            line: None,
            candidates: engine.candidates().len(),
            maximal_collections: maximal,
            max_length: longest + 1,
            violations,
            elapsed: start.elapsed(),
        },
        filtered_nodes: filtered,
    }
}

/// Candidates for the forty fact on crab line `k`: weights on the parallel
/// singular or mirror singular line that are among the 20 or mirror 20
/// weights.
pub fn forty_candidates(k: usize) -> Vec<Weight> {
    let s = singular_lines()[k];
    let m = mirror_singular_lines()[k];
    twenty_weights()
        .iter()
        .chain(mirror_twenty_weights())
        .copied()
        .filter(|&w| s.contains(w) || m.contains(w))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// One report per crab line; `max_length` counts the leading 0.
pub fn fact_forty(jobs: usize) -> Vec<SearchReport> {
    (0..6)
        .map(|k| {
            let start = Instant::now();
            let candidates = forty_candidates(k);
            let engine = Engine::new(g2(), &[Weight::ZERO], &candidates).expect("crab weights extend 0");
            let parts = engine.run_split(jobs, super::engine::Collect::default);
            let paths: Vec<Vec<u16>> = parts.into_iter().flat_map(|c| c.0).collect();
            let longest = paths.iter().map(Vec::len).max().unwrap_or(0) + 1;
            let violations = paths.iter().filter(|p| p.len() + 1 > FORTY_BOUND).map(|p| engine.collection(p)).collect();
            SearchReport {
                fact: "forty",
                line: Some(k),
                candidates: candidates.len(),
                maximal_collections: paths.len() as u64,
                max_length: longest,
                violations,
                elapsed: start.elapsed(),
            }
        })
        .collect()
}

/// `(3√3 + √7)² = 34 + 6√21`, the positional window for `λ_2`.
fn maxpts_window() -> QuadraticValue {
    QuadraticValue::new(int(34), int(6), int(21))
}

/// Positions `λ_2` on crab line `k` inside the window, nearest first.
pub fn maxpts_positions(k: usize) -> Vec<Weight> {
    let line = crab_lines()[k];
    let window = maxpts_window();
    let mut out = Vec::new();
    let mut t = 0i64;
    loop {
        let step = t * line.direction();
        if compare_rational_vs_quadratic(&int(norm_sq_int(step)), &window) == Ordering::Greater {
            break;
        }
        out.push(line.anchor() + step);
        if t != 0 {
            out.push(line.anchor() - step);
        }
        t += 1;
    }
    out
}

/// For each crab line, collections `0, λ_2, …` with every later weight on the
/// line; the later weights are `λ_2` plus 20 weights on the parallel singular
/// line. `max_length` is the largest number of weights on the line.
pub fn maxpts_search(jobs: usize) -> Vec<SearchReport> {
    let twenty = twenty_weights();
    (0..6)
        .map(|k| {
            let start = Instant::now();
            let sing = singular_lines()[k];
            let offsets: Vec<Weight> = twenty.iter().copied().filter(|&w| sing.contains(w)).collect();
            let mut best = 0;
            let mut total = 0;
            let mut violations = Vec::new();
            for lambda2 in maxpts_positions(k) {
                let candidates: Vec<Weight> = offsets.iter().map(|&t| lambda2 + t).collect();
                let engine = Engine::new(g2(), &[Weight::ZERO, lambda2], &candidates).expect("offsets extend 0, λ_2");
                for part in engine.run_split(jobs, super::engine::Collect::default) {
                    for p in part.0 {
                        total += 1;
                        let on_line = p.len() + 1;
                        best = usize::max(best, on_line);
                        if on_line > MAXPTS_BOUND {
                            violations.push(engine.collection(&p));
                        }
                    }
                }
            }
            SearchReport {
                fact: "maxpts",
                line: Some(k),
                candidates: offsets.len(),
                maximal_collections: total,
                max_length: best,
                violations,
                elapsed: start.elapsed(),
            }
        })
        .collect()
}
