//! Bounded counterexample searches for the G2 crab lemmas.
//!
//! Every quantifier over crab weights ranges over the crab weights with
//! `‖λ + ρ‖² ≤ radius_sq`. Each lemma is a predicate on a small tuple of
//! weights that answers whether the hypotheses apply and, if so, whether the
//! conclusion holds; the enumerators only prune tuples whose hypotheses
//! cannot hold, so any reported counterexample can be re-checked from the
//! tuple alone with [`recheck`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize, Serializer};

use super::engine::map_ordered;
use crate::algebra::{compare_rational_vs_quadratic, int, ratio, QuadraticValue, Rational};
use crate::crab::{
    crab_line_mask, crab_lines, crab_weights_within_sq, g2, is_in_crab, mirror_singular_lines, mirror_twenty_weights,
    norm_sq_int, singular_lines, twenty_weights, RHO,
};
use crate::error::{Error, Result};
use crate::root_system::Weight;

pub const DEFAULT_RADIUS_SQ: i64 = 3600;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LemmaId {
    Pts20,
    Lmp,
    Trig,
    Plusrho,
    Crabdiff,
    Dichotomy,
    Baa,
    Aab,
    Aba,
    Mirrorfc,
    Triplet,
}

impl LemmaId {
    pub const ALL: [LemmaId; 11] = [
        LemmaId::Pts20,
        LemmaId::Lmp,
        LemmaId::Trig,
        LemmaId::Plusrho,
        LemmaId::Crabdiff,
        LemmaId::Dichotomy,
        LemmaId::Baa,
        LemmaId::Aab,
        LemmaId::Aba,
        LemmaId::Mirrorfc,
        LemmaId::Triplet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Pts20 => "pts20",
            LemmaId::Lmp => "lmp",
            LemmaId::Trig => "trig",
            LemmaId::Plusrho => "plusrho",
            LemmaId::Crabdiff => "crabdiff",
            LemmaId::Dichotomy => "dichotomy",
            LemmaId::Baa => "baa",
            LemmaId::Aab => "aab",
            LemmaId::Aba => "aba",
            LemmaId::Mirrorfc => "mirrorfc",
            LemmaId::Triplet => "triplet",
        }
    }

    /// The weights a counterexample tuple lists, in order.
    pub fn tuple_shape(self) -> &'static str {
        match self {
            LemmaId::Pts20 | LemmaId::Lmp => "(b, c)",
            LemmaId::Trig => "(x, y)",
            LemmaId::Plusrho => "(λ)",
            LemmaId::Crabdiff => "(a, b)",
            LemmaId::Dichotomy => "(μ, λ)",
            LemmaId::Baa => "(b, a1, a2)",
            LemmaId::Aab => "(a1, a2, b)",
            LemmaId::Aba => "(a1, b, a2)",
            LemmaId::Mirrorfc => "(λ, μ)",
            LemmaId::Triplet => "(a1, a2, b)",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace(['-', '_', '.'], "");
        LemmaId::ALL.into_iter().find(|l| l.name() == key).ok_or_else(|| Error::UnknownLemma(s.to_string()))
    }
}

/// `Stated` checks the lemma as written; `Mutated` shifts one threshold by
/// one unit so that the check should start failing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Stated,
    Mutated,
}

#[derive(Clone, Debug, Serialize)]
pub struct FalsifierResult {
    pub lemma: LemmaId,
    pub variant: Variant,
    #[serde(serialize_with = "as_string")]
    pub radius_sq: Rational,
    pub counterexample: Option<Vec<Weight>>,
    pub instances_checked: u64,
    /// Largest `‖x + ρ‖²` over the conclusion weights, where the lemma bounds
    /// it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_norm_sq: Option<i64>,
    /// For BAA: whether every instance also stays within 21.1 of `−ρ`. This
    /// is reported, not part of the pass/fail verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sharp_bound_holds: Option<bool>,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

fn as_string<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl FalsifierResult {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn deterministic(mut self) -> Self {
        self.elapsed = Duration::ZERO;
        self
    }
}

/// Verdict of a lemma predicate on one tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Hypotheses fail.
    Vacuous,
    Holds,
    Violated,
}

/// `‖λ + ρ‖²`.
fn nr(w: Weight) -> i64 {
    norm_sq_int(w + RHO)
}

fn ext(from: Weight, to: Weight) -> bool {
    g2().is_singular(to - from + RHO)
}

/// `0, w_1, …, w_k` is exceptional with distinct nonzero weights.
fn exceptional_from_zero(ws: &[Weight]) -> bool {
    ws.iter()
        .enumerate()
        .all(|(i, &x)| x != Weight::ZERO && ext(Weight::ZERO, x) && ws[i + 1..].iter().all(|&y| y != x && ext(x, y)))
}

fn shared_lines(x: Weight, y: Weight) -> u8 {
    crab_line_mask(x) & crab_line_mask(y)
}

fn bits(mask: u8) -> impl Iterator<Item = usize> {
    (0..6).filter(move |k| mask & (1 << k) != 0)
}

fn on_singular(k: usize, w: Weight) -> bool {
    singular_lines()[k].contains(w)
}

fn on_mirror_singular(k: usize, w: Weight) -> bool {
    mirror_singular_lines()[k].contains(w)
}

/// Far, i.e. `‖λ + ρ‖ > r + 3√3` with `r = 42` (41 when mutated). Squared,
/// `N > r² + 27 + 6r√3`, decided in integers.
fn is_far(w: Weight, variant: Variant) -> bool {
    let r: i128 = match variant {
        Variant::Stated => 42,
        Variant::Mutated => 41,
    };
    let excess = nr(w) as i128 - r * r - 27;
    excess > 0 && excess * excess > 108 * r * r
}

fn verdict(holds: bool) -> Verdict {
    if holds {
        Verdict::Holds
    } else {
        Verdict::Violated
    }
}

/// Squared-norm bound on differences within a line: 27, or 26 when mutated.
fn lmp_bound(variant: Variant) -> i64 {
    match variant {
        Variant::Stated => 27,
        Variant::Mutated => 26,
    }
}

/// `100·‖x + ρ‖²` threshold for the plusrho corollary: `7.7²`, or `6.7²`.
fn plusrho_threshold(variant: Variant) -> i64 {
    match variant {
        Variant::Stated => 5929,
        Variant::Mutated => 4489,
    }
}

fn near_sq(variant: Variant) -> i64 {
    match variant {
        Variant::Stated => 42 * 42,
        Variant::Mutated => 41 * 41,
    }
}

/// Lemma predicates. `ctx` is only needed by the maximality checks.
pub fn check(lemma: LemmaId, variant: Variant, tuple: &[Weight], ctx: &Scan) -> Verdict {
    match (lemma, tuple) {
        (LemmaId::Pts20, &[b, c]) => {
            if !exceptional_from_zero(&[b, c]) {
                return Verdict::Vacuous;
            }
            let d = c - b;
            let first = shared_lines(b, c);
            let second = shared_lines(d, c);
            if first == 0 && second == 0 {
                return Verdict::Vacuous;
            }
            let small = |w: Weight| norm_sq_int(w) <= lmp_bound(variant);
            let ok1 = bits(first).all(|k| twenty_weights().contains(&d) && on_singular(k, d) && small(d));
            let ok2 = bits(second).all(|k| twenty_weights().contains(&b) && on_singular(k, b) && small(b));
            verdict(ok1 && ok2)
        }
        (LemmaId::Lmp, &[b, c]) => {
            if !exceptional_from_zero(&[b, c]) || shared_lines(b, c) == 0 {
                return Verdict::Vacuous;
            }
            verdict(norm_sq_int(c - b) <= lmp_bound(variant))
        }
        (LemmaId::Trig, &[x, y]) => {
            if x == y || !is_in_crab(x) || !is_in_crab(y) || shared_lines(x, y) != 0 {
                return Verdict::Vacuous;
            }
            // With R² = min ‖·+ρ‖², a violation is d² < R²·(2(2 − √3))².
            let m = nr(x).min(nr(y));
            let factor = match variant {
                Variant::Stated => (28, -16),
                Variant::Mutated => (48, -24),
            };
            let bound = QuadraticValue::new(int(factor.0 * m), int(factor.1 * m), int(3));
            verdict(compare_rational_vs_quadratic(&int(norm_sq_int(x - y)), &bound) != Ordering::Less)
        }
        (LemmaId::Plusrho, &[l]) => {
            let next = l + RHO;
            if !is_in_crab(l) || !is_in_crab(next) || 100 * nr(l) <= plusrho_threshold(variant) {
                return Verdict::Vacuous;
            }
            verdict(shared_lines(l, next) != 0)
        }
        (LemmaId::Crabdiff, &[a, b]) => {
            let shared = shared_lines(a, b - a);
            if shared == 0 {
                return Verdict::Vacuous;
            }
            let lines = crab_lines();
            let first = bits(shared).all(|k| lines[k].contains(b + RHO));
            let second = !is_in_crab(b)
                || 100 * nr(b) <= plusrho_threshold(variant)
                || bits(shared).all(|k| lines[k].contains(b));
            verdict(first && second)
        }
        (LemmaId::Dichotomy, &[mu, l]) => {
            if !exceptional_from_zero(&[mu, l]) {
                return Verdict::Vacuous;
            }
            let (threshold, factor) = match variant {
                Variant::Stated => (108, 9),
                Variant::Mutated => (75, 4),
            };
            let twenty = twenty_weights().contains(&mu);
            let branch1 = twenty && {
                let k = bits(crate::crab::singular_line_mask(mu)).next().expect("20 weights are singular");
                nr(l) <= threshold || crab_lines()[k].contains(l)
            };
            let branch2 = !twenty && nr(l) < factor * norm_sq_int(mu);
            verdict(branch1 as u8 + branch2 as u8 == 1)
        }
        (LemmaId::Baa, &[b, a1, a2]) => {
            let shared = shared_lines(a1, a2);
            if shared == 0 || !exceptional_from_zero(&[b, a1, a2]) {
                return Verdict::Vacuous;
            }
            if bits(shared).any(|k| crab_lines()[k].contains(b) || on_singular(k, b)) {
                return Verdict::Vacuous;
            }
            verdict([b, a1, a2].iter().all(|&x| nr(x) <= near_sq(variant)))
        }
        (LemmaId::Aab, &[a1, a2, b]) => {
            let shared = shared_lines(a1, a2);
            if shared == 0 || !exceptional_from_zero(&[a1, a2, b]) {
                return Verdict::Vacuous;
            }
            if bits(shared).any(|k| crab_lines()[k].contains(b)) {
                return Verdict::Vacuous;
            }
            verdict([a1, a2, b].iter().any(|&x| nr(x) <= near_sq(variant)))
        }
        (LemmaId::Aba, &[a1, b, a2]) => {
            let shared = shared_lines(a1, a2);
            if shared == 0 || ![a1, b, a2].iter().all(|&x| is_far(x, variant)) {
                return Verdict::Vacuous;
            }
            if bits(shared).any(|k| crab_lines()[k].contains(b)) || !exceptional_from_zero(&[a1, b, a2]) {
                return Verdict::Vacuous;
            }
            verdict(ctx.is_maximal(&[a1, b, a2]))
        }
        (LemmaId::Mirrorfc, &[l, mu]) => {
            if l == -RHO || !exceptional_from_zero(&[l, mu]) || !mirrorfc_applies(l, mu, variant) {
                return Verdict::Vacuous;
            }
            let k = bits(crab_line_mask(l)).next().expect("λ is in the crab");
            verdict(mirror_twenty_weights().contains(&mu) && on_mirror_singular(k, mu) && nr(mu) <= 27)
        }
        (LemmaId::Triplet, &[a1, a2, b]) => {
            let shared = shared_lines(a1, a2);
            if a1 == a2 || shared == 0 || ![a1, a2, b].iter().all(|&x| is_far(x, variant)) {
                return Verdict::Vacuous;
            }
            if bits(shared).any(|k| crab_lines()[k].contains(b)) || crab_line_mask(b) == 0 {
                return Verdict::Vacuous;
            }
            let first = !exceptional_from_zero(&[b, a1, a2]) && !exceptional_from_zero(&[a1, a2, b]);
            let second = !exceptional_from_zero(&[a1, b, a2]) || ctx.is_maximal(&[a1, b, a2]);
            verdict(first && second)
        }
        _ => Verdict::Vacuous,
    }
}

/// `‖λ‖ ≥ 2.9‖μ + ρ‖ + c` with `c = 7.6` (6.6 when mutated), squared out as
/// `‖λ‖² ≥ 8.41·M + c² + 5.8c·√M` with `M = ‖μ + ρ‖²`.
fn mirrorfc_applies(l: Weight, mu: Weight, variant: Variant) -> bool {
    let c = match variant {
        Variant::Stated => ratio(76, 10),
        Variant::Mutated => ratio(66, 10),
    };
    let m = int(nr(mu));
    let rhs = QuadraticValue::new(ratio(841, 100) * &m + &c * &c, ratio(58, 10) * &c, m);
    compare_rational_vs_quadratic(&int(norm_sq_int(l)), &rhs) != Ordering::Less
}

/// The crab weights of one scan radius.
#[derive(Clone, Debug)]
pub struct Scan {
    pub radius_sq: Rational,
    pub weights: Vec<Weight>,
    /// Weights far under either variant.
    far: Vec<Weight>,
}

impl Scan {
    pub fn new(radius_sq: &Rational) -> Self {
        let weights = crab_weights_within_sq(radius_sq);
        let far = weights.iter().copied().filter(|&w| is_far(w, Variant::Mutated)).collect();
        Scan { radius_sq: radius_sq.clone(), weights, far }
    }

    /// No scanned crab weight can be inserted anywhere after the leading 0.
    pub fn is_maximal(&self, tail: &[Weight]) -> bool {
        self.weights.iter().filter(|w| !tail.contains(w)).all(|&mu| {
            (0..=tail.len()).all(|pos| {
                let mut ext = tail.to_vec();
                ext.insert(pos, mu);
                !exceptional_from_zero(&ext)
            })
        })
    }
}

/// Re-checks a tuple against the lemma: true when it is a counterexample.
pub fn recheck(lemma: LemmaId, variant: Variant, tuple: &[Weight], radius_sq: &Rational) -> bool {
    check(lemma, variant, tuple, &Scan::new(radius_sq)) == Verdict::Violated
}

#[derive(Default)]
struct Tally {
    instances: u64,
    first: Option<Vec<Weight>>,
    max_norm_sq: Option<i64>,
}

impl Tally {
    fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        if self.first.is_none() {
            self.first = other.first;
        }
        self.max_norm_sq = match (self.max_norm_sq, other.max_norm_sq) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
    }
}

/// Candidate tuples whose first weight is `scan.weights[i]`.
fn tuples(lemma: LemmaId, scan: &Scan, i: usize, emit: &mut dyn FnMut(&[Weight])) {
    let ws = &scan.weights;
    let x = ws[i];
    let same_line = |y: &&Weight| **y != x && shared_lines(x, **y) != 0;
    match lemma {
        LemmaId::Pts20 | LemmaId::Lmp | LemmaId::Dichotomy | LemmaId::Mirrorfc => {
            for &y in ws.iter().filter(|&&y| y != x && ext(x, y)) {
                emit(&[x, y]);
            }
        }
        LemmaId::Trig => {
            for &y in &ws[i + 1..] {
                if shared_lines(x, y) == 0 {
                    emit(&[x, y]);
                }
            }
        }
        LemmaId::Plusrho => emit(&[x]),
        LemmaId::Crabdiff => {
            for &c in ws.iter().filter(|c| shared_lines(x, **c) != 0) {
                emit(&[x, x + c]);
            }
        }
        LemmaId::Baa => {
            // x = b
            for &a1 in ws.iter().filter(|&&a| a != x && ext(x, a)) {
                for &a2 in ws.iter().filter(|&&a| a != a1 && ext(x, a) && ext(a1, a) && shared_lines(a1, a) != 0) {
                    emit(&[x, a1, a2]);
                }
            }
        }
        LemmaId::Aab => {
            // x = a1
            for &a2 in ws.iter().filter(same_line).filter(|&&a| ext(x, a)) {
                for &b in ws.iter().filter(|&&b| b != x && b != a2 && ext(x, b) && ext(a2, b)) {
                    emit(&[x, a2, b]);
                }
            }
        }
        LemmaId::Aba => {
            // x = a1
            if !is_far(x, Variant::Mutated) {
                return;
            }
            for &a2 in scan.far.iter().filter(same_line).filter(|&&a| ext(x, a)) {
                for &b in ws.iter().filter(|&&b| b != x && b != a2 && ext(x, b) && ext(b, a2)) {
                    emit(&[x, b, a2]);
                }
            }
        }
        LemmaId::Triplet => {
            if !is_far(x, Variant::Mutated) {
                return;
            }
            for &a2 in scan.far.iter().filter(same_line) {
                for &b in scan.far.iter().filter(|&&b| b != x && b != a2) {
                    emit(&[x, a2, b]);
                }
            }
        }
    }
}

/// Largest `‖x + ρ‖²` over the weights a lemma bounds, for reporting.
fn bounded_norm(lemma: LemmaId, tuple: &[Weight]) -> Option<i64> {
    match lemma {
        LemmaId::Baa => tuple.iter().map(|&w| nr(w)).max(),
        _ => None,
    }
}

/// Searches the scan region for a counterexample to `lemma`.
pub fn falsify(lemma: LemmaId, radius_sq: &Rational, jobs: usize) -> Result<FalsifierResult> {
    falsify_variant(lemma, radius_sq, jobs, Variant::Stated)
}

pub fn falsify_variant(lemma: LemmaId, radius_sq: &Rational, jobs: usize, variant: Variant) -> Result<FalsifierResult> {
    if *radius_sq <= int(0) {
        return Err(Error::Input(format!("radius_sq must be positive, got {radius_sq}")));
    }
    let start = Instant::now();
    let scan = Scan::new(radius_sq);
    let parts = map_ordered(jobs, scan.weights.len(), |i| {
        let mut t = Tally::default();
        tuples(lemma, &scan, i, &mut |tuple| match check(lemma, variant, tuple, &scan) {
            Verdict::Vacuous => {}
            v => {
                t.instances += 1;
                if let Some(n) = bounded_norm(lemma, tuple) {
                    t.max_norm_sq = Some(t.max_norm_sq.map_or(n, |m| m.max(n)));
                }
                if v == Verdict::Violated && t.first.is_none() {
                    t.first = Some(tuple.to_vec());
                }
            }
        });
        t
    });
    let mut total = Tally::default();
    for p in parts {
        total.merge(p);
    }
    Ok(FalsifierResult {
        lemma,
        variant,
        radius_sq: radius_sq.clone(),
        counterexample: total.first,
        instances_checked: total.instances,
        max_norm_sq: total.max_norm_sq,
        sharp_bound_holds: (lemma == LemmaId::Baa)
            .then(|| total.max_norm_sq.is_none_or(|n| int(n) <= baa_sharp_bound_sq())),
        elapsed: start.elapsed(),
    })
}

/// `21.1²`: the sharper radius around `−ρ` for the BAA weights.
pub fn baa_sharp_bound_sq() -> Rational {
    ratio(44521, 100)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wt(a: i64, b: i64) -> Weight {
        Weight::new(a, b)
    }

    #[test]
    fn ids_parse() {
        for l in LemmaId::ALL {
            assert_eq!(l.name().parse::<LemmaId>().unwrap(), l);
        }
        assert_eq!("crab.diff".parse::<LemmaId>().unwrap(), LemmaId::Crabdiff);
        assert!(matches!("nope".parse::<LemmaId>(), Err(Error::UnknownLemma(_))));
    }

    #[test]
    fn small_radius_runs_clean() {
        let r = int(400);
        for l in LemmaId::ALL.into_iter().filter(|&l| l != LemmaId::Trig) {
            let res = falsify(l, &r, 1).unwrap();
            assert!(res.holds(), "{l}: {:?}", res.counterexample);
        }
    }

    #[test]
    fn trig_tangent_constant_fails() {
        let x = wt(-41, 19);
        let y = wt(-34, 10);
        assert_eq!((nr(x), nr(y), norm_sq_int(x - y)), (400, 363, 103));
        assert!(recheck(LemmaId::Trig, Variant::Stated, &[x, y], &int(400)));
        let res = falsify(LemmaId::Trig, &int(400), 1).unwrap();
        let found = res.counterexample.expect("tangent bound is too large");
        assert!(recheck(LemmaId::Trig, Variant::Stated, &found, &int(400)));
    }

    #[test]
    fn trig_sine_constant_holds() {
        // Two points at distance ≥ R from the vertex on lines at angle 2θ are
        // at least 2R·sin θ apart, and (2 sin 15°)² = 2 − √3.
        let scan = Scan::new(&int(DEFAULT_RADIUS_SQ));
        let ws = &scan.weights;
        let mut pairs = 0;
        for (i, &x) in ws.iter().enumerate() {
            for &y in &ws[i + 1..] {
                if shared_lines(x, y) != 0 {
                    continue;
                }
                pairs += 1;
                let m = nr(x).min(nr(y));
                let bound = QuadraticValue::new(int(2 * m), int(-m), int(3));
                assert_ne!(compare_rational_vs_quadratic(&int(norm_sq_int(x - y)), &bound), Ordering::Less, "{x} {y}");
            }
        }
        assert!(pairs > 10_000);
    }

    #[test]
    fn mirrorfc_hypothesis_exact() {
        // With μ = −ρ the condition is ‖λ‖² ≥ 7.6² = 57.76.
        let mu = -RHO;
        assert_eq!(norm_sq_int(wt(6, 1)), 57);
        assert!(!mirrorfc_applies(wt(6, 1), mu, Variant::Stated));
        assert!(mirrorfc_applies(wt(8, 0), mu, Variant::Stated));
        for a in -12i64..=12 {
            for b in -12..=12 {
                let (l, mu) = (wt(a, b), wt(b - 1, -a));
                let lhs = (norm_sq_int(l) as f64).sqrt();
                let rhs = 2.9 * (nr(mu) as f64).sqrt() + 7.6;
                if (lhs - rhs).abs() > 1e-9 {
                    assert_eq!(mirrorfc_applies(l, mu, Variant::Stated), lhs >= rhs, "{l} {mu}");
                }
            }
        }
    }

    #[test]
    fn trig_bound_matches_float() {
        let (x, y) = (wt(-1, 5), wt(4, -1));
        let m = nr(x).min(nr(y)) as f64;
        let d = norm_sq_int(x - y) as f64;
        let float = d >= m * (2.0 * (2.0 - 3f64.sqrt())).powi(2);
        let scan = Scan::new(&int(100));
        let v = check(LemmaId::Trig, Variant::Stated, &[x, y], &scan);
        assert_ne!(v, Verdict::Vacuous);
        assert_eq!(v == Verdict::Holds, float);
    }

    #[test]
    fn far_test_matches_classify() {
        for w in crab_weights_within_sq(&int(4000)) {
            let stated = crate::crab::classify(w) == crate::crab::Proximity::Far;
            assert_eq!(is_far(w, Variant::Stated), stated, "{w}");
            let mutated = QuadraticValue::square_of(int(41), int(3), int(3));
            let m = compare_rational_vs_quadratic(&int(nr(w)), &mutated) == Ordering::Greater;
            assert_eq!(is_far(w, Variant::Mutated), m, "{w}");
        }
    }

    #[test]
    fn baa_sharp_radius_exceeded() {
        let (b, a1, a2) = (wt(-45, 21), wt(-37, 11), wt(-46, 14));
        let scan = Scan::new(&int(3600));
        assert_eq!(check(LemmaId::Baa, Variant::Stated, &[b, a1, a2], &scan), Verdict::Holds);
        assert_eq!(nr(a2), 675);
        assert!(int(nr(a2)) > baa_sharp_bound_sq());
    }

    #[test]
    fn negative_radius_rejected() {
        assert!(falsify(LemmaId::Lmp, &int(0), 1).is_err());
    }
}
