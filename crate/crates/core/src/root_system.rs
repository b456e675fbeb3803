//! Rank-2 root systems in fundamental-weight coordinates.
//!
//! Every weight is an integer pair `(a, b)` meaning `a·ω1 + b·ω2`. The Gram
//! matrix of the fundamental weights carries all metric information, so no
//! Euclidean coordinates are ever formed.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{int, ratio, Rational};
use crate::error::{Error, Result};

/// A weight `a·ω1 + b·ω2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Weight { a, b }
    }

    pub fn pair(self) -> (i64, i64) {
        (self.a, self.b)
    }

    /// Evaluates the linear functional `(u, v)`, i.e. `u·a + v·b`.
    pub fn eval(self, functional: (i64, i64)) -> i64 {
        functional.0 * self.a + functional.1 * self.b
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.a, -self.b)
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: Weight) -> Weight {
        Weight::new(self * w.a, self * w.b)
    }
}

impl From<(i64, i64)> for Weight {
    fn from((a, b): (i64, i64)) -> Self {
        Weight::new(a, b)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[i64; 2]>::deserialize(d)?;
        Ok(Weight::new(a, b))
    }
}

/// Supported rank-2 types. `B2` doubles as `C2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootKind {
    A2,
    A1xA1,
    B2,
    G2,
}

impl RootKind {
    pub const ALL: [RootKind; 4] = [RootKind::A2, RootKind::A1xA1, RootKind::B2, RootKind::G2];

    pub fn name(self) -> &'static str {
        match self {
            RootKind::A2 => "a2",
            RootKind::A1xA1 => "a1xa1",
            RootKind::B2 => "b2",
            RootKind::G2 => "g2",
        }
    }
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RootKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a2" => Ok(RootKind::A2),
            "a1xa1" => Ok(RootKind::A1xA1),
            "b2" | "c2" => Ok(RootKind::B2),
            "g2" => Ok(RootKind::G2),
            _ => Err(Error::UnsupportedKind(s.to_string())),
        }
    }
}

impl Serialize for RootKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for RootKind {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Integer 2×2 matrix acting on column vectors of ω-coordinates.
pub type Matrix2 = [[i64; 2]; 2];

const IDENTITY: Matrix2 = [[1, 0], [0, 1]];

fn mat_mul(x: &Matrix2, y: &Matrix2) -> Matrix2 {
    let mut out = [[0; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

fn mat_apply(m: &Matrix2, w: Weight) -> Weight {
    Weight::new(m[0][0] * w.a + m[0][1] * w.b, m[1][0] * w.a + m[1][1] * w.b)
}

/// An element of the Weyl group, stored with its canonical reduced word.
///
/// The word `[i1, …, ik]` stands for `s_{i1}·s_{i2}⋯s_{ik}`; the canonical
/// word is the lexicographically least reduced one.
#[derive(Clone, Debug)]
pub struct WeylElement {
    kind: RootKind,
    word: Vec<u8>,
    matrix: Matrix2,
}

impl WeylElement {
    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn matrix(&self) -> Matrix2 {
        self.matrix
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == IDENTITY
    }

    pub fn apply(&self, w: Weight) -> Weight {
        mat_apply(&self.matrix, w)
    }

    /// Bracket notation `[1, 2, 1]`.
    pub fn bracket(&self) -> String {
        let inner: Vec<String> = self.word.iter().map(|i| i.to_string()).collect();
        format!("[{}]", inner.join(", "))
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.kind.hash(state);
        self.matrix.hash(state);
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bracket())
    }
}

/// Root datum of one rank-2 type together with its Weyl group.
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: RootKind,
    /// Row `i` is the simple root `α_i` in ω-coordinates.
    cartan_rows: [Weight; 2],
    positive_roots: Vec<Weight>,
    /// For each positive root `α`, the pair `(u, v)` with `α^∨(λ) = u·a + v·b`.
    coroot_functionals: Vec<(i64, i64)>,
    /// `gram[i][j] = (ω_i, ω_j)`.
    gram: [[Rational; 2]; 2],
    weyl: Vec<WeylElement>,
    by_matrix: HashMap<Matrix2, usize>,
}

impl RootSystem {
    pub fn build(kind: RootKind) -> RootSystem {
        let (rows, gram) = match kind {
            RootKind::A2 => ([(2, -1), (-1, 2)], [[ratio(2, 3), ratio(1, 3)], [ratio(1, 3), ratio(2, 3)]]),
            RootKind::A1xA1 => ([(2, 0), (0, 2)], [[ratio(1, 2), int(0)], [int(0), ratio(1, 2)]]),
            RootKind::B2 => ([(2, -1), (-2, 2)], [[ratio(1, 2), ratio(1, 2)], [ratio(1, 2), int(1)]]),
            RootKind::G2 => ([(2, -1), (-3, 2)], [[int(1), ratio(3, 2)], [ratio(3, 2), int(3)]]),
        };
        let cartan_rows = [Weight::from(rows[0]), Weight::from(rows[1])];
        let mut rs = RootSystem {
            kind,
            cartan_rows,
            positive_roots: Vec::new(),
            coroot_functionals: Vec::new(),
            gram,
            weyl: Vec::new(),
            by_matrix: HashMap::new(),
        };
        rs.weyl = rs.enumerate_weyl();
        rs.by_matrix = rs.weyl.iter().enumerate().map(|(i, w)| (w.matrix, i)).collect();
        rs.positive_roots = rs.enumerate_positive_roots();
        rs.coroot_functionals = rs.positive_roots.iter().map(|&alpha| rs.coroot_from_gram(alpha)).collect();
        rs
    }

    /// Builds from a lowercase type name such as `"g2"`.
    pub fn from_name(name: &str) -> Result<RootSystem> {
        Ok(RootSystem::build(name.parse()?))
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn rho(&self) -> Weight {
        Weight::new(1, 1)
    }

    pub fn simple_root(&self, i: u8) -> Weight {
        self.cartan_rows[usize::from(i) - 1]
    }

    pub fn cartan_rows(&self) -> [Weight; 2] {
        self.cartan_rows
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn coroot_functionals(&self) -> &[(i64, i64)] {
        &self.coroot_functionals
    }

    pub fn gram(&self) -> &[[Rational; 2]; 2] {
        &self.gram
    }

    /// Inner product `(λ, μ)` through the Gram matrix.
    pub fn inner(&self, x: Weight, y: Weight) -> Rational {
        let g = &self.gram;
        let (xa, xb, ya, yb) = (int(x.a), int(x.b), int(y.a), int(y.b));
        &g[0][0] * &xa * &ya + &g[0][1] * &xa * &yb + &g[1][0] * &xb * &ya + &g[1][1] * &xb * &yb
    }

    pub fn norm_sq(&self, w: Weight) -> Rational {
        self.inner(w, w)
    }

    /// `α^∨(λ) = 2(α, λ)/(α, α)` computed from the metric.
    pub fn coroot_via_gram(&self, alpha: Weight, w: Weight) -> Rational {
        int(2) * self.inner(alpha, w) / self.norm_sq(alpha)
    }

    fn coroot_from_gram(&self, alpha: Weight) -> (i64, i64) {
        let to_int = |r: Rational| {
            assert!(r.is_integer(), "non-integral coroot value for {alpha}");
            i64::try_from(r.to_integer()).expect("coroot value fits in i64")
        };
        (to_int(self.coroot_via_gram(alpha, Weight::new(1, 0))), to_int(self.coroot_via_gram(alpha, Weight::new(0, 1))))
    }

    /// `s_i(λ) = λ − α_i^∨(λ)·α_i`; `α_i^∨` reads off coordinate `i`.
    pub fn reflect(&self, i: u8, w: Weight) -> Weight {
        let alpha = self.simple_root(i);
        let c = if i == 1 { w.a } else { w.b };
        w - c * alpha
    }

    fn generator_matrix(&self, i: u8) -> Matrix2 {
        let e1 = self.reflect(i, Weight::new(1, 0));
        let e2 = self.reflect(i, Weight::new(0, 1));
        [[e1.a, e2.a], [e1.b, e2.b]]
    }

    fn enumerate_weyl(&self) -> Vec<WeylElement> {
        let gens = [self.generator_matrix(1), self.generator_matrix(2)];
        let mut seen: HashMap<Matrix2, Vec<u8>> = HashMap::from([(IDENTITY, Vec::new())]);
        let mut elements = vec![WeylElement { kind: self.kind, word: Vec::new(), matrix: IDENTITY }];
        let mut frontier = elements.clone();
        while !frontier.is_empty() {
            let mut next: HashMap<Matrix2, Vec<u8>> = HashMap::new();
            for w in &frontier {
                for (i, g) in gens.iter().enumerate() {
                    let m = mat_mul(&w.matrix, g);
                    if seen.contains_key(&m) {
                        continue;
                    }
                    let mut word = w.word.clone();
                    word.push(i as u8 + 1);
                    next.entry(m)
                        .and_modify(|cur| {
                            if word < *cur {
                                *cur = word.clone();
                            }
                        })
                        .or_insert(word);
                }
            }
            frontier = next.into_iter().map(|(matrix, word)| WeylElement { kind: self.kind, word, matrix }).collect();
            for w in &frontier {
                seen.insert(w.matrix, w.word.clone());
            }
            elements.extend(frontier.iter().cloned());
        }
        // Length first, then by the reversed word: [2,1] precedes [1,2].
        elements.sort_by(|x, y| {
            let rx: Vec<u8> = x.word.iter().rev().copied().collect();
            let ry: Vec<u8> = y.word.iter().rev().copied().collect();
            (x.word.len(), rx).cmp(&(y.word.len(), ry))
        });
        elements
    }

    fn enumerate_positive_roots(&self) -> Vec<Weight> {
        let mut roots: Vec<(Rational, Rational, Weight)> = Vec::new();
        let [a1, a2] = self.cartan_rows;
        let det = a1.a * a2.b - a1.b * a2.a;
        for w in &self.weyl {
            for simple in [a1, a2] {
                let r = w.apply(simple);
                // r = c1·α1 + c2·α2
                let c1 = ratio(r.a * a2.b - r.b * a2.a, det);
                let c2 = ratio(a1.a * r.b - a1.b * r.a, det);
                if c1.is_negative() || c2.is_negative() {
                    continue;
                }
                if roots.iter().all(|(_, _, x)| *x != r) {
                    roots.push((c1, c2, r));
                }
            }
        }
        roots.sort_by_key(|x| (&x.0 + &x.1, -&x.0));
        roots.into_iter().map(|(_, _, r)| r).collect()
    }

    pub fn weyl_group(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn identity(&self) -> &WeylElement {
        &self.weyl[0]
    }

    pub fn longest(&self) -> &WeylElement {
        self.weyl.last().expect("Weyl group is non-empty")
    }

    /// Position of `w` in the canonical enumeration.
    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        if w.kind != self.kind {
            return None;
        }
        self.by_matrix.get(&w.matrix).copied()
    }

    /// Looks up the element with the given (not necessarily canonical) word.
    pub fn element(&self, word: &[u8]) -> Result<&WeylElement> {
        let mut m = IDENTITY;
        for &i in word {
            if !(1..=2).contains(&i) {
                return Err(Error::UnknownWeylWord(word.to_vec()));
            }
            m = mat_mul(&m, &self.generator_matrix(i));
        }
        let idx = self.by_matrix[&m];
        let w = &self.weyl[idx];
        if w.word.len() != word.len() {
            // Only reduced words name elements.
            return Err(Error::UnknownWeylWord(word.to_vec()));
        }
        Ok(w)
    }

    pub fn compose(&self, x: &WeylElement, y: &WeylElement) -> &WeylElement {
        &self.weyl[self.by_matrix[&mat_mul(&x.matrix, &y.matrix)]]
    }

    pub fn inverse(&self, w: &WeylElement) -> &WeylElement {
        let m = w.matrix;
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let inv = [[m[1][1] * det, -m[0][1] * det], [-m[1][0] * det, m[0][0] * det]];
        &self.weyl[self.by_matrix[&inv]]
    }

    pub fn is_singular(&self, w: Weight) -> bool {
        self.coroot_functionals.iter().any(|&f| w.eval(f) == 0)
    }

    pub fn is_dominant(&self, w: Weight) -> bool {
        w.a >= 0 && w.b >= 0
    }

    /// Left weak order: `w ≤ w'` iff `w' = u·w` with `ℓ(u) + ℓ(w) = ℓ(w')`.
    pub fn left_weak_leq(&self, w: &WeylElement, w2: &WeylElement) -> Result<bool> {
        if w.kind != self.kind || w2.kind != self.kind {
            let other = if w.kind != self.kind { w.kind } else { w2.kind };
            return Err(Error::MixedRootSystems(self.kind, other));
        }
        let u = self.compose(w2, self.inverse(w));
        Ok(u.length() + w.length() == w2.length())
    }

    /// Checks the structural invariants of the datum; used by tests and by
    /// the `roots` subcommand.
    pub fn self_check(&self) -> std::result::Result<(), String> {
        for (i, j) in [(1u8, 1usize), (1, 2), (2, 1), (2, 2)] {
            let omega = if j == 1 { Weight::new(1, 0) } else { Weight::new(0, 1) };
            let v = self.coroot_via_gram(self.simple_root(i), omega);
            let expected = if usize::from(i) == j { int(1) } else { int(0) };
            if v != expected {
                return Err(format!("α{i}^∨(ω{j}) = {v}"));
            }
        }
        let half_sum = self.positive_roots.iter().fold(Weight::ZERO, |acc, &r| acc + r);
        if half_sum != 2 * self.rho() {
            return Err(format!("sum of positive roots {half_sum} is not 2ρ"));
        }
        for a in -10..=10 {
            for b in -10..=10 {
                let w = Weight::new(a, b);
                for (alpha, &f) in self.positive_roots.iter().zip(&self.coroot_functionals) {
                    if self.coroot_via_gram(*alpha, w) != int(w.eval(f)) {
                        return Err(format!("coroot of {alpha} disagrees at {w}"));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(rs: &RootSystem) -> Vec<Vec<u8>> {
        rs.weyl_group().iter().map(|w| w.word().to_vec()).collect()
    }

    #[test]
    fn weyl_orders_match_bracket_lists() {
        let a2 = RootSystem::build(RootKind::A2);
        assert_eq!(words(&a2), vec![vec![], vec![1], vec![2], vec![2, 1], vec![1, 2], vec![1, 2, 1]]);
        let b2 = RootSystem::build(RootKind::B2);
        assert_eq!(
            words(&b2),
            vec![vec![], vec![1], vec![2], vec![2, 1], vec![1, 2], vec![1, 2, 1], vec![2, 1, 2], vec![1, 2, 1, 2]]
        );
        let g2 = RootSystem::build(RootKind::G2);
        assert_eq!(g2.weyl_group().len(), 12);
        assert_eq!(g2.weyl_group()[7].word(), &[2, 1, 2, 1]);
        assert_eq!(g2.weyl_group()[8].word(), &[1, 2, 1, 2]);
        assert_eq!(g2.longest().word(), &[1, 2, 1, 2, 1, 2]);
        let a1a1 = RootSystem::build(RootKind::A1xA1);
        assert_eq!(words(&a1a1), vec![vec![], vec![1], vec![2], vec![1, 2]]);
    }

    #[test]
    fn identity_first() {
        for kind in RootKind::ALL {
            let rs = RootSystem::build(kind);
            assert!(rs.identity().is_identity());
            assert!(rs.identity().word().is_empty());
        }
    }

    #[test]
    fn coroot_functionals_per_type() {
        let expect: [(RootKind, &[(i64, i64)]); 4] = [
            (RootKind::A2, &[(1, 0), (0, 1), (1, 1)]),
            (RootKind::A1xA1, &[(1, 0), (0, 1)]),
            (RootKind::B2, &[(1, 0), (0, 1), (1, 2), (1, 1)]),
            (RootKind::G2, &[(1, 0), (0, 1), (1, 3), (2, 3), (1, 1), (1, 2)]),
        ];
        for (kind, functionals) in expect {
            let rs = RootSystem::build(kind);
            assert_eq!(rs.coroot_functionals(), functionals, "{kind}");
            rs.self_check().unwrap();
        }
    }

    #[test]
    fn simple_roots_and_rho() {
        let g2 = RootSystem::build(RootKind::G2);
        assert_eq!(g2.rho(), Weight::new(1, 1));
        assert_eq!(g2.norm_sq(g2.rho()), int(7));
        assert_eq!(g2.simple_root(1), Weight::new(2, -1));
        let b2 = RootSystem::build(RootKind::B2);
        assert_eq!(b2.simple_root(2), Weight::new(-2, 2));
        assert_eq!(g2.norm_sq(Weight::new(0, -2)), int(12));
        assert_eq!(g2.norm_sq(Weight::ZERO), int(0));
    }

    #[test]
    fn reflections() {
        let g2 = RootSystem::build(RootKind::G2);
        assert_eq!(g2.reflect(1, Weight::new(1, 0)), Weight::new(-1, 1));
        let a2 = RootSystem::build(RootKind::A2);
        assert_eq!(a2.reflect(2, Weight::new(1, 1)), Weight::new(2, -1));
        for kind in RootKind::ALL {
            let rs = RootSystem::build(kind);
            for i in [1, 2] {
                assert_eq!(rs.reflect(i, Weight::ZERO), Weight::ZERO);
            }
        }
    }

    #[test]
    fn reflection_matches_metric_formula() {
        for kind in RootKind::ALL {
            let rs = RootSystem::build(kind);
            for i in [1u8, 2] {
                let alpha = rs.simple_root(i);
                for a in -10..=10 {
                    for b in -10..=10 {
                        let w = Weight::new(a, b);
                        let c = rs.coroot_via_gram(alpha, w);
                        assert!(c.is_integer());
                        let c = i64::try_from(c.to_integer()).unwrap();
                        assert_eq!(rs.reflect(i, w), w - c * alpha);
                        assert_eq!(rs.reflect(i, rs.reflect(i, w)), w);
                    }
                }
            }
        }
    }

    #[test]
    fn longest_element_action() {
        let minus = [[-1, 0], [0, -1]];
        assert_eq!(RootSystem::build(RootKind::G2).longest().matrix(), minus);
        assert_eq!(RootSystem::build(RootKind::B2).longest().matrix(), minus);
        let a2 = RootSystem::build(RootKind::A2);
        assert_eq!(a2.longest().apply(Weight::new(3, 5)), Weight::new(-5, -3));
        let g2 = RootSystem::build(RootKind::G2);
        assert_eq!(g2.longest().apply(g2.rho()), Weight::new(-1, -1));
        assert_eq!(a2.element(&[1]).unwrap().apply(Weight::new(1, 0)), Weight::new(-1, 1));
    }

    #[test]
    fn apply_respects_composition() {
        for kind in RootKind::ALL {
            let rs = RootSystem::build(kind);
            let lam = Weight::new(3, -7);
            for x in rs.weyl_group() {
                for y in rs.weyl_group() {
                    assert_eq!(rs.compose(x, y).apply(lam), x.apply(y.apply(lam)));
                }
                let mut v = lam;
                for &i in x.word().iter().rev() {
                    v = rs.reflect(i, v);
                }
                assert_eq!(v, x.apply(lam));
            }
        }
    }

    #[test]
    fn singular_and_dominant() {
        let g2 = RootSystem::build(RootKind::G2);
        assert!(g2.is_singular(Weight::ZERO));
        assert!(!g2.is_singular(Weight::new(1, 1)));
        let b2 = RootSystem::build(RootKind::B2);
        assert!(b2.is_singular(Weight::new(-2, 1)));
        assert!(g2.is_dominant(Weight::ZERO));
        assert!(g2.is_dominant(Weight::new(1, 1)));
        assert!(!g2.is_dominant(Weight::new(-1, 1)));
    }

    #[test]
    fn weak_order() {
        let g2 = RootSystem::build(RootKind::G2);
        let e = g2.identity();
        for w in g2.weyl_group() {
            assert!(g2.left_weak_leq(e, w).unwrap());
        }
        let s1 = g2.element(&[1]).unwrap();
        let s2 = g2.element(&[2]).unwrap();
        let s21 = g2.element(&[2, 1]).unwrap();
        assert!(g2.left_weak_leq(s1, s21).unwrap());
        assert!(!g2.left_weak_leq(s2, s21).unwrap());
        assert!(!g2.left_weak_leq(s1, s2).unwrap());
        let b2 = RootSystem::build(RootKind::B2);
        assert!(matches!(b2.left_weak_leq(s1, s2), Err(Error::MixedRootSystems(..))));
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in RootKind::ALL {
            assert_eq!(kind.name().parse::<RootKind>().unwrap(), kind);
        }
        assert!(matches!("e8".parse::<RootKind>(), Err(Error::UnsupportedKind(_))));
        assert!(RootSystem::from_name("f4").is_err());
    }

    #[test]
    fn weight_json_shape() {
        let w = Weight::new(-3, 2);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[-3,2]");
        assert_eq!(serde_json::from_str::<Weight>("[-3, 2]").unwrap(), w);
    }
}
