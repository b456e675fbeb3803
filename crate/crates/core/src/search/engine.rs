//! Bitset backtracking over a fixed candidate pool.
//!
//! Each node of the search tree is an ordered exceptional collection
//! `prefix, c_1, …, c_k`. Its children append a candidate `d` from the
//! current pool, and the child's pool is the old pool minus `d`, filtered to
//! the candidates `e` with `e − d + ρ` singular. Earlier candidates stay in
//! the pool, so collections are ordered sequences. A node whose pool is empty
//! is a maximal collection.

use crate::error::{Error, Result};
use crate::exceptional::{ext_vanishes, Collection};
use crate::root_system::{RootSystem, Weight};

#[derive(Clone, PartialEq, Eq, Debug)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Bits::empty(n);
        for i in 0..n {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and_into(&self, other: &Bits, out: &mut Bits) {
        for ((o, a), b) in out.0.iter_mut().zip(&self.0).zip(&other.0) {
            *o = a & b;
        }
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }
}

/// Callbacks fired during the traversal. `path` holds candidate indices after
/// the prefix.
pub trait Visitor {
    /// Every node, including the root and the maximal leaves.
    fn enter(&mut self, _path: &[u16]) {}

    /// Nodes with an empty pool.
    fn maximal(&mut self, path: &[u16]);
}

/// Collects every maximal path.
#[derive(Default, Debug, Clone)]
pub struct Collect(pub Vec<Vec<u16>>);

impl Visitor for Collect {
    fn maximal(&mut self, path: &[u16]) {
        self.0.push(path.to_vec());
    }
}

/// Counts maximal paths and tracks their longest length.
#[derive(Default, Debug, Clone, Copy)]
pub struct Count {
    pub maximal: u64,
    pub longest: usize,
}

impl Visitor for Count {
    fn maximal(&mut self, path: &[u16]) {
        self.maximal += 1;
        self.longest = self.longest.max(path.len());
    }
}

/// A validated search problem.
#[derive(Clone, Debug)]
pub struct Engine {
    prefix: Vec<Weight>,
    candidates: Vec<Weight>,
    compat: Vec<Bits>,
}

impl Engine {
    /// Checks that `prefix` is exceptional, that the candidates are distinct
    /// and disjoint from it, and that each candidate extends it.
    pub fn new(rs: &RootSystem, prefix: &[Weight], candidates: &[Weight]) -> Result<Self> {
        let n = candidates.len();
        if n > u16::MAX as usize {
            return Err(Error::SearchPrecondition(format!("{n} candidates exceed the engine limit")));
        }
        for (i, &x) in prefix.iter().enumerate() {
            for &y in &prefix[i + 1..] {
                if x == y || !ext_vanishes(rs, x, y) {
                    return Err(Error::SearchPrecondition(format!("prefix is not exceptional at {x}, {y}")));
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        for &c in candidates {
            if !seen.insert(c) {
                return Err(Error::SearchPrecondition(format!("candidate {c} is repeated")));
            }
            if let Some(&p) = prefix.iter().find(|&&p| p == c || !ext_vanishes(rs, p, c)) {
                return Err(Error::SearchPrecondition(format!("candidate {c} does not extend prefix weight {p}")));
            }
        }
        let compat = candidates
            .iter()
            .map(|&c| {
                let mut b = Bits::empty(n);
                for (j, &d) in candidates.iter().enumerate() {
                    if d != c && ext_vanishes(rs, c, d) {
                        b.set(j);
                    }
                }
                b
            })
            .collect();
        Ok(Engine { prefix: prefix.to_vec(), candidates: candidates.to_vec(), compat })
    }

    pub fn prefix(&self) -> &[Weight] {
        &self.prefix
    }

    pub fn candidates(&self) -> &[Weight] {
        &self.candidates
    }

    /// Turns a path into the full collection, prefix included.
    pub fn collection(&self, path: &[u16]) -> Collection {
        let mut w = self.prefix.clone();
        w.extend(path.iter().map(|&i| self.candidates[i as usize]));
        Collection::total(w)
    }

    /// The weights named by a path, without the prefix.
    pub fn weights<'a>(&'a self, path: &'a [u16]) -> impl Iterator<Item = Weight> + 'a {
        path.iter().map(|&i| self.candidates[i as usize])
    }

    /// Sequential traversal with a single visitor.
    pub fn run<V: Visitor>(&self, visitor: &mut V) {
        let n = self.candidates.len();
        let mut scratch = self.scratch();
        self.descend(&mut Vec::with_capacity(16), &Bits::full(n), &mut scratch, visitor);
    }

    /// Splits the tree on the first candidate and runs each subtree with its
    /// own visitor. Subtree results come back in candidate order, preceded by
    /// the root visitor, so the concatenation equals a sequential run.
    ///
    /// `jobs = 1` (or a build without the `parallel` feature) runs on the
    /// calling thread.
    pub fn run_split<V, F>(&self, jobs: usize, make: F) -> Vec<V>
    where
        V: Visitor + Send,
        F: Fn() -> V + Sync,
    {
        let n = self.candidates.len();
        let mut root = make();
        root.enter(&[]);
        if n == 0 {
            root.maximal(&[]);
            return vec![root];
        }
        let subtree = |i: usize| {
            let mut v = make();
            let mut pool = self.compat[i].clone();
            pool.clear(i);
            let mut scratch = self.scratch();
            self.descend(&mut vec![i as u16], &pool, &mut scratch, &mut v);
            v
        };
        let mut out = vec![root];
        out.extend(map_ordered(jobs, n, subtree));
        out
    }

    fn scratch(&self) -> Vec<Bits> {
        let n = self.candidates.len();
        vec![Bits::empty(n); n + 1]
    }

    fn descend<V: Visitor>(&self, path: &mut Vec<u16>, pool: &Bits, scratch: &mut [Bits], v: &mut V) {
        v.enter(path);
        if pool.is_empty() {
            v.maximal(path);
            return;
        }
        let (next, rest) = scratch.split_first_mut().expect("depth never exceeds the pool size");
        for i in pool.ones() {
            pool.and_into(&self.compat[i], next);
            next.clear(i);
            path.push(i as u16);
            self.descend(path, next, rest, v);
            path.pop();
        }
    }
}

#[cfg(feature = "parallel")]
pub(crate) fn map_ordered<T, F>(jobs: usize, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    use rayon::prelude::*;
    if jobs <= 1 {
        return (0..n).map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(|| (0..n).into_par_iter().map(&f).collect())
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_ordered<T, F>(_jobs: usize, n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// All maximal collections extending `prefix` by `candidates`, in depth-first
/// order.
pub fn find_collections(rs: &RootSystem, prefix: &Collection, candidates: &[Weight]) -> Result<Vec<Collection>> {
    find_collections_with(rs, prefix, candidates, 1)
}

pub fn find_collections_with(
    rs: &RootSystem,
    prefix: &Collection,
    candidates: &[Weight],
    jobs: usize,
) -> Result<Vec<Collection>> {
    let engine = Engine::new(rs, &prefix.weights, candidates)?;
    let parts = engine.run_split(jobs, Collect::default);
    Ok(parts.into_iter().flat_map(|c| c.0).map(|p| engine.collection(&p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crab::{g2, non_far_crab_weights};
    use crate::exceptional::is_exceptional;
    use crate::root_system::RootKind;

    fn wt(a: i64, b: i64) -> Weight {
        Weight::new(a, b)
    }

    /// Plain recursive transcription of the list-based algorithm.
    fn reference(rs: &RootSystem, l1: Vec<Weight>, l2: Vec<Weight>, out: &mut Vec<Vec<Weight>>) {
        if l2.is_empty() {
            out.push(l1);
            return;
        }
        for (i, &c) in l2.iter().enumerate() {
            let mut next = l1.clone();
            next.push(c);
            let rest: Vec<Weight> = l2
                .iter()
                .enumerate()
                .filter(|&(j, &d)| j != i && rs.is_singular(d - c + rs.rho()))
                .map(|(_, &d)| d)
                .collect();
            reference(rs, next, rest, out);
        }
    }

    #[test]
    fn empty_pool_emits_prefix() {
        let rs = g2();
        let got = find_collections(rs, &Collection::total(vec![Weight::ZERO]), &[]).unwrap();
        assert_eq!(got, vec![Collection::total(vec![Weight::ZERO])]);
    }

    #[test]
    fn single_candidate() {
        let rs = g2();
        let got = find_collections(rs, &Collection::total(vec![Weight::ZERO]), &[wt(-1, -1)]).unwrap();
        assert_eq!(got, vec![Collection::total(vec![Weight::ZERO, wt(-1, -1)])]);
    }

    #[test]
    fn precondition_checked() {
        let rs = g2();
        let zero = Collection::total(vec![Weight::ZERO]);
        assert!(find_collections(rs, &zero, &[wt(1, 1)]).is_err());
        assert!(find_collections(rs, &zero, &[wt(-1, -1), wt(-1, -1)]).is_err());
        assert!(find_collections(rs, &zero, &[Weight::ZERO]).is_err());
    }

    #[test]
    fn matches_reference_on_small_pools() {
        let rs = g2();
        let pool: Vec<Weight> = non_far_crab_weights()
            .iter()
            .copied()
            .filter(|&w| crate::crab::norm_sq_int(w + crate::crab::RHO) <= 12)
            .collect();
        assert!(pool.len() > 8);
        let mut expect = Vec::new();
        reference(rs, vec![Weight::ZERO], pool.clone(), &mut expect);
        let got = find_collections(rs, &Collection::total(vec![Weight::ZERO]), &pool).unwrap();
        let got: Vec<Vec<Weight>> = got.into_iter().map(|c| c.weights).collect();
        assert_eq!(got, expect);
        for c in &got {
            assert!(is_exceptional(rs, &Collection::total(c.clone())).unwrap());
        }
    }

    #[test]
    fn permutation_invariance() {
        let rs = g2();
        let base: Vec<Weight> = non_far_crab_weights()
            .iter()
            .copied()
            .filter(|&w| crate::crab::norm_sq_int(w + crate::crab::RHO) <= 7)
            .take(8)
            .collect();
        let zero = Collection::total(vec![Weight::ZERO]);
        let canon = |mut v: Vec<Collection>| {
            let mut w: Vec<Vec<Weight>> = v.drain(..).map(|c| c.weights).collect();
            w.sort();
            w
        };
        let expect = canon(find_collections(rs, &zero, &base).unwrap());
        let mut perm = base.clone();
        for k in 0..perm.len() {
            perm.rotate_left(1);
            if k % 2 == 1 {
                perm.reverse();
            }
            assert_eq!(canon(find_collections(rs, &zero, &perm).unwrap()), expect);
        }
    }

    #[test]
    fn split_equals_sequential() {
        let rs = g2();
        let pool: Vec<Weight> = non_far_crab_weights()
            .iter()
            .copied()
            .filter(|&w| crate::crab::norm_sq_int(w + crate::crab::RHO) <= 100)
            .collect();
        let engine = Engine::new(rs, &[Weight::ZERO], &pool).unwrap();
        let mut seq = Collect::default();
        engine.run(&mut seq);
        for jobs in [1, 3] {
            let split: Vec<Vec<u16>> = engine.run_split(jobs, Collect::default).into_iter().flat_map(|c| c.0).collect();
            assert_eq!(split, seq.0);
        }
    }

    #[test]
    fn other_root_systems() {
        let a2 = RootSystem::build(RootKind::A2);
        let pool: Vec<Weight> = (-3..=3)
            .flat_map(|a| (-3..=3).map(move |b| wt(a, b)))
            .filter(|&w| w != Weight::ZERO && ext_vanishes(&a2, Weight::ZERO, w))
            .collect();
        let mut expect = Vec::new();
        reference(&a2, vec![Weight::ZERO], pool.clone(), &mut expect);
        let got = find_collections(&a2, &Collection::total(vec![Weight::ZERO]), &pool).unwrap();
        assert_eq!(got.len(), expect.len());
    }
}
