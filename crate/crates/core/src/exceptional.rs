//! Exceptionality of line-bundle collections via the Borel–Weil–Bott
//! criterion: `Ext*(L(λ), L(λ')) = 0` exactly when `λ' − λ + ρ` is singular.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderKind {
    Total,
    WeakBruhat,
}

/// An ordered list of weights, read either as a total order or as indexed by
/// Weyl elements under the left weak order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collection {
    pub order: OrderKind,
    pub weights: Vec<Weight>,
    /// Reduced words aligned with `weights`; the canonical Weyl enumeration
    /// is assumed when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weyl_index: Option<Vec<Vec<u8>>>,
}

impl Collection {
    pub fn total(weights: Vec<Weight>) -> Self {
        Collection { order: OrderKind::Total, weights, weyl_index: None }
    }

    pub fn weak_bruhat(weights: Vec<Weight>) -> Self {
        Collection { order: OrderKind::WeakBruhat, weights, weyl_index: None }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Rejects collections that repeat a weight.
    pub fn check_distinct(&self) -> Result<()> {
        let mut seen = HashSet::with_capacity(self.weights.len());
        for &w in &self.weights {
            if !seen.insert(w) {
                return Err(Error::RepeatedWeight(w));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("collections always serialize")
    }
}

/// `Ext*(L(λ), L(λ'))` vanishes.
pub fn ext_vanishes(rs: &RootSystem, from: Weight, to: Weight) -> bool {
    rs.is_singular(to - from + rs.rho())
}

/// Pairs `(i, j)`, `i < j`, of a totally ordered collection with nonzero Ext
/// from position `i` to position `j`.
pub fn exceptional_failures(rs: &RootSystem, c: &Collection) -> Result<Vec<(usize, usize)>> {
    if c.order != OrderKind::Total {
        return Err(Error::OrderKind("expected a totally ordered collection".into()));
    }
    c.check_distinct()?;
    let mut bad = Vec::new();
    for i in 0..c.weights.len() {
        for j in i + 1..c.weights.len() {
            if !ext_vanishes(rs, c.weights[i], c.weights[j]) {
                bad.push((i, j));
            }
        }
    }
    Ok(bad)
}

pub fn is_exceptional(rs: &RootSystem, c: &Collection) -> Result<bool> {
    Ok(exceptional_failures(rs, c)?.is_empty())
}

/// Resolves the Weyl element attached to each position.
pub fn weyl_assignment<'a>(rs: &'a RootSystem, c: &Collection) -> Result<Vec<&'a WeylElement>> {
    let expected = rs.weyl_group().len();
    let elements: Vec<&WeylElement> = match &c.weyl_index {
        None => rs.weyl_group().iter().collect(),
        Some(words) => words.iter().map(|w| rs.element(w)).collect::<Result<_>>()?,
    };
    if c.weights.len() != expected || elements.len() != c.weights.len() {
        return Err(Error::IncompleteWeylMap { expected, got: c.weights.len().min(elements.len()) });
    }
    let distinct: HashSet<&WeylElement> = elements.iter().copied().collect();
    if distinct.len() != expected {
        return Err(Error::IncompleteWeylMap { expected, got: distinct.len() });
    }
    Ok(elements)
}

/// Pairs `(i, j)` with `w_i < w_j` in the left weak order whose Ext does not
/// vanish.
pub fn po_failures(rs: &RootSystem, c: &Collection) -> Result<Vec<(usize, usize)>> {
    if c.order != OrderKind::WeakBruhat {
        return Err(Error::OrderKind("expected a weak_bruhat collection".into()));
    }
    c.check_distinct()?;
    let elements = weyl_assignment(rs, c)?;
    let mut bad = Vec::new();
    for (i, wi) in elements.iter().enumerate() {
        for (j, wj) in elements.iter().enumerate() {
            if i != j && rs.left_weak_leq(wi, wj)? && !ext_vanishes(rs, c.weights[i], c.weights[j]) {
                bad.push((i, j));
            }
        }
    }
    Ok(bad)
}

pub fn is_po_exceptional(rs: &RootSystem, c: &Collection) -> Result<bool> {
    Ok(po_failures(rs, c)?.is_empty())
}

/// Subtracts `mu` from every weight.
pub fn translate(c: &Collection, mu: Weight) -> Collection {
    Collection { weights: c.weights.iter().map(|&w| w - mu).collect(), ..c.clone() }
}

/// `(λ_1, …, λ_n) ↦ (−λ_n, …, −λ_1)`.
pub fn reverse_negate(c: &Collection) -> Collection {
    Collection {
        weights: c.weights.iter().rev().map(|&w| -w).collect(),
        weyl_index: c.weyl_index.as_ref().map(|v| v.iter().rev().cloned().collect()),
        ..c.clone()
    }
}

/// Bundled collections from the rank-2 constructions, stored under `data/`.
pub mod fixtures {
    use super::Collection;

    pub const NAMES: [&str; 8] =
        ["wb-a2", "tot-a2", "steinberg-b2", "wb-b2", "tot-b2", "steinberg-g2", "wb-g2", "a1xa1"];

    pub fn raw(name: &str) -> Option<&'static str> {
        Some(match name {
            "wb-a2" => include_str!("../data/wb-a2.json"),
            "tot-a2" => include_str!("../data/tot-a2.json"),
            "steinberg-b2" => include_str!("../data/steinberg-b2.json"),
            "wb-b2" => include_str!("../data/wb-b2.json"),
            "tot-b2" => include_str!("../data/tot-b2.json"),
            "steinberg-g2" => include_str!("../data/steinberg-g2.json"),
            "wb-g2" => include_str!("../data/wb-g2.json"),
            "a1xa1" => include_str!("../data/a1xa1.json"),
            _ => return None,
        })
    }

    /// Panics on an unknown name; the bundled files are known to parse.
    pub fn load(name: &str) -> Collection {
        let text = raw(name).unwrap_or_else(|| panic!("no fixture named {name}"));
        serde_json::from_str(text).expect("bundled fixture parses")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::RootKind;
    use proptest::prelude::*;

    fn w(a: i64, b: i64) -> Weight {
        Weight::new(a, b)
    }

    #[test]
    fn ext_examples() {
        let a2 = RootSystem::build(RootKind::A2);
        assert!(ext_vanishes(&a2, w(0, 0), w(-1, 0)));
        let b2 = RootSystem::build(RootKind::B2);
        assert!(!ext_vanishes(&b2, w(0, 0), w(-2, 1)));
        for kind in RootKind::ALL {
            let rs = RootSystem::build(kind);
            for lam in [w(0, 0), w(3, -2), w(-5, 7)] {
                assert!(ext_vanishes(&rs, lam, lam - rs.rho()));
            }
        }
    }

    #[test]
    fn total_collections_from_fixtures() {
        let a2 = RootSystem::build(RootKind::A2);
        let b2 = RootSystem::build(RootKind::B2);
        assert!(is_exceptional(&a2, &fixtures::load("tot-a2")).unwrap());
        assert!(is_exceptional(&b2, &fixtures::load("tot-b2")).unwrap());
        let a1a1 = RootSystem::build(RootKind::A1xA1);
        assert!(is_exceptional(&a1a1, &fixtures::load("a1xa1")).unwrap());
    }

    #[test]
    fn repeated_weight_is_an_error() {
        let a2 = RootSystem::build(RootKind::A2);
        let c = Collection::total(vec![w(0, 0), w(0, 0)]);
        assert_eq!(is_exceptional(&a2, &c), Err(Error::RepeatedWeight(w(0, 0))));
    }

    #[test]
    fn weak_bruhat_collections() {
        let g2 = RootSystem::build(RootKind::G2);
        let b2 = RootSystem::build(RootKind::B2);
        let a2 = RootSystem::build(RootKind::A2);
        assert!(is_po_exceptional(&g2, &fixtures::load("wb-g2")).unwrap());
        assert!(is_po_exceptional(&b2, &fixtures::load("wb-b2")).unwrap());
        assert!(is_po_exceptional(&a2, &fixtures::load("wb-a2")).unwrap());
        let raw = fixtures::load("steinberg-b2");
        let bad = po_failures(&b2, &raw).unwrap();
        assert_eq!(bad, vec![(0, 3)]);
        assert_eq!(raw.weights[3], w(-2, 1));
    }

    #[test]
    fn weak_bruhat_needs_full_group() {
        let g2 = RootSystem::build(RootKind::G2);
        let c = Collection::weak_bruhat(vec![w(0, 0), w(-1, 1)]);
        assert!(matches!(is_po_exceptional(&g2, &c), Err(Error::IncompleteWeylMap { .. })));
        let mut c = fixtures::load("wb-a2");
        let a2 = RootSystem::build(RootKind::A2);
        c.weyl_index = Some(vec![vec![], vec![1], vec![2], vec![2, 1], vec![1, 2], vec![1]]);
        assert!(matches!(is_po_exceptional(&a2, &c), Err(Error::IncompleteWeylMap { .. })));
        assert!(matches!(is_exceptional(&a2, &c), Err(Error::OrderKind(_))));
    }

    #[test]
    fn explicit_weyl_index_permutes_positions() {
        let b2 = RootSystem::build(RootKind::B2);
        let mut c = fixtures::load("wb-b2");
        let words: Vec<Vec<u8>> = b2.weyl_group().iter().map(|e| e.word().to_vec()).collect();
        c.weights.reverse();
        c.weyl_index = Some(words.into_iter().rev().collect());
        assert!(is_po_exceptional(&b2, &c).unwrap());
    }

    #[test]
    fn total_order_linearizing_weak_order_implies_po() {
        // Canonical enumeration is sorted by length, so it linearizes the
        // weak order.
        let a2 = RootSystem::build(RootKind::A2);
        let b2 = RootSystem::build(RootKind::B2);
        for (rs, name) in [(&a2, "tot-a2"), (&b2, "tot-b2")] {
            let c = fixtures::load(name);
            assert!(is_exceptional(rs, &c).unwrap());
            let po = Collection::weak_bruhat(c.weights.clone());
            assert!(is_po_exceptional(rs, &po).unwrap());
        }
    }

    #[test]
    fn transforms() {
        let c = fixtures::load("tot-b2");
        let t = translate(&c, c.weights[0]);
        assert_eq!(t.weights[0], Weight::ZERO);
        assert_eq!(reverse_negate(&reverse_negate(&c)), c);
    }

    #[test]
    fn fixtures_round_trip() {
        for name in fixtures::NAMES {
            let raw = fixtures::raw(name).unwrap();
            assert_eq!(fixtures::load(name).to_json(), raw.trim_end(), "{name}");
        }
    }

    proptest! {
        #[test]
        fn exceptionality_survives_transforms(a in -30i64..30, b in -30i64..30, pick in 0usize..3) {
            let (name, kind) = [("tot-a2", RootKind::A2), ("tot-b2", RootKind::B2), ("a1xa1", RootKind::A1xA1)][pick];
            let rs = RootSystem::build(kind);
            let c = fixtures::load(name);
            prop_assert!(is_exceptional(&rs, &translate(&c, w(a, b))).unwrap());
            prop_assert!(is_exceptional(&rs, &reverse_negate(&c)).unwrap());
        }
    }
}
