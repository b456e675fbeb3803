//! Steinberg basis weights of `Z[Λ]` over `Z[Λ]^W`, basis-preserving
//! substitutions along shifted Weyl orbits, an independent determinant test
//! for basis-ness, and the K0 obstruction for the 3-dimensional quadric.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::algebra::{laurent_determinant, LaurentElement};
use crate::error::{Error, Result};
use crate::exceptional::fixtures;
use crate::root_system::{RootKind, RootSystem, Weight, WeylElement};

/// Default half-width of the coordinate box scanned for `λ_w`.
pub const DEFAULT_BOX: i64 = 8;

fn in_chamber_region(rs: &RootSystem, w: &WeylElement, walls: &[(i64, i64)], lam: Weight) -> bool {
    rs.is_dominant(w.apply(lam)) && walls.iter().all(|&f| lam.eval(f) < 0)
}

/// `λ_w` with the default search box.
pub fn steinberg_weight(rs: &RootSystem, w: &WeylElement) -> Result<Weight> {
    steinberg_weight_in_box(rs, w, DEFAULT_BOX)
}

/// Computes `λ_w` from its definition: the vertex of the region of
/// `w^{-1}Λ^+` cut out by the walls separating it from `Λ^+`.
pub fn steinberg_weight_in_box(rs: &RootSystem, w: &WeylElement, half_width: i64) -> Result<Weight> {
    let insufficient = |reason: String| Error::BoxInsufficient { word: w.word().to_vec(), reason };
    let w_inv = rs.inverse(w);
    let probe = w_inv.apply(rs.rho());
    let walls: Vec<(i64, i64)> = rs.coroot_functionals().iter().copied().filter(|&f| probe.eval(f) < 0).collect();

    let region: Vec<Weight> = (-half_width..=half_width)
        .flat_map(|a| (-half_width..=half_width).map(move |b| Weight::new(a, b)))
        .filter(|&lam| in_chamber_region(rs, w, &walls, lam))
        .collect();
    let vertices: Vec<Weight> =
        region.iter().copied().filter(|&m| region.iter().all(|&mu| rs.is_dominant(w.apply(mu - m)))).collect();
    let vertex = match vertices.as_slice() {
        [v] => *v,
        [] => return Err(insufficient("no vertex inside the box".into())),
        _ => return Err(insufficient(format!("{} vertex candidates", vertices.len()))),
    };
    for omega in [Weight::new(1, 0), Weight::new(0, 1)] {
        let step = vertex + w_inv.apply(omega);
        if !in_chamber_region(rs, w, &walls, step) {
            return Err(insufficient(format!("cone edge {step} leaves the region")));
        }
    }
    Ok(vertex)
}

/// One application of the orbit substitution rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substitution {
    pub remove: Weight,
    pub add: Weight,
    /// Dominant representative of the orbit that was used.
    pub orbit_of: Weight,
    /// The shift `λ` with `add, remove ∈ λ + orbit`.
    #[serde(skip)]
    pub center: Weight,
}

/// A candidate basis `{e^{μ_w}}` indexed by the canonical Weyl enumeration,
/// with the substitutions that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisState {
    pub weights: Vec<Weight>,
    pub log: Vec<Substitution>,
}

impl BasisState {
    pub fn weight_set(&self) -> BTreeSet<Weight> {
        self.weights.iter().copied().collect()
    }

    pub fn contains(&self, w: Weight) -> bool {
        self.weights.contains(&w)
    }
}

pub fn steinberg_basis(rs: &RootSystem) -> Result<BasisState> {
    let weights = rs.weyl_group().iter().map(|w| steinberg_weight(rs, w)).collect::<Result<_>>()?;
    Ok(BasisState { weights, log: Vec::new() })
}

pub fn weyl_orbit(rs: &RootSystem, lam: Weight) -> BTreeSet<Weight> {
    rs.weyl_group().iter().map(|w| w.apply(lam)).collect()
}

fn dominant_representative(rs: &RootSystem, orbit: &BTreeSet<Weight>) -> Option<Weight> {
    orbit.iter().copied().find(|&w| rs.is_dominant(w))
}

/// The identity behind a substitution, as group-ring elements:
/// `e^{add} = (Σ_{ν∈orbit} e^ν)·e^λ − Σ_{ν≠add−λ} e^{λ+ν}`. Returns both sides.
pub fn substitution_identity(
    center: Weight,
    orbit: &BTreeSet<Weight>,
    add: Weight,
) -> (LaurentElement, LaurentElement) {
    let orbit_sum = LaurentElement::from_terms(orbit.iter().map(|v| (v.pair(), 1)));
    let mut rhs = &orbit_sum * &LaurentElement::monomial(1, center.pair());
    for &v in orbit {
        if center + v != add {
            rhs = &rhs - &LaurentElement::monomial(1, (center + v).pair());
        }
    }
    (LaurentElement::monomial(1, add.pair()), rhs)
}

/// Replaces `e^{remove}` by `e^{add}` when both lie on the orbit shifted by
/// `center`, every other point of the shifted orbit and `center` itself are
/// already in the basis, and `add` is not.
pub fn mainproc_substitute(
    rs: &RootSystem,
    state: &BasisState,
    center: Weight,
    orbit: &BTreeSet<Weight>,
    remove: Weight,
    add: Weight,
) -> Result<BasisState> {
    let reject = |msg: String| Err(Error::InvalidSubstitution(msg));
    let Some(&first) = orbit.iter().next() else {
        return reject("empty orbit".into());
    };
    if weyl_orbit(rs, first) != *orbit {
        return reject(format!("{orbit:?} is not a single Weyl orbit"));
    }
    if !state.contains(center) {
        return reject(format!("shift {center} is not a basis weight"));
    }
    if state.contains(add) {
        return reject(format!("{add} is already in the basis"));
    }
    if !orbit.contains(&(add - center)) {
        return reject(format!("{add} is not on the orbit shifted by {center}"));
    }
    if !orbit.contains(&(remove - center)) {
        return reject(format!("{remove} is not on the orbit shifted by {center}"));
    }
    let Some(slot) = state.weights.iter().position(|&w| w == remove) else {
        return reject(format!("{remove} is not a basis weight"));
    };
    for &v in orbit {
        let p = center + v;
        if p != add && !state.contains(p) {
            return reject(format!("orbit point {p} (offset {v}) is missing from the basis"));
        }
    }
    let mut next = state.clone();
    next.weights[slot] = add;
    next.log.push(Substitution { remove, add, orbit_of: dominant_representative(rs, orbit).unwrap_or(first), center });
    Ok(next)
}

/// One scripted step: shift, fundamental weight index of the orbit, removed
/// and added weight.
type Step = (Weight, u8, Weight, Weight);

const fn wt(a: i64, b: i64) -> Weight {
    Weight::new(a, b)
}

const B2_SCRIPT: [Step; 1] = [(wt(-1, 0), 1, wt(-2, 1), wt(-2, 0))];

const G2_SCRIPT: [Step; 5] = [
    (wt(1, -1), 1, wt(3, -2), wt(2, -2)),
    (wt(-2, 1), 1, wt(-3, 2), wt(-4, 2)),
    (wt(-1, 0), 1, wt(-2, 1), wt(-2, 0)),
    (wt(-1, 0), 2, wt(-4, 2), wt(-4, 1)),
    (wt(-2, 0), 1, wt(-4, 1), wt(-3, 0)),
];

fn fundamental_orbit(rs: &RootSystem, i: u8) -> BTreeSet<Weight> {
    weyl_orbit(rs, if i == 1 { wt(1, 0) } else { wt(0, 1) })
}

fn run_script(rs: &RootSystem, mut state: BasisState, script: &[Step]) -> Result<BasisState> {
    for (step, &(center, i, remove, add)) in script.iter().enumerate() {
        let orbit = fundamental_orbit(rs, i);
        state = mainproc_substitute(rs, &state, center, &orbit, remove, add)
            .map_err(|e| Error::ReplayFailed { step: step + 1, reason: e.to_string() })?;
    }
    Ok(state)
}

/// Breadth-first search for a chain of at most `max_depth` substitutions,
/// along orbits of `ω1` and `ω2`, that turns `start` into `target`.
pub fn search_substitutions(
    rs: &RootSystem,
    start: &BasisState,
    target: &BTreeSet<Weight>,
    max_depth: usize,
) -> Option<BasisState> {
    let orbits = [fundamental_orbit(rs, 1), fundamental_orbit(rs, 2)];
    let mut seen: HashSet<BTreeSet<Weight>> = HashSet::from([start.weight_set()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(state) = queue.pop_front() {
        let current = state.weight_set();
        if current == *target {
            return Some(state);
        }
        let depth = state.log.len() - start.log.len();
        // Each step changes one weight.
        if current.difference(target).count() + depth > max_depth {
            continue;
        }
        for &center in &state.weights {
            for orbit in &orbits {
                let missing: Vec<Weight> = orbit.iter().map(|&v| center + v).filter(|p| !current.contains(p)).collect();
                let [add] = missing.as_slice() else { continue };
                for &v in orbit {
                    let remove = center + v;
                    if remove == *add {
                        continue;
                    }
                    if let Ok(next) = mainproc_substitute(rs, &state, center, orbit, remove, *add) {
                        if seen.insert(next.weight_set()) {
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
    }
    None
}

const SEARCH_DEPTH: usize = 6;

/// Re-derives the modified bases of the rank-2 constructions, in order; the
/// last entry is the final basis for the type.
///
/// A2: the Steinberg basis, then the totally ordered basis. B2: the basis
/// after one substitution, then the totally ordered basis. G2: the basis
/// after the five-step substitution script. A1×A1: the Steinberg basis.
pub fn replay_paper_bases(rs: &RootSystem) -> Result<Vec<BasisState>> {
    let steinberg = steinberg_basis(rs)?;
    let searched = |from: &BasisState, name: &str, step: usize| -> Result<BasisState> {
        let target = fixtures::load(name).weights.into_iter().collect();
        search_substitutions(rs, from, &target, SEARCH_DEPTH).ok_or_else(|| Error::ReplayFailed {
            step,
            reason: format!("no substitution chain of depth ≤ {SEARCH_DEPTH} reaches {name}"),
        })
    };
    let expect = |state: &BasisState, name: &str, step: usize| -> Result<()> {
        let target: BTreeSet<Weight> = fixtures::load(name).weights.into_iter().collect();
        if state.weight_set() == target {
            Ok(())
        } else {
            Err(Error::ReplayFailed { step, reason: format!("result differs from {name}") })
        }
    };
    match rs.kind() {
        RootKind::A2 => {
            expect(&steinberg, "wb-a2", 0)?;
            let total = searched(&steinberg, "tot-a2", 1)?;
            Ok(vec![steinberg, total])
        }
        RootKind::B2 => {
            let wb = run_script(rs, steinberg, &B2_SCRIPT)?;
            expect(&wb, "wb-b2", B2_SCRIPT.len())?;
            let total = searched(&wb, "tot-b2", B2_SCRIPT.len() + 1)?;
            Ok(vec![wb, total])
        }
        RootKind::G2 => {
            let wb = run_script(rs, steinberg, &G2_SCRIPT)?;
            expect(&wb, "wb-g2", G2_SCRIPT.len())?;
            Ok(vec![wb])
        }
        RootKind::A1xA1 => Ok(vec![steinberg]),
    }
}

fn orbit_matrix(rs: &RootSystem, weights: &[Weight]) -> Vec<Vec<LaurentElement>> {
    rs.weyl_group()
        .iter()
        .map(|w| weights.iter().map(|&mu| LaurentElement::monomial(1, w.apply(mu).pair())).collect())
        .collect()
}

/// `det(e^{w'(λ_w)})` for the Steinberg basis; cached per type.
pub fn steinberg_determinant(rs: &RootSystem) -> &'static LaurentElement {
    static CACHE: [OnceLock<LaurentElement>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = RootKind::ALL.iter().position(|&k| k == rs.kind()).expect("known kind");
    CACHE[slot].get_or_init(|| {
        let basis = steinberg_basis(rs).expect("Steinberg weights exist for rank-2 types");
        laurent_determinant(&orbit_matrix(rs, &basis.weights))
    })
}

/// Decides whether `{e^μ}` is a basis of `Z[Λ]` over `Z[Λ]^W` by comparing
/// `det(e^{w'(μ_w)})` with the Steinberg determinant up to sign.
///
/// The two agree up to a unit of `Z[Λ]^W`, and those units are `±1`.
pub fn basis_determinant_oracle(rs: &RootSystem, candidate: &[Weight]) -> bool {
    if candidate.len() != rs.weyl_group().len() {
        return false;
    }
    let det = laurent_determinant(&orbit_matrix(rs, candidate));
    let reference = steinberg_determinant(rs);
    det == *reference || det == -reference
}

/// Element `c + t·y` of `Z·1 ⊕ (Z/4)·y` with `y² = 2y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadricClass {
    pub free: i64,
    pub torsion: u8,
}

impl QuadricClass {
    pub fn new(free: i64, torsion: i64) -> Self {
        QuadricClass { free, torsion: torsion.rem_euclid(4) as u8 }
    }

    /// Lies in the subgroup `Z·1`.
    pub fn is_integer_multiple_of_one(self) -> bool {
        self.torsion == 0
    }
}

impl std::ops::Add for QuadricClass {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        QuadricClass::new(self.free + o.free, i64::from(self.torsion) + i64::from(o.torsion))
    }
}

impl std::ops::Mul for QuadricClass {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        let (a, b) = (self.free, i64::from(self.torsion));
        let (c, d) = (o.free, i64::from(o.torsion));
        QuadricClass::new(a * c, a * d + b * c + 2 * b * d)
    }
}

/// Image of `e^λ` under `Λ → Λ/Λ_r = Z/2`: `1` on the root lattice, `1 − y`
/// on the other coset.
fn quadric_class_of_weight(rs: &RootSystem, lam: Weight) -> QuadricClass {
    let [a1, a2] = rs.cartan_rows();
    let det = a1.a * a2.b - a1.b * a2.a;
    let c1 = lam.a * a2.b - lam.b * a2.a;
    let c2 = a1.a * lam.b - a1.b * lam.a;
    if c1 % det == 0 && c2 % det == 0 {
        QuadricClass::new(1, 0)
    } else {
        QuadricClass::new(1, -1)
    }
}

/// Shows that K0 of the 3-dimensional B2 quadric is not generated by line
/// bundles: every line bundle maps to `1` in `Z ⊕ Z/4·y`, while the rank-2
/// bundle built from the spin weight maps to `2 − 2y`.
pub fn verify_quadric_obstruction() -> bool {
    let b2 = RootSystem::build(RootKind::B2);
    let fundamentals = [(1u8, wt(1, 0)), (2u8, wt(0, 1))];
    let in_root_lattice = |w: Weight| quadric_class_of_weight(&b2, w) == QuadricClass::new(1, 0);
    let Some(&(_, pic)) = fundamentals.iter().find(|(_, w)| in_root_lattice(*w)) else {
        return false;
    };
    let Some(&(j, spin)) = fundamentals.iter().find(|(_, w)| !in_root_lattice(*w)) else {
        return false;
    };
    let line_bundles_trivial = (-6..=6).all(|n| quadric_class_of_weight(&b2, n * pic) == QuadricClass::new(1, 0));
    // Orbit of the spin weight under the Levi reflection s_j.
    let bundle = quadric_class_of_weight(&b2, spin) + quadric_class_of_weight(&b2, b2.reflect(j, spin));
    line_bundles_trivial && bundle == QuadricClass::new(2, -2) && !bundle.is_integer_multiple_of_one()
}

/// Convenience lookup used by reports: Steinberg weights keyed by word.
pub fn steinberg_table(rs: &RootSystem) -> Result<HashMap<Vec<u8>, Weight>> {
    rs.weyl_group().iter().map(|w| Ok((w.word().to_vec(), steinberg_weight(rs, w)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ws: &[(i64, i64)]) -> BTreeSet<Weight> {
        ws.iter().map(|&p| Weight::from(p)).collect()
    }

    #[test]
    fn identity_and_longest() {
        for kind in RootKind::ALL {
            let rs = RootSystem::build(kind);
            assert_eq!(steinberg_weight(&rs, rs.identity()).unwrap(), Weight::ZERO);
            assert_eq!(steinberg_weight(&rs, rs.longest()).unwrap(), wt(-1, -1));
        }
        let g2 = RootSystem::build(RootKind::G2);
        assert_eq!(steinberg_weight(&g2, g2.element(&[2, 1]).unwrap()).unwrap(), wt(-3, 2));
    }

    #[test]
    fn basis_lists_match_fixtures() {
        for (kind, name) in [(RootKind::A2, "wb-a2"), (RootKind::B2, "steinberg-b2"), (RootKind::G2, "steinberg-g2")] {
            let rs = RootSystem::build(kind);
            assert_eq!(steinberg_basis(&rs).unwrap().weights, fixtures::load(name).weights, "{kind}");
        }
    }

    #[test]
    fn a1xa1_is_computed_not_forced() {
        let rs = RootSystem::build(RootKind::A1xA1);
        let basis = steinberg_basis(&rs).unwrap();
        assert_eq!(basis.weights, vec![wt(0, 0), wt(-1, 0), wt(0, -1), wt(-1, -1)]);
    }

    #[test]
    fn box_width_does_not_matter() {
        for kind in RootKind::ALL {
            let rs = RootSystem::build(kind);
            for w in rs.weyl_group() {
                assert_eq!(steinberg_weight_in_box(&rs, w, 8).unwrap(), steinberg_weight_in_box(&rs, w, 12).unwrap());
            }
        }
    }

    #[test]
    fn tiny_box_reports_insufficient() {
        let g2 = RootSystem::build(RootKind::G2);
        let w = g2.element(&[2, 1]).unwrap();
        assert!(matches!(steinberg_weight_in_box(&g2, w, 1), Err(Error::BoxInsufficient { .. })));
    }

    #[test]
    fn weights_sit_in_their_chambers() {
        for kind in RootKind::ALL {
            let rs = RootSystem::build(kind);
            for w in rs.weyl_group() {
                let lam = steinberg_weight(&rs, w).unwrap();
                assert!(rs.is_dominant(w.apply(lam)));
                let probe = rs.inverse(w).apply(rs.rho());
                for &f in rs.coroot_functionals() {
                    if probe.eval(f) < 0 {
                        assert!(lam.eval(f) < 0, "{kind} {w}: {lam} on a separating wall");
                    }
                }
            }
        }
    }

    #[test]
    fn orbits() {
        let g2 = RootSystem::build(RootKind::G2);
        assert_eq!(weyl_orbit(&g2, Weight::ZERO), set(&[(0, 0)]));
        assert_eq!(weyl_orbit(&g2, wt(1, 0)), set(&[(1, 0), (2, -1), (1, -1), (-1, 0), (-2, 1), (-1, 1)]));
        assert_eq!(weyl_orbit(&g2, wt(0, 1)), set(&[(0, 1), (3, -1), (3, -2), (0, -1), (-3, 1), (-3, 2)]));
    }

    #[test]
    fn b2_substitution() {
        let b2 = RootSystem::build(RootKind::B2);
        let start = steinberg_basis(&b2).unwrap();
        let orbit = weyl_orbit(&b2, wt(1, 0));
        assert_eq!(orbit, set(&[(1, 0), (1, -1), (-1, 1), (-1, 0)]));
        let next = mainproc_substitute(&b2, &start, wt(-1, 0), &orbit, wt(-2, 1), wt(-2, 0)).unwrap();
        let wb: BTreeSet<Weight> = fixtures::load("wb-b2").weights.into_iter().collect();
        assert_eq!(next.weight_set(), wb);
        assert_eq!(next.log.len(), 1);
        assert_eq!(next.log[0].orbit_of, wt(1, 0));
    }

    #[test]
    fn substitution_rejections() {
        let b2 = RootSystem::build(RootKind::B2);
        let start = steinberg_basis(&b2).unwrap();
        let orbit = weyl_orbit(&b2, wt(1, 0));
        // add already present
        assert!(mainproc_substitute(&b2, &start, wt(-1, 0), &orbit, wt(-2, 1), wt(0, 0)).is_err());
        // not an orbit
        let half: BTreeSet<Weight> = orbit.iter().take(2).copied().collect();
        assert!(mainproc_substitute(&b2, &start, wt(-1, 0), &half, wt(-2, 1), wt(-2, 0)).is_err());
        // another orbit point missing: shift (1,1) is not even in the basis
        assert!(mainproc_substitute(&b2, &start, wt(1, 1), &orbit, wt(2, 1), wt(0, 2)).is_err());
        // shift in basis but two orbit points missing
        let err = mainproc_substitute(&b2, &start, wt(-1, -1), &orbit, wt(0, -1), wt(-2, 0)).unwrap_err();
        assert!(matches!(err, Error::InvalidSubstitution(_)));
    }

    #[test]
    fn substitution_identities_hold() {
        for kind in [RootKind::B2, RootKind::G2] {
            let rs = RootSystem::build(kind);
            let finals = replay_paper_bases(&rs).unwrap();
            for state in &finals {
                for step in &state.log {
                    let orbit = weyl_orbit(&rs, step.orbit_of);
                    let (lhs, rhs) = substitution_identity(step.center, &orbit, step.add);
                    assert_eq!(lhs, rhs);
                    let orbit_sum = LaurentElement::from_terms(orbit.iter().map(|v| (v.pair(), 1)));
                    assert_eq!(orbit_sum.augmentation(), (orbit.len() as i64).into());
                    assert_eq!(lhs.augmentation(), 1.into());
                    assert_eq!(LaurentElement::monomial(1, step.remove.pair()).augmentation(), 1.into());
                }
            }
        }
    }

    #[test]
    fn replay_finals() {
        let last = |kind| replay_paper_bases(&RootSystem::build(kind)).unwrap().pop().unwrap().weight_set();
        assert_eq!(last(RootKind::A2), set(&[(0, 0), (-1, 0), (-2, 0), (1, -1), (0, -1), (-1, -1)]));
        assert_eq!(last(RootKind::B2), set(&[(1, 0), (0, 0), (-1, 0), (-2, 0), (2, -1), (1, -1), (0, -1), (-1, -1)]));
        assert_eq!(last(RootKind::G2), fixtures::load("wb-g2").weights.into_iter().collect());
    }

    #[test]
    fn oracle_small_types() {
        for kind in [RootKind::A2, RootKind::A1xA1, RootKind::B2] {
            let rs = RootSystem::build(kind);
            let basis = steinberg_basis(&rs).unwrap();
            assert!(basis_determinant_oracle(&rs, &basis.weights));
            let mut dup = basis.weights.clone();
            dup[1] = dup[0];
            assert!(!basis_determinant_oracle(&rs, &dup));
            assert!(!basis_determinant_oracle(&rs, &basis.weights[1..]));
        }
    }

    #[test]
    fn oracle_on_shifted_and_broken_bases() {
        // Multiplying by e^μ is a module automorphism, so a shifted basis is
        // still a basis; the row factors e^{w'μ} multiply to e^0.
        let a2 = RootSystem::build(RootKind::A2);
        let basis = steinberg_basis(&a2).unwrap().weights;
        let shifted: Vec<Weight> = basis.iter().map(|&w| w + wt(1, 0)).collect();
        assert!(basis_determinant_oracle(&a2, &shifted));
        let mut broken = basis.clone();
        broken[1] = wt(2, 2);
        assert!(!basis_determinant_oracle(&a2, &broken));
    }

    #[test]
    fn quadric() {
        assert!(verify_quadric_obstruction());
        assert!(QuadricClass::new(3, 0).is_integer_multiple_of_one());
        assert!(!QuadricClass::new(2, -2).is_integer_multiple_of_one());
        assert_eq!(QuadricClass::new(2, -2), QuadricClass::new(2, -6));
        let y = QuadricClass::new(0, 1);
        assert_eq!(y * y, QuadricClass::new(0, 2));
        assert_eq!(QuadricClass::new(4, 0) * y, QuadricClass::new(0, 0));
    }
}
