//! G2 crab geometry.
//!
//! The crab is the set of weights `λ` with `λ + ρ` singular: six lines
//! through `−ρ`, one per positive root. Singular lines (`α^∨(λ) = 0`) pass
//! through `0` and mirror singular lines (`α^∨(λ + 2ρ) = 0`) through `−2ρ`;
//! lines with the same root are parallel.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::OnceLock;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algebra::{compare_rational_vs_quadratic, int, QuadraticValue, Rational};
use crate::root_system::{RootKind, RootSystem, Weight};

pub fn g2() -> &'static RootSystem {
    static G2: OnceLock<RootSystem> = OnceLock::new();
    G2.get_or_init(|| RootSystem::build(RootKind::G2))
}

pub const RHO: Weight = Weight::new(1, 1);

/// `‖λ‖²` in G2 as an integer: `a² + 3ab + 3b²`.
pub fn norm_sq_int(w: Weight) -> i64 {
    w.a * w.a + 3 * w.a * w.b + 3 * w.b * w.b
}

/// Which family a line belongs to; the offset `o` gives `{λ : α^∨(λ + o) = 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LineKind {
    Crab,
    Singular,
    MirrorSingular,
}

impl LineKind {
    pub fn offset(self) -> Weight {
        match self {
            LineKind::Crab => RHO,
            LineKind::Singular => Weight::ZERO,
            LineKind::MirrorSingular => 2 * RHO,
        }
    }
}

/// One of the six lines of a family, labelled by its positive root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Line {
    pub kind: LineKind,
    /// Position of the root in the positive-root enumeration.
    pub index: usize,
    pub root: Weight,
    pub functional: (i64, i64),
}

/// A crab line; the type alias keeps signatures readable.
pub type CrabLine = Line;

impl Line {
    pub fn contains(&self, w: Weight) -> bool {
        (w + self.kind.offset()).eval(self.functional) == 0
    }

    /// Base point on the line: `−offset`.
    pub fn anchor(&self) -> Weight {
        -self.kind.offset()
    }

    /// Primitive lattice direction of the line.
    pub fn direction(&self) -> Weight {
        let (u, v) = self.functional;
        let g = u.gcd(&v);
        Weight::new(v / g, -u / g)
    }

    /// Lattice points `anchor + t·direction` for `|t| ≤ steps`.
    pub fn lattice_points(&self, steps: i64) -> impl Iterator<Item = Weight> + '_ {
        let (p, d) = (self.anchor(), self.direction());
        (-steps..=steps).map(move |t| p + t * d)
    }

    /// Lattice intersection with a non-parallel line, if any.
    pub fn intersect(&self, other: &Line) -> Option<Weight> {
        let (u1, v1) = self.functional;
        let (u2, v2) = other.functional;
        let det = u1 * v2 - v1 * u2;
        if det == 0 {
            return None;
        }
        let c1 = -self.kind.offset().eval(self.functional);
        let c2 = -other.kind.offset().eval(other.functional);
        let a = c1 * v2 - v1 * c2;
        let b = u1 * c2 - c1 * u2;
        (a % det == 0 && b % det == 0).then(|| Weight::new(a / det, b / det))
    }
}

fn lines(kind: LineKind) -> Vec<Line> {
    let rs = g2();
    rs.positive_roots()
        .iter()
        .zip(rs.coroot_functionals())
        .enumerate()
        .map(|(index, (&root, &functional))| Line { kind, index, root, functional })
        .collect()
}

pub fn crab_lines() -> Vec<CrabLine> {
    lines(LineKind::Crab)
}

pub fn singular_lines() -> Vec<Line> {
    lines(LineKind::Singular)
}

pub fn mirror_singular_lines() -> Vec<Line> {
    lines(LineKind::MirrorSingular)
}

pub fn is_in_crab(w: Weight) -> bool {
    g2().is_singular(w + RHO)
}

/// Bit `i` is set when `w` lies on the crab line of root `i`.
pub fn crab_line_mask(w: Weight) -> u8 {
    let v = w + RHO;
    g2().coroot_functionals().iter().enumerate().filter(|(_, &f)| v.eval(f) == 0).fold(0u8, |m, (i, _)| m | (1 << i))
}

/// Bit `i` is set when `w` lies on the singular line of root `i`.
pub fn singular_line_mask(w: Weight) -> u8 {
    g2().coroot_functionals().iter().enumerate().filter(|(_, &f)| w.eval(f) == 0).fold(0u8, |m, (i, _)| m | (1 << i))
}

pub fn crab_lines_of(w: Weight) -> Vec<CrabLine> {
    let mask = crab_line_mask(w);
    crab_lines().into_iter().filter(|l| mask & (1 << l.index) != 0).collect()
}

fn intersections(first: &[Line], second: &[Line]) -> BTreeSet<Weight> {
    first.iter().flat_map(|x| second.iter().filter_map(move |y| x.intersect(y))).collect()
}

/// Weights `λ` with both `λ` and `λ + ρ` singular.
pub fn twenty_weights() -> &'static BTreeSet<Weight> {
    static CELL: OnceLock<BTreeSet<Weight>> = OnceLock::new();
    CELL.get_or_init(|| intersections(&singular_lines(), &crab_lines()))
}

/// Weights `μ` with both `μ` and `μ + ρ` in the crab.
pub fn mirror_twenty_weights() -> &'static BTreeSet<Weight> {
    static CELL: OnceLock<BTreeSet<Weight>> = OnceLock::new();
    CELL.get_or_init(|| intersections(&crab_lines(), &mirror_singular_lines()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Proximity {
    Near,
    Middle,
    Far,
}

/// Square of the near radius, `42²`.
pub fn near_bound_sq() -> Rational {
    int(42 * 42)
}

/// Square of the far radius, `(42 + 3√3)² = 1791 + 252√3`.
pub fn far_bound_sq() -> QuadraticValue {
    QuadraticValue::square_of(int(42), int(3), int(3))
}

pub fn classify(w: Weight) -> Proximity {
    classify_norm_sq(&int(norm_sq_int(w + RHO)))
}

/// Classification from `‖λ + ρ‖²`.
pub fn classify_norm_sq(n: &Rational) -> Proximity {
    if *n <= near_bound_sq() {
        Proximity::Near
    } else if compare_rational_vs_quadratic(n, &far_bound_sq()) == Ordering::Greater {
        Proximity::Far
    } else {
        Proximity::Middle
    }
}

/// Crab weights with `‖λ + ρ‖² ≤ bound`, sorted by `(a, b)`.
pub fn crab_weights_within(bound: impl Fn(i64) -> bool) -> Vec<Weight> {
    let mut out = BTreeSet::new();
    for line in crab_lines() {
        let d = line.direction();
        let step = norm_sq_int(d);
        let mut t = 0i64;
        while bound(t * t * step) {
            out.insert(line.anchor() + t * d);
            out.insert(line.anchor() - t * d);
            t += 1;
        }
    }
    out.into_iter().collect()
}

/// Crab weights with `‖λ + ρ‖² ≤ radius_sq`.
pub fn crab_weights_within_sq(radius_sq: &Rational) -> Vec<Weight> {
    crab_weights_within(|n| int(n) <= *radius_sq)
}

/// All crab weights that are not far, in lexicographic order.
pub fn non_far_crab_weights() -> &'static [Weight] {
    static CELL: OnceLock<Vec<Weight>> = OnceLock::new();
    CELL.get_or_init(|| crab_weights_within(|n| classify_norm_sq(&int(n)) != Proximity::Far))
}

/// Affine map from ω-coordinates to the plane with `α1` along the x-axis.
#[derive(Clone, Copy, Debug)]
pub struct Embedding {
    omega1: (f64, f64),
    omega2: (f64, f64),
}

impl Embedding {
    pub fn for_root_system(rs: &RootSystem) -> Self {
        let f = |r: &Rational| {
            r.numer().to_string().parse::<f64>().unwrap_or(0.0) / r.denom().to_string().parse::<f64>().unwrap_or(1.0)
        };
        let alpha = rs.simple_root(1);
        let alpha_len = f(&rs.norm_sq(alpha)).sqrt();
        let x1 = f(&rs.inner(Weight::new(1, 0), alpha)) / alpha_len;
        let x2 = f(&rs.inner(Weight::new(0, 1), alpha)) / alpha_len;
        let y2 = (f(&rs.gram()[1][1]) - x2 * x2).sqrt();
        let y1 = (f(&rs.gram()[0][1]) - x1 * x2) / y2;
        Embedding { omega1: (x1, y1), omega2: (x2, y2) }
    }

    pub fn point(&self, w: Weight) -> (f64, f64) {
        let (a, b) = (w.a as f64, w.b as f64);
        (a * self.omega1.0 + b * self.omega2.0, a * self.omega1.1 + b * self.omega2.1)
    }
}

/// SVG rendering of the crab: crab lines solid, singular lines dashed,
/// the 20 weights as disks and crab lattice points as circles.
/// `extent` is the half-width of the drawn square in root-length units.
pub fn render_svg(extent: u32) -> String {
    let emb = Embedding::for_root_system(g2());
    let scale = 24.0;
    let e = f64::from(extent.max(1));
    let size = 2.0 * e * scale;
    let to_px = |(x, y): (f64, f64)| ((x + e) * scale, (e - y) * scale);
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let reach = (4.0 * e) as i64 + 4;
    let segment = |svg: &mut String, line: &Line, style: &str| {
        let (p, d) = (line.anchor(), line.direction());
        let (x1, y1) = to_px(emb.point(p - reach * d));
        let (x2, y2) = to_px(emb.point(p + reach * d));
        let _ = writeln!(svg, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" {style}/>"#);
    };
    let _ = writeln!(svg, r#"<g id="singular-lines">"#);
    for line in singular_lines() {
        segment(&mut svg, &line, r#"stroke="gray" stroke-width="1" stroke-dasharray="6 4""#);
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, r#"<g id="crab-lines">"#);
    for line in crab_lines() {
        segment(&mut svg, &line, r#"stroke="black" stroke-width="1.5""#);
    }
    let _ = writeln!(svg, "</g>");
    let inside = |(x, y): (f64, f64)| x.abs() <= e && y.abs() <= e;
    let _ = writeln!(svg, r#"<g id="crab-points">"#);
    let points: BTreeSet<Weight> =
        crab_lines().iter().flat_map(|l| l.lattice_points(reach).collect::<Vec<_>>()).collect();
    for w in points.iter().filter(|&&w| inside(emb.point(w))) {
        let (cx, cy) = to_px(emb.point(*w));
        let _ = writeln!(svg, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="3" fill="none" stroke="black"/>"#);
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, r#"<g id="twenty-weights">"#);
    for w in twenty_weights().iter().filter(|&&w| inside(emb.point(w))) {
        let (cx, cy) = to_px(emb.point(*w));
        let _ = writeln!(svg, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="4.5" fill="black"><title>{w}</title></circle>"#);
    }
    let _ = writeln!(svg, "</g>");
    svg.push_str("</svg>\n");
    svg
}
