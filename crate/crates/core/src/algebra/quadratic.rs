use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use super::Rational;

/// The real number `a + b·√q` with rational `a`, `b` and rational radicand
/// `q ≥ 0`.
///
/// Only the sign is ever needed, and it is decided with at most one squaring,
/// so no square root is ever taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticValue {
    pub a: Rational,
    pub b: Rational,
    pub q: Rational,
}

impl QuadraticValue {
    /// Panics if `q < 0`.
    pub fn new(a: Rational, b: Rational, q: Rational) -> Self {
        assert!(!q.is_negative(), "radicand must be non-negative");
        QuadraticValue { a, b, q }
    }

    pub fn rational(a: Rational) -> Self {
        QuadraticValue { a, b: Rational::zero(), q: Rational::zero() }
    }

    /// `(x + y·√q)²`, which stays in the same quadratic extension.
    pub fn square_of(x: Rational, y: Rational, q: Rational) -> Self {
        let a = &x * &x + &y * &y * &q;
        let b = Rational::from_integer(2.into()) * &x * &y;
        QuadraticValue::new(a, b, q)
    }

    /// Sign of the value as an ordering against zero.
    pub fn signum(&self) -> Ordering {
        sign_of_sum(&self.a, &self.b, &self.q)
    }

    /// Exact comparison with another value over the same radicand.
    ///
    /// Panics if the radicands differ and both irrational parts are nonzero.
    pub fn cmp_same_radicand(&self, other: &QuadraticValue) -> Ordering {
        let q = if self.b.is_zero() {
            &other.q
        } else if other.b.is_zero() || self.q == other.q {
            &self.q
        } else {
            panic!("comparison across different radicands");
        };
        sign_of_sum(&(&self.a - &other.a), &(&self.b - &other.b), q)
    }
}

impl fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() || self.q.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}·√{}", self.a, self.b, self.q)
        }
    }
}

/// Sign of `x + y·√q`.
fn sign_of_sum(x: &Rational, y: &Rational, q: &Rational) -> Ordering {
    let sx = x.cmp(&Rational::zero());
    if y.is_zero() || q.is_zero() {
        return sx;
    }
    let sy = y.cmp(&Rational::zero());
    if sx == Ordering::Equal {
        return sy;
    }
    if sx == sy {
        return sx;
    }
    // Opposite signs: the larger magnitude wins.
    let lhs = x * x;
    let rhs = y * y * q;
    match lhs.cmp(&rhs) {
        Ordering::Equal => Ordering::Equal,
        Ordering::Greater => sx,
        Ordering::Less => sy,
    }
}

/// Exact ordering of `p` against `t.a + t.b·√t.q`.
pub fn compare_rational_vs_quadratic(p: &Rational, t: &QuadraticValue) -> Ordering {
    sign_of_sum(&(p - &t.a), &-&t.b, &t.q)
}
