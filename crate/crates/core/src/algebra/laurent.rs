use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Rational;

/// Sparse Laurent polynomial `Σ c·x^a·y^b` with `x = e^{ω1}`, `y = e^{ω2}`.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentElement {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, (0, 0))
    }

    /// `c·x^a·y^b`.
    pub fn monomial(c: impl Into<BigInt>, exponent: (i64, i64)) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        LaurentElement { terms }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), C)>,
        C: Into<BigInt>,
    {
        let mut out = LaurentElement::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: (i64, i64)) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    /// Returns the single term if this is a monomial.
    pub fn as_monomial(&self) -> Option<((i64, i64), &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// Sum of the coefficients (the augmentation `e^λ ↦ 1`).
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn add_term(&mut self, exponent: (i64, i64), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    /// Multiplies by `c·x^a·y^b` without going through a general product.
    pub fn mul_monomial(&self, c: &BigInt, exponent: (i64, i64)) -> Self {
        if c.is_zero() {
            return LaurentElement::zero();
        }
        let terms = self.terms.iter().map(|(&(a, b), v)| ((a + exponent.0, b + exponent.1), v * c)).collect();
        LaurentElement { terms }
    }

    /// Evaluates at rational points; both must be nonzero when negative
    /// exponents occur.
    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        let pow = |base: &Rational, e: i64| -> Rational {
            if e >= 0 {
                num_traits::pow(base.clone(), e as usize)
            } else {
                num_traits::pow(base.recip(), (-e) as usize)
            }
        };
        self.terms.iter().map(|(&(a, b), c)| Rational::from_integer(c.clone()) * pow(x, a) * pow(y, b)).sum()
    }
}

impl fmt::Display for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            write!(f, "{}*x^{}*y^{}", c.abs(), a, b)?;
        }
        Ok(())
    }
}

impl Add for &LaurentElement {
    type Output = LaurentElement;
    fn add(self, rhs: &LaurentElement) -> LaurentElement {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentElement {
    type Output = LaurentElement;
    fn sub(self, rhs: &LaurentElement) -> LaurentElement {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &LaurentElement {
    type Output = LaurentElement;
    fn neg(self) -> LaurentElement {
        LaurentElement { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &LaurentElement {
    type Output = LaurentElement;
    fn mul(self, rhs: &LaurentElement) -> LaurentElement {
        if let Some((e, c)) = rhs.as_monomial() {
            return self.mul_monomial(c, e);
        }
        if let Some((e, c)) = self.as_monomial() {
            return rhs.mul_monomial(c, e);
        }
        let mut acc: HashMap<(i64, i64), BigInt> = HashMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                *acc.entry((a1 + a2, b1 + b2)).or_default() += c1 * c2;
            }
        }
        LaurentElement { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

/// Exact determinant of a square matrix of Laurent polynomials.
///
/// Laplace expansion along successive rows, memoized over the set of
/// remaining columns: `2^n` minors, each built from `n` products. Minors of
/// equal size are independent and are computed in parallel when the
/// `parallel` feature is enabled; the result does not depend on scheduling.
///
/// Panics if the matrix is not square or has more than 20 rows.
pub fn laurent_determinant(matrix: &[Vec<LaurentElement>]) -> LaurentElement {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    assert!(n <= 20, "determinant limited to 20x20");
    if n == 0 {
        return LaurentElement::one();
    }

    // minors[mask] is the minor on rows n-|mask|..n and columns `mask`.
    let full = (1usize << n) - 1;
    let mut minors: HashMap<usize, LaurentElement> = HashMap::new();
    minors.insert(0, LaurentElement::one());
    for size in 1..=n {
        let row = n - size;
        let masks: Vec<usize> = (1..=full).filter(|m| m.count_ones() as usize == size).collect();
        let compute = |mask: usize| -> (usize, LaurentElement) {
            let mut acc: HashMap<(i64, i64), BigInt> = HashMap::new();
            let mut position = 0usize;
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let entry = &matrix[row][col];
                let sub = &minors[&(mask & !(1 << col))];
                if !entry.is_zero() && !sub.is_zero() {
                    let negate = position % 2 == 1;
                    for (&(a1, b1), c1) in &entry.terms {
                        for (&(a2, b2), c2) in &sub.terms {
                            let v = c1 * c2;
                            let slot = acc.entry((a1 + a2, b1 + b2)).or_default();
                            if negate {
                                *slot -= v;
                            } else {
                                *slot += v;
                            }
                        }
                    }
                }
                position += 1;
            }
            let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            (mask, LaurentElement { terms })
        };
        #[cfg(feature = "parallel")]
        let level: Vec<(usize, LaurentElement)> = {
            use rayon::prelude::*;
            masks.par_iter().map(|&m| compute(m)).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let level: Vec<(usize, LaurentElement)> = masks.iter().map(|&m| compute(m)).collect();

        minors.retain(|mask, _| mask.count_ones() as usize == size - 1);
        if size == n {
            return level.into_iter().next().map(|(_, d)| d).unwrap_or_default();
        }
        minors.extend(level);
    }
    unreachable!()
}
