//! Exact arithmetic: rationals, comparisons against `a + b·√q`, and sparse
//! Laurent polynomials in two variables for the group ring.

mod laurent;
mod quadratic;

pub use laurent::{laurent_determinant, LaurentElement};
pub use quadratic::{compare_rational_vs_quadratic, QuadraticValue};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Builds the rational `n / d`.
///
/// Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses a decimal literal such as `7.7` or `-21.04` into an exact rational.
pub fn decimal(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: num_bigint::BigInt = format!("{whole}{frac}").parse().ok()?;
    let scale = num_bigint::BigInt::from(10u32).pow(frac.len() as u32);
    let value = Rational::new(digits, scale);
    Some(if neg { -value } else { value })
}

/// Parses `p`, `p/q` or a decimal literal.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: num_bigint::BigInt = n.trim().parse().ok()?;
        let d: num_bigint::BigInt = d.trim().parse().ok()?;
        if d == num_bigint::BigInt::from(0) {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    decimal(text)
}
