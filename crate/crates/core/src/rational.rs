//! Exact rationals, the ground-truth value type for every decode and oracle.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision fraction, always kept reduced with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("zero-denominator")]
    ZeroDenominator,
    #[error("malformed rational {0:?}: expected P/Q or P with decimal digits and Q > 0")]
    Malformed(String),
}

/// Builds the canonical reduced fraction `p/q`.
pub fn rat_normalize(
    p: impl Into<BigInt>,
    q: impl Into<BigInt>,
) -> Result<Rational, RationalError> {
    let q = q.into();
    if q.is_zero() {
        return Err(RationalError::ZeroDenominator);
    }
    Ok(Rational::new(p.into(), q))
}

pub fn rat_compare(a: &Rational, b: &Rational) -> Ordering {
    // both denominators positive, so cross-multiplication preserves order
    (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()))
}

pub fn rat(p: i64, q: i64) -> Rational {
    rat_normalize(p, q).expect("nonzero denominator")
}

/// 2^e as an exact rational, for any sign of `e`.
pub fn pow2(e: i64) -> Rational {
    let mag = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(mag)
    } else {
        Rational::new(BigInt::one(), mag)
    }
}

fn parse_digits(s: &str, whole: &str) -> Result<BigInt, RationalError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(RationalError::Malformed(whole.to_string()));
    }
    s.parse::<BigInt>()
        .map_err(|_| RationalError::Malformed(whole.to_string()))
}

/// Parses `P/Q` or `P`, with an optional leading `-` (ASCII or U+2212).
pub fn parse_rational(text: &str) -> Result<Rational, RationalError> {
    let t = text.trim();
    let (negative, body) = if let Some(rest) = t.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = t.strip_prefix('\u{2212}') {
        (true, rest)
    } else {
        (false, t)
    };
    let (p, q) = match body.split_once('/') {
        Some((p, q)) => (parse_digits(p, text)?, parse_digits(q, text)?),
        None => (parse_digits(body, text)?, BigInt::one()),
    };
    let r = rat_normalize(p, q)?;
    Ok(if negative { -r } else { r })
}

/// Text form `P/Q`, or `P` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// True when `|a - b| <= bound`.
pub fn within(a: &Rational, b: &Rational, bound: &Rational) -> bool {
    (a - b).abs() <= *bound
}
