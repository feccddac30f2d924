//! Exact rational arithmetic. Every density in this crate is a `Rational`;
//! floating point never participates in a comparison.

use crate::{Error, Result};

pub use num_rational::Rational64 as Rational;
use num_traits::Zero;

/// Builds `p/q` in lowest terms. Panics on a zero denominator, so callers
/// validate denominators first (see [`mediant_bound`]).
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

/// Parses "p/q" or a bare integer "p".
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: i64 = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    let q: i64 = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    if q == 0 {
        return Err(Error::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(p, q))
}

/// Six-decimal approximation, for the optional `--decimal` column only.
pub fn approx(r: Rational) -> String {
    format!("{:.6}", *r.numer() as f64 / *r.denom() as f64)
}

/// The weighted-average bound behind fan substitution: compares
/// (a+b+c)/(d+e+f) against max{(a+2b)/(d+2e), (a+2c)/(d+2f)}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MediantBound {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
    pub equality: bool,
}

pub fn mediant_bound(
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
    e: Rational,
    f: Rational,
) -> Result<MediantBound> {
    for (name, v) in [("a", a), ("b", b), ("c", c), ("d", d), ("e", e), ("f", f)] {
        if v < Rational::zero() {
            return Err(Error::Parse(format!("{name} must be nonnegative, got {v}")));
        }
    }
    let two = Rational::from_integer(2);
    let d2e = d + two * e;
    let d2f = d + two * f;
    let def = d + e + f;
    if d2e.is_zero() {
        return Err(Error::ZeroDenominator("d+2e".into()));
    }
    if d2f.is_zero() {
        return Err(Error::ZeroDenominator("d+2f".into()));
    }
    if def.is_zero() {
        return Err(Error::ZeroDenominator("d+e+f".into()));
    }
    let lhs = (a + b + c) / def;
    let left = (a + two * b) / d2e;
    let right = (a + two * c) / d2f;
    let rhs = left.max(right);
    Ok(MediantBound {
        lhs,
        rhs,
        holds: lhs <= rhs,
        equality: lhs == rhs,
    })
}
