//! Exact rational arithmetic and the small amount of geometry built on it.
//!
//! Every scalar in the crate is a [`Rat`], an arbitrary precision rational.
//! Nothing in here ever rounds.

mod interval;
mod linalg;
mod piecewise;
mod poly;
mod polygon;

pub use interval::{Bound, Interval};
pub use linalg::{det3, rank3, solve_linear3, Mat3, Vec2, Vec3};
pub use piecewise::{integrate, PiecewiseQuadratic};
pub use poly::Poly;
pub use polygon::{area_centroid, clip, HalfPlane, Polygon2, Shape};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary precision rational. Always stored reduced with a positive denominator.
pub type Rat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("breakpoints must be strictly increasing")]
    NonMonotoneBreakpoints,
    #[error("expected {expected} pieces for the given breakpoints, found {found}")]
    PieceCount { expected: usize, found: usize },
    #[error("pieces disagree at breakpoint {at}")]
    Discontinuous { at: Box<Rat> },
    #[error("lower limit {from} lies left of the domain start {start}")]
    BelowDomain { from: Box<Rat>, start: Box<Rat> },
    #[error("degenerate polygon: {0}")]
    Degenerate(&'static str),
    #[error("singular 3x3 system (rank {rank})")]
    Singular { rank: usize },
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("interval is empty")]
    EmptyInterval,
}

/// `n/d` as a rational. Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` (surrounding whitespace allowed).
pub fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    let t = s.trim();
    let bad = || ExactError::Parse(s.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

/// Canonical `p/q` rendering; integers print without a denominator.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Largest integer not exceeding `r`.
pub fn floor_int(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_reduced() {
        assert_eq!(parse_rat("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rat(" -49/150 ").unwrap(), rat(-49, 150));
        assert_eq!(parse_rat("7").unwrap(), int(7));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("0.5").is_err());
        assert_eq!(fmt_rat(&rat(54, 95)), "54/95");
        assert_eq!(fmt_rat(&rat(30, 2)), "15");
        assert_eq!(fmt_rat(&rat(1, -3)), "-1/3");
    }

    #[test]
    fn floor_handles_negatives() {
        assert_eq!(floor_int(&rat(-1, 2)), BigInt::from(-1));
        assert_eq!(floor_int(&rat(19, 1)), BigInt::from(19));
    }
}
