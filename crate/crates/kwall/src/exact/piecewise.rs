use std::fmt;

use num_traits::Zero;

use super::{fmt_rat, ExactError, Poly, Rat};

/// A piecewise polynomial on `[t0, inf)`.
///
/// Piece `i` governs the half-open interval `[t_i, t_{i+1})`. The function is
/// identically zero from the last breakpoint on. Values left of `t0` follow
/// the first piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseQuadratic {
    breakpoints: Vec<Rat>,
    pieces: Vec<Poly>,
}

impl PiecewiseQuadratic {
    /// Checks monotone breakpoints, the piece count and continuity at
    /// interior breakpoints.
    pub fn new(breakpoints: Vec<Rat>, pieces: Vec<Poly>) -> Result<Self, ExactError> {
        if breakpoints.is_empty() {
            return Err(ExactError::PieceCount { expected: 0, found: pieces.len() });
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ExactError::NonMonotoneBreakpoints);
        }
        if pieces.len() + 1 != breakpoints.len() {
            return Err(ExactError::PieceCount { expected: breakpoints.len() - 1, found: pieces.len() });
        }
        for i in 1..pieces.len() {
            let t = &breakpoints[i];
            if pieces[i - 1].eval(t) != pieces[i].eval(t) {
                return Err(ExactError::Discontinuous { at: Box::new(t.clone()) });
            }
        }
        Ok(PiecewiseQuadratic { breakpoints, pieces })
    }

    /// Builds from `(start, end, poly)` triples, dropping zero-length pieces.
    pub fn from_intervals(parts: Vec<(Rat, Rat, Poly)>) -> Result<Self, ExactError> {
        let parts: Vec<_> = parts.into_iter().filter(|(a, b, _)| a != b).collect();
        if parts.is_empty() {
            return Ok(Self::zero(Rat::zero()));
        }
        let mut bps = vec![parts[0].0.clone()];
        let mut pieces = Vec::new();
        for (a, b, p) in parts {
            if bps.last() != Some(&a) {
                return Err(ExactError::NonMonotoneBreakpoints);
            }
            bps.push(b);
            pieces.push(p);
        }
        Self::new(bps, pieces)
    }

    pub fn zero(start: Rat) -> Self {
        PiecewiseQuadratic { breakpoints: vec![start], pieces: Vec::new() }
    }

    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Poly] {
        &self.pieces
    }

    pub fn start(&self) -> &Rat {
        &self.breakpoints[0]
    }

    /// Last breakpoint; the function vanishes from here on.
    pub fn end(&self) -> &Rat {
        self.breakpoints.last().expect("at least one breakpoint")
    }

    pub fn intervals(&self) -> impl Iterator<Item = (&Rat, &Rat, &Poly)> {
        self.breakpoints.windows(2).zip(&self.pieces).map(|(w, p)| (&w[0], &w[1], p))
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        if self.pieces.is_empty() || t >= self.end() {
            return Rat::zero();
        }
        // index of the last breakpoint <= t, clamped to the first piece
        let idx = self.breakpoints.partition_point(|b| b <= t).saturating_sub(1);
        self.pieces[idx.min(self.pieces.len() - 1)].eval(t)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        PiecewiseQuadratic {
            breakpoints: self.breakpoints.clone(),
            pieces: self.pieces.iter().map(|p| p.scale(k)).collect(),
        }
    }

    /// `t -> f(t / lambda)` for `lambda > 0`.
    pub fn stretch(&self, lambda: &Rat) -> Self {
        assert!(lambda > &Rat::zero(), "stretch factor must be positive");
        let inv = lambda.recip();
        PiecewiseQuadratic {
            breakpoints: self.breakpoints.iter().map(|b| b * lambda).collect(),
            pieces: self.pieces.iter().map(|p| p.compose_affine(&inv, &Rat::zero())).collect(),
        }
    }

    /// Pointwise sum on a common refinement. Both must share the same start.
    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.start() != other.start() {
            return Err(ExactError::BelowDomain {
                from: Box::new(other.start().clone()),
                start: Box::new(self.start().clone()),
            });
        }
        let mut grid: Vec<Rat> = self.breakpoints.iter().chain(other.breakpoints.iter()).cloned().collect();
        grid.sort();
        grid.dedup();
        let pieces = grid.windows(2).map(|w| &self.piece_at(&w[0]) + &other.piece_at(&w[0])).collect();
        Self::new(grid, pieces)
    }

    fn piece_at(&self, t: &Rat) -> Poly {
        if self.pieces.is_empty() || t >= self.end() {
            return Poly::zero();
        }
        let idx = self.breakpoints.partition_point(|b| b <= t).saturating_sub(1);
        self.pieces[idx.min(self.pieces.len() - 1)].clone()
    }
}

/// `\int_{from}^{\infty} f(t) dt`, exact.
pub fn integrate(f: &PiecewiseQuadratic, from: &Rat) -> Result<Rat, ExactError> {
    if from < f.start() {
        return Err(ExactError::BelowDomain { from: Box::new(from.clone()), start: Box::new(f.start().clone()) });
    }
    let mut acc = Rat::zero();
    for (a, b, p) in f.intervals() {
        if b <= from {
            continue;
        }
        let lo = if a < from { from } else { a };
        acc += p.integrate(lo, b);
    }
    Ok(acc)
}

impl fmt::Display for PiecewiseQuadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pieces.is_empty() {
            return write!(f, "0 on [{}, inf)", fmt_rat(self.start()));
        }
        let parts: Vec<String> =
            self.intervals().map(|(a, b, p)| format!("[{}, {}]: {}", fmt_rat(a), fmt_rat(b), p)).collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn a12() -> PiecewiseQuadratic {
        let p1 = Poly::new(vec![int(1), int(0), rat(-1, 26)]);
        let p2 = Poly::new(vec![int(26), int(-5)]).pow(2).scale(&rat(1, 26));
        PiecewiseQuadratic::new(vec![int(0), int(5), rat(26, 5)], vec![p1, p2]).unwrap()
    }

    #[test]
    fn integrates_a12_profile() {
        assert_eq!(integrate(&a12(), &int(0)).unwrap(), rat(17, 5));
    }

    #[test]
    fn integrates_reducible_a11_profile() {
        let p1 = Poly::new(vec![int(1), int(0), rat(-1, 6)]);
        let p2 = Poly::new(vec![int(3), int(-1)]).pow(2).scale(&rat(1, 3));
        let f = PiecewiseQuadratic::new(vec![int(0), int(2), int(3)], vec![p1, p2]).unwrap();
        assert_eq!(integrate(&f, &int(0)).unwrap(), rat(5, 3));
    }

    #[test]
    fn zero_function_integrates_to_zero() {
        assert_eq!(integrate(&PiecewiseQuadratic::zero(int(0)), &int(0)).unwrap(), int(0));
    }

    #[test]
    fn rejects_malformed_input() {
        let p = Poly::constant(int(1));
        assert_eq!(
            PiecewiseQuadratic::new(vec![int(1), int(0)], vec![p.clone()]),
            Err(ExactError::NonMonotoneBreakpoints)
        );
        assert!(matches!(
            PiecewiseQuadratic::new(vec![int(0), int(1)], vec![p.clone(), p.clone()]),
            Err(ExactError::PieceCount { .. })
        ));
        assert!(matches!(
            PiecewiseQuadratic::new(vec![int(0), int(1), int(2)], vec![p, Poly::constant(int(2))]),
            Err(ExactError::Discontinuous { .. })
        ));
        assert!(integrate(&a12(), &int(-1)).is_err());
    }

    #[test]
    fn evaluation_is_zero_past_the_end() {
        let f = a12();
        assert_eq!(f.eval(&int(0)), int(1));
        assert_eq!(f.eval(&int(5)), rat(1, 26));
        assert_eq!(f.eval(&rat(26, 5)), int(0));
        assert_eq!(f.eval(&int(100)), int(0));
    }

    #[test]
    fn partial_integral_from_interior_point() {
        assert_eq!(integrate(&a12(), &int(5)).unwrap(), rat(1, 390));
    }

    #[test]
    fn stretch_rescales_integral() {
        let g = a12().stretch(&int(2));
        assert_eq!(integrate(&g, &int(0)).unwrap(), rat(34, 5));
        assert_eq!(g.eval(&int(10)), rat(1, 26));
    }
}
