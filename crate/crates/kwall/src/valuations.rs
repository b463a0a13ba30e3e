//! Log discrepancies, curve orders and thresholds of monomial valuations
//! over smooth and cyclic quotient surface points.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{floor_int, int, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ValuationError {
    #[error("invalid quotient point: {0}")]
    Point(String),
    #[error("weights and scale must be positive")]
    NonPositive,
    #[error("germ support is empty")]
    EmptyGerm,
    #[error("germ contains a unit, the threshold is undefined")]
    UnitGerm,
    #[error("coefficient {c} outside (0, {max})")]
    OutOfRange { c: Box<Rat>, max: Box<Rat> },
    #[error("invalid quasi-homogeneous germ: {0}")]
    QuasiHomog(String),
}

/// The cyclic quotient point `1/n (a, b)`; `n = 1` is a smooth point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicQuot {
    pub n: u64,
    pub a: u64,
    pub b: u64,
}

impl CyclicQuot {
    pub fn new(n: u64, a: i64, b: i64) -> Result<Self, ValuationError> {
        if n == 0 {
            return Err(ValuationError::Point("order must be positive".into()));
        }
        let red = |x: i64| x.rem_euclid(n as i64) as u64;
        let (a, b) = (red(a), red(b));
        if n > 1 && a.gcd(&n) != 1 {
            return Err(ValuationError::Point(format!("gcd(a, n) must be 1 for 1/{n}({a},{b})")));
        }
        Ok(CyclicQuot { n, a, b })
    }

    pub fn smooth() -> Self {
        CyclicQuot { n: 1, a: 0, b: 0 }
    }

    /// The T-singularity `1/m^2 (1, a m - 1)` of local Gorenstein index `m`.
    pub fn t_singularity(m: u64, a: u64) -> Result<Self, ValuationError> {
        CyclicQuot::new(m * m, 1, (a * m) as i64 - 1)
    }

    /// `m` with `n = m^2`, if the order is a perfect square.
    pub fn index(&self) -> Option<u64> {
        let r = self.n.sqrt();
        (r * r == self.n).then_some(r)
    }
}

/// The monomial valuation of weights `(w1, w2)` on the covering chart of a
/// quotient point, pushed down and multiplied by `scale`.
///
/// Pushing forward without dividing by the quotient order corresponds to
/// `scale = n`; dividing by it corresponds to `scale = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialVal {
    pub point: CyclicQuot,
    pub w1: Rat,
    pub w2: Rat,
    pub scale: Rat,
}

impl MonomialVal {
    pub fn new(point: CyclicQuot, w1: Rat, w2: Rat, scale: Rat) -> Result<Self, ValuationError> {
        if !(w1.is_positive() && w2.is_positive() && scale.is_positive()) {
            return Err(ValuationError::NonPositive);
        }
        Ok(MonomialVal { point, w1, w2, scale })
    }

    /// Same valuation multiplied by `lambda`.
    pub fn rescaled(&self, lambda: &Rat) -> Self {
        MonomialVal { scale: &self.scale * lambda, ..self.clone() }
    }

    fn factor(&self) -> Rat {
        &self.scale / int(self.point.n as i64)
    }
}

/// Exponents `(i, j)` of the monomials `x^i y^j` of a germ; coefficients
/// are assumed generic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermSupport {
    monomials: BTreeSet<(u32, u32)>,
}

impl GermSupport {
    pub fn new(monomials: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, ValuationError> {
        let monomials: BTreeSet<_> = monomials.into_iter().collect();
        if monomials.is_empty() {
            return Err(ValuationError::EmptyGerm);
        }
        Ok(GermSupport { monomials })
    }

    pub fn monomials(&self) -> &BTreeSet<(u32, u32)> {
        &self.monomials
    }

    pub fn with(&self, extra: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut monomials = self.monomials.clone();
        monomials.extend(extra);
        GermSupport { monomials }
    }

    /// Parses sums of monomials such as `"x^6*y + x^2*y^2"` or explicit
    /// exponent pairs such as `"(2,0),(0,13)"`.
    pub fn parse(s: &str) -> Result<Self, ValuationError> {
        let bad = || ValuationError::QuasiHomog(format!("cannot parse germ {s:?}"));
        let t = s.trim();
        if t.starts_with('(') {
            let mut out = Vec::new();
            for chunk in t.split(')') {
                let c = chunk.trim().trim_start_matches(',').trim().trim_start_matches('(');
                if c.is_empty() {
                    continue;
                }
                let (i, j) = c.split_once(',').ok_or_else(bad)?;
                out.push((i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?));
            }
            return GermSupport::new(out);
        }
        let mut out = Vec::new();
        for term in t.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(bad());
            }
            if term == "1" {
                out.push((0, 0));
                continue;
            }
            let (mut i, mut j) = (0u32, 0u32);
            for f in term.split(|ch: char| ch == '*' || ch.is_whitespace()).filter(|f| !f.is_empty()) {
                let (var, exp) = match f.split_once('^') {
                    Some((v, e)) => (v.trim(), e.trim().parse::<u32>().map_err(|_| bad())?),
                    None => (f, 1),
                };
                match var {
                    "x" => i += exp,
                    "y" => j += exp,
                    _ => return Err(bad()),
                }
            }
            out.push((i, j));
        }
        GermSupport::new(out)
    }
}

impl std::fmt::Display for GermSupport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let var = |v: &str, e: u32| match e {
            0 => None,
            1 => Some(v.to_string()),
            _ => Some(format!("{v}^{e}")),
        };
        let terms: Vec<String> = self
            .monomials
            .iter()
            .map(|&(i, j)| {
                let parts: Vec<String> = [var("x", i), var("y", j)].into_iter().flatten().collect();
                if parts.is_empty() {
                    "1".to_string()
                } else {
                    parts.join("*")
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// A germ that is homogeneous of `degree` for the weights `(w1, w2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiHomogGerm {
    pub w1: u64,
    pub w2: u64,
    pub degree: u64,
}

impl QuasiHomogGerm {
    pub fn new(w1: u64, w2: u64, degree: u64) -> Result<Self, ValuationError> {
        if w1 == 0 || w2 == 0 || degree == 0 {
            return Err(ValuationError::QuasiHomog("weights and degree must be positive".into()));
        }
        if degree < w1.max(w2) {
            return Err(ValuationError::QuasiHomog("degree below the larger weight".into()));
        }
        Ok(QuasiHomogGerm { w1, w2, degree })
    }
}

/// `A(v) = scale (w1 + w2) / n`.
pub fn log_discrepancy(v: &MonomialVal) -> Rat {
    v.factor() * (&v.w1 + &v.w2)
}

/// `v(f) = scale min (i w1 + j w2) / n` over the support.
pub fn ord_on_germ(v: &MonomialVal, g: &GermSupport) -> Rat {
    let m = g
        .monomials
        .iter()
        .map(|&(i, j)| &v.w1 * int(i as i64) + &v.w2 * int(j as i64))
        .min()
        .expect("support is nonempty");
    v.factor() * m
}

/// Smallest `t` with `(t, t)` in the Newton polyhedron `conv(supp) + R^2_{>=0}`.
fn newton_diagonal(g: &GermSupport) -> Rat {
    let pts: Vec<(Rat, Rat)> = g.monomials.iter().map(|&(i, j)| (int(i as i64), int(j as i64))).collect();
    let mut best: Option<Rat> = None;
    let mut offer = |t: Rat| {
        if best.as_ref().is_none_or(|b| &t < b) {
            best = Some(t);
        }
    };
    for p in &pts {
        offer(p.0.clone().max(p.1.clone()));
    }
    // the diagonal may also cross a segment between two support points
    for (k, p) in pts.iter().enumerate() {
        for q in &pts[k + 1..] {
            let dp = &p.0 - &p.1;
            let dq = &q.0 - &q.1;
            if dp.is_zero() || dq.is_zero() || dp.signum() == dq.signum() {
                continue;
            }
            let lam = &dq / (&dq - &dp);
            offer(&lam * &p.0 + (Rat::one() - &lam) * &q.0);
        }
    }
    best.expect("support is nonempty")
}

/// `min(1, 1/t*)` for the diagonal point `(t*, t*)` of the Newton boundary.
/// Valid for germs that are nondegenerate with respect to their Newton
/// polygon.
pub fn lct_newton(g: &GermSupport) -> Result<Rat, ValuationError> {
    if g.monomials.contains(&(0, 0)) {
        return Err(ValuationError::UnitGerm);
    }
    Ok(newton_diagonal(g).recip().min(Rat::one()))
}

/// Local lct of a curve at a point; `1` when the curve misses the point.
pub fn lct_local(g: &GermSupport) -> Rat {
    lct_newton(g).unwrap_or_else(|_| Rat::one())
}

/// `min(1, (w1 + w2) / degree)`.
pub fn lct_quasihomog(g: &QuasiHomogGerm) -> Rat {
    Rat::new(BigInt::from(g.w1 + g.w2), BigInt::from(g.degree)).min(Rat::one())
}

/// Largest local Gorenstein index allowed at coefficient `c` for degree `d`
/// curves: `min(floor(3/(3 - cd)), d)`, with `2d/3` replacing `d` when `3 | d`.
pub fn index_bound(d: u64, c: &Rat) -> Result<u64, ValuationError> {
    let max = Rat::new(BigInt::from(3), BigInt::from(d));
    if !c.is_positive() || c >= &max {
        return Err(ValuationError::OutOfRange { c: Box::new(c.clone()), max: Box::new(max) });
    }
    let di = int(d as i64);
    let raw = floor_int(&(int(3) / (int(3) - c * &di)));
    let cap = if d.is_multiple_of(3) { 2 * d / 3 } else { d };
    Ok(raw.to_u64().map_or(cap, |r| r.min(cap)))
}

/// Whether a T-singularity of index `m` survives the local volume estimate
/// `m <= (2 - c ordD) / (2 beta)`, `beta = 1 - cd/3`.
///
/// Smooth points are never excluded. Errors when `beta <= 0` or the point is
/// not of the form `1/m^2 (1, am - 1)`.
pub fn local_volume_bound_check(point: &CyclicQuot, c: &Rat, d: u64, ord_d: &Rat) -> Result<bool, ValuationError> {
    if point.n == 1 {
        return Ok(true);
    }
    let m = point.index().ok_or_else(|| ValuationError::Point(format!("order {} is not a square", point.n)))?;
    let beta = Rat::one() - c * int(d as i64) / int(3);
    if !beta.is_positive() {
        return Err(ValuationError::OutOfRange { c: Box::new(c.clone()), max: Box::new(Rat::new(3.into(), d.into())) });
    }
    let bound = (int(2) - c * ord_d) / (int(2) * beta);
    Ok(int(m as i64) <= bound)
}

/// `A / (alpha S0)`: the ratio `A/S` at `c = 0`, an upper bound for delta.
pub fn delta_upper(a: &Rat, s0: &Rat, alpha: &Rat) -> Rat {
    a / (alpha * s0)
}

/// Minimum of `A/S` over a declared candidate list, with the index of the
/// minimiser. Still only an upper bound for delta.
pub fn delta_upper_min(candidates: &[(Rat, Rat)], alpha: &Rat) -> Option<(usize, Rat)> {
    candidates.iter().enumerate().map(|(k, (a, s0))| (k, delta_upper(a, s0, alpha))).min_by(|x, y| x.1.cmp(&y.1))
}

/// Exponents of the monomials of a general curve of weighted degree `deg`
/// on `P(1, 4, 25)`, read in the chart around the `1/25 (1, 4)` point.
pub fn p1425_germ_at_quarter_chart(deg: u64) -> GermSupport {
    let mut mons = Vec::new();
    for k in 0..=deg / 25 {
        let rest = deg - 25 * k;
        for j in 0..=rest / 4 {
            mons.push(((rest - 4 * j) as u32, j as u32));
        }
    }
    GermSupport::new(mons).expect("degree admits monomials")
}

/// Exponents of the monomials of a general curve of degree `deg` on
/// `P(1, 1, 4)`, read on the cover of the `1/4 (1, 1)` point.
pub fn p114_germ_at_quarter_chart(deg: u64) -> GermSupport {
    let mut mons = Vec::new();
    for k in 0..=deg / 4 {
        let rest = (deg - 4 * k) as u32;
        mons.extend((0..=rest).map(|i| (i, rest - i)));
    }
    GermSupport::new(mons).expect("degree admits monomials")
}

/// Minimal `c` with `index_bound(d, c) >= m`, if reachable below `3/d`.
pub fn min_coeff_for_index(d: u64, m: u64) -> Option<Rat> {
    let cap = if d.is_multiple_of(3) { 2 * d / 3 } else { d };
    if m > cap || m == 0 {
        return None;
    }
    // floor(3/(3 - cd)) >= m  iff  c >= 3(m - 1)/(m d)
    let c = Rat::new(BigInt::from(3 * (m - 1)), BigInt::from(m * d));
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn val(w1: i64, w2: i64, n: u64, scale: Rat) -> MonomialVal {
        MonomialVal::new(CyclicQuot::new(n, 1, 1).unwrap(), int(w1), int(w2), scale).unwrap()
    }

    fn germ(ms: &[(u32, u32)]) -> GermSupport {
        GermSupport::new(ms.iter().copied()).unwrap()
    }

    #[test]
    fn log_discrepancies() {
        assert_eq!(log_discrepancy(&val(13, 2, 1, int(1))), int(15));
        assert_eq!(log_discrepancy(&val(2, 13, 25, int(1))), rat(3, 5));
        assert_eq!(log_discrepancy(&val(1, 1, 4, int(2))), int(1));
    }

    #[test]
    fn curve_orders() {
        assert_eq!(ord_on_germ(&val(13, 2, 1, int(1)), &germ(&[(2, 0), (0, 13)])), int(26));
        assert_eq!(ord_on_germ(&val(13, 2, 1, int(1)), &germ(&[(0, 0)])), int(0));
        assert_eq!(ord_on_germ(&val(5, 1, 1, int(1)), &germ(&[(2, 0), (0, 10)])), int(10));
    }

    #[test]
    fn newton_thresholds() {
        assert_eq!(lct_newton(&germ(&[(2, 0), (0, 10)])).unwrap(), rat(3, 5));
        assert_eq!(lct_newton(&germ(&[(2, 0), (0, 13)])).unwrap(), rat(15, 26));
        assert_eq!(lct_newton(&germ(&[(1, 0)])).unwrap(), int(1));
        assert_eq!(lct_newton(&germ(&[(5, 0)])).unwrap(), rat(1, 5));
        assert_eq!(lct_newton(&germ(&[(0, 0), (1, 1)])), Err(ValuationError::UnitGerm));
    }

    #[test]
    fn quasi_homogeneous_thresholds() {
        assert_eq!(lct_quasihomog(&QuasiHomogGerm::new(2, 1, 5).unwrap()), rat(3, 5));
        assert_eq!(lct_quasihomog(&QuasiHomogGerm::new(13, 2, 26).unwrap()), rat(15, 26));
        assert_eq!(lct_quasihomog(&QuasiHomogGerm::new(1, 1, 2).unwrap()), int(1));
        assert!(QuasiHomogGerm::new(5, 1, 3).is_err());
    }

    #[test]
    fn index_bounds() {
        assert_eq!(index_bound(5, &rat(54, 95)).unwrap(), 5);
        assert_eq!(index_bound(4, &rat(1, 8)).unwrap(), 1);
        assert_eq!(index_bound(6, &rat(1, 3)).unwrap(), 3);
        assert!(index_bound(5, &rat(3, 5)).is_err());
        assert!(index_bound(5, &int(0)).is_err());
    }

    #[test]
    fn local_volume_exclusions() {
        let five = CyclicQuot::t_singularity(5, 1).unwrap();
        assert_eq!(five.n, 25);
        assert!(!local_volume_bound_check(&five, &rat(1, 5), 7, &int(0)).unwrap());
        assert!(local_volume_bound_check(&CyclicQuot::smooth(), &rat(1, 5), 7, &int(0)).unwrap());
        let two = CyclicQuot::t_singularity(2, 1).unwrap();
        let eps = rat(1, 100);
        assert!(!local_volume_bound_check(&two, &(rat(3, 8) - &eps), 4, &int(0)).unwrap());
        assert!(local_volume_bound_check(&two, &(rat(3, 8) + &eps), 4, &int(0)).unwrap());
        assert!(local_volume_bound_check(&two, &rat(3, 8), 4, &int(0)).unwrap());
    }

    #[test]
    fn delta_ratios() {
        assert_eq!(delta_upper(&rat(3, 5), &rat(9, 25), &int(15)), rat(1, 9));
        assert_eq!(delta_upper(&int(2), &int(1), &int(2)), int(1));
        let (k, m) = delta_upper_min(&[(int(1), int(1)), (int(1), int(5))], &int(2)).unwrap();
        assert_eq!((k, m), (1, rat(1, 10)));
    }

    #[test]
    fn p1425_germs() {
        assert_eq!(lct_newton(&p1425_germ_at_quarter_chart(10)).unwrap(), rat(1, 2));
        assert_eq!(lct_newton(&p1425_germ_at_quarter_chart(20)).unwrap(), rat(1, 4));
        assert_eq!(lct_newton(&p1425_germ_at_quarter_chart(40)).unwrap(), rat(1, 3));
        assert_eq!(lct_newton(&p1425_germ_at_quarter_chart(70)).unwrap(), rat(1, 4));
        for deg in [2, 4, 6, 8, 10, 14] {
            assert_eq!(lct_local(&p114_germ_at_quarter_chart(deg)), int(1), "degree {deg}");
        }
        assert_eq!(lct_local(&p114_germ_at_quarter_chart(3)), rat(2, 3));
    }

    #[test]
    fn index_thresholds() {
        assert_eq!(min_coeff_for_index(7, 5), Some(rat(12, 35)));
        assert_eq!(index_bound(7, &rat(12, 35)).unwrap(), 5);
        assert_eq!(index_bound(7, &(rat(12, 35) - rat(1, 1000))).unwrap(), 4);
    }

    #[test]
    fn parses_germs() {
        assert_eq!(GermSupport::parse("x^2 + y^13").unwrap(), germ(&[(2, 0), (0, 13)]));
        assert_eq!(GermSupport::parse("x^6*y + x^2*y^2").unwrap(), germ(&[(6, 1), (2, 2)]));
        assert_eq!(GermSupport::parse("x^2 y + y^5").unwrap(), germ(&[(2, 1), (0, 5)]));
        assert_eq!(GermSupport::parse("(2,0),(0,10)").unwrap(), germ(&[(2, 0), (0, 10)]));
        assert!(GermSupport::parse("x^2 + z").is_err());
    }

    #[test]
    fn quotient_points_are_reduced() {
        let p = CyclicQuot::new(4, 5, -1).unwrap();
        assert_eq!((p.a, p.b), (1, 3));
        assert!(CyclicQuot::new(4, 2, 1).is_err());
        assert_eq!(CyclicQuot::t_singularity(5, 1).unwrap().index(), Some(5));
    }
}
