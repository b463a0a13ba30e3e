//! Walls from the valuative criterion: `A(c) = A0 - c ordD` against
//! `S(c) = (alpha - beta c) S0`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::exact::{fmt_rat, int, rat, ExactError, Interval, Rat};
use crate::fixtures;
use crate::valuations::{lct_newton, GermSupport, ValuationError};
use crate::volumes::VolumeError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WallError {
    #[error("A(c) and S(c) coincide, the case carries no information")]
    Degenerate,
    #[error("degree {0} is out of scope, need d >= 4")]
    DegreeOutOfScope(u64),
    #[error("alpha - beta c must be positive on {0}")]
    AntiCanonicalSign(Box<Interval>),
    #[error("coefficient {c} must lie in (0, {max})")]
    CoeffOutOfRange { c: Box<Rat>, max: Box<Rat> },
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("all coordinates vanish")]
    ZeroPoint,
    #[error("unknown surface tag {0:?}")]
    UnknownSurface(String),
    #[error(transparent)]
    Volume(#[from] VolumeError),
    #[error(transparent)]
    Valuation(#[from] ValuationError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// The data `(A0, ordD, S0, alpha, beta)` of one divisor over one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallCase {
    pub name: String,
    pub a0: Rat,
    pub ord_d: Rat,
    pub s0: Rat,
    pub alpha: Rat,
    pub beta: Rat,
    pub valid_range: Interval,
    /// Which engine produced each number.
    pub provenance: String,
}

impl WallCase {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        a0: Rat,
        ord_d: Rat,
        s0: Rat,
        alpha: Rat,
        beta: Rat,
        valid_range: Interval,
        provenance: impl Into<String>,
    ) -> Result<Self, WallError> {
        // an affine function is positive on an interval iff it is at the ends
        let ok = |b: &crate::exact::Bound| {
            let v = &alpha - &beta * &b.value;
            if b.closed {
                v.is_positive()
            } else {
                !v.is_negative()
            }
        };
        if !ok(&valid_range.lo) || !ok(&valid_range.hi) || (&alpha - &beta * valid_range.midpoint()).is_negative() {
            return Err(WallError::AntiCanonicalSign(Box::new(valid_range)));
        }
        Ok(WallCase { name: name.into(), a0, ord_d, s0, alpha, beta, valid_range, provenance: provenance.into() })
    }

    pub fn a(&self, c: &Rat) -> Rat {
        &self.a0 - c * &self.ord_d
    }

    pub fn s(&self, c: &Rat) -> Rat {
        (&self.alpha - &self.beta * c) * &self.s0
    }

    /// `A(c) - S(c)`.
    pub fn gap(&self, c: &Rat) -> Rat {
        self.a(c) - self.s(c)
    }

    pub fn verdict(&self, c: &Rat) -> Verdict {
        if self.gap(c).is_negative() {
            Verdict::KUnstable
        } else {
            Verdict::NecessaryConditionPassed
        }
    }

    /// Multiplies the valuation by `lambda`: `A0`, `ordD` and `S0` all scale.
    pub fn rescaled(&self, lambda: &Rat) -> Self {
        WallCase { a0: &self.a0 * lambda, ord_d: &self.ord_d * lambda, s0: &self.s0 * lambda, ..self.clone() }
    }
}

/// Outcome of comparing `A` and `S` at one coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// `A >= S`; necessary for K-semistability, not sufficient.
    NecessaryConditionPassed,
    /// `A < S`; the pair is K-unstable.
    KUnstable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NecessaryConditionPassed => "necessary condition passed",
            Verdict::KUnstable => "K-unstable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallReport {
    pub case: WallCase,
    /// Zero of `A - S`, when it lies inside the valid range.
    pub wall: Option<Rat>,
    pub unstable_below: bool,
    pub unstable_above: bool,
}

impl WallReport {
    pub fn verdict_at(&self, c: &Rat) -> Verdict {
        self.case.verdict(c)
    }
}

/// Solves `A0 - c ordD = (alpha - beta c) S0` on the valid range.
pub fn solve_wall(case: &WallCase) -> Result<WallReport, WallError> {
    // A - S = k0 + k1 c
    let k0 = &case.a0 - &case.alpha * &case.s0;
    let k1 = &case.beta * &case.s0 - &case.ord_d;
    if k0.is_zero() && k1.is_zero() {
        return Err(WallError::Degenerate);
    }
    let root = (!k1.is_zero()).then(|| -&k0 / &k1);
    let wall = root.filter(|r| case.valid_range.contains_interior(r));
    let (below, above) = match &wall {
        Some(_) => (k1.is_positive(), k1.is_negative()),
        None => {
            let u = case.gap(&case.valid_range.midpoint()).is_negative();
            (u, u)
        }
    };
    Ok(WallReport { case: case.clone(), wall, unstable_below: below, unstable_above: above })
}

/// The first wall `c1` and the curve `Q'_d` on `P(1,1,4)` replacing `Q_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstWall {
    pub c1: Rat,
    pub tag: String,
}

pub fn first_wall(d: u64) -> Result<FirstWall, WallError> {
    if d < 4 {
        return Err(WallError::DegreeOutOfScope(d));
    }
    let case = fixtures::first_wall(d)?.wall_case()?;
    let report = solve_wall(&case)?;
    let c1 = report.wall.ok_or_else(|| WallError::Inconsistent(format!("no first wall found for d = {d}")))?;
    let tag = if d.is_multiple_of(2) {
        format!("Q'_{d}: z^{} = 0 on P(1,1,4)", d / 2)
    } else {
        format!("Q'_{d}: x y z^{} = 0 on P(1,1,4)", (d - 1) / 2)
    };
    Ok(FirstWall { c1, tag })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuinticWall {
    pub index: usize,
    pub c: Rat,
    pub e_minus: &'static str,
    pub e_plus: &'static str,
    pub source: String,
}

/// The five walls for plane quintics, each solved from its fixture.
pub fn quintic_wall_table() -> Result<Vec<QuinticWall>, WallError> {
    let first = first_wall(5)?;
    let mut rows = vec![QuinticWall {
        index: 1,
        c: first.c1,
        e_minus: "(P^2, Q_5)",
        e_plus: "(P(1,1,4), xyz^2 + (ax^6 + by^6)z + g(x,y) = 0)",
        source: "firstwall-odd".into(),
    }];
    let rest = [
        ("a12", "(P^2, A12-quintic)", "(X_26, w = g(x,y))"),
        ("a11red", "(P^2, A11-reducible quintic)", "(P(1,1,4), x^2z^2 + y^6z + g(x,y) = 0)"),
        ("a11irr", "(P^2, A11-irreducible quintic)", "(P(1,4,25), z^2 + x^2y^12 + x^10g(x,y) = 0)"),
        ("a10", "(P^2, A10-quintic)", "(P(1,4,25), z^2 + x^6y^11 + x^14g(x,y) = 0)"),
    ];
    for (k, (name, minus, plus)) in rest.into_iter().enumerate() {
        let fx = fixtures::valuative(name).expect("built-in fixture");
        let report = solve_wall(&fx.wall_case()?)?;
        let c = report.wall.ok_or_else(|| WallError::Inconsistent(format!("fixture {name} has no wall")))?;
        rows.push(QuinticWall { index: k + 2, c, e_minus: minus, e_plus: plus, source: name.into() });
    }
    Ok(rows)
}

/// Surfaces admitted as degenerations of the plane at quintic-scale indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceTag {
    P2,
    P114,
    X26,
    P1425,
}

impl std::str::FromStr for SurfaceTag {
    type Err = WallError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "p2" => Ok(SurfaceTag::P2),
            "p114" => Ok(SurfaceTag::P114),
            "x26" => Ok(SurfaceTag::X26),
            "p1425" => Ok(SurfaceTag::P1425),
            _ => Err(WallError::UnknownSurface(s.into())),
        }
    }
}

/// Coefficients outside this window exclude the surface, from
/// `c >= (3/d)(1 - delta)`.
pub fn admissibility_window(tag: SurfaceTag, d: u64) -> Result<Interval, WallError> {
    if d < 4 {
        return Err(WallError::DegreeOutOfScope(d));
    }
    let top = rat(3, d as i64);
    let delta = match tag {
        SurfaceTag::P2 | SurfaceTag::P114 => return Ok(Interval::open(Rat::zero(), top)?),
        SurfaceTag::X26 => fixtures::x26_delta()?,
        SurfaceTag::P1425 => fixtures::p1425_delta()?.delta,
    };
    let lo = &top * (int(1) - delta);
    Ok(Interval::closed_open(lo, top)?)
}

/// A point of the space of `A_9` jets, or of the `D_6` chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuinticStratumPoint {
    /// `[s, r, h, u]` on `P(1,2,3,3)`.
    Jet { s: Rat, r: Rat, h: Rat, u: Rat },
    /// `[s1, s2]` on `P(1,2)`.
    D6 { s1: Rat, s2: Rat },
}

impl QuinticStratumPoint {
    pub fn jet(s: Rat, r: Rat, h: Rat, u: Rat) -> Result<Self, WallError> {
        if [&s, &r, &h, &u].iter().all(|x| x.is_zero()) {
            return Err(WallError::ZeroPoint);
        }
        Ok(QuinticStratumPoint::Jet { s, r, h, u })
    }

    /// From the normal form parameters, with `h = p^2 - u`.
    pub fn from_normal_form(s: Rat, r: Rat, p: Rat, u: Rat) -> Result<Self, WallError> {
        let h = &p * &p - &u;
        Self::jet(s, r, h, u)
    }

    pub fn d6(s1: Rat, s2: Rat) -> Result<Self, WallError> {
        if s1.is_zero() && s2.is_zero() {
            return Err(WallError::ZeroPoint);
        }
        Ok(QuinticStratumPoint::D6 { s1, s2 })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stratum {
    Sigma1,
    Sigma2,
    Sigma3,
    Sigma4,
    Sigma5,
    Sigma6,
    Sigma7,
}

impl Stratum {
    pub const ALL: [Stratum; 7] = [
        Stratum::Sigma1,
        Stratum::Sigma2,
        Stratum::Sigma3,
        Stratum::Sigma4,
        Stratum::Sigma5,
        Stratum::Sigma6,
        Stratum::Sigma7,
    ];

    /// Whether `p` lies in the closure of this stratum.
    pub fn closure_contains(&self, p: &QuinticStratumPoint) -> bool {
        match p {
            QuinticStratumPoint::Jet { s, r, h, u } => match self {
                Stratum::Sigma1 => r.is_zero() && h.is_zero() && u.is_zero(),
                Stratum::Sigma2 => s.is_zero() && r.is_zero() && h.is_zero(),
                Stratum::Sigma3 => h.is_zero() && u.is_zero(),
                Stratum::Sigma4 => r.is_zero() && h.is_zero(),
                Stratum::Sigma5 => h.is_zero(),
                Stratum::Sigma6 => false,
                Stratum::Sigma7 => true,
            },
            QuinticStratumPoint::D6 { s2, .. } => match self {
                Stratum::Sigma1 => s2.is_zero(),
                Stratum::Sigma6 => true,
                _ => false,
            },
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = *self as usize + 1;
        write!(f, "Sigma{k}")
    }
}

/// What happens to curves in a stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StratumFate {
    /// Destabilised at this wall.
    Wall(Rat),
    /// No log Fano wall; the threshold is the lct.
    LctBoundary(Rat),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumReport {
    pub stratum: Stratum,
    pub fate: StratumFate,
}

/// Locally closed strata, tested in order `Sigma1, ..., Sigma5, Sigma7`.
pub fn classify_quintic_stratum(p: &QuinticStratumPoint) -> Result<StratumReport, WallError> {
    let stratum = match p {
        QuinticStratumPoint::Jet { s, r, h, u } => {
            if [s, r, h, u].iter().all(|x| x.is_zero()) {
                return Err(WallError::ZeroPoint);
            }
            [Stratum::Sigma1, Stratum::Sigma2, Stratum::Sigma3, Stratum::Sigma4, Stratum::Sigma5]
                .into_iter()
                .find(|st| st.closure_contains(p))
                .unwrap_or(Stratum::Sigma7)
        }
        QuinticStratumPoint::D6 { s1, s2 } => {
            if s1.is_zero() && s2.is_zero() {
                return Err(WallError::ZeroPoint);
            }
            if s2.is_zero() {
                Stratum::Sigma1
            } else {
                Stratum::Sigma6
            }
        }
    };
    let from_fixture = |name: &str| -> Result<StratumFate, WallError> {
        let fx = fixtures::valuative(name).expect("built-in fixture");
        let w = solve_wall(&fx.wall_case()?)?.wall;
        w.map(StratumFate::Wall).ok_or_else(|| WallError::Inconsistent(format!("fixture {name} has no wall")))
    };
    let fate = match stratum {
        Stratum::Sigma1 => StratumFate::Wall(first_wall(5)?.c1),
        Stratum::Sigma2 => from_fixture("a12")?,
        Stratum::Sigma3 => from_fixture("a11red")?,
        Stratum::Sigma4 => from_fixture("a11irr")?,
        Stratum::Sigma5 => from_fixture("a10")?,
        // x^2 y + y^5
        Stratum::Sigma6 => StratumFate::LctBoundary(lct_newton(&GermSupport::new([(2, 1), (0, 5)])?)?),
        // x^2 + y^10
        Stratum::Sigma7 => StratumFate::LctBoundary(lct_newton(&GermSupport::new([(2, 0), (0, 10)])?)?),
    };
    Ok(StratumReport { stratum, fate })
}

/// Coefficients where K-semistability at `kss_at` together with
/// `lct >= c` propagates: `[c0, min(lct, 3/d))`.
pub fn interpolation_window(kss_at: &Rat, lct: &Rat, d: u64) -> Result<Interval, WallError> {
    let top = rat(3, d as i64);
    if !kss_at.is_positive() || kss_at >= &top {
        return Err(WallError::CoeffOutOfRange { c: Box::new(kss_at.clone()), max: Box::new(top) });
    }
    if lct < kss_at {
        return Err(WallError::Inconsistent(format!(
            "lct {} is below the semistable coefficient {}",
            fmt_rat(lct),
            fmt_rat(kss_at)
        )));
    }
    let hi = lct.clone().min(top);
    if &hi == kss_at {
        Ok(Interval::closed(kss_at.clone(), hi)?)
    } else {
        Ok(Interval::closed_open(kss_at.clone(), hi)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quintic(name: &str, a0: Rat, ord: Rat, s0: Rat) -> WallCase {
        let range = Interval::open(Rat::zero(), rat(3, 5)).unwrap();
        WallCase::new(name, a0, ord, s0, int(3), int(5), range, "literal").unwrap()
    }

    #[test]
    fn literal_quintic_cases() {
        let r = solve_wall(&quintic("a12", int(15), int(26), rat(17, 5))).unwrap();
        assert_eq!(r.wall, Some(rat(8, 15)));
        assert!(r.unstable_above && !r.unstable_below);
        let r = solve_wall(&quintic("a11red", int(7), int(12), rat(5, 3))).unwrap();
        assert_eq!(r.wall, Some(rat(6, 11)));
        let r = solve_wall(&quintic("a10", int(13), int(22), rat(47, 15))).unwrap();
        assert_eq!(r.wall, Some(rat(54, 95)));
    }

    #[test]
    fn p114_weights_five_one_is_unstable_throughout() {
        let range = Interval::open(Rat::zero(), rat(3, 5)).unwrap();
        let case = WallCase::new("p114", int(6), int(10), int(2), int(6), int(10), range, "literal").unwrap();
        let r = solve_wall(&case).unwrap();
        assert_eq!(r.wall, None);
        assert!(r.unstable_below && r.unstable_above);
        assert_eq!(r.verdict_at(&rat(1, 2)), Verdict::KUnstable);
    }

    #[test]
    fn identical_functions_are_degenerate() {
        let case = quintic("flat", int(3), int(5), int(1));
        assert_eq!(solve_wall(&case), Err(WallError::Degenerate));
    }

    #[test]
    fn anticanonical_sign_is_checked() {
        let range = Interval::open(Rat::zero(), int(1)).unwrap();
        let r = WallCase::new("bad", int(1), int(1), int(1), int(3), int(5), range, "");
        assert!(matches!(r, Err(WallError::AntiCanonicalSign(_))));
    }

    #[test]
    fn first_wall_small_degrees() {
        assert_eq!(first_wall(4).unwrap().c1, rat(3, 8));
        assert_eq!(first_wall(5).unwrap().c1, rat(3, 7));
        assert_eq!(first_wall(6).unwrap().c1, rat(1, 4));
        assert!(first_wall(5).unwrap().tag.contains("x y z^2"));
        assert_eq!(first_wall(3), Err(WallError::DegreeOutOfScope(3)));
    }

    #[test]
    fn quintic_table() {
        let cs: Vec<Rat> = quintic_wall_table().unwrap().into_iter().map(|r| r.c).collect();
        assert_eq!(cs, vec![rat(3, 7), rat(8, 15), rat(6, 11), rat(63, 115), rat(54, 95)]);
    }

    #[test]
    fn admissibility_windows() {
        let w = admissibility_window(SurfaceTag::X26, 5).unwrap();
        assert_eq!(w, Interval::closed_open(rat(8, 15), rat(3, 5)).unwrap());
        let w = admissibility_window(SurfaceTag::P1425, 7).unwrap();
        assert_eq!(w, Interval::closed_open(rat(27, 70), rat(3, 7)).unwrap());
        let w = admissibility_window(SurfaceTag::P2, 5).unwrap();
        assert_eq!(w, Interval::open(Rat::zero(), rat(3, 5)).unwrap());
        assert!("P7".parse::<SurfaceTag>().is_err());
    }

    #[test]
    fn strata() {
        let jet = |s, r, h, u| QuinticStratumPoint::jet(int(s), int(r), int(h), int(u)).unwrap();
        let r = classify_quintic_stratum(&jet(0, 0, 0, 1)).unwrap();
        assert_eq!((r.stratum, r.fate), (Stratum::Sigma2, StratumFate::Wall(rat(8, 15))));
        let r = classify_quintic_stratum(&jet(2, 1, 0, 0)).unwrap();
        assert_eq!((r.stratum, r.fate), (Stratum::Sigma3, StratumFate::Wall(rat(6, 11))));
        let r = classify_quintic_stratum(&jet(1, 1, 1, 1)).unwrap();
        assert_eq!((r.stratum, r.fate), (Stratum::Sigma7, StratumFate::LctBoundary(rat(3, 5))));
        assert_eq!(classify_quintic_stratum(&jet(1, 0, 0, 0)).unwrap().stratum, Stratum::Sigma1);
        assert_eq!(classify_quintic_stratum(&jet(1, 0, 0, 1)).unwrap().stratum, Stratum::Sigma4);
        assert_eq!(classify_quintic_stratum(&jet(1, 1, 0, 1)).unwrap().stratum, Stratum::Sigma5);
        let d6 = QuinticStratumPoint::d6(int(1), int(1)).unwrap();
        assert_eq!(classify_quintic_stratum(&d6).unwrap().fate, StratumFate::LctBoundary(rat(3, 5)));
        assert_eq!(QuinticStratumPoint::jet(int(0), int(0), int(0), int(0)), Err(WallError::ZeroPoint));
    }

    #[test]
    fn normal_form_sets_h() {
        let p = QuinticStratumPoint::from_normal_form(int(0), int(1), int(2), int(4)).unwrap();
        assert_eq!(p, QuinticStratumPoint::jet(int(0), int(1), int(0), int(4)).unwrap());
        assert_eq!(classify_quintic_stratum(&p).unwrap().stratum, Stratum::Sigma5);
    }

    #[test]
    fn interpolation() {
        let w = interpolation_window(&rat(3, 7), &rat(3, 5), 5).unwrap();
        assert_eq!(w, Interval::closed_open(rat(3, 7), rat(3, 5)).unwrap());
        let w = interpolation_window(&rat(8, 15), &rat(15, 26), 5).unwrap();
        assert_eq!(w, Interval::closed_open(rat(8, 15), rat(15, 26)).unwrap());
        let w = interpolation_window(&rat(1, 2), &rat(1, 2), 5).unwrap();
        assert_eq!(w, Interval::closed(rat(1, 2), rat(1, 2)).unwrap());
        assert!(matches!(interpolation_window(&rat(1, 2), &rat(1, 3), 5), Err(WallError::Inconsistent(_))));
    }
}
