//! Named built-in cases. Each stores inputs only; headline numbers are
//! recomputed by the engines on every call.

use crate::exact::{int, rat, Interval, Rat, Vec2, Vec3};
use crate::toric_kps::CentroidCase;
use crate::valuations::{
    delta_upper, delta_upper_min, log_discrepancy, ord_on_germ, CyclicQuot, GermSupport, MonomialVal,
};
use crate::volumes::{
    s_invariant, volume_toric, volume_two_ray, Class, ToricSurface, ToricValuation, TwoRayModel, VolumeError,
    VolumeProfile,
};
use crate::walls::{WallCase, WallError};

/// Where a volume profile comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum ProfileSource {
    TwoRay { model: TwoRayModel, polarization: Class },
    Toric { surface: ToricSurface, valuation: ToricValuation },
}

impl ProfileSource {
    pub fn profile(&self) -> Result<VolumeProfile, VolumeError> {
        match self {
            ProfileSource::TwoRay { model, polarization } => volume_two_ray(model, polarization),
            ProfileSource::Toric { surface, valuation } => volume_toric(&surface.moment_polygon(valuation)),
        }
    }

    pub fn engine(&self) -> &'static str {
        match self {
            ProfileSource::TwoRay { .. } => "two-ray",
            ProfileSource::Toric { .. } => "toric",
        }
    }
}

/// A divisor over a pair `(X, cD)`, with `-K_X - cD ~ (alpha - beta c) L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuativeFixture {
    pub name: String,
    pub surface: &'static str,
    pub curve: String,
    pub valuation: MonomialVal,
    pub germ: GermSupport,
    pub source: ProfileSource,
    pub alpha: Rat,
    pub beta: Rat,
    pub valid_range: Interval,
}

impl ValuativeFixture {
    pub fn wall_case(&self) -> Result<WallCase, WallError> {
        let a0 = log_discrepancy(&self.valuation);
        let ord = ord_on_germ(&self.valuation, &self.germ);
        let s = s_invariant(&self.source.profile()?, self.alpha.clone(), self.beta.clone())?;
        let provenance = format!(
            "A0: monomial log discrepancy; ordD: germ {}; S0: {} volume engine",
            self.germ,
            self.source.engine()
        );
        WallCase::new(&self.name, a0, ord, s.s0, s.alpha, s.beta, self.valid_range.clone(), provenance)
    }
}

pub const VALUATIVE: [&str; 12] = [
    "a12",
    "a11red",
    "a11irr",
    "a10",
    "x26-delta",
    "p114-deg",
    "p114-nondeg",
    "p1425-a11irr",
    "p1425-a10",
    "p1425-unstable",
    "firstwall-even",
    "firstwall-odd",
];

pub const CENTROID: [&str; 8] = [
    "centroid-a12-case1",
    "centroid-a12-case2",
    "centroid-a11red-case1",
    "centroid-a11red-case2",
    "centroid-a11irr-case1",
    "centroid-a11irr-case2",
    "centroid-a10-case1",
    "centroid-a10-case2",
];

fn germ(mons: &[(u32, u32)]) -> GermSupport {
    GermSupport::new(mons.iter().copied()).expect("nonempty support")
}

fn quintic_range() -> Interval {
    Interval::open(int(0), rat(3, 5)).expect("nonempty")
}

fn mval(point: CyclicQuot, w1: i64, w2: i64, scale: Rat) -> MonomialVal {
    MonomialVal::new(point, int(w1), int(w2), scale).expect("positive weights")
}

/// Weighted blow-up of a point of the plane, `L = O(1)`.
fn plane(name: &str, curve: &str, w: (i64, i64), g: &[(u32, u32)], curve_class: (Rat, Rat)) -> ValuativeFixture {
    let e = rat(1, w.0 * w.1);
    ValuativeFixture {
        name: name.into(),
        surface: "P2",
        curve: curve.into(),
        valuation: mval(CyclicQuot::smooth(), w.0, w.1, int(1)),
        germ: germ(g),
        source: ProfileSource::TwoRay {
            model: TwoRayModel { h2: int(1), e, cross: int(0), neg_curve: Some(curve_class) },
            polarization: Class::new(int(1), int(0)),
        },
        alpha: int(3),
        beta: int(5),
        valid_range: quintic_range(),
    }
}

pub fn p114_surface() -> ToricSurface {
    ToricSurface::new([Vec2::ints(-1, -4), Vec2::ints(1, 0), Vec2::ints(0, 1)], [int(1), int(0), int(0)])
        .expect("valid fan")
}

pub fn p1425_surface() -> ToricSurface {
    ToricSurface::new([Vec2::ints(-4, -25), Vec2::ints(1, 0), Vec2::ints(0, 1)], [int(1), int(0), int(0)])
        .expect("valid fan")
}

fn quarter_point() -> CyclicQuot {
    CyclicQuot::new(4, 1, 1).expect("valid point")
}

/// `(a, b)` monomial valuation at `[0, 0, 1]` of `P(1,1,4)`, pushed forward.
fn p114(name: &str, curve: &str, w: (i64, i64), g: GermSupport) -> ValuativeFixture {
    let s = p114_surface();
    let dir = &s.rays[0].scale(&int(w.0)) + &s.rays[1].scale(&int(w.1));
    ValuativeFixture {
        name: name.into(),
        surface: "P(1,1,4)",
        curve: curve.into(),
        valuation: mval(quarter_point(), w.0, w.1, int(4)),
        germ: g,
        source: ProfileSource::Toric { surface: s, valuation: ToricValuation { cone: (0, 1), w: dir } },
        alpha: int(6),
        beta: int(10),
        valid_range: quintic_range(),
    }
}

/// `(a, b)` monomial valuation in the coordinates `(x, z)` at `[0, 1, 0]`
/// of `P(1,4,25)`, pushed forward.
fn p1425(name: &str, curve: &str, w: (i64, i64), g: &[(u32, u32)]) -> ValuativeFixture {
    let s = p1425_surface();
    let dir = &s.rays[0].scale(&int(w.0)) + &s.rays[2].scale(&int(w.1));
    ValuativeFixture {
        name: name.into(),
        surface: "P(1,4,25)",
        curve: curve.into(),
        valuation: mval(quarter_point(), w.0, w.1, int(4)),
        germ: germ(g),
        source: ProfileSource::Toric { surface: s, valuation: ToricValuation { cone: (0, 2), w: dir } },
        alpha: int(30),
        beta: int(50),
        valid_range: quintic_range(),
    }
}

/// General curves of degree `10` on `P(1,1,4)`, read at `[0, 0, 1]`.
fn p114_degree_ten_terms() -> Vec<(u32, u32)> {
    (0..=10).map(|i| (i, 10 - i)).collect()
}

/// The pair `(P(1,1,4), c Q'_d)` against the `(1, 1)` blow-up of its
/// singular point, which decides the first wall.
pub fn first_wall(d: u64) -> Result<ValuativeFixture, WallError> {
    if d < 4 {
        return Err(WallError::DegreeOutOfScope(d));
    }
    let s = p114_surface();
    let (curve, g) = if d.is_multiple_of(2) {
        (format!("z^{} = 0", d / 2), germ(&[(0, 0)]))
    } else {
        (format!("x y z^{} = 0", (d - 1) / 2), germ(&[(2, 0), (1, 1), (0, 2)]))
    };
    let di = d as i64;
    Ok(ValuativeFixture {
        name: if d.is_multiple_of(2) { "firstwall-even" } else { "firstwall-odd" }.into(),
        surface: "P(1,1,4)",
        curve,
        valuation: mval(quarter_point(), 1, 1, int(1)),
        germ: g,
        source: ProfileSource::Toric { surface: s, valuation: ToricValuation { cone: (0, 1), w: Vec2::ints(0, -1) } },
        alpha: int(6),
        beta: int(2 * di),
        valid_range: Interval::open(int(0), rat(3, di))?,
    })
}

pub fn valuative(name: &str) -> Option<ValuativeFixture> {
    let fx = match name {
        "a12" => plane("a12", "A12 quintic, x^2 + y^13 at the point", (13, 2), &[(2, 0), (0, 13)], (int(5), int(26))),
        "a11red" => plane("a11red", "reducible A11 quintic", (6, 1), &[(2, 0), (0, 12)], (int(2), int(6))),
        "a11irr" => plane("a11irr", "irreducible A11 quintic", (6, 1), &[(2, 0), (0, 12)], (int(2), int(5))),
        "a10" => plane("a10", "A10 quintic", (11, 2), &[(2, 0), (0, 11)], (int(2), int(10))),
        "x26-delta" => ValuativeFixture {
            name: "x26-delta".into(),
            surface: "X26",
            curve: "w = g(x, y), missing the singular point".into(),
            valuation: mval(CyclicQuot::new(25, 2, 13).expect("valid point"), 2, 13, int(1)),
            germ: germ(&[(0, 0)]),
            source: ProfileSource::TwoRay {
                model: TwoRayModel {
                    h2: rat(1, 25),
                    e: rat(25, 26),
                    cross: int(0),
                    neg_curve: Some((int(1), rat(26, 25))),
                },
                polarization: Class::new(int(1), int(0)),
            },
            alpha: int(15),
            beta: int(25),
            valid_range: quintic_range(),
        },
        "p114-deg" => p114(
            "p114-deg",
            "x^2 z^2 + y^6 z + g(x, y) = 0",
            (3, 1),
            germ(&[(2, 0), (0, 6)]).with(p114_degree_ten_terms()),
        ),
        "p114-nondeg" => p114(
            "p114-nondeg",
            "x^2 z^2 + x y^5 z + g(x, y) = 0",
            (5, 1),
            germ(&[(2, 0), (1, 5)]).with(p114_degree_ten_terms()),
        ),
        "p1425-a11irr" => p1425("p1425-a11irr", "z^2 + x^2 y^12 + x^6 g(x, y) = 0", (1, 1), &[(0, 2), (2, 0), (6, 0)]),
        "p1425-a10" => p1425("p1425-a10", "z^2 + x^6 y^11 + x^10 g(x, y) = 0", (1, 3), &[(0, 2), (6, 0), (10, 0)]),
        "p1425-unstable" => p1425("p1425-unstable", "z^2 + x^10 g(x, y) = 0", (1, 5), &[(0, 2), (10, 0)]),
        "firstwall-even" => first_wall(4).ok()?,
        "firstwall-odd" => first_wall(5).ok()?,
        _ => return None,
    };
    Some(fx)
}

/// `A / S` of the `X26` fixture divisor, an upper bound for `delta(X26)`.
pub fn x26_delta() -> Result<Rat, WallError> {
    let case = valuative("x26-delta").expect("built-in").wall_case()?;
    Ok(delta_upper(&case.a0, &case.s0, &case.alpha))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaReport {
    /// `(label, A, S0)` per candidate divisor.
    pub candidates: Vec<(String, Rat, Rat)>,
    pub argmin: usize,
    pub delta: Rat,
}

/// Minimum of `A / S` over the three toric boundary divisors of
/// `P(1,4,25)`, each with `A = 1`.
pub fn p1425_delta() -> Result<DeltaReport, WallError> {
    let s = p1425_surface();
    let alpha = int(30);
    let mut candidates = Vec::new();
    for (k, ray) in s.rays.iter().enumerate() {
        let profile = volume_toric(&s.moment_polygon(&ToricValuation { cone: (k, (k + 1) % 3), w: ray.clone() }))?;
        let s0 = s_invariant(&profile, alpha.clone(), int(0))?.s0;
        candidates.push((format!("D{k} = ray {ray}"), int(1), s0));
    }
    let pairs: Vec<(Rat, Rat)> = candidates.iter().map(|(_, a, s0)| (a.clone(), s0.clone())).collect();
    let (argmin, delta) = delta_upper_min(&pairs, &alpha).expect("three candidates");
    Ok(DeltaReport { candidates, argmin, delta })
}

fn v(x: (i64, i64), y: (i64, i64), z: (i64, i64)) -> Vec3 {
    Vec3::new(rat(x.0, x.1), rat(y.0, y.1), rat(z.0, z.1))
}

fn vi(x: i64, y: i64, z: i64) -> Vec3 {
    Vec3::ints(x, y, z)
}

pub fn centroid(name: &str) -> Option<CentroidCase> {
    let (gens, u1) = match name {
        "centroid-a12-case1" => (
            [v((6, 25), (-156, 25), (-13, 1)), v((-1, 25), (26, 25), (2, 1)), v((1, 25), (24, 25), (2, 1))],
            vi(0, 25, -12),
        ),
        "centroid-a12-case2" => (
            [v((-1, 25), (26, 25), (-2, 1)), v((6, 25), (-156, 25), (13, 1)), v((19, 25), (-169, 25), (13, 1))],
            vi(0, 25, 13),
        ),
        "centroid-a11red-case1" => ([vi(0, 0, -1), vi(-1, 1, -2), vi(1, 0, 6)], vi(12, 10, -1)),
        "centroid-a11red-case2" => ([vi(0, 0, 1), vi(-1, 1, 2), vi(1, 0, -6)], vi(12, 10, 2)),
        "centroid-a11irr-case1" => ([vi(-4, 1, -1), vi(1, 0, -6), vi(0, 0, 1)], vi(12, 50, 2)),
        "centroid-a11irr-case2" => ([vi(-4, 1, 1), vi(1, 0, 6), vi(0, 0, -1)], vi(12, 50, 0)),
        "centroid-a10-case1" => ([vi(-1, 0, -2), vi(1, 1, 6), vi(6, 0, 11)], vi(22, 50, -11)),
        "centroid-a10-case2" => ([vi(-1, 0, 2), vi(1, 1, -6), vi(6, 0, -11)], vi(22, 50, 12)),
        _ => return None,
    };
    CentroidCase::new(gens, vi(0, 1, 0), vi(0, 0, 1), u1).ok()
}

/// The valuative fixture whose wall a centroid fixture should reproduce.
pub fn centroid_twin(name: &str) -> Option<&'static str> {
    let twin = match name.strip_prefix("centroid-")?.split('-').next()? {
        "a12" => "a12",
        "a11red" => "a11red",
        "a11irr" => "a11irr",
        "a10" => "a10",
        _ => return None,
    };
    Some(twin)
}
