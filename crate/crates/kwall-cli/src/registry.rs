//! The built-in fixtures as scenarios. Only inputs are stored here; every
//! headline number is recomputed when a scenario is evaluated. The `expect`
//! annotations record the expected values for comparison.

use kwall::exact::{int, Interval};
use kwall::fixtures::{self, ProfileSource, ValuativeFixture};
use kwall::toric_kps::CentroidCase;
use kwall::valuations::MonomialVal;

use crate::scenario::*;

pub const NAMES: [&str; 24] = [
    "a12",
    "a11red",
    "a11irr",
    "a10",
    "x26-delta",
    "p1425-delta",
    "firstwall-even",
    "firstwall-odd",
    "p114-deg",
    "p114-nondeg",
    "p1425-a11irr",
    "p1425-a10",
    "p1425-unstable",
    "quartic-binary",
    "sextic-lct",
    "quintic-strata",
    "centroid-a12-case1",
    "centroid-a12-case2",
    "centroid-a11red-case1",
    "centroid-a11red-case2",
    "centroid-a11irr-case1",
    "centroid-a11irr-case2",
    "centroid-a10-case1",
    "centroid-a10-case2",
];

pub fn valuation_payload(v: &MonomialVal) -> ValuationPayload {
    ValuationPayload {
        point: PointPayload { n: v.point.n, a: v.point.a as i64, b: v.point.b as i64 },
        w1: R(v.w1.clone()),
        w2: R(v.w2.clone()),
        scale: R(v.scale.clone()),
    }
}

pub fn profile_payload(p: &ProfileSource) -> ProfilePayload {
    match p {
        ProfileSource::TwoRay { model, polarization } => ProfilePayload::TwoRay(TwoRayPayload {
            h2: R(model.h2.clone()),
            e: R(model.e.clone()),
            cross: (model.cross != int(0)).then(|| R(model.cross.clone())),
            neg_curve: model.neg_curve.as_ref().map(|(a, b)| [R(a.clone()), R(b.clone())]),
            polarization: [R(polarization.h.clone()), R(polarization.e.clone())],
        }),
        ProfileSource::Toric { surface, valuation } => ProfilePayload::Toric(ToricPayload {
            rays: [r2(&surface.rays[0]), r2(&surface.rays[1]), r2(&surface.rays[2])],
            offsets: [R(surface.offsets[0].clone()), R(surface.offsets[1].clone()), R(surface.offsets[2].clone())],
            cone: [valuation.cone.0, valuation.cone.1],
            w: r2(&valuation.w),
        }),
    }
}

pub fn wall_payload(fx: &ValuativeFixture) -> WallPayload {
    WallPayload {
        alpha: R(fx.alpha.clone()),
        beta: R(fx.beta.clone()),
        range: RangePayload::from_interval(&fx.valid_range),
        valuation: Some(valuation_payload(&fx.valuation)),
        germ: Some(fx.germ.to_string()),
        profile: Some(profile_payload(&fx.source)),
        a0: None,
        ord_d: None,
        s0: None,
    }
}

pub fn centroid_payload(c: &CentroidCase) -> CentroidPayload {
    CentroidPayload {
        generators: [r3(&c.generators[0]), r3(&c.generators[1]), r3(&c.generators[2])],
        xi0: r3(&c.xi0),
        eta0_star: r3(&c.eta0_star),
        u1: r3(&c.u1),
        u0: c.u0_override.as_ref().map(r3),
    }
}

fn valuative(name: &str) -> Scenario {
    let fx = fixtures::valuative(name).expect("library fixture");
    let desc = format!("{} on {}", fx.curve, fx.surface);
    Scenario::new(name, Body::WallCase(wall_payload(&fx)), &desc)
}

fn p1425_delta() -> Scenario {
    let s = fixtures::p1425_surface();
    let candidates = (0..3)
        .map(|k| {
            let source = ProfileSource::Toric {
                surface: s.clone(),
                valuation: kwall::volumes::ToricValuation { cone: (k, (k + 1) % 3), w: s.rays[k].clone() },
            };
            NamedWall {
                label: format!("D{k}, ray {}", s.rays[k]),
                case: WallPayload {
                    alpha: R(int(30)),
                    beta: R(int(0)),
                    range: RangePayload::from_interval(&Interval::open(int(0), int(1)).expect("nonempty")),
                    valuation: None,
                    germ: None,
                    profile: Some(profile_payload(&source)),
                    a0: None,
                    ord_d: None,
                    s0: None,
                },
            }
        })
        .collect();
    Scenario::new(
        "p1425-delta",
        Body::Delta(DeltaPayload { candidates }),
        "toric boundary divisors of P(1,4,25), -K = O(30)",
    )
}

fn quartic_binary() -> Scenario {
    let block = BlockPayload { j: 2, terms: vec![(5, R(int(1)))] };
    Scenario::new(
        "quartic-binary",
        Body::GitBinary(GitBinaryPayload { d: 4, blocks: vec![block] }),
        "degree 8 curve z^2 + x^5 y^3 on P(1,1,4)",
    )
}

fn sextic_lct() -> Scenario {
    Scenario::new(
        "sextic-lct",
        Body::Lct(LctPayload { germ: Some("x^3 + y^6".into()), quasi_homogeneous: None }),
        "sextic germ x^3 + y^6",
    )
}

fn quintic_strata() -> Scenario {
    let pt = |label: &str, jet: Option<[i64; 4]>, d6: Option<[i64; 2]>| StratumPointPayload {
        label: label.into(),
        jet: jet.map(|j| j.map(|x| R(int(x)))),
        d6: d6.map(|d| d.map(|x| R(int(x)))),
    };
    let points = vec![
        pt("sigma1 [1,0,0,0]", Some([1, 0, 0, 0]), None),
        pt("sigma1 via D6 [1,0]", None, Some([1, 0])),
        pt("sigma2 [0,0,0,1]", Some([0, 0, 0, 1]), None),
        pt("sigma3 [1,1,0,0]", Some([1, 1, 0, 0]), None),
        pt("sigma4 [1,0,0,1]", Some([1, 0, 0, 1]), None),
        pt("sigma5 [1,1,0,1]", Some([1, 1, 0, 1]), None),
        pt("sigma6 [1,1]", None, Some([1, 1])),
        pt("sigma7 [1,1,1,1]", Some([1, 1, 1, 1]), None),
    ];
    Scenario::new("quintic-strata", Body::Stratum(StratumPayload { points }), "A9 jet strata of plane quintics")
}

fn centroid(name: &str) -> Scenario {
    let c = fixtures::centroid(name).expect("library fixture");
    Scenario::new(name, Body::Centroid(centroid_payload(&c)), "complexity one degeneration, Reeb cone tau")
}

/// The named scenario, or `None` for an unknown name.
pub fn get(name: &str) -> Option<Scenario> {
    let s = match name {
        "a12" => valuative(name).expecting("wall", "8/15").expecting("S0", "17/5"),
        "a11red" => valuative(name).expecting("wall", "6/11"),
        "a11irr" => valuative(name).expecting("wall", "63/115"),
        "a10" => valuative(name).expecting("wall", "54/95"),
        "x26-delta" => valuative(name).expecting("delta upper bound", "1/9"),
        "p1425-delta" => p1425_delta().expecting("delta upper bound", "1/10"),
        "firstwall-even" => valuative(name).expecting("wall", "3/8"),
        "firstwall-odd" => valuative(name).expecting("wall", "3/7"),
        "p114-deg" | "p114-nondeg" => valuative(name),
        "p1425-a11irr" | "p1425-a10" | "p1425-unstable" => valuative(name),
        "quartic-binary" => quartic_binary().expecting("verdict", "unstable"),
        "sextic-lct" => sextic_lct().expecting("lct", "1/2"),
        "quintic-strata" => quintic_strata(),
        n if n.starts_with("centroid-") => {
            fixtures::centroid(n)?;
            let twin = fixtures::centroid_twin(n)?;
            let c = match twin {
                "a12" => "8/15",
                "a11red" => "6/11",
                "a11irr" => "63/115",
                _ => "54/95",
            };
            centroid(n).expecting("c", c).expecting("outcome", "unique-c")
        }
        _ => return None,
    };
    Some(s)
}

pub fn unknown_fixture_message(name: &str) -> String {
    format!("unknown fixture {name:?}; available: {}", NAMES.join(", "))
}
