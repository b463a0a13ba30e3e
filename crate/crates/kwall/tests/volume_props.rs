mod common;

use common::pos_rat;
use kwall::exact::{int, integrate, rat, Rat, Vec2};
use kwall::volumes::{s_invariant, volume_toric, volume_two_ray, MomentPolygon, ToricSurface, ToricValuation};
use num_integer::Integer;
use proptest::prelude::*;

fn primitive(x: i64, y: i64) -> Vec2 {
    let g = x.gcd(&y);
    Vec2::ints(x / g, y / g)
}

/// A complete fan with three rays `n1, n2, n0 = -(a n1 + b n2)` and an
/// ample polarization with the origin inside the polygon.
fn fan() -> impl Strategy<Value = ToricSurface> {
    (-4i64..=4, -4i64..=4, -4i64..=4, -4i64..=4, 1i64..=4, 1i64..=4, 1i64..=4, 1i64..=4, 1i64..=4)
        .prop_filter("rays must span the plane", |(p, q, r, s, ..)| p * s - q * r != 0)
        .prop_map(|(p, q, r, s, a, b, o0, o1, o2)| {
            let n1 = primitive(p, q);
            let n2 = primitive(r, s);
            let n0x = -(a * p + b * r);
            let n0y = -(a * q + b * s);
            let n0 = primitive(n0x, n0y);
            ToricSurface::new([n0, n1, n2], [int(o0), int(o1), int(o2)]).expect("origin is interior")
        })
}

fn valuation() -> impl Strategy<Value = (usize, i64, i64)> {
    (0usize..3, 1i64..=6, 1i64..=6)
}

fn in_cone(s: &ToricSurface, (k, a, b): (usize, i64, i64)) -> ToricValuation {
    let (i, j) = (k, (k + 1) % 3);
    let w = &s.rays[i].scale(&int(a)) + &s.rays[j].scale(&int(b));
    ToricValuation { cone: (i, j), w }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn toric_and_two_ray_engines_agree(s in fan(), v in valuation()) {
        let v = in_cone(&s, v);
        let toric = volume_toric(&s.moment_polygon(&v)).unwrap();
        let (model, l) = s.two_ray_model(&v).unwrap();
        let two_ray = volume_two_ray(&model, &l).unwrap();
        prop_assert_eq!(toric, two_ray);
    }

    #[test]
    fn scaling_the_valuation_stretches_the_profile(s in fan(), v in valuation(), lambda in pos_rat(7)) {
        let v = in_cone(&s, v);
        let base = volume_toric(&s.moment_polygon(&v)).unwrap();
        let scaled = volume_toric(&MomentPolygon { polygon: s.polygon(), direction: v.w.scale(&lambda) }).unwrap();
        prop_assert_eq!(&scaled.profile, &base.profile.stretch(&lambda));
        let s0 = s_invariant(&base, int(1), int(0)).unwrap().s0;
        let s1 = s_invariant(&scaled, int(1), int(0)).unwrap().s0;
        prop_assert_eq!(s1, s0 * &lambda);
        prop_assert_eq!(s.log_discrepancy(&ToricValuation { cone: v.cone, w: v.w.scale(&lambda) }), s.log_discrepancy(&v) * lambda);
    }

    #[test]
    fn profiles_are_monotone_and_start_at_the_volume(s in fan(), v in valuation()) {
        let v = in_cone(&s, v);
        let p = volume_toric(&s.moment_polygon(&v)).unwrap();
        prop_assert_eq!(p.volume(), s.volume());
        let end = p.pseff_threshold.clone();
        let mut prev = p.volume();
        for k in 1..=20 {
            let t = &end * rat(k, 20);
            let cur = p.at(&t);
            prop_assert!(cur <= prev);
            prop_assert!(cur >= Rat::from_integer(0.into()));
            prev = cur;
        }
        prop_assert!(p.nef_threshold <= p.pseff_threshold);
    }

    /// `int vol = int_P (<u, w> - m0) du` times two: the first moment of the
    /// polygon against the valuation, computed by triangulation.
    #[test]
    fn integral_equals_first_moment(s in fan(), v in valuation()) {
        let v = in_cone(&s, v);
        let prof = volume_toric(&s.moment_polygon(&v)).unwrap();
        let poly = s.polygon();
        let vs = poly.vertices();
        let m0 = vs.iter().map(|u| u.dot(&v.w)).min().unwrap();
        let mut moment = Rat::from_integer(0.into());
        for k in 1..vs.len() - 1 {
            let (a, b, c) = (&vs[0], &vs[k], &vs[k + 1]);
            let area = (b - a).cross(&(c - a)) / int(2);
            let mean = (a.dot(&v.w) + b.dot(&v.w) + c.dot(&v.w)) / int(3) - &m0;
            moment += area * mean;
        }
        prop_assert_eq!(integrate(&prof.profile, &int(0)).unwrap(), int(2) * moment);
    }
}

#[test]
fn p114_and_p1425_builders() {
    let p114 =
        ToricSurface::new([Vec2::ints(-1, -4), Vec2::ints(1, 0), Vec2::ints(0, 1)], [int(1), int(0), int(0)]).unwrap();
    assert_eq!(p114.volume(), rat(1, 4));
    let p1425 =
        ToricSurface::new([Vec2::ints(-4, -25), Vec2::ints(1, 0), Vec2::ints(0, 1)], [int(1), int(0), int(0)]).unwrap();
    assert_eq!(p1425.volume(), rat(1, 100));
}
