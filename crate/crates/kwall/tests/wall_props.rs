mod common;

use common::{any_rat, pos_rat};
use kwall::exact::{int, rat, Interval, Rat};
use kwall::fixtures;
use kwall::valuations::{log_discrepancy, ord_on_germ};
use kwall::walls::{
    classify_quintic_stratum, first_wall, quintic_wall_table, solve_wall, QuinticStratumPoint, Stratum, Verdict,
    WallCase,
};
use proptest::prelude::*;

const QUINTIC: [&str; 4] = ["a12", "a11red", "a11irr", "a10"];

fn case(name: &str) -> WallCase {
    fixtures::valuative(name).unwrap().wall_case().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn walls_are_scale_invariant(k in 0usize..QUINTIC.len(), lambda in pos_rat(50)) {
        let c = case(QUINTIC[k]);
        prop_assert_eq!(solve_wall(&c.rescaled(&lambda)).unwrap().wall, solve_wall(&c).unwrap().wall);
    }

    /// Rescaling the valuation itself, not the finished numbers.
    #[test]
    fn rescaled_valuations_give_the_same_wall(k in 0usize..QUINTIC.len(), lambda in pos_rat(30)) {
        let fx = fixtures::valuative(QUINTIC[k]).unwrap();
        let v = fx.valuation.rescaled(&lambda);
        prop_assert_eq!(log_discrepancy(&v), log_discrepancy(&fx.valuation) * &lambda);
        prop_assert_eq!(ord_on_germ(&v, &fx.germ), ord_on_germ(&fx.valuation, &fx.germ) * &lambda);
    }

    #[test]
    fn unstable_exactly_where_a_below_s(
        a0 in pos_rat(20), ord in pos_rat(30), s0 in pos_rat(5), c in (1i64..600).prop_map(|k| rat(k, 1000))
    ) {
        let range = Interval::open(Rat::from_integer(0.into()), rat(3, 5)).unwrap();
        let wc = WallCase::new("random", a0, ord, s0, int(3), int(5), range, "random").unwrap();
        let unstable = wc.a(&c) < wc.s(&c);
        prop_assert_eq!(wc.verdict(&c) == Verdict::KUnstable, unstable);
        if let Ok(r) = solve_wall(&wc) {
            match &r.wall {
                Some(w) if &c < w => prop_assert_eq!(r.unstable_below, unstable),
                Some(w) if &c > w => prop_assert_eq!(r.unstable_above, unstable),
                Some(_) => prop_assert!(!unstable),
                None => prop_assert_eq!(r.unstable_below, unstable),
            }
        }
    }

    #[test]
    fn strata_partition_the_jet_space(s in any_rat(3), r in any_rat(3), h in any_rat(3), u in any_rat(3)) {
        let Ok(p) = QuinticStratumPoint::jet(s, r, h, u) else { return Ok(()) };
        let got = classify_quintic_stratum(&p).unwrap().stratum;
        // the locally closed pieces, as complements of smaller closures
        let members: Vec<Stratum> = Stratum::ALL
            .into_iter()
            .filter(|st| st.closure_contains(&p))
            .filter(|st| Stratum::ALL.iter().all(|o| o == st || !below(*o, *st) || !o.closure_contains(&p)))
            .collect();
        prop_assert_eq!(members, vec![got]);
    }
}

/// Strict closure order among the strata on the jet chart.
fn below(a: Stratum, b: Stratum) -> bool {
    use Stratum::*;
    matches!(
        (a, b),
        (Sigma1, Sigma3 | Sigma4 | Sigma5 | Sigma7)
            | (Sigma2, Sigma4 | Sigma5 | Sigma7)
            | (Sigma3 | Sigma4, Sigma5 | Sigma7)
            | (Sigma5, Sigma7)
    )
}

#[test]
fn quintic_walls_are_bracketed() {
    let eps = rat(1, 1000);
    for name in QUINTIC {
        let c = case(name);
        let w = solve_wall(&c).unwrap().wall.unwrap();
        assert!(c.a(&(&w - &eps)) > c.s(&(&w - &eps)), "{name}");
        assert!(c.a(&(&w + &eps)) < c.s(&(&w + &eps)), "{name}");
    }
}

#[test]
fn table_agrees_with_individual_solves() {
    let table = quintic_wall_table().unwrap();
    for row in &table[1..] {
        assert_eq!(Some(row.c.clone()), solve_wall(&case(&row.source)).unwrap().wall);
    }
    assert_eq!(table[0].c, first_wall(5).unwrap().c1);
    assert!(table.windows(2).all(|w| w[0].c < w[1].c));
    assert!(table.iter().all(|r| r.c > int(0) && r.c < rat(3, 5)));
}

#[test]
fn first_wall_closed_forms() {
    for d in 4..=20u64 {
        let want = if d % 2 == 0 { rat(3, 2 * d as i64) } else { rat(3, 2 * d as i64 - 3) };
        assert_eq!(first_wall(d).unwrap().c1, want, "d = {d}");
    }
}

#[test]
fn closure_order_on_representatives() {
    let jet = |s, r, h, u| QuinticStratumPoint::jet(int(s), int(r), int(h), int(u)).unwrap();
    let reps = [
        (Stratum::Sigma1, jet(1, 0, 0, 0)),
        (Stratum::Sigma2, jet(0, 0, 0, 1)),
        (Stratum::Sigma3, jet(1, 1, 0, 0)),
        (Stratum::Sigma4, jet(1, 0, 0, 1)),
        (Stratum::Sigma5, jet(1, 1, 0, 1)),
        (Stratum::Sigma7, jet(1, 1, 1, 1)),
    ];
    for (st, p) in &reps {
        assert_eq!(classify_quintic_stratum(p).unwrap().stratum, *st);
    }
    for (a, _) in &reps {
        for (b, pb) in &reps {
            // b lies in the closure of a exactly when b is below a or equal
            assert_eq!(a.closure_contains(pb), a == b || below(*b, *a), "{a} vs {b}");
        }
    }
    let d6 = QuinticStratumPoint::d6(int(1), int(0)).unwrap();
    assert_eq!(classify_quintic_stratum(&d6).unwrap().stratum, Stratum::Sigma1);
    assert!(Stratum::Sigma6.closure_contains(&d6));
}
