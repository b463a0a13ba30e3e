mod common;

use common::pos_rat;
use kwall::exact::{int, Rat};
use kwall::valuations::{
    index_bound, lct_newton, lct_quasihomog, log_discrepancy, min_coeff_for_index, ord_on_germ, CyclicQuot,
    GermSupport, MonomialVal, QuasiHomogGerm,
};
use num_integer::Integer;
use proptest::prelude::*;

fn germ() -> impl Strategy<Value = GermSupport> {
    prop::collection::btree_set((0u32..=8, 0u32..=8), 1..6).prop_filter_map("unit", |s| {
        if s.contains(&(0, 0)) {
            None
        } else {
            GermSupport::new(s).ok()
        }
    })
}

/// `min A(v)/v(f)` over the weight vectors `(w1, w2)` in a box, including
/// the coordinate directions.
fn weight_search(g: &GermSupport) -> Rat {
    let mut best = int(1);
    for w1 in 0..=12i64 {
        for w2 in 0..=12i64 {
            let v = g.monomials().iter().map(|&(i, j)| w1 * i as i64 + w2 * j as i64).min().unwrap();
            if v > 0 {
                best = best.min(Rat::new((w1 + w2).into(), v.into()));
            }
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn log_discrepancy_and_order_scale_together(
        n in 1u64..30, a in 1i64..30, w in (pos_rat(20), pos_rat(20)), lambda in pos_rat(40), g in germ()
    ) {
        let Ok(point) = CyclicQuot::new(n, a, 1) else { return Ok(()) };
        let v = MonomialVal::new(point, w.0, w.1, int(1)).unwrap();
        let s = v.rescaled(&lambda);
        prop_assert_eq!(log_discrepancy(&s), log_discrepancy(&v) * &lambda);
        prop_assert_eq!(ord_on_germ(&s, &g), ord_on_germ(&v, &g) * &lambda);
    }

    #[test]
    fn newton_threshold_matches_weight_search(g in germ()) {
        prop_assert_eq!(lct_newton(&g).unwrap(), weight_search(&g));
    }

    #[test]
    fn diagonal_germs_match_quasi_homogeneous(a in 1u64..=40, b in 1u64..=40) {
        let g = a.gcd(&b);
        let qh = QuasiHomogGerm::new(b / g, a / g, a * b / g).unwrap();
        let support = GermSupport::new([(a as u32, 0), (0, b as u32)]).unwrap();
        let want = (Rat::new(1.into(), (a as i64).into()) + Rat::new(1.into(), (b as i64).into())).min(int(1));
        prop_assert_eq!(lct_newton(&support).unwrap(), want.clone());
        prop_assert_eq!(lct_quasihomog(&qh), want);
    }

    #[test]
    fn index_bound_threshold(d in 4u64..=12, m in 1u64..=12) {
        let Some(c) = min_coeff_for_index(d, m) else { return Ok(()) };
        let top = Rat::new(3.into(), (d as i64).into());
        if c > int(0) && c < top {
            prop_assert!(index_bound(d, &c).unwrap() >= m);
            let below = &c - Rat::new(1.into(), 100_000.into());
            if below > int(0) {
                prop_assert!(index_bound(d, &below).unwrap() < m);
            }
        }
    }
}
