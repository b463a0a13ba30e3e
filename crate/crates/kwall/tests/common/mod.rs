#![allow(dead_code)]

use kwall::exact::{rat, Rat};
use proptest::prelude::*;

/// Rationals `n/d` with `|n| <= bound` and `1 <= d <= 12`.
pub fn any_rat(bound: i64) -> impl Strategy<Value = Rat> {
    (-bound..=bound, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

/// Strictly positive rationals `n/d` with `1 <= n <= bound`.
pub fn pos_rat(bound: i64) -> impl Strategy<Value = Rat> {
    (1..=bound, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}
