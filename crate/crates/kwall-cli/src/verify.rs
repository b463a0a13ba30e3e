//! The acceptance checklist. Every check recomputes its numbers through the
//! engines and compares exactly.

use std::panic::{catch_unwind, AssertUnwindSafe};

use anyhow::{anyhow, ensure, Context, Result};
use kwall::exact::{fmt_rat, int, rat, solve_linear3, Interval, Mat3, Rat, Vec2, Vec3};
use kwall::fixtures::{self, ProfileSource, CENTROID, VALUATIVE};
use kwall::git::{
    binary_system_stability, cm_degree_poly, cm_positivity_window, hm_weight_plane, replay_certificate, BinaryForm,
    BinaryFormSystem, BinaryVerdict, OnePs, Parity, PlaneCurveSupport,
};
use kwall::toric_kps::{solve_centroid_condition, CentroidOutcome};
use kwall::valuations::{
    index_bound, lct_local, lct_newton, local_volume_bound_check, log_discrepancy, min_coeff_for_index, ord_on_germ,
    p114_germ_at_quarter_chart, p1425_germ_at_quarter_chart, CyclicQuot, GermSupport,
};
use kwall::volumes::{s_invariant, volume_toric, volume_two_ray, ToricSurface, ToricValuation};
use kwall::walls::{admissibility_window, first_wall, quintic_wall_table, solve_wall, SurfaceTag, WallCase};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{Report, Table};
use crate::{eval, registry};

/// Outcome of one criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        format!("[{mark}] {:>2}. {}: {}", self.id, self.title, self.detail)
    }
}

type Check = fn() -> Result<String>;

const CRITERIA: [(&str, Check); 11] = [
    ("quintic wall table", quintic_walls),
    ("first-wall formula", first_walls),
    ("volume profiles", volume_profiles),
    ("S-invariants", s_invariants),
    ("centroid tests", centroid_tests),
    ("delta bounds", delta_bounds),
    ("index bounds", index_bounds),
    ("lct suite", lct_suite),
    ("CM degree", cm_degrees),
    ("GIT", git_checks),
    ("property suites", property_suites),
];

/// Runs every criterion. A failing or panicking criterion is recorded and
/// the rest still run.
pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .enumerate()
        .map(|(k, (title, check))| {
            let (passed, detail) = match catch_unwind(AssertUnwindSafe(check)) {
                Ok(Ok(d)) => (true, d),
                Ok(Err(e)) => (false, format!("{e:#}")),
                Err(_) => (false, "panicked".to_string()),
            };
            CriterionResult { id: k + 1, title, passed, detail }
        })
        .collect()
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<()> {
    ensure!(got == want, "{what}: got {got:?}, expected {want:?}");
    Ok(())
}

fn eq_rat(what: &str, got: &Rat, want: &Rat) -> Result<()> {
    ensure!(got == want, "{what}: got {}, expected {}", fmt_rat(got), fmt_rat(want));
    Ok(())
}

fn list(xs: &[Rat]) -> String {
    xs.iter().map(fmt_rat).collect::<Vec<_>>().join(", ")
}

fn wall_of(name: &str) -> Result<Rat> {
    let fx = fixtures::valuative(name).ok_or_else(|| anyhow!("missing fixture {name}"))?;
    solve_wall(&fx.wall_case()?)?.wall.ok_or_else(|| anyhow!("{name} has no wall"))
}

/// Field `key` of the registry scenario `name`, evaluated from scratch.
fn registry_field(name: &str, key: &str) -> Result<String> {
    let s = registry::get(name).ok_or_else(|| anyhow!("missing registry entry {name}"))?;
    let r = eval::evaluate(&s).with_context(|| name.to_string())?;
    r.get(key).map(str::to_string).ok_or_else(|| anyhow!("{name} report has no {key:?}"))
}

fn quintic_walls() -> Result<String> {
    let table = quintic_wall_table()?;
    let got: Vec<Rat> = table.iter().map(|w| w.c.clone()).collect();
    let want = vec![rat(3, 7), rat(8, 15), rat(6, 11), rat(63, 115), rat(54, 95)];
    ensure!(got == want, "table gives ({}), expected ({})", list(&got), list(&want));
    for row in &table {
        let via_registry = registry_field(&row.source, "wall")?;
        eq(&format!("registry wall of {}", row.source), via_registry, fmt_rat(&row.c))?;
    }
    Ok(format!("({})", list(&got)))
}

fn first_walls() -> Result<String> {
    for d in 4..=20u64 {
        let want = if d % 2 == 0 { rat(3, 2 * d as i64) } else { rat(3, 2 * d as i64 - 3) };
        eq_rat(&format!("first_wall({d})"), &first_wall(d)?.c1, &want)?;
    }
    Ok("3/(2d) for even d in 4..=20, 3/(2d-3) for odd d in 5..=19".into())
}

type Piece = (Rat, Box<dyn Fn(&Rat) -> Rat>);

/// Closed-form profile: `(breakpoint, formula)` pairs, each formula valid
/// up to its breakpoint, starting from `t = 0`.
fn closed_form(name: &str) -> Option<Vec<Piece>> {
    fn p(end: Rat, f: impl Fn(&Rat) -> Rat + 'static) -> Piece {
        (end, Box::new(f))
    }
    let sq = |t: &Rat| t * t;
    let pieces = match name {
        "a12" => vec![
            p(int(5), move |t| int(1) - sq(t) / int(26)),
            p(rat(26, 5), move |t| sq(&(int(26) - int(5) * t)) / int(26)),
        ],
        "x26-delta" => vec![
            p(rat(1, 25), move |t| rat(1, 25) - rat(25, 26) * sq(t)),
            p(rat(26, 25), move |t| sq(&(rat(26, 25) - t)) / int(26)),
        ],
        "a11red" => vec![p(int(2), move |t| int(1) - sq(t) / int(6)), p(int(3), move |t| sq(&(int(3) - t)) / int(3))],
        "a11irr" => {
            vec![p(rat(12, 5), move |t| int(1) - sq(t) / int(6)), p(rat(5, 2), move |t| sq(&(int(5) - int(2) * t)))]
        }
        "a10" => vec![
            p(rat(22, 5), move |t| int(1) - sq(t) / int(22)),
            p(int(5), move |t| sq(&(int(10) - int(2) * t)) / int(12)),
        ],
        "p114-deg" => {
            vec![
                p(int(1), move |t| (int(1) - sq(t) / int(3)) / int(4)),
                p(int(3), move |t| sq(&(int(3) - t)) / int(24)),
            ]
        }
        "p114-nondeg" => {
            vec![
                p(int(1), move |t| (int(1) - sq(t) / int(5)) / int(4)),
                p(int(5), move |t| sq(&(int(5) - t)) / int(80)),
            ]
        }
        "p1425-a11irr" => vec![
            p(rat(1, 25), move |t| (int(1) - int(25) * sq(t)) / int(100)),
            p(int(1), move |t| sq(&(int(1) - t)) / int(96)),
        ],
        "p1425-a10" => {
            vec![p(rat(3, 25), move |t| rat(1, 100) - sq(t) / int(12)), p(int(1), move |t| sq(&(int(1) - t)) / int(88))]
        }
        "p1425-unstable" => vec![
            p(rat(1, 5), move |t| (int(1) - int(5) * sq(t)) / int(100)),
            p(int(1), move |t| sq(&(int(1) - t)) / int(80)),
        ],
        _ => return None,
    };
    Some(pieces)
}

fn closed_form_at(pieces: &[Piece], t: &Rat) -> Rat {
    let (_, f) = pieces.iter().find(|(end, _)| t <= end).unwrap_or_else(|| pieces.last().expect("nonempty"));
    f(t)
}

fn volume_profiles() -> Result<String> {
    let two_ray = ["a12", "x26-delta", "a11red", "a11irr", "a10"];
    let toric = ["p114-deg", "p114-nondeg", "p1425-a11irr", "p1425-a10", "p1425-unstable"];
    for (engine, names) in [("two-ray", two_ray), ("toric", toric)] {
        for name in names {
            let fx = fixtures::valuative(name).ok_or_else(|| anyhow!("missing fixture {name}"))?;
            eq(&format!("{name} engine"), fx.source.engine(), engine)?;
            let vp = fx.source.profile()?;
            let pieces = closed_form(name).expect("tabulated");
            let mut bps = vec![int(0)];
            bps.extend(pieces.iter().map(|(e, _)| e.clone()));
            eq(&format!("{name} breakpoints"), vp.profile.breakpoints().to_vec(), bps)?;
            let end = &pieces.last().expect("nonempty").0;
            for k in 0..20 {
                let t = end * rat(2 * k + 1, 40);
                eq_rat(&format!("{name} at t = {}", fmt_rat(&t)), &vp.at(&t), &closed_form_at(&pieces, &t))?;
            }
        }
    }
    Ok("5 two-ray and 5 toric profiles match at 20 points each".into())
}

fn s_invariants() -> Result<String> {
    let want = [("a12", rat(17, 5)), ("a11red", rat(5, 3)), ("a11irr", rat(49, 30)), ("a10", rat(47, 15))];
    for (name, s0) in &want {
        let case = fixtures::valuative(name).expect("built-in").wall_case()?;
        eq_rat(&format!("{name} S0"), &case.s0, s0)?;
    }
    let x26 = fixtures::valuative("x26-delta").expect("built-in").wall_case()?;
    eq_rat("X26 constant term", &(&x26.alpha * &x26.s0), &(rat(9, 25) * int(15)))?;
    eq_rat("X26 c coefficient", &(&x26.beta * &x26.s0), &(rat(9, 25) * int(25)))?;
    for k in 0..=10 {
        let c = rat(3 * k, 50);
        eq_rat("X26 S(c)", &x26.s(&c), &(rat(9, 25) * (int(15) - int(25) * &c)))?;
    }
    Ok(format!("S0 = ({}), X26 S(c) = 27/5 - 9 c", list(&want.map(|w| w.1))))
}

fn centroid_tests() -> Result<String> {
    let v = |x: Rat, y: Rat, z: Rat| Vec3::new(x, y, z);
    let known = [
        (Vec3::ints(15, 15, -7), v(int(9), int(1), rat(-49, 150))),
        (Vec3::ints(15, 15, 7), v(int(9), int(1), rat(319, 975))),
        (Vec3::ints(7, 6, -1), v(rat(10, 12), int(1), rat(-1, 12))),
        (Vec3::ints(7, 6, 1), v(rat(10, 12), int(1), rat(1, 12))),
        (Vec3::ints(7, 30, 1), v(rat(49, 300), int(1), rat(4, 300))),
        (Vec3::ints(7, 30, -1), v(rat(49, 300), int(1), rat(-4, 300))),
        (Vec3::ints(13, 30, -7), v(rat(94, 300), int(1), rat(-49, 300))),
        (Vec3::ints(13, 30, 7), v(rat(94, 300), int(1), rat(49, 300))),
    ];
    let mut cs = Vec::new();
    for (name, (u0, u2)) in CENTROID.iter().zip(known) {
        let case = fixtures::centroid(name).ok_or_else(|| anyhow!("missing fixture {name}"))?;
        let verdict = solve_centroid_condition(&case)?;
        eq(&format!("{name} outcome"), verdict.outcome, CentroidOutcome::UniqueC)?;
        let s = verdict.raw.as_ref().ok_or_else(|| anyhow!("{name}: singular system"))?;
        ensure!(s.a > int(0) && s.b > int(0), "{name}: a = {}, b = {}", fmt_rat(&s.a), fmt_rat(&s.b));
        let twin = fixtures::centroid_twin(name).ok_or_else(|| anyhow!("{name} has no twin"))?;
        eq_rat(&format!("{name} c against {twin}"), &s.c, &wall_of(twin)?)?;
        eq(&format!("{name} u0"), &verdict.u0, &u0)?;
        eq(&format!("{name} u2"), &verdict.u2, &u2)?;
        cs.push(s.c.clone());
    }
    cs.dedup();
    Ok(format!("{} fixtures, c in ({})", CENTROID.len(), list(&cs)))
}

fn delta_bounds() -> Result<String> {
    let x26 = fixtures::x26_delta()?;
    eq_rat("X26 delta bound", &x26, &rat(1, 9))?;
    let p = fixtures::p1425_delta()?;
    eq_rat("P(1,4,25) delta bound", &p.delta, &rat(1, 10))?;
    eq("registry x26-delta", registry_field("x26-delta", "delta upper bound")?, "1/9".to_string())?;
    eq("registry p1425-delta", registry_field("p1425-delta", "delta upper bound")?, "1/10".to_string())?;
    for d in 4..=20i64 {
        let want = Interval::closed_open(rat(8, 3 * d), rat(3, d))?;
        eq(&format!("window for d = {d}"), admissibility_window(SurfaceTag::X26, d as u64)?, want)?;
    }
    Ok("1/9 on X26, 1/10 on P(1,4,25), X26 window [8/(3d), 3/d)".into())
}

/// `n - 1` evenly spaced interior points of `(lo, hi)`.
fn interior(lo: &Rat, hi: &Rat, n: i64) -> Vec<Rat> {
    (1..n).map(|k| lo + (hi - lo) * rat(k, n)).collect()
}

fn index_bounds() -> Result<String> {
    for c in interior(&rat(54, 95), &rat(3, 5), 40) {
        eq(&format!("index_bound(5, {})", fmt_rat(&c)), index_bound(5, &c)?, 5)?;
    }
    for c in interior(&rat(3, 8), &rat(3, 4), 40) {
        let m = index_bound(4, &c)?;
        ensure!(m >= 2, "index_bound(4, {}) = {m} < 2", fmt_rat(&c));
        if c < rat(1, 2) {
            eq(&format!("index_bound(4, {})", fmt_rat(&c)), m, 2)?;
        }
    }
    let t2 = CyclicQuot::t_singularity(2, 1)?;
    for c in interior(&int(0), &rat(3, 4), 48) {
        let ok = local_volume_bound_check(&t2, &c, 4, &int(0))?;
        eq(&format!("index-2 point allowed at c = {}", fmt_rat(&c)), ok, c >= rat(3, 8))?;
    }
    let ceiling = lct_newton(&p1425_germ_at_quarter_chart(70))?;
    eq_rat("lct ceiling for d = 7", &ceiling, &rat(1, 4))?;
    let need = min_coeff_for_index(7, 5).ok_or_else(|| anyhow!("index 5 unreachable for d = 7"))?;
    eq_rat("index-5 threshold for d = 7", &need, &rat(12, 35))?;
    ensure!(ceiling < need, "d = 7 is not excluded");
    Ok("index 5 on (54/95, 3/5), index 2 from c = 3/8 for d = 4, d = 7 excluded (1/4 < 12/35)".into())
}

fn lct_suite() -> Result<String> {
    let germs = [("A9", "x^2 + y^10", rat(3, 5)), ("D6", "x^2 y + y^5", rat(3, 5)), ("A12", "x^2 + y^13", rat(15, 26))];
    for (label, g, want) in &germs {
        eq_rat(&format!("lct of {label}"), &lct_newton(&GermSupport::parse(g)?)?, want)?;
    }
    for deg in (2..=20).step_by(2) {
        eq_rat(
            &format!("lct of a degree-{deg} curve on P(1,1,4)"),
            &lct_local(&p114_germ_at_quarter_chart(deg)),
            &int(1),
        )?;
    }
    for (deg, want) in [(10, rat(1, 2)), (20, rat(1, 4)), (40, rat(1, 3))] {
        for k in 0..3 {
            let d = deg + 50 * k;
            eq_rat(
                &format!("lct of a degree-{d} curve on P(1,4,25)"),
                &lct_newton(&p1425_germ_at_quarter_chart(d))?,
                &want,
            )?;
        }
    }
    Ok("3/5, 3/5, 15/26, 1, then 1/2, 1/4, 1/3 by degree mod 50".into())
}

fn cm_degrees() -> Result<String> {
    for d in 3..=9u32 {
        let di = d as i64;
        let want = [int(0), int(27), int(-18 * di), int(3 * di * di)];
        let got = cm_degree_poly(2, d);
        eq(&format!("cm_degree_poly(2, {d})"), got.coeffs().to_vec(), want.to_vec())?;
        eq(&format!("cm window for d = {d}"), cm_positivity_window(2, d as u64)?, Interval::open(int(0), rat(3, di))?)?;
    }
    Ok("3c(3 - cd)^2 coefficientwise for d in 3..=9, window (0, 3/d)".into())
}

fn octic(i: u32) -> Result<BinaryFormSystem> {
    let f = BinaryForm::new(BinaryFormSystem::block_degree(Parity::Even, 2), [(i, int(1))])?;
    Ok(BinaryFormSystem::new(4, [(2, f)])?)
}

fn git_checks() -> Result<String> {
    let unstable = octic(5)?;
    match binary_system_stability(&unstable) {
        BinaryVerdict::Unstable { certificate } => {
            ensure!(replay_certificate(&unstable, &certificate), "x^5 y^3 certificate does not replay")
        }
        v => return Err(anyhow!("x^5 y^3 reported {v}")),
    }
    eq("registry quartic-binary", registry_field("quartic-binary", "verdict")?, "unstable".to_string())?;
    let v = binary_system_stability(&octic(4)?);
    ensure!(matches!(v, BinaryVerdict::StrictlySemistable { .. }), "x^4 y^4 reported {v}");
    let q5 = PlaneCurveSupport::new(5, [(2, 2, 1), (1, 1, 3), (0, 0, 5)])?;
    let mu = hm_weight_plane(&q5, &OnePs::new([-1, 1, 0])?);
    eq_rat("mu of Q5", &mu, &int(0))?;
    Ok("x^5 y^3 unstable and replayed, x^4 y^4 strictly semistable, mu(Q5) = 0".into())
}

const SEED: u64 = 0x6b_7761_6c6c;

fn rand_pos(rng: &mut ChaCha8Rng, bound: i64) -> Rat {
    rat(rng.gen_range(1..=bound), rng.gen_range(1..=bound))
}

fn scale_trials(rng: &mut ChaCha8Rng, trials: usize) -> Result<()> {
    let names: Vec<&str> = VALUATIVE.iter().copied().filter(|n| !n.starts_with("firstwall")).collect();
    for _ in 0..trials {
        let name = names[rng.gen_range(0..names.len())];
        let lambda = rand_pos(rng, 50);
        let fx = fixtures::valuative(name).expect("built-in");
        let base = fx.wall_case()?;
        let v = fx.valuation.rescaled(&lambda);
        let s0 = match &fx.source {
            ProfileSource::Toric { surface, valuation } => {
                let w = ToricValuation { cone: valuation.cone, w: valuation.w.scale(&lambda) };
                s_invariant(&volume_toric(&surface.moment_polygon(&w))?, fx.alpha.clone(), fx.beta.clone())?.s0
            }
            ProfileSource::TwoRay { .. } => &base.s0 * &lambda,
        };
        eq_rat(&format!("{name} S0 scaled by {}", fmt_rat(&lambda)), &s0, &(&base.s0 * &lambda))?;
        let scaled = WallCase::new(
            name,
            log_discrepancy(&v),
            ord_on_germ(&v, &fx.germ),
            s0,
            fx.alpha.clone(),
            fx.beta.clone(),
            fx.valid_range.clone(),
            "rescaled",
        )?;
        eq(
            &format!("{name} wall under scaling by {}", fmt_rat(&lambda)),
            solve_wall(&scaled)?.wall,
            solve_wall(&base)?.wall,
        )?;
    }
    Ok(())
}

fn primitive(x: i64, y: i64) -> Vec2 {
    let g = x.gcd(&y);
    Vec2::ints(x / g, y / g)
}

/// Three rays `n1, n2, -(a n1 + b n2)` with the origin inside the polygon.
fn random_fan(rng: &mut ChaCha8Rng) -> Result<ToricSurface> {
    loop {
        let [p, q, r, s] = [0; 4].map(|_| rng.gen_range(-4i64..=4));
        if p * s - q * r == 0 {
            continue;
        }
        let (a, b) = (rng.gen_range(1..=4i64), rng.gen_range(1..=4i64));
        let n0 = primitive(-(a * p + b * r), -(a * q + b * s));
        let offsets = [0; 3].map(|_| int(rng.gen_range(1..=4i64)));
        return Ok(ToricSurface::new([n0, primitive(p, q), primitive(r, s)], offsets)?);
    }
}

fn engine_trials(rng: &mut ChaCha8Rng, trials: usize) -> Result<()> {
    for k in 0..trials {
        let s = random_fan(rng)?;
        let i = rng.gen_range(0..3usize);
        let j = (i + 1) % 3;
        let w = &s.rays[i].scale(&rand_pos(rng, 6)) + &s.rays[j].scale(&rand_pos(rng, 6));
        let v = ToricValuation { cone: (i, j), w };
        let toric = volume_toric(&s.moment_polygon(&v))?;
        let (model, l) = s.two_ray_model(&v)?;
        eq(&format!("engines on random fan {k}"), volume_two_ray(&model, &l)?, toric)?;
    }
    Ok(())
}

fn identity() -> Mat3 {
    [0, 1, 2].map(|i| [0, 1, 2].map(|j| if i == j { int(1) } else { int(0) }))
}

fn mul(a: &Mat3, b: &Mat3) -> Mat3 {
    [0, 1, 2].map(|i| [0, 1, 2].map(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum()))
}

/// A product of elementary shears and sign flips.
fn random_unimodular(rng: &mut ChaCha8Rng) -> Mat3 {
    let mut g = identity();
    for _ in 0..rng.gen_range(1..8) {
        let mut e = identity();
        let (i, j) = (rng.gen_range(0..3), rng.gen_range(0..3));
        if i == j {
            e[i][i] = int(-1);
        } else {
            e[i][j] = int(rng.gen_range(-3i64..=3));
        }
        g = mul(&e, &g);
    }
    g
}

fn equivariance_trials(rng: &mut ChaCha8Rng, trials: usize) -> Result<()> {
    for _ in 0..trials {
        let name = CENTROID[rng.gen_range(0..CENTROID.len())];
        let g = random_unimodular(rng);
        let case = fixtures::centroid(name).expect("built-in");
        let before = solve_centroid_condition(&case)?;
        let after = solve_centroid_condition(&case.transformed(&g)?)?;
        let gt: Mat3 = [0, 1, 2].map(|i| [0, 1, 2].map(|j| g[j][i].clone()));
        eq(&format!("{name} u0 under g"), after.u0, solve_linear3(&gt, &before.u0)?)?;
        eq(&format!("{name} u2 under g"), after.u2, solve_linear3(&gt, &before.u2)?)?;
        eq(&format!("{name} (a, c, b) under g"), after.raw, before.raw)?;
        eq(&format!("{name} outcome under g"), after.outcome, before.outcome)?;
    }
    Ok(())
}

fn property_suites() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    scale_trials(&mut rng, 200)?;
    engine_trials(&mut rng, 200)?;
    equivariance_trials(&mut rng, 100)?;
    Ok("200 scaling, 200 engine agreement, 100 unimodular trials".into())
}

/// The checklist as a report, one row per criterion.
pub fn report(results: &[CriterionResult]) -> Report {
    let passed = results.iter().filter(|r| r.passed).count();
    let mut r = Report::new("acceptance checklist");
    r.field("passed", format!("{passed}/{}", results.len()));
    let mut t = Table::new("criteria", &["id", "criterion", "status", "detail"]);
    for c in results {
        let status = if c.passed { "pass" } else { "fail" };
        t.row(vec![c.id.to_string(), c.title.to_string(), status.to_string(), c.detail.clone()]);
    }
    r.table(t);
    r
}
