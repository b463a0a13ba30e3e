//! Turns scenarios into reports by running the `kwall` engines.

use anyhow::{anyhow, bail, Context, Result};
use kwall::exact::{fmt_rat, int, Rat};
use kwall::fixtures::ProfileSource;
use kwall::git::{
    binary_system_stability, cm_degree, cm_positivity_window, hm_weight_plane, replay_certificate, BinaryForm,
    BinaryFormSystem, BinaryVerdict, OnePs, Parity, PlaneCurveSupport,
};
use kwall::toric_kps::{solve_centroid_condition, CentroidCase};
use kwall::valuations::{
    delta_upper, index_bound, lct_local, lct_quasihomog, local_volume_bound_check, log_discrepancy, ord_on_germ,
    CyclicQuot, GermSupport, MonomialVal, QuasiHomogGerm,
};
use kwall::volumes::{s_invariant, Class, ToricSurface, ToricValuation, TwoRayModel, VolumeProfile};
use kwall::walls::{classify_quintic_stratum, solve_wall, QuinticStratumPoint, StratumFate, WallCase};

use crate::report::{Report, Table};
use crate::scenario::*;

/// `k0 + k1 c`, printed exactly.
pub fn affine(k0: &Rat, k1: &Rat) -> String {
    let zero = int(0);
    match (k0 == &zero, k1 == &zero) {
        (_, true) => fmt_rat(k0),
        (true, false) => format!("{} c", fmt_rat(k1)),
        (false, false) if k1 < &zero => format!("{} - {} c", fmt_rat(k0), fmt_rat(&-k1)),
        _ => format!("{} + {} c", fmt_rat(k0), fmt_rat(k1)),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn point(p: &PointPayload) -> Result<CyclicQuot> {
    CyclicQuot::new(p.n, p.a, p.b).context("point")
}

pub fn valuation(v: &ValuationPayload) -> Result<MonomialVal> {
    MonomialVal::new(point(&v.point)?, v.w1.0.clone(), v.w2.0.clone(), v.scale.0.clone()).context("valuation")
}

pub fn two_ray(p: &TwoRayPayload) -> (TwoRayModel, Class) {
    let model = TwoRayModel {
        h2: p.h2.0.clone(),
        e: p.e.0.clone(),
        cross: p.cross.as_ref().map_or_else(|| int(0), |c| c.0.clone()),
        neg_curve: p.neg_curve.as_ref().map(|[a, b]| (a.0.clone(), b.0.clone())),
    };
    (model, Class::new(p.polarization[0].0.clone(), p.polarization[1].0.clone()))
}

pub fn toric(p: &ToricPayload) -> Result<(ToricSurface, ToricValuation)> {
    let rays = [v2(&p.rays[0]), v2(&p.rays[1]), v2(&p.rays[2])];
    let offsets = [p.offsets[0].0.clone(), p.offsets[1].0.clone(), p.offsets[2].0.clone()];
    let surface = ToricSurface::new(rays, offsets).context("toric surface")?;
    if p.cone[0] > 2 || p.cone[1] > 2 || p.cone[0] == p.cone[1] {
        bail!("cone must name two distinct rays among 0, 1, 2");
    }
    Ok((surface, ToricValuation { cone: (p.cone[0], p.cone[1]), w: v2(&p.w) }))
}

pub fn profile_source(p: &ProfilePayload) -> Result<ProfileSource> {
    Ok(match p {
        ProfilePayload::TwoRay(t) => {
            let (model, polarization) = two_ray(t);
            ProfileSource::TwoRay { model, polarization }
        }
        ProfilePayload::Toric(t) => {
            let (surface, valuation) = toric(t)?;
            ProfileSource::Toric { surface, valuation }
        }
    })
}

pub fn profile_report(title: &str, engine: &str, vp: &VolumeProfile) -> Report {
    let mut r = Report::new(title);
    r.field("engine", engine)
        .field("vol(L)", fmt_rat(&vp.volume()))
        .field("nef threshold", fmt_rat(&vp.nef_threshold))
        .field("pseff threshold", fmt_rat(&vp.pseff_threshold));
    let mut t = Table::new("vol(L - tE)", &["from", "to", "piece"]);
    for (a, b, p) in vp.profile.intervals() {
        t.row(vec![fmt_rat(a), fmt_rat(b), p.to_string()]);
    }
    r.table(t);
    r
}

/// Builds the wall case. With a `profile`, `S0` comes from the volume
/// engine, `A0` from the valuation (or the toric log discrepancy when no
/// valuation is given) and `ordD` from the germ (zero when the centre
/// avoids the curve and no germ is given). Without a profile the numbers
/// `a0`, `ord_d`, `s0` are taken as given.
pub fn wall_case(name: &str, p: &WallPayload) -> Result<WallCase> {
    let range = p.range.interval()?;
    let (alpha, beta) = (p.alpha.0.clone(), p.beta.0.clone());
    let (a0, ord, s0, provenance) = match &p.profile {
        Some(prof) => {
            if p.a0.is_some() || p.ord_d.is_some() || p.s0.is_some() {
                bail!("wall-case payload with a profile must not also give a0, ord_d or s0");
            }
            let source = profile_source(prof)?;
            let s = s_invariant(&source.profile().context("profile")?, alpha.clone(), beta.clone())?;
            let v = p.valuation.as_ref().map(valuation).transpose()?;
            let a0 = match (&v, &source) {
                (Some(v), _) => log_discrepancy(v),
                (None, ProfileSource::Toric { surface, valuation }) => surface.log_discrepancy(valuation),
                (None, ProfileSource::TwoRay { .. }) => bail!("valuation is required with a two-ray profile"),
            };
            let (ord, on) = match (&p.germ, &v) {
                (Some(g), Some(v)) => {
                    let germ = GermSupport::parse(g).context("germ")?;
                    (ord_on_germ(v, &germ), germ.to_string())
                }
                (Some(_), None) => bail!("germ needs a valuation"),
                (None, _) => (int(0), "no curve".to_string()),
            };
            let prov = format!("A0 and ordD from the valuation on {on}; S0 from the {} engine", source.engine());
            (a0, ord, s.s0, prov)
        }
        None => match (&p.a0, &p.ord_d, &p.s0) {
            (Some(a0), Some(ord), Some(s0)) => {
                (a0.0.clone(), ord.0.clone(), s0.0.clone(), "A0, ordD, S0 given directly".to_string())
            }
            _ => bail!("wall-case payload needs either a profile or all of a0, ord_d, s0"),
        },
    };
    Ok(WallCase::new(name, a0, ord, s0, alpha, beta, range, provenance)?)
}

pub fn wall_report(title: &str, case: &WallCase) -> Result<Report> {
    let w = solve_wall(case)?;
    let mut r = Report::new(title);
    r.field("A0", fmt_rat(&case.a0))
        .field("ordD", fmt_rat(&case.ord_d))
        .field("S0", fmt_rat(&case.s0))
        .field("A(c)", affine(&case.a0, &-&case.ord_d))
        .field("S(c)", affine(&(&case.alpha * &case.s0), &-(&case.beta * &case.s0)))
        .field("range", case.valid_range.to_string())
        .field("wall", w.wall.as_ref().map_or_else(|| "none in range".to_string(), fmt_rat))
        .field("unstable below", yes_no(w.unstable_below))
        .field("unstable above", yes_no(w.unstable_above))
        .field("delta upper bound", fmt_rat(&delta_upper(&case.a0, &case.s0, &case.alpha)))
        .field("provenance", case.provenance.clone());
    Ok(r)
}

pub fn centroid_case(p: &CentroidPayload) -> Result<CentroidCase> {
    let g = [v3(&p.generators[0]), v3(&p.generators[1]), v3(&p.generators[2])];
    let mut c = CentroidCase::new(g, v3(&p.xi0), v3(&p.eta0_star), v3(&p.u1))?;
    c.u0_override = p.u0.as_ref().map(v3);
    Ok(c)
}

pub fn centroid_report(title: &str, case: &CentroidCase) -> Result<Report> {
    let v = solve_centroid_condition(case)?;
    let mut r = Report::new(title);
    r.field("u0", v.u0.to_string())
        .field("u1", case.u1.to_string())
        .field("u2", v.u2.to_string())
        .field("eta0*", case.eta0_star.to_string())
        .field("outcome", v.outcome.to_string());
    if let Some(s) = &v.raw {
        r.field("a", fmt_rat(&s.a)).field("c", fmt_rat(&s.c)).field("b", fmt_rat(&s.b));
    }
    Ok(r)
}

pub fn binary_system(p: &GitBinaryPayload) -> Result<BinaryFormSystem> {
    let parity = if p.d.is_multiple_of(2) { Parity::Even } else { Parity::Odd };
    let mut blocks = Vec::new();
    for b in &p.blocks {
        let f = BinaryForm::new(
            BinaryFormSystem::block_degree(parity, b.j),
            b.terms.iter().map(|(i, c)| (*i, c.0.clone())),
        )
        .with_context(|| format!("block {}", b.j))?;
        blocks.push((b.j, f));
    }
    Ok(BinaryFormSystem::new(p.d, blocks)?)
}

pub fn binary_report(title: &str, s: &BinaryFormSystem) -> Report {
    let v = binary_system_stability(s);
    let mut r = Report::new(title);
    r.field("parity", format!("{:?}", s.parity).to_lowercase());
    for f in s.blocks.values() {
        r.field(&format!("f{}", f.degree), f.to_string());
    }
    r.field("verdict", v.to_string());
    let cert = match &v {
        BinaryVerdict::Unstable { certificate } | BinaryVerdict::StrictlySemistable { certificate, .. } => {
            Some(certificate)
        }
        BinaryVerdict::Stable => None,
    };
    if let Some(c) = cert {
        r.field("direction", c.direction.to_string());
        if matches!(v, BinaryVerdict::Unstable { .. }) {
            r.field("certificate replays", yes_no(replay_certificate(s, c)));
        }
        let mut t = Table::new("weights", &["block", "x-exponent", "weight"]);
        for (j, i, w) in &c.weights {
            t.row(vec![j.to_string(), i.to_string(), w.to_string()]);
        }
        r.table(t);
    }
    r
}

pub fn lct_report(title: &str, p: &LctPayload) -> Result<Report> {
    let mut r = Report::new(title);
    match (&p.germ, &p.quasi_homogeneous) {
        (Some(g), None) => {
            let germ = GermSupport::parse(g).context("germ")?;
            r.field("germ", germ.to_string()).field("lct", fmt_rat(&lct_local(&germ)));
        }
        (None, Some(q)) => {
            let g = QuasiHomogGerm::new(q.w1, q.w2, q.degree)?;
            r.field("weights", format!("({}, {})", q.w1, q.w2))
                .field("degree", q.degree.to_string())
                .field("lct", fmt_rat(&lct_quasihomog(&g)));
        }
        _ => bail!("lct payload needs exactly one of germ, quasi_homogeneous"),
    }
    Ok(r)
}

pub fn index_report(title: &str, p: &IndexPayload) -> Result<Report> {
    let c = &p.coeff.0;
    let mut r = Report::new(title);
    r.field("degree", p.degree.to_string())
        .field("c", fmt_rat(c))
        .field("index bound", index_bound(p.degree, c)?.to_string());
    if let Some(pt) = &p.point {
        let q = point(pt)?;
        let ord = p.ord_d.as_ref().map_or_else(|| int(0), |o| o.0.clone());
        let ok = local_volume_bound_check(&q, c, p.degree, &ord)?;
        r.field("point", format!("1/{}({}, {})", q.n, q.a, q.b))
            .field("local volume bound", if ok { "allowed" } else { "excluded" });
    }
    Ok(r)
}

pub fn cm_report(title: &str, p: &CmPayload) -> Result<Report> {
    let window = cm_positivity_window(p.n, p.degree as u64)?;
    let mut r = Report::new(title);
    r.field("n", p.n.to_string())
        .field("degree", p.degree.to_string())
        .field("c", fmt_rat(&p.coeff.0))
        .field("polynomial", kwall::git::cm_degree_poly(p.n, p.degree).to_string().replace('t', "c"))
        .field("cm degree", fmt_rat(&cm_degree(p.n, p.degree, &p.coeff.0)))
        .field("positivity window", window.to_string());
    Ok(r)
}

pub fn stratum_point(p: &StratumPointPayload) -> Result<QuinticStratumPoint> {
    Ok(match (&p.jet, &p.d6) {
        (Some([s, r, h, u]), None) => QuinticStratumPoint::jet(s.0.clone(), r.0.clone(), h.0.clone(), u.0.clone())?,
        (None, Some([s1, s2])) => QuinticStratumPoint::d6(s1.0.clone(), s2.0.clone())?,
        _ => bail!("stratum point {:?} needs exactly one of jet, d6", p.label),
    })
}

pub fn stratum_report(title: &str, points: &[(String, QuinticStratumPoint)]) -> Result<Report> {
    let mut r = Report::new(title);
    let mut t = Table::new("strata", &["point", "stratum", "fate"]);
    for (label, p) in points {
        let s = classify_quintic_stratum(p)?;
        let fate = match &s.fate {
            StratumFate::Wall(c) => format!("wall at {}", fmt_rat(c)),
            StratumFate::LctBoundary(l) => format!("no wall, lct {}", fmt_rat(l)),
        };
        t.row(vec![label.clone(), s.stratum.to_string(), fate]);
    }
    r.table(t);
    Ok(r)
}

pub fn delta_report(title: &str, p: &DeltaPayload) -> Result<Report> {
    if p.candidates.is_empty() {
        bail!("delta payload needs at least one candidate");
    }
    let mut r = Report::new(title);
    let mut t = Table::new("candidates", &["divisor", "A0", "S0", "A/S"]);
    let mut best: Option<(String, Rat)> = None;
    for cand in &p.candidates {
        let case = wall_case(&cand.label, &cand.case).with_context(|| format!("candidate {}", cand.label))?;
        let ratio = delta_upper(&case.a0, &case.s0, &case.alpha);
        t.row(vec![cand.label.clone(), fmt_rat(&case.a0), fmt_rat(&case.s0), fmt_rat(&ratio)]);
        if best.as_ref().is_none_or(|(_, b)| &ratio < b) {
            best = Some((cand.label.clone(), ratio));
        }
    }
    let (label, delta) = best.expect("nonempty");
    r.field("delta upper bound", fmt_rat(&delta)).field("attained by", label);
    r.table(t);
    Ok(r)
}

/// Evaluates any scenario.
pub fn evaluate(s: &Scenario) -> Result<Report> {
    let title = format!("{} ({})", s.name, s.kind);
    let mut r = match s.body()? {
        Body::TwoRay(p) => {
            let (m, l) = two_ray(&p);
            profile_report(&title, "two-ray", &kwall::volumes::volume_two_ray(&m, &l)?)
        }
        Body::Toric(p) => {
            let (surface, v) = toric(&p)?;
            let mut r = profile_report(&title, "toric", &kwall::volumes::volume_toric(&surface.moment_polygon(&v))?);
            r.field("log discrepancy", fmt_rat(&surface.log_discrepancy(&v)));
            r
        }
        Body::WallCase(p) => wall_report(&title, &wall_case(&s.name, &p)?)?,
        Body::Delta(p) => delta_report(&title, &p)?,
        Body::Centroid(p) => centroid_report(&title, &centroid_case(&p)?)?,
        Body::GitBinary(p) => binary_report(&title, &binary_system(&p)?),
        Body::GitPlane(p) => {
            let support = PlaneCurveSupport::new(p.degree, p.monomials.iter().map(|m| (m[0], m[1], m[2])))?;
            let lambda = OnePs::new(p.one_ps)?;
            let mu = hm_weight_plane(&support, &lambda);
            let mut r = Report::new(&title);
            r.field("one-parameter subgroup", format!("{:?}", p.one_ps))
                .field("mu", fmt_rat(&mu))
                .field("destabilised", yes_no(mu < int(0)))
                .field("torus fixed", yes_no(support.torus_fixed()));
            r
        }
        Body::Lct(p) => lct_report(&title, &p)?,
        Body::Index(p) => index_report(&title, &p)?,
        Body::Cm(p) => cm_report(&title, &p)?,
        Body::Stratum(p) => {
            let pts = p.points.iter().map(|q| Ok((q.label.clone(), stratum_point(q)?))).collect::<Result<Vec<_>>>()?;
            stratum_report(&title, &pts)?
        }
    };
    if !s.provenance.is_empty() {
        r.field("source", s.provenance.clone());
    }
    Ok(r)
}

/// Annotations that disagree with the computed report, as
/// `(key, expected, got)`.
pub fn mismatches(s: &Scenario, r: &Report) -> Vec<(String, String, String)> {
    s.expect
        .iter()
        .filter_map(|(k, want)| {
            let got = r.get(k).unwrap_or("<missing>");
            (got != want).then(|| (k.clone(), want.clone(), got.to_string()))
        })
        .collect()
}

/// Parses `"s,r,h,u"` or `"s1,s2"`.
pub fn parse_coords(text: &str) -> Result<QuinticStratumPoint> {
    let parts = text
        .split(',')
        .map(|x| kwall::exact::parse_rat(x).map_err(|e| anyhow!("coords: {e}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(match parts.as_slice() {
        [s, r, h, u] => QuinticStratumPoint::jet(s.clone(), r.clone(), h.clone(), u.clone())?,
        [s1, s2] => QuinticStratumPoint::d6(s1.clone(), s2.clone())?,
        _ => bail!("coords must have 4 entries (s,r,h,u) or 2 entries (s1,s2), got {}", parts.len()),
    })
}

pub fn quintic_report() -> Result<Report> {
    let mut r = Report::new("walls for plane quintics");
    let mut t = Table::new("walls", &["i", "c", "replaced pair", "replacing pair", "fixture"]);
    for w in kwall::walls::quintic_wall_table()? {
        t.row(vec![w.index.to_string(), fmt_rat(&w.c), w.e_minus.into(), w.e_plus.into(), w.source]);
    }
    r.table(t);
    Ok(r)
}

pub fn first_wall_report(d: u64) -> Result<Report> {
    let w = kwall::walls::first_wall(d)?;
    let mut r = Report::new(format!("first wall for degree {d}"));
    r.field("c1", fmt_rat(&w.c1)).field("replacement", w.tag);
    Ok(r)
}
