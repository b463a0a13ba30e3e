use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Class, TwoRayModel, VolumeError, VolumeProfile};
use crate::exact::{clip, int, HalfPlane, PiecewiseQuadratic, Poly, Polygon2, Rat, Shape, Vec2};

/// A polarized toric surface's moment polygon and a toric valuation `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentPolygon {
    pub polygon: Polygon2,
    pub direction: Vec2,
}

/// `vol(L - t v_w) = 2 area(P cap {<u, w> >= m0 + t})`, exact.
///
/// The clipped area is quadratic between consecutive vertex levels, so each
/// piece is recovered exactly from three evaluations.
pub fn volume_toric(m: &MomentPolygon) -> Result<VolumeProfile, VolumeError> {
    if m.direction.is_zero() {
        return Err(VolumeError::ZeroDirection);
    }
    if m.polygon.shape() != Shape::Region {
        return Err(VolumeError::DegeneratePolygon);
    }
    let w = &m.direction;
    let levels: Vec<Rat> = m.polygon.vertices().iter().map(|v| v.dot(w)).collect();
    let m0 = levels.iter().min().cloned().expect("polygon has vertices");
    let mut bps: Vec<Rat> = levels.iter().map(|l| l - &m0).collect();
    bps.sort();
    bps.dedup();

    let vol_at = |t: &Rat| int(2) * clip(&m.polygon, &HalfPlane::new(w.clone(), &m0 + t)).area();
    let mut parts = Vec::with_capacity(bps.len() - 1);
    for pair in bps.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let mid = (a + b) / int(2);
        let pts: Vec<(Rat, Rat)> = [a.clone(), mid, b.clone()]
            .into_iter()
            .map(|t| {
                let v = vol_at(&t);
                (t, v)
            })
            .collect();
        parts.push((a.clone(), b.clone(), Poly::interpolate(&pts)));
    }
    let profile = PiecewiseQuadratic::from_intervals(parts)?;
    let pseff = bps.last().cloned().expect("nonempty");
    let nef = bps.get(1).cloned().unwrap_or_else(|| pseff.clone());
    Ok(VolumeProfile { profile, nef_threshold: nef, pseff_threshold: pseff })
}

/// A complete toric surface with three rays, polarized by
/// `P = { m : <m, n_i> >= -a_i }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricSurface {
    pub rays: [Vec2; 3],
    pub offsets: [Rat; 3],
}

/// A toric valuation `w` in the interior of the cone spanned by two rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricValuation {
    pub cone: (usize, usize),
    pub w: Vec2,
}

fn det2(a: &Vec2, b: &Vec2) -> Rat {
    a.cross(b)
}

/// Solves `<m, p> = s` and `<m, q> = r` for `m`.
fn dual_point(p: &Vec2, s: &Rat, q: &Vec2, r: &Rat) -> Vec2 {
    let d = det2(p, q);
    Vec2::new((s * &q.y - r * &p.y) / &d, (&p.x * r - &q.x * s) / d)
}

/// `w = k w_p` with `w_p` a primitive integral vector and `k > 0`.
fn primitive_split(w: &Vec2) -> (Vec2, Rat) {
    let l = w.x.denom().lcm(w.y.denom());
    let lr = Rat::from_integer(l.clone());
    let (ix, iy) = ((&w.x * &lr).to_integer(), (&w.y * &lr).to_integer());
    let g: BigInt = ix.gcd(&iy);
    let wp = Vec2::new(Rat::from_integer(&ix / &g), Rat::from_integer(&iy / &g));
    (wp, Rat::new(g, l))
}

impl ToricSurface {
    pub fn new(rays: [Vec2; 3], offsets: [Rat; 3]) -> Result<Self, VolumeError> {
        let s = ToricSurface { rays, offsets };
        if s.rays.iter().any(|r| r.is_zero()) {
            return Err(VolumeError::ZeroDirection);
        }
        if s.polygon().shape() != Shape::Region {
            return Err(VolumeError::DegeneratePolygon);
        }
        Ok(s)
    }

    /// Vertex dual to the cone `(i, j)`.
    pub fn vertex(&self, i: usize, j: usize) -> Vec2 {
        dual_point(&self.rays[i], &-&self.offsets[i], &self.rays[j], &-&self.offsets[j])
    }

    pub fn polygon(&self) -> Polygon2 {
        Polygon2::hull([self.vertex(0, 1), self.vertex(1, 2), self.vertex(2, 0)])
    }

    /// `L^2 = 2 area(P)`.
    pub fn volume(&self) -> Rat {
        int(2) * self.polygon().area()
    }

    /// `L . D_i`: lattice length of the edge of `P` orthogonal to ray `i`.
    pub fn degree_on(&self, i: usize) -> Rat {
        let others: Vec<usize> = (0..3).filter(|&k| k != i).collect();
        let a = self.vertex(i, others[0]);
        let b = self.vertex(i, others[1]);
        let d = &b - &a;
        let n = &self.rays[i];
        // primitive generator of n-perp for primitive n = (p, q) is (-q, p)
        let g = primitive_split(n).0;
        let perp = Vec2::new(-&g.y, g.x.clone());
        let len = if !perp.x.is_zero() { &d.x / &perp.x } else { &d.y / &perp.y };
        len.abs()
    }

    /// `A(v_w) = l_i + l_j` for `w = l_i n_i + l_j n_j`, with primitive rays.
    pub fn log_discrepancy(&self, v: &ToricValuation) -> Rat {
        let (i, j) = v.cone;
        let (ni, nj) = (&self.rays[i], &self.rays[j]);
        let d = det2(ni, nj);
        (det2(&v.w, nj) + det2(ni, &v.w)) / d
    }

    pub fn moment_polygon(&self, v: &ToricValuation) -> MomentPolygon {
        MomentPolygon { polygon: self.polygon(), direction: v.w.clone() }
    }

    /// Intersection model of the weighted blow-up extracting `v`, in units
    /// where `v = ord_E`.
    ///
    /// Returns the model and the pulled back polarization `H`. The curve
    /// kept is whichever of the two toric curves through the blown-up point
    /// is hit first by `H - tE`.
    pub fn two_ray_model(&self, v: &ToricValuation) -> Result<(TwoRayModel, Class), VolumeError> {
        let (i, j) = v.cone;
        let (ni, nj) = (&self.rays[i], &self.rays[j]);
        let d = det2(ni, nj);
        let li = det2(&v.w, nj) / &d;
        let lj = det2(ni, &v.w) / &d;
        if !li.is_positive() || !lj.is_positive() {
            return Err(VolumeError::Model("valuation is not interior to the cone".into()));
        }
        let (wp, k) = primitive_split(&v.w);
        let e2 = d.abs() / (det2(ni, &wp).abs() * det2(&wp, nj).abs());
        let e = e2 / (&k * &k);
        let h2 = self.volume();

        let mut best: Option<(Rat, Rat, Rat)> = None;
        for (a, b) in [(i, j), (j, i)] {
            let m_sigma = dual_point(&self.rays[a], &Rat::one(), &self.rays[b], &Rat::zero());
            let order = m_sigma.dot(&v.w);
            let coef = self.degree_on(a) / &h2;
            let threshold = &coef * &h2 / (&order * &e);
            if best.as_ref().is_none_or(|(t, _, _)| &threshold < t) {
                best = Some((threshold, coef, order));
            }
        }
        let (_, a, b) = best.expect("two candidate curves");
        let model = TwoRayModel { h2, e, cross: Rat::zero(), neg_curve: Some((a, b)) };
        if model.neg_curve_square().is_some_and(|s| s.is_positive()) {
            return Err(VolumeError::Model("no negative curve through the point".into()));
        }
        Ok((model, Class::new(int(1), int(0))))
    }
}
