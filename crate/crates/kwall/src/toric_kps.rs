//! The centroid test for complexity one degenerations: the Futaki
//! obstruction vanishes with the right signs iff the centroid `u2` of the
//! Reeb cross-section of the dual cone is `a (u0 - c u1) + b eta0*` with
//! `a, b > 0`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact::{area_centroid, det3, rank3, solve_linear3, ExactError, Mat3, Polygon2, Rat, Vec2, Vec3};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KpsError {
    #[error("cone generators are linearly dependent")]
    DegenerateCone,
    #[error("Reeb vector is not in the interior of the cone, coefficients {0:?}")]
    UnboundedSection(Vec<Rat>),
    #[error("eta0* must pair to zero with the Reeb vector, got {0}")]
    EtaPairing(Rat),
    #[error("lattice change must have determinant +-1, got {0}")]
    NotUnimodular(Rat),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// One simplicial cone `tau` with its Reeb vector and the divisor data.
///
/// Generators live in `N_Q`; `eta0_star`, `u1` and the optional `u0`
/// override live in the dual `M_Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentroidCase {
    pub generators: [Vec3; 3],
    pub xi0: Vec3,
    pub eta0_star: Vec3,
    pub u1: Vec3,
    pub u0_override: Option<Vec3>,
}

fn rows(a: &Vec3, b: &Vec3, c: &Vec3) -> Mat3 {
    [a.to_array(), b.to_array(), c.to_array()]
}

fn columns(a: &Vec3, b: &Vec3, c: &Vec3) -> Mat3 {
    let (a, b, c) = (a.to_array(), b.to_array(), c.to_array());
    [0, 1, 2].map(|i| [a[i].clone(), b[i].clone(), c[i].clone()])
}

impl CentroidCase {
    pub fn new(generators: [Vec3; 3], xi0: Vec3, eta0_star: Vec3, u1: Vec3) -> Result<Self, KpsError> {
        let case = CentroidCase { generators, xi0, eta0_star, u1, u0_override: None };
        case.reeb_coefficients()?;
        let pairing = case.eta0_star.dot(&case.xi0);
        if !pairing.is_zero() {
            return Err(KpsError::EtaPairing(pairing));
        }
        Ok(case)
    }

    /// The same case after the lattice change `n -> g n`, with dual vectors
    /// moved by `g^{-T}`. `g` must be unimodular.
    pub fn transformed(&self, g: &Mat3) -> Result<Self, KpsError> {
        let d = det3(g);
        if d.abs() != Rat::one() {
            return Err(KpsError::NotUnimodular(d));
        }
        let gt: Mat3 = [0, 1, 2].map(|i| [0, 1, 2].map(|j| g[j][i].clone()));
        let push = |v: &Vec3| Vec3::from_array(g.clone().map(|row| Vec3::from_array(row).dot(v)));
        let pull = |u: &Vec3| solve_linear3(&gt, u).map_err(KpsError::from);
        Ok(CentroidCase {
            generators: [push(&self.generators[0]), push(&self.generators[1]), push(&self.generators[2])],
            xi0: push(&self.xi0),
            eta0_star: pull(&self.eta0_star)?,
            u1: pull(&self.u1)?,
            u0_override: self.u0_override.as_ref().map(pull).transpose()?,
        })
    }

    /// `lambda` with `xi0 = sum lambda_i n_i`, all positive.
    pub fn reeb_coefficients(&self) -> Result<Vec3, KpsError> {
        let [n1, n2, n3] = &self.generators;
        let lam = solve_linear3(&columns(n1, n2, n3), &self.xi0).map_err(|_| KpsError::DegenerateCone)?;
        let l = lam.to_array();
        if l.iter().any(|x| !x.is_positive()) {
            return Err(KpsError::UnboundedSection(l.to_vec()));
        }
        Ok(lam)
    }
}

/// The `u0` with `<u0, n_i> = 1` for each generator.
pub fn anticanonical_vector(generators: &[Vec3; 3]) -> Result<Vec3, KpsError> {
    let [n1, n2, n3] = generators;
    let one = Rat::from_integer(1.into());
    solve_linear3(&rows(n1, n2, n3), &Vec3::new(one.clone(), one.clone(), one)).map_err(|_| KpsError::DegenerateCone)
}

/// The slice `{u in tau^vee : <u, xi0> = 1}` in plane coordinates.
///
/// A point with plane coordinates `(s, t)` is `origin + s e1 + t e2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossSection {
    pub polygon: Polygon2,
    pub vertices: Vec<Vec3>,
    pub origin: Vec3,
    pub e1: Vec3,
    pub e2: Vec3,
}

impl CrossSection {
    pub fn lift(&self, p: &Vec2) -> Vec3 {
        &(&self.origin + &(&self.e1 * &p.x)) + &(&self.e2 * &p.y)
    }
}

/// Cross-section of the dual cone and its exact area centroid `u2`.
pub fn reeb_cross_section_centroid(case: &CentroidCase) -> Result<(CrossSection, Vec3), KpsError> {
    case.reeb_coefficients()?;
    let xi = &case.xi0;
    let g = &case.generators;
    // rays of tau^vee: r_k is orthogonal to the other two generators
    let mut vertices = Vec::with_capacity(3);
    for k in 0..3 {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        let mut r = g[i].cross(&g[j]);
        if r.dot(&g[k]).is_negative() {
            r = -&r;
        }
        let h = r.dot(xi);
        vertices.push(&r * &h.recip());
    }

    // a rational affine chart of the plane <u, xi0> = 1
    let origin = xi * &xi.dot(xi).recip();
    let candidates = [Vec3::ints(1, 0, 0), Vec3::ints(0, 1, 0), Vec3::ints(0, 0, 1)].map(|e| xi.cross(&e));
    let mut basis: Vec<Vec3> = Vec::new();
    for c in candidates {
        if c.is_zero() {
            continue;
        }
        if basis.len() == 1 && basis[0].cross(&c).is_zero() {
            continue;
        }
        basis.push(c);
        if basis.len() == 2 {
            break;
        }
    }
    let (e1, e2) = (basis[0].clone(), basis[1].clone());
    let frame = columns(&e1, &e2, xi);
    let mut flat = Vec::with_capacity(3);
    for v in &vertices {
        let st = solve_linear3(&frame, &(v - &origin))?;
        flat.push(Vec2::new(st.x, st.y));
    }
    let polygon = Polygon2::hull(flat);
    let (_, c2) = area_centroid(&polygon)?;
    let section = CrossSection { polygon, vertices, origin, e1, e2 };
    let u2 = section.lift(&c2);
    Ok((section, u2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CentroidOutcome {
    /// Exactly one `c`, with `a > 0` and `b > 0`.
    UniqueC,
    /// The linear solve succeeded but a sign condition fails.
    NoSolution,
    /// `c` is not determined by the system; carries the rank of `(u0, u1, eta0*)`.
    Indeterminate { rank: usize },
}

impl fmt::Display for CentroidOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentroidOutcome::UniqueC => f.write_str("unique-c"),
            CentroidOutcome::NoSolution => f.write_str("no-solution"),
            CentroidOutcome::Indeterminate { rank } => write!(f, "indeterminate (rank {rank})"),
        }
    }
}

/// `(a, c, b)` with `u2 = a (u0 - c u1) + b eta0*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentroidSolution {
    pub a: Rat,
    pub c: Rat,
    pub b: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentroidVerdict {
    pub u0: Vec3,
    pub u2: Vec3,
    /// Raw solution of the linear system, present whenever it is regular.
    pub raw: Option<CentroidSolution>,
    pub outcome: CentroidOutcome,
}

impl CentroidVerdict {
    /// The solution when the outcome is unique-c.
    pub fn solution(&self) -> Option<&CentroidSolution> {
        match self.outcome {
            CentroidOutcome::UniqueC => self.raw.as_ref(),
            _ => None,
        }
    }
}

/// Solves `u2 = p u0 - q u1 + b eta0*` and returns `c = q / p`.
pub fn solve_centroid_condition(case: &CentroidCase) -> Result<CentroidVerdict, KpsError> {
    let u0 = match &case.u0_override {
        Some(u) => u.clone(),
        None => anticanonical_vector(&case.generators)?,
    };
    let (_, u2) = reeb_cross_section_centroid(case)?;
    let m = columns(&u0, &-&case.u1, &case.eta0_star);
    if case.u1.is_zero() || u0.cross(&case.u1).is_zero() {
        return Ok(CentroidVerdict { u0, u2, raw: None, outcome: CentroidOutcome::Indeterminate { rank: rank3(&m) } });
    }
    let pqb = match solve_linear3(&m, &u2) {
        Ok(v) => v,
        Err(ExactError::Singular { rank }) => {
            return Ok(CentroidVerdict { u0, u2, raw: None, outcome: CentroidOutcome::Indeterminate { rank } })
        }
        Err(e) => return Err(e.into()),
    };
    let [p, q, b] = pqb.to_array();
    let raw = CentroidSolution { c: &q / &p, a: p.clone(), b: b.clone() };
    let outcome =
        if p.is_positive() && b.is_positive() { CentroidOutcome::UniqueC } else { CentroidOutcome::NoSolution };
    Ok(CentroidVerdict { u0, u2, raw: Some(raw), outcome })
}
