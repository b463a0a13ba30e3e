//! Hilbert-Mumford weights for plane curves, stability of the weighted
//! systems of binary forms attached to curves on `P(1,1,4)`, and the degree
//! of the CM line bundle on spaces of hypersurfaces.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{fmt_rat, int, Interval, Poly, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GitError {
    #[error("support is empty")]
    EmptySupport,
    #[error("monomial {0:?} does not have degree {1}")]
    WrongDegree((u32, u32, u32), u32),
    #[error("one-parameter subgroup weights must sum to zero and not all vanish")]
    BadOnePs,
    #[error("all forms vanish")]
    ZeroSystem,
    #[error("invalid system: {0}")]
    InvalidSystem(String),
    #[error("need d >= 2, got {0}")]
    DegreeTooSmall(u64),
}

/// Monomials `x^a y^b z^c` of a plane curve of degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurveSupport {
    pub degree: u32,
    monomials: BTreeSet<(u32, u32, u32)>,
    torus_fixed: bool,
}

impl PlaneCurveSupport {
    pub fn new(degree: u32, monomials: impl IntoIterator<Item = (u32, u32, u32)>) -> Result<Self, GitError> {
        let monomials: BTreeSet<_> = monomials.into_iter().collect();
        if monomials.is_empty() {
            return Err(GitError::EmptySupport);
        }
        if let Some(&m) = monomials.iter().find(|m| m.0 + m.1 + m.2 != degree) {
            return Err(GitError::WrongDegree(m, degree));
        }
        // fixed by a nontrivial subtorus iff the exponent differences span at most a line
        let first = *monomials.iter().next().expect("nonempty");
        let diffs: Vec<[i64; 3]> = monomials
            .iter()
            .map(|m| [m.0 as i64 - first.0 as i64, m.1 as i64 - first.1 as i64, m.2 as i64 - first.2 as i64])
            .filter(|d| d.iter().any(|&x| x != 0))
            .collect();
        let independent = diffs.iter().any(|a| {
            diffs.iter().any(|b| {
                a[0] * b[1] - a[1] * b[0] != 0 || a[1] * b[2] - a[2] * b[1] != 0 || a[0] * b[2] - a[2] * b[0] != 0
            })
        });
        Ok(PlaneCurveSupport { degree, monomials, torus_fixed: !independent })
    }

    pub fn monomials(&self) -> &BTreeSet<(u32, u32, u32)> {
        &self.monomials
    }

    /// Whether some nontrivial one-parameter subgroup of the diagonal torus
    /// fixes every curve with this support.
    pub fn torus_fixed(&self) -> bool {
        self.torus_fixed
    }
}

/// A diagonal one-parameter subgroup of `SL(3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePs {
    pub weights: [i64; 3],
}

impl OnePs {
    pub fn new(weights: [i64; 3]) -> Result<Self, GitError> {
        if weights.iter().sum::<i64>() != 0 || weights.iter().all(|&w| w == 0) {
            return Err(GitError::BadOnePs);
        }
        Ok(OnePs { weights })
    }
}

/// `mu = -min <e, lambda>` over the support; `mu < 0` certifies that
/// `lambda` destabilises the curve.
pub fn hm_weight_plane(c: &PlaneCurveSupport, lambda: &OnePs) -> Rat {
    let w = &lambda.weights;
    let min = c
        .monomials
        .iter()
        .map(|&(a, b, cc)| a as i64 * w[0] + b as i64 * w[1] + cc as i64 * w[2])
        .min()
        .expect("nonempty");
    int(-min)
}

/// A binary form of degree `n`, stored as `P(t) = f(t, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    pub degree: u32,
    poly: Poly,
}

impl BinaryForm {
    /// From `(i, c)` meaning `c x^i y^(n - i)`.
    pub fn new(degree: u32, terms: impl IntoIterator<Item = (u32, Rat)>) -> Result<Self, GitError> {
        let mut coeffs = vec![Rat::zero(); degree as usize + 1];
        for (i, c) in terms {
            if i > degree {
                return Err(GitError::InvalidSystem(format!("exponent {i} exceeds degree {degree}")));
            }
            coeffs[i as usize] += c;
        }
        Ok(BinaryForm { degree, poly: Poly::new(coeffs) })
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Nonzero `(x-exponent, coefficient)` pairs.
    pub fn terms(&self) -> Vec<(u32, Rat)> {
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32, c.clone()))
            .collect()
    }

    fn mult_at_infinity(&self) -> u32 {
        self.degree - self.poly.degree().unwrap_or(0) as u32
    }

    /// The same form in coordinates where `p` becomes `x' = 0`, as
    /// `(x'-exponent, coefficient)` pairs.
    fn terms_toward(&self, p: &PointP1) -> Vec<(u32, Rat)> {
        match p {
            PointP1::Finite(r) => {
                let moved = self.poly.compose_affine(&Rat::one(), r);
                BinaryForm { degree: self.degree, poly: moved }.terms()
            }
            PointP1::Infinity => self.terms().into_iter().map(|(i, c)| (self.degree - i, c)).collect(),
        }
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(i, c)| {
                let mut parts: Vec<String> = Vec::new();
                if c != Rat::one() || self.degree == 0 {
                    parts.push(fmt_rat(&c));
                }
                for (v, e) in [("x", i), ("y", self.degree - i)] {
                    match e {
                        0 => {}
                        1 => parts.push(v.into()),
                        _ => parts.push(format!("{v}^{e}")),
                    }
                }
                parts.join("*")
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// The data `(f_{4j})` (even `d`) or `(f_6, f_{4j+2})` (odd `d`) of a
/// degree `2d` curve on `P(1,1,4)`, keyed by the block index `j`.
///
/// Even blocks run over `j = 2..=d/2` with degree `4j`; odd blocks over
/// `j = 1..=(d-1)/2` with degree `4j + 2`, and block `1` only allows `x^6`
/// and `y^6`. The scaling weight of block `j` is `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryFormSystem {
    pub parity: Parity,
    pub d: u32,
    pub blocks: BTreeMap<u32, BinaryForm>,
}

impl BinaryFormSystem {
    pub fn block_degree(parity: Parity, j: u32) -> u32 {
        match parity {
            Parity::Even => 4 * j,
            Parity::Odd => 4 * j + 2,
        }
    }

    pub fn new(d: u32, blocks: impl IntoIterator<Item = (u32, BinaryForm)>) -> Result<Self, GitError> {
        let parity = if d.is_multiple_of(2) { Parity::Even } else { Parity::Odd };
        let range = match parity {
            Parity::Even => 2..=d / 2,
            Parity::Odd => 1..=(d.saturating_sub(1)) / 2,
        };
        let mut map = BTreeMap::new();
        for (j, f) in blocks {
            if !range.contains(&j) {
                return Err(GitError::InvalidSystem(format!("block {j} outside {range:?}")));
            }
            let want = Self::block_degree(parity, j);
            if f.degree != want {
                return Err(GitError::InvalidSystem(format!("block {j} must have degree {want}")));
            }
            if parity == Parity::Odd && j == 1 && f.terms().iter().any(|(i, _)| *i != 0 && *i != 6) {
                return Err(GitError::InvalidSystem("f_6 may only contain x^6 and y^6".into()));
            }
            if map.insert(j, f).is_some() {
                return Err(GitError::InvalidSystem(format!("block {j} given twice")));
            }
        }
        if map.values().all(|f| f.is_zero()) {
            return Err(GitError::ZeroSystem);
        }
        Ok(BinaryFormSystem { parity, d, blocks: map })
    }

    fn nonzero(&self) -> impl Iterator<Item = (&u32, &BinaryForm)> {
        self.blocks.iter().filter(|(_, f)| !f.is_zero())
    }
}

/// A point of `P^1`: `[r : 1]` or `[1 : 0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointP1 {
    Finite(Rat),
    Infinity,
}

impl fmt::Display for PointP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointP1::Finite(r) => write!(f, "[{} : 1]", fmt_rat(r)),
            PointP1::Infinity => f.write_str("[1 : 0]"),
        }
    }
}

/// A one-parameter subgroup used as a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Direction {
    /// The `SL(2)` subgroup `diag(t, 1/t)` in coordinates `x' = 0` at `p`.
    Toward(PointP1),
    /// Roots of an irreducible rational factor; only used for zero weights.
    TowardRootOf(Poly),
    /// The torus `(x, y) -> (t x, y / t)`, or its inverse.
    SigmaPrime { inverse: bool },
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Toward(p) => write!(f, "SL(2) 1-PS toward {p}"),
            Direction::TowardRootOf(q) => write!(f, "SL(2) 1-PS toward a root of {q}"),
            Direction::SigmaPrime { inverse: false } => f.write_str("sigma' (t x, y/t)"),
            Direction::SigmaPrime { inverse: true } => f.write_str("sigma' (x/t, t y)"),
        }
    }
}

/// `(block j, x'-exponent, weight)` for every nonzero monomial.
pub type WeightTable = Vec<(u32, u32, i64)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub direction: Direction,
    pub weights: WeightTable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Polystability {
    /// Every monomial has weight zero along the certificate.
    Polystable,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BinaryVerdict {
    Stable,
    StrictlySemistable { certificate: Certificate, polystability: Polystability },
    Unstable { certificate: Certificate },
}

impl fmt::Display for BinaryVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryVerdict::Stable => f.write_str("stable"),
            BinaryVerdict::StrictlySemistable { polystability: Polystability::Polystable, .. } => {
                f.write_str("strictly semistable, polystable")
            }
            BinaryVerdict::StrictlySemistable { .. } => f.write_str("strictly semistable, polystability undetermined"),
            BinaryVerdict::Unstable { .. } => f.write_str("unstable"),
        }
    }
}

/// Weights of every nonzero monomial along a rational direction.
pub fn weights_along(s: &BinaryFormSystem, dir: &Direction) -> Option<WeightTable> {
    let mut out = Vec::new();
    for (&j, f) in s.nonzero() {
        let n = f.degree as i64;
        let terms = match dir {
            Direction::Toward(p) => f.terms_toward(p),
            Direction::SigmaPrime { .. } => f.terms(),
            Direction::TowardRootOf(_) => return None,
        };
        let flip = matches!(dir, Direction::SigmaPrime { inverse: true });
        for (i, _) in terms {
            let w = 2 * i as i64 - n;
            out.push((j, i, if flip { -w } else { w }));
        }
    }
    Some(out)
}

/// Recomputes the weights of an instability certificate from the raw forms
/// and checks that all are strictly positive.
pub fn replay_certificate(s: &BinaryFormSystem, cert: &Certificate) -> bool {
    match weights_along(s, &cert.direction) {
        Some(w) => !w.is_empty() && w.iter().all(|&(_, _, x)| x > 0),
        None => false,
    }
}

/// Pairwise coprime squarefree polynomials whose product has the same roots
/// as the product of the inputs. Every root of a base element has the same
/// multiplicity in each input, and rational roots get linear elements.
fn coprime_base(polys: &[Poly]) -> Vec<Poly> {
    // f = s_1 s_2 ... with s_k the squarefree product of roots of multiplicity >= k
    let mut base: Vec<Poly> = Vec::new();
    for p in polys.iter().filter(|p| p.degree().unwrap_or(0) > 0) {
        let mut g = p.clone();
        while g.degree().unwrap_or(0) > 0 {
            let s = g.div_rem(&Poly::gcd(&g, &g.derivative())).0.monic();
            g = g.div_rem(&s).0;
            base.push(s);
        }
    }
    loop {
        let mut split = None;
        'search: for a in 0..base.len() {
            for b in a + 1..base.len() {
                let g = Poly::gcd(&base[a], &base[b]);
                if g.degree().unwrap_or(0) > 0 {
                    split = Some((a, b, g));
                    break 'search;
                }
            }
        }
        let Some((a, b, g)) = split else { break };
        let pb = base.remove(b);
        let pa = base.remove(a);
        for p in [pa.div_rem(&g).0, pb.div_rem(&g).0, g] {
            if p.degree().unwrap_or(0) > 0 && !base.contains(&p.monic()) {
                base.push(p.monic());
            }
        }
    }
    let mut out = Vec::new();
    for b in base {
        let mut rest = b;
        for r in rest.rational_roots() {
            let lin = Poly::linear(-r, Rat::one());
            rest = rest.div_rem(&lin).0;
            out.push(lin);
        }
        if rest.degree().unwrap_or(0) > 0 {
            out.push(rest.monic());
        }
    }
    out
}

fn multiplicity(f: &Poly, b: &Poly) -> u32 {
    let mut f = f.clone();
    let mut m = 0;
    while !f.is_zero() {
        let (q, r) = f.div_rem(b);
        if !r.is_zero() {
            break;
        }
        f = q;
        m += 1;
    }
    m
}

/// GIT stability of the system under `SL(2)` (even `d`) or under the torus
/// `sigma'` (odd `d`).
///
/// For even `d` a point `p` of `P^1` destabilises iff every nonzero `f_{4j}`
/// vanishes to order `> 2j` at `p`; order `>= 2j` everywhere along `p` gives
/// strict semistability. The scaling by block weight does not enter, since
/// the quotient is taken on the weighted projective space of the blocks.
pub fn binary_system_stability(s: &BinaryFormSystem) -> BinaryVerdict {
    match s.parity {
        Parity::Even => even_stability(s),
        Parity::Odd => odd_stability(s),
    }
}

fn even_stability(s: &BinaryFormSystem) -> BinaryVerdict {
    let blocks: Vec<(u32, &BinaryForm)> = s.nonzero().map(|(&j, f)| (j, f)).collect();
    let polys: Vec<Poly> = blocks.iter().map(|(_, f)| f.poly.clone()).collect();
    let base = coprime_base(&polys);

    // multiplicity vectors at every candidate point
    let mut candidates: Vec<(Direction, Vec<u32>)> = Vec::new();
    candidates.push((Direction::Toward(PointP1::Infinity), blocks.iter().map(|(_, f)| f.mult_at_infinity()).collect()));
    for b in &base {
        let mults = blocks.iter().map(|(_, f)| multiplicity(&f.poly, b)).collect();
        let dir = if b.degree() == Some(1) {
            Direction::Toward(PointP1::Finite(-b.coeff(0) / b.coeff(1)))
        } else {
            Direction::TowardRootOf(b.clone())
        };
        candidates.push((dir, mults));
    }

    let beats =
        |m: &[u32], strict: bool| blocks.iter().zip(m).all(|((j, _), &k)| if strict { k > 2 * j } else { k >= 2 * j });
    if let Some((dir, _)) = candidates.iter().find(|(_, m)| beats(m, true)) {
        let weights = weights_along(s, dir).expect("strict instability forces a rational point");
        return BinaryVerdict::Unstable { certificate: Certificate { direction: dir.clone(), weights } };
    }
    let Some((dir, _)) = candidates.iter().find(|(_, m)| beats(m, false)) else {
        return BinaryVerdict::Stable;
    };
    let weights = weights_along(s, dir).unwrap_or_default();

    // fixed by a torus iff every block is c Q^{2j} for one squarefree quadratic Q
    let active: Vec<&(Direction, Vec<u32>)> = candidates.iter().filter(|(_, m)| m.iter().any(|&k| k > 0)).collect();
    let roots: u32 = active
        .iter()
        .map(|(d, _)| match d {
            Direction::TowardRootOf(b) => b.degree().unwrap_or(0) as u32,
            _ => 1,
        })
        .sum();
    let fixed = roots == 2 && active.iter().all(|(_, m)| blocks.iter().zip(m).all(|((j, _), &k)| k == 2 * j));
    let polystability = if fixed { Polystability::Polystable } else { Polystability::Undetermined };
    BinaryVerdict::StrictlySemistable { certificate: Certificate { direction: dir.clone(), weights }, polystability }
}

fn odd_stability(s: &BinaryFormSystem) -> BinaryVerdict {
    let dir = Direction::SigmaPrime { inverse: false };
    let weights = weights_along(s, &dir).expect("rational direction");
    let pos = weights.iter().any(|w| w.2 > 0);
    let neg = weights.iter().any(|w| w.2 < 0);
    let zero = weights.iter().any(|w| w.2 == 0);
    match (pos, neg, zero) {
        (true, true, _) => BinaryVerdict::Stable,
        (true, false, false) => BinaryVerdict::Unstable { certificate: Certificate { direction: dir, weights } },
        (false, true, false) => {
            let inv = Direction::SigmaPrime { inverse: true };
            let weights = weights_along(s, &inv).expect("rational direction");
            BinaryVerdict::Unstable { certificate: Certificate { direction: inv, weights } }
        }
        _ => {
            let polystability = if pos || neg { Polystability::Undetermined } else { Polystability::Polystable };
            // orient the certificate so every weight is nonnegative
            let dir = Direction::SigmaPrime { inverse: neg };
            let weights = weights_along(s, &dir).expect("rational direction");
            BinaryVerdict::StrictlySemistable { certificate: Certificate { direction: dir, weights }, polystability }
        }
    }
}

/// `(n + 1) c (n + 1 - d c)^n` as a polynomial in `c`.
pub fn cm_degree_poly(n: u32, d: u32) -> Poly {
    let inner = Poly::linear(int(n as i64 + 1), int(-(d as i64)));
    &Poly::monomial(int(n as i64 + 1), 1) * &inner.pow(n)
}

/// Degree of the CM line bundle on the space of degree `d` hypersurfaces in
/// `P^n` with coefficient `c`.
pub fn cm_degree(n: u32, d: u32, c: &Rat) -> Rat {
    cm_degree_poly(n, d).eval(c)
}

/// `(0, (n + 1)/d)`, the coefficients for which the CM degree is positive
/// and the pair is log Fano.
pub fn cm_positivity_window(n: u32, d: u64) -> Result<Interval, GitError> {
    if d < 2 {
        return Err(GitError::DegreeTooSmall(d));
    }
    let top = Rat::new((n as i64 + 1).into(), (d as i64).into());
    Ok(Interval::open(Rat::zero(), top).expect("positive endpoint"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn mono(n: u32, i: u32) -> BinaryForm {
        BinaryForm::new(n, [(i, int(1))]).unwrap()
    }

    #[test]
    fn forms_print_compactly() {
        let f = BinaryForm::new(8, [(5, int(1)), (0, rat(-2, 3)), (8, int(3))]).unwrap();
        assert_eq!(f.to_string(), "-2/3*y^8 + x^5*y^3 + 3*x^8");
        assert_eq!(BinaryForm::new(1, [(1, int(1))]).unwrap().to_string(), "x");
    }

    #[test]
    fn plane_weights() {
        let c = PlaneCurveSupport::new(5, [(1, 4, 0)]).unwrap();
        assert_eq!(hm_weight_plane(&c, &OnePs::new([-1, 2, -1]).unwrap()), int(-7));
        let q5 = PlaneCurveSupport::new(5, [(2, 2, 1), (1, 1, 3), (0, 0, 5)]).unwrap();
        assert_eq!(hm_weight_plane(&q5, &OnePs::new([-1, 1, 0]).unwrap()), int(0));
        assert!(q5.torus_fixed());
        assert!(!PlaneCurveSupport::new(2, [(2, 0, 0), (0, 2, 0), (0, 0, 2)]).unwrap().torus_fixed());
        assert_eq!(OnePs::new([0, 0, 0]), Err(GitError::BadOnePs));
        assert!(matches!(PlaneCurveSupport::new(3, [(1, 1, 0)]), Err(GitError::WrongDegree(..))));
    }

    #[test]
    fn octic_cases() {
        let s = BinaryFormSystem::new(4, [(2, mono(8, 5))]).unwrap();
        let v = binary_system_stability(&s);
        let BinaryVerdict::Unstable { certificate } = &v else { panic!("{v}") };
        assert!(replay_certificate(&s, certificate));

        let s = BinaryFormSystem::new(4, [(2, mono(8, 4))]).unwrap();
        assert!(matches!(
            binary_system_stability(&s),
            BinaryVerdict::StrictlySemistable { polystability: Polystability::Polystable, .. }
        ));
    }

    #[test]
    fn shifted_root_is_found() {
        // (x - 2y)^6 y^2
        let p = Poly::linear(int(-2), int(1)).pow(6);
        let terms: Vec<(u32, Rat)> = p.coeffs().iter().enumerate().map(|(i, c)| (i as u32, c.clone())).collect();
        let s = BinaryFormSystem::new(4, [(2, BinaryForm::new(8, terms).unwrap())]).unwrap();
        let BinaryVerdict::Unstable { certificate } = binary_system_stability(&s) else { panic!() };
        assert_eq!(certificate.direction, Direction::Toward(PointP1::Finite(int(2))));
        assert!(replay_certificate(&s, &certificate));
    }

    #[test]
    fn irrational_double_root_is_polystable() {
        // (x^2 + y^2)^4
        let q = Poly::new(vec![int(1), int(0), int(1)]).pow(4);
        let terms: Vec<(u32, Rat)> = q.coeffs().iter().enumerate().map(|(i, c)| (i as u32, c.clone())).collect();
        let s = BinaryFormSystem::new(4, [(2, BinaryForm::new(8, terms).unwrap())]).unwrap();
        assert!(matches!(
            binary_system_stability(&s),
            BinaryVerdict::StrictlySemistable { polystability: Polystability::Polystable, .. }
        ));
    }

    #[test]
    fn two_rational_roots_are_separated() {
        // x^3 (x - y/4)^4 y
        let f = &Poly::monomial(int(1), 3) * &Poly::linear(rat(-1, 4), int(1)).pow(4);
        let terms = f.coeffs().iter().enumerate().map(|(i, c)| (i as u32, c.clone()));
        let s = BinaryFormSystem::new(4, [(2, BinaryForm::new(8, terms).unwrap())]).unwrap();
        match binary_system_stability(&s) {
            BinaryVerdict::StrictlySemistable { certificate, polystability } => {
                assert_eq!(certificate.direction, Direction::Toward(PointP1::Finite(rat(1, 4))));
                assert_eq!(polystability, Polystability::Undetermined);
            }
            v => panic!("{v}"),
        }
    }

    #[test]
    fn generic_octic_is_stable() {
        let f = BinaryForm::new(8, [(8, int(1)), (0, int(1)), (3, int(2))]).unwrap();
        let s = BinaryFormSystem::new(4, [(2, f)]).unwrap();
        assert_eq!(binary_system_stability(&s), BinaryVerdict::Stable);
    }

    #[test]
    fn odd_sextic_block() {
        let f = BinaryForm::new(6, [(6, int(1)), (0, int(1))]).unwrap();
        let s = BinaryFormSystem::new(5, [(1, f)]).unwrap();
        assert_eq!(binary_system_stability(&s), BinaryVerdict::Stable);
        let s = BinaryFormSystem::new(5, [(1, mono(6, 6))]).unwrap();
        let BinaryVerdict::Unstable { certificate } = binary_system_stability(&s) else { panic!() };
        assert!(replay_certificate(&s, &certificate));
        let s = BinaryFormSystem::new(5, [(1, mono(6, 0))]).unwrap();
        let BinaryVerdict::Unstable { certificate } = binary_system_stability(&s) else { panic!() };
        assert!(replay_certificate(&s, &certificate));
        let bad = BinaryForm::new(6, [(3, int(1))]).unwrap();
        assert!(BinaryFormSystem::new(5, [(1, bad)]).is_err());
    }

    #[test]
    fn zero_system_is_rejected() {
        let z = BinaryForm::new(8, []).unwrap();
        assert_eq!(BinaryFormSystem::new(4, [(2, z)]), Err(GitError::ZeroSystem));
    }

    #[test]
    fn cm_degrees() {
        assert_eq!(cm_degree(3, 4, &rat(1, 2)), int(16));
        assert_eq!(cm_degree(2, 5, &rat(3, 5)), int(0));
        assert_eq!(cm_positivity_window(4, 2).unwrap(), Interval::open(int(0), rat(5, 2)).unwrap());
        assert_eq!(cm_positivity_window(2, 3).unwrap(), Interval::open(int(0), int(1)).unwrap());
    }
}
