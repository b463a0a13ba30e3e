use num_traits::{Signed, Zero};

use super::{VolumeError, VolumeProfile};
use crate::exact::{int, PiecewiseQuadratic, Poly, Rat};

/// Intersection data of a surface whose Neron-Severi space is spanned by a
/// pulled back class `H` and an exceptional divisor `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoRayModel {
    /// `H^2 > 0`
    pub h2: Rat,
    /// `-E^2 > 0`
    pub e: Rat,
    /// `H.E`, zero for a pullback
    pub cross: Rat,
    /// `(a, b)` with the negative curve `C = aH - bE`; `None` when the Mori
    /// cone is spanned by `E` and a nef class.
    pub neg_curve: Option<(Rat, Rat)>,
}

/// The class `h H - e E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Class {
    pub h: Rat,
    pub e: Rat,
}

impl Class {
    pub fn new(h: Rat, e: Rat) -> Self {
        Class { h, e }
    }
}

impl TwoRayModel {
    pub fn dot(&self, a: &Class, b: &Class) -> Rat {
        &a.h * &b.h * &self.h2 - (&a.h * &b.e + &a.e * &b.h) * &self.cross - &a.e * &b.e * &self.e
    }

    pub fn neg_curve_square(&self) -> Option<Rat> {
        self.neg_curve.as_ref().map(|(a, b)| {
            let c = Class::new(a.clone(), b.clone());
            self.dot(&c, &c)
        })
    }

    fn validate(&self) -> Result<(), VolumeError> {
        if !self.h2.is_positive() {
            return Err(VolumeError::Model("H^2 must be positive".into()));
        }
        if !self.e.is_positive() {
            return Err(VolumeError::Model("E^2 must be negative".into()));
        }
        if let Some(sq) = self.neg_curve_square() {
            if sq.is_positive() {
                return Err(VolumeError::Model(format!("curve has positive square {sq}")));
            }
        }
        Ok(())
    }
}

fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rat::new(sn, sd))
}

/// Volume of `L - tE` via Zariski decomposition against the negative curve.
///
/// `l` is `L = coefH H - coefE E`. Until `L - tE` meets the negative curve
/// the volume is `(L - tE)^2`; afterwards the negative part is subtracted,
/// which leaves the square of the component orthogonal to the curve.
pub fn volume_two_ray(m: &TwoRayModel, l: &Class) -> Result<VolumeProfile, VolumeError> {
    m.validate()?;
    let unit = Class::new(Rat::zero(), int(1));
    let ll = m.dot(l, l);
    if !ll.is_positive() {
        return Err(VolumeError::NotBig(ll));
    }
    // (L - tE)^2 as a polynomial in t
    let square = Poly::new(vec![ll.clone(), int(2) * m.dot(l, &unit), m.dot(&unit, &unit)]);

    let binding = match &m.neg_curve {
        Some((a, b)) => {
            let c = Class::new(a.clone(), b.clone());
            let p0 = m.dot(l, &c);
            if p0.is_negative() {
                return Err(VolumeError::NotNef(p0));
            }
            let p1 = m.dot(&unit, &c);
            p1.is_negative().then(|| (Poly::linear(p0, p1), m.dot(&c, &c)))
        }
        None => None,
    };

    let Some((pairing, c2)) = binding else {
        // vol = (L - tE)^2 down to its positive root
        let (c0, c1, c2) = (square.coeff(0), square.coeff(1), square.coeff(2));
        let disc = &c1 * &c1 - int(4) * &c2 * &c0;
        let root = rational_sqrt(&disc).ok_or(VolumeError::IrrationalThreshold)?;
        let t_max = (-&c1 - root) / (int(2) * &c2);
        let profile = PiecewiseQuadratic::from_intervals(vec![(Rat::zero(), t_max.clone(), square)])?;
        return Ok(VolumeProfile { profile, nef_threshold: t_max.clone(), pseff_threshold: t_max });
    };

    let t_nef = -pairing.coeff(0) / pairing.coeff(1);
    let at_nef = square.eval(&t_nef);
    if at_nef.is_negative() {
        return Err(VolumeError::Model("volume vanishes before the nef threshold".into()));
    }
    if c2.is_zero() {
        let profile = PiecewiseQuadratic::from_intervals(vec![(Rat::zero(), t_nef.clone(), square)])?;
        return Ok(VolumeProfile { profile, nef_threshold: t_nef.clone(), pseff_threshold: t_nef });
    }
    let after = &square - &(&pairing * &pairing).scale(&c2.recip());
    if after.coeff(2).is_zero() {
        return Err(VolumeError::Model("orthogonal complement of the curve is isotropic".into()));
    }
    let t_max = -after.coeff(1) / (int(2) * after.coeff(2));
    if !after.eval(&t_max).is_zero() || t_max < t_nef {
        return Err(VolumeError::Model("positive part does not vanish at a single threshold".into()));
    }
    let profile = PiecewiseQuadratic::from_intervals(vec![
        (Rat::zero(), t_nef.clone(), square),
        (t_nef.clone(), t_max.clone(), after),
    ])?;
    Ok(VolumeProfile { profile, nef_threshold: t_nef, pseff_threshold: t_max })
}
