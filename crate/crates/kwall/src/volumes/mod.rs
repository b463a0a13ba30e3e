//! Volume profiles `t -> vol(L - t v)` and the S-invariant.
//!
//! Two engines compute the same profiles: [`volume_two_ray`] works from
//! intersection numbers on a Picard rank two model, [`volume_toric`] clips a
//! moment polygon. [`ToricSurface`] produces inputs for both from one fan so
//! they can be compared.

mod toric;
mod two_ray;

pub use toric::{volume_toric, MomentPolygon, ToricSurface, ToricValuation};
pub use two_ray::{volume_two_ray, Class, TwoRayModel};

use crate::exact::{integrate, ExactError, PiecewiseQuadratic, Rat};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VolumeError {
    #[error("invalid model: {0}")]
    Model(String),
    #[error("polarization is not big: vol(L) = {0}")]
    NotBig(Rat),
    #[error("polarization is negative on the curve: L.C = {0}")]
    NotNef(Rat),
    #[error("pseudoeffective threshold is irrational")]
    IrrationalThreshold,
    #[error("valuation direction is zero")]
    ZeroDirection,
    #[error("moment polygon is degenerate")]
    DegeneratePolygon,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A volume function together with its nef and pseudoeffective thresholds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeProfile {
    pub profile: PiecewiseQuadratic,
    pub nef_threshold: Rat,
    pub pseff_threshold: Rat,
}

impl VolumeProfile {
    pub fn volume(&self) -> Rat {
        self.profile.eval(&Rat::zero())
    }

    pub fn at(&self, t: &Rat) -> Rat {
        self.profile.eval(t)
    }
}

/// `S(c) = (alpha - beta c) * s0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SInvariant {
    pub s0: Rat,
    pub alpha: Rat,
    pub beta: Rat,
}

impl SInvariant {
    pub fn at(&self, c: &Rat) -> Rat {
        (&self.alpha - &self.beta * c) * &self.s0
    }
}

/// Normalised integral `S0 = int_0^inf vol / vol(L)`, packaged with the
/// anticanonical scale `-K - cD ~ (alpha - beta c) L`.
pub fn s_invariant(profile: &VolumeProfile, alpha: Rat, beta: Rat) -> Result<SInvariant, VolumeError> {
    let vol = profile.volume();
    if vol <= Rat::zero() {
        return Err(VolumeError::NotBig(vol));
    }
    let s0 = integrate(&profile.profile, &Rat::zero())? / vol;
    Ok(SInvariant { s0, alpha, beta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, Poly};

    #[test]
    fn triangle_profile_has_half_s0() {
        let f = PiecewiseQuadratic::new(vec![int(0), int(1)], vec![Poly::linear(int(1), int(-1))]).unwrap();
        let vp = VolumeProfile { profile: f, nef_threshold: int(0), pseff_threshold: int(1) };
        let s = s_invariant(&vp, int(1), int(0)).unwrap();
        assert_eq!(s.s0, rat(1, 2));
        assert_eq!(s.at(&int(7)), rat(1, 2));
    }

    #[test]
    fn zero_volume_is_rejected() {
        let vp =
            VolumeProfile { profile: PiecewiseQuadratic::zero(int(0)), nef_threshold: int(0), pseff_threshold: int(0) };
        assert!(matches!(s_invariant(&vp, int(3), int(5)), Err(VolumeError::NotBig(_))));
    }
}
