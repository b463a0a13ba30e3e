use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{fmt_rat, int, ExactError, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vec2 {
    pub x: Rat,
    pub y: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vec3 {
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

/// Row-major 3x3 matrix.
pub type Mat3 = [[Rat; 3]; 3];

impl Vec2 {
    pub fn new(x: Rat, y: Rat) -> Self {
        Vec2 { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Vec2 { x: int(x), y: int(y) }
    }

    pub fn dot(&self, o: &Vec2) -> Rat {
        &self.x * &o.x + &self.y * &o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(&self, o: &Vec2) -> Rat {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn scale(&self, k: &Rat) -> Vec2 {
        Vec2 { x: &self.x * k, y: &self.y * k }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl Vec3 {
    pub fn new(x: Rat, y: Rat, z: Rat) -> Self {
        Vec3 { x, y, z }
    }

    pub fn ints(x: i64, y: i64, z: i64) -> Self {
        Vec3 { x: int(x), y: int(y), z: int(z) }
    }

    pub fn zero() -> Self {
        Vec3::ints(0, 0, 0)
    }

    pub fn to_array(&self) -> [Rat; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn from_array([x, y, z]: [Rat; 3]) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(&self, o: &Vec3) -> Rat {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        Vec3 {
            x: &self.y * &o.z - &self.z * &o.y,
            y: &self.z * &o.x - &self.x * &o.z,
            z: &self.x * &o.y - &self.y * &o.x,
        }
    }

    pub fn scale(&self, k: &Rat) -> Vec3 {
        Vec3 { x: &self.x * k, y: &self.y * k, z: &self.z * k }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

macro_rules! vec_ops {
    ($t:ident, $($f:ident),+) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                $t { $($f: &self.$f + &o.$f),+ }
            }
        }
        impl Sub for &$t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                $t { $($f: &self.$f - &o.$f),+ }
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t { $($f: -&self.$f),+ }
            }
        }
        impl Mul<&Rat> for &$t {
            type Output = $t;
            fn mul(self, k: &Rat) -> $t {
                self.scale(k)
            }
        }
    };
}

vec_ops!(Vec2, x, y);
vec_ops!(Vec3, x, y, z);

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_rat(&self.x), fmt_rat(&self.y))
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", fmt_rat(&self.x), fmt_rat(&self.y), fmt_rat(&self.z))
    }
}

pub fn det3(m: &Mat3) -> Rat {
    let r0 = Vec3::from_array(m[0].clone());
    let r1 = Vec3::from_array(m[1].clone());
    let r2 = Vec3::from_array(m[2].clone());
    r0.dot(&r1.cross(&r2))
}

pub fn rank3(m: &Mat3) -> usize {
    let mut a: Vec<Vec<Rat>> = m.iter().map(|r| r.to_vec()).collect();
    let mut rank = 0;
    for col in 0..3 {
        let Some(p) = (rank..3).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = &row[col] / &pivot[col];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Solves `m x = rhs` by Cramer's rule.
pub fn solve_linear3(m: &Mat3, rhs: &Vec3) -> Result<Vec3, ExactError> {
    let d = det3(m);
    if d.is_zero() {
        return Err(ExactError::Singular { rank: rank3(m) });
    }
    let b = rhs.to_array();
    let mut out: [Rat; 3] = [Rat::zero(), Rat::zero(), Rat::zero()];
    for (col, slot) in out.iter_mut().enumerate() {
        let mut mc = m.clone();
        for row in 0..3 {
            mc[row][col] = b[row].clone();
        }
        *slot = det3(&mc) / &d;
    }
    Ok(Vec3::from_array(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: [[i64; 3]; 3]) -> Mat3 {
        rows.map(|r| r.map(int))
    }

    #[test]
    fn identity_solve() {
        let x = solve_linear3(&m([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), &Vec3::ints(7, 6, -1));
        assert_eq!(x.unwrap(), Vec3::ints(7, 6, -1));
    }

    #[test]
    fn recovers_anticanonical_vector() {
        let x = solve_linear3(&m([[0, 0, -1], [-1, 1, -2], [1, 0, 6]]), &Vec3::ints(1, 1, 1));
        assert_eq!(x.unwrap(), Vec3::ints(7, 6, -1));
    }

    #[test]
    fn singular_reports_rank() {
        let r = solve_linear3(&m([[1, 2, 3], [2, 4, 6], [0, 1, 1]]), &Vec3::ints(1, 1, 1));
        assert_eq!(r, Err(ExactError::Singular { rank: 2 }));
        let r = solve_linear3(&m([[0, 0, 0], [0, 0, 0], [0, 0, 0]]), &Vec3::zero());
        assert_eq!(r, Err(ExactError::Singular { rank: 0 }));
    }

    #[test]
    fn cross_is_orthogonal() {
        let a = Vec3::ints(1, 2, 3);
        let b = Vec3::ints(-4, 0, 5);
        let c = a.cross(&b);
        assert!(c.dot(&a).is_zero() && c.dot(&b).is_zero());
    }
}
