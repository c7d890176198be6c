use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::table::OCTONION_TABLE;
use super::{Complex, Coordinates, Quaternion};
use crate::error::{Error, Result};

/// An octonion `x0 e0 + ... + x7 e7`, multiplied through the signed basis
/// table in [`super::table`].
///
/// Octonions are not associative: every product of three or more factors in
/// this crate is written with explicit grouping.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Octonion {
    pub x: [f64; 8],
}

impl Octonion {
    pub const ZERO: Octonion = Octonion { x: [0.0; 8] };
    pub const ONE: Octonion = Octonion {
        x: [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    };

    pub const fn new(x: [f64; 8]) -> Self {
        Octonion { x }
    }

    pub fn basis(i: usize) -> Self {
        let mut x = [0.0; 8];
        x[i] = 1.0;
        Octonion { x }
    }

    pub const fn from_real(r: f64) -> Self {
        Octonion {
            x: [r, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        }
    }

    pub fn from_complex(z: Complex) -> Self {
        Octonion::from_quaternion(Quaternion::from_complex(z))
    }

    pub fn from_quaternion(q: Quaternion) -> Self {
        Octonion::from_quaternion_pair(q, Quaternion::ZERO)
    }

    /// `q1 + q2 e4`: coordinates `x0..x3` from `q1`, `x4..x7` from `q2`.
    pub fn from_quaternion_pair(q1: Quaternion, q2: Quaternion) -> Self {
        let mut x = [0.0; 8];
        x[..4].copy_from_slice(&q1.x);
        x[4..].copy_from_slice(&q2.x);
        Octonion { x }
    }

    pub fn to_quaternion_pair(self) -> (Quaternion, Quaternion) {
        let mut a = [0.0; 4];
        let mut b = [0.0; 4];
        a.copy_from_slice(&self.x[..4]);
        b.copy_from_slice(&self.x[4..]);
        (Quaternion { x: a }, Quaternion { x: b })
    }

    /// `z0 + z1 e2 + (z2 + z3 e2) e4`.
    pub fn from_complex_quad(z: [Complex; 4]) -> Self {
        Octonion::from_quaternion_pair(
            Quaternion::from_complex_pair(z[0], z[1]),
            Quaternion::from_complex_pair(z[2], z[3]),
        )
    }

    pub fn to_complex_quad(self) -> [Complex; 4] {
        let (q1, q2) = self.to_quaternion_pair();
        let (z0, z1) = q1.to_complex_pair();
        let (z2, z3) = q2.to_complex_pair();
        [z0, z1, z2, z3]
    }

    pub fn re(self) -> f64 {
        self.x[0]
    }

    pub fn conj(self) -> Self {
        let mut x = self.x.map(|c| -c);
        x[0] = self.x[0];
        Octonion { x }
    }

    /// Negates the `e7` coordinate only.
    pub fn tilde(self) -> Self {
        let mut x = self.x;
        x[7] = -x[7];
        Octonion { x }
    }

    pub fn norm_sqr(self) -> f64 {
        self.x.iter().map(|c| c * c).sum()
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(self, s: f64) -> Self {
        Octonion {
            x: self.x.map(|c| c * s),
        }
    }

    pub fn inv(self) -> Result<Self> {
        let n = self.norm_sqr();
        if n == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(1.0 / n))
    }

    /// Product through the quaternion-pair decomposition
    /// `(a + b e4)(c + d e4) = (ac - conj(d) b) + (d a + b conj(c)) e4`.
    ///
    /// Independent of the basis table; used to cross-check it.
    pub fn mul_via_quaternion_pairs(self, rhs: Octonion) -> Octonion {
        let (a, b) = self.to_quaternion_pair();
        let (c, d) = rhs.to_quaternion_pair();
        Octonion::from_quaternion_pair(a * c - d.conj() * b, d * a + b * c.conj())
    }
}

impl Coordinates for Octonion {
    const DIM: usize = 8;

    fn coord(&self, i: usize) -> f64 {
        self.x[i]
    }

    fn from_coords(c: &[f64]) -> Option<Self> {
        Some(Octonion {
            x: c.try_into().ok()?,
        })
    }
}

impl From<Quaternion> for Octonion {
    fn from(q: Quaternion) -> Self {
        Octonion::from_quaternion(q)
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        Octonion {
            x: std::array::from_fn(|i| self.x[i] + rhs.x[i]),
        }
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Octonion) {
        *self = *self + rhs;
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        Octonion {
            x: std::array::from_fn(|i| self.x[i] - rhs.x[i]),
        }
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion {
            x: self.x.map(|c| -c),
        }
    }
}

impl Mul for Octonion {
    type Output = Octonion;

    fn mul(self, rhs: Octonion) -> Octonion {
        let mut out = [0.0; 8];
        for (i, &a) in self.x.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in rhs.x.iter().enumerate() {
                let p = OCTONION_TABLE.product(i, j);
                out[p.index] += f64::from(p.sign) * a * b;
            }
        }
        Octonion { x: out }
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: f64) -> Octonion {
        self.scale(rhs)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::fmt_coords(&self.x, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Octonion {
        Octonion::basis(i)
    }

    #[test]
    fn table_examples() {
        assert_eq!(e(2) * e(4), e(6));
        assert_eq!(e(7) * e(2), e(5));
        assert_eq!(e(1) * e(2), e(3));
    }

    #[test]
    fn non_associative_witness() {
        assert_eq!((e(1) * e(2)) * e(4), e(7));
        assert_eq!(e(1) * (e(2) * e(4)), -e(7));
    }

    #[test]
    fn tilde_flips_only_e7() {
        assert_eq!(e(7).tilde(), -e(7));
        for i in 0..7 {
            assert_eq!(e(i).tilde(), e(i));
        }
        let o = Octonion::new([0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8]);
        assert_eq!(o.tilde().tilde(), o);
    }

    #[test]
    fn quaternion_pair_layout() {
        assert_eq!(
            Octonion::from_quaternion_pair(Quaternion::ONE, Quaternion::ZERO),
            e(0)
        );
        assert_eq!(
            Octonion::from_quaternion_pair(Quaternion::ZERO, Quaternion::ONE),
            e(4)
        );
        // q2 e4 places q2 on x4..x7
        let q = Quaternion::new(0.5, -1.0, 2.0, 0.25);
        assert_eq!(
            Octonion::from(q) * e(4),
            Octonion::from_quaternion_pair(Quaternion::ZERO, q)
        );
        let o = Octonion::new([1.0, -2.0, 3.0, -4.0, 5.0, -6.0, 7.0, -8.0]);
        let (a, b) = o.to_quaternion_pair();
        assert_eq!(Octonion::from_quaternion_pair(a, b), o);
        assert_eq!(Octonion::from_complex_quad(o.to_complex_quad()), o);
    }

    #[test]
    fn inverses() {
        assert_eq!(e(5).inv().unwrap(), -e(5));
        assert_eq!(
            Octonion::from_real(2.0).inv().unwrap(),
            Octonion::from_real(0.5)
        );
        assert_eq!(Octonion::ZERO.inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn quaternion_block_matches_hamilton_product() {
        for i in 0..4 {
            for j in 0..4 {
                let o = e(i) * e(j);
                let q = Quaternion::basis(i) * Quaternion::basis(j);
                assert_eq!(o, Octonion::from(q), "e{i} e{j}");
            }
        }
    }

    #[test]
    fn doubling_route_matches_table_on_basis() {
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(
                    e(i) * e(j),
                    e(i).mul_via_quaternion_pairs(e(j)),
                    "e{i} e{j}"
                );
            }
        }
    }
}
