use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{Complex, Coordinates};
use crate::error::{Error, Result};

/// A quaternion `x0 e0 + x1 e1 + x2 e2 + x3 e3` with `e1 e2 = e3`,
/// `e2 e3 = e1`, `e3 e1 = e2`.
///
/// Complex numbers embed on the `e0, e1` plane, so `z1 + z2 e2` has
/// coordinates `(re z1, im z1, re z2, im z2)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Quaternion {
    pub x: [f64; 4],
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion { x: [0.0; 4] };
    pub const ONE: Quaternion = Quaternion {
        x: [1.0, 0.0, 0.0, 0.0],
    };

    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Quaternion {
            x: [x0, x1, x2, x3],
        }
    }

    pub fn basis(i: usize) -> Self {
        let mut x = [0.0; 4];
        x[i] = 1.0;
        Quaternion { x }
    }

    pub const fn from_real(r: f64) -> Self {
        Quaternion::new(r, 0.0, 0.0, 0.0)
    }

    pub fn from_complex(z: Complex) -> Self {
        Quaternion::new(z.re, z.im, 0.0, 0.0)
    }

    /// `z1 + z2 e2`.
    pub fn from_complex_pair(z1: Complex, z2: Complex) -> Self {
        Quaternion::new(z1.re, z1.im, z2.re, z2.im)
    }

    pub fn to_complex_pair(self) -> (Complex, Complex) {
        let [x0, x1, x2, x3] = self.x;
        (Complex::new(x0, x1), Complex::new(x2, x3))
    }

    pub fn re(self) -> f64 {
        self.x[0]
    }

    pub fn conj(self) -> Self {
        let [x0, x1, x2, x3] = self.x;
        Quaternion::new(x0, -x1, -x2, -x3)
    }

    pub fn norm_sqr(self) -> f64 {
        self.x.iter().map(|c| c * c).sum()
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(self, s: f64) -> Self {
        Quaternion {
            x: self.x.map(|c| c * s),
        }
    }

    /// `conj(q) / |q|^2`; zero has no inverse.
    pub fn inv(self) -> Result<Self> {
        let n = self.norm_sqr();
        if n == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(1.0 / n))
    }
}

impl Coordinates for Quaternion {
    const DIM: usize = 4;

    fn coord(&self, i: usize) -> f64 {
        self.x[i]
    }

    fn from_coords(c: &[f64]) -> Option<Self> {
        Some(Quaternion {
            x: c.try_into().ok()?,
        })
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion {
            x: std::array::from_fn(|i| self.x[i] + rhs.x[i]),
        }
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, rhs: Quaternion) {
        *self = *self + rhs;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion {
            x: std::array::from_fn(|i| self.x[i] - rhs.x[i]),
        }
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion {
            x: self.x.map(|c| -c),
        }
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, rhs: Quaternion) -> Quaternion {
        let [a0, a1, a2, a3] = self.x;
        let [b0, b1, b2, b3] = rhs.x;
        Quaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: f64) -> Quaternion {
        self.scale(rhs)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::fmt_coords(&self.x, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Quaternion {
        Quaternion::basis(i)
    }

    #[test]
    fn unit_products() {
        assert_eq!(e(1) * e(2), e(3));
        assert_eq!(e(2) * e(1), -e(3));
        assert_eq!(e(2) * e(3), e(1));
        assert_eq!(e(3) * e(1), e(2));
        for i in 1..4 {
            assert_eq!(e(i) * e(i), -e(0));
        }
    }

    #[test]
    fn identity_element() {
        let q = Quaternion::new(0.3, -1.2, 2.5, 0.7);
        assert_eq!(e(0) * q, q);
        assert_eq!(q * e(0), q);
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(e(1).conj(), -e(1));
        assert_eq!(
            Quaternion::from_real(2.5).conj(),
            Quaternion::from_real(2.5)
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(e(2).inv().unwrap(), -e(2));
        assert_eq!(
            Quaternion::from_real(2.0).inv().unwrap(),
            Quaternion::from_real(0.5)
        );
        assert_eq!(Quaternion::ZERO.inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn complex_pair_layout() {
        // e2 z = conj(z) e2
        let z = Complex::new(0.4, -1.1);
        let lhs = e(2) * Quaternion::from_complex(z);
        let rhs = Quaternion::from_complex(z.conj()) * e(2);
        assert_eq!(lhs, rhs);
        let q = Quaternion::from_complex_pair(Complex::new(1.0, 2.0), Complex::new(3.0, 4.0));
        assert_eq!(q, Quaternion::new(1.0, 2.0, 3.0, 4.0));
        assert_eq!(
            q,
            Quaternion::from_complex(Complex::new(1.0, 2.0))
                + Quaternion::from_complex(Complex::new(3.0, 4.0)) * e(2)
        );
    }
}
