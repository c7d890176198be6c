//! Complex, quaternion and octonion arithmetic.
//!
//! Complex numbers are `num_complex::Complex64`. Quaternions and octonions are
//! fixed-size real coordinate arrays over the bases `e0..e3` and `e0..e7`.
//! The embeddings are nested: a complex `z` sits on `e0, e1`, a quaternion is
//! `z1 + z2 e2`, and an octonion is `q1 + q2 e4`.

mod octonion;
mod quaternion;
pub mod table;

use std::fmt;

pub use octonion::Octonion;
pub use quaternion::Quaternion;
pub use table::{BasisProduct, StructureConstants, OCTONION_TABLE, OCTONION_TRIPLES};

pub type Complex = num_complex::Complex64;

/// Real coordinate access shared by the three scalar algebras, so that
/// points, metrics and serialization can be written once.
pub trait Coordinates: Copy {
    const DIM: usize;

    fn coord(&self, i: usize) -> f64;

    /// `None` when `c.len() != DIM`.
    fn from_coords(c: &[f64]) -> Option<Self>;

    fn to_vec(&self) -> Vec<f64> {
        (0..Self::DIM).map(|i| self.coord(i)).collect()
    }

    fn abs_sqr(&self) -> f64 {
        (0..Self::DIM).map(|i| self.coord(i).powi(2)).sum()
    }

    fn distance_sqr(&self, other: &Self) -> f64 {
        (0..Self::DIM)
            .map(|i| (self.coord(i) - other.coord(i)).powi(2))
            .sum()
    }

    fn is_finite(&self) -> bool {
        (0..Self::DIM).all(|i| self.coord(i).is_finite())
    }
}

impl Coordinates for Complex {
    const DIM: usize = 2;

    fn coord(&self, i: usize) -> f64 {
        match i {
            0 => self.re,
            1 => self.im,
            _ => panic!("complex coordinate index {i} out of range"),
        }
    }

    fn from_coords(c: &[f64]) -> Option<Self> {
        match c {
            [re, im] => Some(Complex::new(*re, *im)),
            _ => None,
        }
    }
}

/// Quaternion basis table derived from the Hamilton product.
pub fn quaternion_table() -> [[BasisProduct; 4]; 4] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let p = Quaternion::basis(i) * Quaternion::basis(j);
            let index = (0..4)
                .find(|&k| p.x[k] != 0.0)
                .expect("basis product is nonzero");
            BasisProduct {
                sign: p.x[index].signum() as i8,
                index,
            }
        })
    })
}

pub fn octonion_table() -> [[BasisProduct; 8]; 8] {
    std::array::from_fn(|i| std::array::from_fn(|j| OCTONION_TABLE.product(i, j)))
}

fn fmt_coords(x: &[f64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (i, &c) in x.iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        let sign = match (first, c < 0.0) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let m = c.abs();
        match (i, m == 1.0) {
            (0, _) => write!(f, "{sign}{m}")?,
            (_, true) => write!(f, "{sign}e{i}")?,
            (_, false) => write!(f, "{sign}{m} e{i}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
