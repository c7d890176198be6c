use serde::{Deserialize, Serialize};

use super::{QuaterbitState, State, RENORMALIZE_TOLERANCE};
use crate::error::{Error, Result};
use crate::hypercomplex::{Complex, Octonion, Quaternion};

/// Tolerance of the `A†A = I` check in [`Sp2Matrix::new`].
pub const SP2_TOLERANCE: f64 = 1e-10;

/// The SU(2) element `[[a, b], [-conj b, conj a]]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SU2Params {
    pub a: Complex,
    pub b: Complex,
}

impl SU2Params {
    pub fn new(a: Complex, b: Complex) -> Result<Self> {
        let n = a.norm_sqr() + b.norm_sqr();
        if !n.is_finite() {
            return Err(Error::NonFinite);
        }
        if (n - 1.0).abs() > RENORMALIZE_TOLERANCE {
            return Err(Error::NotUnitary {
                residual: (n - 1.0).abs(),
            });
        }
        let s = n.sqrt().recip();
        Ok(SU2Params { a: a * s, b: b * s })
    }

    pub fn identity() -> Self {
        SU2Params {
            a: Complex::new(1.0, 0.0),
            b: Complex::new(0.0, 0.0),
        }
    }

    pub fn matrix(&self) -> [[Complex; 2]; 2] {
        [[self.a, self.b], [-self.b.conj(), self.a.conj()]]
    }

    pub fn inverse(&self) -> Self {
        SU2Params {
            a: self.a.conj(),
            b: -self.b,
        }
    }

    /// `a - conj(b) e2`.
    pub fn to_quaternion(&self) -> Quaternion {
        Quaternion::from_complex_pair(self.a, -self.b.conj())
    }

    /// `a - conj(b) e4`.
    pub fn to_octonion(&self) -> Octonion {
        let nb = -self.b.conj();
        Octonion::new([self.a.re, self.a.im, 0.0, 0.0, nb.re, nb.im, 0.0, 0.0])
    }
}

/// `A1 ⊗ ... ⊗ AK`, factor `i` acting on qubit `i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalUnitary<const K: usize> {
    #[serde(with = "serde_arrays")]
    pub factors: [SU2Params; K],
}

mod serde_arrays {
    use super::SU2Params;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer, const K: usize>(
        v: &[SU2Params; K],
        s: S,
    ) -> Result<S::Ok, S::Error> {
        v.as_slice().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const K: usize>(
        d: D,
    ) -> Result<[SU2Params; K], D::Error> {
        let v = Vec::<SU2Params>::deserialize(d)?;
        let n = v.len();
        v.try_into()
            .map_err(|_| serde::de::Error::invalid_length(n, &"one factor per qubit"))
    }
}

impl<const K: usize> LocalUnitary<K> {
    pub fn new(factors: [SU2Params; K]) -> Self {
        LocalUnitary { factors }
    }

    pub fn identity() -> Self {
        LocalUnitary {
            factors: [SU2Params::identity(); K],
        }
    }

    /// The `2^K × 2^K` Kronecker product, row-major.
    pub fn matrix(&self) -> Vec<Vec<Complex>> {
        let mut m = vec![vec![Complex::new(1.0, 0.0)]];
        for f in &self.factors {
            let a = f.matrix();
            let n = m.len();
            let mut next = vec![vec![Complex::new(0.0, 0.0); 2 * n]; 2 * n];
            for (i, row) in m.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    for (k, arow) in a.iter().enumerate() {
                        for (l, &y) in arow.iter().enumerate() {
                            next[2 * i + k][2 * j + l] = x * y;
                        }
                    }
                }
            }
            m = next;
        }
        m
    }
}

/// The oracle action: the Kronecker product matrix applied to the amplitude
/// vector.
pub fn apply_local_unitary<const N: usize, const K: usize>(
    s: &State<N>,
    u: &LocalUnitary<K>,
) -> Result<State<N>> {
    if 1usize << K != N {
        return Err(Error::DimensionMismatch {
            expected: N.trailing_zeros() as usize,
            found: K,
        });
    }
    let m = u.matrix();
    let t = s.amplitudes();
    let out = std::array::from_fn(|i| {
        m[i].iter()
            .zip(t)
            .fold(Complex::new(0.0, 0.0), |acc, (&x, &y)| acc + x * y)
    });
    Ok(State::from_raw(out))
}

/// A 2×2 quaternionic matrix `[[p1, p2], [p3, p4]]` with `A†A = I`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sp2Matrix {
    p: [[Quaternion; 2]; 2],
}

impl Sp2Matrix {
    pub fn new(p: [[Quaternion; 2]; 2]) -> Result<Self> {
        if p.iter()
            .flatten()
            .any(|q| !q.x.iter().all(|c| c.is_finite()))
        {
            return Err(Error::NonFinite);
        }
        let m = Sp2Matrix { p };
        let residual = m.unitarity_residual();
        if residual > SP2_TOLERANCE {
            return Err(Error::NotUnitary { residual });
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Sp2Matrix {
            p: [
                [Quaternion::ONE, Quaternion::ZERO],
                [Quaternion::ZERO, Quaternion::ONE],
            ],
        }
    }

    /// The SU(2) matrix with its complex entries read as quaternions.
    pub fn from_su2(u: &SU2Params) -> Self {
        let m = u.matrix();
        Sp2Matrix {
            p: m.map(|row| row.map(Quaternion::from_complex)),
        }
    }

    pub fn entries(&self) -> &[[Quaternion; 2]; 2] {
        &self.p
    }

    /// `(p1, p2, p3, p4)`.
    pub fn p(&self) -> [Quaternion; 4] {
        [self.p[0][0], self.p[0][1], self.p[1][0], self.p[1][1]]
    }

    pub fn conj_transpose(&self) -> Self {
        Sp2Matrix {
            p: std::array::from_fn(|i| std::array::from_fn(|j| self.p[j][i].conj())),
        }
    }

    pub fn mul(&self, rhs: &Sp2Matrix) -> Sp2Matrix {
        Sp2Matrix {
            p: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.p[i][0] * rhs.p[0][j] + self.p[i][1] * rhs.p[1][j])
            }),
        }
    }

    /// Largest coordinate deviation of `A†A` from the identity.
    pub fn unitarity_residual(&self) -> f64 {
        let g = self.conj_transpose().mul(self);
        let mut r: f64 = 0.0;
        for (i, row) in g.p.iter().enumerate() {
            for (j, q) in row.iter().enumerate() {
                let target = if i == j {
                    Quaternion::ONE
                } else {
                    Quaternion::ZERO
                };
                r = r.max((*q - target).x.iter().fold(0.0, |m, c| m.max(c.abs())));
            }
        }
        r
    }

    /// `[p1 q1 + p2 q2, p3 q1 + p4 q2]`.
    pub fn apply(&self, s: &QuaterbitState) -> QuaterbitState {
        let [q1, q2] = s.q;
        QuaterbitState {
            q: std::array::from_fn(|i| self.p[i][0] * q1 + self.p[i][1] * q2),
        }
    }

    /// The 4×4 complex representation, each quaternion `z1 + z2 e2` replaced
    /// by the block `[[z1, z2], [-conj z2, conj z1]]`.
    pub fn to_complex4(&self) -> [[Complex; 4]; 4] {
        let mut m = [[Complex::new(0.0, 0.0); 4]; 4];
        for (i, row) in self.p.iter().enumerate() {
            for (j, q) in row.iter().enumerate() {
                let (z1, z2) = q.to_complex_pair();
                m[2 * i][2 * j] = z1;
                m[2 * i][2 * j + 1] = z2;
                m[2 * i + 1][2 * j] = -z2.conj();
                m[2 * i + 1][2 * j + 1] = z1.conj();
            }
        }
        m
    }

    /// Largest entry of `U J Uᵀ - J` with `J = I ⊗ [[0, -1], [1, 0]]` in the
    /// complex representation.
    pub fn symplectic_residual(&self) -> f64 {
        let u = self.to_complex4();
        let zero = Complex::new(0.0, 0.0);
        let mut j = [[zero; 4]; 4];
        for k in 0..2 {
            j[2 * k][2 * k + 1] = Complex::new(-1.0, 0.0);
            j[2 * k + 1][2 * k] = Complex::new(1.0, 0.0);
        }
        let mut r: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                let mut s = zero;
                for k in 0..4 {
                    for l in 0..4 {
                        s += u[a][k] * j[k][l] * u[b][l];
                    }
                }
                r = r.max((s - j[a][b]).norm());
            }
        }
        r
    }
}
