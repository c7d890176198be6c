use serde::{Deserialize, Serialize};

use super::{LocalUnitary, Partition, State, ThreeQubitState, TwoQubitState};
use crate::error::{Error, Result};
use crate::hypercomplex::{Complex, Octonion, Quaternion};

fn check_norm(norm_sqr: f64) -> Result<()> {
    if (norm_sqr - 1.0).abs() > super::RENORMALIZE_TOLERANCE {
        return Err(Error::NotNormalized { norm_sqr });
    }
    Ok(())
}

/// `q1 |0>_q + q2 |1>_q`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuaterbitState {
    pub q: [Quaternion; 2],
}

impl QuaterbitState {
    pub fn new(q1: Quaternion, q2: Quaternion) -> Result<Self> {
        check_norm(q1.norm_sqr() + q2.norm_sqr())?;
        Ok(QuaterbitState { q: [q1, q2] })
    }

    /// `q1 = α + β e2`, `q2 = γ + δ e2`.
    pub fn quaternify(s: &TwoQubitState) -> Self {
        let [a, b, c, d] = *s.amplitudes();
        QuaterbitState {
            q: [
                Quaternion::from_complex_pair(a, b),
                Quaternion::from_complex_pair(c, d),
            ],
        }
    }

    pub fn dequaternify(&self) -> TwoQubitState {
        let (a, b) = self.q[0].to_complex_pair();
        let (c, d) = self.q[1].to_complex_pair();
        State::from_raw([a, b, c, d])
    }

    /// Every component multiplied on the right by `p`.
    pub fn right_mul(&self, p: Quaternion) -> Self {
        QuaterbitState {
            q: self.q.map(|q| q * p),
        }
    }

    /// `A (|ψ>_q A'^(q))`: right multiplication by the quaternion image of
    /// the second factor, then the first factor's complex matrix from the
    /// left.
    pub fn apply_local(&self, u: &LocalUnitary<2>) -> Self {
        let right = u.factors[1].to_quaternion();
        let r = self.right_mul(right);
        let m = u.factors[0].matrix();
        let cq = Quaternion::from_complex;
        QuaterbitState {
            q: std::array::from_fn(|i| cq(m[i][0]) * r.q[0] + cq(m[i][1]) * r.q[1]),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.q[0].norm_sqr() + self.q[1].norm_sqr()
    }
}

/// `q1 |00>_q + q2 |01>_q + q3 |10>_q + q4 |11>_q`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoQuaterbitState {
    pub q: [Quaternion; 4],
}

impl TwoQuaterbitState {
    pub fn new(q: [Quaternion; 4]) -> Result<Self> {
        check_norm(q.iter().map(|x| x.norm_sqr()).sum())?;
        Ok(TwoQuaterbitState { q })
    }

    /// Pairs `(t0,t1), (t2,t3), (t4,t5), (t6,t7)` as `t_even + t_odd e2`.
    pub fn quaternify(s: &ThreeQubitState) -> Self {
        let t = s.amplitudes();
        TwoQuaterbitState {
            q: std::array::from_fn(|i| Quaternion::from_complex_pair(t[2 * i], t[2 * i + 1])),
        }
    }

    pub fn dequaternify(&self) -> ThreeQubitState {
        let mut t = [Complex::new(0.0, 0.0); 8];
        for (i, q) in self.q.iter().enumerate() {
            let (a, b) = q.to_complex_pair();
            t[2 * i] = a;
            t[2 * i + 1] = b;
        }
        State::from_raw(t)
    }

    /// `A1 ⊗ A2 [|ψ>_q A3^(q)]`.
    pub fn apply_local(&self, u: &LocalUnitary<3>) -> Self {
        let right = u.factors[2].to_quaternion();
        let r = self.q.map(|q| q * right);
        let m = LocalUnitary::new([u.factors[0], u.factors[1]]).matrix();
        TwoQuaterbitState {
            q: std::array::from_fn(|i| {
                (0..4).fold(Quaternion::ZERO, |acc, j| {
                    acc + Quaternion::from_complex(m[i][j]) * r[j]
                })
            }),
        }
    }

    /// `o1 = q1 + q2 e4`, `o2 = q3 + q4 e4`.
    pub fn octonify(&self) -> OctobitState {
        let [q1, q2, q3, q4] = self.q;
        OctobitState {
            o: [
                Octonion::from_quaternion_pair(q1, q2),
                Octonion::from_quaternion_pair(q3, q4),
            ],
            partition: Partition::OneTwoThree,
        }
    }
}

/// `o1 |0>_o + o2 |1>_o`, tagged with the bipartition it encodes.
///
/// Partitions other than `1|23` store the amplitudes permuted so that the
/// partition's single qubit indexes the two components.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OctobitState {
    pub o: [Octonion; 2],
    pub partition: Partition,
}

impl OctobitState {
    pub fn new(o1: Octonion, o2: Octonion, partition: Partition) -> Result<Self> {
        check_norm(o1.norm_sqr() + o2.norm_sqr())?;
        Ok(OctobitState {
            o: [o1, o2],
            partition,
        })
    }

    pub fn octonify(s: &ThreeQubitState, partition: Partition) -> Self {
        let t = s.permuted(partition);
        OctobitState {
            o: [
                Octonion::from_complex_quad([t[0], t[1], t[2], t[3]]),
                Octonion::from_complex_quad([t[4], t[5], t[6], t[7]]),
            ],
            partition,
        }
    }

    /// Amplitudes in the permuted layout of the partition.
    pub fn permuted_amplitudes(&self) -> [Complex; 8] {
        let a = self.o[0].to_complex_quad();
        let b = self.o[1].to_complex_quad();
        std::array::from_fn(|i| if i < 4 { a[i] } else { b[i - 4] })
    }

    pub fn deoctonify(&self) -> ThreeQubitState {
        let t = self.permuted_amplitudes();
        let mut out = [Complex::new(0.0, 0.0); 8];
        for (i, z) in t.into_iter().enumerate() {
            out[self.partition.source_index(i)] = z;
        }
        State::from_raw(out)
    }

    /// `A1 { [|ψ>_o A3^(q)] A2^(o) }` evaluated with exactly this grouping:
    /// each component is right-multiplied by the `e2`-role quaternion, the
    /// result by the `e4`-role octonion, and the row factor then acts as a
    /// complex 2×2 matrix from the left.
    ///
    /// For the `1|23` partition the roles are qubits 1, 2, 3 in order; other
    /// partitions assign factors through [`Partition::qubit_roles`].
    pub fn apply_local(&self, u: &LocalUnitary<3>) -> Self {
        let [row, e4, e2] = self.partition.qubit_roles().map(|q| u.factors[q - 1]);
        let p3 = Octonion::from_quaternion(e2.to_quaternion());
        let p2 = e4.to_octonion();
        let r = self.o.map(|o| (o * p3) * p2);
        let m = row.matrix();
        let co = Octonion::from_complex;
        OctobitState {
            o: std::array::from_fn(|i| co(m[i][0]) * r[0] + co(m[i][1]) * r[1]),
            partition: self.partition,
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.o[0].norm_sqr() + self.o[1].norm_sqr()
    }
}
