//! Concurrence of two-qubit states and of the three bipartitions of
//! three-qubit states, plus the Schmidt and concurrence terms of the
//! quaternionic projection.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercomplex::Complex;
use crate::states::{Partition, ThreeQubitState, TwoQubitState};

/// Frobenius-norm tolerance accepted by [`concurrence_bipartite`].
pub const UNIT_NORM_TOLERANCE: f64 = 1e-8;

/// `2 sqrt(Σ |a_ik a_jl - a_il a_jk|²)` over row pairs `i < j` and column
/// pairs `k < l` of a coefficient matrix.
///
/// Matrices with fewer than two rows or columns have no minors and give 0.
pub fn concurrence_bipartite<R: AsRef<[Complex]>>(rows: &[R]) -> Result<f64> {
    let width = rows.first().map_or(0, |r| r.as_ref().len());
    for r in rows {
        if r.as_ref().len() != width {
            return Err(Error::DimensionMismatch {
                expected: width,
                found: r.as_ref().len(),
            });
        }
    }
    let norm_sqr: f64 = rows
        .iter()
        .flat_map(|r| r.as_ref().iter())
        .map(|z| z.norm_sqr())
        .sum();
    if (norm_sqr - 1.0).abs() > UNIT_NORM_TOLERANCE {
        return Err(Error::NotNormalized { norm_sqr });
    }
    let mut sum = 0.0;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let (ri, rj) = (rows[i].as_ref(), rows[j].as_ref());
            for k in 0..width {
                for l in k + 1..width {
                    sum += (ri[k] * rj[l] - ri[l] * rj[k]).norm_sqr();
                }
            }
        }
    }
    Ok(2.0 * sum.sqrt())
}

/// `S = α conj(γ) + β conj(δ)`.
pub fn schmidt_term(s: &TwoQubitState) -> Complex {
    let [a, b, c, d] = *s.amplitudes();
    a * c.conj() + b * d.conj()
}

/// `C = βγ - αδ`.
pub fn concurrence_term(s: &TwoQubitState) -> Complex {
    let [a, b, c, d] = *s.amplitudes();
    b * c - a * d
}

/// `2 |βγ - αδ|`.
pub fn concurrence2(s: &TwoQubitState) -> f64 {
    2.0 * concurrence_term(s).norm()
}

/// The 2×4 coefficient matrix of a bipartition: rows indexed by the single
/// qubit, columns by the remaining pair in lexicographic order.
pub fn reshape(s: &ThreeQubitState, p: Partition) -> [[Complex; 4]; 2] {
    let t = s.permuted(p);
    [[t[0], t[1], t[2], t[3]], [t[4], t[5], t[6], t[7]]]
}

/// The six 2×2 minors `r0[k] r1[l] - r0[l] r1[k]` in row-major `(k, l)`
/// order.
pub fn minors(s: &ThreeQubitState, p: Partition) -> [Complex; 6] {
    let [r0, r1] = reshape(s, p);
    let m = |k: usize, l: usize| r0[k] * r1[l] - r0[l] * r1[k];
    [m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)]
}

/// The six-minor concurrence of a bipartition. For `1|23` the minors are
/// `t0 t5 - t1 t4`, `t0 t6 - t2 t4`, `t0 t7 - t3 t4`, `t1 t6 - t2 t5`,
/// `t1 t7 - t3 t5` and `t2 t7 - t3 t6`.
pub fn concurrence3(s: &ThreeQubitState, p: Partition) -> f64 {
    2.0 * minors(s, p)
        .iter()
        .map(|d| d.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConcurrenceReport {
    pub partition: String,
    pub value: f64,
}

impl ConcurrenceReport {
    pub fn two_qubit(s: &TwoQubitState) -> Self {
        ConcurrenceReport {
            partition: "2-qubit".into(),
            value: concurrence2(s),
        }
    }

    pub fn three_qubit(s: &ThreeQubitState, p: Partition) -> Self {
        ConcurrenceReport {
            partition: p.label().into(),
            value: concurrence3(s, p),
        }
    }
}
