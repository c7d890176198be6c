//! Closed-form expansions transcribed as printed, for comparison with the
//! oracle. Nothing here is used by the library's own maps.

use crate::hypercomplex::{Complex, Octonion, Quaternion};
use crate::states::LocalUnitary;

fn cq(z: Complex) -> Quaternion {
    Quaternion::from_complex(z)
}

fn co(z: Complex) -> Octonion {
    Octonion::from_complex(z)
}

/// `S' = (|q2|² - |q1|²) a b + S |a|² - conj(S) |b|²` as printed.
pub fn schmidt_transform_printed(
    q1: Quaternion,
    q2: Quaternion,
    s: Complex,
    a: Complex,
    b: Complex,
) -> Complex {
    (q2.norm_sqr() - q1.norm_sqr()) * a * b + s * a.norm_sqr() - s.conj() * b.norm_sqr()
}

/// `S' = (|q2|² - |q1|²) a b + a² S - b² conj(S)`.
pub fn schmidt_transform(
    q1: Quaternion,
    q2: Quaternion,
    s: Complex,
    a: Complex,
    b: Complex,
) -> Complex {
    (q2.norm_sqr() - q1.norm_sqr()) * a * b + a * a * s - b * b * s.conj()
}

/// `|q2|² |b|² + |a|² - 2 Re(conj(b) q2 a)` as printed.
pub fn mobius_denominator_printed(q2: Quaternion, a: Complex, b: Complex) -> f64 {
    q2.norm_sqr() * b.norm_sqr() + a.norm_sqr() - 2.0 * (cq(b.conj()) * q2 * cq(a)).re()
}

/// `|b|² |q1|² + |a|² |q2|² - 2 Re(conj(b) S a)`, the squared norm of the
/// transformed second component.
pub fn mobius_denominator(
    q1: Quaternion,
    q2: Quaternion,
    s: Complex,
    a: Complex,
    b: Complex,
) -> f64 {
    b.norm_sqr() * q1.norm_sqr() + a.norm_sqr() * q2.norm_sqr() - 2.0 * (b.conj() * s * a).re
}

/// `(|q1|² p1 p̄3 + p1 q1 q̄2 q̄4 + p2 q2 q̄1 q̄3 + |q2|² p2 p̄4) / |p3 q1 + p4 q2|²`
/// with the printed `q3`, `q4` supplied by the caller.
pub fn sp2_expansion_printed(p: [Quaternion; 4], q: [Quaternion; 4]) -> Quaternion {
    let [p1, p2, p3, p4] = p;
    let [q1, q2, q3, q4] = q;
    let num = p1 * p3.conj() * q1.norm_sqr()
        + p1 * q1 * q2.conj() * q4.conj()
        + p2 * q2 * q1.conj() * q3.conj()
        + p2 * p4.conj() * q2.norm_sqr();
    num.scale(1.0 / (p3 * q1 + p4 * q2).norm_sqr())
}

/// The printed expansion with `q̄3 -> p̄3` and `q̄4 -> p̄4`.
pub fn sp2_expansion(p: [Quaternion; 4], q1: Quaternion, q2: Quaternion) -> Quaternion {
    let [p1, p2, p3, p4] = p;
    let num = p1 * p3.conj() * q1.norm_sqr()
        + p1 * q1 * q2.conj() * p4.conj()
        + p2 * q2 * q1.conj() * p3.conj()
        + p2 * p4.conj() * q2.norm_sqr();
    num.scale(1.0 / (p3 * q1 + p4 * q2).norm_sqr())
}

/// Complex components `[s0, s1, s2, s3]` of `o1 o2` for
/// `o1 = z0 + z1 e2 + (z2 + z3 e2) e4` and likewise `o2` from `p`, as printed.
pub fn appendix_a_product(z: [Complex; 4], p: [Complex; 4]) -> [Complex; 4] {
    let c = |w: Complex| w.conj();
    [
        z[0] * p[0] - z[1] * c(p[1]) - z[2] * c(p[2]) - c(z[3]) * p[3],
        z[0] * p[1] + z[1] * c(p[0]) + c(z[2]) * p[3] - z[3] * c(p[2]),
        z[0] * p[2] - c(z[1]) * p[3] + z[2] * c(p[0]) + z[3] * c(p[1]),
        c(z[0]) * p[3] + z[1] * p[2] - z[2] * c(p[1]) + z[3] * c(p[0]),
    ]
}

/// The transformed amplitudes `t'0..t'7` under `A1 ⊗ A2 ⊗ A3` as printed.
/// Each term is a sign, an amplitude and three factor entries; `~` marks a
/// conjugated entry.
pub const PRIMED_AMPLITUDES: [&str; 8] = [
    "+t0 a1 a2 a3 +t1 a1 a2 b3 +t2 a1 b2 ~a3 +t3 a1 b2 b3 +t4 b1 a2 a3 +t5 b1 a2 b3 +t6 b1 b2 a3 +t7 b1 b2 b3",
    "-t0 a1 ~a2 ~b3 +t1 a1 ~a2 ~a3 -t2 a1 b2 ~b3 +t3 a1 b2 ~a3 -t4 b1 ~a2 ~b3 +t5 b1 a2 a3 -t6 b1 b2 ~b3 +t7 b1 b2 ~a3",
    "-t0 a1 ~b2 a3 -t1 a1 ~b2 b3 +t2 a1 ~a2 a3 +t3 a1 ~a2 b3 -t4 b1 ~b2 a3 -t5 ~b1 ~b2 ~b3 +t6 b1 ~a2 a3 +t7 b1 ~a2 b3",
    "+t0 a1 b2 ~b3 -t1 a1 ~b2 ~a3 -t2 a1 ~a2 ~b3 +t3 a1 ~a2 ~a3 +t4 b1 b2 ~b3 -t5 b1 ~b2 ~a3 -t6 b1 ~a2 ~b3 +t7 b1 ~a2 ~a3",
    "-t0 ~b1 a2 a3 -t1 ~b1 a2 b3 -t2 ~b1 b2 a3 -t3 ~b1 b2 b3 +t4 ~a1 a2 a3 +t5 ~a1 a2 b3 +t6 ~a1 b2 a3 +t7 ~a1 b2 b3",
    "+t0 ~b1 ~a2 ~b3 -t1 ~b1 ~a2 ~a3 +t2 ~b1 b2 ~b3 -t3 ~b1 b2 ~a3 -t4 ~a1 ~a2 ~b3 +t5 ~a1 ~a2 ~a3 -t6 ~a1 b2 ~b3 +t7 ~a1 b2 ~a3",
    "+t0 ~b1 ~b2 a3 +t1 ~b1 ~b2 b3 -t2 ~b1 ~a2 a3 -t3 ~b1 ~a2 b3 -t4 ~a1 ~b2 a3 -t5 ~a1 ~b2 b3 +t6 ~a1 ~a2 a3 +t7 ~a1 ~a2 b3",
    "+t0 ~b1 ~b2 ~b3 +t1 ~b1 ~b2 ~a3 +t2 ~b1 ~a2 ~b3 -t3 ~b1 ~a2 ~a3 +t4 ~a1 ~b2 ~b3 -t5 ~a1 ~b2 ~a3 -t6 ~a1 ~a2 ~b3 +t7 ~a1 ~a2 ~a3",
];

/// Evaluates one [`PRIMED_AMPLITUDES`] row.
pub fn b_expansion(row: &str, t: &[Complex; 8], u: &LocalUnitary<3>) -> Complex {
    let mut total = Complex::new(0.0, 0.0);
    let mut term = Complex::new(0.0, 0.0);
    for tok in row.split_whitespace() {
        if let Some(rest) = tok.strip_prefix(['+', '-']) {
            total += term;
            let sign = if tok.starts_with('-') { -1.0 } else { 1.0 };
            let i: usize = rest[1..].parse().expect("amplitude index");
            term = t[i] * sign;
        } else {
            let (conj, name) = match tok.strip_prefix('~') {
                Some(n) => (true, n),
                None => (false, tok),
            };
            let f = u.factors[name[1..].parse::<usize>().expect("factor index") - 1];
            let v = if name.starts_with('a') { f.a } else { f.b };
            term *= if conj { v.conj() } else { v };
        }
    }
    total + term
}

/// `a1 b1 (1 - o ō) + a1 o a1 - b1 ō b1`, before the `|o2|² / |o'2|²`
/// scale.
pub fn first_factor_image(o: Octonion, a1: Complex, b1: Complex) -> Octonion {
    let oo = (o * o.conj()).re();
    co(a1 * b1 * (1.0 - oo)) + (co(a1) * o) * co(a1) - (co(b1) * o.conj()) * co(b1)
}

/// The projection of the transformed octobit written through the tilde
/// components `õ1`, `õ2` of the untransformed one, with `(a, b)` read as
/// `(a1, b1)`:
///
/// `((a1 õ1 + b1 õ2) K)(-conj(õ1) b1 + conj(õ2) a1)
///  / (|o'2|² |-conj(b1) [{õ1 A3} A2] + conj(a1) [{õ2 A3} A2]|²)`
pub fn transformed_projection_printed(o: [Octonion; 2], u: &LocalUnitary<3>) -> Octonion {
    let [f1, f2, f3] = u.factors;
    let (a1, b1) = (f1.a, f1.b);
    let a3 = Octonion::from_quaternion(f3.to_quaternion());
    let a2 = f2.to_octonion();
    let [t1, t2] = o.map(Octonion::tilde);
    let k = (a3 * (a2 * a2.conj())) * a3.conj();
    let num = ((co(a1) * t1 + co(b1) * t2) * k) * (t1.conj() * co(-b1) + t2.conj() * co(a1));
    let o2p = co(-b1.conj()) * ((o[0] * a3) * a2) + co(a1.conj()) * ((o[1] * a3) * a2);
    let den = co(-b1.conj()) * ((t1 * a3) * a2) + co(a1.conj()) * ((t2 * a3) * a2);
    num.scale(1.0 / (o2p.norm_sqr() * den.norm_sqr()))
}

fn quad(z: [Complex; 4]) -> Octonion {
    Octonion::from_complex_quad(z)
}

/// The printed numerator `M` of the `2|13` projection.
pub fn m_printed(t: &[Complex; 8]) -> Octonion {
    let c = |i: usize| t[i].conj();
    quad([
        t[0] * c(2) + t[1] * c(3) + t[4] * c(6) + t[3] * c(7),
        t[1] * t[2] - t[0] * t[3] + c(5) * c(6) - c(4) * c(7),
        t[4] * t[2] - t[0] * t[6] + c(1) * c(7) - c(5) * c(3),
        t[4] * t[3] - t[1] * t[6] + c(5) * c(2) - c(0) * c(7),
    ])
}

/// The printed numerator `N` of the `3|12` projection.
pub fn n_printed(t: &[Complex; 8]) -> Octonion {
    let c = |i: usize| t[i].conj();
    quad([
        t[0] * c(1) + t[2] * c(3) + t[4] * c(5) + t[6] * c(7),
        t[2] * t[1] - t[0] * t[3] + c(6) * c(5) - c(4) * c(7),
        t[4] * t[1] - t[0] * t[5] + c(2) * c(7) - c(6) * c(3),
        t[4] * t[3] - t[2] * t[5] + c(6) * c(1) - c(0) * c(7),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::SU2Params;

    #[test]
    fn expansion_of_identity_is_identity() {
        let t: [Complex; 8] = std::array::from_fn(|i| Complex::new(i as f64, 1.0 - i as f64));
        let u = LocalUnitary::<3>::identity();
        for (i, row) in PRIMED_AMPLITUDES.iter().enumerate() {
            assert_eq!(b_expansion(row, &t, &u), t[i], "row {i}");
        }
    }

    #[test]
    fn expansion_reads_signs_and_conjugates() {
        let mut t = [Complex::new(0.0, 0.0); 8];
        t[5] = Complex::new(1.0, 0.0);
        let f = SU2Params::new(Complex::new(0.6, 0.0), Complex::new(0.0, 0.8)).unwrap();
        let u = LocalUnitary::new([f; 3]);
        let b = Complex::new(0.0, 0.8);
        assert!((b_expansion(PRIMED_AMPLITUDES[2], &t, &u) + b.conj().powi(3)).norm() < 1e-15);
    }

    #[test]
    fn schmidt_transforms_agree_on_real_parameters() {
        let q1 = Quaternion::new(0.5, 0.1, -0.3, 0.2);
        let q2 = Quaternion::new(0.2, -0.4, 0.1, 0.6);
        let s = Complex::new(0.3, 0.0);
        let (a, b) = (Complex::new(0.6, 0.0), Complex::new(0.8, 0.0));
        let x = schmidt_transform_printed(q1, q2, s, a, b);
        let y = schmidt_transform(q1, q2, s, a, b);
        assert!((x - y).norm() < 1e-15);
    }
}
