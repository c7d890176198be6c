//! Closed-form single-qubit time evolution, Bloch vectors and projected
//! trajectories.

use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercomplex::Complex;
use crate::maps::{stereo_c, ExtendedPoint};
use crate::states::{OneQubitState, SU2Params, State};

pub const HERMITIAN_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_GRID_POINTS: usize = 256;

/// A Hermitian 2×2 Hamiltonian.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Hamiltonian2 {
    entries: [[Complex; 2]; 2],
}

/// `h = c0 I + c·σ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PauliDecomposition {
    pub c0: f64,
    pub c: [f64; 3],
}

impl Hamiltonian2 {
    pub fn new(entries: [[Complex; 2]; 2]) -> Result<Self> {
        if entries
            .iter()
            .flatten()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let residual = (0..4)
            .map(|k| (entries[k / 2][k % 2] - entries[k % 2][k / 2].conj()).norm())
            .fold(0.0, f64::max);
        if residual > HERMITIAN_TOLERANCE {
            return Err(Error::NonHermitian { residual });
        }
        Ok(Hamiltonian2 { entries })
    }

    pub fn entries(&self) -> &[[Complex; 2]; 2] {
        &self.entries
    }

    pub fn pauli(&self) -> PauliDecomposition {
        let m = &self.entries;
        PauliDecomposition {
            c0: 0.5 * (m[0][0].re + m[1][1].re),
            c: [m[0][1].re, -m[0][1].im, 0.5 * (m[0][0].re - m[1][1].re)],
        }
    }

    /// The SU(2) factor of `exp(-i h t)`, dropping the global phase
    /// `exp(-i c0 t)`.
    pub fn evolution_su2(&self, t: f64) -> SU2Params {
        let PauliDecomposition { c, .. } = self.pauli();
        let r = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
        let (cos, sin) = ((r * t).cos(), (r * t).sin());
        if r == 0.0 {
            return SU2Params::identity();
        }
        let n = c.map(|x| x / r);
        SU2Params {
            a: Complex::new(cos, -sin * n[2]),
            b: Complex::new(0.0, -sin) * Complex::new(n[0], -n[1]),
        }
    }

    /// `exp(-i h t) = exp(-i c0 t) (cos(|c| t) I - i sin(|c| t) ĉ·σ)`.
    pub fn evolution(&self, t: f64) -> [[Complex; 2]; 2] {
        let phase = Complex::from_polar(1.0, -self.pauli().c0 * t);
        self.evolution_su2(t)
            .matrix()
            .map(|row| row.map(|z| z * phase))
    }
}

/// `(1/sqrt 2) [[1, 1], [1, -1]]`.
pub fn hadamard() -> Hamiltonian2 {
    let h = Complex::new(FRAC_1_SQRT_2, 0.0);
    Hamiltonian2 {
        entries: [[h, h], [h, -h]],
    }
}

pub fn evolve(h: &Hamiltonian2, t: f64, s0: &OneQubitState) -> OneQubitState {
    let u = h.evolution(t);
    let [a0, a1] = *s0.amplitudes();
    State::from_raw([u[0][0] * a0 + u[0][1] * a1, u[1][0] * a0 + u[1][1] * a1])
}

/// `(2 Re(conj(α0) α1), 2 Im(conj(α0) α1), |α0|² - |α1|²)`.
pub fn bloch_vector(s: &OneQubitState) -> [f64; 3] {
    let [a0, a1] = *s.amplitudes();
    let x = a0.conj() * a1;
    [2.0 * x.re, 2.0 * x.im, a0.norm_sqr() - a1.norm_sqr()]
}

/// `cos(θ/2) |0> + exp(iφ) sin(θ/2) |1>`.
pub fn bloch_state(theta: f64, phi: f64) -> OneQubitState {
    let (s, c) = (0.5 * theta).sin_cos();
    State::from_raw([Complex::new(c, 0.0), Complex::from_polar(s, phi)])
}

/// The initial states `bloch_state(k / 15, 0)` for `k = 3..=15`, keyed by
/// `k`.
pub fn theta_family() -> Vec<(usize, OneQubitState)> {
    (3..=15)
        .map(|k| (k, bloch_state(k as f64 / 15.0, 0.0)))
        .collect()
}

/// Plane image of `exp(-i H t)|1>` for the Hadamard Hamiltonian:
/// `-(sin² t + sqrt 2 i sin t cos t) / (2 cos² t + sin² t)`.
pub fn hadamard_plane_closed_form(t: f64) -> Complex {
    let (s, c) = t.sin_cos();
    -Complex::new(s * s, SQRT_2 * s * c) / (2.0 * c * c + s * s)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TrajectorySample {
    pub t: f64,
    pub state: OneQubitState,
    pub bloch: [f64; 3],
    pub plane: ExtendedPoint<Complex>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Trajectory {
    pub samples: Vec<TrajectorySample>,
}

pub const CSV_HEADER: &str = "t,re0,im0,re1,im1,bx,by,bz,plane_re,plane_im,plane_inf";

impl Trajectory {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for s in &self.samples {
            let [a0, a1] = *s.state.amplitudes();
            let [bx, by, bz] = s.bloch;
            let plane = match s.plane {
                ExtendedPoint::Finite(z) => format!("{:.16e},{:.16e},0", z.re, z.im),
                ExtendedPoint::Infinity => "inf,inf,1".to_string(),
            };
            writeln!(
                out,
                "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{plane}",
                s.t, a0.re, a0.im, a1.re, a1.im, bx, by, bz
            )
            .expect("writing to a String");
        }
        out
    }

    /// Finite plane points in grid order.
    pub fn plane_points(&self) -> Vec<Complex> {
        self.samples
            .iter()
            .filter_map(|s| s.plane.finite())
            .collect()
    }
}

pub fn trajectory(h: &Hamiltonian2, s0: &OneQubitState, grid: &[f64]) -> Result<Trajectory> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid("empty grid".into()));
    }
    if grid.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidGrid("non-finite time".into()));
    }
    if grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidGrid("times must be sorted".into()));
    }
    let samples = grid
        .par_iter()
        .map(|&t| {
            let state = evolve(h, t, s0);
            TrajectorySample {
                t,
                state,
                bloch: bloch_vector(&state),
                plane: stereo_c(&state),
            }
        })
        .collect();
    Ok(Trajectory { samples })
}

/// `count` uniform samples of `[start, stop]`, both ends included.
pub fn uniform_grid(start: f64, stop: f64, count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::InvalidGrid("count must be positive".into()));
    }
    if !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(Error::InvalidGrid(format!(
            "bad interval [{start}, {stop}]"
        )));
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    let step = (stop - start) / (count - 1) as f64;
    Ok((0..count).map(|i| start + step * i as f64).collect())
}

pub fn default_grid() -> Vec<f64> {
    uniform_grid(0.0, 2.0 * PI, DEFAULT_GRID_POINTS).expect("valid default grid")
}

/// Parses `start:stop:count`. The bounds accept plain numbers and multiples
/// or fractions of `pi`, e.g. `pi/2`, `2pi`, `3*pi/4`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, stop, count] = parts.as_slice() else {
        return Err(Error::InvalidGrid(format!(
            "expected start:stop:count, found '{spec}'"
        )));
    };
    let count = count
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::InvalidGrid(format!("invalid count '{count}'")))?;
    uniform_grid(parse_time(start)?, parse_time(stop)?, count)
}

pub fn parse_time(expr: &str) -> Result<f64> {
    let e = expr.trim().to_ascii_lowercase().replace('π', "pi");
    let bad = || Error::InvalidGrid(format!("invalid time '{}'", expr.trim()));
    let (num, den) = match e.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim().parse::<f64>().map_err(|_| bad())?),
        None => (e.as_str(), 1.0),
    };
    let (sign, num) = match num.strip_prefix('-') {
        Some(rest) => (-1.0, rest.trim()),
        None => (1.0, num),
    };
    let value = match num.strip_suffix("pi") {
        Some(coef) => {
            let coef = coef.trim().trim_end_matches('*').trim();
            let k = if coef.is_empty() {
                1.0
            } else {
                coef.parse::<f64>().map_err(|_| bad())?
            };
            k * PI
        }
        None => num.parse::<f64>().map_err(|_| bad())?,
    };
    let v = sign * value / den;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad())
    }
}

/// Largest normalized `det [|z|², x, y, 1]` over the plane points, measured
/// against the circle (or line) through three well-separated reference
/// points. Zero for concyclic or collinear sets.
pub fn concyclicity_residual(points: &[Complex]) -> f64 {
    if points.len() < 4 {
        return 0.0;
    }
    let a = points[0];
    let b = *points
        .iter()
        .max_by(|p, q| (**p - a).norm().total_cmp(&(**q - a).norm()))
        .expect("non-empty");
    let c = *points
        .iter()
        .max_by(|p, q| {
            let f = |z: Complex| (z - a).norm() * (z - b).norm();
            f(**p).total_cmp(&f(**q))
        })
        .expect("non-empty");
    points
        .iter()
        .map(|&z| concyclic_det([a, b, c, z]))
        .fold(0.0, f64::max)
}

fn concyclic_det(z: [Complex; 4]) -> f64 {
    let rows: [[f64; 4]; 4] = z.map(|p| [p.norm_sqr(), p.re, p.im, 1.0]);
    let scale: f64 = rows
        .iter()
        .map(|r| r.iter().map(|x| x * x).sum::<f64>().sqrt())
        .product();
    det4(&rows).abs() / scale
}

fn det4(m: &[[f64; 4]; 4]) -> f64 {
    let det3 = |skip: usize| {
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
        let r = |i: usize, j: usize| m[i][cols[j]];
        r(1, 0) * (r(2, 1) * r(3, 2) - r(2, 2) * r(3, 1))
            - r(1, 1) * (r(2, 0) * r(3, 2) - r(2, 2) * r(3, 0))
            + r(1, 2) * (r(2, 0) * r(3, 1) - r(2, 1) * r(3, 0))
    };
    (0..4)
        .map(|j| if j % 2 == 0 { 1.0 } else { -1.0 } * m[0][j] * det3(j))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{one, plus, zero};
    use std::f64::consts::FRAC_PI_2;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn hadamard_properties() {
        let h = hadamard();
        let m = h.entries();
        let r = FRAC_1_SQRT_2;
        assert_eq!(*m, [[c(r, 0.0), c(r, 0.0)], [c(r, 0.0), c(-r, 0.0)]]);
        // H² = I
        for i in 0..2 {
            for j in 0..2 {
                let s: Complex = (0..2).map(|k| m[i][k] * m[k][j]).sum();
                let e = if i == j { 1.0 } else { 0.0 };
                assert!((s - c(e, 0.0)).norm() < 1e-15);
            }
        }
        let p = h.pauli();
        assert_eq!(p.c0, 0.0);
        let r = (p.c.iter().map(|x| x * x).sum::<f64>()).sqrt();
        assert!((r - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = [[c(1.0, 0.0), c(0.0, 1.0)], [c(0.0, 1.0), c(0.0, 0.0)]];
        assert!(matches!(
            Hamiltonian2::new(m),
            Err(Error::NonHermitian { .. })
        ));
        let ok = [[c(1.0, 0.0), c(0.5, -0.2)], [c(0.5, 0.2), c(-2.0, 0.0)]];
        assert!(Hamiltonian2::new(ok).is_ok());
    }

    #[test]
    fn evolve_examples() {
        let h = hadamard();
        assert_eq!(evolve(&h, 0.0, &plus()), plus());
        let t = 0.7;
        let s = evolve(&h, t, &one());
        let expected = [
            c(0.0, -FRAC_1_SQRT_2 * t.sin()),
            c(t.cos(), FRAC_1_SQRT_2 * t.sin()),
        ];
        for (z, e) in s.amplitudes().iter().zip(expected) {
            assert!((z - e).norm() < 1e-15);
        }
        let s = evolve(&h, PI, &one());
        assert!((s.amplitudes()[1] - c(-1.0, 0.0)).norm() < 1e-15);
        assert!(s.amplitudes()[0].norm() < 1e-15);
    }

    #[test]
    fn evolution_with_trace_keeps_su2_part() {
        let h =
            Hamiltonian2::new([[c(2.0, 0.0), c(0.3, -0.4)], [c(0.3, 0.4), c(1.0, 0.0)]]).unwrap();
        let u = h.evolution(1.3);
        let v = h.evolution_su2(1.3).matrix();
        let phase = Complex::from_polar(1.0, -1.5 * 1.3);
        for i in 0..2 {
            for j in 0..2 {
                assert!((u[i][j] - v[i][j] * phase).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn theta_family_layout() {
        let f = theta_family();
        assert_eq!(f.len(), 13);
        assert_eq!(f[0].0, 3);
        assert_eq!(f[12].1, bloch_state(1.0, 0.0));
    }

    #[test]
    fn bloch_examples() {
        assert_eq!(bloch_vector(&zero()), [0.0, 0.0, 1.0]);
        assert_eq!(bloch_vector(&one()), [0.0, 0.0, -1.0]);
        let b = bloch_vector(&plus());
        assert!((b[0] - 1.0).abs() < 1e-15 && b[1] == 0.0 && b[2].abs() < 1e-15);
    }

    #[test]
    fn trajectory_examples() {
        let h = hadamard();
        let tr = trajectory(&h, &one(), &[0.0, FRAC_PI_2]).unwrap();
        assert_eq!(tr.samples[0].plane, ExtendedPoint::Finite(c(0.0, 0.0)));
        let p = tr.samples[1].plane.finite().unwrap();
        assert!((p - c(-1.0, 0.0)).norm() < 1e-15);
        let tr = trajectory(&h, &plus(), &[0.0]).unwrap();
        assert_eq!(tr.samples[0].state, plus());
        assert!(trajectory(&h, &one(), &[1.0, 0.0]).is_err());
        assert!(trajectory(&h, &one(), &[]).is_err());
    }

    #[test]
    fn closed_form_matches_mobius_of_zero() {
        for i in 0..50 {
            let t = 0.13 * i as f64;
            let u = hadamard().evolution_su2(t);
            let m = crate::maps::mobius_c(&u, &ExtendedPoint::Finite(c(0.0, 0.0)));
            let (s, co) = t.sin_cos();
            let eq9 = c(s, 0.0) / c(-s, SQRT_2 * co);
            assert!((m.finite().unwrap() - hadamard_plane_closed_form(t)).norm() < 1e-14);
            assert!((eq9 - hadamard_plane_closed_form(t)).norm() < 1e-14);
        }
    }

    #[test]
    fn csv_layout() {
        let tr = trajectory(&hadamard(), &zero(), &[0.0]).unwrap();
        let csv = tr.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row.len(), 11);
        assert_eq!(&row[8..], ["inf", "inf", "1"]);
        assert_eq!(row[1].parse::<f64>().unwrap(), 1.0);
    }

    #[test]
    fn grids() {
        assert_eq!(parse_grid("0:1:3").unwrap(), vec![0.0, 0.5, 1.0]);
        assert_eq!(parse_grid("pi/2:pi/2:1").unwrap(), vec![FRAC_PI_2]);
        let g = parse_grid("0:2pi:5").unwrap();
        assert!((g[4] - 2.0 * PI).abs() < 1e-15);
        assert!((parse_time("3*pi/4").unwrap() - 0.75 * PI).abs() < 1e-15);
        assert!((parse_time("-π").unwrap() + PI).abs() < 1e-15);
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("1:0:3").is_err());
        assert!(parse_grid("0:1:0").is_err());
        assert!(parse_time("tau").is_err());
        let d = default_grid();
        assert_eq!(d.len(), 256);
        assert_eq!(d[0], 0.0);
        assert!((d[255] - 2.0 * PI).abs() < 1e-15);
    }

    #[test]
    fn concyclicity() {
        let circle: Vec<Complex> = (0..10)
            .map(|k| c(2.0, 1.0) + Complex::from_polar(3.0, k as f64))
            .collect();
        assert!(concyclicity_residual(&circle) < 1e-14);
        let line: Vec<Complex> = (0..10).map(|k| c(k as f64, 2.0 * k as f64)).collect();
        assert!(concyclicity_residual(&line) < 1e-14);
        let mut off = circle.clone();
        off.push(c(2.0, 1.0));
        assert!(concyclicity_residual(&off) > 1e-3);
    }
}
