//! Stereographic projections onto the extended complex, quaternion and
//! octonion planes, and the Möbius transformations acting on them.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::hypercomplex::{Complex, Coordinates, Octonion, Quaternion};
use crate::states::{
    LocalUnitary, OctobitState, OneQubitState, QuaterbitState, SU2Params, Sp2Matrix,
};

/// Denominators at or below this magnitude (relative to the point's scale)
/// are treated as zero and send the image to infinity.
pub const INFINITY_THRESHOLD: f64 = 1e-14;

/// A point of the one-point compactification of `V`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtendedPoint<V> {
    Finite(V),
    Infinity,
}

impl<V: Coordinates> ExtendedPoint<V> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedPoint::Infinity)
    }

    pub fn finite(&self) -> Option<V> {
        match self {
            ExtendedPoint::Finite(v) => Some(*v),
            ExtendedPoint::Infinity => None,
        }
    }

    /// Coordinates, or `None` at infinity.
    pub fn coords(&self) -> Option<Vec<f64>> {
        self.finite().map(|v| v.to_vec())
    }
}

impl<V: Coordinates> Serialize for ExtendedPoint<V> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            // adding +0.0 turns negative zeros into plain zeros
            ExtendedPoint::Finite(v) => v
                .to_vec()
                .iter()
                .map(|c| c + 0.0)
                .collect::<Vec<_>>()
                .serialize(s),
            ExtendedPoint::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de, V: Coordinates> Deserialize<'de> for ExtendedPoint<V> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Coords(Vec<f64>),
            Tag(String),
        }
        match Repr::deserialize(d)? {
            Repr::Coords(c) => V::from_coords(&c)
                .map(ExtendedPoint::Finite)
                .ok_or_else(|| D::Error::invalid_length(c.len(), &"one value per coordinate")),
            Repr::Tag(t) if t == "inf" => Ok(ExtendedPoint::Infinity),
            Repr::Tag(t) => Err(D::Error::custom(format!("expected \"inf\", found \"{t}\""))),
        }
    }
}

/// `|x - y| / sqrt((1 + |x|²)(1 + |y|²))`, extended to infinity by its limit.
pub fn chordal_distance<V: Coordinates>(x: &ExtendedPoint<V>, y: &ExtendedPoint<V>) -> f64 {
    match (x, y) {
        (ExtendedPoint::Infinity, ExtendedPoint::Infinity) => 0.0,
        (ExtendedPoint::Finite(v), ExtendedPoint::Infinity)
        | (ExtendedPoint::Infinity, ExtendedPoint::Finite(v)) => (1.0 + v.abs_sqr()).sqrt().recip(),
        (ExtendedPoint::Finite(a), ExtendedPoint::Finite(b)) => {
            let d = a.distance_sqr(b).sqrt();
            d / ((1.0 + a.abs_sqr()) * (1.0 + b.abs_sqr())).sqrt()
        }
    }
}

fn is_zero_denominator(den_norm: f64, scale: f64) -> bool {
    den_norm <= INFINITY_THRESHOLD * scale.max(1.0)
}

/// `α0 / α1`, or infinity when `α1` vanishes.
pub fn stereo_c(s: &OneQubitState) -> ExtendedPoint<Complex> {
    let [a0, a1] = *s.amplitudes();
    if a1.norm() <= INFINITY_THRESHOLD {
        ExtendedPoint::Infinity
    } else {
        ExtendedPoint::Finite(a0 / a1)
    }
}

/// `(a z + b) / (-conj(b) z + conj(a))`.
pub fn mobius_c(u: &SU2Params, z: &ExtendedPoint<Complex>) -> ExtendedPoint<Complex> {
    let (a, b) = (u.a, u.b);
    match z {
        ExtendedPoint::Infinity => {
            if b.norm() <= INFINITY_THRESHOLD {
                ExtendedPoint::Infinity
            } else {
                ExtendedPoint::Finite(-a / b.conj())
            }
        }
        ExtendedPoint::Finite(z) => {
            let num = a * z + b;
            let den = -b.conj() * z + a.conj();
            if is_zero_denominator(den.norm(), (1.0 + z.norm_sqr()).sqrt()) {
                ExtendedPoint::Infinity
            } else {
                ExtendedPoint::Finite(num / den)
            }
        }
    }
}

/// Decomposition `q1 q2⁻¹ = (S + C e2) / |q2|²`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QProjectionComponents {
    pub schmidt: Complex,
    pub concurrence: Complex,
    pub denom: f64,
}

impl QProjectionComponents {
    /// `S + C e2`, the projection value scaled by the denominator.
    pub fn numerator(&self) -> Quaternion {
        Quaternion::from_complex_pair(self.schmidt, self.concurrence)
    }
}

/// `q1 q2⁻¹` with `S = α conj(γ) + β conj(δ)`, `C = βγ - αδ` and
/// denominator `|q2|²`.
pub fn stereo_q(s: &QuaterbitState) -> (ExtendedPoint<Quaternion>, QProjectionComponents) {
    let [q1, q2] = s.q;
    let (a, b) = q1.to_complex_pair();
    let (c, d) = q2.to_complex_pair();
    let comps = QProjectionComponents {
        schmidt: a * c.conj() + b * d.conj(),
        concurrence: b * c - a * d,
        denom: q2.norm_sqr(),
    };
    let value = match q2.inv() {
        Ok(inv) if q2.norm() > INFINITY_THRESHOLD => ExtendedPoint::Finite(q1 * inv),
        _ => ExtendedPoint::Infinity,
    };
    (value, comps)
}

fn quaternion_quotient(num: Quaternion, den: Quaternion, scale: f64) -> ExtendedPoint<Quaternion> {
    if is_zero_denominator(den.norm(), scale) {
        return ExtendedPoint::Infinity;
    }
    match den.inv() {
        Ok(inv) => ExtendedPoint::Finite(num * inv),
        Err(_) => ExtendedPoint::Infinity,
    }
}

/// `[a q A' + b A'] [-conj(b) q A' + conj(a) A']⁻¹` for `u = A ⊗ A'`, with
/// `A'` in its quaternion image.
pub fn mobius_q_local(
    u: &LocalUnitary<2>,
    q: &ExtendedPoint<Quaternion>,
) -> ExtendedPoint<Quaternion> {
    let SU2Params { a, b } = u.factors[0];
    let right = u.factors[1].to_quaternion();
    let cq = Quaternion::from_complex;
    match q {
        ExtendedPoint::Infinity => {
            if b.norm() <= INFINITY_THRESHOLD {
                ExtendedPoint::Infinity
            } else {
                ExtendedPoint::Finite(cq(-a / b.conj()))
            }
        }
        ExtendedPoint::Finite(q) => {
            let qa = *q * right;
            let num = cq(a) * qa + cq(b) * right;
            let den = cq(-b.conj()) * qa + cq(a.conj()) * right;
            quaternion_quotient(num, den, (1.0 + q.norm_sqr()).sqrt())
        }
    }
}

/// `[p1 q + p2] [p3 q + p4]⁻¹`.
pub fn mobius_q_global(m: &Sp2Matrix, q: &ExtendedPoint<Quaternion>) -> ExtendedPoint<Quaternion> {
    let [p1, p2, p3, p4] = m.p();
    match q {
        ExtendedPoint::Infinity => quaternion_quotient(p1, p3, 1.0),
        ExtendedPoint::Finite(q) => {
            quaternion_quotient(p1 * *q + p2, p3 * *q + p4, (1.0 + q.norm_sqr()).sqrt())
        }
    }
}

/// Decomposition `õ1 õ2⁻¹ = (S0 + S1 e2 + (S2 + S3 e2) e4) / |o2|²`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OProjectionComponents {
    pub s0: Complex,
    pub s1: Complex,
    pub s2: Complex,
    pub s3: Complex,
    pub denom: f64,
}

impl OProjectionComponents {
    /// The components of the `1|23` layout read off amplitudes `t0..t7`.
    pub fn from_amplitudes(t: &[Complex; 8]) -> Self {
        let c = |z: Complex| z.conj();
        OProjectionComponents {
            s0: t[0] * c(t[4]) + t[1] * c(t[5]) + t[2] * c(t[6]) + t[3] * c(t[7]),
            s1: t[1] * t[4] - t[0] * t[5] + c(t[3]) * c(t[6]) - c(t[2]) * c(t[7]),
            s2: t[2] * t[4] - t[0] * t[6] + c(t[1]) * c(t[7]) - c(t[3]) * c(t[5]),
            s3: t[2] * t[5] - t[1] * t[6] + c(t[3]) * c(t[4]) - c(t[0]) * c(t[7]),
            denom: t[4..].iter().map(|z| z.norm_sqr()).sum(),
        }
    }

    pub fn numerator(&self) -> Octonion {
        Octonion::from_complex_quad([self.s0, self.s1, self.s2, self.s3])
    }

    /// `(|S1|, |S2|, |S3|)`, the components off the complex plane.
    pub fn off_plane(&self) -> [f64; 3] {
        [self.s1.norm(), self.s2.norm(), self.s3.norm()]
    }
}

/// `õ1 õ2⁻¹` with the components of the octobit's partition layout.
pub fn stereo_o(s: &OctobitState) -> (ExtendedPoint<Octonion>, OProjectionComponents) {
    let comps = OProjectionComponents::from_amplitudes(&s.permuted_amplitudes());
    let [o1, o2] = s.o.map(Octonion::tilde);
    let value = match o2.inv() {
        Ok(inv) if o2.norm() > INFINITY_THRESHOLD => ExtendedPoint::Finite(o1 * inv),
        _ => ExtendedPoint::Infinity,
    };
    (value, comps)
}

/// The octonionic Möbius transformation of a three-factor local unitary,
/// evaluated with the grouping
///
/// `(((a1 o + b1) K) (-ō b1 + a1)) / |-conj(b1) [{o A3} A2] + conj(a1) {A3 A2}|²`
///
/// where `K = [A3 {A2 conj(A2)}] conj(A3)`, `A3` is the quaternion image of
/// the third factor and `A2` the octonion image of the second. No product is
/// re-associated.
pub fn mobius_o(u: &LocalUnitary<3>, o: &ExtendedPoint<Octonion>) -> ExtendedPoint<Octonion> {
    let [f1, f2, f3] = u.factors;
    let (a1, b1) = (f1.a, f1.b);
    let co = Octonion::from_complex;
    let a3 = Octonion::from_quaternion(f3.to_quaternion());
    let a2 = f2.to_octonion();
    let o = match o {
        ExtendedPoint::Infinity => {
            return if b1.norm() <= INFINITY_THRESHOLD {
                ExtendedPoint::Infinity
            } else {
                ExtendedPoint::Finite(co(-a1 / b1.conj()))
            };
        }
        ExtendedPoint::Finite(o) => *o,
    };
    let k = (a3 * (a2 * a2.conj())) * a3.conj();
    let left = co(a1) * o + co(b1);
    let right = o.conj() * co(-b1) + co(a1);
    let num = (left * k) * right;
    let den = co(-b1.conj()) * ((o * a3) * a2) + co(a1.conj()) * (a3 * a2);
    let den_sqr = den.norm_sqr();
    if is_zero_denominator(den_sqr.sqrt(), (1.0 + o.norm_sqr()).sqrt()) {
        ExtendedPoint::Infinity
    } else {
        ExtendedPoint::Finite(num.scale(1.0 / den_sqr))
    }
}
