//! Complex amplitude states, their quaternionic and octonionic encodings, and
//! the unitary actions on each representation.

mod encode;
pub mod io;
pub mod random;
mod unitary;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercomplex::Complex;

pub use encode::{OctobitState, QuaterbitState, TwoQuaterbitState};
pub use unitary::{apply_local_unitary, LocalUnitary, SU2Params, Sp2Matrix};

/// Inputs whose squared norm is within this distance of 1 are renormalized;
/// anything further off is rejected.
pub const RENORMALIZE_TOLERANCE: f64 = 1e-8;

/// A normalized pure state of `log2(N)` qubits in lexicographic basis order
/// (`|0..0>, |0..1>, ...`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct State<const N: usize> {
    amplitudes: [Complex; N],
}

impl<const N: usize> Serialize for State<N> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.amplitudes.as_slice().serialize(s)
    }
}

pub type OneQubitState = State<2>;
pub type TwoQubitState = State<4>;
pub type ThreeQubitState = State<8>;

impl<const N: usize> State<N> {
    pub fn new(amplitudes: [Complex; N]) -> Result<Self> {
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > RENORMALIZE_TOLERANCE {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let scale = norm_sqr.sqrt().recip();
        Ok(State {
            amplitudes: amplitudes.map(|z| z * scale),
        })
    }

    pub fn from_slice(amplitudes: &[Complex]) -> Result<Self> {
        let arr: [Complex; N] = amplitudes
            .try_into()
            .map_err(|_| Error::DimensionMismatch {
                expected: N,
                found: amplitudes.len(),
            })?;
        Self::new(arr)
    }

    /// Scales an arbitrary nonzero vector to unit norm.
    pub fn normalized(amplitudes: [Complex; N]) -> Result<Self> {
        let n: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::NotNormalized { norm_sqr: n * n });
        }
        Self::new(amplitudes.map(|z| z / n))
    }

    pub fn basis(index: usize) -> Self {
        let mut amplitudes = [Complex::new(0.0, 0.0); N];
        amplitudes[index] = Complex::new(1.0, 0.0);
        State { amplitudes }
    }

    pub fn amplitudes(&self) -> &[Complex; N] {
        &self.amplitudes
    }

    pub fn n_qubits(&self) -> usize {
        N.trailing_zeros() as usize
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    pub(crate) fn from_raw(amplitudes: [Complex; N]) -> Self {
        State { amplitudes }
    }
}

impl ThreeQubitState {
    /// `|a> ⊗ |b c>`.
    pub fn product(first: &OneQubitState, rest: &TwoQubitState) -> Self {
        let a = first.amplitudes();
        let b = rest.amplitudes();
        State::from_raw(std::array::from_fn(|i| a[i / 4] * b[i % 4]))
    }

    /// Amplitudes reordered so that the partition's single qubit becomes the
    /// first qubit: `t'[abc]` is the amplitude where qubit `roles[0]` reads
    /// `a`, qubit `roles[1]` reads `b` and qubit `roles[2]` reads `c`.
    pub fn permuted(&self, partition: Partition) -> [Complex; 8] {
        let t = self.amplitudes();
        std::array::from_fn(|i| t[partition.source_index(i)])
    }

    pub fn from_permuted(t: [Complex; 8], partition: Partition) -> Result<Self> {
        let mut out = [Complex::new(0.0, 0.0); 8];
        for (i, z) in t.into_iter().enumerate() {
            out[partition.source_index(i)] = z;
        }
        Self::new(out)
    }
}

impl TwoQubitState {
    pub fn product(a: &OneQubitState, b: &OneQubitState) -> Self {
        let (a, b) = (a.amplitudes(), b.amplitudes());
        State::from_raw(std::array::from_fn(|i| a[i / 2] * b[i % 2]))
    }
}

impl<'de, const N: usize> Deserialize<'de> for State<N> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<Complex>::deserialize(d)?;
        State::from_slice(&v).map_err(serde::de::Error::custom)
    }
}

const FRAC_1_SQRT_3: f64 = 0.577_350_269_189_625_8;

pub fn zero() -> OneQubitState {
    State::basis(0)
}

pub fn one() -> OneQubitState {
    State::basis(1)
}

pub fn plus() -> OneQubitState {
    let h = Complex::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    State::from_raw([h, h])
}

/// `(|00> + |11>)/sqrt 2`.
pub fn bell() -> TwoQubitState {
    let h = Complex::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let z = Complex::new(0.0, 0.0);
    State::from_raw([h, z, z, h])
}

/// `(|000> + |111>)/sqrt 2`.
pub fn ghz() -> ThreeQubitState {
    let h = Complex::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let mut t = [Complex::new(0.0, 0.0); 8];
    t[0] = h;
    t[7] = h;
    State::from_raw(t)
}

/// `(|001> + |010> + |100>)/sqrt 3`.
pub fn w() -> ThreeQubitState {
    let h = Complex::new(FRAC_1_SQRT_3, 0.0);
    let mut t = [Complex::new(0.0, 0.0); 8];
    t[1] = h;
    t[2] = h;
    t[4] = h;
    State::from_raw(t)
}

/// A state of one, two or three qubits, as read from user input.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AnyState {
    One(OneQubitState),
    Two(TwoQubitState),
    Three(ThreeQubitState),
}

impl AnyState {
    pub fn from_amplitudes(amplitudes: &[Complex]) -> Result<Self> {
        match amplitudes.len() {
            2 => Ok(AnyState::One(State::from_slice(amplitudes)?)),
            4 => Ok(AnyState::Two(State::from_slice(amplitudes)?)),
            8 => Ok(AnyState::Three(State::from_slice(amplitudes)?)),
            found => Err(Error::DimensionMismatch { expected: 8, found }),
        }
    }

    pub fn n_qubits(&self) -> usize {
        match self {
            AnyState::One(_) => 1,
            AnyState::Two(_) => 2,
            AnyState::Three(_) => 3,
        }
    }

    pub fn amplitudes(&self) -> &[Complex] {
        match self {
            AnyState::One(s) => s.amplitudes(),
            AnyState::Two(s) => s.amplitudes(),
            AnyState::Three(s) => s.amplitudes(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedState {
    Bell,
    Ghz,
    W,
    Plus,
    Zero,
    One,
}

impl NamedState {
    pub const ALL: [NamedState; 6] = [
        NamedState::Bell,
        NamedState::Ghz,
        NamedState::W,
        NamedState::Plus,
        NamedState::Zero,
        NamedState::One,
    ];

    pub fn state(self) -> AnyState {
        match self {
            NamedState::Bell => AnyState::Two(bell()),
            NamedState::Ghz => AnyState::Three(ghz()),
            NamedState::W => AnyState::Three(w()),
            NamedState::Plus => AnyState::One(plus()),
            NamedState::Zero => AnyState::One(zero()),
            NamedState::One => AnyState::One(one()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedState::Bell => "bell",
            NamedState::Ghz => "ghz",
            NamedState::W => "w",
            NamedState::Plus => "plus",
            NamedState::Zero => "zero",
            NamedState::One => "one",
        }
    }
}

impl FromStr for NamedState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedState::ALL
            .into_iter()
            .find(|n| n.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown named state '{s}'")))
    }
}

/// Bipartition of three qubits into a single qubit and the remaining pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Partition {
    #[serde(rename = "1|23")]
    OneTwoThree,
    #[serde(rename = "2|13")]
    TwoOneThree,
    #[serde(rename = "3|12")]
    ThreeOneTwo,
}

impl Partition {
    pub const ALL: [Partition; 3] = [
        Partition::OneTwoThree,
        Partition::TwoOneThree,
        Partition::ThreeOneTwo,
    ];

    /// Physical qubits (1-based) playing the row, `e4` and `e2` roles of the
    /// octonionic encoding.
    pub fn qubit_roles(self) -> [usize; 3] {
        match self {
            Partition::OneTwoThree => [1, 2, 3],
            Partition::TwoOneThree => [2, 1, 3],
            Partition::ThreeOneTwo => [3, 1, 2],
        }
    }

    /// Index into the original amplitudes for position `i` of the permuted
    /// layout.
    pub(crate) fn source_index(self, i: usize) -> usize {
        let roles = self.qubit_roles();
        let mut j = 0;
        for (slot, &qubit) in roles.iter().enumerate() {
            let bit = (i >> (2 - slot)) & 1;
            j |= bit << (3 - qubit);
        }
        j
    }

    pub fn label(self) -> &'static str {
        match self {
            Partition::OneTwoThree => "1|23",
            Partition::TwoOneThree => "2|13",
            Partition::ThreeOneTwo => "3|12",
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().replace('-', "|").as_str() {
            "1|23" => Ok(Partition::OneTwoThree),
            "2|13" => Ok(Partition::TwoOneThree),
            "3|12" => Ok(Partition::ThreeOneTwo),
            _ => Err(Error::Parse(format!("unknown partition '{s}'"))),
        }
    }
}
