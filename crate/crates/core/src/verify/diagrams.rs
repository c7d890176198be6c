//! Commuting-diagram checks against the complex-vector oracle.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::sampling::{nan_max, sample_max, NEAR_INFINITY};
use super::{ClaimStatus, DiagramCheck};
use crate::dynamics::{
    concyclicity_residual, default_grid, hadamard, hadamard_plane_closed_form, trajectory,
};
use crate::maps::{
    chordal_distance, mobius_c, mobius_o, mobius_q_global, mobius_q_local, stereo_c, stereo_o,
    stereo_q,
};
use crate::states::random::{random_local_unitary, random_sp2, random_state};
use crate::states::{
    apply_local_unitary, one, LocalUnitary, OctobitState, Partition, QuaterbitState, Sp2Matrix,
    State, TwoQuaterbitState,
};

pub(crate) const STREAM_1Q: u64 = 1;
pub(crate) const STREAM_2Q: u64 = 2;
pub(crate) const STREAM_SP2: u64 = 3;
pub(crate) const STREAM_SP2_EMBED: u64 = 4;
pub(crate) const STREAM_3Q: u64 = 5;

/// Which local unitaries a check samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitaryFamily {
    /// Independent Haar-random factors.
    Haar,
    Identity,
    /// A random first factor, identity elsewhere.
    FirstFactor,
}

impl UnitaryFamily {
    pub(crate) fn sample<const K: usize, R: Rng + ?Sized>(self, rng: &mut R) -> LocalUnitary<K> {
        match self {
            UnitaryFamily::Haar => random_local_unitary(rng),
            UnitaryFamily::Identity => LocalUnitary::identity(),
            UnitaryFamily::FirstFactor => {
                let mut u = LocalUnitary::<K>::identity();
                u.factors[0] = random_local_unitary::<1, _>(rng).factors[0];
                u
            }
        }
    }
}

pub fn check_diagram_1q(seed: u64, n: usize) -> DiagramCheck {
    check_diagram_1q_with(seed, n, UnitaryFamily::Haar)
}

/// `mobius_c(u, stereo_c(s))` against `stereo_c(u s)`.
pub fn check_diagram_1q_with(seed: u64, n: usize, family: UnitaryFamily) -> DiagramCheck {
    let s = sample_max(seed, STREAM_1Q, n, |rng| {
        let s: State<2> = random_state(rng);
        let u: LocalUnitary<1> = family.sample(rng);
        let out = apply_local_unitary(&s, &u).ok()?;
        let (d0, d1) = (s.amplitudes()[1].norm_sqr(), out.amplitudes()[1].norm_sqr());
        if d0 < NEAR_INFINITY || d1 < NEAR_INFINITY {
            return None;
        }
        let lhs = mobius_c(&u.factors[0], &stereo_c(&s));
        Some([chordal_distance(&lhs, &stereo_c(&out))])
    });
    DiagramCheck::new("one-qubit intertwining", n, s.max[0], 1e-10).with_resampled(s.resampled)
}

/// The Hadamard trajectory of `|1>` on the default grid: pointwise agreement
/// of the projected states with the closed-form plane curve, and
/// concyclicity of the projected points.
pub fn check_hadamard() -> [DiagramCheck; 2] {
    let grid = default_grid();
    let traj = trajectory(&hadamard(), &one(), &grid).expect("default grid is valid");
    let pointwise = traj
        .samples
        .iter()
        .map(|s| match s.plane.finite() {
            Some(z) => (z - hadamard_plane_closed_form(s.t)).norm(),
            None => f64::INFINITY,
        })
        .fold(0.0, nan_max);
    let circle = concyclicity_residual(&traj.plane_points());
    [
        DiagramCheck::new(
            "Hadamard trajectory closed form",
            grid.len(),
            pointwise,
            1e-12,
        ),
        DiagramCheck::new("Hadamard trajectory concyclicity", grid.len(), circle, 1e-9),
    ]
}

pub fn check_diagram_2q(seed: u64, n: usize) -> DiagramCheck {
    check_diagram_2q_with(seed, n, UnitaryFamily::Haar)
}

/// Largest pairwise distance among the oracle route, the right-module
/// route and the Möbius route.
pub fn check_diagram_2q_with(seed: u64, n: usize, family: UnitaryFamily) -> DiagramCheck {
    let s = sample_max(seed, STREAM_2Q, n, |rng| {
        let s: State<4> = random_state(rng);
        let u: LocalUnitary<2> = family.sample(rng);
        let q = QuaterbitState::quaternify(&s);
        let (p0, c0) = stereo_q(&q);
        let (oracle, c1) = stereo_q(&QuaterbitState::quaternify(
            &apply_local_unitary(&s, &u).ok()?,
        ));
        if c0.denom < NEAR_INFINITY || c1.denom < NEAR_INFINITY {
            return None;
        }
        let module = stereo_q(&q.apply_local(&u)).0;
        let mobius = mobius_q_local(&u, &p0);
        let d = chordal_distance(&oracle, &module)
            .max(chordal_distance(&oracle, &mobius))
            .max(chordal_distance(&module, &mobius));
        Some([d])
    });
    DiagramCheck::new("two-qubit intertwining", n, s.max[0], 1e-9).with_resampled(s.resampled)
}

pub fn check_diagram_sp2(seed: u64, n: usize) -> DiagramCheck {
    check_diagram_sp2_with(seed, n, UnitaryFamily::Haar)
}

/// `mobius_q_global(m, stereo_q(q))` against `stereo_q(m q)`. The identity
/// family uses the identity matrix; any other family draws random Sp(2)
/// elements.
pub fn check_diagram_sp2_with(seed: u64, n: usize, family: UnitaryFamily) -> DiagramCheck {
    let s = sample_max(seed, STREAM_SP2, n, |rng| {
        let s: State<4> = random_state(rng);
        let m = match family {
            UnitaryFamily::Identity => Sp2Matrix::identity(),
            _ => random_sp2(rng),
        };
        let q = QuaterbitState::quaternify(&s);
        let (p0, c0) = stereo_q(&q);
        let (p1, c1) = stereo_q(&m.apply(&q));
        if c0.denom < NEAR_INFINITY || c1.denom < NEAR_INFINITY {
            return None;
        }
        Some([chordal_distance(&p1, &mobius_q_global(&m, &p0))])
    });
    DiagramCheck::new("Sp(2) intertwining", n, s.max[0], 1e-9).with_resampled(s.resampled)
}

/// The first factor of a two-qubit local unitary embedded in Sp(2): its
/// global Möbius image agrees with the local Möbius map of the full local
/// unitary and with the oracle. The second factor acts by right
/// multiplication and cancels in the quotient.
pub fn check_sp2_embedding(seed: u64, n: usize) -> DiagramCheck {
    let s = sample_max(seed, STREAM_SP2_EMBED, n, |rng| {
        let s: State<4> = random_state(rng);
        let u: LocalUnitary<2> = random_local_unitary(rng);
        let (p0, c0) = stereo_q(&QuaterbitState::quaternify(&s));
        let (oracle, c1) = stereo_q(&QuaterbitState::quaternify(
            &apply_local_unitary(&s, &u).ok()?,
        ));
        if c0.denom < NEAR_INFINITY || c1.denom < NEAR_INFINITY {
            return None;
        }
        let global = mobius_q_global(&Sp2Matrix::from_su2(&u.factors[0]), &p0);
        let local = mobius_q_local(&u, &p0);
        Some([chordal_distance(&global, &local).max(chordal_distance(&global, &oracle))])
    });
    DiagramCheck::new("Sp(2) embedded local subgroup", n, s.max[0], 1e-9)
        .with_resampled(s.resampled)
}

/// The forced three-qubit routes as gated checks and the octonionic Möbius
/// route as a measured claim.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeQubitPaths {
    /// Quaternionic route, then octonionic route, each against the oracle.
    pub checks: [DiagramCheck; 2],
    pub omt: ClaimStatus,
}

pub fn check_diagram_3q(seed: u64, n: usize) -> ThreeQubitPaths {
    check_diagram_3q_with(seed, n, UnitaryFamily::Haar)
}

/// For partition `1|23`, projects
/// 1. the oracle-transformed state,
/// 2. the two-quaterbit action `A1 ⊗ A2 [|ψ>_q A3]`,
/// 3. the octobit action `A1 {[|ψ>_o A3] A2}`,
/// 4. `mobius_o` of the untransformed projection,
///
/// and reports the largest distance of routes 2, 3 and 4 from route 1.
pub fn check_diagram_3q_with(seed: u64, n: usize, family: UnitaryFamily) -> ThreeQubitPaths {
    let s = sample_max(seed, STREAM_3Q, n, |rng| three_qubit_sample(rng, family));
    let [quaternionic, octonionic, omt] = s.max;
    let (omt_id, omt_notes) = match family {
        UnitaryFamily::FirstFactor => (
            "Eq. (OMT) first-factor family A1 x I x I",
            "mobius_o with A2 = A3 = I against the oracle route",
        ),
        _ => (
            "Eq. (OMT) full local group",
            "mobius_o with literal bracket order against the oracle route",
        ),
    };
    ThreeQubitPaths {
        checks: [
            DiagramCheck::new("three-qubit quaternionic route", n, quaternionic, 1e-9)
                .with_resampled(s.resampled),
            DiagramCheck::new("three-qubit octonionic route", n, octonionic, 1e-9),
        ],
        omt: ClaimStatus::new(omt_id, "Eq. (OMT)", omt, 1e-9, false).with_notes(omt_notes),
    }
}

fn three_qubit_sample(rng: &mut ChaCha8Rng, family: UnitaryFamily) -> Option<[f64; 3]> {
    let s: State<8> = random_state(rng);
    let u: LocalUnitary<3> = family.sample(rng);
    let p = Partition::OneTwoThree;
    let (p0, c0) = stereo_o(&OctobitState::octonify(&s, p));
    let (oracle, c1) = stereo_o(&OctobitState::octonify(
        &apply_local_unitary(&s, &u).ok()?,
        p,
    ));
    if c0.denom < NEAR_INFINITY || c1.denom < NEAR_INFINITY {
        return None;
    }
    let quaternionic = stereo_o(&TwoQuaterbitState::quaternify(&s).apply_local(&u).octonify()).0;
    let octonionic = stereo_o(&OctobitState::octonify(&s, p).apply_local(&u)).0;
    let omt = mobius_o(&u, &p0);
    Some([
        chordal_distance(&oracle, &quaternionic),
        chordal_distance(&oracle, &octonionic),
        chordal_distance(&oracle, &omt),
    ])
}
