//! Octobit encodings of three qubits for each bipartition, the octonionic
//! projection, and the routes of the local-unitary diagram.
//!
//! `cargo run --example three_qubit`

use hyperqubit::maps::{chordal_distance, mobius_o, stereo_o};
use hyperqubit::states::random::{random_local_unitary, random_state, seeded_rng};
use hyperqubit::states::{
    apply_local_unitary, ghz, w, LocalUnitary, OctobitState, Partition, ThreeQubitState,
    TwoQuaterbitState,
};

/// Returns the distances of the quaternionic, octonionic and Möbius routes
/// from the oracle for one random sample.
pub fn run_example() -> [f64; 3] {
    for (name, s) in [("GHZ", ghz()), ("W", w())] {
        for p in Partition::ALL {
            let (v, c) = stereo_o(&OctobitState::octonify(&s, p));
            let v = v.finite().map_or("inf".to_string(), |o| o.to_string());
            println!(
                "{name} {p}: {v}  (S1, S2, S3 magnitudes {:?})",
                c.off_plane()
            );
        }
    }

    let mut rng = seeded_rng(5);
    let s: ThreeQubitState = random_state(&mut rng);
    let u: LocalUnitary<3> = random_local_unitary(&mut rng);
    let p = Partition::OneTwoThree;
    let oracle = stereo_o(&OctobitState::octonify(
        &apply_local_unitary(&s, &u).expect("three qubits"),
        p,
    ))
    .0;
    let quaternionic = stereo_o(&TwoQuaterbitState::quaternify(&s).apply_local(&u).octonify()).0;
    let octonionic = stereo_o(&OctobitState::octonify(&s, p).apply_local(&u)).0;
    let omt = mobius_o(&u, &stereo_o(&OctobitState::octonify(&s, p)).0);
    let d = [quaternionic, octonionic, omt].map(|x| chordal_distance(&oracle, &x));
    println!(
        "distance from the oracle: quaternionic {:.2e}, octonionic {:.2e}, Möbius {:.2e}",
        d[0], d[1], d[2]
    );
    d
}

#[allow(dead_code)]
fn main() {
    run_example();
}
