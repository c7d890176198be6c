//! Quaterbit encoding of two qubits, the quaternionic projection with its
//! Schmidt and concurrence terms, and the local Möbius map.
//!
//! `cargo run --example two_qubit`

use hyperqubit::maps::{chordal_distance, mobius_q_local, stereo_q};
use hyperqubit::states::random::{random_local_unitary, random_state, seeded_rng};
use hyperqubit::states::{apply_local_unitary, bell, LocalUnitary, QuaterbitState, TwoQubitState};

/// Returns the largest disagreement among the three routes for one random
/// state and local unitary.
pub fn run_example() -> f64 {
    let (value, c) = stereo_q(&QuaterbitState::quaternify(&bell()));
    println!(
        "Bell: value {value:?}, S = {}, C = {}, |q2|² = {}",
        c.schmidt, c.concurrence, c.denom
    );

    let mut rng = seeded_rng(7);
    let s: TwoQubitState = random_state(&mut rng);
    let u: LocalUnitary<2> = random_local_unitary(&mut rng);
    let q = QuaterbitState::quaternify(&s);
    let oracle = stereo_q(&QuaterbitState::quaternify(
        &apply_local_unitary(&s, &u).expect("two qubits"),
    ))
    .0;
    let module = stereo_q(&q.apply_local(&u)).0;
    let mobius = mobius_q_local(&u, &stereo_q(&q).0);
    let d = chordal_distance(&oracle, &module).max(chordal_distance(&oracle, &mobius));
    println!("random state: oracle {oracle:?}");
    println!("right-module and Möbius routes agree to {d:.2e}");
    d
}

#[allow(dead_code)]
fn main() {
    run_example();
}
