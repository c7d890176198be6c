//! Global Sp(2) action on a quaterbit and its quaternionic Möbius map.
//!
//! `cargo run --example sp2`

use hyperqubit::maps::{chordal_distance, mobius_q_global, stereo_q};
use hyperqubit::states::random::{random_sp2, random_state, seeded_rng};
use hyperqubit::states::{QuaterbitState, TwoQubitState};

/// Returns the chordal distance between `P(A ψ)` and `F_A(P ψ)`.
pub fn run_example() -> f64 {
    let mut rng = seeded_rng(3);
    let m = random_sp2(&mut rng);
    println!(
        "A†A - I residual {:.2e}, U J Uᵀ - J residual {:.2e}",
        m.unitarity_residual(),
        m.symplectic_residual()
    );
    let s: TwoQubitState = random_state(&mut rng);
    let q = QuaterbitState::quaternify(&s);
    let acted = stereo_q(&m.apply(&q)).0;
    let mapped = mobius_q_global(&m, &stereo_q(&q).0);
    let d = chordal_distance(&acted, &mapped);
    println!("P(A ψ) = {acted:?}");
    println!("F_A(P ψ) = {mapped:?}  (distance {d:.2e})");
    d
}

#[allow(dead_code)]
fn main() {
    run_example();
}
