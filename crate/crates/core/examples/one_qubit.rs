//! Projection of a qubit onto the extended complex plane and the Möbius
//! image of an SU(2) action.
//!
//! `cargo run --example one_qubit`

use hyperqubit::dynamics::bloch_state;
use hyperqubit::maps::{chordal_distance, mobius_c, stereo_c};
use hyperqubit::states::{apply_local_unitary, one, plus, zero, LocalUnitary, SU2Params};
use hyperqubit::Complex;

/// Returns the chordal distance between the two routes for a sample action.
pub fn run_example() -> f64 {
    println!("P|0> = {:?}", stereo_c(&zero()));
    println!("P|1> = {:?}", stereo_c(&one()));
    println!("P|+> = {:?}", stereo_c(&plus()));

    let u = SU2Params::new(Complex::new(0.6, 0.0), Complex::new(0.0, 0.8)).expect("unitary");
    let s = bloch_state(1.0, 0.3);
    let moved = apply_local_unitary(&s, &LocalUnitary::new([u])).expect("one qubit");
    let via_state = stereo_c(&moved);
    let via_mobius = mobius_c(&u, &stereo_c(&s));
    let d = chordal_distance(&via_state, &via_mobius);
    println!("P(A ψ) = {via_state:?}, F_A(P ψ) = {via_mobius:?}, distance {d:.2e}");
    d
}

#[allow(dead_code)]
fn main() {
    run_example();
}
