//! Concurrence of two-qubit states and of the three bipartitions of
//! three-qubit states.
//!
//! `cargo run --example entanglement`

use hyperqubit::entanglement::{concurrence2, concurrence3};
use hyperqubit::states::{bell, ghz, w, zero, Partition, ThreeQubitState};

/// Returns the `1|23`, `2|13`, `3|12` concurrences of W.
pub fn run_example() -> [f64; 3] {
    println!("C(Bell) = {:.6}", concurrence2(&bell()));
    let states = [
        ("GHZ", ghz()),
        ("W", w()),
        ("|0>|Bell>", ThreeQubitState::product(&zero(), &bell())),
    ];
    for (name, s) in &states {
        let c = Partition::ALL.map(|p| concurrence3(s, p));
        println!(
            "{name}: 1|23 {:.6}  2|13 {:.6}  3|12 {:.6}",
            c[0], c[1], c[2]
        );
    }
    Partition::ALL.map(|p| concurrence3(&w(), p))
}

#[allow(dead_code)]
fn main() {
    run_example();
}
