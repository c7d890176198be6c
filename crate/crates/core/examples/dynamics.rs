//! Hadamard evolution of a qubit, its Bloch trajectory and the circle it
//! traces on the extended complex plane.
//!
//! `cargo run --example dynamics`

use hyperqubit::dynamics::{
    concyclicity_residual, default_grid, hadamard, hadamard_plane_closed_form, theta_family,
    trajectory,
};
use hyperqubit::states::one;

/// Returns the largest gap to the closed form and the concyclicity residual.
pub fn run_example() -> (f64, f64) {
    let traj = trajectory(&hadamard(), &one(), &default_grid()).expect("valid grid");
    let gap = traj
        .samples
        .iter()
        .filter_map(|s| {
            s.plane
                .finite()
                .map(|z| (z - hadamard_plane_closed_form(s.t)).norm())
        })
        .fold(0.0, f64::max);
    let circle = concyclicity_residual(&traj.plane_points());
    println!(
        "{} samples; closed-form gap {gap:.2e}; concyclicity residual {circle:.2e}",
        traj.samples.len()
    );
    for line in traj.to_csv().lines().take(3) {
        println!("{line}");
    }
    for (k, s0) in theta_family().into_iter().step_by(4) {
        let t = trajectory(&hadamard(), &s0, &default_grid()).expect("valid grid");
        println!(
            "θ = {k}/15: residual {:.2e}",
            concyclicity_residual(&t.plane_points())
        );
    }
    (gap, circle)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
