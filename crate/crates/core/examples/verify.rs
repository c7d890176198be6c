//! Runs the full verification harness and prints one line per check and
//! claim.
//!
//! `cargo run --release --example verify -- [seed] [samples]`

use hyperqubit::verify::{run, Report, Suite};

pub fn run_example(seed: u64, n: usize) -> Report {
    let report = run(Suite::All, seed, n);
    for c in &report.checks {
        let status = if c.pass { "pass" } else { "FAIL" };
        println!(
            "{status:4}  {:<40} {:.3e} (tol {:.0e})",
            c.name, c.max_chordal_error, c.tolerance
        );
    }
    for c in &report.claims {
        let forced = if c.forced { "forced" } else { "" };
        println!(
            "{:?}  {:<72} {:.3e} (tol {:.0e}) {forced}",
            c.verdict, c.claim_id, c.max_error, c.tolerance
        );
    }
    println!(
        "resampled near infinity: {}",
        report.resampled_near_infinity
    );
    report
}

#[allow(dead_code)]
fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let n = args.next().and_then(|s| s.parse().ok()).unwrap_or(10_000);
    let report = run_example(seed, n);
    std::process::exit(report.exit_code());
}
