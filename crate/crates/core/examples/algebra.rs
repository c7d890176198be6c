//! Quaternion and octonion arithmetic: products, norms, inverses and the
//! non-associativity witness.
//!
//! `cargo run --example algebra`

use hyperqubit::hypercomplex::{octonion_table, Octonion, Quaternion};

/// Returns `((e1 e2) e4, e1 (e2 e4))`.
pub fn run_example() -> (Octonion, Octonion) {
    let p = Quaternion::new(1.0, 2.0, -0.5, 0.25);
    let q = Quaternion::new(0.0, 1.0, 1.0, -3.0);
    println!("p = {p}, q = {q}");
    println!("pq = {}, qp = {}", p * q, q * p);
    println!(
        "|pq| = {:.12} = |p||q| = {:.12}",
        (p * q).norm(),
        p.norm() * q.norm()
    );
    println!("p⁻¹ p = {}", p.inv().expect("nonzero") * p);

    let e = Octonion::basis;
    let left = (e(1) * e(2)) * e(4);
    let right = e(1) * (e(2) * e(4));
    println!("(e1 e2) e4 = {left}, e1 (e2 e4) = {right}");
    println!(
        "e2 e4 = {}, e7 e2 = {}",
        octonion_table()[2][4],
        octonion_table()[7][2]
    );
    (left, right)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
