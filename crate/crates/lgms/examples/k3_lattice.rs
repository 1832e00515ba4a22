//! Computes Nikulin lattice invariants (r, a) for K3 double covers with
//! involution, from the component count and total genus of the branch curve.
//!
//! Run with `cargo run --example k3_lattice`.

use lgms::geometry::k3_report;
use lgms::model::{resolve_group, ModelContext};
use lgms::polyspec::{ExponentMatrix, GroupDirective, WeightSystem};
use lgms::symmetry::DEFAULT_CAP;

fn report(name: &str, rows: Vec<Vec<i64>>, directive: GroupDirective) {
    let matrix = ExponentMatrix::new(rows).unwrap();
    let weights = WeightSystem::from_matrix(&matrix).unwrap();
    let group = resolve_group(&matrix, &weights, &directive, DEFAULT_CAP).unwrap();
    let ctx = ModelContext::from_parts(name.into(), matrix, group, DEFAULT_CAP).unwrap();
    let k3 = k3_report(&ctx).expect("surface model");
    println!("{name}:");
    println!(
        "  branch: N = {} components, N' = {} total genus ({} geometric pieces)",
        k3.n, k3.n_prime, k3.components
    );
    println!(
        "  invariant lattice (r, a) = ({}, {}), mirror ({}, {})",
        k3.r, k3.a, k3.mirror_r, k3.mirror_a
    );
    if !k3.note.is_empty() {
        println!("  note: {}", k3.note);
    }
    println!();
}

fn main() {
    let sextic = vec![vec![6, 0, 0], vec![0, 6, 0], vec![0, 0, 6]];
    report(
        "sextic with <J^2>",
        sextic.clone(),
        GroupDirective::JSquared,
    );
    report("sextic with SL", sextic, GroupDirective::Sl);
    report(
        "mixed loop/Fermat surface",
        vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]],
        GroupDirective::JSquared,
    );
}
