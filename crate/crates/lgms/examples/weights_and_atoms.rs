//! Reads off the weight system and atomic decomposition of a few potentials.
//!
//! Run with `cargo run --example weights_and_atoms`.

use lgms::polyspec::{classify_atoms, ExponentMatrix, WeightSystem};

fn describe(label: &str, rows: Vec<Vec<i64>>) {
    let matrix = ExponentMatrix::new(rows).expect("invertible potential");
    let weights = WeightSystem::from_matrix(&matrix).expect("positive weights");
    let atoms = classify_atoms(&matrix).expect("atomic decomposition");
    println!("{label}: {}", matrix.display());
    println!("  weights {weights}");
    println!(
        "  half-CY: {}, CY: {}",
        weights.is_half_cy(),
        weights.is_cy()
    );
    let labels: Vec<String> = atoms.iter().map(|a| a.label()).collect();
    println!("  atoms: {}", labels.join(" + "));
    println!();
}

fn main() {
    describe("quartic curve", vec![vec![4, 0], vec![0, 4]]);
    describe("loop quartic", vec![vec![3, 1], vec![1, 3]]);
    describe(
        "mixed loop/Fermat surface",
        vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]],
    );
    describe(
        "chain example",
        vec![vec![3, 1, 0], vec![0, 2, 1], vec![0, 0, 4]],
    );
}
