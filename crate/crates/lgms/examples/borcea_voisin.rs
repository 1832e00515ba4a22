//! Assembles product Calabi-Yau diamonds from the invariant/anti-invariant
//! blocks of two half-CY factors, then rebuilds one of them from a single
//! block-sum potential as a cross-check.
//!
//! Run with `cargo run --example borcea_voisin`.

use lgms::diamond::render_diamond;
use lgms::model::{resolve_group, ModelContext};
use lgms::polyspec::{ExponentMatrix, GroupDirective, WeightSystem};
use lgms::product::{direct_product_table, product_diamond};
use lgms::symmetry::DEFAULT_CAP;

fn model(name: &str, rows: Vec<Vec<i64>>) -> ModelContext {
    let matrix = ExponentMatrix::new(rows).unwrap();
    let weights = WeightSystem::from_matrix(&matrix).unwrap();
    let group = resolve_group(&matrix, &weights, &GroupDirective::JSquared, DEFAULT_CAP).unwrap();
    ModelContext::from_parts(name.into(), matrix, group, DEFAULT_CAP).unwrap()
}

fn main() {
    let elliptic = model("elliptic", vec![vec![4, 0], vec![0, 4]]);
    let mixed = model(
        "mixed-k3",
        vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]],
    );

    // Two elliptic curves with involutions produce a K3.
    let e1 = elliptic.four_pieces().unwrap();
    let table = product_diamond(&e1, &e1);
    println!("elliptic x elliptic:");
    println!("{}", render_diamond(&table));

    // A K3 with involution times an elliptic curve: a threefold.
    let k3 = mixed.four_pieces().unwrap();
    let table = product_diamond(&k3, &e1);
    println!("K3 x elliptic:");
    println!("{}", render_diamond(&table));

    // Independent rebuild as one Landau-Ginzburg model of the block-sum
    // potential under the combined group.
    let direct = direct_product_table(&mixed, &elliptic).unwrap();
    println!(
        "direct block-sum rebuild agrees: {}",
        if direct == table { "yes" } else { "NO" }
    );
}
