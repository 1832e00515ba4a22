//! Builds the orbifold state space of the quartic curve sector by sector,
//! printing every class with its bidegree.
//!
//! Run with `cargo run --example state_space`.

use lgms::model::{resolve_group, ModelContext};
use lgms::polyspec::{ExponentMatrix, GroupDirective, WeightSystem};
use lgms::statespace::sector_contributions;
use lgms::symmetry::DEFAULT_CAP;

fn main() {
    let matrix = ExponentMatrix::new(vec![vec![4, 0], vec![0, 4]]).unwrap();
    let weights = WeightSystem::from_matrix(&matrix).unwrap();
    let group = resolve_group(&matrix, &weights, &GroupDirective::JSquared, DEFAULT_CAP).unwrap();
    let ctx = ModelContext::from_parts("quartic".into(), matrix, group, DEFAULT_CAP).unwrap();

    // The suspension x0^2 + W carries the double-cover geometry; its sectors
    // run over the group extended by sigma and the grading element.
    let sus = ctx.suspension().unwrap();
    let sectors = sus.sector_group(ctx.cap).unwrap();
    let invariance = sus.invariance_group(ctx.cap).unwrap();
    println!(
        "suspension {} with {} sectors, invariance group of order {}",
        sus.matrix.display(),
        sectors.order(),
        invariance.order()
    );

    let contributions = sector_contributions(
        &sus.matrix,
        &sus.weights,
        &sectors,
        &invariance,
        &sus.engine,
    )
    .unwrap();
    for c in contributions {
        if c.table.is_empty() {
            continue;
        }
        println!(
            "sector ({})  age {}  fixed {:?}{}",
            c.element.to_strings().join(", "),
            c.element.age(),
            c.fixed,
            if c.is_narrow() { "  [narrow]" } else { "" }
        );
        for (p, q, dim) in c.table.iter() {
            println!("    h^({p}, {q}) = {dim}");
        }
    }

    let pieces = ctx.four_pieces().unwrap();
    println!("\ncover classes (invariant + anti-invariant):");
    for (p, q, dim) in pieces.cr().iter() {
        println!("    h^({p}, {q}) = {dim}");
    }
    println!("branch classes:");
    for (p, q, dim) in pieces.h_sigma().iter() {
        println!("    h^({p}, {q}) = {dim}");
    }
}
