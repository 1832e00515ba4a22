//! Renders combined Hodge diamonds for the Fermat sextic K3 model under its
//! two standard group choices: the mirror rotation is visible on the page.
//!
//! Run with `cargo run --example hodge_diamonds`.

use lgms::diamond::render_combined;
use lgms::model::{resolve_group, ModelContext};
use lgms::polyspec::{ExponentMatrix, GroupDirective, WeightSystem};
use lgms::symmetry::DEFAULT_CAP;

fn diamond(directive: GroupDirective, label: &str) {
    let matrix = ExponentMatrix::new(vec![vec![6, 0, 0], vec![0, 6, 0], vec![0, 0, 6]]).unwrap();
    let weights = WeightSystem::from_matrix(&matrix).unwrap();
    let group = resolve_group(&matrix, &weights, &directive, DEFAULT_CAP).unwrap();
    let ctx = ModelContext::from_parts(label.into(), matrix, group, DEFAULT_CAP).unwrap();
    let pieces = ctx.four_pieces().unwrap();
    println!(
        "x^6 + y^6 + z^6 with {label} (group order {}):",
        ctx.group.order()
    );
    println!("{}", render_combined(&pieces.cr(), &pieces.h_sigma()));
}

fn main() {
    // Integer cells: the K3 double cover. Bracketed cells: the branch
    // sextic, half a step in.
    diamond(GroupDirective::JSquared, "<J^2>");
    diamond(GroupDirective::Sl, "SL");
}
