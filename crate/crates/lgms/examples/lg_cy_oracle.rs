//! Crosses the two routes to the same Hodge numbers on the mixed-weight
//! surface model: inertia components of the double cover against the
//! coset-by-coset state-space split.
//!
//! Run with `cargo run --example lg_cy_oracle`.

use lgms::geometry::{eigen_split, geometric_sectors, oracle_check, SectorKind};
use lgms::model::{resolve_group, ModelContext};
use lgms::polyspec::{ExponentMatrix, GroupDirective, WeightSystem};
use lgms::symmetry::DEFAULT_CAP;

fn main() {
    let matrix = ExponentMatrix::new(vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]]).unwrap();
    let weights = WeightSystem::from_matrix(&matrix).unwrap();
    let group = resolve_group(&matrix, &weights, &GroupDirective::JSquared, DEFAULT_CAP).unwrap();
    let ctx = ModelContext::from_parts("mixed".into(), matrix, group, DEFAULT_CAP).unwrap();

    let sus = ctx.suspension().unwrap();
    let sectors = geometric_sectors(sus, ctx.cap).unwrap();
    println!("inertia sectors of the double cover in P(9, 4, 3, 2):");
    for s in &sectors {
        if s.kind == SectorKind::Empty {
            continue;
        }
        println!(
            "  ({})  {}  tangent age {}  {}",
            s.element.to_strings().join(", "),
            s.kind.label(),
            s.tangent_age,
            if s.sigma_family {
                "branch family"
            } else {
                "untwisted family"
            }
        );
    }

    let geometric = eigen_split(&sectors);
    let algebraic = ctx.four_pieces().unwrap();
    println!(
        "\ntotals: geometric {} vs state space {}",
        geometric.total_dim(),
        algebraic.total_dim()
    );
    for check in oracle_check(&ctx).unwrap() {
        println!(
            "  {}  {}: {}",
            if check.pass { "ok  " } else { "FAIL" },
            check.label,
            check.detail
        );
    }
}
