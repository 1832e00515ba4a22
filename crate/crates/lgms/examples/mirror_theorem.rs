//! Runs every executable mirror identity on the Fermat sextic model and its
//! dual, printing one line per check.
//!
//! Run with `cargo run --example mirror_theorem`.

use lgms::mirror::semi_cy_report;
use lgms::model::{resolve_group, ModelContext};
use lgms::polyspec::{ExponentMatrix, GroupDirective, WeightSystem};
use lgms::symmetry::DEFAULT_CAP;

fn main() {
    let matrix = ExponentMatrix::new(vec![vec![6, 0, 0], vec![0, 6, 0], vec![0, 0, 6]]).unwrap();
    let weights = WeightSystem::from_matrix(&matrix).unwrap();
    let group = resolve_group(&matrix, &weights, &GroupDirective::JSquared, DEFAULT_CAP).unwrap();
    let ctx = ModelContext::from_parts("sextic".into(), matrix, group, DEFAULT_CAP).unwrap();

    let report = semi_cy_report(&ctx).expect("mirror report");
    println!("model {} against dual {}", report.model, report.dual_model);
    println!("admissible: {}", report.admissible);
    for check in &report.checks {
        println!(
            "  {}  {}: {}",
            if check.pass { "ok  " } else { "FAIL" },
            check.label,
            check.detail
        );
    }
    println!("overall: {}", if report.pass { "PASS" } else { "FAIL" });
}
