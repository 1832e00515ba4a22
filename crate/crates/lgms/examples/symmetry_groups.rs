//! Enumerates diagonal symmetry groups of the quartic curve potential and
//! shows the pairing-based dual of each standard choice.
//!
//! Run with `cargo run --example symmetry_groups`.

use lgms::symmetry::{aut_group, dual_group, DEFAULT_CAP};

fn show(label: &str, group: &lgms::symmetry::SymmetryGroup) {
    println!("{label}: order {}", group.order());
    for g in group.iter() {
        println!("    ({})  age {}", g.to_strings().join(", "), g.age());
    }
}

fn main() {
    let m = vec![vec![4, 0], vec![0, 4]];
    let aut = aut_group(&m, DEFAULT_CAP).expect("symmetry group");
    println!("x^4 + y^4");
    println!("full symmetry group: order {}", aut.order());

    let sl = aut.sl_subgroup();
    show("integral-age subgroup", &sl);

    let charges = lgms::symmetry::charges(&m).expect("charges");
    let j = lgms::symmetry::DiagonalSymmetry::new(charges);
    println!(
        "grading element J = ({}), order {}",
        j.to_strings().join(", "),
        j.order()
    );

    let j2 = lgms::symmetry::SymmetryGroup::from_generators(2, &[j.pow(2)], DEFAULT_CAP)
        .expect("group closure");
    show("<J^2>", &j2);

    for (label, group) in [("<J^2>", &j2), ("SL", &sl)] {
        let dual = dual_group(&m, group, DEFAULT_CAP).expect("dual");
        println!("dual of {label} on the transpose: order {}", dual.order());
    }
}
