//! Randomized algebra laws for the torsion and table layers.  Everything
//! here is a theorem about the data structures themselves, so any failure
//! is a plain bug rather than a modelling question.

use proptest::prelude::*;

use lgms::rational::{frac, is_integer, parse_rat, rat, rat_str, ratio, Rat};
use lgms::symmetry::DiagonalSymmetry;
use lgms::table::{BigradedTable, TableEntry};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
}

fn symmetry(n: usize) -> impl Strategy<Value = DiagonalSymmetry> {
    prop::collection::vec(small_rat(), n).prop_map(DiagonalSymmetry::new)
}

fn table() -> impl Strategy<Value = BigradedTable> {
    prop::collection::vec(((-6i64..=6), (-6i64..=6), (1u64..=9)), 0..12).prop_map(|cells| {
        let mut t = BigradedTable::new();
        for (p, q, dim) in cells {
            t.add(ratio(p, 2), ratio(q, 2), dim);
        }
        t
    })
}

proptest! {
    #[test]
    fn frac_lands_in_unit_interval(r in small_rat()) {
        let f = frac(r);
        prop_assert!(f >= rat(0) && f < rat(1));
        prop_assert!(is_integer(r - f));
    }

    #[test]
    fn rational_strings_round_trip(r in small_rat()) {
        prop_assert_eq!(parse_rat(&rat_str(r)).unwrap(), r);
    }

    #[test]
    fn symmetry_addition_commutes(g in symmetry(4), h in symmetry(4)) {
        prop_assert_eq!(g.add(&h), h.add(&g));
    }

    #[test]
    fn symmetry_inverse_cancels(g in symmetry(4)) {
        prop_assert!(g.add(&g.inverse()).is_identity());
        prop_assert_eq!(g.inverse().inverse(), g.clone());
    }

    #[test]
    fn age_pairs_with_inverse(g in symmetry(5)) {
        let moved = g.dim() - g.fixed_coords().len();
        prop_assert_eq!(g.age() + g.inverse().age(), rat(moved as i64));
    }

    #[test]
    fn symmetry_order_annihilates(g in symmetry(3)) {
        prop_assert!(g.pow(g.order()).is_identity());
    }

    #[test]
    fn union_adds_totals(a in table(), b in table()) {
        prop_assert_eq!(a.union(&b).total(), a.total() + b.total());
    }

    #[test]
    fn convolution_multiplies_totals(a in table(), b in table()) {
        prop_assert_eq!(a.convolve(&b).total(), a.total() * b.total());
    }

    #[test]
    fn convolution_commutes(a in table(), b in table()) {
        prop_assert_eq!(a.convolve(&b), b.convolve(&a));
    }

    #[test]
    fn transpose_is_an_involution(a in table()) {
        prop_assert_eq!(a.transpose().transpose(), a.clone());
    }

    #[test]
    fn flip_is_an_involution(a in table(), c in small_rat()) {
        prop_assert_eq!(a.flip_p(c).flip_p(c), a.clone());
    }

    #[test]
    fn shifts_compose(a in table(), dp in small_rat(), dq in small_rat()) {
        let twice = a.shift(dp, dq).shift(-dp, -dq);
        prop_assert_eq!(twice, a.clone());
    }

    #[test]
    fn entries_round_trip(a in table()) {
        let entries: Vec<TableEntry> = a.to_entries();
        prop_assert_eq!(BigradedTable::from_entries(&entries).unwrap(), a.clone());
    }
}
