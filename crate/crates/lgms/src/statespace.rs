//! Bigraded state spaces of Landau-Ginzburg orbifolds.
//!
//! The state space of a potential with sector group `S` and invariance group
//! `K` collects, for each sector `gamma in S`, the `K`-invariant part of the
//! Milnor ring of the restriction of the potential to the fixed locus of
//! `gamma`, placed in bidegree
//! `(|F| - deg(phi) + a(gamma), deg(phi) + a(gamma))` where `deg` is the
//! charge-normalized weighted degree of the class (volume-form convention)
//! and `a` is the age. Splitting the sectors of the suspended potential into
//! the four cosets of `G` recovers the invariant/anti-invariant parts of the
//! orbifold cohomology of the underlying space and of its double cover.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::jacobi::JacobiEngine;
use crate::polyspec::{ExponentMatrix, WeightSystem};
use crate::rational::{rat, rat0, ratio, Rat};
use crate::symmetry::{DiagonalSymmetry, SymmetryGroup};
use crate::table::BigradedTable;

/// One sector's worth of invariant classes, in the raw (unshifted) grading.
#[derive(Debug, Clone)]
pub struct SectorContribution {
    pub element: DiagonalSymmetry,
    pub age: Rat,
    pub fixed: Vec<usize>,
    pub table: BigradedTable,
}

impl SectorContribution {
    /// A narrow sector fixes no coordinates.
    pub fn is_narrow(&self) -> bool {
        self.fixed.is_empty()
    }
}

/// Character-based invariance filter over a small generating set.
pub struct InvarianceFilter {
    gens: Vec<(Vec<i64>, i64)>,
}

impl InvarianceFilter {
    /// Filter testing invariance under every element of `group`.
    pub fn new(group: &SymmetryGroup) -> Self {
        Self {
            gens: group
                .small_generators()
                .iter()
                .map(|g| g.int_comps())
                .collect(),
        }
    }

    /// Whether the form `x^e dx_F` is fixed by the whole group: the character
    /// `sum_{j in F} (e_j + 1) g_j` must be integral for every generator.
    pub fn is_invariant(&self, fixed: &[usize], exps: &[i64]) -> bool {
        self.gens.iter().all(|(comps, den)| {
            let mut s: i64 = 0;
            for (idx, &j) in fixed.iter().enumerate() {
                s += (exps[idx] + 1) * comps[j] % den;
            }
            s % den == 0
        })
    }
}

/// Character of the form `x^e dx_F` under the symmetry `g`, as a value mod 1.
pub fn character_value(fixed: &[usize], exps: &[i64], g: &DiagonalSymmetry) -> Rat {
    let mut s = rat0();
    for (idx, &j) in fixed.iter().enumerate() {
        s += g.comps()[j] * rat(exps[idx] + 1);
    }
    crate::rational::frac(s)
}

fn contribution(
    matrix: &ExponentMatrix,
    weights: &WeightSystem,
    g: &DiagonalSymmetry,
    filter: &InvarianceFilter,
    engine: &JacobiEngine,
) -> Result<SectorContribution> {
    if !crate::symmetry::is_symmetry(matrix.rows(), g) {
        return Err(Error::Precondition(format!(
            "sector ({}) is not a symmetry of the potential",
            g.to_strings().join(", ")
        )));
    }
    let fixed = g.fixed_coords();
    let ring = engine.ring(&fixed)?;
    let age = g.age();
    let wsum: i64 = fixed.iter().map(|&j| weights.weights[j]).sum();
    let nf = rat(fixed.len() as i64);
    let mut table = BigradedTable::new();
    for (k, slice) in ring.basis.iter().enumerate() {
        let deg = ratio(k as i64 + wsum, weights.degree);
        let p = nf - deg + age;
        let q = deg + age;
        let count = slice
            .iter()
            .filter(|e| filter.is_invariant(&fixed, e))
            .count() as u64;
        table.add(p, q, count);
    }
    Ok(SectorContribution {
        element: g.clone(),
        age,
        fixed,
        table,
    })
}

/// Per-sector invariant classes for sector group `sectors` filtered by
/// `invariance`, in the raw grading; order follows the canonical element
/// order of `sectors`.
pub fn sector_contributions(
    matrix: &ExponentMatrix,
    weights: &WeightSystem,
    sectors: &SymmetryGroup,
    invariance: &SymmetryGroup,
    engine: &JacobiEngine,
) -> Result<Vec<SectorContribution>> {
    let filter = InvarianceFilter::new(invariance);
    let list: Vec<DiagonalSymmetry> = sectors.iter().collect();
    list.par_iter()
        .map(|g| contribution(matrix, weights, g, &filter, engine))
        .collect()
}

/// Total state space in the raw grading: union of all sector contributions.
pub fn build_state_space(
    matrix: &ExponentMatrix,
    weights: &WeightSystem,
    sectors: &SymmetryGroup,
    invariance: &SymmetryGroup,
    engine: &JacobiEngine,
) -> Result<BigradedTable> {
    let contributions = sector_contributions(matrix, weights, sectors, invariance, engine)?;
    Ok(contributions
        .iter()
        .fold(BigradedTable::new(), |acc, c| acc.union(&c.table)))
}

/// A-model state space of `(W, G)`: sectors and invariance both `G`, shifted
/// by the charge sum so that a Calabi-Yau potential lands in geometric
/// bidegrees (shift `(-1,-1)`).
pub fn fjr_state_space(
    matrix: &ExponentMatrix,
    weights: &WeightSystem,
    group: &SymmetryGroup,
    engine: &JacobiEngine,
) -> Result<BigradedTable> {
    let raw = build_state_space(matrix, weights, group, group, engine)?;
    let s = ratio(weights.weight_sum(), weights.degree);
    Ok(raw.shift(-s, -s))
}

/// The four coset pieces of the suspended state space, already shifted into
/// geometric bidegrees.
///
/// The suspension cuts out a Calabi-Yau orbifold double cover of weighted
/// projective space branched over the hypersurface of the original
/// potential; the deck involution splits both cohomologies into invariant
/// (`+`) and anti-invariant (`-`) parts.
#[derive(Debug, Clone)]
pub struct FourPieces {
    /// Invariant part of the double cover's orbifold cohomology (coset
    /// `J_V G`), shift `(-1,-1)`.
    pub cr_plus: BigradedTable,
    /// Anti-invariant part of the double cover's orbifold cohomology
    /// (coset `G`), shift `(-1,-1)`.
    pub cr_minus: BigradedTable,
    /// Invariant part of the branch hypersurface's orbifold cohomology
    /// (coset `sigma G`), shift `(-3/2,-3/2)`.
    pub h_sigma_plus: BigradedTable,
    /// Anti-invariant part of the branch hypersurface's orbifold cohomology
    /// (coset `J_W G`), shift `(-3/2,-3/2)`.
    pub h_sigma_minus: BigradedTable,
}

impl FourPieces {
    /// Full orbifold Hodge table of the double cover.
    pub fn cr(&self) -> BigradedTable {
        self.cr_plus.union(&self.cr_minus)
    }

    /// Full orbifold Hodge table of the branch hypersurface.
    pub fn h_sigma(&self) -> BigradedTable {
        self.h_sigma_plus.union(&self.h_sigma_minus)
    }

    /// Total dimension over all four pieces.
    pub fn total_dim(&self) -> u64 {
        self.cr_plus.total()
            + self.cr_minus.total()
            + self.h_sigma_plus.total()
            + self.h_sigma_minus.total()
    }
}

/// Splits the state space of the suspended potential into the four cosets of
/// `G` inside `S = G[sigma, J_W]`, filtered by `K = G[J_V]`.
///
/// `group_v` is `G` acting on the suspension's variables (trivially on the
/// first); `weights_v` is the suspension's weight system. The two quotient
/// pieces land on integer bidegrees and the two double-cover pieces on
/// half-integer ones before their shifts; this is checked.
pub fn four_piece_split(
    matrix_v: &ExponentMatrix,
    weights_v: &WeightSystem,
    group_v: &SymmetryGroup,
    engine_v: &JacobiEngine,
    cap: usize,
) -> Result<FourPieces> {
    let n1 = matrix_v.dim();
    for g in group_v.iter() {
        if !g.comps()[0].is_integer() {
            return Err(Error::Precondition(
                "the acting group must fix the suspension variable".into(),
            ));
        }
    }
    let j_v = weights_v.grading_element();
    let sigma = {
        let mut comps = vec![rat0(); n1];
        comps[0] = ratio(1, 2);
        DiagonalSymmetry::new(comps)
    };
    let j_w = j_v.sub(&sigma);
    if group_v.contains(&j_w) {
        return Err(Error::Precondition(
            "the grading element lies in G; the sector cosets collapse".into(),
        ));
    }
    let s = group_v.adjoin(&[sigma.clone(), j_w.clone()], cap)?;
    let k = group_v.adjoin(std::slice::from_ref(&j_v), cap)?;
    if s.order() != 4 * group_v.order() || k.order() != 2 * group_v.order() {
        return Err(Error::Precondition(format!(
            "expected |S| = 4|G| and |K| = 2|G|, got |G| = {}, |S| = {}, |K| = {}",
            group_v.order(),
            s.order(),
            k.order()
        )));
    }
    let contributions = sector_contributions(matrix_v, weights_v, &s, &k, engine_v)?;
    let mut cr_plus = BigradedTable::new();
    let mut cr_minus = BigradedTable::new();
    let mut hs_plus = BigradedTable::new();
    let mut hs_minus = BigradedTable::new();
    for c in &contributions {
        let e = &c.element;
        let bucket = if group_v.contains(e) {
            &mut cr_minus
        } else if group_v.contains(&e.sub(&j_v)) {
            &mut cr_plus
        } else if group_v.contains(&e.sub(&sigma)) {
            &mut hs_plus
        } else if group_v.contains(&e.sub(&j_w)) {
            &mut hs_minus
        } else {
            return Err(Error::Precondition(format!(
                "sector ({}) lies in no coset of G",
                e.to_strings().join(", ")
            )));
        };
        *bucket = bucket.union(&c.table);
    }
    for t in [&cr_plus, &cr_minus] {
        if !t.all_integral() {
            return Err(Error::Precondition(
                "quotient piece landed off the integer lattice".into(),
            ));
        }
    }
    for t in [&hs_plus, &hs_minus] {
        if !t.is_empty() && !t.all_half_integral() {
            return Err(Error::Precondition(
                "double-cover piece landed off the half-integer lattice".into(),
            ));
        }
    }
    let one = rat(1);
    let th = ratio(3, 2);
    Ok(FourPieces {
        cr_plus: cr_plus.shift(-one, -one),
        cr_minus: cr_minus.shift(-one, -one),
        h_sigma_plus: hs_plus.shift(-th, -th),
        h_sigma_minus: hs_minus.shift(-th, -th),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::DEFAULT_CAP;
    use crate::table::table_of;

    fn setup(rows: Vec<Vec<i64>>) -> (ExponentMatrix, WeightSystem, JacobiEngine) {
        let m = ExponentMatrix::new(rows).unwrap();
        let w = WeightSystem::from_matrix(&m).unwrap();
        let e = JacobiEngine::new(m.clone(), w.clone());
        (m, w, e)
    }

    /// Suspension of x^2: two points on a line.
    #[test]
    fn two_points_split() {
        let (mv, wv, ev) = setup(vec![vec![2, 0], vec![0, 2]]);
        let g = SymmetryGroup::trivial(2);
        let pieces = four_piece_split(&mv, &wv, &g, &ev, DEFAULT_CAP).unwrap();
        assert_eq!(pieces.cr_plus, table_of(&[(0, 0, 1)]));
        assert_eq!(pieces.cr_minus, table_of(&[(0, 0, 1)]));
        assert!(pieces.h_sigma_plus.is_empty());
        assert!(pieces.h_sigma_minus.is_empty());
    }

    /// Suspension of x^4 + y^4 with G = <J^2>: an elliptic curve downstairs
    /// (as a quotient) and four points upstairs.
    #[test]
    fn quartic_curve_split() {
        let (mw, _, _) = setup(vec![vec![4, 0], vec![0, 4]]);
        let mv = mw.suspend();
        let wv = WeightSystem::from_matrix(&mv).unwrap();
        let ev = JacobiEngine::new(mv.clone(), wv.clone());
        let j2 = DiagonalSymmetry::parse(&["0".into(), "1/2".into(), "1/2".into()]).unwrap();
        let g = SymmetryGroup::from_generators(3, &[j2], DEFAULT_CAP).unwrap();
        let pieces = four_piece_split(&mv, &wv, &g, &ev, DEFAULT_CAP).unwrap();
        assert_eq!(pieces.cr_plus, table_of(&[(0, 0, 1), (1, 1, 1)]));
        assert_eq!(pieces.cr_minus, table_of(&[(1, 0, 1), (0, 1, 1)]));
        assert_eq!(
            pieces.cr(),
            table_of(&[(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
        );
        assert_eq!(pieces.h_sigma_plus, table_of(&[(0, 0, 4)]));
        assert!(pieces.h_sigma_minus.is_empty());
    }

    /// Sectors of S filtered by K agree with sectors of K filtered by G
    /// (multiplication by the extra 1-form).
    #[test]
    fn wedge_identity_on_quartic_suspension() {
        let (mw, _, _) = setup(vec![vec![4, 0], vec![0, 4]]);
        let mv = mw.suspend();
        let wv = WeightSystem::from_matrix(&mv).unwrap();
        let ev = JacobiEngine::new(mv.clone(), wv.clone());
        let j2 = DiagonalSymmetry::parse(&["0".into(), "1/2".into(), "1/2".into()]).unwrap();
        let g = SymmetryGroup::from_generators(3, &[j2], DEFAULT_CAP).unwrap();
        let j_v = wv.grading_element();
        let sigma = DiagonalSymmetry::parse(&["1/2".into(), "0".into(), "0".into()]).unwrap();
        let j_w = j_v.sub(&sigma);
        let s = g.adjoin(&[sigma, j_w], DEFAULT_CAP).unwrap();
        let k = g.adjoin(std::slice::from_ref(&j_v), DEFAULT_CAP).unwrap();
        let lhs = build_state_space(&mv, &wv, &s, &k, &ev).unwrap();
        let rhs = build_state_space(&mv, &wv, &k, &g, &ev).unwrap();
        assert_eq!(lhs, rhs);
    }

    /// Enlarging the invariance group from K to S keeps exactly the two
    /// invariant cosets: the orbifold of the involution quotient.
    #[test]
    fn sigma_quotient_orbifold_classes() {
        let (mw, _, _) = setup(vec![vec![4, 0], vec![0, 4]]);
        let mv = mw.suspend();
        let wv = WeightSystem::from_matrix(&mv).unwrap();
        let ev = JacobiEngine::new(mv.clone(), wv.clone());
        let j2 = DiagonalSymmetry::parse(&["0".into(), "1/2".into(), "1/2".into()]).unwrap();
        let g = SymmetryGroup::from_generators(3, &[j2], DEFAULT_CAP).unwrap();
        let pieces = four_piece_split(&mv, &wv, &g, &ev, DEFAULT_CAP).unwrap();

        let fjr = fjr_state_space(
            &mv,
            &wv,
            &{
                let j_v = wv.grading_element();
                let sigma =
                    DiagonalSymmetry::parse(&["1/2".into(), "0".into(), "0".into()]).unwrap();
                let j_w = j_v.sub(&sigma);
                g.adjoin(&[sigma, j_w], DEFAULT_CAP).unwrap()
            },
            &ev,
        )
        .unwrap();
        let expected = pieces
            .cr_plus
            .union(&pieces.h_sigma_plus.shift(ratio(1, 2), ratio(1, 2)));
        assert_eq!(fjr, expected);
    }

    #[test]
    fn fjr_uses_charge_sum_shift() {
        // x^4 + y^4 is not Calabi-Yau; the shift is by sum(q) = 1/2.
        let (m, w, e) = setup(vec![vec![4, 0], vec![0, 4]]);
        let j = w.grading_element();
        let g = SymmetryGroup::from_generators(2, &[j], DEFAULT_CAP).unwrap();
        let t = fjr_state_space(&m, &w, &g, &e).unwrap();
        // Narrow sectors J, J^3 give classes at (age - 1/2, age - 1/2).
        assert_eq!(t.get(rat0(), rat0()), 1); // J: age 1/2
        assert_eq!(t.get(rat(1), rat(1)), 1); // J^3: age 3/2
                                              // J^2 (age 1) plus the three J-invariant degree-2 forms of the
                                              // identity sector (x^2, xy, y^2, raw bidegree (1,1)) meet at (1/2,1/2).
        assert_eq!(t.get(ratio(1, 2), ratio(1, 2)), 1 + 3);
        assert_eq!(t.total(), 6);
    }

    #[test]
    fn rejects_non_symmetry_sector() {
        let (m, w, e) = setup(vec![vec![4, 0], vec![0, 4]]);
        let bad = DiagonalSymmetry::parse(&["1/3".into(), "0".into()]).unwrap();
        let s = SymmetryGroup::from_generators(2, &[bad], DEFAULT_CAP).unwrap();
        let g = SymmetryGroup::trivial(2);
        assert!(matches!(
            build_state_space(&m, &w, &s, &g, &e),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn character_value_matches_filter() {
        let g = DiagonalSymmetry::parse(&["1/2".into(), "1/4".into(), "1/4".into()]).unwrap();
        // Form x1^0 x2^2 dx over fixed = {1, 2}: (2+1)/4 + (0+1)/4 = 1.
        assert_eq!(character_value(&[1, 2], &[2, 0], &g), rat0());
        assert_eq!(character_value(&[1, 2], &[1, 0], &g), ratio(3, 4));
        assert_eq!(character_value(&[], &[], &g), rat0());
    }
}
