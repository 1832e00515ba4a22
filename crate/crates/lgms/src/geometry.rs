//! Geometric sector decomposition of the double cover.
//!
//! The suspended potential cuts out a hypersurface in weighted projective
//! space, and the finite group acts on it through the projectivization.
//! Every inertia component is the fixed locus of a diagonal map
//! `gamma = s + t v` where `s` runs over the sector group, `v` is the weight
//! vector and `e^{2 pi i t}` is a torus factor; the component is either a
//! coordinate subspace lying on the hypersurface or the hypersurface cut by
//! one. Its classes are hyperplane powers plus middle-degree residue
//! classes read off the restricted Milnor ring. None of this touches the
//! state-space coset bookkeeping, so agreement between the two routes is a
//! genuine cross-check, not a tautology.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jacobi::JacobiRing;
use crate::mirror::{check_tables, IdentityCheck};
use crate::model::{ModelContext, SuspensionData};
use crate::rational::{frac, rat, rat0, rat_str, ratio, Rat};
use crate::statespace::{build_state_space, character_value, FourPieces, InvarianceFilter};
use crate::symmetry::DiagonalSymmetry;
use crate::table::BigradedTable;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

/// What the fixed locus of a geometric sector looks like.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SectorKind {
    /// The restricted potential cuts a hypersurface of this dimension.
    Hypersurface { dim: usize },
    /// The potential vanishes on the whole coordinate subspace, which is a
    /// weighted projective space of this dimension.
    Ambient { dim: usize },
    /// A single coordinate point not lying on the hypersurface.
    Empty,
}

impl SectorKind {
    /// Short text form, e.g. `hypersurface(1)`.
    pub fn label(&self) -> String {
        match self {
            SectorKind::Hypersurface { dim } => format!("hypersurface({dim})"),
            SectorKind::Ambient { dim } => format!("ambient({dim})"),
            SectorKind::Empty => "empty".into(),
        }
    }
}

/// One inertia component of the cover, with its classes split by the deck
/// involution. Tables are in the cover's geometric bidegrees.
#[derive(Debug, Clone)]
pub struct GeometricSector {
    /// The diagonal map whose fixed locus this is.
    pub element: DiagonalSymmetry,
    /// Whether the sector twists by the deck involution (branch-locus side).
    pub sigma_family: bool,
    /// `d`-th power of the torus factor, as a fraction of a full turn.
    pub scaling: Rat,
    /// Age along the hypersurface tangent directions.
    pub tangent_age: Rat,
    pub kind: SectorKind,
    /// Deck-invariant classes.
    pub plus: BigradedTable,
    /// Deck-anti-invariant classes.
    pub minus: BigradedTable,
}

impl GeometricSector {
    /// All classes of the sector.
    pub fn table(&self) -> BigradedTable {
        self.plus.union(&self.minus)
    }
}

/// Enumerates the inertia components of the cover and computes each one's
/// classes. Sectors are ordered canonically by their diagonal map.
pub fn geometric_sectors(sus: &SuspensionData, cap: usize) -> Result<Vec<GeometricSector>> {
    let sectors = sus.sector_group(cap)?;
    let invariance = sus.invariance_group(cap)?;
    let filter = InvarianceFilter::new(&invariance);
    let v = &sus.weights.weights;
    let d = sus.weights.degree;
    let n = sus.matrix.dim();

    // Collect the distinct maps s + t v that fix at least one coordinate.
    // The torus power and the coset family descend to the map itself; the
    // debug assertions check that.
    let mut found: BTreeMap<DiagonalSymmetry, (Rat, bool)> = BTreeMap::new();
    for s in sectors.iter() {
        let sigma_family = !(sus.group.contains(&s) || sus.group.contains(&s.sub(&sus.j_v)));
        for (j, &vj) in v.iter().enumerate().take(n) {
            let sj = s.comps()[j];
            let k0 = sj.ceil().to_integer();
            for k in k0..k0 + vj {
                let t = (rat(k) - sj) / rat(vj);
                let gamma =
                    DiagonalSymmetry::new((0..n).map(|i| s.comps()[i] + t * rat(v[i])).collect());
                let lam = frac(t * rat(d));
                match found.entry(gamma) {
                    Entry::Occupied(e) => {
                        debug_assert_eq!(*e.get(), (lam, sigma_family));
                    }
                    Entry::Vacant(e) => {
                        e.insert((lam, sigma_family));
                    }
                }
            }
        }
    }

    let mut out = Vec::with_capacity(found.len());
    for (gamma, (lam, sigma_family)) in found {
        let fixed = gamma.fixed_coords();
        debug_assert!(!fixed.is_empty());
        let tangent_age = gamma.age() - lam;
        debug_assert!(tangent_age >= rat0());
        if sigma_family {
            debug_assert!(crate::rational::is_half_integer(tangent_age));
        }
        let rows = sus.matrix.restrict(&fixed);
        let (kind, plus, minus) = if rows.is_empty() {
            // The subspace lies on the hypersurface; its classes are the
            // hyperplane powers of the weighted projective space.
            debug_assert!(lam != rat0());
            let dim = fixed.len() - 1;
            let mut plus = BigradedTable::new();
            for p in 0..=dim {
                let c = rat(p as i64) + tangent_age;
                plus.add(c, c, 1);
            }
            (SectorKind::Ambient { dim }, plus, BigradedTable::new())
        } else if fixed.len() == 1 {
            // A coordinate point with the potential not vanishing there.
            debug_assert!(lam == rat0());
            (
                SectorKind::Empty,
                BigradedTable::new(),
                BigradedTable::new(),
            )
        } else {
            debug_assert!(lam == rat0());
            let m = fixed.len() - 2;
            let ring = sus.engine.ring(&fixed)?;
            let mut plus = BigradedTable::new();
            let mut minus = BigradedTable::new();
            for p in 0..=m {
                let c = rat(p as i64) + tangent_age;
                plus.add(c, c, 1);
            }
            // Middle-degree residue classes; the deck involution acts with
            // a sign exactly when the cover coordinate is fixed.
            let anti = fixed[0] == 0;
            primitive_classes(
                &ring,
                &fixed,
                m,
                d,
                &filter,
                sus,
                tangent_age,
                if anti { &mut minus } else { &mut plus },
            );
            (SectorKind::Hypersurface { dim: m }, plus, minus)
        };
        out.push(GeometricSector {
            element: gamma,
            sigma_family,
            scaling: lam,
            tangent_age,
            kind,
            plus,
            minus,
        });
    }
    Ok(out)
}

/// Adds the invariant middle cohomology of a degree-`d` hypersurface of
/// dimension `m` to `table`: in bidegree `(m-q, q)` the invariant residue
/// classes at weighted degree `(q+1) d - sum of fixed weights`.
#[allow(clippy::too_many_arguments)]
fn primitive_classes(
    ring: &JacobiRing,
    fixed: &[usize],
    m: usize,
    d: i64,
    filter: &InvarianceFilter,
    sus: &SuspensionData,
    tangent_age: Rat,
    table: &mut BigradedTable,
) {
    let wsum: i64 = ring.weights.iter().sum();
    for q in 0..=m {
        let k = (q as i64 + 1) * d - wsum;
        if k < 0 || k > ring.socle {
            continue;
        }
        let count = ring.basis[k as usize]
            .iter()
            .filter(|e| {
                // The grading element is always trivial on residue classes.
                debug_assert_eq!(character_value(fixed, e, &sus.j_v), rat0());
                filter.is_invariant(fixed, e)
            })
            .count() as u64;
        if count > 0 {
            table.add(
                rat((m - q) as i64) + tangent_age,
                rat(q as i64) + tangent_age,
                count,
            );
        }
    }
}

/// Union of all sector tables: the cover's full orbifold Hodge table.
pub fn oracle_table(sectors: &[GeometricSector]) -> BigradedTable {
    sectors
        .iter()
        .fold(BigradedTable::new(), |acc, s| acc.union(&s.table()))
}

/// Reassembles the geometric sectors into the four standard pieces
/// (normalizing the branch pieces onto integer bidegrees).
pub fn eigen_split(sectors: &[GeometricSector]) -> FourPieces {
    let half = ratio(1, 2);
    let mut pieces = FourPieces {
        cr_plus: BigradedTable::new(),
        cr_minus: BigradedTable::new(),
        h_sigma_plus: BigradedTable::new(),
        h_sigma_minus: BigradedTable::new(),
    };
    for s in sectors {
        if s.sigma_family {
            pieces.h_sigma_plus = pieces.h_sigma_plus.union(&s.plus.shift(-half, -half));
            pieces.h_sigma_minus = pieces.h_sigma_minus.union(&s.minus.shift(-half, -half));
        } else {
            pieces.cr_plus = pieces.cr_plus.union(&s.plus);
            pieces.cr_minus = pieces.cr_minus.union(&s.minus);
        }
    }
    pieces
}

/// Checks the geometric route against the state-space route, piece by
/// piece, on one model.
pub fn oracle_check(ctx: &ModelContext) -> Result<Vec<IdentityCheck>> {
    let sus = ctx.suspension()?;
    let sectors = geometric_sectors(sus, ctx.cap)?;
    let geo = eigen_split(&sectors);
    let lg = ctx.four_pieces()?;
    Ok(vec![
        check_tables("cover invariants", &geo.cr_plus, &lg.cr_plus),
        check_tables("cover anti-invariants", &geo.cr_minus, &lg.cr_minus),
        check_tables("branch invariants", &geo.h_sigma_plus, &lg.h_sigma_plus),
        check_tables(
            "branch anti-invariants",
            &geo.h_sigma_minus,
            &lg.h_sigma_minus,
        ),
    ])
}

/// Orbifold Hodge table of the quotient of the cover by the deck
/// involution, built directly from its own sector/invariance pair.
pub fn sigma_quotient_table(ctx: &ModelContext) -> Result<BigradedTable> {
    let sus = ctx.suspension()?;
    let s = sus.sector_group(ctx.cap)?;
    let raw = build_state_space(&sus.matrix, &sus.weights, &s, &s, &sus.engine)?;
    Ok(raw.shift(rat(-1), rat(-1)))
}

/// One branch-locus component in a report.
#[derive(Debug, Clone, Serialize)]
pub struct ComponentEntry {
    pub element: Vec<String>,
    pub kind: String,
    pub tangent_age: String,
    pub scaling: String,
    pub classes: Vec<crate::table::TableEntry>,
}

/// Branch-locus components of one model: the sigma-family sectors with a
/// nonempty fixed locus.
#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    pub schema: u32,
    pub model: String,
    pub components: Vec<ComponentEntry>,
}

/// Lists the components of the branch locus with their classes.
pub fn component_report(ctx: &ModelContext) -> Result<ComponentReport> {
    let sus = ctx.suspension()?;
    let sectors = geometric_sectors(sus, ctx.cap)?;
    let components = sectors
        .iter()
        .filter(|s| s.sigma_family && s.kind != SectorKind::Empty)
        .map(|s| ComponentEntry {
            element: s.element.to_strings(),
            kind: s.kind.label(),
            tangent_age: rat_str(s.tangent_age),
            scaling: rat_str(s.scaling),
            classes: s.table().to_entries(),
        })
        .collect();
    Ok(ComponentReport {
        schema: 1,
        model: ctx.name.clone(),
        components,
    })
}

/// Lattice invariants of a K3 double cover with involution, read off the
/// branch tables.
#[derive(Debug, Clone, Serialize)]
pub struct K3Report {
    pub schema: u32,
    pub model: String,
    /// Branch components counted by `h^{0,0}`.
    pub n: u64,
    /// Total genus counted by `h^{1,0}`.
    pub n_prime: u64,
    /// Geometric component count (may exceed `n` for stacky points).
    pub components: usize,
    /// Rank of the invariant lattice.
    pub r: i64,
    /// Discriminant exponent.
    pub a: i64,
    pub mirror_r: i64,
    pub mirror_a: i64,
    pub branch_empty: bool,
    pub note: String,
}

/// Computes `(r, a)` and the mirror pair for a three-variable model whose
/// cover is a K3 surface.
pub fn k3_report(ctx: &ModelContext) -> Result<K3Report> {
    if ctx.dim() != 3 {
        return Err(Error::Precondition(format!(
            "lattice invariants need a three-variable model, got {}",
            ctx.dim()
        )));
    }
    let pieces = ctx.four_pieces()?;
    let hs = pieces.h_sigma();
    let sus = ctx.suspension()?;
    let sectors = geometric_sectors(sus, ctx.cap)?;
    let components = sectors
        .iter()
        .filter(|s| s.sigma_family && s.kind != SectorKind::Empty)
        .count();
    let branch_empty = hs.is_empty();
    let n = hs.get(rat0(), rat0());
    let n_prime = hs.get(rat(1), rat0());
    let (r, a, note) = if branch_empty {
        (
            10,
            10,
            "branch locus empty; lattice invariants take the free-involution values".to_string(),
        )
    } else {
        (
            10 + n as i64 - n_prime as i64,
            12 - n as i64 - n_prime as i64,
            String::new(),
        )
    };
    Ok(K3Report {
        schema: 1,
        model: ctx.name.clone(),
        n,
        n_prime,
        components,
        r,
        a,
        mirror_r: 20 - r,
        mirror_a: a,
        branch_empty,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{resolve_group, ModelContext};
    use crate::polyspec::{ExponentMatrix, GroupDirective};
    use crate::symmetry::DEFAULT_CAP;
    use crate::table::table_of;

    fn ctx_of(rows: Vec<Vec<i64>>, directive: GroupDirective) -> ModelContext {
        let matrix = ExponentMatrix::new(rows).unwrap();
        let weights = crate::polyspec::WeightSystem::from_matrix(&matrix).unwrap();
        let group = resolve_group(&matrix, &weights, &directive, DEFAULT_CAP).unwrap();
        ModelContext::from_parts("test".into(), matrix, group, DEFAULT_CAP).unwrap()
    }

    fn assert_pieces_eq(a: &FourPieces, b: &FourPieces) {
        assert_eq!(a.cr_plus, b.cr_plus);
        assert_eq!(a.cr_minus, b.cr_minus);
        assert_eq!(a.h_sigma_plus, b.h_sigma_plus);
        assert_eq!(a.h_sigma_minus, b.h_sigma_minus);
    }

    #[test]
    fn two_points_cover_sectors() {
        let ctx = ctx_of(vec![vec![2]], GroupDirective::JSquared);
        let sus = ctx.suspension().unwrap();
        let sectors = geometric_sectors(sus, DEFAULT_CAP).unwrap();
        let geo = eigen_split(&sectors);
        assert_eq!(geo.cr_plus, table_of(&[(0, 0, 1)]));
        assert_eq!(geo.cr_minus, table_of(&[(0, 0, 1)]));
        assert!(geo.h_sigma_plus.is_empty());
        assert!(geo.h_sigma_minus.is_empty());
        assert_pieces_eq(&geo, &ctx.four_pieces().unwrap());
    }

    #[test]
    fn quartic_curve_oracle_matches_state_space() {
        let ctx = ctx_of(vec![vec![4, 0], vec![0, 4]], GroupDirective::JSquared);
        let sus = ctx.suspension().unwrap();
        let sectors = geometric_sectors(sus, DEFAULT_CAP).unwrap();
        let geo = eigen_split(&sectors);
        assert_pieces_eq(&geo, &ctx.four_pieces().unwrap());
        // One branch component: the four ramification points of the cover.
        let branch: Vec<_> = sectors
            .iter()
            .filter(|s| s.sigma_family && s.kind != SectorKind::Empty)
            .collect();
        assert_eq!(branch.len(), 1);
        assert_eq!(branch[0].kind, SectorKind::Hypersurface { dim: 0 });
        assert_eq!(branch[0].tangent_age, ratio(1, 2));
        assert_eq!(branch[0].table().total(), 4);
    }

    #[test]
    fn mixed_model_components() {
        let ctx = ctx_of(
            vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]],
            GroupDirective::JSquared,
        );
        let sus = ctx.suspension().unwrap();
        let sectors = geometric_sectors(sus, DEFAULT_CAP).unwrap();
        let geo = eigen_split(&sectors);
        assert_pieces_eq(&geo, &ctx.four_pieces().unwrap());

        let branch: Vec<_> = sectors
            .iter()
            .filter(|s| s.sigma_family && s.kind != SectorKind::Empty)
            .collect();
        assert_eq!(branch.len(), 4);
        let mut ages: Vec<Rat> = branch.iter().map(|s| s.tangent_age).collect();
        ages.sort();
        assert_eq!(
            ages,
            vec![ratio(1, 2), ratio(1, 2), ratio(1, 2), ratio(3, 2)]
        );
        let mut kinds: Vec<String> = branch.iter().map(|s| s.kind.label()).collect();
        kinds.sort();
        assert_eq!(
            kinds,
            vec![
                "ambient(0)",
                "ambient(0)",
                "hypersurface(1)",
                "hypersurface(1)"
            ]
        );
        // Exactly one component carries genus: three (1,0)-classes.
        let genus: Vec<u64> = branch
            .iter()
            .map(|s| s.table().get(ratio(3, 2), ratio(1, 2)))
            .filter(|&g| g > 0)
            .collect();
        assert_eq!(genus, vec![3]);
    }

    #[test]
    fn mixed_model_k3_invariants() {
        let ctx = ctx_of(
            vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]],
            GroupDirective::JSquared,
        );
        let report = k3_report(&ctx).unwrap();
        assert_eq!((report.n, report.n_prime), (3, 3));
        assert_eq!(report.components, 4);
        assert_eq!((report.r, report.a), (10, 6));
        assert_eq!((report.mirror_r, report.mirror_a), (10, 6));
        assert!(!report.branch_empty);
    }

    #[test]
    fn sextic_k3_invariants_mirror() {
        let ctx = ctx_of(
            vec![vec![6, 0, 0], vec![0, 6, 0], vec![0, 0, 6]],
            GroupDirective::JSquared,
        );
        let report = k3_report(&ctx).unwrap();
        assert_eq!((report.n, report.n_prime), (1, 10));
        assert_eq!((report.r, report.a), (1, 1));
        assert_eq!((report.mirror_r, report.mirror_a), (19, 1));

        let star = ctx.star().unwrap();
        let dual = k3_report(&star).unwrap();
        assert_eq!((dual.r, dual.a), (19, 1));
        assert_eq!((dual.n, dual.n_prime), (10, 1));
    }

    #[test]
    fn quotient_table_embeds_both_pieces() {
        let ctx = ctx_of(
            vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]],
            GroupDirective::JSquared,
        );
        let q = sigma_quotient_table(&ctx).unwrap();
        let pieces = ctx.four_pieces().unwrap();
        let half = ratio(1, 2);
        let expected = pieces.cr_plus.union(&pieces.h_sigma_plus.shift(half, half));
        assert_eq!(q, expected);
    }

    #[test]
    fn k3_report_rejects_wrong_dimension() {
        let ctx = ctx_of(vec![vec![4, 0], vec![0, 4]], GroupDirective::JSquared);
        assert!(k3_report(&ctx).is_err());
    }
}
