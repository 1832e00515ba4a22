//! Mirror identities: transposed potentials, dual groups, and the executable
//! checks that the invariant/anti-invariant Hodge pieces of a model and of
//! its dual flip into each other.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jacobi::JacobiEngine;
use crate::matrix;
use crate::model::ModelContext;
use crate::polyspec::{ExponentMatrix, WeightSystem};
use crate::rational::{frac, rat, rat0, Rat};
use crate::statespace::build_state_space;
use crate::symmetry::{aut_group, standard_dual, DiagonalSymmetry, SymmetryGroup};
use crate::table::BigradedTable;

/// The transpose-side symmetry attached to a monomial exponent vector:
/// `gamma(x^a) = (M^{-1})^T a`.
pub fn krawitz_gamma(m: &ExponentMatrix, exps: &[i64]) -> Result<DiagonalSymmetry> {
    let n = m.dim();
    if exps.len() != n {
        return Err(Error::Precondition(format!(
            "exponent vector has {} entries, expected {n}",
            exps.len()
        )));
    }
    let inv = matrix::inverse(m.rows())?;
    let comps = (0..n)
        .map(|i| {
            let mut s = num_rational::BigRational::from_integer(0.into());
            for (j, &a) in exps.iter().enumerate() {
                s += &inv[j][i] * num_rational::BigRational::from_integer(a.into());
            }
            matrix::to_i64_pair(&s)
                .map(|(p, q)| crate::rational::ratio(p, q))
                .ok_or_else(|| Error::Precondition("gamma overflows exact i64".into()))
        })
        .collect::<Result<Vec<Rat>>>()?;
    Ok(DiagonalSymmetry::new(comps))
}

/// Verifies that the `gamma` map sends the `G`-invariant monomials exactly
/// onto the standard dual of `G` (as a set), with exponents bounded by the
/// exponent of the symmetry group.
pub fn krawitz_convention_check(
    m: &ExponentMatrix,
    group: &SymmetryGroup,
    cap: usize,
) -> Result<bool> {
    let n = m.dim();
    let bound = aut_group(m.rows(), cap)?.denom();
    let gens: Vec<(Vec<i64>, i64)> = group
        .small_generators()
        .iter()
        .map(|g| g.int_comps())
        .collect();
    let invariant = |a: &[i64]| {
        gens.iter().all(|(comps, den)| {
            let mut s: i128 = 0;
            for (j, &aj) in a.iter().enumerate() {
                s += (comps[j] as i128) * (aj as i128);
            }
            s % (*den as i128) == 0
        })
    };
    let inv = matrix::inverse(m.rows())?;
    let inv_t: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (p, q) = matrix::to_i64_pair(&inv[j][i]).expect("small inverse entries");
                    crate::rational::ratio(p, q)
                })
                .collect()
        })
        .collect();
    let mut image: std::collections::BTreeSet<DiagonalSymmetry> = Default::default();
    let mut a = vec![0i64; n];
    loop {
        if invariant(&a) {
            let comps: Vec<Rat> = inv_t
                .iter()
                .map(|row| {
                    let mut s = rat0();
                    for (j, &aj) in a.iter().enumerate() {
                        s += row[j] * rat(aj);
                    }
                    frac(s)
                })
                .collect();
            image.insert(DiagonalSymmetry::new(comps));
        }
        // Odometer over [0, bound)^n.
        let mut pos = 0;
        loop {
            if pos == n {
                let expected: std::collections::BTreeSet<DiagonalSymmetry> =
                    standard_dual(m.rows(), group, cap)?.iter().collect();
                return Ok(image == expected);
            }
            a[pos] += 1;
            if a[pos] < bound {
                break;
            }
            a[pos] = 0;
            pos += 1;
        }
    }
}

/// Result of one executable mirror check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

/// Compares two tables into a labeled check, reporting the first mismatch.
pub fn check_tables(label: &str, lhs: &BigradedTable, rhs: &BigradedTable) -> IdentityCheck {
    if lhs == rhs {
        IdentityCheck {
            label: label.into(),
            pass: true,
            detail: format!("{} classes agree", lhs.total()),
        }
    } else {
        let mut detail = String::from("first mismatch: ");
        let all: std::collections::BTreeSet<(Rat, Rat)> = lhs
            .iter()
            .chain(rhs.iter())
            .map(|(p, q, _)| (p, q))
            .collect();
        for (p, q) in all {
            let (a, b) = (lhs.get(p, q), rhs.get(p, q));
            if a != b {
                detail.push_str(&format!(
                    "h^{{{},{}}}: {} vs {}",
                    crate::rational::rat_str(p),
                    crate::rational::rat_str(q),
                    a,
                    b
                ));
                break;
            }
        }
        IdentityCheck {
            label: label.into(),
            pass: false,
            detail,
        }
    }
}

/// Checks the two-group state-space mirror: the raw table of
/// `(W, sectors, invariance)` equals the raw table of the transposed data
/// `(W^T, invariance^dual, sectors^dual)` flipped by `(n - p, q)`.
pub fn mirror_flip_check(
    m: &ExponentMatrix,
    sectors: &SymmetryGroup,
    invariance: &SymmetryGroup,
    cap: usize,
) -> Result<IdentityCheck> {
    if !invariance.is_subgroup_of(sectors) {
        return Err(Error::Precondition(
            "invariance group must lie inside the sector group".into(),
        ));
    }
    let w = WeightSystem::from_matrix(m)?;
    let engine = JacobiEngine::new(m.clone(), w.clone());
    let lhs = build_state_space(m, &w, sectors, invariance, &engine)?;

    let mt = m.transpose();
    let wt = WeightSystem::from_matrix(&mt)?;
    let engine_t = JacobiEngine::new(mt.clone(), wt.clone());
    let sectors_t = standard_dual(m.rows(), invariance, cap)?;
    let invariance_t = standard_dual(m.rows(), sectors, cap)?;
    let rhs = build_state_space(&mt, &wt, &sectors_t, &invariance_t, &engine_t)?;

    Ok(check_tables(
        "state-space flip",
        &lhs,
        &rhs.flip_p(rat(m.dim() as i64)),
    ))
}

/// Full report of the mirror identities for one admissible model.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SemiCyReport {
    pub schema: u32,
    pub model: String,
    pub dual_model: String,
    pub admissible: bool,
    pub notes: Vec<String>,
    pub checks: Vec<IdentityCheck>,
    pub pass: bool,
}

/// Runs every mirror identity for the model against its dual: the four
/// Hodge-piece flips, the wedge identity, the two-group state-space flip,
/// the gamma convention, the suspension duality diagram, and dual-group
/// involutivity. Inadmissible models yield a failing report, not an error.
pub fn semi_cy_report(ctx: &ModelContext) -> Result<SemiCyReport> {
    let notes = ctx.admissibility_notes();
    if !notes.is_empty() {
        return Ok(SemiCyReport {
            schema: 1,
            model: ctx.name.clone(),
            dual_model: String::new(),
            admissible: false,
            notes,
            checks: vec![],
            pass: false,
        });
    }
    let star = ctx.star()?;
    let mut checks = Vec::new();

    let pieces = ctx.four_pieces()?;
    let pieces_star = star.four_pieces()?;
    let n = ctx.dim() as i64;
    let c_sigma = rat(n - 2);
    let c_cr = rat(n - 1);
    checks.push(check_tables(
        "branch invariants flip (i)",
        &pieces.h_sigma_plus,
        &pieces_star.h_sigma_plus.flip_p(c_sigma),
    ));
    checks.push(check_tables(
        "branch anti-invariants flip (ii)",
        &pieces.h_sigma_minus,
        &pieces_star.h_sigma_minus.flip_p(c_sigma),
    ));
    checks.push(check_tables(
        "cover invariants vs dual anti-invariants (iii)",
        &pieces.cr_plus,
        &pieces_star.cr_minus.flip_p(c_cr),
    ));
    checks.push(check_tables(
        "cover anti-invariants vs dual invariants (iv)",
        &pieces.cr_minus,
        &pieces_star.cr_plus.flip_p(c_cr),
    ));

    let sus = ctx.suspension()?;
    let s = sus.sector_group(ctx.cap)?;
    let k = sus.invariance_group(ctx.cap)?;
    let lhs = build_state_space(&sus.matrix, &sus.weights, &s, &k, &sus.engine)?;
    let rhs = build_state_space(&sus.matrix, &sus.weights, &k, &sus.group, &sus.engine)?;
    checks.push(check_tables("wedge identity", &lhs, &rhs));

    checks.push(mirror_flip_check(&sus.matrix, &s, &k, ctx.cap)?);

    let gamma_ok = krawitz_convention_check(&ctx.matrix, &ctx.group, ctx.cap)?;
    checks.push(IdentityCheck {
        label: "gamma convention".into(),
        pass: gamma_ok,
        detail: if gamma_ok {
            "invariant monomials generate the standard dual".into()
        } else {
            "gamma image differs from the standard dual".into()
        },
    });

    let diagram = crate::symmetry::duality_diagram_check(ctx.matrix.rows(), &ctx.group, ctx.cap)?;
    checks.push(IdentityCheck {
        label: "duality diagram".into(),
        pass: diagram.pass,
        detail: format!(
            "{} node dualities, {} arrows reversed",
            diagram.nodes.len(),
            diagram.edges.len()
        ),
    });

    let back = star.star()?;
    let involutive = back.group.same_elements(&ctx.group);
    checks.push(IdentityCheck {
        label: "dual involution".into(),
        pass: involutive,
        detail: format!(
            "|G| = {}, |G**| = {}",
            ctx.group.order(),
            back.group.order()
        ),
    });

    let pass = checks.iter().all(|c| c.pass);
    Ok(SemiCyReport {
        schema: 1,
        model: ctx.name.clone(),
        dual_model: star.name.clone(),
        admissible: true,
        notes: vec![],
        checks,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyspec::parse_model_str;
    use crate::symmetry::DEFAULT_CAP;

    fn ctx(text: &str) -> ModelContext {
        let spec = parse_model_str(text, "test").unwrap();
        ModelContext::from_spec(&spec, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn gamma_of_unit_vectors_spans_dual_generators() {
        let m = ExponentMatrix::new(vec![vec![4, 0], vec![0, 4]]).unwrap();
        let g = krawitz_gamma(&m, &[1, 0]).unwrap();
        assert_eq!(g.to_strings(), vec!["1/4", "0"]);
        let g = krawitz_gamma(&m, &[3, 2]).unwrap();
        assert_eq!(g.to_strings(), vec!["3/4", "1/2"]);
    }

    #[test]
    fn gamma_pairs_to_the_action_character() {
        // <g, gamma(x^a)> = g . a for every symmetry g.
        let m = ExponentMatrix::new(vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]]).unwrap();
        let aut = aut_group(m.rows(), DEFAULT_CAP).unwrap();
        let a = [2i64, 3, 1];
        let gamma = krawitz_gamma(&m, &a).unwrap();
        for g in aut.iter().take(20) {
            let lhs = crate::symmetry::pairing(m.rows(), &g, &gamma).unwrap();
            let mut rhs = rat0();
            for (j, &aj) in a.iter().enumerate() {
                rhs += g.comps()[j] * rat(aj);
            }
            assert_eq!(lhs, frac(rhs));
        }
    }

    #[test]
    fn gamma_convention_on_quartic_and_mixed() {
        let m = ExponentMatrix::new(vec![vec![4, 0], vec![0, 4]]).unwrap();
        let w = WeightSystem::from_matrix(&m).unwrap();
        let j = SymmetryGroup::from_generators(2, &[w.grading_element()], DEFAULT_CAP).unwrap();
        assert!(krawitz_convention_check(&m, &j, DEFAULT_CAP).unwrap());

        let m = ExponentMatrix::new(vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]]).unwrap();
        let w = WeightSystem::from_matrix(&m).unwrap();
        let g =
            SymmetryGroup::from_generators(3, &[w.grading_element().pow(2)], DEFAULT_CAP).unwrap();
        assert!(krawitz_convention_check(&m, &g, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn flip_check_on_quartic_curve_groups() {
        let m = ExponentMatrix::new(vec![vec![4, 0], vec![0, 4]]).unwrap();
        let aut = aut_group(m.rows(), DEFAULT_CAP).unwrap();
        let sl = aut.sl_subgroup();
        let check = mirror_flip_check(&m, &aut, &sl, DEFAULT_CAP).unwrap();
        assert!(check.pass, "{}", check.detail);
        let check = mirror_flip_check(&m, &sl, &sl, DEFAULT_CAP).unwrap();
        assert!(check.pass, "{}", check.detail);
    }

    #[test]
    fn report_passes_on_mixed_model() {
        let c = ctx("monomials = [[4,0,1],[1,0,7],[0,6,0]]\ngroup = \"J2\"");
        let report = semi_cy_report(&c).unwrap();
        assert!(report.admissible);
        assert!(report.pass, "{:#?}", report.checks);
        assert_eq!(report.checks.len(), 9);
    }

    #[test]
    fn report_fails_cleanly_on_inadmissible_group() {
        let c = ctx("monomials = [[4,0],[0,4]]\ngroup = \"ALL\"");
        let report = semi_cy_report(&c).unwrap();
        assert!(!report.admissible);
        assert!(!report.pass);
        assert!(report.checks.is_empty());
        assert!(!report.notes.is_empty());
    }
}
