//! Products of two half-Calabi-Yau models.
//!
//! The product of the two double covers, quotiented by the diagonal deck
//! involution, is a Calabi-Yau orbifold. Its Hodge table assembles from the
//! factor pieces: invariant times invariant plus anti-invariant times
//! anti-invariant on the cover side, and the branch pieces likewise with a
//! degree shift. The direct check recomputes the same table from scratch as
//! one state space of the block-sum potential under the product group, so
//! the two routes share no intermediate bookkeeping.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jacobi::JacobiEngine;
use crate::mirror::{check_tables, IdentityCheck};
use crate::model::ModelContext;
use crate::polyspec::{ExponentMatrix, WeightSystem};
use crate::rational::rat;
use crate::statespace::{fjr_state_space, FourPieces};
use crate::symmetry::{DiagonalSymmetry, SymmetryGroup};
use crate::table::{BigradedTable, TableEntry};

/// Hodge table of the product orbifold from the factor pieces.
pub fn product_diamond(a: &FourPieces, b: &FourPieces) -> BigradedTable {
    let cover = a
        .cr_plus
        .convolve(&b.cr_plus)
        .union(&a.cr_minus.convolve(&b.cr_minus));
    let branch = a
        .h_sigma_plus
        .convolve(&b.h_sigma_plus)
        .union(&a.h_sigma_minus.convolve(&b.h_sigma_minus));
    cover.union(&branch.shift(rat(1), rat(1)))
}

/// Complex dimension of the product orbifold.
pub fn product_dim(a: &ModelContext, b: &ModelContext) -> usize {
    a.dim() + b.dim() - 2
}

/// Block-sum of two exponent matrices.
fn block_sum(a: &ExponentMatrix, b: &ExponentMatrix) -> Result<ExponentMatrix> {
    let (na, nb) = (a.dim(), b.dim());
    let mut rows = Vec::with_capacity(na + nb);
    for r in a.rows() {
        let mut row = r.clone();
        row.extend(std::iter::repeat_n(0, nb));
        rows.push(row);
    }
    for r in b.rows() {
        let mut row = vec![0; na];
        row.extend_from_slice(r);
        rows.push(row);
    }
    ExponentMatrix::new(rows)
}

/// Extends a symmetry by zeros on the right.
fn extend_back(g: &DiagonalSymmetry, k: usize) -> DiagonalSymmetry {
    let mut comps = g.comps().to_vec();
    comps.extend(std::iter::repeat_n(crate::rational::rat0(), k));
    DiagonalSymmetry::new(comps)
}

/// Recomputes the product table as a single state space of the block-sum of
/// the two suspended potentials, under the group generated by both factors'
/// invariance groups and the diagonal deck involution. Limited to six
/// underlying variables.
pub fn direct_product_table(a: &ModelContext, b: &ModelContext) -> Result<BigradedTable> {
    if a.dim() + b.dim() > 6 {
        return Err(Error::Precondition(format!(
            "the direct product check is limited to six variables total, got {}",
            a.dim() + b.dim()
        )));
    }
    let sa = a.suspension()?;
    let sb = b.suspension()?;
    let matrix = block_sum(&sa.matrix, &sb.matrix)?;
    let weights = WeightSystem::from_matrix(&matrix)?;
    let (na, nb) = (sa.matrix.dim(), sb.matrix.dim());
    let cap = a.cap.max(b.cap);
    let ka = sa.invariance_group(cap)?;
    let kb = sb.invariance_group(cap)?;
    let mut gens: Vec<DiagonalSymmetry> = ka
        .small_generators()
        .iter()
        .map(|g| extend_back(g, nb))
        .collect();
    gens.extend(kb.small_generators().iter().map(|g| g.extend_front(na)));
    gens.push(extend_back(&sa.sigma, nb).add(&sb.sigma.extend_front(na)));
    let group = SymmetryGroup::from_generators(na + nb, &gens, cap)?;
    let engine = JacobiEngine::new(matrix.clone(), weights.clone());
    fjr_state_space(&matrix, &weights, &group, &engine)
}

/// Product-of-models report: the table, the mirror flip against the duals,
/// and optionally the direct recomputation.
#[derive(Debug, Clone, Serialize)]
pub struct ProductReport {
    pub schema: u32,
    pub model: String,
    pub factors: Vec<String>,
    pub dim: usize,
    pub table: Vec<TableEntry>,
    pub checks: Vec<IdentityCheck>,
    pub pass: bool,
}

/// Builds the product table of exactly two factors and runs its checks.
pub fn product_report(name: &str, factors: &[ModelContext], direct: bool) -> Result<ProductReport> {
    let [a, b] = factors else {
        return Err(Error::Precondition(format!(
            "a product takes exactly two factors, got {}",
            factors.len()
        )));
    };
    let table = product_diamond(&a.four_pieces()?, &b.four_pieces()?);
    let dim = product_dim(a, b);

    let mut checks = Vec::new();
    let dual = product_diamond(&a.star()?.four_pieces()?, &b.star()?.four_pieces()?);
    checks.push(check_tables(
        "product mirror flip",
        &table,
        &dual.flip_p(rat(dim as i64)),
    ));
    checks.push(check_tables(
        "product Hodge symmetry",
        &table,
        &table.transpose(),
    ));
    if direct {
        checks.push(check_tables(
            "direct product build",
            &table,
            &direct_product_table(a, b)?,
        ));
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(ProductReport {
        schema: 1,
        model: name.to_string(),
        factors: factors.iter().map(|c| c.name.clone()).collect(),
        dim,
        table: table.to_entries(),
        checks,
        pass,
    })
}
