//! Text rendering of Hodge diamonds.
//!
//! The combined diamond shows the cover's classes on the integer lattice
//! and the branch classes half a step in, in brackets, so one picture
//! carries both halves of the story. Rows are ordered by total degree,
//! descending; within a row the first Hodge index descends in half steps.

use crate::rational::{rat, ratio, Rat};
use crate::table::BigradedTable;

fn max_coord(table: &BigradedTable) -> i64 {
    table
        .iter()
        .map(|(p, q, _)| p.max(q))
        .max()
        .map(|r| r.ceil().to_integer())
        .unwrap_or(0)
}

/// Renders the combined diamond of a cover table (integer bidegrees) and a
/// branch table (embedded between them). Pass an empty branch table for a
/// plain diamond.
pub fn render_combined(cover: &BigradedTable, branch: &BigradedTable) -> String {
    if cover.is_empty() && branch.is_empty() {
        return "(empty)\n".into();
    }
    let show_half = !branch.is_empty();
    let half = ratio(1, 2);
    let embedded = branch.shift(half, half);
    let d = max_coord(cover).max(if show_half { max_coord(branch) + 1 } else { 0 });

    let mut rows: Vec<String> = Vec::new();
    for tt in (0..=2 * d).rev() {
        let hi = 2 * d.min(tt);
        let lo = 2 * (tt - d).max(0);
        let mut cells: Vec<String> = Vec::new();
        for twop in (lo..=hi).rev() {
            let p: Rat = ratio(twop, 2);
            let q: Rat = rat(tt) - p;
            if twop % 2 == 0 {
                cells.push(cover.get(p, q).to_string());
            } else if show_half
                && p >= half
                && p <= rat(d) - half
                && q >= half
                && q <= rat(d) - half
            {
                cells.push(format!("[{}]", embedded.get(p, q)));
            }
        }
        rows.push(cells.join("  "));
    }
    let width = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut out = String::new();
    for row in rows {
        let pad = (width - row.len()) / 2;
        for _ in 0..pad {
            out.push(' ');
        }
        out.push_str(&row);
        out.push('\n');
    }
    out
}

/// Renders a plain integer-lattice diamond.
pub fn render_diamond(table: &BigradedTable) -> String {
    render_combined(table, &BigradedTable::new())
}
