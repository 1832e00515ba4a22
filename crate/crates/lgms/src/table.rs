//! Bigraded dimension tables: sparse maps `(p,q) -> dim` over exact
//! rational bidegrees, with the shift/flip/convolution operations the
//! mirror identities are phrased in.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::{rat, rat_str, Rat};

/// Sparse table of nonnegative dimensions indexed by exact bidegrees.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BigradedTable {
    cells: BTreeMap<(Rat, Rat), u64>,
}

/// One `(p, q, dim)` entry in serialized form.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableEntry {
    pub p: String,
    pub q: String,
    pub dim: u64,
}

impl BigradedTable {
    /// Empty table.
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `dim` at `(p,q)`.
    pub fn add(&mut self, p: Rat, q: Rat, dim: u64) {
        if dim > 0 {
            *self.cells.entry((p, q)).or_insert(0) += dim;
        }
    }

    /// Dimension at `(p,q)` (0 when absent).
    pub fn get(&self, p: Rat, q: Rat) -> u64 {
        self.cells.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Number of nonzero cells.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    /// True when every cell is zero.
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Iterates cells in lexicographic `(p,q)` order.
    pub fn iter(&self) -> impl Iterator<Item = (Rat, Rat, u64)> + '_ {
        self.cells.iter().map(|(&(p, q), &d)| (p, q, d))
    }

    /// Sum of all dimensions.
    pub fn total(&self) -> u64 {
        self.cells.values().sum()
    }

    /// Pointwise sum.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, q, d) in other.iter() {
            out.add(p, q, d);
        }
        out
    }

    /// Translates every bidegree by `(dp, dq)`.
    pub fn shift(&self, dp: Rat, dq: Rat) -> Self {
        Self {
            cells: self
                .cells
                .iter()
                .map(|(&(p, q), &d)| ((p + dp, q + dq), d))
                .collect(),
        }
    }

    /// Mirror flip `(p,q) -> (c - p, q)`.
    pub fn flip_p(&self, c: Rat) -> Self {
        Self {
            cells: self
                .cells
                .iter()
                .map(|(&(p, q), &d)| ((c - p, q), d))
                .collect(),
        }
    }

    /// Hodge-symmetry transpose `(p,q) -> (q,p)`.
    pub fn transpose(&self) -> Self {
        Self {
            cells: self.cells.iter().map(|(&(p, q), &d)| ((q, p), d)).collect(),
        }
    }

    /// Künneth convolution: `(self * other)(p,q) = sum self(a,b) other(p-a,q-b)`.
    pub fn convolve(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for (p1, q1, d1) in self.iter() {
            for (p2, q2, d2) in other.iter() {
                out.add(p1 + p2, q1 + q2, d1 * d2);
            }
        }
        out
    }

    /// True when every bidegree has integer coordinates.
    pub fn all_integral(&self) -> bool {
        self.cells
            .keys()
            .all(|(p, q)| p.is_integer() && q.is_integer())
    }

    /// True when every bidegree lies in `(1/2 + Z)^2`.
    pub fn all_half_integral(&self) -> bool {
        self.cells
            .keys()
            .all(|(p, q)| *p.denom() == 2 && *q.denom() == 2)
    }

    /// Row of dimensions with `p + q = t`, ordered by decreasing `p`.
    pub fn antidiagonal(&self, t: Rat) -> Vec<(Rat, u64)> {
        let mut row: Vec<(Rat, u64)> = self
            .iter()
            .filter(|&(p, q, _)| p + q == t)
            .map(|(p, _, d)| (p, d))
            .collect();
        row.sort_by_key(|cell| std::cmp::Reverse(cell.0));
        row
    }

    /// Inclusive bidegree bounds `((p_min,q_min),(p_max,q_max))`, if nonempty.
    pub fn bounds(&self) -> Option<((Rat, Rat), (Rat, Rat))> {
        let mut it = self.cells.keys();
        let &(p0, q0) = it.next()?;
        let (mut pmin, mut pmax, mut qmin, mut qmax) = (p0, p0, q0, q0);
        for &(p, q) in self.cells.keys() {
            pmin = pmin.min(p);
            pmax = pmax.max(p);
            qmin = qmin.min(q);
            qmax = qmax.max(q);
        }
        Some(((pmin, qmin), (pmax, qmax)))
    }

    /// Serialized entries with fraction-string bidegrees, sorted.
    pub fn to_entries(&self) -> Vec<TableEntry> {
        self.iter()
            .map(|(p, q, d)| TableEntry {
                p: rat_str(p),
                q: rat_str(q),
                dim: d,
            })
            .collect()
    }

    /// Rebuilds a table from serialized entries.
    pub fn from_entries(entries: &[TableEntry]) -> crate::error::Result<Self> {
        let mut out = Self::new();
        for e in entries {
            let p = crate::rational::parse_rat(&e.p).map_err(crate::error::Error::Parse)?;
            let q = crate::rational::parse_rat(&e.q).map_err(crate::error::Error::Parse)?;
            out.add(p, q, e.dim);
        }
        Ok(out)
    }
}

impl fmt::Display for BigradedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "(empty)");
        }
        let mut first = true;
        for (p, q, d) in self.iter() {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "h^{{{},{}}} = {}", rat_str(p), rat_str(q), d)?;
        }
        Ok(())
    }
}

impl FromIterator<((Rat, Rat), u64)> for BigradedTable {
    fn from_iter<T: IntoIterator<Item = ((Rat, Rat), u64)>>(iter: T) -> Self {
        let mut out = Self::new();
        for ((p, q), d) in iter {
            out.add(p, q, d);
        }
        out
    }
}

/// Convenience constructor from integer bidegrees.
pub fn table_of(cells: &[(i64, i64, u64)]) -> BigradedTable {
    cells
        .iter()
        .map(|&(p, q, d)| ((rat(p), rat(q)), d))
        .collect()
}
