//! Graded Jacobi rings of invertible potentials.
//!
//! For a potential restricted to the fixed locus of a symmetry, the engine
//! computes a monomial basis of every weighted-degree slice of the Milnor
//! ring `k[x_F]/(dW_F)` by sparse fraction-free row elimination, returning
//! grevlex standard monomials. An independent oracle evaluates the closed
//! Poincaré series `prod (1-t^{d-w})/(1-t^w)`, which tests compare against.
//! Rings are memoized per fixed-variable mask behind a lock, so the many
//! sectors sharing a fixed locus pay for one elimination.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyspec::{classify_atoms, ExponentMatrix, WeightSystem};

/// Milnor ring of a restricted potential, graded by weighted degree.
#[derive(Debug)]
pub struct JacobiRing {
    /// Parent variable indices of the fixed locus, sorted.
    pub fixed: Vec<usize>,
    /// Weights of the fixed variables (no renormalization).
    pub weights: Vec<i64>,
    /// Common degree of the parent potential.
    pub degree: i64,
    /// Top nonzero degree: `sum_F (d - 2 w_j)`.
    pub socle: i64,
    /// `basis[k]` = grevlex standard monomial exponents in degree `k`,
    /// aligned with `fixed`.
    pub basis: Vec<Vec<Vec<i64>>>,
}

impl JacobiRing {
    /// Dimension of each weighted-degree slice, indices `0..=socle`.
    pub fn dims(&self) -> Vec<u64> {
        self.basis.iter().map(|b| b.len() as u64).collect()
    }

    /// Total dimension (the Milnor number of the restriction).
    pub fn milnor(&self) -> u64 {
        self.basis.iter().map(|b| b.len() as u64).sum()
    }

    /// Slice dimension at weighted degree `k` (0 outside `0..=socle`).
    pub fn dim_at(&self, k: i64) -> u64 {
        if k < 0 || k > self.socle {
            0
        } else {
            self.basis[k as usize].len() as u64
        }
    }
}

/// Exact truncated Poincaré series of the Milnor ring:
/// coefficients of `prod_j (1-t^{d-w_j})/(1-t^{w_j})` up to the socle degree.
pub fn poincare_dims(weights: &[i64], degree: i64) -> Vec<u64> {
    let socle: i64 = weights.iter().map(|&w| degree - 2 * w).sum();
    debug_assert!(socle >= 0, "charges above 1/2 are impossible here");
    let n = socle as usize;
    let mut a = vec![0i64; n + 1];
    a[0] = 1;
    for &w in weights {
        let s = (degree - w) as usize;
        if s == w as usize {
            continue; // factor (1-t^s)/(1-t^w) = 1
        }
        if s <= n {
            for k in (s..=n).rev() {
                a[k] -= a[k - s];
            }
        }
    }
    for &w in weights {
        let w = w as usize;
        if (degree as usize) == 2 * w {
            continue;
        }
        for k in w..=n {
            a[k] += a[k - w];
        }
    }
    a.into_iter()
        .map(|c| u64::try_from(c).expect("Poincaré coefficients are nonnegative"))
        .collect()
}

/// Milnor number `prod_j (d - w_j)/w_j`, when integral.
pub fn milnor_number(weights: &[i64], degree: i64) -> Option<u64> {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for &w in weights {
        num *= (degree - w) as i128;
        den *= w as i128;
        let g = num.gcd(&den);
        num /= g;
        den /= g;
    }
    (den == 1 && num >= 0).then_some(num as u64)
}

/// All exponent vectors with `sum e_j w_j = target`.
fn enumerate_monomials(weights: &[i64], target: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if target < 0 {
        return out;
    }
    let mut cur = vec![0i64; weights.len()];
    fn rec(weights: &[i64], j: usize, rem: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if j + 1 == weights.len() {
            if rem % weights[j] == 0 {
                cur[j] = rem / weights[j];
                out.push(cur.clone());
                cur[j] = 0;
            }
            return;
        }
        let mut e = 0;
        while e * weights[j] <= rem {
            cur[j] = e;
            rec(weights, j + 1, rem - e * weights[j], cur, out);
            e += 1;
        }
        cur[j] = 0;
    }
    if weights.is_empty() {
        if target == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(weights, 0, target, &mut cur, &mut out);
    out
}

/// Graded reverse lexicographic order, biggest monomial first.
fn grevlex_desc(a: &[i64], b: &[i64]) -> Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    db.cmp(&da).then_with(|| {
        for j in (0..a.len()).rev() {
            if a[j] != b[j] {
                // In grevlex the monomial with the smaller trailing entry wins.
                return a[j].cmp(&b[j]);
            }
        }
        Ordering::Equal
    })
}

/// Sparse fraction-free row eliminator keyed by leading column.
#[derive(Default)]
struct Eliminator {
    pivots: HashMap<u32, Vec<(u32, BigInt)>>,
}

fn normalize(row: &mut [(u32, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, c) in row.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, c) in row.iter_mut() {
            *c /= &g;
        }
    }
    if row[0].1.is_negative() {
        for (_, c) in row.iter_mut() {
            *c = -&*c;
        }
    }
}

/// `p[0].1 * r - r[0].1 * p`, merged by column; leading entries cancel.
fn combine(r: &[(u32, BigInt)], p: &[(u32, BigInt)]) -> Vec<(u32, BigInt)> {
    let a = &p[0].1;
    let b = &r[0].1;
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < r.len() || j < p.len() {
        let c = match (r.get(i), p.get(j)) {
            (Some((ri, rc)), Some((pj, pc))) if ri == pj => {
                i += 1;
                j += 1;
                (*ri, a * rc - b * pc)
            }
            (Some((ri, rc)), Some((pj, _))) if ri < pj => {
                i += 1;
                (*ri, a * rc)
            }
            (Some((ri, rc)), None) => {
                i += 1;
                (*ri, a * rc)
            }
            (_, Some((pj, pc))) => {
                j += 1;
                (*pj, -(b * pc))
            }
            (None, None) => unreachable!(),
        };
        if !c.1.is_zero() {
            out.push(c);
        }
    }
    out
}

impl Eliminator {
    /// Reduces the row against current pivots; returns true when independent.
    fn insert(&mut self, mut row: Vec<(u32, BigInt)>) -> bool {
        loop {
            if row.is_empty() {
                return false;
            }
            match self.pivots.get(&row[0].0) {
                Some(p) => row = combine(&row, p),
                None => {
                    normalize(&mut row);
                    self.pivots.insert(row[0].0, row);
                    return true;
                }
            }
        }
    }
}

fn build_ring(
    matrix: &ExponentMatrix,
    weights: &WeightSystem,
    fixed: &[usize],
) -> Result<JacobiRing> {
    let d = weights.degree;
    if fixed.is_empty() {
        return Ok(JacobiRing {
            fixed: vec![],
            weights: vec![],
            degree: d,
            socle: 0,
            basis: vec![vec![vec![]]],
        });
    }
    let wf: Vec<i64> = fixed.iter().map(|&j| weights.weights[j]).collect();
    let rows = matrix.restrict(fixed);
    if rows.len() != fixed.len() {
        return Err(Error::Degenerate(format!(
            "potential restricted to {} variables keeps {} monomials; the restriction is degenerate",
            fixed.len(),
            rows.len()
        )));
    }
    let sub = ExponentMatrix::new(rows.clone())
        .map_err(|e| Error::Degenerate(format!("restricted potential is singular: {e}")))?;
    classify_atoms(&sub)
        .map_err(|e| Error::Degenerate(format!("restricted potential is not invertible: {e}")))?;

    let nf = fixed.len();
    // Term lists of the partial derivatives, all of degree d - w_j.
    let mut derivs: Vec<Vec<(Vec<i64>, i64)>> = vec![vec![]; nf];
    for row in &rows {
        for j in 0..nf {
            if row[j] > 0 {
                let mut m = row.clone();
                m[j] -= 1;
                derivs[j].push((m, row[j]));
            }
        }
    }
    let socle: i64 = wf.iter().map(|&w| d - 2 * w).sum();
    let mut slices: Vec<Vec<Vec<i64>>> = Vec::with_capacity(socle as usize + 1);
    let mut basis = Vec::with_capacity(socle as usize + 1);
    for k in 0..=socle {
        let mut monos = enumerate_monomials(&wf, k);
        monos.sort_by(|a, b| grevlex_desc(a, b));
        let index: HashMap<Vec<i64>, u32> = monos
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i as u32))
            .collect();
        let mut elim = Eliminator::default();
        for j in 0..nf {
            let mult_deg = k - (d - wf[j]);
            if mult_deg < 0 {
                continue;
            }
            for m in &slices[mult_deg as usize] {
                let mut row_map: BTreeMap<u32, BigInt> = BTreeMap::new();
                for (e, c) in &derivs[j] {
                    let key: Vec<i64> = m.iter().zip(e).map(|(a, b)| a + b).collect();
                    *row_map.entry(index[&key]).or_default() += BigInt::from(*c);
                }
                row_map.retain(|_, c| !c.is_zero());
                elim.insert(row_map.into_iter().collect());
            }
        }
        basis.push(
            monos
                .iter()
                .enumerate()
                .filter(|(i, _)| !elim.pivots.contains_key(&(*i as u32)))
                .map(|(_, m)| m.clone())
                .collect::<Vec<_>>(),
        );
        slices.push(monos);
    }
    Ok(JacobiRing {
        fixed: fixed.to_vec(),
        weights: wf,
        degree: d,
        socle,
        basis,
    })
}

/// Memoizing factory for the Jacobi rings of one potential's restrictions.
pub struct JacobiEngine {
    matrix: ExponentMatrix,
    weights: WeightSystem,
    cache: RwLock<HashMap<u64, Arc<JacobiRing>>>,
}

impl JacobiEngine {
    /// Engine for the given potential and its (unreduced along restrictions)
    /// weight system.
    pub fn new(matrix: ExponentMatrix, weights: WeightSystem) -> Self {
        assert!(matrix.dim() <= 63, "more than 63 variables");
        Self {
            matrix,
            weights,
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// The underlying exponent matrix.
    pub fn matrix(&self) -> &ExponentMatrix {
        &self.matrix
    }

    /// The parent weight system.
    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    /// Ring of the restriction to the (sorted) fixed variable set.
    pub fn ring(&self, fixed: &[usize]) -> Result<Arc<JacobiRing>> {
        debug_assert!(fixed.windows(2).all(|w| w[0] < w[1]));
        let mask = fixed.iter().fold(0u64, |m, &j| m | (1 << j));
        if let Some(r) = self.cache.read().unwrap().get(&mask) {
            return Ok(r.clone());
        }
        let ring = Arc::new(build_ring(&self.matrix, &self.weights, fixed)?);
        Ok(self
            .cache
            .write()
            .unwrap()
            .entry(mask)
            .or_insert(ring)
            .clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(rows: Vec<Vec<i64>>) -> JacobiEngine {
        let m = ExponentMatrix::new(rows).unwrap();
        let w = WeightSystem::from_matrix(&m).unwrap();
        JacobiEngine::new(m, w)
    }

    #[test]
    fn poincare_of_fermat_quartic_threefold_slice() {
        // Four variables of weight 1, degree 4: dims (1+t+t^2)^4.
        let dims = poincare_dims(&[1, 1, 1, 1], 4);
        assert_eq!(dims, vec![1, 4, 10, 16, 19, 16, 10, 4, 1]);
        assert_eq!(dims.iter().sum::<u64>(), 81);
        assert_eq!(milnor_number(&[1, 1, 1, 1], 4), Some(81));
    }

    #[test]
    fn poincare_of_mixed_model_is_symmetric() {
        let dims = poincare_dims(&[4, 3, 2], 18);
        assert_eq!(dims.len() as i64 - 1, 36);
        assert_eq!(dims[9], 3);
        assert_eq!(dims.iter().sum::<u64>(), 140);
        assert_eq!(milnor_number(&[4, 3, 2], 18), Some(140));
        for k in 0..dims.len() {
            assert_eq!(dims[k], dims[dims.len() - 1 - k]);
        }
    }

    #[test]
    fn weight_half_variable_contributes_trivially() {
        assert_eq!(poincare_dims(&[1], 2), vec![1]);
        assert_eq!(
            poincare_dims(&[5, 1, 1, 1, 1, 1], 10),
            poincare_dims(&[1, 1, 1, 1, 1], 10)
        );
    }

    #[test]
    fn fermat_square_ring_has_standard_monomials() {
        let eng = engine(vec![vec![4, 0], vec![0, 4]]);
        let ring = eng.ring(&[0, 1]).unwrap();
        assert_eq!(ring.dims(), vec![1, 2, 3, 2, 1]);
        assert_eq!(ring.milnor(), 9);
        // Degree 3: x^3 and y^3 are pivots, x^2 y and x y^2 survive.
        assert_eq!(ring.basis[3], vec![vec![2, 1], vec![1, 2]]);
        // The socle is generated by (xy)^2.
        assert_eq!(ring.basis[4], vec![vec![2, 2]]);
    }

    #[test]
    fn rings_match_oracle_on_mixed_model_masks() {
        let eng = engine(vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]]);
        for fixed in [vec![], vec![1], vec![0, 2], vec![0, 1, 2]] {
            let ring = eng.ring(&fixed).unwrap();
            let wf: Vec<i64> = fixed.iter().map(|&j| [4, 3, 2][j]).collect();
            assert_eq!(ring.dims(), poincare_dims(&wf, 18), "mask {fixed:?}");
            assert_eq!(
                Some(ring.milnor()),
                milnor_number(&wf, 18),
                "mask {fixed:?}"
            );
        }
        // The loop restriction has Milnor number (14/4)(16/2) = 28.
        assert_eq!(eng.ring(&[0, 2]).unwrap().milnor(), 28);
        // The empty restriction is the ground field in degree zero.
        let pt = eng.ring(&[]).unwrap();
        assert_eq!(pt.dims(), vec![1]);
        assert_eq!(pt.basis[0], vec![Vec::<i64>::new()]);
    }

    #[test]
    fn degenerate_restriction_is_detected() {
        // x1^4 x3 + x1 x3^7 + x2^6 restricted to {x1} keeps no monomial.
        let eng = engine(vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]]);
        assert!(matches!(eng.ring(&[0]), Err(Error::Degenerate(_))));
        // Chain x^2 y + y^3 restricted to its head variable is degenerate too.
        let eng = engine(vec![vec![2, 1], vec![0, 3]]);
        assert!(matches!(eng.ring(&[0]), Err(Error::Degenerate(_))));
        let tail = eng.ring(&[1]).unwrap();
        assert_eq!(tail.dims(), vec![1, 1]);
    }

    #[test]
    fn loop_elimination_handles_two_term_rows() {
        // Full ring of the mixed model: 140 classes, middle slice included.
        let eng = engine(vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]]);
        let ring = eng.ring(&[0, 1, 2]).unwrap();
        assert_eq!(ring.milnor(), 140);
        assert_eq!(ring.dim_at(9), 3);
        assert_eq!(ring.dim_at(18 * 2 - 9 - 9 - 4 - 3 - 2), ring.dim_at(9));
    }

    #[test]
    fn fermat_cubic_fivefold_total() {
        let eng = engine(vec![vec![6, 0, 0], vec![0, 6, 0], vec![0, 0, 6]]);
        let ring = eng.ring(&[0, 1, 2]).unwrap();
        assert_eq!(ring.milnor(), 125);
        assert_eq!(ring.dims(), poincare_dims(&[1, 1, 1], 6));
    }

    #[test]
    fn engine_memoizes_per_mask() {
        let eng = engine(vec![vec![4, 0], vec![0, 4]]);
        let a = eng.ring(&[0, 1]).unwrap();
        let b = eng.ring(&[0, 1]).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
