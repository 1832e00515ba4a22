//! Finite diagonal symmetry groups of invertible polynomials.
//!
//! Elements of `(Q/Z)^n` act on coordinates by `x_j -> e^{2 pi i g_j} x_j`.
//! Components are kept as reduced rationals in `[0,1)`; group enumeration
//! runs on a shared-denominator integer representation for speed and is
//! guarded by an element cap (default 10^6).

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix;
use crate::rational::{frac, lcm, parse_rat, rat, rat0, rat_str, ratio, Rat};

/// Default cap on enumerated group orders.
pub const DEFAULT_CAP: usize = 1_000_000;

/// One diagonal symmetry: components in `[0,1)`, one per coordinate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagonalSymmetry {
    comps: Vec<Rat>,
}

impl DiagonalSymmetry {
    /// Builds a symmetry, reducing every component into `[0,1)`.
    pub fn new(comps: Vec<Rat>) -> Self {
        Self {
            comps: comps.into_iter().map(frac).collect(),
        }
    }

    /// The identity on `n` coordinates.
    pub fn identity(n: usize) -> Self {
        Self {
            comps: vec![rat0(); n],
        }
    }

    /// Number of coordinates acted on.
    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    /// Component slice (each in `[0,1)`).
    pub fn comps(&self) -> &[Rat] {
        &self.comps
    }

    /// Componentwise sum mod 1.
    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::new(
            self.comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Group inverse (componentwise negation mod 1).
    pub fn inverse(&self) -> Self {
        Self::new(self.comps.iter().map(|a| -a).collect())
    }

    /// Componentwise difference mod 1.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.inverse())
    }

    /// Components as integers over a shared denominator `(numerators, D)`.
    pub fn int_comps(&self) -> (Vec<i64>, i64) {
        let d = self.comps.iter().fold(1, |acc, c| lcm(acc, *c.denom()));
        (
            self.comps
                .iter()
                .map(|c| c.numer() * (d / c.denom()))
                .collect(),
            d,
        )
    }

    /// `k`-th power.
    pub fn pow(&self, k: i64) -> Self {
        Self::new(self.comps.iter().map(|a| a * rat(k)).collect())
    }

    /// Order as a group element (lcm of reduced denominators).
    pub fn order(&self) -> i64 {
        self.comps.iter().fold(1, |acc, c| lcm(acc, *c.denom()))
    }

    /// True when every component vanishes.
    pub fn is_identity(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// Age `a(g) = sum_j g_j` with components in `[0,1)`.
    pub fn age(&self) -> Rat {
        self.comps.iter().sum()
    }

    /// Indices of coordinates fixed by the symmetry (`g_j = 0`).
    pub fn fixed_coords(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&j| self.comps[j].is_zero())
            .collect()
    }

    /// Number of coordinates moved by the symmetry.
    pub fn support_len(&self) -> usize {
        self.comps.iter().filter(|c| !c.is_zero()).count()
    }

    /// Prepends zero components (embedding into a suspension's coordinates).
    pub fn extend_front(&self, k: usize) -> Self {
        let mut comps = vec![rat0(); k];
        comps.extend(self.comps.iter().cloned());
        Self { comps }
    }

    /// Components as reduced fraction strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.comps.iter().map(|c| rat_str(*c)).collect()
    }

    /// Parses components given as fraction strings.
    pub fn parse(parts: &[String]) -> Result<Self> {
        let comps = parts
            .iter()
            .map(|s| parse_rat(s).map_err(Error::Parse))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(comps))
    }
}

/// A finite subgroup of `(Q/Z)^n`, stored as integer vectors over a shared
/// denominator, sorted canonically.
#[derive(Debug, Clone)]
pub struct SymmetryGroup {
    n: usize,
    denom: i64,
    /// Sorted element vectors, entries in `[0, denom)`.
    elements: Vec<Vec<i64>>,
    /// Generator vectors over the same denominator.
    gens: Vec<Vec<i64>>,
}

fn closure(n: usize, denom: i64, gens: &[Vec<i64>], cap: usize) -> Result<BTreeSet<Vec<i64>>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    let id = vec![0i64; n];
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(e) = queue.pop_front() {
        for g in gens {
            let mut f = Vec::with_capacity(n);
            for j in 0..n {
                f.push((e[j] + g[j]) % denom);
            }
            if !seen.contains(&f) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(f.clone());
                queue.push_back(f);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

impl SymmetryGroup {
    /// Group generated by the given symmetries. Errors past the element cap.
    pub fn from_generators(n: usize, gens: &[DiagonalSymmetry], cap: usize) -> Result<Self> {
        for g in gens {
            if g.dim() != n {
                return Err(Error::Precondition(format!(
                    "generator has {} components, expected {n}",
                    g.dim()
                )));
            }
        }
        let denom = gens
            .iter()
            .flat_map(|g| g.comps().iter().map(|c| *c.denom()))
            .fold(1, lcm);
        let int_gens: Vec<Vec<i64>> = gens
            .iter()
            .map(|g| {
                g.comps()
                    .iter()
                    .map(|c| c.numer() * (denom / c.denom()))
                    .collect()
            })
            .collect();
        let elements = closure(n, denom, &int_gens, cap)?;
        Ok(Self {
            n,
            denom,
            elements: elements.into_iter().collect(),
            gens: int_gens,
        }
        .normalized())
    }

    /// Trivial group on `n` coordinates.
    pub fn trivial(n: usize) -> Self {
        Self {
            n,
            denom: 1,
            elements: vec![vec![0; n]],
            gens: vec![],
        }
    }

    fn from_element_set(
        n: usize,
        denom: i64,
        elements: BTreeSet<Vec<i64>>,
        gens: Vec<Vec<i64>>,
    ) -> Self {
        Self {
            n,
            denom,
            elements: elements.into_iter().collect(),
            gens,
        }
        .normalized()
    }

    /// Divides out any common factor of the shared denominator.
    fn normalized(mut self) -> Self {
        let mut g = self.denom;
        for e in &self.elements {
            for &v in e {
                g = num_integer::gcd(g, v);
                if g == 1 {
                    return self;
                }
            }
        }
        if g > 1 {
            self.denom /= g;
            for e in &mut self.elements {
                for v in e.iter_mut() {
                    *v /= g;
                }
            }
            for e in &mut self.gens {
                for v in e.iter_mut() {
                    *v /= g;
                }
            }
            self.elements.sort();
        }
        self
    }

    /// Number of coordinates acted on.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Group order.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Shared denominator of the stored representation.
    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// Element by index, in canonical (sorted) order.
    pub fn element(&self, i: usize) -> DiagonalSymmetry {
        DiagonalSymmetry {
            comps: self.elements[i]
                .iter()
                .map(|&v| ratio(v, self.denom))
                .collect(),
        }
    }

    /// Iterates all elements in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = DiagonalSymmetry> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    /// Generators used to build the group.
    pub fn generators(&self) -> Vec<DiagonalSymmetry> {
        self.gens
            .iter()
            .map(|e| DiagonalSymmetry {
                comps: e.iter().map(|&v| ratio(v, self.denom)).collect(),
            })
            .collect()
    }

    fn to_int(&self, g: &DiagonalSymmetry) -> Option<Vec<i64>> {
        g.comps()
            .iter()
            .map(|c| {
                if self.denom % c.denom() == 0 {
                    Some(c.numer() * (self.denom / c.denom()))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Membership test.
    pub fn contains(&self, g: &DiagonalSymmetry) -> bool {
        if g.dim() != self.n {
            return false;
        }
        match self.to_int(g) {
            Some(v) => self.elements.binary_search(&v).is_ok(),
            None => false,
        }
    }

    /// True when every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.iter().all(|g| other.contains(&g))
    }

    /// Set equality of the underlying element sets.
    pub fn same_elements(&self, other: &Self) -> bool {
        self.n == other.n && self.denom == other.denom && self.elements == other.elements
    }

    /// Group generated by `self` together with `extra`.
    pub fn adjoin(&self, extra: &[DiagonalSymmetry], cap: usize) -> Result<Self> {
        let mut gens = self.small_generators();
        gens.extend(extra.iter().cloned());
        Self::from_generators(self.n, &gens, cap)
    }

    /// Subgroup of elements with integral age sum (the SL condition).
    pub fn sl_subgroup(&self) -> Self {
        let elements: BTreeSet<Vec<i64>> = self
            .elements
            .iter()
            .filter(|e| e.iter().sum::<i64>() % self.denom == 0)
            .cloned()
            .collect();
        let gens = elements.iter().cloned().collect::<Vec<_>>();
        Self::from_element_set(self.n, self.denom, elements, gens)
    }

    /// Elements as sorted lists of fraction strings (the JSON form).
    pub fn to_string_lists(&self) -> Vec<Vec<String>> {
        self.iter().map(|g| g.to_strings()).collect()
    }

    /// A small generating set found greedily; invariance and pairing checks
    /// against the whole group reduce to these.
    pub fn small_generators(&self) -> Vec<DiagonalSymmetry> {
        let mut chosen: Vec<Vec<i64>> = Vec::new();
        let mut span: BTreeSet<Vec<i64>> = [vec![0i64; self.n]].into_iter().collect();
        let candidates = self.gens.iter().chain(self.elements.iter());
        for c in candidates {
            if span.len() == self.order() {
                break;
            }
            if span.contains(c) {
                continue;
            }
            chosen.push(c.clone());
            span = closure(self.n, self.denom, &chosen, self.order())
                .expect("closure within known group");
        }
        chosen
            .into_iter()
            .map(|e| DiagonalSymmetry {
                comps: e.iter().map(|&v| ratio(v, self.denom)).collect(),
            })
            .collect()
    }
}

/// Charges `q_i = w_i/d` read off the inverse exponent matrix (row sums).
pub fn charges(m: &[Vec<i64>]) -> Result<Vec<Rat>> {
    let inv = matrix::inverse(m)?;
    inv.iter()
        .map(|row| {
            let mut s = num_rational::BigRational::zero();
            for e in row {
                s += e;
            }
            let (n, d) = matrix::to_i64_pair(&s).ok_or_else(|| {
                Error::InvalidWeights("charge does not fit exact i64 rational".into())
            })?;
            Ok(ratio(n, d))
        })
        .collect()
}

/// The full group of diagonal symmetries of the polynomial with exponent
/// matrix `m`; its order is `|det m|`.
pub fn aut_group(m: &[Vec<i64>], cap: usize) -> Result<SymmetryGroup> {
    let n = m.len();
    let order = matrix::abs_det_usize(m).ok_or(Error::CapExceeded { cap })?;
    if order == 0 {
        return Err(Error::Singular);
    }
    if order > cap {
        return Err(Error::CapExceeded { cap });
    }
    let inv = matrix::inverse(m)?;
    // Columns of the inverse generate the group.
    let mut gens = Vec::new();
    for j in 0..n {
        let mut comps = Vec::with_capacity(n);
        for row in &inv {
            let (num, den) = matrix::to_i64_pair(&row[j]).ok_or(Error::CapExceeded { cap })?;
            comps.push(ratio(num, den));
        }
        gens.push(DiagonalSymmetry::new(comps));
    }
    let group = SymmetryGroup::from_generators(n, &gens, cap)?;
    debug_assert_eq!(group.order(), order);
    Ok(group)
}

fn require_integral(v: Rat, what: &str) -> Result<i64> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::Precondition(format!(
            "{what} is not a symmetry of the polynomial"
        )))
    }
}

/// Integer vector `M g`; certifies `g` lies in the symmetry group of `M`.
fn lift(m: &[Vec<i64>], g: &DiagonalSymmetry, what: &str) -> Result<Vec<i64>> {
    m.iter()
        .map(|row| {
            let mut s = rat0();
            for (&e, &c) in row.iter().zip(g.comps()) {
                s += rat(e) * c;
            }
            require_integral(s, what)
        })
        .collect()
}

/// Duality pairing between `g` in the symmetry group of `W` and `h` in the
/// symmetry group of the transposed polynomial: `<g,h> = h^T M g mod 1`.
///
/// For diagonal `M` this is `sum_i p_i p'_i / a_i`; pairing against the
/// grading element `J_W` returns the age sum of `h`, so its kernel is the
/// SL condition on the transposed side.
pub fn pairing(m: &[Vec<i64>], g: &DiagonalSymmetry, h: &DiagonalSymmetry) -> Result<Rat> {
    let n = m.len();
    if g.dim() != n || h.dim() != n {
        return Err(Error::Precondition(
            "pairing arguments must match the matrix dimension".into(),
        ));
    }
    let r = lift(m, g, "left pairing argument")?;
    // Validate h on the transposed side.
    let mt: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect();
    lift(&mt, h, "right pairing argument")?;
    let mut s = rat0();
    for (i, &ri) in r.iter().enumerate() {
        s += h.comps()[i] * rat(ri);
    }
    Ok(frac(s))
}

/// Whether `g` is a diagonal symmetry of the polynomial with exponent
/// matrix `m`, i.e. `m g` is integral.
pub fn is_symmetry(m: &[Vec<i64>], g: &DiagonalSymmetry) -> bool {
    if g.dim() != m.len() {
        return false;
    }
    let (comps, den) = g.int_comps();
    m.iter().all(|row| {
        let mut s: i128 = 0;
        for (j, &e) in row.iter().enumerate() {
            s += (e as i128) * (comps[j] as i128);
        }
        s % (den as i128) == 0
    })
}

/// Kernel of the restriction map `Aut(W^T) -> G^` induced by the pairing:
/// all `h` on the transposed side pairing to zero with every element of `G`.
pub fn pairing_kernel(m: &[Vec<i64>], g: &SymmetryGroup, cap: usize) -> Result<SymmetryGroup> {
    let n = m.len();
    let mt: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect();
    let aut_t = aut_group(&mt, cap)?;
    // Integer lifts M g of the generators; <g,h> = sum_i h_i (Mg)_i mod 1.
    let mut lifts = Vec::new();
    for gen in g.small_generators() {
        lifts.push(lift(m, &gen, "group generator")?);
    }
    let denom = aut_t.denom();
    let elements: BTreeSet<Vec<i64>> = aut_t
        .elements
        .iter()
        .filter(|h| {
            lifts.iter().all(|r| {
                let mut s: i128 = 0;
                for i in 0..n {
                    s += (h[i] as i128) * (r[i] as i128);
                }
                s % (denom as i128) == 0
            })
        })
        .cloned()
        .collect();
    let gens = elements.iter().cloned().collect::<Vec<_>>();
    Ok(SymmetryGroup::from_element_set(n, denom, elements, gens))
}

/// The classical dual group: the plain pairing kernel of `G` itself.
pub fn standard_dual(m: &[Vec<i64>], g: &SymmetryGroup, cap: usize) -> Result<SymmetryGroup> {
    pairing_kernel(m, g, cap)
}

/// The dual group of an admissible `G`: the pairing kernel of `G` with the
/// grading element adjoined, i.e. the SL part of the plain kernel.
pub fn dual_group(m: &[Vec<i64>], g: &SymmetryGroup, cap: usize) -> Result<SymmetryGroup> {
    let jw = DiagonalSymmetry::new(charges(m)?);
    let g_j = g.adjoin(std::slice::from_ref(&jw), cap)?;
    pairing_kernel(m, &g_j, cap)
}

/// One node pair of the suspension duality diagram: a group on the left
/// lattice matched with its pairing kernel on the right lattice.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct DiagramNode {
    pub left: String,
    pub right: String,
    pub left_order: usize,
    pub right_order: usize,
    /// Kernel of the left group equals the right group.
    pub forward_ok: bool,
    /// Kernel of the right group equals the left group.
    pub backward_ok: bool,
}

/// One inclusion arrow of the diagram, checked on both lattices.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct DiagramEdge {
    pub name: String,
    pub from: String,
    pub to: String,
    /// The arrow is an inclusion on the left lattice.
    pub includes_ok: bool,
    /// Dualizing reverses the arrow on the right lattice.
    pub dual_reverses_ok: bool,
}

/// Result of checking the suspension duality diagram.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct DiagramReport {
    pub schema: u32,
    pub nodes: Vec<DiagramNode>,
    pub edges: Vec<DiagramEdge>,
    pub pass: bool,
}

/// Verifies the adjunction/duality diagram on the suspension: for each way of
/// adjoining `sigma` and the grading element to `G`, the pairing kernel on the
/// transposed suspension is the complementary adjunction of the dual group.
pub fn duality_diagram_check(
    m: &[Vec<i64>],
    g_w: &SymmetryGroup,
    cap: usize,
) -> Result<DiagramReport> {
    let n = m.len();
    // Suspension matrices: x0^2 + W and its transpose.
    let mut mv = vec![vec![0i64; n + 1]; n + 1];
    mv[0][0] = 2;
    for i in 0..n {
        for j in 0..n {
            mv[i + 1][j + 1] = m[i][j];
        }
    }
    let mvt: Vec<Vec<i64>> = (0..n + 1)
        .map(|i| (0..n + 1).map(|j| mv[j][i]).collect())
        .collect();

    let jw = DiagonalSymmetry::new(charges(m)?).extend_front(1);
    let sigma = {
        let mut comps = vec![rat0(); n + 1];
        comps[0] = ratio(1, 2);
        DiagonalSymmetry::new(comps)
    };
    let sig_jw = sigma.add(&jw);

    let mt: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect();
    let g_star = dual_group(m, g_w, cap)?;
    let jw_star = DiagonalSymmetry::new(charges(&mt)?).extend_front(1);
    let sig_jw_star = sigma.add(&jw_star);

    let ext = |g: &SymmetryGroup| -> Result<SymmetryGroup> {
        let gens: Vec<DiagonalSymmetry> = g
            .small_generators()
            .iter()
            .map(|x| x.extend_front(1))
            .collect();
        SymmetryGroup::from_generators(n + 1, &gens, cap)
    };
    let g_v = ext(g_w)?;
    let g_star_v = ext(&g_star)?;

    let adjoin = |base: &SymmetryGroup, extra: &[&DiagonalSymmetry]| -> Result<SymmetryGroup> {
        let extra: Vec<DiagonalSymmetry> = extra.iter().map(|e| (*e).clone()).collect();
        base.adjoin(&extra, cap)
    };

    let left: Vec<(String, SymmetryGroup)> = vec![
        ("G".into(), g_v.clone()),
        ("G[sigma]".into(), adjoin(&g_v, &[&sigma])?),
        ("G[sigma J]".into(), adjoin(&g_v, &[&sig_jw])?),
        ("G[J]".into(), adjoin(&g_v, &[&jw])?),
        ("G[sigma, J]".into(), adjoin(&g_v, &[&sigma, &jw])?),
    ];
    let right: Vec<(String, SymmetryGroup)> = vec![
        (
            "G*[sigma*, J*]".into(),
            adjoin(&g_star_v, &[&sigma, &jw_star])?,
        ),
        ("G*[J*]".into(), adjoin(&g_star_v, &[&jw_star])?),
        ("G*[sigma* J*]".into(), adjoin(&g_star_v, &[&sig_jw_star])?),
        ("G*[sigma*]".into(), adjoin(&g_star_v, &[&sigma])?),
        ("G*".into(), g_star_v.clone()),
    ];

    let mut nodes = Vec::new();
    let mut pass = true;
    for ((ll, lg), (rl, rg)) in left.iter().zip(&right) {
        let fwd = pairing_kernel(&mv, lg, cap)?;
        let bwd = pairing_kernel(&mvt, rg, cap)?;
        let forward_ok = fwd.same_elements(rg);
        let backward_ok = bwd.same_elements(lg);
        pass &= forward_ok && backward_ok;
        nodes.push(DiagramNode {
            left: ll.clone(),
            right: rl.clone(),
            left_order: lg.order(),
            right_order: rg.order(),
            forward_ok,
            backward_ok,
        });
    }

    // The six arrows: adjoining one datum at a time. Dualizing must turn
    // each inclusion on the left lattice into the reverse one on the right.
    let arrows: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)];
    let mut edges = Vec::new();
    for (k, &(sub, sup)) in arrows.iter().enumerate() {
        let includes_ok = left[sub].1.is_subgroup_of(&left[sup].1);
        let dual_reverses_ok = right[sup].1.is_subgroup_of(&right[sub].1);
        pass &= includes_ok && dual_reverses_ok;
        edges.push(DiagramEdge {
            name: format!("i{}", k + 1),
            from: left[sub].0.clone(),
            to: left[sup].0.clone(),
            includes_ok,
            dual_reverses_ok,
        });
    }

    Ok(DiagramReport {
        schema: 1,
        nodes,
        edges,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fermat(n: usize, a: i64) -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { a } else { 0 }).collect())
            .collect()
    }

    #[test]
    fn aut_of_square_is_order_two() {
        let g = aut_group(&fermat(1, 2), DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.to_string_lists(), vec![vec!["0"], vec!["1/2"]]);
    }

    #[test]
    fn aut_order_is_det_for_mixed_model() {
        let m = vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]];
        let g = aut_group(&m, DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 162);
    }

    #[test]
    fn cap_aborts_enumeration() {
        let m = fermat(5, 10); // order 10^5
        assert!(matches!(
            aut_group(&m, 10_000),
            Err(Error::CapExceeded { cap: 10_000 })
        ));
        assert_eq!(aut_group(&m, DEFAULT_CAP).unwrap().order(), 100_000);
    }

    #[test]
    fn age_sums_canonical_components() {
        let g = DiagonalSymmetry::parse(&["3/4".into(), "0".into(), "3/4".into(), "2/4".into()])
            .unwrap();
        assert_eq!(g.age(), rat(2));
        // age(g) + age(-g) counts the moved coordinates
        assert_eq!(g.age() + g.inverse().age(), rat(g.support_len() as i64));
    }

    #[test]
    fn sl_subgroup_of_fermat_quartic_plane() {
        // x^4 + y^4: |Aut| = 16, |SL| = 4
        let g = aut_group(&fermat(2, 4), DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 16);
        let sl = g.sl_subgroup();
        assert_eq!(sl.order(), 4);
        for e in sl.iter() {
            assert!(e.age().is_integer());
        }
    }

    #[test]
    fn pairing_on_diagonal_matrix() {
        let m = fermat(2, 4);
        let g = DiagonalSymmetry::parse(&["1/4".into(), "2/4".into()]).unwrap();
        let h = DiagonalSymmetry::parse(&["3/4".into(), "1/4".into()]).unwrap();
        // sum p_i p'_i / a_i = 3/4 + 2/4 = 5/4 -> 1/4
        assert_eq!(pairing(&m, &g, &h).unwrap(), ratio(1, 4));
        // non-member rejected
        let bad = DiagonalSymmetry::parse(&["1/3".into(), "0".into()]).unwrap();
        assert!(pairing(&m, &g, &bad).is_err());
    }

    #[test]
    fn pairing_with_grading_element_is_age_sum() {
        let m = vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]];
        let jw = DiagonalSymmetry::new(charges(&m).unwrap());
        let mt: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| m[j][i]).collect()).collect();
        let aut_t = aut_group(&mt, DEFAULT_CAP).unwrap();
        for h in aut_t.iter() {
            assert_eq!(pairing(&m, &jw, &h).unwrap(), frac(h.age()));
        }
    }

    #[test]
    fn dual_of_j_squared_is_sl_on_transposed_side() {
        let m = vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]];
        let jw = DiagonalSymmetry::new(charges(&m).unwrap());
        let g = SymmetryGroup::from_generators(3, &[jw.pow(2)], DEFAULT_CAP).unwrap();
        let dual = dual_group(&m, &g, DEFAULT_CAP).unwrap();
        let mt: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| m[j][i]).collect()).collect();
        let sl_t = aut_group(&mt, DEFAULT_CAP).unwrap().sl_subgroup();
        assert!(dual.same_elements(&sl_t));
        // Dual of the dual recovers G.
        let back = dual_group(&mt, &dual, DEFAULT_CAP).unwrap();
        assert!(back.same_elements(&g));
    }

    #[test]
    fn duality_diagram_on_mixed_model() {
        let m = vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]];
        let jw = DiagonalSymmetry::new(charges(&m).unwrap());
        let g = SymmetryGroup::from_generators(3, &[jw.pow(2)], DEFAULT_CAP).unwrap();
        let report = duality_diagram_check(&m, &g, DEFAULT_CAP).unwrap();
        assert!(report.pass, "diagram failed: {report:?}");
        assert_eq!(report.nodes.len(), 5);
        assert_eq!(report.edges.len(), 6);
    }

    #[test]
    fn inclusion_reversal_under_duality() {
        let m = fermat(3, 6);
        let aut = aut_group(&m, DEFAULT_CAP).unwrap();
        let jw = DiagonalSymmetry::new(charges(&m).unwrap());
        let g1 = SymmetryGroup::from_generators(3, &[jw.pow(2)], DEFAULT_CAP).unwrap();
        let g2 = aut.sl_subgroup();
        assert!(g1.is_subgroup_of(&g2));
        let d1 = dual_group(&m, &g1, DEFAULT_CAP).unwrap();
        let d2 = dual_group(&m, &g2, DEFAULT_CAP).unwrap();
        assert!(d2.is_subgroup_of(&d1));
    }
}
