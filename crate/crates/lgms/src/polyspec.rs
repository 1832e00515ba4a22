//! Invertible polynomials: exponent matrices, weight systems, atom
//! decomposition, and the one-variable suspension.
//!
//! A polynomial `W = sum_i prod_j x_j^{m_ij}` is *invertible* when its square
//! exponent matrix is nonsingular and `W` decomposes into Fermat, chain, and
//! loop atoms on disjoint variables. Coefficients are immaterial for every
//! invariant computed here and are normalized to 1.

use std::fmt;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix;
use crate::rational::{lcm, rat, ratio, Rat};
use crate::symmetry::{charges, DiagonalSymmetry};

/// Square exponent matrix of an invertible polynomial (rows = monomials).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    rows: Vec<Vec<i64>>,
}

impl ExponentMatrix {
    /// Validates shape (square, nonnegative entries, nonsingular).
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotInvertible("empty exponent matrix".into()));
        }
        for row in &rows {
            if row.len() != n {
                return Err(Error::NotInvertible(format!(
                    "matrix is not square: {n} monomials but a row has {} exponents",
                    row.len()
                )));
            }
            if row.iter().any(|&e| e < 0) {
                return Err(Error::NotInvertible("negative exponent".into()));
            }
            if row.iter().all(|&e| e == 0) {
                return Err(Error::NotInvertible("constant monomial row".into()));
            }
        }
        if matrix::det(&rows).is_zero() {
            return Err(Error::Singular);
        }
        Ok(Self { rows })
    }

    /// Number of variables (= number of monomials).
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Row access.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Transposed matrix (the mirror-side polynomial).
    pub fn transpose(&self) -> Self {
        let n = self.dim();
        Self {
            rows: (0..n)
                .map(|i| (0..n).map(|j| self.rows[j][i]).collect())
                .collect(),
        }
    }

    /// Exponent matrix of `x0^2 + W` (block diagonal `[2] (+) M`).
    pub fn suspend(&self) -> Self {
        let n = self.dim();
        let mut rows = vec![vec![0i64; n + 1]; n + 1];
        rows[0][0] = 2;
        for i in 0..n {
            for j in 0..n {
                rows[i + 1][j + 1] = self.rows[i][j];
            }
        }
        Self { rows }
    }

    /// `|det M|`, the order of the full symmetry group.
    pub fn abs_det(&self) -> Option<usize> {
        matrix::abs_det_usize(&self.rows)
    }

    /// Restriction to the variables in `keep` (sorted index list): retains
    /// exactly the monomials supported on `keep`. For invertible polynomials
    /// restricted along a symmetry's fixed locus the result is square.
    pub fn restrict(&self, keep: &[usize]) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .filter(|row| (0..row.len()).all(|j| row[j] == 0 || keep.binary_search(&j).is_ok()))
            .map(|row| keep.iter().map(|&j| row[j]).collect())
            .collect()
    }

    /// The polynomial as a human-readable string, `x1^4*x3 + ...`.
    pub fn display(&self) -> String {
        let terms: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let factors: Vec<String> = row
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(j, &e)| {
                        if e == 1 {
                            format!("x{}", j + 1)
                        } else {
                            format!("x{}^{e}", j + 1)
                        }
                    })
                    .collect();
                factors.join("*")
            })
            .collect();
        terms.join(" + ")
    }
}

/// Integer weight system `(w_1,...,w_n; d)` with `gcd(w) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSystem {
    pub weights: Vec<i64>,
    pub degree: i64,
}

impl WeightSystem {
    /// Computes the unique reduced weight system from the charge vector.
    pub fn from_matrix(m: &ExponentMatrix) -> Result<Self> {
        let q = charges(m.rows())?;
        for c in &q {
            if *c <= Rat::zero() || *c >= rat(1) {
                return Err(Error::InvalidWeights(format!(
                    "charge {c} outside (0,1); not a valid quasi-homogeneous potential"
                )));
            }
        }
        let d = q.iter().fold(1i64, |acc, c| lcm(acc, *c.denom()));
        let weights: Vec<i64> = q.iter().map(|c| c.numer() * (d / c.denom())).collect();
        let g = weights.iter().fold(d, |acc, &w| num_integer::gcd(acc, w));
        Ok(Self {
            weights: weights.iter().map(|w| w / g).collect(),
            degree: d / g,
        })
    }

    /// Charge vector `w_i/d`.
    pub fn charges(&self) -> Vec<Rat> {
        self.weights
            .iter()
            .map(|&w| ratio(w, self.degree))
            .collect()
    }

    /// Sum of weights.
    pub fn weight_sum(&self) -> i64 {
        self.weights.iter().sum()
    }

    /// `2 sum w = d`: the half-Calabi-Yau condition.
    pub fn is_half_cy(&self) -> bool {
        2 * self.weight_sum() == self.degree
    }

    /// `sum w = d`: the Calabi-Yau condition.
    pub fn is_cy(&self) -> bool {
        self.weight_sum() == self.degree
    }

    /// Grading element `J = (w_1/d, ..., w_n/d)`.
    pub fn grading_element(&self) -> DiagonalSymmetry {
        DiagonalSymmetry::new(self.charges())
    }

    /// Weight system of the suspension `x0^2 + W` for a half-CY `W`:
    /// `(d/2, w_1, ..., w_n; d)`. The extra variable has weight `d/2`, and
    /// the result is Calabi-Yau; it is already reduced (gcd stays 1).
    pub fn suspend(&self) -> Result<Self> {
        if !self.is_half_cy() {
            return Err(Error::Precondition(format!(
                "suspension weight d/2 requires 2*sum(w) = d, got sum(w) = {} and d = {}",
                self.weight_sum(),
                self.degree
            )));
        }
        let mut weights = vec![self.degree / 2];
        weights.extend_from_slice(&self.weights);
        Ok(Self {
            weights,
            degree: self.degree,
        })
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "({}; {})", ws.join(","), self.degree)
    }
}

/// One atom of the Kreuzer-Skarke decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Atom {
    /// `x^a`, one variable.
    Fermat { var: usize, exponent: i64 },
    /// `x1^{a1} x2 + x2^{a2} x3 + ... + xk^{ak}` on the listed variables.
    Chain {
        vars: Vec<usize>,
        exponents: Vec<i64>,
    },
    /// `x1^{a1} x2 + ... + xk^{ak} x1` on the listed variables.
    Loop {
        vars: Vec<usize>,
        exponents: Vec<i64>,
    },
}

impl Atom {
    /// Variables of the atom in order.
    pub fn vars(&self) -> Vec<usize> {
        match self {
            Atom::Fermat { var, .. } => vec![*var],
            Atom::Chain { vars, .. } | Atom::Loop { vars, .. } => vars.clone(),
        }
    }

    /// Short label such as `fermat(4)` or `chain(4,7)`.
    pub fn label(&self) -> String {
        match self {
            Atom::Fermat { exponent, .. } => format!("fermat({exponent})"),
            Atom::Chain { exponents, .. } => {
                let e: Vec<String> = exponents.iter().map(|a| a.to_string()).collect();
                format!("chain({})", e.join(","))
            }
            Atom::Loop { exponents, .. } => {
                let e: Vec<String> = exponents.iter().map(|a| a.to_string()).collect();
                format!("loop({})", e.join(","))
            }
        }
    }
}

/// Decomposes an invertible exponent matrix into Fermat/chain/loop atoms.
///
/// Every row may touch at most two variables: its *head* (the exponent >= 2,
/// or the single variable) and an optional *tail* with exponent 1. Each
/// variable heads exactly one row, and may be the tail of at most one other
/// row; following tail -> head edges yields chains (ending in a Fermat-type
/// row) and loops. A single-variable row with exponent 1 is rejected as a
/// dangling chain tail.
pub fn classify_atoms(m: &ExponentMatrix) -> Result<Vec<Atom>> {
    let n = m.dim();
    // head[v] = (row index, exponent); tail_of_row[r] = Some(v).
    let mut head: Vec<Option<(usize, i64)>> = vec![None; n];
    let mut tail_of_row: Vec<Option<usize>> = vec![None; n];
    for (r, row) in m.rows().iter().enumerate() {
        let support: Vec<usize> = (0..n).filter(|&j| row[j] != 0).collect();
        match support.as_slice() {
            [v] => {
                if row[*v] < 2 {
                    return Err(Error::NotInvertible(format!(
                        "dangling chain tail: monomial {} is linear",
                        r + 1
                    )));
                }
                if head[*v].replace((r, row[*v])).is_some() {
                    return Err(Error::NotInvertible(format!(
                        "variable x{} heads two monomials",
                        v + 1
                    )));
                }
            }
            [u, v] => {
                let (h, t) = if row[*u] >= 2 && row[*v] == 1 {
                    (*u, *v)
                } else if row[*v] >= 2 && row[*u] == 1 {
                    (*v, *u)
                } else {
                    return Err(Error::NotInvertible(format!(
                        "monomial {} is not of the form x^a*y",
                        r + 1
                    )));
                };
                if head[h].replace((r, row[h])).is_some() {
                    return Err(Error::NotInvertible(format!(
                        "variable x{} heads two monomials",
                        h + 1
                    )));
                }
                tail_of_row[r] = Some(t);
            }
            _ => {
                return Err(Error::NotInvertible(format!(
                    "monomial {} involves {} variables; invertible polynomials allow at most 2",
                    r + 1,
                    support.len()
                )));
            }
        }
    }
    for (v, h) in head.iter().enumerate() {
        if h.is_none() {
            return Err(Error::NotInvertible(format!(
                "variable x{} heads no monomial",
                v + 1
            )));
        }
    }
    // tail -> head successor map on variables.
    let mut succ: Vec<Option<usize>> = vec![None; n];
    let mut indeg = vec![0usize; n];
    for v in 0..n {
        let (r, _) = head[v].unwrap();
        if let Some(t) = tail_of_row[r] {
            succ[v] = Some(t);
            indeg[t] += 1;
            if indeg[t] > 1 {
                return Err(Error::NotInvertible(format!(
                    "variable x{} is the tail of two monomials",
                    t + 1
                )));
            }
        }
    }
    let mut seen = vec![false; n];
    let mut atoms = Vec::new();
    // Chains start at variables nobody points to.
    let mut starts: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    starts.sort();
    for s in starts {
        let mut vars = Vec::new();
        let mut exps = Vec::new();
        let mut v = s;
        loop {
            seen[v] = true;
            vars.push(v);
            exps.push(head[v].unwrap().1);
            match succ[v] {
                Some(w) => v = w,
                None => break,
            }
        }
        if vars.len() == 1 {
            atoms.push(Atom::Fermat {
                var: vars[0],
                exponent: exps[0],
            });
        } else {
            atoms.push(Atom::Chain {
                vars,
                exponents: exps,
            });
        }
    }
    // Remaining variables lie on loops.
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut vars = Vec::new();
        let mut exps = Vec::new();
        let mut v = s;
        loop {
            seen[v] = true;
            vars.push(v);
            exps.push(head[v].unwrap().1);
            let w = succ[v]
                .ok_or_else(|| Error::NotInvertible("broken cycle in atom decomposition".into()))?;
            if w == s {
                break;
            }
            v = w;
        }
        // A two-step "loop" x^a*y + y^b*x with a=b=... is still a loop; a
        // one-variable cycle would mean x^a*x which new() already rejected.
        atoms.push(Atom::Loop {
            vars,
            exponents: exps,
        });
    }
    atoms.sort_by_key(|a| a.vars()[0]);
    Ok(atoms)
}

/// How the model file names its symmetry group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDirective {
    /// `<J^2>`, the square of the grading element.
    JSquared,
    /// All symmetries with integral age sum.
    Sl,
    /// The full symmetry group.
    All,
    /// Explicit generators, components as fraction strings.
    Generators(Vec<Vec<String>>),
}

/// A parsed model file: either a single potential or a product of factors.
#[derive(Debug, Clone)]
pub enum ModelSpec {
    Single {
        name: String,
        matrix: ExponentMatrix,
        group: GroupDirective,
    },
    Product {
        name: String,
        factors: Vec<String>,
    },
}

#[derive(Deserialize)]
struct RawModel {
    name: Option<String>,
    monomials: Option<Vec<Vec<i64>>>,
    group: Option<toml::Value>,
    factors: Option<Vec<String>>,
}

/// Resolves a named group directive: `J2`, `SL` or `ALL`.
pub fn directive_from_name(s: &str) -> Result<GroupDirective> {
    match s.to_ascii_uppercase().as_str() {
        "J2" | "J^2" | "<J^2>" => Ok(GroupDirective::JSquared),
        "SL" => Ok(GroupDirective::Sl),
        "ALL" | "AUT" => Ok(GroupDirective::All),
        other => Err(Error::Parse(format!(
            "unknown group name {other:?}; expected \"J2\", \"SL\", \"ALL\", or a generator table"
        ))),
    }
}

fn parse_group(v: Option<toml::Value>) -> Result<GroupDirective> {
    match v {
        None => Ok(GroupDirective::JSquared),
        Some(toml::Value::String(s)) => directive_from_name(&s),
        Some(toml::Value::Table(t)) => {
            let gens = t
                .get("generators")
                .ok_or_else(|| Error::Parse("group table needs a `generators` key".into()))?;
            let arr = gens
                .as_array()
                .ok_or_else(|| Error::Parse("`generators` must be an array".into()))?;
            let mut out = Vec::new();
            for g in arr {
                let comps = g
                    .as_array()
                    .ok_or_else(|| Error::Parse("each generator must be an array".into()))?;
                let mut parts = Vec::new();
                for c in comps {
                    match c {
                        toml::Value::String(s) => parts.push(s.clone()),
                        toml::Value::Integer(i) => parts.push(i.to_string()),
                        _ => {
                            return Err(Error::Parse(
                                "generator components must be fraction strings".into(),
                            ))
                        }
                    }
                }
                out.push(parts);
            }
            Ok(GroupDirective::Generators(out))
        }
        Some(_) => Err(Error::Parse("unsupported `group` value".into())),
    }
}

/// Parses a TOML model description.
pub fn parse_model_str(text: &str, fallback_name: &str) -> Result<ModelSpec> {
    let raw: RawModel =
        toml::from_str(text).map_err(|e| Error::Parse(format!("model file: {e}")))?;
    let name = raw.name.unwrap_or_else(|| fallback_name.to_string());
    match (raw.monomials, raw.factors) {
        (Some(rows), None) => Ok(ModelSpec::Single {
            name,
            matrix: ExponentMatrix::new(rows)?,
            group: parse_group(raw.group)?,
        }),
        (None, Some(factors)) => {
            if raw.group.is_some() {
                return Err(Error::Parse(
                    "product models take their groups from the factors".into(),
                ));
            }
            if factors.len() < 2 {
                return Err(Error::Parse(
                    "a product model needs at least two factors".into(),
                ));
            }
            Ok(ModelSpec::Product { name, factors })
        }
        (Some(_), Some(_)) => Err(Error::Parse(
            "model file has both `monomials` and `factors`".into(),
        )),
        (None, None) => Err(Error::Parse(
            "model file needs `monomials` (single) or `factors` (product)".into(),
        )),
    }
}

/// Reads and parses a model file from disk.
pub fn parse_model_file(path: &Path) -> Result<ModelSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "model".into());
    parse_model_str(&text, &stem)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mixed() -> ExponentMatrix {
        ExponentMatrix::new(vec![vec![4, 0, 1], vec![1, 0, 7], vec![0, 6, 0]]).unwrap()
    }

    #[test]
    fn weights_of_mixed_model() {
        let ws = WeightSystem::from_matrix(&mixed()).unwrap();
        assert_eq!(ws.weights, vec![4, 3, 2]);
        assert_eq!(ws.degree, 18);
        assert!(ws.is_half_cy());
        let v = ws.suspend().unwrap();
        assert_eq!(v.weights, vec![9, 4, 3, 2]);
        assert!(v.is_cy());
    }

    #[test]
    fn weights_of_fermat_and_loop() {
        let f = ExponentMatrix::new(vec![vec![4, 0], vec![0, 4]]).unwrap();
        let ws = WeightSystem::from_matrix(&f).unwrap();
        assert_eq!((ws.weights.clone(), ws.degree), (vec![1, 1], 4));
        let l = ExponentMatrix::new(vec![vec![3, 1], vec![1, 3]]).unwrap();
        let ws = WeightSystem::from_matrix(&l).unwrap();
        assert_eq!((ws.weights.clone(), ws.degree), (vec![1, 1], 4));
    }

    #[test]
    fn atom_decomposition() {
        // x1^4 x3 + x3^7 x1 + x2^6: a 2-loop on {x1,x3} and a Fermat x2^6.
        let atoms = classify_atoms(&mixed()).unwrap();
        assert_eq!(atoms.len(), 2);
        assert_eq!(atoms[0].label(), "loop(4,7)");
        assert_eq!(atoms[0].vars(), vec![0, 2]);
        assert_eq!(atoms[1].label(), "fermat(6)");

        // Chain: x1^3 x2 + x2^5.
        let chain = ExponentMatrix::new(vec![vec![3, 1], vec![0, 5]]).unwrap();
        let atoms = classify_atoms(&chain).unwrap();
        assert_eq!(atoms.len(), 1);
        assert_eq!(atoms[0].label(), "chain(3,5)");
    }

    #[test]
    fn dangling_tail_rejected() {
        // x1^3 x2 + x2: second monomial is linear.
        let m = ExponentMatrix::new(vec![vec![3, 1], vec![0, 1]]).unwrap();
        let err = classify_atoms(&m).unwrap_err();
        assert!(matches!(err, Error::NotInvertible(_)), "{err}");
        assert!(err.to_string().contains("dangling"));
    }

    #[test]
    fn three_variable_monomial_rejected() {
        let m = ExponentMatrix::new(vec![vec![1, 1, 1], vec![0, 2, 0], vec![0, 0, 2]]).unwrap();
        assert!(classify_atoms(&m).is_err());
    }

    #[test]
    fn singular_matrix_rejected() {
        assert!(matches!(
            ExponentMatrix::new(vec![vec![2, 1], vec![4, 2]]),
            Err(Error::Singular)
        ));
    }

    #[test]
    fn restriction_keeps_supported_monomials() {
        let m = mixed();
        // Fixing {x2} keeps only x2^6.
        assert_eq!(m.restrict(&[1]), vec![vec![6]]);
        // Fixing {x1,x3} keeps the loop rows.
        assert_eq!(m.restrict(&[0, 2]), vec![vec![4, 1], vec![1, 7]]);
        // Fixing everything keeps everything.
        assert_eq!(m.restrict(&[0, 1, 2]).len(), 3);
    }

    #[test]
    fn parse_single_model() {
        let text = r#"
            name = "mixed"
            monomials = [[4,0,1],[1,0,7],[0,6,0]]
            group = "SL"
        "#;
        match parse_model_str(text, "file").unwrap() {
            ModelSpec::Single {
                name,
                matrix,
                group,
            } => {
                assert_eq!(name, "mixed");
                assert_eq!(matrix.dim(), 3);
                assert_eq!(group, GroupDirective::Sl);
            }
            _ => panic!("expected single model"),
        }
    }

    #[test]
    fn parse_generator_group_and_product() {
        let text = r#"
            monomials = [[4,0],[0,4]]
            [group]
            generators = [["1/2","1/2"], ["1/4","3/4"]]
        "#;
        match parse_model_str(text, "gens").unwrap() {
            ModelSpec::Single {
                group: GroupDirective::Generators(g),
                ..
            } => {
                assert_eq!(g.len(), 2);
                assert_eq!(g[0], vec!["1/2", "1/2"]);
            }
            _ => panic!("expected generator group"),
        }
        let prod = r#"factors = ["a.toml", "b.toml"]"#;
        match parse_model_str(prod, "p").unwrap() {
            ModelSpec::Product { factors, .. } => assert_eq!(factors.len(), 2),
            _ => panic!("expected product"),
        }
    }

    #[test]
    fn display_formats_monomials() {
        assert_eq!(mixed().display(), "x1^4*x3 + x1*x3^7 + x2^6");
    }
}
