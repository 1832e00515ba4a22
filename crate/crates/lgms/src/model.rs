//! Resolved models: a validated potential, its symmetry group, and the
//! suspension-side data (groups, grading elements, Jacobi engines) that the
//! state-space and mirror computations consume.

use crate::error::{Error, Result};
use crate::jacobi::JacobiEngine;
use crate::polyspec::{ExponentMatrix, GroupDirective, ModelSpec, WeightSystem};
use crate::rational::{rat0, ratio};
use crate::statespace::{four_piece_split, FourPieces};
use crate::symmetry::{aut_group, is_symmetry, DiagonalSymmetry, SymmetryGroup};

/// Suspension-side data of a half-Calabi-Yau model.
pub struct SuspensionData {
    /// Exponent matrix of `x0^2 + W`.
    pub matrix: ExponentMatrix,
    /// Weight system `(d/2, w; d)`.
    pub weights: WeightSystem,
    /// `G` acting on the suspension's variables (trivially on `x0`).
    pub group: SymmetryGroup,
    /// The deck involution `x0 -> -x0`.
    pub sigma: DiagonalSymmetry,
    /// The original grading element, extended by zero.
    pub j_w: DiagonalSymmetry,
    /// The suspension's grading element `sigma + J_W`.
    pub j_v: DiagonalSymmetry,
    /// Jacobi engine of the suspension.
    pub engine: JacobiEngine,
}

impl SuspensionData {
    /// Sector group `S = G[sigma, J_W]`.
    pub fn sector_group(&self, cap: usize) -> Result<SymmetryGroup> {
        self.group
            .adjoin(&[self.sigma.clone(), self.j_w.clone()], cap)
    }

    /// Invariance group `K = G[J_V]`.
    pub fn invariance_group(&self, cap: usize) -> Result<SymmetryGroup> {
        self.group.adjoin(std::slice::from_ref(&self.j_v), cap)
    }
}

/// A fully resolved single-potential model.
pub struct ModelContext {
    pub name: String,
    pub matrix: ExponentMatrix,
    pub weights: WeightSystem,
    pub group: SymmetryGroup,
    pub engine: JacobiEngine,
    pub cap: usize,
    suspension: Option<SuspensionData>,
}

/// Resolves a group directive against a potential.
pub fn resolve_group(
    matrix: &ExponentMatrix,
    weights: &WeightSystem,
    directive: &GroupDirective,
    cap: usize,
) -> Result<SymmetryGroup> {
    let n = matrix.dim();
    match directive {
        GroupDirective::JSquared => {
            let j2 = weights.grading_element().pow(2);
            SymmetryGroup::from_generators(n, &[j2], cap)
        }
        GroupDirective::Sl => Ok(aut_group(matrix.rows(), cap)?.sl_subgroup()),
        GroupDirective::All => aut_group(matrix.rows(), cap),
        GroupDirective::Generators(gens) => {
            let gens = gens
                .iter()
                .map(|parts| DiagonalSymmetry::parse(parts))
                .collect::<Result<Vec<_>>>()?;
            for g in &gens {
                if !is_symmetry(matrix.rows(), g) {
                    return Err(Error::Precondition(format!(
                        "generator ({}) is not a symmetry of the potential",
                        g.to_strings().join(", ")
                    )));
                }
            }
            SymmetryGroup::from_generators(n, &gens, cap)
        }
    }
}

impl ModelContext {
    /// Builds a context from raw parts; `group` must consist of symmetries.
    pub fn from_parts(
        name: String,
        matrix: ExponentMatrix,
        group: SymmetryGroup,
        cap: usize,
    ) -> Result<Self> {
        let weights = WeightSystem::from_matrix(&matrix)?;
        for g in group.generators() {
            if !is_symmetry(matrix.rows(), &g) {
                return Err(Error::Precondition(format!(
                    "group element ({}) is not a symmetry of the potential",
                    g.to_strings().join(", ")
                )));
            }
        }
        let engine = JacobiEngine::new(matrix.clone(), weights.clone());
        let suspension = if weights.is_half_cy() {
            let mv = matrix.suspend();
            let wv = weights.suspend()?;
            let gens_v: Vec<DiagonalSymmetry> = group
                .small_generators()
                .iter()
                .map(|g| g.extend_front(1))
                .collect();
            let group_v = SymmetryGroup::from_generators(matrix.dim() + 1, &gens_v, cap)?;
            let j_v = wv.grading_element();
            let sigma = {
                let mut comps = vec![rat0(); matrix.dim() + 1];
                comps[0] = ratio(1, 2);
                DiagonalSymmetry::new(comps)
            };
            let j_w = j_v.sub(&sigma);
            let engine_v = JacobiEngine::new(mv.clone(), wv.clone());
            Some(SuspensionData {
                matrix: mv,
                weights: wv,
                group: group_v,
                sigma,
                j_w,
                j_v,
                engine: engine_v,
            })
        } else {
            None
        };
        Ok(Self {
            name,
            matrix,
            weights,
            group,
            engine,
            cap,
            suspension,
        })
    }

    /// Builds a context from a parsed single-potential model.
    pub fn from_spec(spec: &ModelSpec, cap: usize) -> Result<Self> {
        match spec {
            ModelSpec::Single {
                name,
                matrix,
                group,
            } => {
                let weights = WeightSystem::from_matrix(matrix)?;
                let g = resolve_group(matrix, &weights, group, cap)?;
                Self::from_parts(name.clone(), matrix.clone(), g, cap)
            }
            ModelSpec::Product { .. } => Err(Error::Precondition(
                "product models have no single-potential context; expand the factors".into(),
            )),
        }
    }

    /// Number of variables of the original potential.
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Grading element `J` of the original potential.
    pub fn grading_element(&self) -> DiagonalSymmetry {
        self.weights.grading_element()
    }

    /// Whether every group element has integral age.
    pub fn group_in_sl(&self) -> bool {
        self.group.iter().all(|g| g.age().is_integer())
    }

    /// Admissibility violations for the half-CY constructions (empty when
    /// the model is admissible).
    pub fn admissibility_notes(&self) -> Vec<String> {
        let mut notes = Vec::new();
        if !self.weights.is_half_cy() {
            notes.push(format!(
                "weights {} are not half-Calabi-Yau (2 sum(w) != d)",
                self.weights
            ));
        }
        let j = self.grading_element();
        if !self.group.contains(&j.pow(2)) {
            notes.push("G does not contain J^2".into());
        }
        if self.group.contains(&j) {
            notes.push("G contains the grading element J".into());
        }
        if !self.group_in_sl() {
            notes.push("G is not contained in SL".into());
        }
        notes
    }

    /// True when all half-CY admissibility conditions hold.
    pub fn is_admissible(&self) -> bool {
        self.admissibility_notes().is_empty()
    }

    /// Suspension-side data; errors for non-half-CY weights.
    pub fn suspension(&self) -> Result<&SuspensionData> {
        self.suspension.as_ref().ok_or_else(|| {
            Error::Precondition(format!(
                "model {} is not half-Calabi-Yau; the suspension is undefined",
                self.name
            ))
        })
    }

    /// The four coset pieces of the suspended state space.
    pub fn four_pieces(&self) -> Result<FourPieces> {
        let sus = self.suspension()?;
        four_piece_split(&sus.matrix, &sus.weights, &sus.group, &sus.engine, self.cap)
    }

    /// The transposed model with the dual group, sharing the cap.
    pub fn star(&self) -> Result<ModelContext> {
        let mt = self.matrix.transpose();
        let dual = crate::symmetry::dual_group(self.matrix.rows(), &self.group, self.cap)?;
        ModelContext::from_parts(format!("{}*", self.name), mt, dual, self.cap)
    }
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
    fn mixed_model_context() {
        let c = ctx("monomials = [[4,0,1],[1,0,7],[0,6,0]]\ngroup = \"J2\"");
        assert_eq!(c.weights.weights, vec![4, 3, 2]);
        assert_eq!(c.weights.degree, 18);
        assert_eq!(c.group.order(), 9); // J has order 18, J^2 order 9
        assert!(c.is_admissible());
        let sus = c.suspension().unwrap();
        assert_eq!(sus.weights.weights, vec![9, 4, 3, 2]);
        assert_eq!(sus.group.order(), 9);
        assert_eq!(sus.sector_group(DEFAULT_CAP).unwrap().order(), 36);
        assert_eq!(sus.invariance_group(DEFAULT_CAP).unwrap().order(), 18);
    }

    #[test]
    fn sl_group_resolution() {
        let c = ctx("monomials = [[4,0,1],[1,0,7],[0,6,0]]\ngroup = \"SL\"");
        // |SL| = |Aut| * gcd stuff: here SL = <J^2> exactly (order 9).
        assert_eq!(c.group.order(), 9);
        assert!(c.is_admissible());
    }

    #[test]
    fn full_group_is_inadmissible() {
        let c = ctx("monomials = [[4,0],[0,4]]\ngroup = \"ALL\"");
        assert_eq!(c.group.order(), 16);
        assert!(!c.is_admissible());
        let notes = c.admissibility_notes();
        assert!(notes.iter().any(|n| n.contains("grading element")));
        assert!(notes.iter().any(|n| n.contains("SL")));
    }

    #[test]
    fn non_half_cy_has_no_suspension() {
        // x^3 + y^3: weights (1,1;3), 2*2 != 3.
        let c = ctx("monomials = [[3,0],[0,3]]\ngroup = \"J2\"");
        assert!(c.suspension().is_err());
        assert!(!c.is_admissible());
    }

    #[test]
    fn star_of_j2_is_sl_transposed() {
        let c = ctx("monomials = [[4,0,1],[1,0,7],[0,6,0]]\ngroup = \"J2\"");
        let star = c.star().unwrap();
        assert_eq!(star.matrix.rows()[0], vec![4, 1, 0]);
        let sl_t = aut_group(star.matrix.rows(), DEFAULT_CAP)
            .unwrap()
            .sl_subgroup();
        assert!(star.group.same_elements(&sl_t));
        // Double star returns to G.
        let back = star.star().unwrap();
        assert!(back.group.same_elements(&c.group));
    }

    #[test]
    fn bad_generator_rejected() {
        let spec = parse_model_str(
            "monomials = [[4,0],[0,4]]\n[group]\ngenerators = [[\"1/3\",\"0\"]]",
            "t",
        )
        .unwrap();
        assert!(matches!(
            ModelContext::from_spec(&spec, DEFAULT_CAP),
            Err(Error::Precondition(_))
        ));
    }
}
