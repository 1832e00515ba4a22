//! Exact workbench for bigraded Landau–Ginzburg state spaces of invertible
//! potentials with their diagonal symmetry groups.
//!
//! The pipeline: an invertible potential gets a weight system and an atom
//! decomposition ([`polyspec`]); its diagonal symmetries, duals and pairing
//! live in [`symmetry`]; restricted Milnor rings are computed exactly in
//! [`jacobi`]; sector-by-sector state spaces and their four-piece split
//! across the suspension in [`statespace`]; mirror identities in
//! [`mirror`]; an independent geometric recomputation together with
//! branch-locus and K3 reports in [`geometry`]; products in [`product`].
//! All arithmetic is exact — machine rationals for gradings, big integers
//! inside eliminations — so every reported Hodge number is a certificate,
//! not an approximation.
//!
//! Models are described by square exponent matrices (rows are monomials)
//! plus a group: the square of the grading element, the integral-age
//! subgroup, the full symmetry group, or explicit generators. See the
//! `examples/` directory for end-to-end walkthroughs and `corpus/` for
//! frozen reference models.

pub mod cli;
pub mod diamond;
pub mod error;
pub mod geometry;
pub mod jacobi;
pub mod matrix;
pub mod mirror;
pub mod model;
pub mod polyspec;
pub mod product;
pub mod rational;
pub mod statespace;
pub mod symmetry;
pub mod table;

pub use error::{Error, Result};
pub use geometry::{geometric_sectors, k3_report, GeometricSector, K3Report};
pub use jacobi::{milnor_number, poincare_dims, JacobiEngine, JacobiRing};
pub use mirror::{semi_cy_report, IdentityCheck, SemiCyReport};
pub use model::{ModelContext, SuspensionData};
pub use polyspec::{classify_atoms, ExponentMatrix, ModelSpec, WeightSystem};
pub use product::{product_diamond, product_report, ProductReport};
pub use rational::Rat;
pub use statespace::{build_state_space, fjr_state_space, four_piece_split, FourPieces};
pub use symmetry::{aut_group, dual_group, standard_dual, DiagonalSymmetry, SymmetryGroup};
pub use table::{BigradedTable, TableEntry};
