//! Finite groups acting on algebras, character projections, and the corpus
//! of worked examples.

pub mod a4;
mod action;
pub mod corpus;
mod group;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::condensation::CondensationError;
use crate::field::FieldError;
use crate::linalg::LinalgError;
use crate::semiring::SemiringError;
use crate::tower::TowerError;

pub use action::{
    conjugation_action, fixed_space, fixed_space_of, isotypic_components, multiplicity_free_atoms,
    one_sided_ideal_check, trivial_multiplicity, ActionOnAlgebra, CharacterRow, IsotypicDecomposition,
};
pub use group::{
    group_from_permutations, group_from_permutations_capped, permutation_on_basis, FiniteGroup, DEFAULT_SIZE_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReptoolsError {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group closure exceeded {0} elements")]
    SizeCapExceeded(usize),
    #[error("not a G-algebra action: {0}")]
    NotAnAction(String),
    #[error("field too small for {0}")]
    FieldTooSmall(String),
    #[error("character has {found} values, expected one per group element ({expected})")]
    CharacterLength { expected: usize, found: usize },
    #[error("isotypic component {name} has dimension {dim}, not the degree {degree}; supply atoms explicitly")]
    NotMultiplicityFree { name: String, dim: usize, degree: usize },
    #[error("unknown corpus item {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Semiring(#[from] SemiringError),
    #[error(transparent)]
    Condensation(#[from] CondensationError),
    #[error(transparent)]
    Tower(#[from] TowerError),
}
