//! Finite groups as dense multiplication tables, plus the subgroup machinery
//! the class-product analyzers need.

mod permutation;
mod subgroup;
mod table;

pub use permutation::Permutation;
pub use subgroup::{
    abelian_invariants, commutator_set, derived_series, element_set, is_abelian, is_cyclic,
    is_elementary_abelian, is_generalized_quaternion, is_normal, is_simple, normal_closure,
    quotient_group, subgroup_closure, subgroup_table, AbelianInvariants, DerivedSeries,
    ElementSet, ElementaryAbelian, Simplicity,
};
pub use table::{
    construct_cyclic, construct_direct_product, construct_semidirect_product,
    extend_to_homomorphism, from_permutation_generators, GroupTable,
};

use thiserror::Error;

/// Largest group order any constructor will enumerate unless told otherwise.
pub const DEFAULT_ORDER_CAP: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("no generators given")]
    EmptyGenerators,
    #[error("generator degrees differ: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group order exceeds the cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("image list is not a bijection")]
    NotAPermutation,
    #[error("action image for generator {generator} is not an automorphism")]
    NotAnAutomorphism { generator: usize },
    #[error("action does not extend to a homomorphism of the acting group")]
    ActionInconsistentWithRelations,
    #[error("generator images do not define a homomorphism")]
    NotAHomomorphism,
    #[error("elements do not generate the group")]
    DoesNotGenerate,
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("element set is not a subgroup")]
    NotClosed,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("operation undefined on the trivial group")]
    TrivialGroup,
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("word has {found} exponents but the group has {expected} generators")]
    WordLength { expected: usize, found: usize },
}
