//! Conjugacy classes, class sums and their products.
//!
//! A product of class sums `Ĉᵢ·Ĉⱼ = Σₖ aᵢⱼₖ Ĉₖ` is stored as the coefficient
//! vector `(aᵢⱼₖ)ₖ`; everything here is exact integer counting.

mod partition;
mod pattern;
mod product;

pub use partition::{conjugacy_classes, ClassPartition};
pub use pattern::{kkinv_pattern, KKInvPattern, PatternTag};
pub use product::{
    eta, kk_inverse, product_multiset, structure_constants, ClassProductMultiset,
    InvariantSet, StructureConstants,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("class index {index} out of range ({classes} classes)")]
    IndexOutOfRange { index: usize, classes: usize },
    #[error("element set is not invariant under conjugation")]
    NotInvariantSet,
    #[error("the identity class has no KK⁻¹ pattern")]
    IdentityClass,
    #[error(transparent)]
    Group(#[from] crate::group::GroupError),
}
