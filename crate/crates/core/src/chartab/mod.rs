//! Irreducible character tables and exact cyclotomic arithmetic.

mod cyclotomic;
mod dixon;
mod export;
mod integral;
mod modp;
mod table;

pub use cyclotomic::{cyclotomic_polynomial, totient, Cyclotomic, CyclotomicError};
pub use export::TableExport;
pub use table::{
    dixon_character_table, dixon_character_table_with_cap, CharacterTable, CHARTAB_ORDER_CAP,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharTableError {
    #[error("group order {order} exceeds the character table cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("eigenspace splitting failed: {0}")]
    EigenSplitFailure(String),
    #[error("class function has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("index {index} out of range ({len} rows)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("expected a non-negative integer, got {0}")]
    NonIntegerResult(String),
    #[error("orthogonality violated: {0}")]
    Orthogonality(String),
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
}
