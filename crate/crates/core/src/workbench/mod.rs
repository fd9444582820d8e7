//! Group catalogs, the cycle-notation parser, condition search and per-group
//! analysis reports.

mod analyze;
mod builtins;
mod catalog;
mod cycle;
mod search;

pub use analyze::{analyze_group, run_analyze, AnalysisReport, AnalyzeOptions, ClassSummary, TableDigest};
pub use builtins::{all_builtin_entries, builtin_examples, find_builtin, simple_catalog, standard_groups};
pub use catalog::{load_catalog, parse_catalog, ActionSpec, CatalogEntry, Construction, Expected};
pub use cycle::parse_cycle_notation;
pub use search::{analyze_all, hit_entries, search_condition, Condition, SearchFilter, SearchHit};

use thiserror::Error;

use crate::chartab::CharTableError;
use crate::classes::ClassError;
use crate::group::GroupError;
use crate::theorems::TheoremError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorkbenchError {
    #[error("malformed cycle notation {input:?}: {reason}")]
    MalformedCycle { input: String, reason: String },
    #[error("point {point} exceeds degree {degree}")]
    PointExceedsDegree { point: usize, degree: usize },
    #[error("catalog parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate catalog name {0:?}")]
    DuplicateName(String),
    #[error("entry {name:?} does not construct: {reason}")]
    ConstructionInvalid { name: String, reason: String },
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("unknown condition {0:?}")]
    UnknownCondition(String),
    #[error("entry {name:?}: {message}")]
    InEntry { name: String, message: String },
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    CharTable(#[from] CharTableError),
    #[error(transparent)]
    Theorem(#[from] TheoremError),
}

/// Resolves `name` against the built-in catalogs, or `path#name` against a
/// catalog file.
pub fn resolve_group(spec: &str) -> Result<CatalogEntry, WorkbenchError> {
    if let Some(entry) = find_builtin(spec) {
        return Ok(entry);
    }
    if let Some((path, name)) = spec.rsplit_once('#') {
        if std::path::Path::new(path).is_file() {
            return load_catalog(path)?
                .into_iter()
                .find(|e| e.matches(name))
                .ok_or_else(|| WorkbenchError::UnknownGroup(spec.to_string()));
        }
    }
    Err(WorkbenchError::UnknownGroup(spec.to_string()))
}
