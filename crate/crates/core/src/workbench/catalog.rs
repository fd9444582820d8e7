use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::classes::PatternTag;
use crate::group::{
    construct_cyclic, construct_direct_product, construct_semidirect_product,
    extend_to_homomorphism, from_permutation_generators, GroupError, GroupTable,
    DEFAULT_ORDER_CAP,
};

use super::cycle::parse_cycle_notation;
use super::WorkbenchError;

/// How a catalog group is built. Sub-constructions nest with the same tags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    /// Closure of permutations in 1-based cycle notation.
    PermGens {
        generators: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<usize>,
    },
    Cyclic { n: usize },
    /// Left-nested product of two or more factors; generators concatenate.
    Direct { factors: Vec<Construction> },
    /// `N ⋊ H`, the action written in exponent form `x^h`.
    Semidirect {
        normal: Box<Construction>,
        acting: Box<Construction>,
        action: Vec<ActionSpec>,
    },
}

/// One acting element `h` (an exponent word in the generators of `H`) with
/// `x^h` for every generator `x` of `N`, each as an exponent word in the
/// generators of `N`. `c^a = c^10` is `{"acting": [1], "images": [[10]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    pub acting: Vec<usize>,
    pub images: Vec<Vec<usize>>,
}

/// Golden facts checked on every analysis.
///
/// Class-level facts refer to `K = x^G` with `x` given by `k_word` (exponents
/// over the group's generators) and, where the pattern does not pin it down,
/// `D` given by `d_word`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Expected {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_sizes: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_word: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_word: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<PatternTag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta_kkinv: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_closure_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_closure_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_invariants: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_invariants: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_derived_length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_elementary_abelian: Option<bool>,
    /// Number of involutions in `⟨D⟩`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_involutions: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_d_p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_d_n: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    /// Small-group identifier such as `110#1`, taken from the literature and
    /// not recomputed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(flatten)]
    pub construction: Construction,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

impl CatalogEntry {
    pub fn new(name: &str, construction: Construction) -> Self {
        CatalogEntry {
            name: name.to_string(),
            id: None,
            construction,
            expected: None,
        }
    }

    pub fn with_id(mut self, id: &str) -> Self {
        self.id = Some(id.to_string());
        self
    }

    pub fn with_expected(mut self, expected: Expected) -> Self {
        self.expected = Some(expected);
        self
    }

    pub fn matches(&self, name: &str) -> bool {
        self.name == name || self.id.as_deref() == Some(name)
    }

    pub fn build(&self) -> Result<GroupTable, WorkbenchError> {
        self.build_with_cap(DEFAULT_ORDER_CAP)
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<GroupTable, WorkbenchError> {
        self.construction
            .build(cap)
            .map_err(|reason| WorkbenchError::ConstructionInvalid {
                name: self.name.clone(),
                reason,
            })
    }
}

impl Construction {
    pub fn perm_gens(generators: &[&str]) -> Self {
        Construction::PermGens {
            generators: generators.iter().map(|s| s.to_string()).collect(),
            degree: None,
        }
    }

    pub fn semidirect(normal: Construction, acting: Construction, action: Vec<ActionSpec>) -> Self {
        Construction::Semidirect {
            normal: Box::new(normal),
            acting: Box::new(acting),
            action,
        }
    }

    pub fn build(&self, cap: usize) -> Result<GroupTable, String> {
        let ge = |e: GroupError| e.to_string();
        match self {
            Construction::PermGens { generators, degree } => {
                let mut perms = Vec::with_capacity(generators.len());
                for s in generators {
                    perms.push(parse_cycle_notation(s, *degree).map_err(|e| e.to_string())?);
                }
                let top = perms.iter().map(|p| p.degree()).max().unwrap_or(1);
                if degree.is_none() {
                    perms = generators
                        .iter()
                        .map(|s| parse_cycle_notation(s, Some(top)))
                        .collect::<Result<_, _>>()
                        .map_err(|e| e.to_string())?;
                }
                from_permutation_generators(&perms, cap).map_err(ge)
            }
            Construction::Cyclic { n } => construct_cyclic(*n, cap).map_err(ge),
            Construction::Direct { factors } => {
                let (first, rest) = factors
                    .split_first()
                    .ok_or_else(|| "direct product needs at least one factor".to_string())?;
                let mut g = first.build(cap)?;
                for f in rest {
                    g = construct_direct_product(&g, &f.build(cap)?, cap).map_err(ge)?;
                }
                Ok(g)
            }
            Construction::Semidirect {
                normal,
                acting,
                action,
            } => {
                let n = normal.build(cap)?;
                let h = acting.build(cap)?;
                let mut pairs = Vec::with_capacity(action.len());
                for (pos, spec) in action.iter().enumerate() {
                    let he = h.word(&spec.acting).map_err(ge)?;
                    if spec.images.len() != n.generators().len() {
                        return Err(format!(
                            "action {pos} gives {} images for {} generators of the normal factor",
                            spec.images.len(),
                            n.generators().len()
                        ));
                    }
                    let images = spec
                        .images
                        .iter()
                        .map(|w| n.word(w))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(ge)?;
                    let up = extend_to_homomorphism(&n, n.generators(), &images, &n)
                        .map_err(|e| format!("action {pos}: {e}"))?;
                    // α_h(x) = h x h⁻¹ is the inverse of x ↦ x^h
                    let mut alpha = vec![usize::MAX; n.order()];
                    for (x, &y) in up.iter().enumerate() {
                        if alpha[y] != usize::MAX {
                            return Err(format!("action {pos} is not bijective"));
                        }
                        alpha[y] = x;
                    }
                    pairs.push((he, alpha));
                }
                construct_semidirect_product(&n, &h, &pairs, cap).map_err(ge)
            }
        }
    }
}

/// Parses catalog JSON and validates every entry.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, WorkbenchError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let entries: Vec<CatalogEntry> =
        serde_json::from_str(text).map_err(|e| WorkbenchError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
    let mut names = HashSet::new();
    for entry in &entries {
        if !names.insert(entry.name.as_str()) {
            return Err(WorkbenchError::DuplicateName(entry.name.clone()));
        }
    }
    for entry in &entries {
        entry.build()?;
    }
    Ok(entries)
}

pub fn load_catalog(path: impl AsRef<Path>) -> Result<Vec<CatalogEntry>, WorkbenchError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| WorkbenchError::Io(format!("{}: {e}", path.display())))?;
    parse_catalog(&text)
}
