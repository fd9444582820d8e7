//! Searches groups for classes with `KK⁻¹ = 1 ∪ D ∪ D⁻¹`.

use rayon::prelude::*;
use serde::Serialize;

use super::TheoremError;
use crate::classes::{conjugacy_classes, kkinv_pattern, PatternTag};
use crate::group::{is_simple, GroupTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremAHit {
    pub class: usize,
    pub class_size: usize,
    pub tag: PatternTag,
    pub d_index: Option<usize>,
    pub d_size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremAScan {
    pub name: String,
    pub order: usize,
    pub nonabelian_simple: bool,
    /// Non-central classes `K` with `KK⁻¹ = 1 ∪ D ∪ D⁻¹` for a single class `D`,
    /// including `D ∈ {K, K⁻¹}`.
    pub hits: Vec<TheoremAHit>,
}

impl TheoremAScan {
    pub fn holds(&self) -> bool {
        !(self.nonabelian_simple && !self.hits.is_empty())
    }

    pub fn hits_with(&self, tag: PatternTag) -> impl Iterator<Item = &TheoremAHit> {
        self.hits.iter().filter(move |h| h.tag == tag)
    }
}

fn scan_one(name: &str, g: &GroupTable) -> Result<TheoremAScan, TheoremError> {
    let p = conjugacy_classes(g);
    let mut hits = Vec::new();
    for k in 1..p.len() {
        let pattern = kkinv_pattern(g, &p, k)?;
        if pattern.tag == PatternTag::TrivialOnly || !pattern.is_single_class_pair() {
            continue;
        }
        hits.push(TheoremAHit {
            class: k,
            class_size: p.size(k),
            tag: pattern.tag,
            d_index: pattern.d_index,
            d_size: pattern.d_index.map(|d| p.size(d)),
        });
    }
    let nonabelian_simple = g.order() > 1 && is_simple(g)?.is_nonabelian_simple();
    Ok(TheoremAScan {
        name: name.to_string(),
        order: g.order(),
        nonabelian_simple,
        hits,
    })
}

/// Scans every group in parallel; results come back sorted by name.
pub fn theorem_a_scan(groups: &[(String, GroupTable)]) -> Result<Vec<TheoremAScan>, TheoremError> {
    let mut out = groups
        .par_iter()
        .map(|(name, g)| scan_one(name, g))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}
