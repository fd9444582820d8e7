use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::classes::{KKInvPattern, PatternTag};
use crate::group::DEFAULT_ORDER_CAP;

use super::analyze::{analyze_group, AnalysisReport, AnalyzeOptions, ClassSummary};
use super::catalog::CatalogEntry;
use super::WorkbenchError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `KK⁻¹ = 1 ∪ D`, `D` real.
    OneD,
    /// `KK⁻¹ = 1 ∪ D ∪ D⁻¹`, `D` non-real.
    OneDDinv,
    /// `KK⁻¹ = 1 ∪ K ∪ K⁻¹`, `K` non-real.
    OneKKinvNonreal,
    /// `KK⁻¹` meets at most three classes.
    EtaLe3,
}

impl Condition {
    pub const ALL: [Condition; 4] = [
        Condition::OneD,
        Condition::OneDDinv,
        Condition::OneKKinvNonreal,
        Condition::EtaLe3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Condition::OneD => "one_d",
            Condition::OneDDinv => "one_d_dinv",
            Condition::OneKKinvNonreal => "one_k_kinv_nonreal",
            Condition::EtaLe3 => "eta_le_3",
        }
    }

    pub fn matches(self, class: &ClassSummary) -> bool {
        let Some(pattern) = &class.pattern else {
            return false;
        };
        match self {
            Condition::OneD => pattern.tag == PatternTag::OneD,
            Condition::OneDDinv => pattern.tag == PatternTag::OneDDinv,
            Condition::OneKKinvNonreal => pattern.tag == PatternTag::OneKKinv,
            Condition::EtaLe3 => class.eta_kkinv.is_some_and(|e| e <= 3),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Condition {
    type Err = WorkbenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Condition::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| WorkbenchError::UnknownCondition(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchFilter {
    pub orders: RangeInclusive<usize>,
    pub analyze: AnalyzeOptions,
}

impl Default for SearchFilter {
    fn default() -> Self {
        SearchFilter {
            orders: 1..=DEFAULT_ORDER_CAP,
            analyze: AnalyzeOptions::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchHit {
    pub entry: String,
    pub class: usize,
    pub class_size: usize,
    pub pattern: KKInvPattern,
    #[serde(skip)]
    pub report: Arc<AnalysisReport>,
}

/// Hits in catalog order, then class index. Entries outside the order range
/// are neither built past their order check nor analyzed.
pub fn search_condition(
    entries: &[CatalogEntry],
    condition: Condition,
    filter: &SearchFilter,
) -> Result<Vec<SearchHit>, WorkbenchError> {
    let per_entry: Vec<Result<Vec<SearchHit>, WorkbenchError>> = entries
        .par_iter()
        .map(|entry| {
            let cap = *filter.orders.end();
            let g = match entry.build_with_cap(cap) {
                Ok(g) => g,
                Err(WorkbenchError::ConstructionInvalid { reason, .. })
                    if reason.contains("exceeds the cap") =>
                {
                    return Ok(Vec::new())
                }
                Err(e) => return Err(e),
            };
            if !filter.orders.contains(&g.order()) {
                return Ok(Vec::new());
            }
            let report = analyze_group(&entry.name, entry.id.clone(), &g, entry.expected.as_ref(), &filter.analyze)
                .map_err(|e| WorkbenchError::InEntry {
                    name: entry.name.clone(),
                    message: e.to_string(),
                })?;
            let report = Arc::new(report);
            Ok(report
                .classes
                .iter()
                .filter(|c| condition.matches(c))
                .map(|c| SearchHit {
                    entry: entry.name.clone(),
                    class: c.index,
                    class_size: c.size,
                    pattern: c.pattern.clone().expect("matched classes have patterns"),
                    report: Arc::clone(&report),
                })
                .collect())
        })
        .collect();
    let mut hits = Vec::new();
    for r in per_entry {
        hits.extend(r?);
    }
    Ok(hits)
}

/// Analyzes every entry, one per worker, results in catalog order.
pub fn analyze_all(
    entries: &[CatalogEntry],
    options: &AnalyzeOptions,
) -> Result<Vec<AnalysisReport>, WorkbenchError> {
    entries
        .par_iter()
        .map(|entry| {
            let g = entry.build()?;
            analyze_group(&entry.name, entry.id.clone(), &g, entry.expected.as_ref(), options).map_err(|e| {
                WorkbenchError::InEntry {
                    name: entry.name.clone(),
                    message: e.to_string(),
                }
            })
        })
        .collect()
}

/// Entry names with at least one hit, in hit order.
pub fn hit_entries(hits: &[SearchHit]) -> Vec<&str> {
    let mut names: Vec<&str> = hits.iter().map(|h| h.entry.as_str()).collect();
    names.dedup();
    names
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workbench::builtins::{builtin_examples, find_builtin};

    fn class_only() -> SearchFilter {
        SearchFilter {
            analyze: AnalyzeOptions::class_algebra_only(),
            ..SearchFilter::default()
        }
    }

    #[test]
    fn one_d_over_builtins() {
        let hits = search_condition(&builtin_examples(), Condition::OneD, &class_only()).unwrap();
        assert_eq!(hit_entries(&hits), vec!["Ex5.2", "Ex5.3", "Ex5.4", "Ex5.5"]);
        assert!(hits.windows(2).all(|w| w[0].entry != w[1].entry || w[0].class < w[1].class));
    }

    #[test]
    fn abelian_has_no_one_d() {
        let z6 = vec![find_builtin("Z6").unwrap()];
        assert!(search_condition(&z6, Condition::OneD, &class_only()).unwrap().is_empty());
        // every class of an abelian group has KK⁻¹ = 1
        assert_eq!(search_condition(&z6, Condition::EtaLe3, &class_only()).unwrap().len(), 5);
    }

    #[test]
    fn order_filter_skips_entries() {
        let filter = SearchFilter {
            orders: 1..=100,
            ..class_only()
        };
        let hits = search_condition(&builtin_examples(), Condition::OneKKinvNonreal, &filter).unwrap();
        assert_eq!(hit_entries(&hits), vec!["Ex5.1", "Ex5.6"]);
    }

    #[test]
    fn condition_names() {
        for c in Condition::ALL {
            assert_eq!(c.as_str().parse::<Condition>().unwrap(), c);
        }
        assert!("one_e".parse::<Condition>().is_err());
    }
}
