//! Structure of `⟨K⟩` when `KK⁻¹ = 1 ∪ D` with `D` real.

use serde::Serialize;

use super::TheoremError;
use crate::classes::{kkinv_pattern, ClassPartition, KKInvPattern, PatternTag};
use crate::group::{
    abelian_invariants, commutator_set, derived_series, element_set, is_abelian,
    is_elementary_abelian, quotient_group, subgroup_closure, subgroup_table, AbelianInvariants,
    ElementSet, GroupTable,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremCCase {
    /// `|D| = |K| - 1`
    DeqKminus1,
    /// `|D| = |K|`
    DeqK,
    /// `|D| = |K|(|K| - 1)`
    DeqKKminus1,
    OtherDivisor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCReport {
    pub k: usize,
    pub d: usize,
    pub k_size: usize,
    pub d_size: usize,
    pub m: u64,
    /// `|K|² = |K| + m|D|`
    pub counting_identity: bool,
    pub divisibility_ok: bool,
    pub k_closure_order: usize,
    pub d_closure_order: usize,
    pub quotient_order: usize,
    pub quotient_cyclic: bool,
    /// All matching cases; `|K| = 2` matches both the first and the third.
    pub cases: Vec<TheoremCCase>,
    /// `(p, n)` when `⟨D⟩` is elementary abelian of order `pⁿ`.
    pub d_closure_elementary: Option<(usize, u32)>,
    /// `⟨D⟩ = 1 ∪ D` as sets.
    pub d_closure_is_one_union_d: bool,
    pub k_closure_abelian: bool,
    /// `None` when the derived series of `⟨K⟩` stalls above `1`.
    pub k_derived_length: Option<usize>,
    pub k_invariants: Option<Vec<usize>>,
    pub d_invariants: Option<Vec<usize>>,
    pub lemma_2_8: Lemma28Report,
    /// Case verdicts that failed; empty on every group the theorem covers.
    pub violations: Vec<String>,
}

impl TheoremCReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_metabelian(&self) -> bool {
        self.k_derived_length.is_some_and(|l| l <= 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma28Report {
    pub commutator_order: usize,
    pub d_closure_order: usize,
    pub k_closure_order: usize,
    /// `⟨D⟩ = [x, G]`
    pub d_equals_commutator: bool,
    /// `⟨K⟩ = ⟨x⟩[x, G]`
    pub k_equals_product: bool,
}

impl Lemma28Report {
    pub fn holds(&self) -> bool {
        self.d_equals_commutator && self.k_equals_product
    }
}

fn require_one_d(
    g: &GroupTable,
    p: &ClassPartition,
    k: usize,
) -> Result<(KKInvPattern, usize), TheoremError> {
    if k == 0 {
        return Err(TheoremError::IdentityClass);
    }
    let pattern = kkinv_pattern(g, p, k)?;
    match (pattern.tag, pattern.d_index) {
        (PatternTag::OneD, Some(d)) => Ok((pattern, d)),
        (tag, _) => Err(TheoremError::PatternMismatch {
            class: k,
            expected: "OneD",
            found: tag,
        }),
    }
}

fn closure_of_class(g: &GroupTable, p: &ClassPartition, c: usize) -> Result<ElementSet, TheoremError> {
    Ok(subgroup_closure(g, &element_set(g, p.class(c))?)?)
}

fn lemma_2_8_with(
    g: &GroupTable,
    p: &ClassPartition,
    k: usize,
    d: usize,
) -> Result<(Lemma28Report, ElementSet, ElementSet), TheoremError> {
    let x = p.representative(k);
    let commutators = commutator_set(g, x)?;
    let d_closure = closure_of_class(g, p, d)?;
    let k_closure = closure_of_class(g, p, k)?;
    let mut gens = commutators.elements().to_vec();
    gens.push(x);
    let product = subgroup_closure(g, &element_set(g, &gens)?)?;
    let report = Lemma28Report {
        commutator_order: commutators.len(),
        d_closure_order: d_closure.len(),
        k_closure_order: k_closure.len(),
        d_equals_commutator: commutators == d_closure,
        k_equals_product: product == k_closure,
    };
    Ok((report, k_closure, d_closure))
}

/// `⟨D⟩ = [x, G]` and `⟨K⟩ = ⟨x⟩[x, G]` for a class with `KK⁻¹ = 1 ∪ D`.
pub fn lemma_2_8_check(
    g: &GroupTable,
    p: &ClassPartition,
    k: usize,
) -> Result<Lemma28Report, TheoremError> {
    let (_, d) = require_one_d(g, p, k)?;
    Ok(lemma_2_8_with(g, p, k, d)?.0)
}

fn invariants(g: &GroupTable, h: &ElementSet) -> Result<Option<Vec<usize>>, TheoremError> {
    Ok(match abelian_invariants(g, h)? {
        AbelianInvariants::Abelian(v) => Some(v),
        AbelianInvariants::NotAbelian => None,
    })
}

pub fn analyze_theorem_c(
    g: &GroupTable,
    p: &ClassPartition,
    k: usize,
) -> Result<TheoremCReport, TheoremError> {
    let (pattern, d) = require_one_d(g, p, k)?;
    let (ks, ds) = (p.size(k), p.size(d));
    let (lemma, k_closure, d_closure) = lemma_2_8_with(g, p, k, d)?;

    // ⟨D⟩ is normal in G, hence in ⟨K⟩
    let (h, embed) = subgroup_table(g, &k_closure)?;
    let local: Vec<usize> = d_closure
        .elements()
        .iter()
        .map(|x| embed.binary_search(x).expect("⟨D⟩ ⊆ ⟨K⟩"))
        .collect();
    let n = subgroup_closure(&h, &element_set(&h, &local)?)?;
    let q = quotient_group(&h, &n)?;
    let quotient_cyclic = q.element_orders().contains(&q.order());

    let mut cases = Vec::new();
    if ds + 1 == ks {
        cases.push(TheoremCCase::DeqKminus1);
    }
    if ds == ks {
        cases.push(TheoremCCase::DeqK);
    }
    if ds == ks * (ks - 1) {
        cases.push(TheoremCCase::DeqKKminus1);
    }
    if cases.is_empty() {
        cases.push(TheoremCCase::OtherDivisor);
    }

    let elementary = is_elementary_abelian(g, &d_closure)?.map(|e| (e.p, e.n));
    let mut one_union_d = p.class(d).to_vec();
    one_union_d.push(0);
    one_union_d.sort_unstable();
    let series = derived_series(g, &k_closure)?;
    let k_abelian = is_abelian(g, &k_closure)?;

    let mut report = TheoremCReport {
        k,
        d,
        k_size: ks,
        d_size: ds,
        m: pattern.m,
        counting_identity: ks * ks == ks + pattern.m as usize * ds,
        divisibility_ok: (ks * (ks - 1)) % ds == 0,
        k_closure_order: k_closure.len(),
        d_closure_order: d_closure.len(),
        quotient_order: q.order(),
        quotient_cyclic,
        cases,
        d_closure_elementary: elementary,
        d_closure_is_one_union_d: d_closure.elements() == one_union_d.as_slice(),
        k_closure_abelian: k_abelian,
        k_derived_length: series.derived_length,
        k_invariants: invariants(g, &k_closure)?,
        d_invariants: invariants(g, &d_closure)?,
        lemma_2_8: lemma,
        violations: Vec::new(),
    };

    let mut violations = Vec::new();
    if !report.counting_identity {
        violations.push("|K|² ≠ |K| + m|D|".to_string());
    }
    if !report.divisibility_ok {
        violations.push("|D| does not divide |K|(|K|-1)".to_string());
    }
    if !report.quotient_cyclic {
        violations.push("⟨K⟩/⟨D⟩ is not cyclic".to_string());
    }
    if !report.lemma_2_8.holds() {
        violations.push("⟨D⟩ ≠ [x,G] or ⟨K⟩ ≠ ⟨x⟩[x,G]".to_string());
    }
    for case in &report.cases {
        match case {
            TheoremCCase::DeqKminus1 => {
                if report.d_closure_elementary.is_none() || !report.d_closure_is_one_union_d {
                    violations.push("case |D| = |K|-1: ⟨D⟩ is not 1 ∪ D elementary abelian".into());
                }
                if !report.is_metabelian() {
                    violations.push("case |D| = |K|-1: ⟨K⟩ is not metabelian".into());
                }
            }
            TheoremCCase::DeqK => {
                if !report.k_derived_length.is_some_and(|l| l <= 3) {
                    violations.push("case |D| = |K|: derived length of ⟨K⟩ exceeds 3".into());
                }
            }
            TheoremCCase::DeqKKminus1 => {
                if !report.k_closure_abelian {
                    violations.push("case |D| = |K|(|K|-1): ⟨K⟩ is not abelian".into());
                }
            }
            TheoremCCase::OtherDivisor => {}
        }
    }
    report.violations = violations;
    Ok(report)
}
