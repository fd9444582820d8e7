//! Arithmetic of a non-real class with `KK⁻¹ = 1 ∪ K ∪ K⁻¹`.

use serde::Serialize;

use super::TheoremError;
use crate::classes::{kkinv_pattern, ClassPartition, PatternTag};
use crate::group::{element_set, is_elementary_abelian, subgroup_closure, GroupTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremDReport {
    pub k: usize,
    pub k_size: usize,
    pub k_closure_order: usize,
    /// `⟨K⟩ = 1 ∪ K ∪ K⁻¹` as sets.
    pub k_closure_is_one_union_k_kinv: bool,
    /// `(p, n)` when `⟨K⟩` is elementary abelian of order `pⁿ`.
    pub p: Option<usize>,
    pub n: Option<u32>,
    pub p_mod_4: Option<usize>,
    pub n_odd: bool,
    /// `|K| = (pⁿ - 1)/2`
    pub size_formula_ok: bool,
}

impl TheoremDReport {
    pub fn holds(&self) -> bool {
        self.k_closure_is_one_union_k_kinv
            && self.p.is_some_and(|p| p % 2 == 1)
            && self.p_mod_4 == Some(3)
            && self.n_odd
            && self.size_formula_ok
    }
}

pub fn check_theorem_d(
    g: &GroupTable,
    p: &ClassPartition,
    k: usize,
) -> Result<TheoremDReport, TheoremError> {
    if k == 0 {
        return Err(TheoremError::IdentityClass);
    }
    let pattern = kkinv_pattern(g, p, k)?;
    if pattern.tag != PatternTag::OneKKinv {
        return Err(TheoremError::PatternMismatch {
            class: k,
            expected: "OneKKinv",
            found: pattern.tag,
        });
    }
    let closure = subgroup_closure(g, &element_set(g, p.class(k))?)?;
    let mut union: Vec<usize> = p.class(k).to_vec();
    union.extend_from_slice(p.class(p.inverse_class(k)));
    union.push(0);
    union.sort_unstable();
    let elementary = is_elementary_abelian(g, &closure)?;
    let size = p.size(k);
    Ok(TheoremDReport {
        k,
        k_size: size,
        k_closure_order: closure.len(),
        k_closure_is_one_union_k_kinv: closure.elements() == union.as_slice(),
        p: elementary.map(|e| e.p),
        n: elementary.map(|e| e.n),
        p_mod_4: elementary.map(|e| e.p % 4),
        n_odd: elementary.is_some_and(|e| e.n % 2 == 1),
        size_formula_ok: elementary.is_some_and(|e| e.p.pow(e.n) == 2 * size + 1),
    })
}
