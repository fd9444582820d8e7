//! Exhaustive identity checks over all classes, class triples or characters.

use num_integer::Integer;
use serde::Serialize;

use super::TheoremError;
use crate::chartab::{CharacterTable, Cyclotomic};
use crate::classes::{
    conjugacy_classes, kkinv_pattern, structure_constants, ClassPartition, PatternTag,
};
use crate::group::{element_set, is_elementary_abelian, subgroup_closure, GroupTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaSweepReport {
    pub triples_checked: usize,
    /// Real classes whose `KK⁻¹` has the form `1 ∪ D ∪ D⁻¹`.
    pub real_single_pair_classes: usize,
    /// Real classes with `KK⁻¹ = 1 ∪ K`.
    pub real_self_product_classes: usize,
    pub failures: Vec<String>,
}

impl LemmaSweepReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Class-algebra identities over every class triple, plus the per-class
/// checks that only need `KK⁻¹`:
///
/// * `a(i,j,k) = a(i⁻¹,j⁻¹,k⁻¹)`
/// * `a(i,j,k)·|Cₖ| = |Cⱼ|·a(i,k⁻¹,j⁻¹)`
/// * `a(i,j,i)·|Cᵢ| = |Cⱼ|·a(i,i⁻¹,j⁻¹)` and `a(i,j,i) = a(j,i⁻¹,i⁻¹) = a(j⁻¹,i,i)`
/// * identity coefficients and `Σₖ a(i,j,k)|Cₖ| = |Cᵢ||Cⱼ|`
/// * real `K` with `KK⁻¹ = 1 ∪ D ∪ D⁻¹` forces `D` real
/// * the counting identities `|K|² = |K| + m|D|` and `|K|² = |K| + 2m|D|`
/// * real `K` with `KK⁻¹ = 1 ∪ K` generates an elementary abelian group equal to `1 ∪ K`
pub fn lemma_properties_sweep(g: &GroupTable) -> Result<LemmaSweepReport, TheoremError> {
    let p = conjugacy_classes(g);
    let sc = structure_constants(g, &p);
    let r = p.len();
    let inv = |i: usize| p.inverse_class(i);
    let size = |i: usize| p.size(i) as u64;
    let mut failures = Vec::new();
    let mut triples = 0;
    for i in 0..r {
        for j in 0..r {
            let mut weight = 0;
            for k in 0..r {
                triples += 1;
                let a = sc.get(i, j, k);
                weight += a * size(k);
                if a != sc.get(inv(i), inv(j), inv(k)) {
                    failures.push(format!("a(i,j,k) ≠ a(i⁻¹,j⁻¹,k⁻¹) at ({i},{j},{k})"));
                }
                if a * size(k) != size(j) * sc.get(i, inv(k), inv(j)) {
                    failures.push(format!("a(i,j,k)|Cₖ| ≠ |Cⱼ|a(i,k⁻¹,j⁻¹) at ({i},{j},{k})"));
                }
            }
            if weight != size(i) * size(j) {
                failures.push(format!("class product ({i},{j}) has weight {weight}"));
            }
            let a = sc.get(i, j, i);
            if a * size(i) != size(j) * sc.get(i, inv(i), inv(j))
                || a != sc.get(j, inv(i), inv(i))
                || a != sc.get(inv(j), i, i)
            {
                failures.push(format!("a(i,j,i) symmetries fail at ({i},{j})"));
            }
            let expected_identity = if j == inv(i) { size(i) } else { 0 };
            if sc.get(i, j, 0) != expected_identity {
                failures.push(format!("identity coefficient of ({i},{j}) is {}", sc.get(i, j, 0)));
            }
        }
    }

    let mut real_single_pair = 0;
    let mut real_self_product = 0;
    for k in 1..r {
        let pattern = kkinv_pattern(g, &p, k)?;
        let ks = size(k);
        if let Some(d) = pattern.d_index {
            let identity = match pattern.tag {
                PatternTag::OneD => Some(ks * ks == ks + pattern.m * size(d)),
                PatternTag::OneDDinv => Some(ks * ks == ks + 2 * pattern.m * size(d)),
                _ => None,
            };
            if identity == Some(false) {
                failures.push(format!("counting identity fails for class {k}"));
            }
        }
        if inv(k) != k {
            continue;
        }
        if matches!(pattern.tag, PatternTag::OneD | PatternTag::OneDDinv) {
            real_single_pair += 1;
            if pattern.tag == PatternTag::OneDDinv {
                failures.push(format!("real class {k} has non-real D"));
            }
        }
        if pattern.real_self_product {
            real_self_product += 1;
            let closure = subgroup_closure(g, &element_set(g, p.class(k))?)?;
            let mut union = p.class(k).to_vec();
            union.push(0);
            union.sort_unstable();
            if is_elementary_abelian(g, &closure)?.is_none() || closure.elements() != union.as_slice()
            {
                failures.push(format!("KK⁻¹ = 1 ∪ K for class {k} but ⟨K⟩ is not 1 ∪ K elementary abelian"));
            }
        }
    }
    Ok(LemmaSweepReport {
        triples_checked: triples,
        real_single_pair_classes: real_single_pair,
        real_self_product_classes: real_self_product,
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoprimeDegreeReport {
    /// Pairs `(χ, K)` with `gcd(|K|, χ(1)) = 1`.
    pub pairs_checked: usize,
    /// Pairs where `|χ(g)|²` is neither `0` nor `χ(1)²`.
    pub failures: Vec<(usize, usize)>,
}

impl CoprimeDegreeReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Coprime class size and degree force `χ(g) = 0` or `|χ(g)| = χ(1)`.
pub fn coprime_degree_sweep(p: &ClassPartition, t: &CharacterTable) -> CoprimeDegreeReport {
    let mut pairs = 0;
    let mut failures = Vec::new();
    for chi in 0..t.len() {
        let deg = t.degree(chi);
        let full = Cyclotomic::from_integer(t.conductor(), (deg * deg) as i64).expect("positive conductor");
        for k in 0..p.len() {
            if (p.size(k) as u64).gcd(&deg) != 1 {
                continue;
            }
            pairs += 1;
            let sq = t.value(chi, k) * t.value(chi, t.inverse_class(k));
            if !sq.is_zero() && sq != full {
                failures.push((chi, k));
            }
        }
    }
    CoprimeDegreeReport {
        pairs_checked: pairs,
        failures,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ThreeTermProduct {
    pub chi: usize,
    pub psi: usize,
    pub phi: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfProductReport {
    pub rows_checked: usize,
    /// Rows with `χ(1) > 1` and `χχ̄ = 1 + bχ + bχ̄`.
    pub violations: Vec<usize>,
    /// Rows with `χχ̄ = 1 + ψ + φ`, `ψ ≠ φ` both non-principal.
    pub three_term: Vec<ThreeTermProduct>,
}

impl SelfProductReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Decomposes every `χχ̄` and looks for the shapes discussed in the closing remarks.
pub fn section6_self_product_scan(t: &CharacterTable) -> Result<SelfProductReport, TheoremError> {
    let mut violations = Vec::new();
    let mut three_term = Vec::new();
    for chi in 0..t.len() {
        let bar = t
            .conjugate_row(chi)
            .ok_or_else(|| crate::chartab::CharTableError::Orthogonality(format!("row {chi} has no conjugate row")))?;
        let parts = t.decompose_product(chi, bar)?;
        let support: Vec<usize> = parts.iter().map(|&(theta, _)| theta).collect();
        let confined = support.iter().all(|&s| s == 0 || s == chi || s == bar);
        let coeff = |row: usize| parts.iter().find(|&&(s, _)| s == row).map_or(0, |&(_, m)| m);
        let balanced = chi == bar || coeff(chi) == coeff(bar);
        if t.degree(chi) > 1 && confined && coeff(chi) > 0 && balanced {
            violations.push(chi);
        }
        if let [(0, 1), (psi, 1), (phi, 1)] = parts.as_slice() {
            three_term.push(ThreeTermProduct {
                chi,
                psi: *psi,
                phi: *phi,
            });
        }
    }
    Ok(SelfProductReport {
        rows_checked: t.len(),
        violations,
        three_term,
    })
}
