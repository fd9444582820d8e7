//! The character criterion for `KK⁻¹ = 1 ∪ D ∪ D⁻¹`:
//!
//! `|K|·|χ(x)|² = χ(1)² + ((|K|-1)/2)·χ(1)·(χ(d) + χ(d⁻¹))` for every `χ`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::{kkinv_support, TheoremError};
use crate::chartab::{dixon_character_table, CharacterTable, Cyclotomic};
use crate::classes::{conjugacy_classes, ClassPartition};
use crate::group::GroupTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremBReport {
    pub k: usize,
    pub d: usize,
    /// `KK⁻¹ = 1 ∪ D ∪ D⁻¹` as sets of classes.
    pub condition_a: bool,
    /// The character identity holds for every row.
    pub condition_b: bool,
    /// First row violating the identity.
    pub witness_character: Option<usize>,
    /// Coefficient of `D̂` in `K̂·K̂⁻¹` when a) holds and `D ≠ 1`.
    pub m: Option<u64>,
    /// For real `D`, whether the specialised form
    /// `|K||χ(x)|² = χ(1)² + (|K|-1)χ(1)χ(d)` agrees with the general one.
    pub real_form_agrees: Option<bool>,
}

impl TheoremBReport {
    pub fn consistent(&self) -> bool {
        self.condition_a == self.condition_b && self.real_form_agrees != Some(false)
    }
}

/// Per-row quantities shared by every `(K, D)` pair.
struct Precomputed {
    /// `χ(x)·χ(x⁻¹)` per row and class.
    abs_sq: Vec<Vec<Cyclotomic>>,
    /// `χ(d) + χ(d⁻¹)` per row and class.
    d_sum: Vec<Vec<Cyclotomic>>,
}

impl Precomputed {
    fn new(t: &CharacterTable) -> Self {
        let r = t.len();
        let abs_sq = (0..r)
            .map(|chi| {
                (0..r)
                    .map(|k| t.value(chi, k) * t.value(chi, t.inverse_class(k)))
                    .collect()
            })
            .collect();
        let d_sum = (0..r)
            .map(|chi| {
                (0..r)
                    .map(|d| t.value(chi, d) + t.value(chi, t.inverse_class(d)))
                    .collect()
            })
            .collect();
        Precomputed { abs_sq, d_sum }
    }
}

fn rational(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// First row on which the identity fails, if any.
fn identity_witness(t: &CharacterTable, pre: &Precomputed, k: usize, d: usize) -> Option<usize> {
    let size = t.class_sizes()[k];
    let half = BigRational::new(BigInt::from(size) - 1, 2.into());
    (0..t.len()).find(|&chi| {
        let deg = rational(t.degree(chi));
        let lhs = pre.abs_sq[chi][k].scale(&rational(size));
        let constant = Cyclotomic::from_rational(t.conductor(), &deg * &deg).expect("positive conductor");
        let rhs = &constant + &pre.d_sum[chi][d].scale(&(&half * &deg));
        lhs != rhs
    })
}

/// The specialised identity for real `D`; `None` when `D` is not real.
fn real_form_holds(t: &CharacterTable, pre: &Precomputed, k: usize, d: usize) -> Option<bool> {
    if t.inverse_class(d) != d {
        return None;
    }
    let size = t.class_sizes()[k];
    Some((0..t.len()).all(|chi| {
        let deg = rational(t.degree(chi));
        let lhs = pre.abs_sq[chi][k].scale(&rational(size));
        let constant = Cyclotomic::from_rational(t.conductor(), &deg * &deg).expect("positive conductor");
        let rhs = &constant + &t.value(chi, d).scale(&(rational(size - 1) * &deg));
        lhs == rhs
    }))
}

fn check_with(
    g: &GroupTable,
    p: &ClassPartition,
    t: &CharacterTable,
    pre: &Precomputed,
    k: usize,
    d: usize,
) -> Result<TheoremBReport, TheoremError> {
    p.check_index(k)?;
    p.check_index(d)?;
    if k == 0 {
        return Err(TheoremError::IdentityClass);
    }
    let (product, rest) = kkinv_support(g, p, k)?;
    let mut target = vec![d, p.inverse_class(d)];
    target.retain(|&c| c != 0);
    target.sort_unstable();
    target.dedup();
    let condition_a = rest == target;
    let witness = identity_witness(t, pre, k, d);
    let real_form = real_form_holds(t, pre, k, d);
    Ok(TheoremBReport {
        k,
        d,
        condition_a,
        condition_b: witness.is_none(),
        witness_character: witness,
        m: (condition_a && d != 0).then(|| product.coeff(d)),
        real_form_agrees: real_form.map(|holds| holds == witness.is_none()),
    })
}

/// Both conditions for the pair `K = class k`, `D = class d`.
pub fn check_theorem_b_identity(
    g: &GroupTable,
    p: &ClassPartition,
    t: &CharacterTable,
    k: usize,
    d: usize,
) -> Result<TheoremBReport, TheoremError> {
    check_with(g, p, t, &Precomputed::new(t), k, d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremBSweep {
    pub pairs_checked: usize,
    /// Pairs with `|K| = 1` and `D ≠ 1`: the identity collapses to
    /// `|χ(x)| = χ(1)`, true for central `x`, while `KK⁻¹ = 1`.
    pub degenerate_pairs: usize,
    /// Pairs satisfying a) (and hence b)).
    pub matches: Vec<(usize, usize)>,
    pub discrepancies: Vec<TheoremBReport>,
}

impl TheoremBSweep {
    pub fn holds(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Checks a) ⇔ b) for every non-identity `K` and every `D`.
pub fn verify_theorem_b_equivalence(g: &GroupTable) -> Result<TheoremBSweep, TheoremError> {
    let p = conjugacy_classes(g);
    let t = dixon_character_table(g, &p)?;
    verify_with_table(g, &p, &t)
}

pub(crate) fn verify_with_table(
    g: &GroupTable,
    p: &ClassPartition,
    t: &CharacterTable,
) -> Result<TheoremBSweep, TheoremError> {
    let pre = Precomputed::new(t);
    let mut sweep = TheoremBSweep {
        pairs_checked: 0,
        degenerate_pairs: 0,
        matches: Vec::new(),
        discrepancies: Vec::new(),
    };
    for k in 1..p.len() {
        for d in 0..p.len() {
            if p.size(k) == 1 && d != 0 {
                sweep.degenerate_pairs += 1;
                continue;
            }
            let report = check_with(g, p, t, &pre, k, d)?;
            sweep.pairs_checked += 1;
            if report.condition_a {
                sweep.matches.push((k, d));
            }
            if !report.consistent() {
                sweep.discrepancies.push(report);
            }
        }
    }
    Ok(sweep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        construct_cyclic, construct_semidirect_product, from_permutation_generators, Permutation,
        DEFAULT_ORDER_CAP,
    };

    fn s3() -> GroupTable {
        let t = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let c = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        from_permutation_generators(&[t, c], DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn s3_transpositions_satisfy_both_conditions() {
        let g = s3();
        let p = conjugacy_classes(&g);
        let t = dixon_character_table(&g, &p).unwrap();
        let k = (1..3).find(|&i| p.element_order(i) == 2).unwrap();
        let d = (1..3).find(|&i| p.element_order(i) == 3).unwrap();
        let r = check_theorem_b_identity(&g, &p, &t, k, d).unwrap();
        assert!(r.condition_a && r.condition_b);
        assert_eq!(r.m, Some(3));
        assert_eq!(r.real_form_agrees, Some(true));
        // the degree-2 row: 3·0 = 4 + 2·2·(-1)
        assert_eq!(t.degree(2), 2);
        assert!(t.value(2, k).is_zero());
        assert!(matches!(
            check_theorem_b_identity(&g, &p, &t, 0, d),
            Err(TheoremError::IdentityClass)
        ));
    }

    #[test]
    fn order_21_sweep() {
        let z7 = construct_cyclic(7, DEFAULT_ORDER_CAP).unwrap();
        let z3 = construct_cyclic(3, DEFAULT_ORDER_CAP).unwrap();
        let action: Vec<usize> = (0..7).map(|i| 2 * i % 7).collect();
        let g = construct_semidirect_product(&z7, &z3, &[(1, action)], DEFAULT_ORDER_CAP).unwrap();
        let sweep = verify_theorem_b_equivalence(&g).unwrap();
        assert!(sweep.holds());
        // K of size 7 with D of size 3, both ways round, and the difference-set
        // classes with D = K or K⁻¹
        assert!(sweep.matches.contains(&(3, 1)) && sweep.matches.contains(&(3, 2)));
        assert!(sweep.matches.contains(&(1, 1)) && sweep.matches.contains(&(1, 2)));
    }

    #[test]
    fn abelian_groups_only_match_trivially() {
        let g = construct_cyclic(6, DEFAULT_ORDER_CAP).unwrap();
        let sweep = verify_theorem_b_equivalence(&g).unwrap();
        assert!(sweep.holds());
        assert_eq!(sweep.degenerate_pairs, 5 * 5);
        assert_eq!(sweep.matches, (1..6).map(|k| (k, 0)).collect::<Vec<_>>());
    }
}
