use serde::Serialize;

use super::{ClassError, ClassPartition};
use crate::group::{ElementSet, GroupTable};

/// Coefficients of a product of class sums in the class-sum basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassProductMultiset {
    coeffs: Vec<u64>,
}

impl ClassProductMultiset {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs[k]
    }

    /// Classes with a non-zero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&k| self.coeffs[k] != 0)
            .collect()
    }

    /// `Σₖ coeffs[k]·|Cₖ|`, which equals the product of the two factor sizes.
    pub fn weight(&self, p: &ClassPartition) -> u64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| c * p.size(k) as u64)
            .sum()
    }
}

/// Counts pairs `(a, b) ∈ Cᵢ × Cⱼ` with `ab = zₖ` for the fixed representative
/// `zₖ` of each class `k`.
pub fn product_multiset(
    g: &GroupTable,
    p: &ClassPartition,
    i: usize,
    j: usize,
) -> Result<ClassProductMultiset, ClassError> {
    p.check_index(i)?;
    p.check_index(j)?;
    let count = |z: usize| -> u64 {
        p.class(i)
            .iter()
            .filter(|&&a| p.class_of(g.mul(g.inv(a), z)) == j)
            .count() as u64
    };
    let coeffs: Vec<u64> = (0..p.len())
        .map(|k| {
            let c = count(p.representative(k));
            // class functions do not depend on the representative
            debug_assert!(p.size(k) < 2 || c == count(p.class(k)[1]));
            c
        })
        .collect();
    Ok(ClassProductMultiset { coeffs })
}

/// `K̂·K̂⁻¹` for the class `k`.
pub fn kk_inverse(
    g: &GroupTable,
    p: &ClassPartition,
    k: usize,
) -> Result<ClassProductMultiset, ClassError> {
    p.check_index(k)?;
    product_multiset(g, p, k, p.inverse_class(k))
}

/// All structure constants `aᵢⱼₖ` of the class algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    classes: usize,
    table: Vec<u64>,
}

impl StructureConstants {
    pub fn classes(&self) -> usize {
        self.classes
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.table[(i * self.classes + j) * self.classes + k]
    }
}

/// Builds every `aᵢⱼₖ` in one pass over `G × classes`.
pub fn structure_constants(g: &GroupTable, p: &ClassPartition) -> StructureConstants {
    let r = p.len();
    let mut table = vec![0u64; r * r * r];
    for (i, class) in p.classes().iter().enumerate() {
        for &a in class {
            let a_inv = g.inv(a);
            for k in 0..r {
                let j = p.class_of(g.mul(a_inv, p.representative(k)));
                table[(i * r + j) * r + k] += 1;
            }
        }
    }
    StructureConstants { classes: r, table }
}

/// Input to [`eta`]: a raw conjugation-invariant element set or a class multiset.
#[derive(Clone, Copy, Debug)]
pub enum InvariantSet<'a> {
    Elements(&'a ElementSet),
    Multiset(&'a ClassProductMultiset),
}

/// Number of distinct classes met by a conjugation-invariant set.
pub fn eta(g: &GroupTable, p: &ClassPartition, s: InvariantSet<'_>) -> Result<usize, ClassError> {
    match s {
        InvariantSet::Multiset(m) => Ok(m.coeffs().iter().filter(|&&c| c != 0).count()),
        InvariantSet::Elements(set) => {
            for &x in set.elements() {
                g.check_index(x)?;
                if !g.generators().iter().all(|&s| set.contains(g.conjugate(x, s))) {
                    return Err(ClassError::NotInvariantSet);
                }
            }
            let mut classes: Vec<usize> = set.elements().iter().map(|&x| p.class_of(x)).collect();
            classes.sort_unstable();
            classes.dedup();
            Ok(classes.len())
        }
    }
}
