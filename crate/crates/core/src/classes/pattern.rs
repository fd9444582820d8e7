use serde::{Deserialize, Serialize};

use super::{kk_inverse, ClassError, ClassPartition};
use crate::group::GroupTable;

/// Shape of the support of `KK⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternTag {
    /// `KK⁻¹ = 1`, i.e. `K` is central.
    TrivialOnly,
    /// `KK⁻¹ = 1 ∪ D` with `D` real and `D ∉ {K, K⁻¹}`.
    OneD,
    /// `KK⁻¹ = 1 ∪ D ∪ D⁻¹` with `D` non-real and `D ∉ {K, K⁻¹}`.
    OneDDinv,
    /// `KK⁻¹ = 1 ∪ K ∪ K⁻¹` with `K` non-real.
    OneKKinv,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KKInvPattern {
    pub tag: PatternTag,
    /// The class `D` (the smaller index of `D`, `D⁻¹`), when there is one.
    pub d_index: Option<usize>,
    /// Coefficient of `D̂` (equal to that of `D̂⁻¹`) in `K̂·K̂⁻¹`.
    pub m: u64,
    /// `K` real with `KK⁻¹ = 1 ∪ K`; tagged `Other` with `d_index = K`.
    pub real_self_product: bool,
}

impl KKInvPattern {
    /// Whether `KK⁻¹ = 1 ∪ D ∪ D⁻¹` for some single class `D`, in any of its forms.
    pub fn is_single_class_pair(&self) -> bool {
        matches!(
            self.tag,
            PatternTag::TrivialOnly | PatternTag::OneD | PatternTag::OneDDinv | PatternTag::OneKKinv
        ) || self.real_self_product
    }
}

pub fn kkinv_pattern(
    g: &GroupTable,
    p: &ClassPartition,
    k: usize,
) -> Result<KKInvPattern, ClassError> {
    p.check_index(k)?;
    if k == 0 {
        return Err(ClassError::IdentityClass);
    }
    let product = kk_inverse(g, p, k)?;
    debug_assert_eq!(product.coeff(0), p.size(k) as u64);
    let rest: Vec<usize> = product.support().into_iter().filter(|&c| c != 0).collect();
    let k_inv = p.inverse_class(k);
    let of = |tag, d: Option<usize>, real_self_product| {
        let m = d.map_or(0, |d| product.coeff(d));
        if let Some(d) = d {
            assert_eq!(
                m,
                product.coeff(p.inverse_class(d)),
                "D and D⁻¹ must occur in KK⁻¹ with the same multiplicity"
            );
        }
        KKInvPattern {
            tag,
            d_index: d,
            m,
            real_self_product,
        }
    };
    let pattern = match rest.as_slice() {
        [] => of(PatternTag::TrivialOnly, None, false),
        &[d] => {
            if p.inverse_class(d) != d {
                of(PatternTag::Other, None, false)
            } else if d == k {
                of(PatternTag::Other, Some(d), true)
            } else if d == k_inv {
                // D real and D = K⁻¹ forces K = D
                of(PatternTag::Other, None, false)
            } else {
                of(PatternTag::OneD, Some(d), false)
            }
        }
        &[d, e] if p.inverse_class(d) == e && d != e => {
            if d == k || d == k_inv {
                of(PatternTag::OneKKinv, Some(d), false)
            } else {
                of(PatternTag::OneDDinv, Some(d), false)
            }
        }
        _ => of(PatternTag::Other, None, false),
    };
    Ok(pattern)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::conjugacy_classes;
    use crate::group::{
        construct_cyclic, construct_direct_product, construct_semidirect_product,
        DEFAULT_ORDER_CAP,
    };

    fn cyclic_by_cyclic(n: usize, h: usize, mult: usize) -> GroupTable {
        let zn = construct_cyclic(n, DEFAULT_ORDER_CAP).unwrap();
        let zh = construct_cyclic(h, DEFAULT_ORDER_CAP).unwrap();
        let action: Vec<usize> = (0..n).map(|i| mult * i % n).collect();
        construct_semidirect_product(&zn, &zh, &[(1, action)], DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn central_class_is_trivial_only() {
        let z4 = construct_cyclic(4, DEFAULT_ORDER_CAP).unwrap();
        let p = conjugacy_classes(&z4);
        let pat = kkinv_pattern(&z4, &p, 1).unwrap();
        assert_eq!(pat.tag, PatternTag::TrivialOnly);
        assert_eq!(kkinv_pattern(&z4, &p, 0).unwrap_err(), ClassError::IdentityClass);
    }

    #[test]
    fn order_21_patterns() {
        let g = cyclic_by_cyclic(7, 3, 2);
        let p = conjugacy_classes(&g);
        // classes 1, 2: the order-7 elements (size 3); 3, 4: order 3 (size 7)
        for k in [3, 4] {
            let pat = kkinv_pattern(&g, &p, k).unwrap();
            assert_eq!(pat.tag, PatternTag::OneDDinv);
            assert_eq!(p.size(pat.d_index.unwrap()), 3);
            // 49 = 7 + 2·m·3
            assert_eq!(pat.m, 7);
        }
        // {1, 2, 4} is a difference set mod 7, so these give 1 ∪ K ∪ K⁻¹
        for k in [1, 2] {
            assert_eq!(kkinv_pattern(&g, &p, k).unwrap().tag, PatternTag::OneKKinv);
        }
    }

    #[test]
    fn elementary_abelian_normal_class_is_real_self_product() {
        // S3: the 3-cycles satisfy KK⁻¹ = 1 ∪ K
        let g = cyclic_by_cyclic(3, 2, 2);
        let p = conjugacy_classes(&g);
        let k = (1..p.len()).find(|&i| p.element_order(i) == 3).unwrap();
        let pat = kkinv_pattern(&g, &p, k).unwrap();
        assert_eq!(pat.tag, PatternTag::Other);
        assert!(pat.real_self_product);
        assert_eq!(pat.d_index, Some(k));
        // transpositions: KK⁻¹ = 1 ∪ {3-cycles}
        let t = (1..p.len()).find(|&i| p.element_order(i) == 2).unwrap();
        let pat = kkinv_pattern(&g, &p, t).unwrap();
        assert_eq!(pat.tag, PatternTag::OneD);
        assert_eq!(pat.d_index, Some(k));
        assert_eq!(pat.m, 3);
    }

    #[test]
    fn s3_times_z2_patterns() {
        let s3 = cyclic_by_cyclic(3, 2, 2);
        let z2 = construct_cyclic(2, DEFAULT_ORDER_CAP).unwrap();
        let g = construct_direct_product(&s3, &z2, DEFAULT_ORDER_CAP).unwrap();
        let p = conjugacy_classes(&g);
        let tags: Vec<PatternTag> = (1..p.len())
            .map(|k| kkinv_pattern(&g, &p, k).unwrap().tag)
            .collect();
        // (t, 0), (t, 1) and (c, 1) all square into the 3-cycle class of the S3 factor
        assert_eq!(tags.iter().filter(|&&t| t == PatternTag::OneD).count(), 3);
        assert_eq!(tags.iter().filter(|&&t| t == PatternTag::Other).count(), 1);
        assert_eq!(tags.iter().filter(|&&t| t == PatternTag::TrivialOnly).count(), 1);
    }
}
