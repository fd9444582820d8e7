use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::cyclotomic::Cyclotomic;
use super::dixon;
use super::integral::Ring;
use super::CharTableError;
use crate::classes::{structure_constants, ClassPartition};
use crate::group::GroupTable;

/// Largest group order accepted by [`dixon_character_table`].
pub const CHARTAB_ORDER_CAP: usize = 1024;

/// The irreducible characters of a group, rows indexed by character and
/// columns by the classes of the partition the table was built from.
///
/// Row 0 is the trivial character; the others follow by degree, then by
/// descending canonical coefficient vectors.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    order: u64,
    conductor: usize,
    prime: u64,
    class_sizes: Vec<usize>,
    class_orders: Vec<usize>,
    inverse_class: Vec<usize>,
    degrees: Vec<u64>,
    values: Vec<Vec<Cyclotomic>>,
    multiplicities: Vec<Vec<Vec<u32>>>,
    ring: Option<Ring>,
    /// Integer power-basis coefficients mirroring `values`, when they fit.
    ints: Option<Vec<Vec<Vec<i128>>>>,
}

pub fn dixon_character_table(
    g: &GroupTable,
    p: &ClassPartition,
) -> Result<CharacterTable, CharTableError> {
    dixon_character_table_with_cap(g, p, CHARTAB_ORDER_CAP)
}

pub fn dixon_character_table_with_cap(
    g: &GroupTable,
    p: &ClassPartition,
    cap: usize,
) -> Result<CharacterTable, CharTableError> {
    if g.order() > cap {
        return Err(CharTableError::OrderCapExceeded {
            order: g.order(),
            cap,
        });
    }
    let sc = structure_constants(g, p);
    let out = dixon::run(g, p, &sc)?;
    let conductor = g.exponent();

    let mut rows: Vec<(u64, Vec<Cyclotomic>, Vec<Vec<u32>>)> = out
        .characters
        .into_iter()
        .map(|c| {
            let values = c
                .mults
                .iter()
                .map(|m| {
                    let m: Vec<i64> = m.iter().map(|&x| i64::from(x)).collect();
                    Cyclotomic::from_root_multiplicities(&m).expect("positive conductor")
                })
                .collect();
            (c.degree, values, c.mults)
        })
        .collect();
    let is_trivial = |v: &[Cyclotomic]| v.iter().all(|z| z.to_rational().is_some_and(|q| q == BigRational::from_integer(1.into())));
    rows.sort_by(|a, b| {
        is_trivial(&b.1)
            .cmp(&is_trivial(&a.1))
            .then(a.0.cmp(&b.0))
            .then_with(|| compare_rows(&b.1, &a.1))
    });

    let ring = Ring::new(conductor);
    let ints = ring.as_ref().and_then(|ring| {
        rows.iter()
            .map(|(_, vals, _)| vals.iter().map(|z| ring.embed(z)).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()
    });
    let mut degrees = Vec::with_capacity(rows.len());
    let mut values = Vec::with_capacity(rows.len());
    let mut multiplicities = Vec::with_capacity(rows.len());
    for (d, v, m) in rows {
        degrees.push(d);
        values.push(v);
        multiplicities.push(m);
    }
    Ok(CharacterTable {
        order: g.order() as u64,
        conductor,
        prime: out.prime,
        class_sizes: p.sizes(),
        class_orders: p.element_orders().to_vec(),
        inverse_class: (0..p.len()).map(|i| p.inverse_class(i)).collect(),
        degrees,
        values,
        multiplicities,
        ring,
        ints,
    })
}

fn compare_rows(a: &[Cyclotomic], b: &[Cyclotomic]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.cmp_coeffs(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl CharacterTable {
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Exponent of the group; every value lies in `Q(ζₑ)`.
    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// The prime the table was computed modulo.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Number of irreducible characters (and of classes).
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.degrees[chi]
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn class_orders(&self) -> &[usize] {
        &self.class_orders
    }

    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k]
    }

    pub fn values(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn row(&self, chi: usize) -> &[Cyclotomic] {
        &self.values[chi]
    }

    pub fn value(&self, chi: usize, k: usize) -> &Cyclotomic {
        &self.values[chi][k]
    }

    /// Eigenvalue multiplicities of `χ` on class `k`, indexed by the exponent
    /// of `ζₑ`.
    pub fn multiplicities(&self, chi: usize, k: usize) -> &[u32] {
        &self.multiplicities[chi][k]
    }

    fn check_row(&self, chi: usize) -> Result<(), CharTableError> {
        if chi < self.len() {
            Ok(())
        } else {
            Err(CharTableError::IndexOutOfRange {
                index: chi,
                len: self.len(),
            })
        }
    }

    /// The row of `χ̄`, found through `χ̄(g) = χ(g⁻¹)`.
    pub fn conjugate_row(&self, chi: usize) -> Option<usize> {
        let target: Vec<&Cyclotomic> = (0..self.len())
            .map(|k| &self.values[chi][self.inverse_class[k]])
            .collect();
        (0..self.len()).find(|&psi| self.values[psi].iter().zip(&target).all(|(a, b)| a == *b))
    }

    /// `(1/|G|) Σₖ |Cₖ|·θ(k)·conj(φ(k))`
    pub fn inner_product(
        &self,
        theta: &[Cyclotomic],
        phi: &[Cyclotomic],
    ) -> Result<Cyclotomic, CharTableError> {
        for v in [theta, phi] {
            if v.len() != self.len() {
                return Err(CharTableError::LengthMismatch {
                    expected: self.len(),
                    found: v.len(),
                });
            }
        }
        let mut acc = Cyclotomic::zero(self.conductor).expect("positive conductor");
        for k in 0..self.len() {
            let term = (&theta[k] * &phi[k].conj())
                .scale(&BigRational::from_integer(BigInt::from(self.class_sizes[k])));
            acc = &acc + &term;
        }
        Ok(acc.scale(&BigRational::new(1.into(), BigInt::from(self.order))))
    }

    /// `χ·ψ` as a class function.
    pub fn product_row(&self, chi: usize, psi: usize) -> Result<Vec<Cyclotomic>, CharTableError> {
        self.check_row(chi)?;
        self.check_row(psi)?;
        Ok((0..self.len())
            .map(|k| &self.values[chi][k] * &self.values[psi][k])
            .collect())
    }

    /// Non-zero multiplicities `[χψ, θ]`, ascending by row.
    pub fn decompose_product(
        &self,
        chi: usize,
        psi: usize,
    ) -> Result<Vec<(usize, u64)>, CharTableError> {
        self.check_row(chi)?;
        self.check_row(psi)?;
        let raw = self
            .decompose_integral(chi, psi)
            .map_or_else(|| self.decompose_exact(chi, psi), Ok)?;
        let mut out = Vec::new();
        for (theta, s) in raw.into_iter().enumerate() {
            let m = self.divide_exact(&s, &BigRational::from_integer(BigInt::from(self.order)))?;
            if m != 0 {
                out.push((theta, m));
            }
        }
        Ok(out)
    }

    /// `Σₖ |Cₖ|·χ(k)ψ(k)θ(k⁻¹)` for every `θ`, on machine integers.
    fn decompose_integral(&self, chi: usize, psi: usize) -> Option<Vec<Cyclotomic>> {
        let ring = self.ring.as_ref()?;
        let ints = self.ints.as_ref()?;
        let products = (0..self.len())
            .map(|k| ring.mul(&ints[chi][k], &ints[psi][k]))
            .collect::<Option<Vec<_>>>()?;
        (0..self.len())
            .map(|theta| {
                let mut acc = ring.acc();
                for (k, pk) in products.iter().enumerate() {
                    let w = self.class_sizes[k] as i128;
                    ring.mul_acc(&mut acc, pk, &ints[theta][self.inverse_class[k]], w)?;
                }
                Some(ring.to_cyclotomic(&ring.reduce(acc)?))
            })
            .collect()
    }

    fn decompose_exact(&self, chi: usize, psi: usize) -> Result<Vec<Cyclotomic>, CharTableError> {
        let prod = self.product_row(chi, psi)?;
        Ok((0..self.len())
            .map(|theta| {
                let mut acc = Cyclotomic::zero(self.conductor).expect("positive conductor");
                for (k, pk) in prod.iter().enumerate() {
                    let t = (pk * &self.values[theta][self.inverse_class[k]])
                        .scale(&BigRational::from_integer(BigInt::from(self.class_sizes[k])));
                    acc = &acc + &t;
                }
                acc
            })
            .collect())
    }

    /// `s / d` as a non-negative integer, or `NonIntegerResult`.
    fn divide_exact(&self, s: &Cyclotomic, d: &BigRational) -> Result<u64, CharTableError> {
        let q = s.to_rational().ok_or_else(|| CharTableError::NonIntegerResult(s.to_string()))?
            / d;
        if !q.is_integer() || q.is_negative() {
            return Err(CharTableError::NonIntegerResult(rational_string(&q)));
        }
        q.numer()
            .to_u64()
            .ok_or_else(|| CharTableError::NonIntegerResult(rational_string(&q)))
    }

    fn check_class(&self, k: usize) -> Result<(), CharTableError> {
        if k < self.len() {
            Ok(())
        } else {
            Err(CharTableError::IndexOutOfRange {
                index: k,
                len: self.len(),
            })
        }
    }

    /// `aᵢⱼₖ = (|Cᵢ||Cⱼ|/|G|) Σ_χ χ(gᵢ)χ(gⱼ)conj(χ(gₖ))/χ(1)`
    pub fn structure_constant_via_characters(
        &self,
        i: usize,
        j: usize,
        k: usize,
    ) -> Result<u64, CharTableError> {
        for c in [i, j, k] {
            self.check_class(c)?;
        }
        let s = self
            .character_sum_integral(i, j, k)
            .map_or_else(|| self.character_sum_exact(i, j, k), Ok)?;
        self.structure_constant_from_sum(i, j, &s)
    }

    /// Every `aᵢⱼₖ`, laid out as `((i·r)+j)·r+k`.
    pub fn all_structure_constants_via_characters(&self) -> Result<Vec<u64>, CharTableError> {
        let r = self.len();
        let mut out = Vec::with_capacity(r * r * r);
        for i in 0..r {
            for j in 0..r {
                let sums = match self.character_sums_integral(i, j) {
                    Some(s) => s,
                    None => (0..r)
                        .map(|k| self.character_sum_exact(i, j, k))
                        .collect::<Result<_, _>>()?,
                };
                for s in &sums {
                    out.push(self.structure_constant_from_sum(i, j, s)?);
                }
            }
        }
        Ok(out)
    }

    fn structure_constant_from_sum(
        &self,
        i: usize,
        j: usize,
        s: &Cyclotomic,
    ) -> Result<u64, CharTableError> {
        let n = BigInt::from(self.order);
        let scale = BigRational::new(
            BigInt::from(self.class_sizes[i]) * BigInt::from(self.class_sizes[j]),
            &n * &n,
        );
        let den = BigRational::from_integer(1.into()) / scale;
        self.divide_exact(s, &den)
    }

    /// `Σ_χ (|G|/χ(1))·χ(gᵢ)χ(gⱼ)χ(gₖ⁻¹)`
    fn character_sum_exact(&self, i: usize, j: usize, k: usize) -> Result<Cyclotomic, CharTableError> {
        let mut acc = Cyclotomic::zero(self.conductor).expect("positive conductor");
        let kinv = self.inverse_class[k];
        for chi in 0..self.len() {
            let w = BigRational::from_integer(BigInt::from(self.order / self.degrees[chi]));
            let t = &(&self.values[chi][i] * &self.values[chi][j]) * &self.values[chi][kinv];
            acc = &acc + &t.scale(&w);
        }
        Ok(acc)
    }

    fn character_sum_integral(&self, i: usize, j: usize, k: usize) -> Option<Cyclotomic> {
        let ring = self.ring.as_ref()?;
        let ints = self.ints.as_ref()?;
        let kinv = self.inverse_class[k];
        let mut acc = ring.acc();
        for (chi, row) in ints.iter().enumerate() {
            let w = (self.order / self.degrees[chi]) as i128;
            let pij = ring.mul(&row[i], &row[j])?;
            ring.mul_acc(&mut acc, &pij, &row[kinv], w)?;
        }
        Some(ring.to_cyclotomic(&ring.reduce(acc)?))
    }

    fn character_sums_integral(&self, i: usize, j: usize) -> Option<Vec<Cyclotomic>> {
        let ring = self.ring.as_ref()?;
        let ints = self.ints.as_ref()?;
        let weighted = ints
            .iter()
            .enumerate()
            .map(|(chi, row)| {
                let pij = ring.mul(&row[i], &row[j])?;
                let w = (self.order / self.degrees[chi]) as i128;
                pij.into_iter().map(|x| x.checked_mul(w)).collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        (0..self.len())
            .map(|k| {
                let kinv = self.inverse_class[k];
                let mut acc = ring.acc();
                for (chi, pw) in weighted.iter().enumerate() {
                    ring.mul_acc(&mut acc, pw, &ints[chi][kinv], 1)?;
                }
                Some(ring.to_cyclotomic(&ring.reduce(acc)?))
            })
            .collect()
    }

    /// Both orthogonality relations and `Σ χ(1)² = |G|`, exactly.
    pub fn check_orthogonality(&self) -> Result<(), CharTableError> {
        let r = self.len();
        let degree_sum: u64 = self.degrees.iter().map(|d| d * d).sum();
        if degree_sum != self.order {
            return Err(CharTableError::Orthogonality(format!(
                "sum of squared degrees is {degree_sum}, not {}",
                self.order
            )));
        }
        let row_target = |a: usize, b: usize| if a == b { self.order as i128 } else { 0 };
        let col_target = |k: usize, l: usize| {
            if k == l {
                (self.order / self.class_sizes[k] as u64) as i128
            } else {
                0
            }
        };
        for a in 0..r {
            for b in a..r {
                let s = self.row_sum(a, b);
                if s != Cyclotomic::from_integer(self.conductor, row_target(a, b) as i64).expect("positive conductor") {
                    return Err(CharTableError::Orthogonality(format!(
                        "rows {a} and {b} give {s}"
                    )));
                }
            }
        }
        for k in 0..r {
            for l in k..r {
                let s = self.column_sum(k, l);
                if s != Cyclotomic::from_integer(self.conductor, col_target(k, l) as i64).expect("positive conductor") {
                    return Err(CharTableError::Orthogonality(format!(
                        "columns {k} and {l} give {s}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `Σₖ |Cₖ|·χ_a(k)·χ_b(k⁻¹)`
    fn row_sum(&self, a: usize, b: usize) -> Cyclotomic {
        if let (Some(ring), Some(ints)) = (&self.ring, &self.ints) {
            let mut acc = ring.acc();
            let ok = (0..self.len()).try_for_each(|k| {
                ring.mul_acc(
                    &mut acc,
                    &ints[a][k],
                    &ints[b][self.inverse_class[k]],
                    self.class_sizes[k] as i128,
                )
            });
            if let Some(v) = ok.and_then(|_| ring.reduce(acc)) {
                return ring.to_cyclotomic(&v);
            }
        }
        let mut acc = Cyclotomic::zero(self.conductor).expect("positive conductor");
        for k in 0..self.len() {
            let t = (&self.values[a][k] * &self.values[b][self.inverse_class[k]])
                .scale(&BigRational::from_integer(BigInt::from(self.class_sizes[k])));
            acc = &acc + &t;
        }
        acc
    }

    /// `Σ_χ χ(gₖ)·χ(gₗ⁻¹)`
    fn column_sum(&self, k: usize, l: usize) -> Cyclotomic {
        let linv = self.inverse_class[l];
        if let (Some(ring), Some(ints)) = (&self.ring, &self.ints) {
            let mut acc = ring.acc();
            let ok = ints
                .iter()
                .try_for_each(|row| ring.mul_acc(&mut acc, &row[k], &row[linv], 1));
            if let Some(v) = ok.and_then(|_| ring.reduce(acc)) {
                return ring.to_cyclotomic(&v);
            }
        }
        let mut acc = Cyclotomic::zero(self.conductor).expect("positive conductor");
        for row in &self.values {
            acc = &acc + &(&row[k] * &row[linv]);
        }
        acc
    }

    /// Value of `χ` on class `k` as a sum of roots of unity in lowest terms,
    /// e.g. `E5+E5^4`; rational values print as rationals.
    pub fn value_string(&self, chi: usize, k: usize) -> String {
        let v = &self.values[chi][k];
        if let Some(q) = v.to_rational() {
            return rational_string(&q);
        }
        let e = self.conductor;
        let mut terms = Vec::new();
        for (exp, &m) in self.multiplicities[chi][k].iter().enumerate() {
            if m == 0 {
                continue;
            }
            let g = num_integer::gcd(exp, e);
            let root = if exp == 0 {
                "1".to_string()
            } else if exp / g == 1 {
                format!("E{}", e / g)
            } else {
                format!("E{}^{}", e / g, exp / g)
            };
            terms.push(match (m, exp) {
                (m, 0) => m.to_string(),
                (1, _) => root,
                (m, _) => format!("{m}*{root}"),
            });
        }
        terms.join("+")
    }

    pub fn degrees_divide_order(&self) -> bool {
        self.degrees.iter().all(|d| self.order.is_multiple_of(*d))
    }

    /// Whether `χ(g)` is zero.
    pub fn vanishes(&self, chi: usize, k: usize) -> bool {
        self.values[chi][k].is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{conjugacy_classes, product_multiset};
    use crate::group::{
        construct_cyclic, construct_semidirect_product, from_permutation_generators, Permutation,
        DEFAULT_ORDER_CAP,
    };

    fn perm_group(degree: usize, gens: &[&[Vec<usize>]]) -> GroupTable {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|c| Permutation::from_cycles(degree, c).unwrap())
            .collect();
        from_permutation_generators(&gens, DEFAULT_ORDER_CAP).unwrap()
    }

    fn s3() -> GroupTable {
        perm_group(3, &[&[vec![0, 1]], &[vec![0, 1, 2]]])
    }

    fn a5() -> GroupTable {
        perm_group(5, &[&[vec![0, 1, 2, 3, 4]], &[vec![0, 1, 2]]])
    }

    fn table(g: &GroupTable) -> (ClassPartition, CharacterTable) {
        let p = conjugacy_classes(g);
        let t = dixon_character_table(g, &p).unwrap();
        (p, t)
    }

    fn int(e: usize, n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(e, n).unwrap()
    }

    #[test]
    fn z2_table() {
        let g = construct_cyclic(2, DEFAULT_ORDER_CAP).unwrap();
        let (_, t) = table(&g);
        assert_eq!(t.values(), &[vec![int(2, 1), int(2, 1)], vec![int(2, 1), int(2, -1)]]);
    }

    #[test]
    fn s3_table() {
        let g = s3();
        let (p, t) = table(&g);
        assert_eq!(t.degrees(), &[1, 1, 2]);
        t.check_orthogonality().unwrap();
        let three = (0..3).find(|&k| p.element_order(k) == 3).unwrap();
        let two = (0..3).find(|&k| p.element_order(k) == 2).unwrap();
        assert_eq!(*t.value(2, two), int(2, 0));
        assert_eq!(*t.value(2, three), int(6, -1));
        // std·std = 1 + sign + std
        assert_eq!(t.decompose_product(2, 2).unwrap(), vec![(0, 1), (1, 1), (2, 1)]);
    }

    #[test]
    fn a5_table() {
        let g = a5();
        let (p, t) = table(&g);
        assert_eq!(t.degrees(), &[1, 3, 3, 4, 5]);
        assert_eq!(t.conductor() % 5, 0);
        t.check_orthogonality().unwrap();
        let order5: Vec<usize> = (0..p.len()).filter(|&k| p.element_order(k) == 5).collect();
        assert_eq!(order5.len(), 2);
        // eigenvalues 1, ζ, ζ⁴: the golden ratio (1 + √5)/2
        let golden = &(&Cyclotomic::one(5).unwrap() + &Cyclotomic::root_of_unity(5, 1).unwrap())
            + &Cyclotomic::root_of_unity(5, 4).unwrap();
        let on_five: Vec<&Cyclotomic> = order5.iter().map(|&k| t.value(1, k)).collect();
        assert!(on_five.contains(&&golden));
        let k = order5[0];
        assert!(["1+E5+E5^4", "1+E5^2+E5^3"].contains(&t.value_string(1, k).as_str()));
        assert_eq!(t.value_string(4, 0), "5");
    }

    #[test]
    fn character_side_structure_constants() {
        let z7 = construct_cyclic(7, DEFAULT_ORDER_CAP).unwrap();
        let z3 = construct_cyclic(3, DEFAULT_ORDER_CAP).unwrap();
        let action: Vec<usize> = (0..7).map(|i| 2 * i % 7).collect();
        for g in [s3(), construct_semidirect_product(&z7, &z3, &[(1, action)], DEFAULT_ORDER_CAP).unwrap()] {
            let (p, t) = table(&g);
            let all = t.all_structure_constants_via_characters().unwrap();
            let r = p.len();
            for i in 0..r {
                for j in 0..r {
                    let m = product_multiset(&g, &p, i, j).unwrap();
                    for k in 0..r {
                        assert_eq!(t.structure_constant_via_characters(i, j, k).unwrap(), m.coeff(k));
                        assert_eq!(all[(i * r + j) * r + k], m.coeff(k));
                    }
                }
            }
        }
    }

    #[test]
    fn inner_products() {
        let (_, t) = table(&a5());
        for a in 0..t.len() {
            for b in 0..t.len() {
                let ip = t.inner_product(t.row(a), t.row(b)).unwrap();
                assert_eq!(ip, int(1, i64::from(a == b)));
            }
            let cc: Vec<Cyclotomic> = t.row(a).iter().map(Cyclotomic::abs_square).collect();
            assert_eq!(t.inner_product(&cc, t.row(0)).unwrap(), int(1, 1));
        }
        assert!(matches!(
            t.inner_product(&t.row(0)[..2], t.row(0)),
            Err(CharTableError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn conjugate_rows_exist() {
        let z7 = construct_cyclic(7, DEFAULT_ORDER_CAP).unwrap();
        let (_, t) = table(&z7);
        for chi in 0..t.len() {
            let c = t.conjugate_row(chi).unwrap();
            assert_eq!(t.conjugate_row(c), Some(chi));
        }
        assert_eq!(t.conjugate_row(0), Some(0));
    }

    #[test]
    fn order_cap() {
        let g = a5();
        let p = conjugacy_classes(&g);
        assert!(matches!(
            dixon_character_table_with_cap(&g, &p, 59),
            Err(CharTableError::OrderCapExceeded { order: 60, cap: 59 })
        ));
    }

    #[test]
    fn trivial_group_table() {
        let g = GroupTable::trivial();
        let (_, t) = table(&g);
        assert_eq!(t.degrees(), &[1]);
        t.check_orthogonality().unwrap();
    }
}
