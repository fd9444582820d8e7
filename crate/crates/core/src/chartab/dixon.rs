//! Dixon–Schneider: irreducible characters from the class algebra over `F_p`.
//!
//! The normalized central characters `ω_χ(Cⱼ) = |Cⱼ|·χ(gⱼ)/χ(1)` are the
//! common eigenvectors of the class matrices `(Mᵢ)ⱼₖ = aᵢⱼₖ`. Splitting `F_pʳ`
//! into common eigenspaces one class matrix at a time leaves one line per
//! character. Degrees follow from the first orthogonality relation and the
//! values lift to root-of-unity multiplicities through a discrete Fourier
//! inversion on each cyclic subgroup `⟨gⱼ⟩`.

use super::modp::{dixon_prime, Field};
use super::CharTableError;
use crate::classes::{ClassPartition, StructureConstants};
use crate::group::GroupTable;

/// One character as found over `F_p`, before ordering and lifting to `Q(ζₑ)`.
pub(crate) struct RawCharacter {
    pub degree: u64,
    /// `mults[j][k]`: how often `ζₑᵏ` occurs as an eigenvalue of `gⱼ`.
    pub mults: Vec<Vec<u32>>,
}

pub(crate) struct DixonOutput {
    pub prime: u64,
    pub characters: Vec<RawCharacter>,
}

pub(crate) fn run(
    g: &GroupTable,
    p: &ClassPartition,
    sc: &StructureConstants,
) -> Result<DixonOutput, CharTableError> {
    let order = g.order() as u64;
    let e = g.exponent() as u64;
    let prime = dixon_prime(e, order);
    let f = Field::new(prime);
    let r = p.len();

    let lines = split_eigenspaces(f, sc, r)?;

    let sizes: Vec<u64> = p.sizes().iter().map(|&s| s as u64).collect();
    let size_inv: Vec<u64> = sizes.iter().map(|&h| f.inv(f.elem(h))).collect();
    let z = f.pow(f.primitive_root(), (prime - 1) / e);
    // class of gⱼˡ for l < o(gⱼ)
    let power_classes: Vec<Vec<usize>> = (0..r)
        .map(|j| {
            let x = p.representative(j);
            let o = p.element_order(j);
            let mut y = g.identity();
            (0..o)
                .map(|_| {
                    let c = p.class_of(y);
                    y = g.mul(y, x);
                    c
                })
                .collect()
        })
        .collect();

    let mut characters = Vec::with_capacity(r);
    for v in lines {
        if v[0] == 0 {
            return Err(CharTableError::EigenSplitFailure(
                "central character vanishes on the identity class".into(),
            ));
        }
        let lead = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, lead)).collect();

        let mut s = 0;
        for j in 0..r {
            let t = f.mul(omega[j], omega[p.inverse_class(j)]);
            s = f.add(s, f.mul(t, size_inv[j]));
        }
        if s == 0 {
            return Err(CharTableError::EigenSplitFailure("degenerate norm".into()));
        }
        let deg_sq = f.mul(f.elem(order), f.inv(s));
        let degree = (1..)
            .take_while(|d: &u64| d * d <= order)
            .find(|&d| f.mul(d, d) == deg_sq)
            .ok_or_else(|| {
                CharTableError::EigenSplitFailure("no integral degree lifts χ(1)²".into())
            })?;

        let values: Vec<u64> = (0..r)
            .map(|j| f.mul(f.mul(omega[j], f.elem(degree)), size_inv[j]))
            .collect();

        let mut mults = Vec::with_capacity(r);
        for j in 0..r {
            let o = p.element_order(j) as u64;
            let zo_inv = f.inv(f.pow(z, e / o));
            let o_inv = f.inv(f.elem(o));
            let mut row = vec![0u32; e as usize];
            let mut total = 0u64;
            for k in 0..o {
                let step = f.pow(zo_inv, k);
                let mut acc = 0;
                let mut w = 1;
                for &c in &power_classes[j] {
                    acc = f.add(acc, f.mul(values[c], w));
                    w = f.mul(w, step);
                }
                let m = f.mul(acc, o_inv);
                if m > degree {
                    return Err(CharTableError::EigenSplitFailure(format!(
                        "multiplicity {m} exceeds degree {degree} on class {j}"
                    )));
                }
                total += m;
                row[(k * (e / o)) as usize] = m as u32;
            }
            if total != degree {
                return Err(CharTableError::EigenSplitFailure(format!(
                    "multiplicities on class {j} sum to {total}, not {degree}"
                )));
            }
            mults.push(row);
        }
        characters.push(RawCharacter { degree, mults });
    }
    Ok(DixonOutput { prime, characters })
}

/// Splits `F_pʳ` into the common eigenlines of all class matrices.
fn split_eigenspaces(
    f: Field,
    sc: &StructureConstants,
    r: usize,
) -> Result<Vec<Vec<u64>>, CharTableError> {
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![identity];
    for i in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m: Vec<Vec<u64>> = (0..r)
            .map(|j| (0..r).map(|k| f.elem(sc.get(i, j, k))).collect())
            .collect();
        let mut next = Vec::with_capacity(spaces.len());
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            next.extend(split(f, &m, basis)?);
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return Err(CharTableError::EigenSplitFailure(format!(
            "{} common eigenspaces for {r} classes",
            spaces.len()
        )));
    }
    Ok(spaces.into_iter().map(|mut s| s.remove(0)).collect())
}

/// Eigenspaces of `m` restricted to the invariant subspace spanned by `basis`
/// (rows in reduced echelon form), ascending by eigenvalue.
fn split(
    f: Field,
    m: &[Vec<u64>],
    basis: Vec<Vec<u64>>,
) -> Result<Vec<Vec<Vec<u64>>>, CharTableError> {
    let d = basis.len();
    let r = m.len();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|b| b.iter().position(|&x| x != 0).expect("non-zero basis row"))
        .collect();
    // restricted[s][t]: coordinate s of M·b_t
    let mut restricted = vec![vec![0u64; d]; d];
    for (t, b) in basis.iter().enumerate() {
        let image: Vec<u64> = m
            .iter()
            .map(|row| {
                row.iter()
                    .zip(b)
                    .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
            })
            .collect();
        for (s, &pc) in pivots.iter().enumerate() {
            restricted[s][t] = image[pc];
        }
    }
    let eigenvalues = f.roots(&f.charpoly(&restricted));
    let mut parts = Vec::with_capacity(eigenvalues.len());
    let mut found = 0;
    for lambda in eigenvalues {
        let shifted: Vec<Vec<u64>> = restricted
            .iter()
            .enumerate()
            .map(|(s, row)| {
                let mut row = row.clone();
                row[s] = f.sub(row[s], lambda);
                row
            })
            .collect();
        let mut vectors: Vec<Vec<u64>> = f
            .kernel(&shifted, d)
            .into_iter()
            .map(|u| {
                let mut v = vec![0u64; r];
                for (coef, b) in u.iter().zip(&basis) {
                    if *coef == 0 {
                        continue;
                    }
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = f.add(*x, f.mul(*coef, y));
                    }
                }
                v
            })
            .collect();
        f.rref(&mut vectors);
        found += vectors.len();
        parts.push(vectors);
    }
    if found != d {
        return Err(CharTableError::EigenSplitFailure(format!(
            "class matrix not diagonalizable on a {d}-dimensional eigenspace"
        )));
    }
    Ok(parts)
}
