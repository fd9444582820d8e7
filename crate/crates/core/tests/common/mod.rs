#![allow(dead_code)]

use kklab::classes::ClassPartition;
use kklab::group::{GroupTable, Permutation};
use kklab::workbench::{ActionSpec, Construction};
use proptest::prelude::*;

fn cyclic(n: usize) -> Construction {
    Construction::Cyclic { n }
}

/// `Z_p ⋊ Z_d` with the generator of `Z_d` raising to a power of order `d`.
fn metacyclic(p: usize, d: usize) -> Construction {
    let root = (2..p)
        .find(|&g| (1..p - 1).all(|k| pow_mod(g, k, p) != 1))
        .expect("prime modulus");
    let r = pow_mod(root, (p - 1) / d, p);
    Construction::semidirect(
        cyclic(p),
        cyclic(d),
        vec![ActionSpec {
            acting: vec![1],
            images: vec![vec![r]],
        }],
    )
}

fn pow_mod(b: usize, e: usize, m: usize) -> usize {
    (0..e).fold(1, |acc, _| acc * b % m)
}

fn perm_strategy(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// Small groups from several constructions, described by their catalog form.
pub fn construction() -> impl Strategy<Value = Construction> {
    let perms = (3usize..=5).prop_flat_map(|d| {
        prop::collection::vec(perm_strategy(d), 1..=2).prop_map(move |ps| Construction::PermGens {
            generators: ps.iter().map(|p| p.to_string()).collect(),
            degree: Some(d),
        })
    });
    prop_oneof![
        (1usize..=24).prop_map(cyclic),
        (1usize..=6, 1usize..=6).prop_map(|(a, b)| Construction::Direct {
            factors: vec![cyclic(a), cyclic(b)],
        }),
        prop_oneof![
            Just((3, 2)),
            Just((5, 2)),
            Just((5, 4)),
            Just((7, 3)),
            Just((7, 6)),
            Just((11, 5)),
            Just((13, 3)),
            Just((13, 4)),
        ]
        .prop_map(|(p, d)| metacyclic(p, d)),
        (prop_oneof![Just((3, 2)), Just((7, 3)), Just((5, 4))], 1usize..=3).prop_map(|((p, d), c)| {
            Construction::Direct {
                factors: vec![metacyclic(p, d), cyclic(c)],
            }
        }),
        perms,
    ]
}

pub fn group() -> impl Strategy<Value = GroupTable> {
    construction().prop_map(|c| c.build(5000).expect("strategy constructions are valid"))
}

/// `a_ijk` by expanding every product `x·y` with `x ∈ Cᵢ`, `y ∈ Cⱼ` and
/// dividing the hits on `Cₖ` by `|Cₖ|`.
pub fn brute_structure_constants(g: &GroupTable, p: &ClassPartition) -> Vec<u64> {
    let r = p.len();
    let mut out = vec![0u64; r * r * r];
    for i in 0..r {
        for j in 0..r {
            let mut hits = vec![0u64; r];
            for &x in p.class(i) {
                for &y in p.class(j) {
                    hits[p.class_of(g.mul(x, y))] += 1;
                }
            }
            for k in 0..r {
                let size = p.size(k) as u64;
                assert_eq!(hits[k] % size, 0, "class sum product not central");
                out[(i * r + j) * r + k] = hits[k] / size;
            }
        }
    }
    out
}

/// Classes by brute force: orbits under conjugation by every element.
pub fn brute_classes(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut orbit: Vec<usize> = (0..n).map(|h| g.mul(g.mul(g.inv(h), x), h)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            seen[y] = true;
        }
        out.push(orbit);
    }
    out
}
