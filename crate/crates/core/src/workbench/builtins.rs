use crate::classes::PatternTag;

use super::catalog::{ActionSpec, CatalogEntry, Construction, Expected};

fn cyclic(n: usize) -> Construction {
    Construction::Cyclic { n }
}

fn act(acting: &[usize], images: &[&[usize]]) -> ActionSpec {
    ActionSpec {
        acting: acting.to_vec(),
        images: images.iter().map(|w| w.to_vec()).collect(),
    }
}

const SL23_GENS: [&str; 2] = ["(1 4 7)(2 8 5)", "(1 6 2 3)(4 7 8 5)"];

/// The seven worked examples, each with its witness class `K` and the facts
/// stated for it.
pub fn builtin_examples() -> Vec<CatalogEntry> {
    let a4 = Construction::perm_gens(&["(1 2 3)", "(1 2)(3 4)"]);
    let z5sq = Construction::Direct {
        factors: vec![cyclic(5), cyclic(5)],
    };
    let z3cubed = Construction::Direct {
        factors: vec![cyclic(3), cyclic(3), cyclic(3)],
    };
    vec![
        // ⟨a⟩ ⋊ ⟨b⟩, a^b = a²
        CatalogEntry::new(
            "Ex5.1",
            Construction::semidirect(cyclic(7), cyclic(3), vec![act(&[1], &[&[2]])]),
        )
        .with_id("21#1")
        .with_expected(Expected {
            order: Some(21),
            class_sizes: Some(vec![1, 3, 3, 7, 7]),
            k_word: Some(vec![0, 1]),
            d_word: Some(vec![1, 0]),
            k_size: Some(7),
            d_size: Some(3),
            pattern: Some(PatternTag::OneDDinv),
            eta_kkinv: Some(3),
            k_closure_order: Some(21),
            d_closure_order: Some(7),
            ..Expected::default()
        }),
        // (⟨c⟩ ⋊ ⟨b⟩) ⋊ ⟨a⟩, c^b = c⁴, c^a = c¹⁰, b^a = b
        CatalogEntry::new(
            "Ex5.2",
            Construction::semidirect(
                Construction::semidirect(cyclic(11), cyclic(5), vec![act(&[1], &[&[4]])]),
                cyclic(2),
                vec![act(&[1], &[&[10, 0], &[0, 1]])],
            ),
        )
        .with_id("110#1")
        .with_expected(Expected {
            order: Some(110),
            k_word: Some(vec![0, 1, 0]),
            d_word: Some(vec![1, 0, 0]),
            k_size: Some(11),
            d_size: Some(10),
            pattern: Some(PatternTag::OneD),
            k_closure_order: Some(55),
            d_closure_order: Some(11),
            d_invariants: Some(vec![11]),
            d_elementary_abelian: Some(true),
            ..Expected::default()
        }),
        // x = a·t with a of order 10 and t an involution of A4
        CatalogEntry::new(
            "Ex5.3",
            Construction::Direct {
                factors: vec![cyclic(10), a4],
            },
        )
        .with_expected(Expected {
            order: Some(120),
            k_word: Some(vec![1, 0, 1]),
            d_word: Some(vec![0, 0, 1]),
            k_size: Some(3),
            d_size: Some(3),
            pattern: Some(PatternTag::OneD),
            k_closure_order: Some(40),
            d_closure_order: Some(4),
            k_invariants: Some(vec![2, 2, 10]),
            d_invariants: Some(vec![2, 2]),
            d_elementary_abelian: Some(true),
            ..Expected::default()
        }),
        // ((⟨c⟩ × ⟨d⟩) ⋊ ⟨b⟩) ⋊ ⟨a⟩, c^b = cd³, d^b = c⁴d³, c^a = c, d^a = c⁴d⁴, b^a = b²
        CatalogEntry::new(
            "Ex5.4",
            Construction::semidirect(
                Construction::semidirect(z5sq, cyclic(3), vec![act(&[1], &[&[1, 3], &[4, 3]])]),
                cyclic(2),
                vec![act(&[1], &[&[1, 0, 0], &[4, 4, 0], &[0, 0, 2]])],
            ),
        )
        .with_id("150#5")
        .with_expected(Expected {
            order: Some(150),
            k_word: Some(vec![1, 0, 0, 0]),
            k_size: Some(3),
            d_size: Some(6),
            pattern: Some(PatternTag::OneD),
            k_closure_order: Some(25),
            k_invariants: Some(vec![5, 5]),
            ..Expected::default()
        }),
        CatalogEntry::new("Ex5.5", Construction::perm_gens(&SL23_GENS))
            .with_id("24#3")
            .with_expected(Expected {
                order: Some(24),
                k_word: Some(vec![1, 0]),
                k_size: Some(4),
                d_size: Some(6),
                pattern: Some(PatternTag::OneD),
                k_closure_order: Some(24),
                d_closure_order: Some(8),
                k_derived_length: Some(3),
                d_involutions: Some(1),
                ..Expected::default()
            }),
        // ⟨x⟩ ⋊ ⟨a⟩, x^a = x⁴
        CatalogEntry::new(
            "Ex5.6",
            Construction::semidirect(cyclic(11), cyclic(5), vec![act(&[1], &[&[4]])]),
        )
        .with_id("55#1")
        .with_expected(Expected {
            order: Some(55),
            k_word: Some(vec![1, 0]),
            k_size: Some(5),
            pattern: Some(PatternTag::OneKKinv),
            k_closure_order: Some(11),
            theorem_d_p: Some(11),
            theorem_d_n: Some(1),
            ..Expected::default()
        }),
        // (⟨x⟩ × ⟨y⟩ × ⟨z⟩) ⋊ ⟨a⟩, x^a = y, y^a = z, z^a = xy
        CatalogEntry::new(
            "Ex5.7",
            Construction::semidirect(
                z3cubed,
                cyclic(13),
                vec![act(&[1], &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]])],
            ),
        )
        .with_id("351#12")
        .with_expected(Expected {
            order: Some(351),
            k_word: Some(vec![1, 0, 0, 0]),
            k_size: Some(13),
            pattern: Some(PatternTag::OneKKinv),
            k_closure_order: Some(27),
            k_invariants: Some(vec![3, 3, 3]),
            theorem_d_p: Some(3),
            theorem_d_n: Some(3),
            ..Expected::default()
        }),
    ]
}

fn ordered(name: &str, gens: &[&str], order: usize) -> CatalogEntry {
    CatalogEntry::new(name, Construction::perm_gens(gens)).with_expected(Expected {
        order: Some(order),
        ..Expected::default()
    })
}

/// Small reference groups used by the sweeps alongside the examples.
pub fn standard_groups() -> Vec<CatalogEntry> {
    vec![
        ordered("S3", &["(1 2 3)", "(1 2)"], 6),
        ordered("S4", &["(1 2 3 4)", "(1 2)"], 24),
        ordered("D8", &["(1 2 3 4)", "(1 3)"], 8),
        ordered("Q8", &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], 8),
        ordered("SL23", &SL23_GENS, 24),
        ordered("A4", &["(1 2 3)", "(1 2)(3 4)"], 12),
        ordered("A5", &["(1 2 3 4 5)", "(1 2 3)"], 60),
        CatalogEntry::new("Z6", cyclic(6)).with_expected(Expected {
            order: Some(6),
            ..Expected::default()
        }),
    ]
}

/// Non-abelian simple groups small enough for a full class-algebra pass.
pub fn simple_catalog() -> Vec<CatalogEntry> {
    vec![
        ordered("A5", &["(1 2 3 4 5)", "(1 2 3)"], 60),
        ordered("PSL(2,7)", &["(4 6)(5 7)", "(1 2 4)(3 6 5)"], 168),
        ordered("A6", &["(1 2 3 4 5)", "(4 5 6)"], 360),
        ordered("PSL(2,8)", &["(1 5 3 8 6 7 2)", "(1 9)(3 6)(4 7)(5 8)"], 504),
        ordered(
            "PSL(2,11)",
            &[
                "(1 2 3 4 5 6 7 8 9 10 11)",
                "(1 12)(2 11)(3 6)(4 8)(5 9)(7 10)",
            ],
            660,
        ),
    ]
}

/// Every built-in entry once, by name, in catalog order.
pub fn all_builtin_entries() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = Vec::new();
    for e in builtin_examples()
        .into_iter()
        .chain(standard_groups())
        .chain(simple_catalog())
    {
        if !out.iter().any(|o| o.name == e.name) {
            out.push(e);
        }
    }
    out
}

/// Looks up a built-in entry by name or identifier.
pub fn find_builtin(name: &str) -> Option<CatalogEntry> {
    all_builtin_entries().into_iter().find(|e| e.matches(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{element_set, is_generalized_quaternion, subgroup_closure};

    #[test]
    fn orders() {
        for e in all_builtin_entries() {
            let g = e.build().unwrap();
            let want = e.expected.as_ref().and_then(|x| x.order).unwrap();
            assert_eq!(g.order(), want, "{}", e.name);
        }
        assert_eq!(builtin_examples().len(), 7);
    }

    #[test]
    fn quaternion_and_sl23() {
        let q8 = find_builtin("Q8").unwrap().build().unwrap();
        let whole = subgroup_closure(&q8, &element_set(&q8, q8.generators()).unwrap()).unwrap();
        assert_eq!(whole.len(), 8);
        assert!(is_generalized_quaternion(&q8, &whole).unwrap());

        // SL(2,3) element order statistics
        let g = find_builtin("SL23").unwrap().build().unwrap();
        let orders = g.element_orders();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 1);
        assert_eq!(orders.iter().filter(|&&o| o == 3).count(), 8);
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 6);
        assert_eq!(orders.iter().filter(|&&o| o == 6).count(), 8);
    }

    #[test]
    fn lookup_by_id() {
        assert_eq!(find_builtin("110#1").unwrap().name, "Ex5.2");
        assert!(find_builtin("nope").is_none());
    }
}
