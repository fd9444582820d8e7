//! Acceptance criteria, one line each. Exits non-zero when any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kklab::chartab::{dixon_character_table, CharacterTable};
use kklab::classes::{conjugacy_classes, kkinv_pattern, product_multiset, ClassPartition, PatternTag};
use kklab::group::{
    abelian_invariants, derived_series, element_set, is_elementary_abelian, is_generalized_quaternion,
    subgroup_closure, AbelianInvariants, ElementSet, GroupTable,
};
use kklab::theorems::{
    analyze_theorem_c, check_theorem_d, section6_self_product_scan, theorem_a_scan,
    verify_theorem_b_equivalence,
};
use kklab::workbench::{all_builtin_entries, builtin_examples, find_builtin, simple_catalog};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn build(name: &str) -> GroupTable {
    find_builtin(name).unwrap_or_else(|| panic!("no entry {name}")).build().expect("builtin builds")
}

fn closure(g: &GroupTable, elements: &[usize]) -> ElementSet {
    subgroup_closure(g, &element_set(g, elements).unwrap()).unwrap()
}

/// The facts stated for one worked example. `None` where nothing is stated.
struct Stated {
    name: &'static str,
    k_size: usize,
    d_size: Option<usize>,
    pattern: PatternTag,
    k_closure: usize,
    d_closure: Option<usize>,
}

const STATED: [Stated; 7] = [
    Stated { name: "Ex5.1", k_size: 7, d_size: Some(3), pattern: PatternTag::OneDDinv, k_closure: 21, d_closure: Some(7) },
    Stated { name: "Ex5.2", k_size: 11, d_size: Some(10), pattern: PatternTag::OneD, k_closure: 55, d_closure: Some(11) },
    Stated { name: "Ex5.3", k_size: 3, d_size: Some(3), pattern: PatternTag::OneD, k_closure: 40, d_closure: Some(4) },
    Stated { name: "Ex5.4", k_size: 3, d_size: Some(6), pattern: PatternTag::OneD, k_closure: 25, d_closure: None },
    Stated { name: "Ex5.5", k_size: 4, d_size: Some(6), pattern: PatternTag::OneD, k_closure: 24, d_closure: Some(8) },
    Stated { name: "Ex5.6", k_size: 5, d_size: None, pattern: PatternTag::OneKKinv, k_closure: 11, d_closure: None },
    Stated { name: "Ex5.7", k_size: 13, d_size: None, pattern: PatternTag::OneKKinv, k_closure: 27, d_closure: None },
];

fn invariants(g: &GroupTable, h: &ElementSet) -> Option<Vec<usize>> {
    match abelian_invariants(g, h).unwrap() {
        AbelianInvariants::Abelian(v) => Some(v),
        AbelianInvariants::NotAbelian => None,
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let examples = builtin_examples();
    ensure(examples.len() == 7, || format!("{} builtin examples", examples.len()))?;
    for (entry, s) in examples.iter().zip(&STATED) {
        ensure(entry.name == s.name, || format!("entry {} out of order", entry.name))?;
        let g = entry.build().map_err(|e| e.to_string())?;
        let p = conjugacy_classes(&g);
        let word = entry.expected.as_ref().and_then(|e| e.k_word.clone()).ok_or("no witness")?;
        let k = p.class_of(g.word(&word).map_err(|e| e.to_string())?);
        let pattern = kkinv_pattern(&g, &p, k).map_err(|e| e.to_string())?;
        let kc = closure(&g, p.class(k));
        let fail = |what: &str, got: String| format!("{}: {what} = {got}", s.name);
        ensure(p.size(k) == s.k_size, || fail("|K|", p.size(k).to_string()))?;
        ensure(pattern.tag == s.pattern, || fail("pattern", format!("{:?}", pattern.tag)))?;
        ensure(kc.len() == s.k_closure, || fail("|<K>|", kc.len().to_string()))?;
        let d = pattern.d_index;
        if let Some(ds) = s.d_size {
            let d = d.ok_or_else(|| fail("D", "none".into()))?;
            ensure(p.size(d) == ds, || fail("|D|", p.size(d).to_string()))?;
        }
        let dc = d.map(|d| closure(&g, p.class(d)));
        if let Some(dco) = s.d_closure {
            let got = dc.as_ref().map_or(0, ElementSet::len);
            ensure(got == dco, || fail("|<D>|", got.to_string()))?;
        }
        match s.name {
            "Ex5.2" => {
                let el = is_elementary_abelian(&g, dc.as_ref().unwrap()).unwrap();
                ensure(el.is_some_and(|e| e.p == 11 && e.n == 1), || fail("<D> elementary", format!("{el:?}")))?;
            }
            "Ex5.3" => {
                let (ki, di) = (invariants(&g, &kc), invariants(&g, dc.as_ref().unwrap()));
                ensure(ki == Some(vec![2, 2, 10]) && di == Some(vec![2, 2]), || {
                    fail("invariants", format!("{ki:?}/{di:?}"))
                })?;
            }
            "Ex5.4" => {
                let ki = invariants(&g, &kc);
                ensure(ki == Some(vec![5, 5]), || fail("<K> invariants", format!("{ki:?}")))?;
            }
            "Ex5.5" => {
                let dl = derived_series(&g, &kc).unwrap().derived_length;
                ensure(dl == Some(3), || fail("dl(<K>)", format!("{dl:?}")))?;
                let dc = dc.as_ref().unwrap();
                let inv = dc.elements().iter().filter(|&&x| g.element_order(x).unwrap() == 2).count();
                ensure(inv == 1 && is_generalized_quaternion(&g, dc).unwrap(), || {
                    fail("<D> involutions", inv.to_string())
                })?;
            }
            "Ex5.6" | "Ex5.7" => {
                let r = check_theorem_d(&g, &p, k).map_err(|e| e.to_string())?;
                let want = if s.name == "Ex5.6" { (11, 1) } else { (3, 3) };
                ensure(r.p == Some(want.0) && r.n == Some(want.1), || fail("(p, n)", format!("{:?}", (r.p, r.n))))?;
            }
            _ => {}
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(5), || format!("took {took:.2?}"))?;
    Ok(format!("7 examples in {took:.2?}"))
}

fn criterion_2() -> Outcome {
    let mut parts = Vec::new();
    for entry in simple_catalog() {
        let start = Instant::now();
        let g = entry.build().map_err(|e| e.to_string())?;
        let scan = theorem_a_scan(&[(entry.name.clone(), g)]).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        let s = &scan[0];
        let bad = s.hits_with(PatternTag::OneD).count() + s.hits_with(PatternTag::OneDDinv).count();
        ensure(s.nonabelian_simple, || format!("{} not recognized as simple", s.name))?;
        ensure(bad == 0, || format!("{} has {bad} OneD/OneDDinv classes", s.name))?;
        ensure(took < Duration::from_secs(60), || format!("{} took {took:.2?}", s.name))?;
        parts.push(format!("{} ({})", s.name, s.order));
    }
    Ok(format!("no OneD/OneDDinv in {}", parts.join(", ")))
}

fn table(g: &GroupTable) -> Result<(ClassPartition, CharacterTable), String> {
    let p = conjugacy_classes(g);
    let t = dixon_character_table(g, &p).map_err(|e| e.to_string())?;
    Ok((p, t))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for entry in all_builtin_entries() {
        let g = entry.build().map_err(|e| e.to_string())?;
        if g.order() > 1024 {
            continue;
        }
        let (_, t) = table(&g)?;
        t.check_orthogonality().map_err(|e| format!("{}: {e}", entry.name))?;
        let sq: u64 = t.degrees().iter().map(|d| d * d).sum();
        ensure(sq == g.order() as u64, || format!("{}: Σχ(1)² = {sq}", entry.name))?;
        count += 1;
    }
    let (_, s3) = table(&build("S3"))?;
    ensure(s3.degrees() == [1, 1, 2], || format!("S3 degrees {:?}", s3.degrees()))?;
    let start = Instant::now();
    let (_, a5) = table(&build("A5"))?;
    let took = start.elapsed();
    ensure(a5.degrees() == [1, 3, 3, 4, 5], || format!("A5 degrees {:?}", a5.degrees()))?;
    ensure(took < Duration::from_secs(30), || format!("A5 took {took:.2?}"))?;
    Ok(format!("{count} tables exact, A5 in {took:.2?}"))
}

fn sweep_list() -> Vec<(String, GroupTable)> {
    let mut out: Vec<(String, GroupTable)> =
        builtin_examples().iter().map(|e| (e.name.clone(), e.build().unwrap())).collect();
    for name in ["S3", "S4", "SL23", "A5", "D8", "Q8"] {
        out.push((name.to_string(), build(name)));
    }
    out
}

fn criterion_4() -> Outcome {
    let mut pairs = 0;
    for (name, g) in sweep_list() {
        let sweep = verify_theorem_b_equivalence(&g).map_err(|e| e.to_string())?;
        ensure(sweep.holds(), || format!("{name}: {} discrepancies", sweep.discrepancies.len()))?;
        pairs += sweep.pairs_checked;
    }
    Ok(format!("{pairs} (K, D) pairs, zero discrepancies"))
}

fn criterion_5() -> Outcome {
    let mut triples = 0;
    for (name, g) in sweep_list() {
        let (p, t) = table(&g)?;
        let via = t.all_structure_constants_via_characters().map_err(|e| e.to_string())?;
        let r = p.len();
        for i in 0..r {
            for j in 0..r {
                let m = product_multiset(&g, &p, i, j).map_err(|e| e.to_string())?;
                for k in 0..r {
                    let v = via[(i * r + j) * r + k];
                    ensure(v == m.coeff(k), || format!("{name}: ({i},{j},{k}) {v} vs {}", m.coeff(k)))?;
                    triples += 1;
                }
            }
        }
    }
    Ok(format!("{triples} class triples agree"))
}

fn catalog_groups() -> Vec<(String, GroupTable)> {
    all_builtin_entries()
        .into_iter()
        .map(|e| (e.name.clone(), e.build().unwrap()))
        .collect()
}

fn criterion_6() -> Outcome {
    let mut hits = 0;
    for (name, g) in catalog_groups() {
        let p = conjugacy_classes(&g);
        for k in 1..p.len() {
            if kkinv_pattern(&g, &p, k).map_err(|e| e.to_string())?.tag != PatternTag::OneD {
                continue;
            }
            let r = analyze_theorem_c(&g, &p, k).map_err(|e| e.to_string())?;
            ensure(r.k_size * (r.k_size - 1) % r.d_size == 0, || format!("{name} class {k}: |D| ∤ |K|(|K|-1)"))?;
            ensure(r.quotient_cyclic, || format!("{name} class {k}: <K>/<D> not cyclic"))?;
            ensure(r.lemma_2_8.holds(), || format!("{name} class {k}: KK⁻¹ coefficient equalities fail"))?;
            ensure(r.holds(), || format!("{name} class {k}: {}", r.violations.join("; ")))?;
            hits += 1;
        }
    }
    ensure(hits > 0, || "no OneD hits at all".into())?;
    Ok(format!("{hits} OneD hits, all invariants hold"))
}

fn criterion_7() -> Outcome {
    let mut hits = 0;
    for (name, g) in catalog_groups() {
        let p = conjugacy_classes(&g);
        for k in 1..p.len() {
            if kkinv_pattern(&g, &p, k).map_err(|e| e.to_string())?.tag != PatternTag::OneKKinv {
                continue;
            }
            ensure(!p.is_real(k).unwrap(), || format!("{name} class {k} is real"))?;
            let r = check_theorem_d(&g, &p, k).map_err(|e| e.to_string())?;
            ensure(r.p.is_some(), || format!("{name} class {k}: <K> not elementary abelian"))?;
            ensure(r.p_mod_4 == Some(3), || format!("{name} class {k}: p ≢ 3 mod 4"))?;
            ensure(r.n_odd, || format!("{name} class {k}: n even"))?;
            ensure(r.size_formula_ok, || format!("{name} class {k}: |K| ≠ (pⁿ-1)/2"))?;
            ensure(r.holds(), || format!("{name} class {k}: report fails"))?;
            hits += 1;
        }
    }
    ensure(hits > 0, || "no OneKKinv hits at all".into())?;
    Ok(format!("{hits} non-real OneKKinv hits, all invariants hold"))
}

fn criterion_8() -> Outcome {
    let mut tables = 0;
    let mut found = false;
    for (name, g) in catalog_groups() {
        if g.order() > 1024 {
            continue;
        }
        let (_, t) = table(&g)?;
        let scan = section6_self_product_scan(&t).map_err(|e| e.to_string())?;
        ensure(scan.holds(), || format!("{name}: rows {:?} violate", scan.violations))?;
        if name == "PSL(2,11)" {
            found = scan.three_term.iter().any(|x| x.psi != x.phi && x.psi != 0 && x.phi != 0);
        }
        tables += 1;
    }
    ensure(found, || "PSL(2,11) has no χχ̄ = 1 + ψ + φ".into())?;
    Ok(format!("PSL(2,11) has χχ̄ = 1 + ψ + φ; scan passes on {tables} tables"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("example reproduction", criterion_1),
        ("Theorem A desk scan", criterion_2),
        ("character tables", criterion_3),
        ("Theorem B equivalence", criterion_4),
        ("structure constant oracle", criterion_5),
        ("Theorem C invariants", criterion_6),
        ("Theorem D invariants", criterion_7),
        ("self-product checks", criterion_8),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} ({label}): PASS - {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({label}): FAIL - {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
