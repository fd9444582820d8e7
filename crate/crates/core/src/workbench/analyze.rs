use std::fmt::Write as _;

use serde::Serialize;

use crate::chartab::{dixon_character_table_with_cap, CharacterTable, CHARTAB_ORDER_CAP};
use crate::classes::{
    conjugacy_classes, kk_inverse, kkinv_pattern, structure_constants, ClassPartition,
    KKInvPattern, PatternTag,
};
use crate::group::{
    abelian_invariants, derived_series, element_set, is_elementary_abelian, is_simple,
    subgroup_closure, AbelianInvariants, ElementSet, GroupTable,
};
use crate::theorems::{
    analyze_theorem_c, check_theorem_d, coprime_degree_sweep, lemma_properties_sweep,
    section6_self_product_scan, theorem_b_with_table, CoprimeDegreeReport, LemmaSweepReport,
    SelfProductReport, TheoremBSweep, TheoremCReport, TheoremDReport,
};

use super::catalog::{CatalogEntry, Expected};
use super::WorkbenchError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Compute the character table (and the checks that need it) when the
    /// order is within `chartab_cap`.
    pub character_table: bool,
    pub chartab_cap: usize,
    /// Put every character value into the report, not just the digest.
    pub table_rows: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            character_table: true,
            chartab_cap: CHARTAB_ORDER_CAP,
            table_rows: false,
        }
    }
}

impl AnalyzeOptions {
    pub fn class_algebra_only() -> Self {
        AnalyzeOptions {
            character_table: false,
            ..AnalyzeOptions::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub index: usize,
    pub size: usize,
    pub element_order: usize,
    pub representative: String,
    pub inverse: usize,
    pub real: bool,
    /// Number of classes in `KK⁻¹`, identity included.
    pub eta_kkinv: Option<usize>,
    pub pattern: Option<KKInvPattern>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableDigest {
    pub degrees: Vec<u64>,
    pub conductor: usize,
    pub prime: u64,
    pub orthogonality: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orthogonality_error: Option<String>,
    /// Character-side structure constants equal the counted ones.
    pub structure_constants_agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub order: usize,
    pub exponent: usize,
    pub abelian: bool,
    pub nonabelian_simple: bool,
    pub class_count: usize,
    pub classes: Vec<ClassSummary>,
    pub lemma_sweep: LemmaSweepReport,
    pub theorem_c: Vec<TheoremCReport>,
    pub theorem_d: Vec<TheoremDReport>,
    pub character_table: Option<TableDigest>,
    pub theorem_b: Option<TheoremBSweep>,
    pub coprime_degree: Option<CoprimeDegreeReport>,
    pub self_products: Option<SelfProductReport>,
    pub expected_mismatches: Vec<String>,
    /// Noteworthy facts that are not violations.
    pub observations: Vec<String>,
}

impl AnalysisReport {
    pub fn classes_with(&self, tag: PatternTag) -> impl Iterator<Item = &ClassSummary> {
        self.classes
            .iter()
            .filter(move |c| c.pattern.as_ref().is_some_and(|p| p.tag == tag))
    }

    /// Every failed assertion, empty when the group passes.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let total: usize = self.classes.iter().map(|c| c.size).sum();
        if total != self.order {
            out.push(format!("class sizes sum to {total}, not {}", self.order));
        }
        out.extend(self.lemma_sweep.failures.iter().cloned());
        if self.nonabelian_simple {
            for c in &self.classes {
                if let Some(p) = &c.pattern {
                    if matches!(p.tag, PatternTag::OneD | PatternTag::OneDDinv) {
                        out.push(format!("simple group has class {} with pattern {:?}", c.index, p.tag));
                    }
                }
            }
        }
        for r in &self.theorem_c {
            if !r.holds() {
                out.push(format!("Theorem C fails for class {}: {}", r.k, r.violations.join("; ")));
            }
        }
        for r in &self.theorem_d {
            if !r.holds() {
                out.push(format!("Theorem D fails for class {}", r.k));
            }
        }
        if let Some(t) = &self.character_table {
            let sq: u64 = t.degrees.iter().map(|d| d * d).sum();
            if sq != self.order as u64 {
                out.push(format!("squared degrees sum to {sq}, not {}", self.order));
            }
            if let Some(e) = &t.orthogonality_error {
                out.push(format!("orthogonality: {e}"));
            }
            if !t.structure_constants_agree {
                out.push("character-side structure constants disagree".into());
            }
        }
        if let Some(b) = &self.theorem_b {
            for d in &b.discrepancies {
                out.push(format!("Theorem B discrepancy at K={}, D={}", d.k, d.d));
            }
        }
        if let Some(c) = &self.coprime_degree {
            for (chi, k) in &c.failures {
                out.push(format!("coprime degree and class size but |χ{chi}(g{k})|² ∉ {{0, χ(1)²}}"));
            }
        }
        if let Some(s) = &self.self_products {
            for chi in &s.violations {
                out.push(format!("χ{chi}·χ̄{chi} confined to 1, χ, χ̄"));
            }
        }
        out.extend(self.expected_mismatches.iter().map(|m| format!("expected: {m}")));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let yn = |b: bool| if b { "yes" } else { "no" };
        match &self.id {
            Some(id) => writeln!(s, "group: {} ({id})", self.name),
            None => writeln!(s, "group: {}", self.name),
        }
        .unwrap();
        writeln!(s, "order: {}", self.order).unwrap();
        writeln!(s, "exponent: {}", self.exponent).unwrap();
        writeln!(s, "abelian: {}", yn(self.abelian)).unwrap();
        writeln!(s, "nonabelian simple: {}", yn(self.nonabelian_simple)).unwrap();
        writeln!(s, "classes: {}", self.class_count).unwrap();
        writeln!(s, "{:>5} {:>6} {:>5} {:>4} {:>4} {:>4}  pattern", "class", "size", "ord", "real", "inv", "eta").unwrap();
        for c in &self.classes {
            let eta = c.eta_kkinv.map_or("-".to_string(), |e| e.to_string());
            let pattern = match &c.pattern {
                None => "-".to_string(),
                Some(p) => {
                    let mut t = format!("{:?}", p.tag);
                    if let Some(d) = p.d_index {
                        write!(t, " D={d} m={}", p.m).unwrap();
                    }
                    if p.real_self_product {
                        t.push_str(" (KK⁻¹ = 1 ∪ K)");
                    }
                    t
                }
            };
            writeln!(
                s,
                "{:>5} {:>6} {:>5} {:>4} {:>4} {:>4}  {pattern}",
                c.index,
                c.size,
                c.element_order,
                yn(c.real),
                c.inverse,
                eta
            )
            .unwrap();
        }
        writeln!(
            s,
            "class identities: {} triples, {} failures",
            self.lemma_sweep.triples_checked,
            self.lemma_sweep.failures.len()
        )
        .unwrap();
        for r in &self.theorem_c {
            writeln!(
                s,
                "Theorem C class {}: |K|={} |D|={} |<K>|={} |<D>|={} cases={:?} holds={}",
                r.k,
                r.k_size,
                r.d_size,
                r.k_closure_order,
                r.d_closure_order,
                r.cases,
                yn(r.holds())
            )
            .unwrap();
        }
        for r in &self.theorem_d {
            let pn = match (r.p, r.n) {
                (Some(p), Some(n)) => format!("p={p} n={n}"),
                _ => "not elementary abelian".into(),
            };
            writeln!(
                s,
                "Theorem D class {}: |K|={} |<K>|={} {pn} holds={}",
                r.k,
                r.k_size,
                r.k_closure_order,
                yn(r.holds())
            )
            .unwrap();
        }
        if let Some(t) = &self.character_table {
            let degrees: Vec<String> = t.degrees.iter().map(u64::to_string).collect();
            writeln!(s, "character degrees: {}", degrees.join(" ")).unwrap();
            writeln!(s, "conductor: {}", t.conductor).unwrap();
            writeln!(s, "orthogonality: {}", yn(t.orthogonality)).unwrap();
            writeln!(s, "structure constants via characters: {}", yn(t.structure_constants_agree)).unwrap();
            if let Some(rows) = &t.rows {
                for (i, row) in rows.iter().enumerate() {
                    writeln!(s, "X.{}\t{}", i + 1, row.join("\t")).unwrap();
                }
            }
        }
        if let Some(b) = &self.theorem_b {
            writeln!(
                s,
                "Theorem B: {} pairs, {} matches, {} discrepancies",
                b.pairs_checked,
                b.matches.len(),
                b.discrepancies.len()
            )
            .unwrap();
        }
        if let Some(sp) = &self.self_products {
            let three: Vec<String> = sp
                .three_term
                .iter()
                .map(|t| format!("{}={}+{}", t.chi, t.psi, t.phi))
                .collect();
            writeln!(s, "self products 1+psi+phi: {}", if three.is_empty() { "none".into() } else { three.join(" ") }).unwrap();
        }
        for o in &self.observations {
            writeln!(s, "observation: {o}").unwrap();
        }
        let violations = self.violations();
        if violations.is_empty() {
            writeln!(s, "verdict: pass").unwrap();
        } else {
            for v in &violations {
                writeln!(s, "violation: {v}").unwrap();
            }
            writeln!(s, "verdict: FAIL").unwrap();
        }
        s
    }
}

pub fn run_analyze(entry: &CatalogEntry, options: &AnalyzeOptions) -> Result<AnalysisReport, WorkbenchError> {
    let g = entry.build()?;
    analyze_group(&entry.name, entry.id.clone(), &g, entry.expected.as_ref(), options)
}

pub fn analyze_group(
    name: &str,
    id: Option<String>,
    g: &GroupTable,
    expected: Option<&Expected>,
    options: &AnalyzeOptions,
) -> Result<AnalysisReport, WorkbenchError> {
    let p = conjugacy_classes(g);
    let r = p.len();
    let mut classes = Vec::with_capacity(r);
    let mut patterns = vec![None; r];
    for k in 0..r {
        let (eta, pattern) = if k == 0 {
            (None, None)
        } else {
            let product = kk_inverse(g, &p, k)?;
            let pattern = kkinv_pattern(g, &p, k)?;
            patterns[k] = Some(pattern.clone());
            (Some(product.support().len()), Some(pattern))
        };
        classes.push(ClassSummary {
            index: k,
            size: p.size(k),
            element_order: p.element_order(k),
            representative: g.label(p.representative(k)),
            inverse: p.inverse_class(k),
            real: p.inverse_class(k) == k,
            eta_kkinv: eta,
            pattern,
        });
    }

    let mut observations = Vec::new();
    let mut theorem_c = Vec::new();
    let mut theorem_d = Vec::new();
    for (k, pattern) in patterns.iter().enumerate() {
        match pattern.as_ref().map(|p| p.tag) {
            Some(PatternTag::OneD) => {
                let report = analyze_theorem_c(g, &p, k)?;
                if report.k_derived_length.is_none() {
                    observations.push(format!("<K> for class {k} is not solvable"));
                }
                theorem_c.push(report);
            }
            Some(PatternTag::OneKKinv) => theorem_d.push(check_theorem_d(g, &p, k)?),
            _ => {}
        }
    }

    let nonabelian_simple = g.order() > 1 && is_simple(g)?.is_nonabelian_simple();
    let lemma_sweep = lemma_properties_sweep(g)?;

    let mut report = AnalysisReport {
        name: name.to_string(),
        id,
        order: g.order(),
        exponent: g.exponent(),
        abelian: g.is_abelian(),
        nonabelian_simple,
        class_count: r,
        classes,
        lemma_sweep,
        theorem_c,
        theorem_d,
        character_table: None,
        theorem_b: None,
        coprime_degree: None,
        self_products: None,
        expected_mismatches: Vec::new(),
        observations,
    };

    if options.character_table {
        if g.order() <= options.chartab_cap {
            let t = dixon_character_table_with_cap(g, &p, options.chartab_cap)?;
            fill_table_checks(&mut report, g, &p, &t, options)?;
        } else {
            report.observations.push(format!(
                "character table skipped: order {} exceeds {}",
                g.order(),
                options.chartab_cap
            ));
        }
    }

    if let Some(e) = expected {
        report.expected_mismatches = check_expected(g, &p, &report, e)?;
    }
    Ok(report)
}

fn fill_table_checks(
    report: &mut AnalysisReport,
    g: &GroupTable,
    p: &ClassPartition,
    t: &CharacterTable,
    options: &AnalyzeOptions,
) -> Result<(), WorkbenchError> {
    let orthogonality_error = t.check_orthogonality().err().map(|e| e.to_string());
    let sc = structure_constants(g, p);
    let r = p.len();
    let via = t.all_structure_constants_via_characters()?;
    let agree = (0..r).all(|i| (0..r).all(|j| (0..r).all(|k| via[(i * r + j) * r + k] == sc.get(i, j, k))));
    report.character_table = Some(TableDigest {
        degrees: t.degrees().to_vec(),
        conductor: t.conductor(),
        prime: t.prime(),
        orthogonality: orthogonality_error.is_none(),
        orthogonality_error,
        structure_constants_agree: agree,
        rows: options
            .table_rows
            .then(|| (0..t.len()).map(|chi| (0..r).map(|k| t.value_string(chi, k)).collect()).collect()),
    });
    report.theorem_b = Some(theorem_b_with_table(g, p, t)?);
    report.coprime_degree = Some(coprime_degree_sweep(p, t));
    report.self_products = Some(section6_self_product_scan(t)?);
    Ok(())
}

fn closure(g: &GroupTable, elements: &[usize]) -> Result<ElementSet, WorkbenchError> {
    Ok(subgroup_closure(g, &element_set(g, elements)?)?)
}

fn check_expected(
    g: &GroupTable,
    p: &ClassPartition,
    report: &AnalysisReport,
    e: &Expected,
) -> Result<Vec<String>, WorkbenchError> {
    let mut out = Vec::new();
    fn cmp(out: &mut Vec<String>, what: &str, want: &dyn std::fmt::Debug, got: &dyn std::fmt::Debug) {
        let (w, g) = (format!("{want:?}"), format!("{got:?}"));
        if w != g {
            out.push(format!("{what}: expected {w}, computed {g}"));
        }
    }
    if let Some(order) = e.order {
        cmp(&mut out, "order", &order, &g.order());
    }
    if let Some(sizes) = &e.class_sizes {
        cmp(&mut out, "class sizes", sizes, &p.sizes());
    }
    let class_level = e.k_size.is_some()
        || e.d_size.is_some()
        || e.pattern.is_some()
        || e.eta_kkinv.is_some()
        || e.k_closure_order.is_some()
        || e.d_closure_order.is_some()
        || e.k_invariants.is_some()
        || e.d_invariants.is_some()
        || e.k_derived_length.is_some()
        || e.d_elementary_abelian.is_some()
        || e.d_involutions.is_some()
        || e.theorem_d_p.is_some()
        || e.theorem_d_n.is_some();
    let Some(k_word) = &e.k_word else {
        if class_level {
            out.push("class-level facts given without k_word".into());
        }
        return Ok(out);
    };
    let k = p.class_of(g.word(k_word)?);
    if k == 0 {
        out.push("k_word names the identity".into());
        return Ok(out);
    }
    let summary = &report.classes[k];
    let pattern = summary.pattern.as_ref().expect("non-identity class");
    let d = match &e.d_word {
        Some(w) => {
            let d = p.class_of(g.word(w)?);
            if pattern.d_index.is_some_and(|pd| pd != d && pd != p.inverse_class(d)) {
                out.push(format!("d_word names class {d}, pattern has D = {:?}", pattern.d_index));
            }
            Some(d)
        }
        None => pattern.d_index,
    };

    if let Some(size) = e.k_size {
        cmp(&mut out, "|K|", &size, &summary.size);
    }
    if let Some(tag) = e.pattern {
        cmp(&mut out, "pattern", &tag, &pattern.tag);
    }
    if let Some(eta) = e.eta_kkinv {
        cmp(&mut out, "eta(KK⁻¹)", &eta, &summary.eta_kkinv.unwrap_or(0));
    }
    let k_closure = closure(g, p.class(k))?;
    if let Some(o) = e.k_closure_order {
        cmp(&mut out, "|<K>|", &o, &k_closure.len());
    }
    if let Some(inv) = &e.k_invariants {
        cmp(&mut out, "<K> invariants", &AbelianInvariants::Abelian(inv.clone()), &abelian_invariants(g, &k_closure)?);
    }
    if let Some(dl) = e.k_derived_length {
        cmp(&mut out, "dl(<K>)", &Some(dl), &derived_series(g, &k_closure)?.derived_length);
    }
    if let Some(tp) = e.theorem_d_p {
        let r = check_theorem_d(g, p, k)?;
        cmp(&mut out, "Theorem D p", &Some(tp), &r.p);
        if let Some(tn) = e.theorem_d_n {
            cmp(&mut out, "Theorem D n", &Some(tn), &r.n);
        }
    }

    let d_facts = e.d_size.is_some()
        || e.d_closure_order.is_some()
        || e.d_invariants.is_some()
        || e.d_elementary_abelian.is_some()
        || e.d_involutions.is_some();
    if d_facts {
        let Some(d) = d else {
            out.push("D facts given but no class D".into());
            return Ok(out);
        };
        if let Some(size) = e.d_size {
            cmp(&mut out, "|D|", &size, &p.size(d));
        }
        let d_closure = closure(g, p.class(d))?;
        if let Some(o) = e.d_closure_order {
            cmp(&mut out, "|<D>|", &o, &d_closure.len());
        }
        if let Some(inv) = &e.d_invariants {
            cmp(&mut out, "<D> invariants", &AbelianInvariants::Abelian(inv.clone()), &abelian_invariants(g, &d_closure)?);
        }
        if let Some(el) = e.d_elementary_abelian {
            cmp(&mut out, "<D> elementary abelian", &el, &is_elementary_abelian(g, &d_closure)?.is_some());
        }
        if let Some(n) = e.d_involutions {
            let count = d_closure.elements().iter().filter(|&&x| g.element_order(x) == Ok(2)).count();
            cmp(&mut out, "involutions in <D>", &n, &count);
        }
    }
    Ok(out)
}
