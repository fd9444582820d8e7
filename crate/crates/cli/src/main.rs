use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use kklab::chartab::dixon_character_table;
use kklab::classes::{conjugacy_classes, PatternTag};
use kklab::theorems::theorem_a_scan;
use kklab::workbench::{
    all_builtin_entries, analyze_all, builtin_examples, hit_entries, load_catalog, resolve_group,
    run_analyze, search_condition, simple_catalog, AnalyzeOptions, Condition, SearchFilter,
    WorkbenchError,
};

#[derive(Parser)]
#[command(name = "kklab", version, about = "Products of conjugacy classes in finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class patterns, theorem checks and character table digest for one group
    Analyze {
        /// Built-in name or id, or `path#name` for a catalog file
        #[arg(long)]
        group: String,
        /// Print every character value
        #[arg(long)]
        chartab: bool,
        #[arg(long)]
        json: bool,
    },
    /// Classes satisfying a KK⁻¹ condition across a catalog
    Search {
        #[arg(long)]
        condition: String,
        #[arg(long, default_value_t = 5000)]
        max_order: usize,
        /// Catalog file; defaults to the built-in examples
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Exact character table
    Chartab {
        #[arg(long)]
        group: String,
        /// Write the table to a file, JSON when the name ends in `.json`
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Theorem A check on the fixed simple-group catalog
    ScanSimple {
        #[arg(long)]
        json: bool,
    },
    /// Full property suite
    Verify {
        /// Every built-in group
        #[arg(long)]
        all: bool,
        /// Groups to verify (repeatable)
        #[arg(long)]
        group: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

/// Input problems exit with 2, failed assertions with 1.
enum Failure {
    Input(String),
    Violation,
}

impl From<WorkbenchError> for Failure {
    fn from(e: WorkbenchError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn verdict(ok: bool) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Analyze { group, chartab, json } => {
            let entry = resolve_group(&group)?;
            let options = AnalyzeOptions {
                table_rows: chartab,
                ..AnalyzeOptions::default()
            };
            let report = run_analyze(&entry, &options)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            verdict(report.violations().is_empty())
        }
        Command::Search {
            condition,
            max_order,
            catalog,
            json,
        } => {
            let condition: Condition = condition.parse()?;
            let entries = match catalog {
                Some(path) => load_catalog(path)?,
                None => builtin_examples(),
            };
            let filter = SearchFilter {
                orders: 1..=max_order,
                ..SearchFilter::default()
            };
            let hits = search_condition(&entries, condition, &filter)?;
            let mut reports = Vec::new();
            for h in &hits {
                if !reports.iter().any(|r: &&kklab::workbench::AnalysisReport| r.name == h.entry) {
                    reports.push(&*h.report);
                }
            }
            let ok = reports.iter().all(|r| r.violations().is_empty());
            if json {
                let out = json!({
                    "condition": condition.as_str(),
                    "max_order": max_order,
                    "hits": hits,
                    "reports": reports,
                });
                println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                for h in &hits {
                    let d = h.pattern.d_index.map_or(String::new(), |d| format!(" D={d} m={}", h.pattern.m));
                    println!("{}\tclass {}\t|K|={}\t{:?}{d}", h.entry, h.class, h.class_size, h.pattern.tag);
                }
                println!("{} hits in {} groups: {}", hits.len(), hit_entries(&hits).len(), hit_entries(&hits).join(" "));
                for r in &reports {
                    for v in r.violations() {
                        println!("violation in {}: {v}", r.name);
                    }
                }
            }
            verdict(ok)
        }
        Command::Chartab { group, export } => {
            let entry = resolve_group(&group)?;
            let g = entry.build()?;
            let p = conjugacy_classes(&g);
            let t = dixon_character_table(&g, &p).map_err(|e| Failure::Input(e.to_string()))?;
            let table = t.export(&entry.name);
            print!("{}", table.to_text());
            if let Some(path) = export {
                let body = if path.extension().is_some_and(|e| e == "json") {
                    table.to_json()
                } else {
                    table.to_text()
                };
                std::fs::write(&path, body).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            match t.check_orthogonality() {
                Ok(()) => Ok(()),
                Err(e) => {
                    eprintln!("violation: {e}");
                    Err(Failure::Violation)
                }
            }
        }
        Command::ScanSimple { json } => {
            let mut groups = Vec::new();
            for e in simple_catalog() {
                groups.push((e.name.clone(), e.build()?));
            }
            let scans = theorem_a_scan(&groups).map_err(|e| Failure::Input(e.to_string()))?;
            let ok = scans.iter().all(|s| s.holds());
            if json {
                println!("{}", serde_json::to_string_pretty(&scans).expect("serializable"));
            } else {
                for s in &scans {
                    let count = |t| s.hits_with(t).count();
                    println!(
                        "{}\torder {}\tOneD {}\tOneDDinv {}\tOneKKinv {}\t{}",
                        s.name,
                        s.order,
                        count(PatternTag::OneD),
                        count(PatternTag::OneDDinv),
                        count(PatternTag::OneKKinv),
                        if s.holds() { "pass" } else { "FAIL" }
                    );
                }
            }
            verdict(ok)
        }
        Command::Verify { all, group, json } => {
            let entries = if all {
                all_builtin_entries()
            } else if group.is_empty() {
                return Err(Failure::Input("verify needs --all or at least one --group".into()));
            } else {
                group.iter().map(|g| resolve_group(g)).collect::<Result<Vec<_>, _>>()?
            };
            let reports = analyze_all(&entries, &AnalyzeOptions::default())?;
            let ok = reports.iter().all(|r| r.violations().is_empty());
            if json {
                let out: Vec<_> = reports
                    .iter()
                    .map(|r| json!({"name": r.name, "order": r.order, "violations": r.violations()}))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                for r in &reports {
                    let v = r.violations();
                    println!("{}\t{}\t{}", if v.is_empty() { "PASS" } else { "FAIL" }, r.order, r.name);
                    for line in v {
                        println!("  {line}");
                    }
                }
            }
            verdict(ok)
        }
    }
}
