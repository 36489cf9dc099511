//! Corpus verification and the `ccg-report/1` document.

use std::collections::BTreeMap;
use std::time::Instant;

use ccg_core::classify::{all_orders_prime, lemma1_audit, verify_group_with_graph, Lemma1Report};
use ccg_core::{build_group, Verdict};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::corpus::{CorpusEntry, Expected};

pub const REPORT_FORMAT: &str = "ccg-report/1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub name: String,
    pub order: usize,
    pub degree: usize,
    pub class_count: usize,
    pub graph: GraphSummary,
    pub verdict: Verdict,
    pub lemma1: Lemma1Report,
    /// Set for triangle-free groups of odd order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odd_orders_prime: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mismatches: Vec<String>,
    pub passed: bool,
}

/// Everything that must be byte-identical across runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deterministic {
    pub format: String,
    pub tool_version: String,
    pub corpus_hash: String,
    pub passed: usize,
    pub failed: usize,
    pub entries: Vec<EntryReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub threads: usize,
    pub total_ms: f64,
    pub entries_ms: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub deterministic: Deterministic,
    pub timing: Timing,
}

impl Report {
    /// 0 when every entry passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.deterministic.failed != 0)
    }

    pub fn deterministic_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.deterministic).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// A corpus entry whose spec failed to build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildFailure {
    pub name: String,
    pub message: String,
}

impl std::fmt::Display for BuildFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.name, self.message)
    }
}

impl std::error::Error for BuildFailure {}

pub fn corpus_hash(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn check_entry(entry: &CorpusEntry) -> Result<(EntryReport, f64), BuildFailure> {
    let start = Instant::now();
    let g = build_group(&entry.spec).map_err(|e| BuildFailure {
        name: entry.name.clone(),
        message: e.to_string(),
    })?;
    let (verdict, graph) = verify_group_with_graph(&g);
    let lemma1 = lemma1_audit(&g);
    let odd_orders_prime =
        (g.order() % 2 == 1 && verdict.triangle_free).then(|| all_orders_prime(&g));

    let mut mismatches = Vec::new();
    if !verdict.consistent {
        mismatches.push(format!(
            "triangle_free={} but shape={}",
            verdict.triangle_free, verdict.shape
        ));
    }
    if let Some(audit) = &verdict.two_group_audit {
        if !audit.equivalence_holds() {
            mismatches.push("2-group equivalence broken".into());
        }
        if !audit.corollaries_hold() {
            mismatches.push("2-group corollaries broken".into());
        }
    }
    if verdict.triangle_free && !lemma1.passed() {
        mismatches.push("triangle-free but the element-order audit fails".into());
    }
    if odd_orders_prime == Some(false) {
        mismatches.push("odd order, triangle-free, but a non-prime element order".into());
    }
    if let Some(exp) = &entry.expected {
        if exp.triangle_free != verdict.triangle_free {
            mismatches.push(format!(
                "expected triangle_free={}, got {}",
                exp.triangle_free, verdict.triangle_free
            ));
        }
        if exp.shape != verdict.shape {
            mismatches.push(format!("expected shape {}, got {}", exp.shape, verdict.shape));
        }
        if let Some(want) = exp.lemma1 {
            if want != lemma1.passed() {
                mismatches.push(format!("expected audit pass={want}, got {}", lemma1.passed()));
            }
        }
    }
    let report = EntryReport {
        name: entry.name.clone(),
        order: g.order(),
        degree: g.degree(),
        class_count: g.conjugacy_classes().len(),
        graph: GraphSummary {
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
        },
        passed: mismatches.is_empty(),
        verdict,
        lemma1,
        odd_orders_prime,
        expected: entry.expected.clone(),
        mismatches,
    };
    Ok((report, start.elapsed().as_secs_f64() * 1e3))
}

/// Verifies every entry on a pool of `threads` workers (rayon's default
/// when `None`). Entries are reported in name order.
pub fn run_corpus(
    entries: &[CorpusEntry],
    corpus_hash: &str,
    threads: Option<usize>,
) -> Result<Report, BuildFailure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder.build().expect("thread pool");
    let start = Instant::now();
    let results: Vec<Result<(EntryReport, f64), BuildFailure>> =
        pool.install(|| entries.par_iter().map(check_entry).collect());
    let total_ms = start.elapsed().as_secs_f64() * 1e3;

    let mut reports = Vec::with_capacity(results.len());
    let mut entries_ms = BTreeMap::new();
    for r in results {
        let (rep, ms) = r?;
        entries_ms.insert(rep.name.clone(), ms);
        reports.push(rep);
    }
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = reports.iter().filter(|r| r.passed).count();
    Ok(Report {
        deterministic: Deterministic {
            format: REPORT_FORMAT.to_string(),
            tool_version: TOOL_VERSION.to_string(),
            corpus_hash: corpus_hash.to_string(),
            passed,
            failed: reports.len() - passed,
            entries: reports,
        },
        timing: Timing {
            threads: pool.current_num_threads(),
            total_ms,
            entries_ms,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse_corpus;

    fn corpus(text: &str) -> Vec<CorpusEntry> {
        parse_corpus(text).unwrap()
    }

    #[test]
    fn small_corpus_passes() {
        let text = r#"[
          {"name": "Q8", "spec": {"kind": "generalized_quaternion", "order": 8},
           "expected": {"triangle_free": true, "shape": "two_group_real_exp4"}},
          {"name": "D8", "spec": {"kind": "dihedral", "n": 4},
           "expected": {"triangle_free": true, "shape": "two_group_real_exp4"}},
          {"name": "S4", "spec": {"kind": "symmetric", "n": 4},
           "expected": {"triangle_free": true, "shape": "solv_6"}}
        ]"#;
        let r = run_corpus(&corpus(text), &corpus_hash(text), Some(2)).unwrap();
        assert_eq!(r.deterministic.entries.len(), 3);
        assert_eq!(r.deterministic.failed, 0);
        assert_eq!(r.exit_code(), 0);
        let names: Vec<&str> = r.deterministic.entries.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, ["D8", "Q8", "S4"]);
    }

    #[test]
    fn wrong_expectation_fails() {
        let text = r#"[{"name": "Z8", "spec": {"kind": "cyclic", "n": 8},
           "expected": {"triangle_free": true, "shape": "none"}}]"#;
        let r = run_corpus(&corpus(text), &corpus_hash(text), Some(1)).unwrap();
        assert_eq!(r.deterministic.failed, 1);
        assert_eq!(r.exit_code(), 1);
        assert!(!r.deterministic.entries[0].mismatches.is_empty());
    }

    #[test]
    fn empty_corpus() {
        let r = run_corpus(&[], &corpus_hash("[]"), None).unwrap();
        assert!(r.deterministic.entries.is_empty());
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn build_failure_names_the_entry() {
        let text = r#"[{"name": "big", "spec": {"kind": "psl3", "q": 5}}]"#;
        let err = run_corpus(&corpus(text), "", Some(1)).unwrap_err();
        assert_eq!(err.name, "big");
    }

    #[test]
    fn hash_is_sha256() {
        assert_eq!(
            corpus_hash(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
