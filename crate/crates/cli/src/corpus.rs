//! Corpus files: a JSON list of named group specs with optional expected
//! verdicts.

use std::collections::BTreeSet;

use ccg_core::classify::Shape;
use ccg_core::GroupSpec;
use serde::{Deserialize, Serialize};

/// The corpus compiled into the binary; `ccg verify` runs it by default.
pub const DEFAULT_CORPUS: &str = include_str!("../corpus/default.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub triangle_free: bool,
    pub shape: Shape,
    /// Whether the element-order audit should pass.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lemma1: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub spec: GroupSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusError(pub String);

impl std::fmt::Display for CorpusError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CorpusError {}

/// Parses a corpus and rejects duplicate names.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let entries: Vec<CorpusEntry> =
        serde_json::from_str(text).map_err(|e| CorpusError(format!("corpus: {e}")))?;
    let mut seen = BTreeSet::new();
    for e in &entries {
        if !seen.insert(e.name.as_str()) {
            return Err(CorpusError(format!("corpus: duplicate name {:?}", e.name)));
        }
    }
    Ok(entries)
}

pub fn to_json(entries: &[CorpusEntry]) -> String {
    let mut s = serde_json::to_string_pretty(entries).expect("corpus entries serialize");
    s.push('\n');
    s
}
