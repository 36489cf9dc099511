//! Library half of the `ccg` tool: corpus parsing, verification runs and
//! reports. The binary in `main.rs` is a thin argument parser over this.

pub mod corpus;
pub mod report;

pub use corpus::{parse_corpus, CorpusEntry, Expected, DEFAULT_CORPUS};
pub use report::{corpus_hash, run_corpus, BuildFailure, Report, REPORT_FORMAT};

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const BUILD: i32 = 3;
}
