//! Verdict assembly and batch execution.
//!
//! [`analyze`] turns one validated record into a [`Report`]: it computes the
//! canonical Alexander polynomial by the record's route, checks the
//! hypotheses the criterion needs (rationally homologically fibered for knot
//! routes, edge-map surjectivity for HNN presentations), and then decides
//! the positive-root question, attaching self-verifying evidence either way.
//! [`run_corpus`] maps it over a record file, optionally in parallel, with
//! input-ordered deterministic output.

mod analyze;
mod corpus;
mod report;

pub use analyze::{
    analyze, analyze_delta, Evidence, NaReason, Status, Verdict, DEFAULT_CERTIFICATE_CAP,
    DEFAULT_ISOLATION_WIDTH_LOG2,
};
pub use corpus::{run_corpus, run_corpus_records, CorpusEntry, CorpusReport, Summary};
pub use report::Report;
