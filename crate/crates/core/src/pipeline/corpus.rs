//! Batch analysis of corpus files with per-record error isolation.

use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ingest::{parse_corpus, KnotRecord};
use crate::pipeline::analyze::analyze;
use crate::pipeline::report::Report;

/// One corpus row: a finished report, or the error that record produced.
/// Errors are isolated per record; they never abort the batch.
#[derive(Debug, Clone)]
pub enum CorpusEntry {
    Report(Box<Report>),
    Failed { name: String, error: String },
}

impl CorpusEntry {
    pub fn name(&self) -> &str {
        match self {
            CorpusEntry::Report(r) => &r.name,
            CorpusEntry::Failed { name, .. } => name,
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        match self {
            CorpusEntry::Report(r) => r.to_json_value(),
            CorpusEntry::Failed { name, error } => serde_json::json!({
                "schema": 1,
                "name": name,
                "status": "ERROR",
                "error": error,
            }),
        }
    }
}

/// Per-status counts over a corpus run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub not_bi_orderable: usize,
    pub inconclusive: usize,
    pub not_applicable: usize,
    pub cap_exceeded: usize,
    pub errors: usize,
}

impl Summary {
    fn tally(entries: &[CorpusEntry]) -> Summary {
        use crate::pipeline::analyze::Status;
        let mut s = Summary {
            total: entries.len(),
            ..Summary::default()
        };
        for e in entries {
            match e {
                CorpusEntry::Report(r) => match r.verdict.status {
                    Status::NotBiOrderable => s.not_bi_orderable += 1,
                    Status::Inconclusive => s.inconclusive += 1,
                    Status::NotApplicable => s.not_applicable += 1,
                    Status::CapExceeded => s.cap_exceeded += 1,
                },
                CorpusEntry::Failed { .. } => s.errors += 1,
            }
        }
        s
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "total": self.total,
            "not_bi_orderable": self.not_bi_orderable,
            "inconclusive": self.inconclusive,
            "not_applicable": self.not_applicable,
            "cap_exceeded": self.cap_exceeded,
            "errors": self.errors,
        })
    }

    pub fn to_text(&self) -> String {
        format!(
            "total {}: NOT_BI_ORDERABLE {}, INCONCLUSIVE {}, NOT_APPLICABLE {}, CAP_EXCEEDED {}, errors {}",
            self.total,
            self.not_bi_orderable,
            self.inconclusive,
            self.not_applicable,
            self.cap_exceeded,
            self.errors
        )
    }
}

/// Batch result: entries in input order plus the summary.
#[derive(Debug, Clone)]
pub struct CorpusReport {
    pub entries: Vec<CorpusEntry>,
    pub summary: Summary,
}

impl CorpusReport {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "summary": self.summary.to_json_value(),
            "reports": self.entries.iter().map(CorpusEntry::to_json_value).collect::<Vec<_>>(),
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serialization is infallible")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Report::CSV_HEADER);
        out.push('\n');
        for e in &self.entries {
            match e {
                CorpusEntry::Report(r) => out.push_str(&r.to_csv_row()),
                CorpusEntry::Failed { name, error } => {
                    out.push_str(&format!("{name},,ERROR,,,{}", error.replace(',', ";")));
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            match e {
                CorpusEntry::Report(r) => {
                    out.push_str(&format!(
                        "{:<24} {:<16} {}\n",
                        r.name, r.verdict.status, r.verdict.delta
                    ));
                }
                CorpusEntry::Failed { name, error } => {
                    out.push_str(&format!("{name:<24} ERROR            {error}\n"));
                }
            }
        }
        out.push_str(&format!("\nsummary: {}\n", self.summary.to_text()));
        out
    }
}

fn analyze_entry(name: &str, record: Result<KnotRecord>, cap: u32) -> CorpusEntry {
    match record.and_then(|r| analyze(&r, cap)) {
        Ok(report) => CorpusEntry::Report(Box::new(report)),
        Err(e) => CorpusEntry::Failed {
            name: name.to_string(),
            error: e.to_string(),
        },
    }
}

/// Runs analysis over already-parsed corpus entries, preserving input
/// order. `jobs` bounds the worker threads; `None` uses the global pool.
pub fn run_corpus_records(
    entries: Vec<(String, Result<KnotRecord>)>,
    cap: u32,
    jobs: Option<usize>,
) -> Result<CorpusReport> {
    let run = || {
        entries
            .into_par_iter()
            .map(|(name, record)| analyze_entry(&name, record, cap))
            .collect::<Vec<_>>()
    };
    let results = match jobs {
        Some(k) if k > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
            .install(run),
        _ => run(),
    };
    let summary = Summary::tally(&results);
    Ok(CorpusReport {
        entries: results,
        summary,
    })
}

/// Reads and analyzes a corpus file. File-level problems (unreadable file,
/// not a JSON array) abort; per-record problems are isolated into entries.
pub fn run_corpus(path: &Path, cap: u32, jobs: Option<usize>) -> Result<CorpusReport> {
    let text = std::fs::read_to_string(path)?;
    let entries = parse_corpus(&text)?;
    run_corpus_records(entries, cap, jobs)
}
