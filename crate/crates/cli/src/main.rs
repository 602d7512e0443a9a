//! `biorder`: exact non-bi-orderability verdicts for knot groups from
//! Alexander polynomials, with machine-checkable certificates.
//!
//! Exit codes: 0 = NOT_BI_ORDERABLE (or nothing to report against), 10 =
//! INCONCLUSIVE / positive root exists, 11 = NOT_APPLICABLE, 3 =
//! certificate cap exceeded, 2 = input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use biorder::exactnum::rat;
use biorder::ingest::{parse_poly, parse_record};
use biorder::pipeline::{analyze, run_corpus, DEFAULT_CERTIFICATE_CAP};
use biorder::realroots::{count_positive_roots, isolate_positive_root, polya_certificate};
use biorder::Error;
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_POSITIVE_ROOT: u8 = 10;

#[derive(Parser)]
#[command(name = "biorder", version, about = "Non-bi-orderability certificates for knot groups via Alexander polynomials", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CorpusFormat {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a single knot record file
    Analyze {
        /// Path to a record JSON file
        record: PathBuf,
        /// Cap on the certificate exponent search
        #[arg(long, default_value_t = DEFAULT_CERTIFICATE_CAP)]
        cap: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Count positive real roots of a polynomial, isolating one if present
    Roots {
        /// Polynomial expression, e.g. "t^2 - 3*t + 1"
        poly: String,
    },
    /// Search for a positivity certificate (1+t)^N * p >= 0
    Certify {
        /// Polynomial expression
        poly: String,
        /// Cap on the exponent search
        #[arg(long, default_value_t = DEFAULT_CERTIFICATE_CAP)]
        cap: u32,
    },
    /// Analyze every record in a corpus file (JSON array of records)
    Corpus {
        /// Path to the corpus JSON file
        file: PathBuf,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Cap on the certificate exponent search
        #[arg(long, default_value_t = DEFAULT_CERTIFICATE_CAP)]
        cap: u32,
        #[arg(long, value_enum, default_value_t = CorpusFormat::Text)]
        format: CorpusFormat,
    },
}

fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_INPUT)
}

fn cmd_analyze(record: &Path, cap: u32, format: ReportFormat) -> ExitCode {
    let text = match std::fs::read_to_string(record) {
        Ok(t) => t,
        Err(e) => return input_error(format_args!("{}: {e}", record.display())),
    };
    let record = match parse_record(&text) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    match analyze(&record, cap) {
        Ok(report) => {
            match format {
                ReportFormat::Json => println!("{}", report.to_json_string()),
                ReportFormat::Text => print!("{}", report.to_text()),
            }
            ExitCode::from(report.verdict.status.exit_code() as u8)
        }
        Err(e) => input_error(e),
    }
}

fn cmd_roots(poly: &str) -> ExitCode {
    let p = match parse_poly(poly) {
        Ok(p) => p,
        Err(e) => return input_error(e),
    };
    let count = match count_positive_roots(&p) {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    println!("positive real roots: {count}");
    if count == 0 {
        return ExitCode::from(EXIT_OK);
    }
    let width = rat(1, 1 << 20);
    match isolate_positive_root(&p, &width) {
        Ok(iv) if iv.is_point() => println!("exact rational root: t = {}", iv.lo),
        Ok(iv) => println!("isolating interval: ({}, {}], width <= 2^-20", iv.lo, iv.hi),
        Err(e) => return input_error(e),
    }
    ExitCode::from(EXIT_POSITIVE_ROOT)
}

fn cmd_certify(poly: &str, cap: u32) -> ExitCode {
    let p = match parse_poly(poly) {
        Ok(p) => p,
        Err(e) => return input_error(e),
    };
    match polya_certificate(&p, cap) {
        Ok(cert) => {
            let n = cert
                .polya_exponent
                .expect("search always sets the exponent");
            println!("polya exponent: {n}");
            println!("multiplier:     {}", cert.multiplier);
            println!("product:        {}", cert.product);
            ExitCode::from(EXIT_OK)
        }
        Err(e @ Error::HasPositiveRoot) => {
            println!("no certificate: {e}");
            ExitCode::from(EXIT_POSITIVE_ROOT)
        }
        Err(e @ Error::CertificateCapExceeded { .. }) => {
            println!("no certificate: {e}");
            ExitCode::from(EXIT_CAP)
        }
        Err(e) => input_error(e),
    }
}

fn cmd_corpus(file: &Path, jobs: Option<usize>, cap: u32, format: CorpusFormat) -> ExitCode {
    match run_corpus(file, cap, jobs) {
        Ok(report) => {
            match format {
                CorpusFormat::Json => println!("{}", report.to_json_string()),
                CorpusFormat::Csv => print!("{}", report.to_csv()),
                CorpusFormat::Text => print!("{}", report.to_text()),
            }
            ExitCode::from(EXIT_OK)
        }
        Err(e) => input_error(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Analyze {
            record,
            cap,
            format,
        } => cmd_analyze(record, *cap, *format),
        Command::Roots { poly } => cmd_roots(poly),
        Command::Certify { poly, cap } => cmd_certify(poly, *cap),
        Command::Corpus {
            file,
            jobs,
            cap,
            format,
        } => cmd_corpus(file, *jobs, *cap, *format),
    }
}
