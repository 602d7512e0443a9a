//! Black-box tests of the `biorder` binary: subcommands, formats, exit
//! codes.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn biorder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biorder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_temp(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().expect("temp file");
    f.write_all(content.as_bytes()).expect("write");
    f
}

const TREFOIL: &str = r#"{"name":"trefoil","source":{"seifert_matrix":[[-1,1],[0,-1]]},
    "flags":{"minimal_genus_asserted":true,"ambient_qhs3_asserted":true}}"#;
const FIG8: &str = r#"{"name":"figure-eight","source":{"seifert_matrix":[[1,1],[0,-1]]},
    "flags":{"minimal_genus_asserted":true,"ambient_qhs3_asserted":true}}"#;
const UNKNOT: &str = r#"{"name":"unknot","source":{"alexander_poly":"1","genus":0}}"#;

#[test]
fn analyze_exit_codes_track_status() {
    let f = write_temp(TREFOIL);
    let out = biorder(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("NOT_BI_ORDERABLE"));

    let f = write_temp(FIG8);
    let out = biorder(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(10));
    assert!(stdout(&out).contains("INCONCLUSIVE"));

    let f = write_temp(UNKNOT);
    let out = biorder(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(11));
    assert!(stdout(&out).contains("NOT_APPLICABLE"));

    let f = write_temp(TREFOIL);
    let out = biorder(&["analyze", f.path().to_str().unwrap(), "--cap", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("CAP_EXCEEDED"));
}

#[test]
fn analyze_json_format_is_schema_one() {
    let f = write_temp(TREFOIL);
    let out = biorder(&["analyze", f.path().to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["status"], "NOT_BI_ORDERABLE");
    assert_eq!(v["evidence"]["type"], "positivity_certificate");
    assert_eq!(v["delta"]["coeffs"], serde_json::json!(["1", "-1", "1"]));
}

#[test]
fn analyze_input_errors_exit_two() {
    let out = biorder(&["analyze", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));
    let f = write_temp(r#"{"name":"bad","source":{}}"#);
    let out = biorder(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn roots_exit_mirrors_count() {
    let out = biorder(&["roots", "t^2 - t + 1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("positive real roots: 0"));

    let out = biorder(&["roots", "t^2 - 3*t + 1"]);
    assert_eq!(out.status.code(), Some(10));
    let text = stdout(&out);
    assert!(text.contains("positive real roots: 2"));
    assert!(text.contains("isolating interval"));

    let out = biorder(&["roots", "t - 2"]);
    assert_eq!(out.status.code(), Some(10));
    assert!(stdout(&out).contains("exact rational root: t = 2"));

    let out = biorder(&["roots", "t +* 1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn certify_prints_exponent_and_product() {
    let out = biorder(&["certify", "t^2 - t + 1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("polya exponent: 1"));
    assert!(text.contains("product:        1 + t^3"));

    let out = biorder(&["certify", "t^2 - 3*t + 1"]);
    assert_eq!(out.status.code(), Some(10));
    assert!(stdout(&out).contains("no certificate"));

    let out = biorder(&["certify", "t^2 - t + 1", "--cap", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn corpus_formats_and_summary() {
    let path = Path::new(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../data/sample_corpus.json"
    ));
    let path = path.to_str().unwrap();

    let out = biorder(&["corpus", path]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("summary: total 12"));
    assert!(text.contains("NOT_BI_ORDERABLE 6"));

    let out = biorder(&["corpus", path, "--format", "csv", "--jobs", "2"]);
    let text = stdout(&out);
    assert!(text.starts_with("name,route,status"));
    assert_eq!(text.lines().count(), 13);

    let out = biorder(&["corpus", path, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["summary"]["total"], 12);
    assert_eq!(v["reports"][0]["name"], "trefoil");

    let out = biorder(&["corpus", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn version_and_help() {
    let out = biorder(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("biorder "));
    let out = biorder(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    for sub in ["analyze", "roots", "certify", "corpus"] {
        assert!(stdout(&out).contains(sub));
    }
    // Unknown flags are usage errors: exit 2 (clap convention).
    let out = biorder(&["roots", "t", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
