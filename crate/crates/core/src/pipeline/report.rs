//! Report rendering: JSON (schema 1), human-readable text, and CSV rows.

use serde::Serialize;

use crate::exactnum::LaurentPoly;
use crate::pipeline::analyze::{Evidence, Status, Verdict};

/// Analysis result for one record. JSON shape:
/// `{schema, name, route, delta: {min_degree, coeffs}, rhf, status,
/// evidence, assumptions, timing_ms, tool_version}`. Everything except
/// `timing_ms` is deterministic for a fixed record and configuration.
#[derive(Debug, Clone)]
pub struct Report {
    pub name: String,
    pub route: String,
    pub verdict: Verdict,
    pub timing_ms: f64,
    pub tool_version: String,
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum EvidenceJson<'a> {
    PositivityCertificate {
        polya_exponent: Option<u32>,
        multiplier: &'a LaurentPoly,
        product: &'a LaurentPoly,
    },
    RootInterval {
        lo: String,
        hi: String,
        exact_root: bool,
        sign_lo: i8,
        sign_hi: i8,
    },
    NotApplicable {
        reason: &'static str,
        detail: &'a str,
        #[serde(skip_serializing_if = "Option::is_none")]
        positive_root_count: Option<usize>,
    },
    CapExceeded {
        cap: u32,
    },
}

impl<'a> From<&'a Evidence> for EvidenceJson<'a> {
    fn from(e: &'a Evidence) -> Self {
        match e {
            Evidence::Certificate(cert) => EvidenceJson::PositivityCertificate {
                polya_exponent: cert.polya_exponent,
                multiplier: &cert.multiplier,
                product: &cert.product,
            },
            Evidence::Interval {
                interval,
                sign_lo,
                sign_hi,
            } => EvidenceJson::RootInterval {
                lo: interval.lo.to_string(),
                hi: interval.hi.to_string(),
                exact_root: interval.is_point(),
                sign_lo: *sign_lo,
                sign_hi: *sign_hi,
            },
            Evidence::Reason {
                reason,
                detail,
                positive_root_count,
            } => EvidenceJson::NotApplicable {
                reason: reason.as_str(),
                detail,
                positive_root_count: *positive_root_count,
            },
            Evidence::CertificateCapExceeded { cap } => EvidenceJson::CapExceeded { cap: *cap },
        }
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    schema: u32,
    name: &'a str,
    route: &'a str,
    delta: &'a LaurentPoly,
    rhf: Option<bool>,
    status: Status,
    evidence: EvidenceJson<'a>,
    assumptions: &'a [String],
    timing_ms: f64,
    tool_version: &'a str,
}

impl Report {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            schema: 1,
            name: &self.name,
            route: &self.route,
            delta: &self.verdict.delta,
            rhf: self.verdict.rhf,
            status: self.verdict.status,
            evidence: (&self.verdict.evidence).into(),
            assumptions: &self.verdict.assumptions,
            timing_ms: self.timing_ms,
            tool_version: &self.tool_version,
        })
        .expect("report serialization is infallible")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value())
            .expect("report serialization is infallible")
    }

    fn evidence_summary(&self) -> String {
        match &self.verdict.evidence {
            Evidence::Certificate(cert) => match cert.polya_exponent {
                Some(n) => format!(
                    "(1+t)^{n} * delta = {} has nonnegative coefficients",
                    cert.product
                ),
                None => format!("multiplier {} yields {}", cert.multiplier, cert.product),
            },
            Evidence::Interval {
                interval,
                sign_lo,
                sign_hi,
            } => {
                if interval.is_point() {
                    format!("exact positive rational root t = {}", interval.lo)
                } else {
                    format!(
                        "positive root in ({}, {}]: signs {sign_lo}/{sign_hi} at the endpoints",
                        interval.lo, interval.hi
                    )
                }
            }
            Evidence::Reason {
                reason,
                detail,
                positive_root_count,
            } => {
                let roots = positive_root_count
                    .map(|n| format!(" [positive roots: {n}]"))
                    .unwrap_or_default();
                format!("{}: {detail}{roots}", reason.as_str())
            }
            Evidence::CertificateCapExceeded { cap } => {
                format!("no positive roots, but certificate search exceeded cap {cap}")
            }
        }
    }

    pub fn to_text(&self) -> String {
        let rhf = match self.verdict.rhf {
            Some(true) => "true",
            Some(false) => "false",
            None => "n/a",
        };
        let assumptions = if self.verdict.assumptions.is_empty() {
            "none".to_string()
        } else {
            self.verdict.assumptions.join(", ")
        };
        format!(
            "record:      {}\n\
             route:       {}\n\
             delta:       {}\n\
             rhf:         {rhf}\n\
             status:      {}\n\
             evidence:    {}\n\
             assumptions: {assumptions}\n",
            self.name,
            self.route,
            self.verdict.delta,
            self.verdict.status,
            self.evidence_summary(),
        )
    }

    pub const CSV_HEADER: &'static str = "name,route,status,rhf,delta,evidence";

    pub fn to_csv_row(&self) -> String {
        let rhf = match self.verdict.rhf {
            Some(true) => "true",
            Some(false) => "false",
            None => "n/a",
        };
        let fields = [
            self.name.clone(),
            self.route.clone(),
            self.verdict.status.to_string(),
            rhf.to_string(),
            self.verdict.delta.to_string(),
            self.evidence_summary(),
        ];
        fields.map(|f| csv_escape(&f)).join(",")
    }
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
