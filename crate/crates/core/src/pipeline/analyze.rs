//! Single-record analysis.
//!
//! Verdict order, chosen so that no unsound status can escape:
//!
//! 1. zero Alexander polynomial -> NOT_APPLICABLE(delta_zero): the homology
//!    has a free part and the criterion says nothing;
//! 2. failed hypotheses -> NOT_APPLICABLE(not_rhf) when the span test
//!    against the genus fails, NOT_APPLICABLE(hypotheses_unverified) when
//!    the data needed to check them is missing or the HNN surjectivity
//!    check fails (root analysis is still reported informationally);
//! 3. constant nonzero polynomial -> NOT_APPLICABLE(delta_constant): a
//!    constant vacuously has no positive root, but the quotient argument
//!    behind the criterion degenerates (the unknot group is bi-orderable),
//!    so no verdict is claimed;
//! 4. zero positive roots -> NOT_BI_ORDERABLE with a positivity
//!    certificate, or the distinguished CAP_EXCEEDED state when the
//!    criterion holds but the certificate search hit its cap;
//! 5. otherwise INCONCLUSIVE with an isolating interval as the witness.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{rat, LaurentPoly};
use crate::ingest::{KnotRecord, RecordSource};
use crate::pipeline::report::Report;
use crate::realroots::{
    count_positive_roots, isolate_positive_root, polya_certificate, PositivityCertificate,
    RootInterval,
};
use crate::topology::rhf_check;

/// Default cap on the Polya exponent search.
pub const DEFAULT_CERTIFICATE_CAP: u32 = 256;

/// Isolating intervals are narrowed to width `2^-20` by default.
pub const DEFAULT_ISOLATION_WIDTH_LOG2: u32 = 20;

/// Final status of an analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "NOT_BI_ORDERABLE")]
    NotBiOrderable,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
    #[serde(rename = "NOT_APPLICABLE")]
    NotApplicable,
    #[serde(rename = "CAP_EXCEEDED")]
    CapExceeded,
}

impl Status {
    /// Process exit code for the CLI surface.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::NotBiOrderable => 0,
            Status::Inconclusive => 10,
            Status::NotApplicable => 11,
            Status::CapExceeded => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::NotBiOrderable => "NOT_BI_ORDERABLE",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::NotApplicable => "NOT_APPLICABLE",
            Status::CapExceeded => "CAP_EXCEEDED",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// Why a record is outside the criterion's reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NaReason {
    DeltaZero,
    NotRhf,
    DeltaConstant,
    HypothesesUnverified,
}

impl NaReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NaReason::DeltaZero => "delta_zero",
            NaReason::NotRhf => "not_rhf",
            NaReason::DeltaConstant => "delta_constant",
            NaReason::HypothesesUnverified => "hypotheses_unverified",
        }
    }
}

/// Machine-checkable payload attached to every verdict.
#[derive(Debug, Clone, PartialEq)]
pub enum Evidence {
    /// `NOT_BI_ORDERABLE`: a self-verifying positivity certificate.
    Certificate(PositivityCertificate),
    /// `INCONCLUSIVE`: an interval with an exact sign change (signs are of
    /// the squarefree part; both zero for an exact rational root point).
    Interval {
        interval: RootInterval,
        sign_lo: i8,
        sign_hi: i8,
    },
    /// `NOT_APPLICABLE`: the failed hypothesis, with the positive-root
    /// count reported informationally where it was still computable.
    Reason {
        reason: NaReason,
        detail: String,
        positive_root_count: Option<usize>,
    },
    /// `CAP_EXCEEDED`: no positive roots by the Sturm count, but no
    /// certificate with exponent `<= cap`.
    CertificateCapExceeded { cap: u32 },
}

/// The decision for one record: status, canonical polynomial, hypothesis
/// outcomes, evidence, and the list of user assertions it is conditional
/// on.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub status: Status,
    pub delta: LaurentPoly,
    pub rhf: Option<bool>,
    pub evidence: Evidence,
    pub assumptions: Vec<String>,
}

impl Verdict {
    /// Re-checks the soundness coupling: conclusive evidence must verify
    /// against the polynomial by exact arithmetic.
    pub fn evidence_verifies(&self) -> bool {
        match (&self.status, &self.evidence) {
            (Status::NotBiOrderable, Evidence::Certificate(cert)) => {
                cert.verify_against(&self.delta)
            }
            (Status::NotBiOrderable, _) => false,
            (Status::Inconclusive, Evidence::Interval { interval, .. }) => {
                interval.verify_against(&self.delta)
            }
            (Status::Inconclusive, _) => false,
            (Status::NotApplicable, Evidence::Reason { .. }) => true,
            (Status::NotApplicable, _) => false,
            (Status::CapExceeded, Evidence::CertificateCapExceeded { .. }) => true,
            (Status::CapExceeded, _) => false,
        }
    }
}

/// Computes the canonical Alexander polynomial for a record's source.
pub fn analyze_delta(source: &RecordSource) -> Result<LaurentPoly> {
    match source {
        RecordSource::Seifert(s) => s.alexander_polynomial(),
        RecordSource::Braid(b) => b.alexander_polynomial(),
        RecordSource::AlexanderPoly { poly, .. } => Ok(poly.canonical_or_zero()),
        RecordSource::Presentation { presentation, .. } => presentation.alexander_polynomial(),
    }
}

fn knot_route_assumptions(record: &KnotRecord, assumptions: &mut Vec<String>) {
    if record.flags.ambient_qhs3_asserted {
        assumptions.push("ambient_qhs3_asserted".into());
    } else {
        assumptions.push("ambient_qhs3_not_asserted".into());
    }
    match &record.source {
        RecordSource::Seifert(s) if s.minimal_genus_asserted => {
            assumptions.push("minimal_genus_asserted".into());
        }
        RecordSource::Seifert(_) | RecordSource::Braid(_) => {
            if record.genus.is_some() {
                assumptions.push("genus_supplied_unverified".into());
            }
        }
        RecordSource::AlexanderPoly { .. } => {
            assumptions.push("genus_supplied_unverified".into());
        }
        RecordSource::Presentation { .. } => {}
    }
}

/// Analyzes one record. `cap` bounds the certificate exponent search.
pub fn analyze(record: &KnotRecord, cap: u32) -> Result<Report> {
    let started = Instant::now();
    let delta = analyze_delta(&record.source)?;
    let verdict = decide(record, &delta, cap)?;
    debug_assert!(verdict.evidence_verifies());
    Ok(Report {
        name: record.name.clone(),
        route: record.source.route_name().to_string(),
        verdict,
        timing_ms: started.elapsed().as_secs_f64() * 1e3,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    })
}

fn decide(record: &KnotRecord, delta: &LaurentPoly, cap: u32) -> Result<Verdict> {
    let is_knot_route = !matches!(record.source, RecordSource::Presentation { .. });
    let mut assumptions = Vec::new();
    if is_knot_route {
        knot_route_assumptions(record, &mut assumptions);
    }

    let genus = record.effective_genus();
    let rhf = if is_knot_route {
        genus.map(|g| rhf_check(delta, g))
    } else {
        None
    };
    // For an asserted-minimal Seifert matrix the span test must agree with
    // the determinant form of the condition.
    if let (RecordSource::Seifert(s), Some(rhf_span)) = (&record.source, rhf) {
        if s.minimal_genus_asserted {
            assert_eq!(
                rhf_span,
                s.det_nonzero(),
                "span and determinant forms of the RHF test disagree"
            );
        }
    }

    fn not_applicable(
        delta: &LaurentPoly,
        rhf: Option<bool>,
        assumptions: &[String],
        reason: NaReason,
        detail: String,
        with_roots: bool,
    ) -> Result<Verdict> {
        let positive_root_count = if with_roots && !delta.is_zero() {
            Some(count_positive_roots(delta)?)
        } else {
            None
        };
        Ok(Verdict {
            status: Status::NotApplicable,
            delta: delta.clone(),
            rhf,
            evidence: Evidence::Reason {
                reason,
                detail,
                positive_root_count,
            },
            assumptions: assumptions.to_vec(),
        })
    }

    if delta.is_zero() {
        return not_applicable(
            delta,
            rhf,
            &assumptions,
            NaReason::DeltaZero,
            "Alexander polynomial is zero (free part in the homology)".into(),
            false,
        );
    }

    if is_knot_route {
        match (genus, rhf) {
            (None, _) => {
                return not_applicable(
                    delta,
                    rhf,
                    &assumptions,
                    NaReason::HypothesesUnverified,
                    "genus unknown: supply a genus or an asserted-minimal Seifert matrix".into(),
                    true,
                );
            }
            (Some(g), Some(false)) => {
                let span = delta.span().unwrap_or(0);
                return not_applicable(
                    delta,
                    rhf,
                    &assumptions,
                    NaReason::NotRhf,
                    format!(
                        "not rationally homologically fibered: span(delta) = {span} != 2*genus = {}",
                         2 * g
                    ),
                    true,
                );
            }
            _ => {}
        }
    } else {
        let RecordSource::Presentation { hnn, .. } = &record.source else {
            unreachable!()
        };
        match hnn {
            None => {
                return not_applicable(
                    delta,
                    rhf,
                    &assumptions,
                    NaReason::HypothesesUnverified,
                    "no HNN splitting data: edge-map surjectivity cannot be checked".into(),
                    true,
                );
            }
            Some(data) => {
                let outcome = data.h1_surjectivity();
                if !outcome.is_surjective_both() {
                    return not_applicable(
                        delta,
                        rhf,
                        &assumptions,
                        NaReason::HypothesesUnverified,
                        format!("H1 surjectivity failed: {outcome}"),
                        true,
                    );
                }
                assumptions.push("hnn_h1_surjectivity_verified_on_supplied_generators".into());
            }
        }
    }

    if delta.is_constant() {
        return not_applicable(
            delta,
            rhf,
            &assumptions,
            NaReason::DeltaConstant,
            "Alexander polynomial is a nonzero constant; the criterion does not apply".into(),
            true,
        );
    }

    let roots = count_positive_roots(delta)?;
    if roots == 0 {
        match polya_certificate(delta, cap) {
            Ok(cert) => {
                let verdict = Verdict {
                    status: Status::NotBiOrderable,
                    delta: delta.clone(),
                    rhf,
                    evidence: Evidence::Certificate(cert),
                    assumptions,
                };
                assert!(
                    verdict.evidence_verifies(),
                    "certificate failed self-verification"
                );
                Ok(verdict)
            }
            Err(Error::CertificateCapExceeded { cap }) => Ok(Verdict {
                status: Status::CapExceeded,
                delta: delta.clone(),
                rhf,
                evidence: Evidence::CertificateCapExceeded { cap },
                assumptions,
            }),
            Err(e) => Err(e),
        }
    } else {
        let width = rat(1, 1i64 << DEFAULT_ISOLATION_WIDTH_LOG2);
        let interval = isolate_positive_root(delta, &width)?;
        let sf = delta.squarefree_part()?;
        let sign_at = |x: &crate::exactnum::Rational| -> i8 {
            let v = sf.eval(x).expect("ordinary polynomial");
            if num_traits::Zero::is_zero(&v) {
                0
            } else if num_traits::Signed::is_positive(&v) {
                1
            } else {
                -1
            }
        };
        let (sign_lo, sign_hi) = if interval.is_point() {
            (0, 0)
        } else {
            (sign_at(&interval.lo), sign_at(&interval.hi))
        };
        let verdict = Verdict {
            status: Status::Inconclusive,
            delta: delta.clone(),
            rhf,
            evidence: Evidence::Interval {
                interval,
                sign_lo,
                sign_hi,
            },
            assumptions,
        };
        assert!(
            verdict.evidence_verifies(),
            "interval failed sign-change verification"
        );
        Ok(verdict)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::parse_record;

    fn lp(min: i64, coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_int_coeffs(min, coeffs)
    }

    fn analyze_json(json: &str) -> Report {
        analyze(&parse_record(json).unwrap(), DEFAULT_CERTIFICATE_CAP).unwrap()
    }

    #[test]
    fn poly_route_not_bi_orderable() {
        let report = analyze_json(
            r#"{"name":"11a_1",
                "source":{"alexander_poly":"2-12*t+30*t^2-39*t^3+30*t^4-12*t^5+2*t^6","genus":3},
                "flags":{"alternating":true,"ambient_qhs3_asserted":true}}"#,
        );
        assert_eq!(report.verdict.status, Status::NotBiOrderable);
        assert_eq!(report.verdict.rhf, Some(true));
        assert_eq!(report.verdict.delta, lp(0, &[2, -12, 30, -39, 30, -12, 2]));
        assert!(report.verdict.evidence_verifies());
    }

    #[test]
    fn seifert_route_inconclusive_control() {
        let report = analyze_json(
            r#"{"name":"figure-eight",
                "source":{"seifert_matrix":[[1,1],[0,-1]]},
                "flags":{"minimal_genus_asserted":true,"ambient_qhs3_asserted":true}}"#,
        );
        assert_eq!(report.verdict.status, Status::Inconclusive);
        assert_eq!(report.verdict.delta, lp(0, &[1, -3, 1]));
        match &report.verdict.evidence {
            Evidence::Interval {
                interval,
                sign_lo,
                sign_hi,
            } => {
                assert!(interval.width() <= rat(1, 1 << 20));
                assert_eq!((*sign_lo, *sign_hi), (1, -1));
            }
            other => panic!("wrong evidence {other:?}"),
        }
    }

    #[test]
    fn exceptional_shape_not_rhf() {
        let report =
            analyze_json(r#"{"name":"exceptional","source":{"alexander_poly":"1","genus":2}}"#);
        assert_eq!(report.verdict.status, Status::NotApplicable);
        match &report.verdict.evidence {
            Evidence::Reason {
                reason,
                positive_root_count,
                ..
            } => {
                assert_eq!(*reason, NaReason::NotRhf);
                assert_eq!(*positive_root_count, Some(0));
            }
            other => panic!("wrong evidence {other:?}"),
        }
    }

    #[test]
    fn unknot_is_delta_constant() {
        let report = analyze_json(r#"{"name":"unknot","source":{"alexander_poly":"1","genus":0}}"#);
        assert_eq!(report.verdict.status, Status::NotApplicable);
        match &report.verdict.evidence {
            Evidence::Reason { reason, .. } => assert_eq!(*reason, NaReason::DeltaConstant),
            other => panic!("wrong evidence {other:?}"),
        }
    }

    #[test]
    fn zero_seifert_matrix_is_delta_zero() {
        let report = analyze_json(
            r#"{"name":"zero","source":{"seifert_matrix":[[0,0],[0,0]]},
                "flags":{"minimal_genus_asserted":true}}"#,
        );
        assert_eq!(report.verdict.status, Status::NotApplicable);
        match &report.verdict.evidence {
            Evidence::Reason { reason, .. } => assert_eq!(*reason, NaReason::DeltaZero),
            other => panic!("wrong evidence {other:?}"),
        }
        assert_eq!(report.verdict.rhf, Some(false));
    }

    #[test]
    fn braid_without_genus_is_unverified() {
        let report = analyze_json(r#"{"name":"trefoil","source":{"braid":"B2: 1 1 1"}}"#);
        assert_eq!(report.verdict.status, Status::NotApplicable);
        match &report.verdict.evidence {
            Evidence::Reason {
                reason,
                positive_root_count,
                ..
            } => {
                assert_eq!(*reason, NaReason::HypothesesUnverified);
                // Root analysis still reported: t^2 - t + 1 has none.
                assert_eq!(*positive_root_count, Some(0));
            }
            other => panic!("wrong evidence {other:?}"),
        }
    }

    #[test]
    fn presentation_without_hnn_refuses_verdict() {
        let report = analyze_json(
            r#"{"name":"trefoil-pres",
                "source":{"presentation":"gens: x,y; rels: x y x Y X Y; phi: 1,1"}}"#,
        );
        assert_eq!(report.verdict.status, Status::NotApplicable);
        assert_eq!(report.verdict.rhf, None);
        match &report.verdict.evidence {
            Evidence::Reason {
                reason,
                positive_root_count,
                ..
            } => {
                assert_eq!(*reason, NaReason::HypothesesUnverified);
                assert_eq!(*positive_root_count, Some(0));
            }
            other => panic!("wrong evidence {other:?}"),
        }
    }

    #[test]
    fn hnn_route_with_surjectivity_concludes() {
        let report = analyze_json(
            r#"{"name":"trefoil-hnn",
                "source":{
                  "presentation":"gens: s,u,v; rels: s^-1 u s V, s^-1 v s V u; phi: 1,0,0",
                  "hnn":{
                    "h":"gens: u,v; rels:",
                    "a_generators":["a1","a2"],
                    "iota_plus":{"a1":"u","a2":"v"},
                    "iota_minus":{"a1":"v","a2":"U v"}}}}"#,
        );
        assert_eq!(report.verdict.status, Status::NotBiOrderable);
        assert_eq!(report.verdict.delta, lp(0, &[1, -1, 1]));
        assert!(report
            .verdict
            .assumptions
            .iter()
            .any(|a| a == "hnn_h1_surjectivity_verified_on_supplied_generators"));
    }

    #[test]
    fn hnn_route_failing_surjectivity_is_unverified() {
        let report = analyze_json(
            r#"{"name":"bad-hnn",
                "source":{
                  "presentation":"gens: s,u,v; rels: s^-1 u s V, s^-1 v s V u; phi: 1,0,0",
                  "hnn":{
                    "h":"gens: u,v; rels:",
                    "a_generators":["a1"],
                    "iota_plus":{"a1":"u"},
                    "iota_minus":{"a1":"u"}}}}"#,
        );
        assert_eq!(report.verdict.status, Status::NotApplicable);
        match &report.verdict.evidence {
            Evidence::Reason { reason, detail, .. } => {
                assert_eq!(*reason, NaReason::HypothesesUnverified);
                assert!(detail.contains("not_surjective(minus, rank 1 < 2)"));
            }
            other => panic!("wrong evidence {other:?}"),
        }
    }

    #[test]
    fn cap_exceeded_is_distinguished() {
        let report = analyze(
            &parse_record(
                r#"{"name":"low-cap","source":{"alexander_poly":"t^2-t+1","genus":1},
                    "flags":{"ambient_qhs3_asserted":true}}"#,
            )
            .unwrap(),
            0,
        )
        .unwrap();
        assert_eq!(report.verdict.status, Status::CapExceeded);
        assert_eq!(report.verdict.status.exit_code(), 3);
        match &report.verdict.evidence {
            Evidence::CertificateCapExceeded { cap } => assert_eq!(*cap, 0),
            other => panic!("wrong evidence {other:?}"),
        }
    }
}
