//! Knot record schema (JSON, `"schema": 1`) and corpus files.
//!
//! A record names a knot (or group) and supplies its data through exactly
//! one source variant:
//!
//! ```json
//! {
//!   "schema": 1,
//!   "name": "trefoil",
//!   "source": { "seifert_matrix": [[-1, 1], [0, -1]] },
//!   "flags": { "minimal_genus_asserted": true, "ambient_qhs3_asserted": true },
//!   "meta": { "table": "example" }
//! }
//! ```
//!
//! The other variants are `"braid": "B2: 1 1 1"`,
//! `"alexander_poly": "...", "genus": g`, and
//! `"presentation": "gens: ...; rels: ...; phi: ..."` with an optional
//! `"hnn"` block. A corpus file is a JSON array of records; each element is
//! parsed independently so one malformed record does not poison the batch.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exactnum::LaurentPoly;
use crate::ingest::braid::parse_braid;
use crate::ingest::poly::parse_poly;
use crate::ingest::presentation::{parse_plain_presentation, parse_presentation, parse_word};
use crate::topology::{BraidWord, GroupPresentation, HnnData, SeifertMatrix};

pub const RECORD_SCHEMA_VERSION: u32 = 1;

/// How the knot or group is supplied. Exactly one variant per record.
#[derive(Debug, Clone, PartialEq)]
pub enum RecordSource {
    Seifert(SeifertMatrix),
    Braid(BraidWord),
    AlexanderPoly {
        poly: LaurentPoly,
        genus: u32,
    },
    Presentation {
        presentation: GroupPresentation,
        hnn: Option<HnnData>,
    },
}

impl RecordSource {
    pub fn route_name(&self) -> &'static str {
        match self {
            RecordSource::Seifert(_) => "seifert_matrix",
            RecordSource::Braid(_) => "braid",
            RecordSource::AlexanderPoly { .. } => "alexander_poly",
            RecordSource::Presentation { .. } => "presentation",
        }
    }
}

/// Topological assertions carried by a record. All default to false; the
/// software echoes them into verdict assumptions instead of verifying them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RecordFlags {
    pub minimal_genus_asserted: bool,
    pub ambient_qhs3_asserted: bool,
    pub alternating: bool,
}

/// A validated input record.
#[derive(Debug, Clone, PartialEq)]
pub struct KnotRecord {
    pub name: String,
    pub source: RecordSource,
    pub genus: Option<u32>,
    pub flags: RecordFlags,
    pub meta: BTreeMap<String, String>,
}

impl KnotRecord {
    /// Serializes back to the schema-1 JSON form. `parse_record` of the
    /// result yields an equal record.
    pub fn to_json_value(&self) -> serde_json::Value {
        use serde_json::{json, Map, Value};
        let mut source = Map::new();
        match &self.source {
            RecordSource::Seifert(s) => {
                source.insert("seifert_matrix".into(), json!(s.entries()));
            }
            RecordSource::Braid(b) => {
                source.insert("braid".into(), json!(crate::ingest::braid_to_string(b)));
            }
            RecordSource::AlexanderPoly { poly, genus } => {
                source.insert("alexander_poly".into(), json!(poly.to_string()));
                source.insert("genus".into(), json!(genus));
            }
            RecordSource::Presentation { presentation, hnn } => {
                source.insert(
                    "presentation".into(),
                    json!(crate::ingest::presentation_to_string(presentation)),
                );
                if let Some(h) = hnn {
                    let word = |w| crate::topology::word_to_string(w, h.h_generators());
                    let rels: Vec<String> = h.h_relators().iter().map(word).collect();
                    let images = |side| -> Map<String, Value> {
                        h.a_generators()
                            .iter()
                            .zip(h.iota(side))
                            .map(|(a, w)| (a.clone(), json!(word(w))))
                            .collect()
                    };
                    source.insert(
                        "hnn".into(),
                        json!({
                            "h": format!(
                                "gens: {}; rels: {}",
                                h.h_generators().join(","),
                                rels.join(", ")
                            ),
                            "a_generators": h.a_generators(),
                            "iota_plus": images(crate::topology::Side::Plus),
                            "iota_minus": images(crate::topology::Side::Minus),
                        }),
                    );
                }
            }
        }
        let mut out = Map::new();
        out.insert("schema".into(), json!(RECORD_SCHEMA_VERSION));
        out.insert("name".into(), json!(self.name));
        out.insert("source".into(), Value::Object(source));
        if let Some(g) = self.genus {
            out.insert("genus".into(), json!(g));
        }
        out.insert(
            "flags".into(),
            json!({
                "minimal_genus_asserted": self.flags.minimal_genus_asserted,
                "ambient_qhs3_asserted": self.flags.ambient_qhs3_asserted,
                "alternating": self.flags.alternating,
            }),
        );
        if !self.meta.is_empty() {
            out.insert("meta".into(), json!(self.meta));
        }
        Value::Object(out)
    }

    /// The genus the analysis may use, if any: the asserted-minimal Seifert
    /// dimension, the polynomial variant's required genus, or the explicit
    /// top-level field. Presentations carry no genus.
    pub fn effective_genus(&self) -> Option<u32> {
        match &self.source {
            RecordSource::Seifert(s) if s.minimal_genus_asserted => Some((s.dim() / 2) as u32),
            RecordSource::Seifert(_) | RecordSource::Braid(_) => self.genus,
            RecordSource::AlexanderPoly { genus, .. } => Some(*genus),
            RecordSource::Presentation { .. } => None,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    schema: Option<u32>,
    name: String,
    source: RawSource,
    genus: Option<u32>,
    #[serde(default)]
    flags: RawFlags,
    #[serde(default)]
    meta: BTreeMap<String, String>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawFlags {
    #[serde(default)]
    minimal_genus_asserted: bool,
    #[serde(default)]
    ambient_qhs3_asserted: bool,
    #[serde(default)]
    alternating: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSource {
    seifert_matrix: Option<Vec<Vec<i64>>>,
    braid: Option<String>,
    alexander_poly: Option<PolyInput>,
    genus: Option<u32>,
    presentation: Option<String>,
    hnn: Option<RawHnn>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PolyInput {
    Text(String),
    Parsed(LaurentPoly),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHnn {
    h: String,
    a_generators: Vec<String>,
    iota_plus: BTreeMap<String, String>,
    iota_minus: BTreeMap<String, String>,
}

fn record_err(path: &str, message: impl Into<String>) -> Error {
    Error::Record {
        path: path.into(),
        message: message.into(),
    }
}

fn at_path(path: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| record_err(path, e.to_string())
}

/// Parses and validates a single record from JSON text.
pub fn parse_record(json_text: &str) -> Result<KnotRecord> {
    let mut de = serde_json::Deserializer::from_str(json_text);
    let raw: RawRecord = serde_path_to_error::deserialize(&mut de)
        .map_err(|e| record_err(&e.path().to_string(), e.inner().to_string()))?;
    validate(raw)
}

fn validate(raw: RawRecord) -> Result<KnotRecord> {
    if let Some(v) = raw.schema {
        if v != RECORD_SCHEMA_VERSION {
            return Err(record_err(
                "schema",
                format!("unsupported schema version {v}"),
            ));
        }
    }
    if raw.name.trim().is_empty() {
        return Err(record_err("name", "must be non-empty"));
    }
    let flags = RecordFlags {
        minimal_genus_asserted: raw.flags.minimal_genus_asserted,
        ambient_qhs3_asserted: raw.flags.ambient_qhs3_asserted,
        alternating: raw.flags.alternating,
    };

    let s = &raw.source;
    let variants = [
        s.seifert_matrix.is_some(),
        s.braid.is_some(),
        s.alexander_poly.is_some(),
        s.presentation.is_some(),
    ];
    let present = variants.iter().filter(|&&b| b).count();
    if present != 1 {
        return Err(record_err(
            "source",
            format!(
                "exactly one of seifert_matrix, braid, alexander_poly, presentation required, found {present}"
            ),
        ));
    }
    if s.hnn.is_some() && s.presentation.is_none() {
        return Err(record_err(
            "source.hnn",
            "only valid together with a presentation",
        ));
    }
    if s.genus.is_some() && s.alexander_poly.is_none() {
        return Err(record_err(
            "source.genus",
            "only valid together with alexander_poly",
        ));
    }

    let source = if let Some(matrix) = raw.source.seifert_matrix {
        let seifert = SeifertMatrix::new(
            matrix,
            flags.minimal_genus_asserted,
            flags.ambient_qhs3_asserted,
        )
        .map_err(at_path("source.seifert_matrix"))?;
        if flags.minimal_genus_asserted {
            if let Some(g) = raw.genus {
                let from_dim = (seifert.dim() / 2) as u32;
                if g != from_dim {
                    return Err(record_err(
                        "genus",
                        format!("{g} contradicts minimal Seifert dimension genus {from_dim}"),
                    ));
                }
            }
        }
        RecordSource::Seifert(seifert)
    } else if let Some(text) = raw.source.braid {
        RecordSource::Braid(parse_braid(&text).map_err(at_path("source.braid"))?)
    } else if let Some(input) = raw.source.alexander_poly {
        let poly = match input {
            PolyInput::Text(text) => parse_poly(&text).map_err(at_path("source.alexander_poly"))?,
            PolyInput::Parsed(p) => p,
        };
        let genus = raw
            .source
            .genus
            .ok_or_else(|| record_err("source.genus", "required for alexander_poly records"))?;
        if let Some(g) = raw.genus {
            if g != genus {
                return Err(record_err(
                    "genus",
                    format!("{g} contradicts source.genus {genus}"),
                ));
            }
        }
        RecordSource::AlexanderPoly { poly, genus }
    } else {
        let text = raw.source.presentation.expect("variant counted above");
        let presentation = parse_presentation(&text).map_err(at_path("source.presentation"))?;
        let hnn = match raw.source.hnn {
            None => None,
            Some(h) => Some(validate_hnn(h)?),
        };
        RecordSource::Presentation { presentation, hnn }
    };

    Ok(KnotRecord {
        name: raw.name,
        source,
        genus: raw.genus,
        flags,
        meta: raw.meta,
    })
}

fn validate_hnn(raw: RawHnn) -> Result<HnnData> {
    let (h_generators, h_relators) =
        parse_plain_presentation(&raw.h).map_err(at_path("source.hnn.h"))?;
    if raw.a_generators.is_empty() {
        return Err(record_err("source.hnn.a_generators", "must be non-empty"));
    }
    let mut iota_plus = Vec::with_capacity(raw.a_generators.len());
    let mut iota_minus = Vec::with_capacity(raw.a_generators.len());
    for (map, words, path) in [
        (&raw.iota_plus, &mut iota_plus, "source.hnn.iota_plus"),
        (&raw.iota_minus, &mut iota_minus, "source.hnn.iota_minus"),
    ] {
        for key in map.keys() {
            if !raw.a_generators.contains(key) {
                return Err(record_err(
                    path,
                    format!("image for unknown a-generator `{key}`"),
                ));
            }
        }
        for a in &raw.a_generators {
            let text = map
                .get(a)
                .ok_or_else(|| record_err(path, format!("missing image for a-generator `{a}`")))?;
            words.push(parse_word(text, &h_generators).map_err(at_path(path))?);
        }
    }
    HnnData::new(
        h_generators,
        h_relators,
        raw.a_generators,
        iota_plus,
        iota_minus,
    )
}

/// Parses a corpus file: a JSON array of records. The array structure is a
/// file-level error; individual records are parsed independently and
/// returned as per-entry results paired with the best available name.
pub fn parse_corpus(json_text: &str) -> Result<Vec<(String, Result<KnotRecord>)>> {
    let values: Vec<serde_json::Value> = serde_json::from_str(json_text)
        .map_err(|e| record_err("", format!("corpus must be a JSON array of records: {e}")))?;
    Ok(values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            let fallback = format!("record[{i}]");
            let name = v
                .get("name")
                .and_then(|n| n.as_str())
                .map_or(fallback, str::to_string);
            let parsed = serde_json::from_value::<RawRecord>(v)
                .map_err(|e| record_err("", e.to_string()))
                .and_then(validate);
            (name, parsed)
        })
        .collect())
}
