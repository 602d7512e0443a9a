//! Parsers and serializers for the external input formats: polynomial
//! expressions, braid notation, presentation text, and knot records.

mod braid;
mod poly;
mod presentation;
mod record;

pub use braid::{braid_to_string, parse_braid};
pub use poly::parse_poly;
pub use presentation::{parse_presentation, parse_word, presentation_to_string};
pub use record::{parse_corpus, parse_record, KnotRecord, RecordFlags, RecordSource};
