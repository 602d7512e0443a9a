//! Group presentation parser.
//!
//! Format: `gens: x,y; rels: x y x Y X Y; phi: 1,1`. Relators are
//! comma-separated words of whitespace-separated letters; an uppercase
//! letter is the inverse of its single-character lowercase generator, and
//! multi-character generators use the `name^-1` form. The `phi:` section is
//! omitted for plain presentations (HNN vertex groups).

use crate::error::{Error, Result};
use crate::topology::{GroupPresentation, Letter, Word};

/// Parses a presentation with a `phi:` section into a validated
/// [`GroupPresentation`].
pub fn parse_presentation(text: &str) -> Result<GroupPresentation> {
    let (generators, relators, phi) = parse_sections(text, true)?;
    GroupPresentation::new(generators, relators, phi.expect("phi required"))
}

/// Parses a presentation without `phi` (generators and relators only).
pub(crate) fn parse_plain_presentation(text: &str) -> Result<(Vec<String>, Vec<Word>)> {
    let (generators, relators, _) = parse_sections(text, false)?;
    Ok((generators, relators))
}

type Sections = (Vec<String>, Vec<Word>, Option<Vec<i64>>);

fn parse_sections(text: &str, expect_phi: bool) -> Result<Sections> {
    let mut sections = text.split(';');

    let gens_part = sections.next().unwrap_or("");
    let generators = parse_generators(section_value(gens_part, "gens")?)?;

    let rels_part = sections
        .next()
        .ok_or_else(|| syntax("missing `rels:` section"))?;
    let rels_value = section_value(rels_part, "rels")?;
    let mut relators = Vec::new();
    for rel_text in rels_value.split(',') {
        if rel_text.trim().is_empty() {
            continue;
        }
        relators.push(parse_word(rel_text, &generators)?);
    }

    let phi = if expect_phi {
        let phi_part = sections
            .next()
            .ok_or_else(|| syntax("missing `phi:` section"))?;
        let phi_value = section_value(phi_part, "phi")?;
        let mut phi = Vec::new();
        for tok in phi_value.split(',') {
            let v: i64 = tok
                .trim()
                .parse()
                .map_err(|_| syntax(format!("invalid phi value `{}`", tok.trim())))?;
            phi.push(v);
        }
        Some(phi)
    } else {
        None
    };

    if sections.next().is_some_and(|s| !s.trim().is_empty()) {
        return Err(syntax("unexpected trailing section"));
    }
    Ok((generators, relators, phi))
}

fn syntax(message: impl Into<String>) -> Error {
    Error::Syntax {
        position: 0,
        message: message.into(),
    }
}

fn section_value<'a>(part: &'a str, key: &str) -> Result<&'a str> {
    let part = part.trim_start();
    let rest = part
        .strip_prefix(key)
        .ok_or_else(|| syntax(format!("expected `{key}:` section")))?;
    rest.trim_start()
        .strip_prefix(':')
        .ok_or_else(|| syntax(format!("expected `:` after `{key}`")))
        .map(str::trim)
}

fn parse_generators(value: &str) -> Result<Vec<String>> {
    let mut gens = Vec::new();
    for tok in value.split(',') {
        let name = tok.trim();
        if name.is_empty() {
            return Err(syntax("empty generator name"));
        }
        let mut chars = name.chars();
        let head_ok = chars.next().is_some_and(|c| c.is_ascii_lowercase());
        if !head_ok
            || !name
                .chars()
                .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
        {
            return Err(syntax(format!(
                "invalid generator name `{name}` (lowercase letter, then lowercase/digits/underscore)"
            )));
        }
        if gens.iter().any(|g| g == name) {
            return Err(syntax(format!("duplicate generator `{name}`")));
        }
        gens.push(name.to_string());
    }
    Ok(gens)
}

/// Parses one word over the given generators. Tokens are
/// whitespace-separated: `x`, `X` (inverse of single-char `x`), or
/// `name^-1`.
pub fn parse_word(text: &str, generators: &[String]) -> Result<Word> {
    let mut word = Vec::new();
    for tok in text.split_whitespace() {
        word.push(parse_letter(tok, generators)?);
    }
    Ok(word)
}

fn parse_letter(tok: &str, generators: &[String]) -> Result<Letter> {
    let index_of = |name: &str| generators.iter().position(|g| g == name);
    if let Some(base) = tok.strip_suffix("^-1") {
        let gen = index_of(base).ok_or_else(|| Error::UnknownGenerator(base.into()))?;
        return Ok(Letter { gen, inverse: true });
    }
    if let Some(gen) = index_of(tok) {
        return Ok(Letter {
            gen,
            inverse: false,
        });
    }
    if tok.len() == 1 && tok.chars().all(|c| c.is_ascii_uppercase()) {
        let lower = tok.to_lowercase();
        if let Some(gen) = index_of(&lower) {
            return Ok(Letter { gen, inverse: true });
        }
    }
    Err(Error::UnknownGenerator(tok.into()))
}

/// Serializes back to the `gens: ...; rels: ...; phi: ...` format.
pub fn presentation_to_string(p: &GroupPresentation) -> String {
    let rels: Vec<String> = p
        .relators()
        .iter()
        .map(|w| crate::topology::word_to_string(w, p.generators()))
        .collect();
    let phi: Vec<String> = p.phi().iter().map(|v| v.to_string()).collect();
    format!(
        "gens: {}; rels: {}; phi: {}",
        p.generators().join(","),
        rels.join(", "),
        phi.join(",")
    )
}
