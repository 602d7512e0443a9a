//! Braid notation parser: `Bn: i1 i2 ...` with nonzero letters `|i| < n`,
//! e.g. `B2: 1 1 1` for the trefoil. The closure must be a knot.

use crate::error::{Error, Result};
use crate::topology::BraidWord;

pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let trimmed = text.trim();
    let rest = trimmed.strip_prefix('B').ok_or(Error::Syntax {
        position: 0,
        message: "braid notation must start with `B`".into(),
    })?;
    let (n_text, letters_text) = rest.split_once(':').ok_or(Error::Syntax {
        position: trimmed.len(),
        message: "expected `:` after the strand count".into(),
    })?;
    let strands: usize = n_text.trim().parse().map_err(|_| Error::Syntax {
        position: 1,
        message: format!("invalid strand count `{}`", n_text.trim()),
    })?;
    let mut letters = Vec::new();
    for tok in letters_text.split_whitespace() {
        let letter: i64 = tok.parse().map_err(|_| Error::Syntax {
            position: 0,
            message: format!("invalid braid letter `{tok}`"),
        })?;
        letters.push(letter);
    }
    let word = BraidWord::new(strands, letters)?;
    if !word.is_knot_closure() {
        return Err(Error::NotAKnotClosure {
            components: word.closure_components(),
        });
    }
    Ok(word)
}

/// Serializes back to the `Bn: ...` notation.
pub fn braid_to_string(word: &BraidWord) -> String {
    let letters: Vec<String> = word.letters().iter().map(|l| l.to_string()).collect();
    format!("B{}: {}", word.strands(), letters.join(" "))
}
