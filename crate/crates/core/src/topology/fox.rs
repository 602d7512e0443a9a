//! Fox free differential calculus and the presentation route to the
//! Alexander polynomial of a group with a surjection onto Z.
//!
//! For a word `w` and generator `x`, the derivative follows
//! `d(uv)/dx = du/dx + u * dv/dx` with `dx/dx = 1` and `dx^-1/dx = -x^-1`,
//! specialized through `g -> t^phi(g)`. The Alexander matrix collects the
//! specialized derivatives of every relator; the polynomial is the gcd of
//! its maximal minors after deleting one column whose generator has nonzero
//! `phi` value.

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, LaurentPoly};
use crate::linalg::PolyMatrix;

/// One letter of a group word: a generator index and an inversion flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

/// A word over the generators of a presentation.
pub type Word = Vec<Letter>;

/// Sum of `phi` values along a word, counting inverses negatively.
pub(crate) fn phi_weight(word: &Word, phi: &[i64]) -> i64 {
    word.iter()
        .map(|l| if l.inverse { -phi[l.gen] } else { phi[l.gen] })
        .sum()
}

/// The `phi`-specialized Fox derivative of `word` with respect to generator
/// index `gen`.
pub fn fox_derivative_phi(word: &Word, gen: usize, phi: &[i64]) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut weight = 0i64;
    for letter in word {
        if letter.inverse {
            weight -= phi[letter.gen];
            if letter.gen == gen {
                acc = &acc - &LaurentPoly::monomial(rat_int(1), weight);
            }
        } else {
            if letter.gen == gen {
                acc = &acc + &LaurentPoly::monomial(rat_int(1), weight);
            }
            weight += phi[letter.gen];
        }
    }
    acc
}

/// A finite presentation together with a surjection `phi` onto Z given by
/// its values on the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    phi: Vec<i64>,
}

impl GroupPresentation {
    /// Validates the type invariants: at least one generator, `phi` defined
    /// on each, every relator of `phi`-weight zero, and the nonzero `phi`
    /// values coprime (so `phi` is onto Z).
    pub fn new(generators: Vec<String>, relators: Vec<Word>, phi: Vec<i64>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidInput(
                "presentation needs at least one generator".into(),
            ));
        }
        if phi.len() != generators.len() {
            return Err(Error::InvalidInput(format!(
                "phi has {} values for {} generators",
                phi.len(),
                generators.len()
            )));
        }
        let gcd = phi.iter().fold(0i64, |acc, &v| num_integer::gcd(acc, v));
        if gcd != 1 {
            return Err(Error::PhiNotSurjective { gcd });
        }
        for word in &relators {
            for letter in word {
                if letter.gen >= generators.len() {
                    return Err(Error::UnknownGenerator(format!("#{}", letter.gen)));
                }
            }
            let weight = phi_weight(word, &phi);
            if weight != 0 {
                return Err(Error::RelatorWeightNonzero {
                    relator: word_to_string(word, &generators),
                    weight,
                });
            }
        }
        Ok(GroupPresentation {
            generators,
            relators,
            phi,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Fox derivative of a word by generator name.
    pub fn fox_derivative(&self, word: &Word, gen: &str) -> Result<LaurentPoly> {
        let idx = self
            .generator_index(gen)
            .ok_or_else(|| Error::UnknownGenerator(gen.into()))?;
        Ok(fox_derivative_phi(word, idx, &self.phi))
    }

    /// The full Alexander matrix: one row per relator, one column per
    /// generator.
    pub fn alexander_matrix(&self) -> PolyMatrix {
        let n = self.generators.len();
        let rows = self
            .relators
            .iter()
            .map(|r| {
                (0..n)
                    .map(|j| fox_derivative_phi(r, j, &self.phi))
                    .collect()
            })
            .collect();
        PolyMatrix::from_rows(rows).expect("rectangular by construction")
    }

    /// Columns eligible for deletion: generators with nonzero `phi` value.
    pub fn admissible_columns(&self) -> Vec<usize> {
        (0..self.phi.len()).filter(|&j| self.phi[j] != 0).collect()
    }

    /// Canonical Alexander polynomial, deleting the first admissible
    /// column. Zero when the relators leave a free part (fewer relators
    /// than the minor size).
    pub fn alexander_polynomial(&self) -> Result<LaurentPoly> {
        let col = *self
            .admissible_columns()
            .first()
            .ok_or(Error::NoAdmissibleColumn)?;
        self.alexander_polynomial_deleting(col)
    }

    /// Same, deleting a caller-chosen admissible column. The result is
    /// independent of the choice for the presentations this tool targets
    /// (deleted generator of `phi`-value +-1).
    pub fn alexander_polynomial_deleting(&self, col: usize) -> Result<LaurentPoly> {
        if col >= self.phi.len() || self.phi[col] == 0 {
            return Err(Error::InvalidInput(format!(
                "column {col} is not admissible for deletion"
            )));
        }
        let k = self.generators.len() - 1;
        if k > self.relators.len() {
            return Ok(LaurentPoly::zero());
        }
        self.alexander_matrix().without_column(col).minors_gcd(k)
    }
}

/// Renders a word with uppercase letters for inverses of single-character
/// generators and `name^-1` otherwise.
pub(crate) fn word_to_string(word: &Word, generators: &[String]) -> String {
    let mut parts = Vec::with_capacity(word.len());
    for l in word {
        let name = &generators[l.gen];
        if !l.inverse {
            parts.push(name.clone());
        } else if name.len() == 1 && name.chars().all(|c| c.is_ascii_lowercase()) {
            parts.push(name.to_uppercase());
        } else {
            parts.push(format!("{name}^-1"));
        }
    }
    parts.join(" ")
}
