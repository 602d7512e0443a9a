//! HNN splitting data and the rational H1 surjectivity hypothesis check.
//!
//! For `G = <t, H | t^-1 iota_plus(a) t = iota_minus(a)>` the criterion
//! needs both edge maps to induce surjections `H1(A;Q) -> H1(H;Q)`. With
//! `H1(H;Q)` presented as `Q^gens` modulo the abelianized relators, a side
//! is surjective when the images of the supplied generators of `A` span the
//! quotient. A positive answer from a subset of generators is sound for all
//! of `A`; a negative answer is only relative to the supplied subset.

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, Rational};
use crate::linalg::RationalMatrix;
use crate::topology::fox::Word;

/// Which edge map of the HNN splitting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Plus => write!(f, "plus"),
            Side::Minus => write!(f, "minus"),
        }
    }
}

/// Outcome of the surjectivity check, with a dimension-count witness on
/// failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurjectivityOutcome {
    SurjectiveBoth,
    NotSurjective {
        side: Side,
        achieved_rank: usize,
        required_rank: usize,
    },
}

impl SurjectivityOutcome {
    pub fn is_surjective_both(&self) -> bool {
        matches!(self, SurjectivityOutcome::SurjectiveBoth)
    }
}

impl std::fmt::Display for SurjectivityOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SurjectivityOutcome::SurjectiveBoth => write!(f, "surjective_both"),
            SurjectivityOutcome::NotSurjective {
                side,
                achieved_rank,
                required_rank,
            } => write!(
                f,
                "not_surjective({side}, rank {achieved_rank} < {required_rank})"
            ),
        }
    }
}

/// HNN splitting data: a presentation of the vertex group `H` (no `phi`),
/// names for the supplied generators of the edge group `A`, and the two
/// edge-map images as words in `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnnData {
    h_generators: Vec<String>,
    h_relators: Vec<Word>,
    a_generators: Vec<String>,
    iota_plus: Vec<Word>,
    iota_minus: Vec<Word>,
}

impl HnnData {
    /// Validates that both image maps are defined on every supplied
    /// `A`-generator and that all words stay inside `H`'s generators.
    pub fn new(
        h_generators: Vec<String>,
        h_relators: Vec<Word>,
        a_generators: Vec<String>,
        iota_plus: Vec<Word>,
        iota_minus: Vec<Word>,
    ) -> Result<Self> {
        if iota_plus.len() != a_generators.len() || iota_minus.len() != a_generators.len() {
            return Err(Error::InvalidInput(
                "iota_plus and iota_minus must be defined on every a-generator".into(),
            ));
        }
        for word in h_relators.iter().chain(&iota_plus).chain(&iota_minus) {
            for letter in word {
                if letter.gen >= h_generators.len() {
                    return Err(Error::UnknownGenerator(format!("#{}", letter.gen)));
                }
            }
        }
        Ok(HnnData {
            h_generators,
            h_relators,
            a_generators,
            iota_plus,
            iota_minus,
        })
    }

    pub fn h_generators(&self) -> &[String] {
        &self.h_generators
    }

    pub fn h_relators(&self) -> &[Word] {
        &self.h_relators
    }

    pub fn a_generators(&self) -> &[String] {
        &self.a_generators
    }

    pub fn iota(&self, side: Side) -> &[Word] {
        match side {
            Side::Plus => &self.iota_plus,
            Side::Minus => &self.iota_minus,
        }
    }

    fn abelianized_row(&self, word: &Word) -> Vec<Rational> {
        let mut row = vec![rat_int(0); self.h_generators.len()];
        for l in word {
            let delta = if l.inverse { rat_int(-1) } else { rat_int(1) };
            row[l.gen] += delta;
        }
        row
    }

    fn side_is_surjective(&self, side: Side) -> (bool, usize, usize) {
        let n = self.h_generators.len();
        let mut rows: Vec<Vec<Rational>> = self
            .h_relators
            .iter()
            .map(|r| self.abelianized_row(r))
            .collect();
        rows.extend(self.iota(side).iter().map(|w| self.abelianized_row(w)));
        let m = RationalMatrix::from_rows(rows).expect("uniform width");
        let rank = if n == 0 { 0 } else { m.rank() };
        (rank == n, rank, n)
    }

    /// Checks both edge maps, minus side first. Returns the first failing
    /// side with its rank witness, or [`SurjectivityOutcome::SurjectiveBoth`].
    pub fn h1_surjectivity(&self) -> SurjectivityOutcome {
        for side in [Side::Minus, Side::Plus] {
            let (ok, achieved_rank, required_rank) = self.side_is_surjective(side);
            if !ok {
                return SurjectivityOutcome::NotSurjective {
                    side,
                    achieved_rank,
                    required_rank,
                };
            }
        }
        SurjectivityOutcome::SurjectiveBoth
    }
}
