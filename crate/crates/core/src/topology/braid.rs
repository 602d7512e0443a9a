//! Braid words, the reduced Burau representation, and the braid-closure
//! route to the Alexander polynomial.
//!
//! Generators map to the standard `(n-1) x (n-1)` reduced Burau matrices
//! over the Laurent ring; a negative letter maps to the exact inverse
//! matrix. For a braid whose closure is a knot,
//! `det(burau(w) - I) / (1 + t + ... + t^(n-1))` is the Alexander
//! polynomial up to units, and the division is exact.

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, LaurentPoly};
use crate::linalg::PolyMatrix;

/// A word in the Artin generators of the braid group on `strands` strands.
/// Letter `i > 0` is the `i`-th generator, `-i` its inverse; `|i| < strands`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    /// Validates strand count and letter ranges. The knot-closure condition
    /// is checked separately (see [`BraidWord::is_knot_closure`]) so that
    /// the representation itself stays usable for arbitrary braids.
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidInput(
                "a braid needs at least 2 strands".into(),
            ));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::BraidLetterOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    /// Number of components of the closure: cycles of the underlying
    /// permutation.
    pub fn closure_components(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize - 1;
            perm.swap(k, k + 1);
        }
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    pub fn is_knot_closure(&self) -> bool {
        self.closure_components() == 1
    }

    /// Product of the reduced Burau images of the letters, in word order.
    /// The empty word gives the identity.
    pub fn reduced_burau(&self) -> PolyMatrix {
        let mut acc = PolyMatrix::identity(self.strands - 1);
        for &l in &self.letters {
            let gen = burau_generator(self.strands, l.unsigned_abs() as usize, l < 0);
            acc = acc.mul(&gen).expect("square matrices of equal size");
        }
        acc
    }

    /// Canonical Alexander polynomial of the knot closure:
    /// `det(burau - I) * (t - 1) / (t^n - 1)`. Errors when the closure is
    /// not a knot or (internal error) when the division is not exact.
    pub fn alexander_polynomial(&self) -> Result<LaurentPoly> {
        let components = self.closure_components();
        if components != 1 {
            return Err(Error::NotAKnotClosure { components });
        }
        let n = self.strands;
        let burau = self.reduced_burau();
        let det = burau.sub(&PolyMatrix::identity(n - 1))?.determinant()?;
        if det.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // 1 + t + ... + t^(n-1)
        let cyclic_sum = LaurentPoly::new(0, vec![rat_int(1); n]);
        Ok(det.exact_div(&cyclic_sum)?.canonical_or_zero())
    }
}

/// Reduced Burau image of generator `i` (1-based) in the braid group on `n`
/// strands, or of its inverse.
fn burau_generator(n: usize, i: usize, inverse: bool) -> PolyMatrix {
    debug_assert!(i >= 1 && i < n);
    let size = n - 1;
    let mut rows = vec![vec![LaurentPoly::zero(); size]; size];
    for (d, row) in rows.iter_mut().enumerate() {
        row[d] = LaurentPoly::one();
    }
    let t = |k: i64| LaurentPoly::monomial(rat_int(1), k);
    let c = i - 1;
    if inverse {
        rows[c][c] = -t(-1);
        if i >= 2 {
            rows[c - 1][c] = LaurentPoly::one();
        }
        if i <= n - 2 {
            rows[c + 1][c] = t(-1);
        }
    } else {
        rows[c][c] = -t(1);
        if i >= 2 {
            rows[c - 1][c] = t(1);
        }
        if i <= n - 2 {
            rows[c + 1][c] = LaurentPoly::one();
        }
    }
    PolyMatrix::from_rows(rows).expect("rectangular by construction")
}
