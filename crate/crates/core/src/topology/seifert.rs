//! Seifert matrices and the Seifert-matrix route to the Alexander
//! polynomial, `det(tV - V^T)` up to units.

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, LaurentPoly, Rational};
use crate::linalg::{PolyMatrix, RationalMatrix};

/// Square integer linking matrix `V` of a Seifert surface, of even dimension
/// `2g`. The two flags record topological assertions the software cannot
/// verify: that the surface realizes the knot genus, and that the ambient
/// manifold is a rational homology 3-sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    v: Vec<Vec<i64>>,
    pub minimal_genus_asserted: bool,
    pub ambient_qhs3_asserted: bool,
}

impl SeifertMatrix {
    /// Validates squareness and even dimension.
    pub fn new(
        v: Vec<Vec<i64>>,
        minimal_genus_asserted: bool,
        ambient_qhs3_asserted: bool,
    ) -> Result<Self> {
        let dim = v.len();
        if v.iter().any(|row| row.len() != dim) {
            return Err(Error::InvalidInput("Seifert matrix must be square".into()));
        }
        if !dim.is_multiple_of(2) {
            return Err(Error::OddSeifertDimension { dim });
        }
        Ok(SeifertMatrix {
            v,
            minimal_genus_asserted,
            ambient_qhs3_asserted,
        })
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.v
    }

    /// Genus of the represented surface, `dim / 2`. Only meaningful (and
    /// only available) when the matrix is asserted to come from a
    /// minimal-genus surface.
    pub fn genus(&self) -> Result<u32> {
        if !self.minimal_genus_asserted {
            return Err(Error::GenusNotAsserted);
        }
        Ok((self.dim() / 2) as u32)
    }

    /// Canonical Alexander polynomial `det(tV - V^T)`, zero when the
    /// determinant vanishes identically.
    pub fn alexander_polynomial(&self) -> Result<LaurentPoly> {
        let n = self.dim();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                // t*V[i][j] - V[j][i]
                row.push(LaurentPoly::from_int_coeffs(
                    0,
                    &[-self.v[j][i], self.v[i][j]],
                ));
            }
            rows.push(row);
        }
        Ok(PolyMatrix::from_rows(rows)?
            .determinant()?
            .canonical_or_zero())
    }

    /// Whether `det(V) != 0` over Q, the determinant form of the
    /// rationally-homologically-fibered condition for a minimal-genus
    /// Seifert matrix.
    pub fn det_nonzero(&self) -> bool {
        let n = self.dim();
        let entries: Vec<Rational> = self.v.iter().flatten().map(|&x| rat_int(x)).collect();
        let m = RationalMatrix::new(n, n, entries).expect("square by construction");
        m.rank() == n
    }
}

/// Rationally-homologically-fibered test: the canonical Alexander
/// polynomial is nonzero and spans exactly `2 * genus`. For the Seifert
/// route this is equivalent to `det(V) != 0`.
pub fn rhf_check(delta: &LaurentPoly, genus: u32) -> bool {
    !delta.is_zero() && delta.span() == Some(2 * i64::from(genus))
}
