//! Exact linear algebra over Q and over the Laurent polynomial ring:
//! determinants, rank, and gcd-of-minors for elementary ideals.
//!
//! Polynomial determinants use fraction-free (Bareiss) elimination above
//! 3x3 to control coefficient growth; every division it performs is exact in
//! the ring. Small matrices use direct cofactor expansion, which doubles as
//! an independent cross-check in tests.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{LaurentPoly, Rational};

/// Dense row-major matrix over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Dense row-major matrix over the Laurent polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("ragged rows".into()));
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    /// Rank over Q by exact Gaussian elimination. Pivot selection scans the
    /// current column top to bottom for the first nonzero entry.
    pub fn rank(&self) -> usize {
        let mut m = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| !m[r * cols + col].is_zero()) else {
                continue;
            };
            for j in 0..cols {
                m.swap(rank * cols + j, pivot * cols + j);
            }
            let inv = m[rank * cols + col].recip();
            for r in rank + 1..rows {
                let factor = &m[r * cols + col] * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..cols {
                    let delta = &factor * &m[rank * cols + j];
                    m[r * cols + j] -= delta;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("ragged rows".into()));
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![LaurentPoly::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = LaurentPoly::one();
        }
        PolyMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidInput(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = LaurentPoly::zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.at(i, k) * other.at(k, j));
                }
                entries.push(acc);
            }
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::InvalidInput(
                "dimension mismatch in subtraction".into(),
            ));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    fn select(&self, row_idx: &[usize], col_idx: &[usize]) -> PolyMatrix {
        let entries = row_idx
            .iter()
            .flat_map(|&i| col_idx.iter().map(move |&j| self.at(i, j).clone()))
            .collect();
        PolyMatrix {
            rows: row_idx.len(),
            cols: col_idx.len(),
            entries,
        }
    }

    /// Copy of the matrix with one column removed.
    pub fn without_column(&self, col: usize) -> PolyMatrix {
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != col).collect();
        let rows: Vec<usize> = (0..self.rows).collect();
        self.select(&rows, &cols)
    }

    /// Exact determinant. Cofactor expansion up to 3x3, fraction-free
    /// Bareiss elimination above. Errors on non-square input.
    pub fn determinant(&self) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::NonSquareMatrix {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows <= 3 {
            Ok(self.det_cofactor())
        } else {
            self.det_bareiss()
        }
    }

    /// Determinant by direct cofactor expansion along the first row.
    /// Exponential; intended for small matrices and as the independent
    /// cross-check for the Bareiss route.
    pub fn det_cofactor(&self) -> LaurentPoly {
        assert!(self.is_square());
        let n = self.rows;
        match n {
            0 => LaurentPoly::one(),
            1 => self.at(0, 0).clone(),
            _ => {
                let mut acc = LaurentPoly::zero();
                let rows: Vec<usize> = (1..n).collect();
                for j in 0..n {
                    if self.at(0, j).is_zero() {
                        continue;
                    }
                    let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                    let minor = self.select(&rows, &cols).det_cofactor();
                    let term = self.at(0, j) * &minor;
                    acc = if j % 2 == 0 {
                        &acc + &term
                    } else {
                        &acc - &term
                    };
                }
                acc
            }
        }
    }

    /// Determinant by Bareiss fraction-free elimination. Laurent entries are
    /// first cleared to ordinary polynomials row by row (multiplying a row
    /// by `t^k` scales the determinant by `t^k`, undone at the end); every
    /// interior division is then exact in Q[t].
    pub fn det_bareiss(&self) -> Result<LaurentPoly> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut shift_total: i64 = 0;
        let mut m: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| {
                let row: Vec<&LaurentPoly> = (0..n).map(|j| self.at(i, j)).collect();
                let min = row
                    .iter()
                    .filter(|p| !p.is_zero())
                    .map(|p| p.min_degree())
                    .min()
                    .unwrap_or(0)
                    .min(0);
                shift_total += -min;
                row.into_iter().map(|p| p.mul_tpow(-min)).collect()
            })
            .collect();

        let mut sign_flip = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            let Some(pivot_row) = (k..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(LaurentPoly::zero());
            };
            if pivot_row != k {
                m.swap(pivot_row, k);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_div(&prev)?;
                }
                m[i][k] = LaurentPoly::zero();
            }
            prev = m[k][k].clone();
        }
        let mut det = m[n - 1][n - 1].mul_tpow(-shift_total);
        if sign_flip {
            det = -det;
        }
        Ok(det)
    }

    /// Canonical gcd of all `k x k` minors: the elementary-ideal generator
    /// used to extract Alexander polynomials from Fox matrices. Returns the
    /// canonical 1 for `k = 0` and 0 when every minor vanishes. Errors when
    /// `k` exceeds either dimension.
    pub fn minors_gcd(&self, k: usize) -> Result<LaurentPoly> {
        if k > self.rows || k > self.cols {
            return Err(Error::MinorTooLarge {
                k,
                rows: self.rows,
                cols: self.cols,
            });
        }
        if k == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut acc = LaurentPoly::zero();
        for row_idx in combinations(self.rows, k) {
            for col_idx in combinations(self.cols, k) {
                let d = self.select(&row_idx, &col_idx).determinant()?;
                acc = acc.gcd(&d);
                if acc.is_constant() && !acc.is_zero() {
                    return Ok(acc);
                }
            }
        }
        Ok(acc)
    }
}

/// All size-`k` subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len();
        for i in start..=n.saturating_sub(needed) {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    if k <= n {
        rec(0, n, k, &mut current, &mut out);
    }
    out
}
