//! Sturm chains and sign-based root counting on `(0, oo)`.
//!
//! The chain is built from the squarefree part of the input, so the count is
//! of distinct roots; multiplicity is deliberately discarded because the
//! downstream criterion is existential. The count on `(0, oo)` is the
//! difference of sign variations at `0` (exact evaluation, the constant term
//! is nonzero after canonicalization) and at `+oo` (leading-coefficient
//! signs), so no explicit right endpoint is ever chosen.

use num_traits::Signed;

use crate::error::Result;
use crate::exactnum::{rat_int, sign_of, LaurentPoly, Rational};

/// Signed-remainder sequence of the squarefree part of a polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<LaurentPoly>,
}

impl SturmChain {
    /// Builds the chain for `p` (nonzero): squarefree part first, then its
    /// derivative, then negated Euclidean remainders until exhaustion.
    pub fn new(p: &LaurentPoly) -> Result<Self> {
        Self::from_squarefree(p.squarefree_part()?)
    }

    /// Builds the chain from an already-squarefree ordinary polynomial.
    pub(crate) fn from_squarefree(sf: LaurentPoly) -> Result<Self> {
        let mut chain = vec![sf];
        let d = chain[0].derivative();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].divrem(&chain[n - 1])?;
                if r.is_zero() {
                    break;
                }
                chain.push(-r);
            }
        }
        Ok(SturmChain { chain })
    }

    pub fn chain(&self) -> &[LaurentPoly] {
        &self.chain
    }

    /// Target polynomial of the chain (the squarefree part).
    pub fn head(&self) -> &LaurentPoly {
        &self.chain[0]
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut prev: Option<i8> = None;
        for s in signs.filter(|&s| s != 0) {
            if let Some(p) = prev {
                if p != s {
                    count += 1;
                }
            }
            prev = Some(s);
        }
        count
    }

    /// Sign variations of the chain evaluated at `x >= 0`.
    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(
            self.chain
                .iter()
                .map(|p| sign_of(&p.eval(x).expect("chain entries are ordinary polynomials"))),
        )
    }

    /// Sign variations at `+oo`: signs of the leading coefficients.
    pub fn variations_at_pos_infinity(&self) -> usize {
        Self::variations(
            self.chain
                .iter()
                .map(|p| p.leading_coeff().map_or(0, sign_of)),
        )
    }

    /// Number of distinct roots in the half-open interval `(a, b]`,
    /// requiring `head(a) != 0`.
    pub fn count_in_halfopen(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct roots in `(0, oo)`.
    pub fn count_positive(&self) -> usize {
        self.variations_at(&rat_int(0)) - self.variations_at_pos_infinity()
    }
}

/// Exact number of distinct real roots of `p` in `(0, oo)`. Errors on the
/// zero polynomial. The input is canonicalized first, so `t`-power units and
/// scalar factors are irrelevant.
pub fn count_positive_roots(p: &LaurentPoly) -> Result<usize> {
    let c = p.canonical()?;
    // Descartes prefilter: zero coefficient sign variations already prove
    // there is no positive root, without building the chain.
    if coefficient_variations(&c) == 0 {
        return Ok(0);
    }
    Ok(SturmChain::new(&c)?.count_positive())
}

/// Parity of a Descartes bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

fn coefficient_variations(p: &LaurentPoly) -> usize {
    SturmChain::variations(p.coeffs().iter().map(sign_of))
}

/// Descartes bound on the number of distinct positive roots, with its
/// parity. Computed as the coefficient sign variations of the squarefree
/// part, so that bound and exact count always agree modulo 2; a bound of 0
/// proves there is no positive root. Errors on the zero polynomial.
pub fn descartes_bound(p: &LaurentPoly) -> Result<(usize, Parity)> {
    let v = coefficient_variations(&p.squarefree_part()?);
    let parity = if v.is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    };
    Ok((v, parity))
}

/// Cauchy root bound `B = 1 + max_{i<deg} |a_i| / |a_deg|`: every real root
/// of `p` lies in `(-B, B)`. Errors on the zero polynomial.
pub fn cauchy_bound(p: &LaurentPoly) -> Result<Rational> {
    let c = p.canonical()?;
    let lead = c.leading_coeff().expect("nonzero").abs();
    let n = c.coeffs().len();
    let mut max = rat_int(0);
    for a in &c.coeffs()[..n - 1] {
        let m = a.abs();
        if m > max {
            max = m;
        }
    }
    Ok(rat_int(1) + max / lead)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn lp(min: i64, coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_int_coeffs(min, coeffs)
    }

    #[test]
    fn chain_by_hand() {
        // t^2 - 3t + 1 -> [t^2 - 3t + 1, 2t - 3, 5/4]
        let chain = SturmChain::new(&lp(0, &[1, -3, 1])).unwrap();
        assert_eq!(
            chain.chain(),
            &[
                lp(0, &[1, -3, 1]),
                lp(0, &[-3, 2]),
                LaurentPoly::constant(rat(5, 4)),
            ]
        );
    }

    #[test]
    fn chain_linear_and_multiplicity() {
        let chain = SturmChain::new(&lp(0, &[-2, 1])).unwrap();
        assert_eq!(chain.chain(), &[lp(0, &[-2, 1]), LaurentPoly::one()]);
        // (t - 2)^2 reduces to its squarefree part
        let chain = SturmChain::new(&lp(0, &[4, -4, 1])).unwrap();
        assert_eq!(chain.head(), &lp(0, &[2, -1]));
        assert_eq!(chain.count_positive(), 1);
    }

    #[test]
    fn counts_match_hand_derivations() {
        // Roots (3 +- sqrt(5))/2, both positive.
        assert_eq!(count_positive_roots(&lp(0, &[1, -3, 1])).unwrap(), 2);
        // Negative discriminant.
        assert_eq!(count_positive_roots(&lp(0, &[1, -1, 1])).unwrap(), 0);
        // The degree-six polynomial with positive-definite sign pattern.
        let delta = lp(0, &[2, -12, 30, -39, 30, -12, 2]);
        assert_eq!(count_positive_roots(&delta).unwrap(), 0);
        // Laurent units do not matter.
        assert_eq!(
            count_positive_roots(&lp(-3, &[1, -3, 1]).scale(&rat(-1, 7))).unwrap(),
            2
        );
        assert_eq!(count_positive_roots(&LaurentPoly::one()).unwrap(), 0);
    }

    #[test]
    fn descartes_examples() {
        assert_eq!(
            descartes_bound(&lp(0, &[1, 0, 0, 1])).unwrap(),
            (0, Parity::Even)
        );
        let delta = lp(0, &[2, -12, 30, -39, 30, -12, 2]);
        assert_eq!(descartes_bound(&delta).unwrap(), (6, Parity::Even));
        assert_eq!(
            descartes_bound(&lp(0, &[1, -3, 1])).unwrap(),
            (2, Parity::Even)
        );
        assert_eq!(descartes_bound(&lp(0, &[-2, 1])).unwrap(), (1, Parity::Odd));
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(cauchy_bound(&lp(0, &[1, -3, 1])).unwrap(), rat_int(4));
        assert_eq!(cauchy_bound(&lp(0, &[-2, 1])).unwrap(), rat_int(3));
        assert_eq!(cauchy_bound(&lp(0, &[1, 0, 0, 1])).unwrap(), rat_int(2));
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(count_positive_roots(&LaurentPoly::zero()).is_err());
        assert!(descartes_bound(&LaurentPoly::zero()).is_err());
        assert!(cauchy_bound(&LaurentPoly::zero()).is_err());
    }
}
