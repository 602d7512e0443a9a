//! Constructive no-positive-root certificates.
//!
//! A nonzero polynomial has no positive real root exactly when some nonzero
//! multiplier makes every nonzero coefficient of the product positive. The
//! multiplier family here is `(1+t)^N`, which always succeeds for some `N`
//! when the canonical form is root-free on `[0, oo)`; the search returns the
//! smallest such exponent. Verification is a single exact multiplication and
//! a scan of coefficient signs, independent of how the certificate was
//! found.

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{rat_int, LaurentPoly};
use crate::realroots::sturm::count_positive_roots;

/// A multiplier `g` and the product `g * p` with all nonzero coefficients
/// positive and positive constant term. `polya_exponent` is set when the
/// multiplier was found as `(1+t)^N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivityCertificate {
    pub polya_exponent: Option<u32>,
    pub multiplier: LaurentPoly,
    pub product: LaurentPoly,
}

impl PositivityCertificate {
    /// Re-checks the certificate against `p`: the stored product must equal
    /// `multiplier * canonical(p)` and must have only nonnegative
    /// coefficients with a positive constant term.
    pub fn verify_against(&self, p: &LaurentPoly) -> bool {
        let Ok(c) = p.canonical() else { return false };
        &self.multiplier * &c == self.product && verify_positive_combination(p, &self.multiplier)
    }
}

fn all_nonneg_with_positive_constant(p: &LaurentPoly) -> bool {
    !p.is_zero() && p.min_degree() == 0 && p.coeffs().iter().all(|c| !c.is_negative())
}

/// True iff all nonzero coefficients of `canonical(g * p)` are positive with
/// a positive constant term. False when either factor is zero.
pub fn verify_positive_combination(p: &LaurentPoly, g: &LaurentPoly) -> bool {
    let prod = g * p;
    if prod.is_zero() {
        return false;
    }
    all_nonneg_with_positive_constant(&prod.canonical().expect("nonzero"))
}

/// Searches for the smallest `N <= cap` such that `(1+t)^N * canonical(p)`
/// has only nonnegative coefficients (its constant term is then positive).
///
/// Errors: [`Error::HasPositiveRoot`] when a certificate provably cannot
/// exist; [`Error::CertificateCapExceeded`] when every `N <= cap` fails;
/// [`Error::ZeroPolynomial`] on zero input.
pub fn polya_certificate(p: &LaurentPoly, cap: u32) -> Result<PositivityCertificate> {
    let c = p.canonical()?;
    if count_positive_roots(&c)? > 0 {
        return Err(Error::HasPositiveRoot);
    }
    let one_plus_t = LaurentPoly::from_int_coeffs(0, &[1, 1]);
    let mut multiplier = LaurentPoly::constant(rat_int(1));
    let mut product = c;
    for n in 0..=cap {
        if all_nonneg_with_positive_constant(&product) {
            return Ok(PositivityCertificate {
                polya_exponent: Some(n),
                multiplier,
                product,
            });
        }
        multiplier = &multiplier * &one_plus_t;
        product = &product * &one_plus_t;
    }
    Err(Error::CertificateCapExceeded { cap })
}
