//! Exact arbitrary-precision rationals and Laurent polynomials over Q.
//!
//! Everything downstream (root counting, determinants, Fox calculus) is built
//! on the two types here. There is no floating point anywhere in the crate:
//! root existence must be decidable, not approximate.

mod laurent;

pub(crate) use laurent::sign_of;
pub use laurent::LaurentPoly;

use num_bigint::BigInt;

/// Exact rational number, always reduced, denominator >= 1, zero is 0/1.
///
/// `num_rational::BigRational` maintains exactly these invariants, so it is
/// used directly rather than wrapped.
pub type Rational = num_rational::BigRational;

/// Rational from an integer numerator and denominator. Panics on `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rational {
    Rational::from(BigInt::from(num))
}

/// Exact integer power with negative exponents allowed. Panics on `0^k` for
/// `k < 0`.
pub fn rat_pow(x: &Rational, k: i64) -> Rational {
    use num_traits::One;
    if k == 0 {
        return Rational::one();
    }
    let base = if k < 0 { x.recip() } else { x.clone() };
    let mut e = k.unsigned_abs();
    let mut acc = Rational::one();
    let mut sq = base;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}
