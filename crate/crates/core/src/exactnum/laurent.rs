//! Laurent polynomials in one variable `t` with exact rational coefficients.
//!
//! A value represents `sum_i coeffs[i] * t^(min_degree + i)`. The coefficient
//! vector is kept trimmed: the first and last stored coefficients are nonzero
//! unless the polynomial is zero, which is stored as the empty vector with
//! `min_degree = 0`. Under that invariant structural equality coincides with
//! mathematical equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{rat_pow, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    min_degree: i64,
    coeffs: Vec<Rational>,
}

/// Sign of a rational as -1, 0, or +1.
pub(crate) fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl LaurentPoly {
    /// Builds from a minimum exponent and low-to-high coefficients, trimming
    /// zero coefficients at both ends.
    pub fn new(min_degree: i64, coeffs: Vec<Rational>) -> Self {
        let mut p = LaurentPoly { min_degree, coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        LaurentPoly {
            min_degree: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(0, vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        Self::new(k, vec![c])
    }

    /// Ordinary polynomial from low-to-high coefficients.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Self::new(0, coeffs)
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_coeffs(min_degree: i64, coeffs: &[i64]) -> Self {
        Self::new(
            min_degree,
            coeffs.iter().map(|&c| super::rat_int(c)).collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_degree += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_degree = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent of the lowest term. Conventionally 0 for the zero polynomial.
    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Exponent of the highest term, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_degree + self.coeffs.len() as i64 - 1)
        }
    }

    /// `degree - min_degree`, `None` for zero.
    pub fn span(&self) -> Option<i64> {
        self.degree().map(|d| d - self.min_degree)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^exp` (zero outside the stored range).
    pub fn coeff_at(&self, exp: i64) -> Rational {
        let idx = exp - self.min_degree;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Coefficient of the lowest stored term (not of `t^0`).
    pub fn lowest_coeff(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.min_degree == 0 && self.coeffs.len() == 1)
    }

    /// Multiplies by `t^k`.
    pub fn mul_tpow(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_degree: self.min_degree + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_degree: self.min_degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// The same coefficients re-based at exponent 0. Identity on zero.
    pub fn shifted_to_zero(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_degree: 0,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Exact evaluation. Errors at `x = 0` when negative exponents are
    /// present.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        if x.is_zero() {
            if self.min_degree < 0 {
                return Err(Error::EvalAtZeroWithNegativeExponents);
            }
            return Ok(if self.min_degree > 0 {
                Rational::zero()
            } else {
                self.coeffs[0].clone()
            });
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        Ok(acc * rat_pow(x, self.min_degree))
    }

    /// Formal derivative, `d/dt t^k = k t^(k-1)` for every integer `k`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * Rational::from(BigInt::from(self.min_degree + i as i64)))
            .collect();
        Self::new(self.min_degree - 1, coeffs)
    }

    /// Dense coefficient vector of the ordinary polynomial obtained by
    /// clearing negative exponents (multiplying by `t^-min` when the
    /// minimum exponent is negative). A nonnegative minimum exponent is
    /// genuine zero padding and is kept.
    fn ordinary_coeffs(&self) -> Vec<Rational> {
        let pad = self.min_degree.max(0) as usize;
        let mut v = vec![Rational::zero(); pad];
        v.extend(self.coeffs.iter().cloned());
        v
    }

    /// Euclidean division in Q[t]. Operands with negative exponents are
    /// first cleared to ordinary polynomials (each multiplied by its own
    /// `t^-min`); for ordinary operands the result satisfies exactly
    /// `a = q*b + r` with `deg r < deg b`.
    pub fn divrem(&self, b: &Self) -> Result<(Self, Self)> {
        if b.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let b_dense = b.ordinary_coeffs();
        let db = b_dense.len() - 1;
        let lead = b_dense[db].clone();
        let mut rem = self.ordinary_coeffs();
        if rem.len() <= db {
            return Ok((Self::zero(), Self::new(0, rem)));
        }
        let mut quot = vec![Rational::zero(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            let q = &rem[i] / &lead;
            if q.is_zero() {
                continue;
            }
            for j in 0..db {
                let delta = &q * &b_dense[j];
                rem[i - db + j] -= delta;
            }
            rem[i] = Rational::zero();
            quot[i - db] = q;
        }
        Ok((Self::new(0, quot), Self::new(0, rem)))
    }

    /// Exact division in the Laurent ring: errors if the remainder is
    /// nonzero. `t`-power units are handled, so `(1+t) / t^-1` works.
    pub fn exact_div(&self, b: &Self) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // divrem implicitly multiplied each operand by t^-min(min_degree, 0).
        let shift = self.min_degree.min(0) - b.min_degree.min(0);
        let (q, r) = self.divrem(b)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q.mul_tpow(shift))
    }

    /// Canonical gcd by the Euclidean algorithm over Q[t], with `t`-power
    /// units shifted out first. `gcd(a, 0)` is the canonical form of `a`;
    /// `gcd(0, 0)` is zero. The result is in canonical form.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.shifted_to_zero();
        let mut b = other.shifted_to_zero();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            Self::zero()
        } else {
            a.canonical().expect("nonzero")
        }
    }

    /// Unit-normalized form: minimum exponent 0, primitive integer
    /// coefficients, positive constant term. Idempotent. Errors on zero.
    pub fn canonical(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for n in &scaled {
            content = content.gcd(n);
        }
        // First stored coefficient is nonzero and becomes the constant term.
        let negate = scaled[0].is_negative();
        let coeffs = scaled
            .into_iter()
            .map(|n| {
                let v = &n / &content;
                Rational::from(if negate { -v } else { v })
            })
            .collect();
        Ok(LaurentPoly {
            min_degree: 0,
            coeffs,
        })
    }

    /// Canonical form, mapping zero to zero instead of erroring.
    pub fn canonical_or_zero(&self) -> Self {
        if self.is_zero() {
            Self::zero()
        } else {
            self.canonical().expect("nonzero")
        }
    }

    /// `p / gcd(p, p')` re-based to an ordinary polynomial: same roots as
    /// `p`, all simple. A squarefree input comes back unchanged up to the
    /// exponent shift.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.shifted_to_zero();
        let g = p.gcd(&p.derivative());
        p.exact_div(&g)
    }

    /// True when the coefficient sequence reads the same reversed.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    fn add_impl(&self, other: &Self, negate_other: bool) -> Self {
        if self.is_zero() {
            return if negate_other {
                -other.clone()
            } else {
                other.clone()
            };
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.min_degree.min(other.min_degree);
        let hi = (self.min_degree + self.coeffs.len() as i64)
            .max(other.min_degree + other.coeffs.len() as i64);
        let mut coeffs = vec![Rational::zero(); (hi - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_degree - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.min_degree - lo) as usize + i];
            if negate_other {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::new(lo, coeffs)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, other: &LaurentPoly) -> LaurentPoly {
        self.add_impl(other, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, other: &LaurentPoly) -> LaurentPoly {
        self.add_impl(other, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.min_degree + other.min_degree, coeffs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_degree: self.min_degree,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, other: LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, &other)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

/// Prints in the grammar `parse_poly` accepts: `2 - 12*t + 30*t^2`,
/// `t^-1 + 1`, `-1/2 + 3/2*t`, lowest exponent first.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = self.min_degree + i as i64;
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if exp == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if exp == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct PolyRepr<'a> {
    min_degree: i64,
    coeffs: Vec<CoeffOut<'a>>,
}

struct CoeffOut<'a>(&'a Rational);

impl Serialize for CoeffOut<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self.0)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            min_degree: self.min_degree,
            coeffs: self.coeffs.iter().map(CoeffOut).collect(),
        }
        .serialize(s)
    }
}

#[derive(Deserialize)]
struct PolyDeRepr {
    min_degree: i64,
    coeffs: Vec<CoeffIn>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffIn {
    Int(i64),
    Text(String),
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyDeRepr::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(repr.coeffs.len());
        for (i, c) in repr.coeffs.into_iter().enumerate() {
            let r = match c {
                CoeffIn::Int(n) => Rational::from(BigInt::from(n)),
                CoeffIn::Text(s) => s
                    .trim()
                    .parse::<Rational>()
                    .map_err(|e| D::Error::custom(format!("coeffs[{i}]: {e}")))?,
            };
            coeffs.push(r);
        }
        Ok(LaurentPoly::new(repr.min_degree, coeffs))
    }
}
