//! Polynomial expression parser.
//!
//! Grammar: signed terms `c`, `c*t^k`, `c*t`, `t^k`, `t` with integer or
//! rational `c` and any integer exponent `k`, whitespace-insensitive, e.g.
//! `2 - 12*t + 30*t^2`, `t^-1 + 1`, `3/2*t - 1/2`. Input starting with `{`
//! is instead read as the JSON object form
//! `{"min_degree": k, "coeffs": [...]}`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{LaurentPoly, Rational};

/// Parses a polynomial expression (or its JSON object form) into the exact
/// internal representation. No unit normalization is applied: the value is
/// exactly what was written.
pub fn parse_poly(text: &str) -> Result<LaurentPoly> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).map_err(|e| Error::Syntax {
            position: 0,
            message: e.to_string(),
        });
    }
    Parser::new(text).parse()
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            text,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let _ = self.text;
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn parse(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error("empty polynomial"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                if first {
                    return Err(self.error("expected a term"));
                }
                return Ok(acc);
            }
            let negative = match self.peek() {
                Some('+') => {
                    self.bump();
                    false
                }
                Some('-') => {
                    self.bump();
                    true
                }
                _ if first => false,
                Some(c) => return Err(self.error(format!("expected `+` or `-`, found `{c}`"))),
                None => unreachable!(),
            };
            self.skip_ws();
            let (coeff, exp) = self.parse_term()?;
            let coeff = if negative { -coeff } else { coeff };
            acc = &acc + &LaurentPoly::monomial(coeff, exp);
            first = false;
        }
    }

    /// One unsigned term: `c`, `c*t`, `c*t^k`, `t`, or `t^k`.
    fn parse_term(&mut self) -> Result<(Rational, i64)> {
        match self.peek() {
            Some('t') => {
                let exp = self.parse_tpart()?;
                Ok((Rational::from(BigInt::from(1)), exp))
            }
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.parse_number()?;
                self.skip_ws();
                if self.peek() == Some('*') {
                    self.bump();
                    self.skip_ws();
                    if self.peek() != Some('t') {
                        return Err(self.error("expected `t` after `*`"));
                    }
                    let exp = self.parse_tpart()?;
                    Ok((coeff, exp))
                } else {
                    Ok((coeff, 0))
                }
            }
            Some(c) => Err(self.error(format!("expected a term, found `{c}`"))),
            None => Err(self.error("expected a term")),
        }
    }

    /// `t`, `t^k`, `t^-k`. Assumes the current character is `t`.
    fn parse_tpart(&mut self) -> Result<i64> {
        self.bump();
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.bump();
        self.skip_ws();
        let negative = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        let digits = self.parse_digits()?;
        let exp: i64 = digits
            .parse()
            .map_err(|_| self.error("exponent out of range"))?;
        Ok(if negative { -exp } else { exp })
    }

    fn parse_digits(&mut self) -> Result<String> {
        let mut s = String::new();
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            s.push(self.bump().expect("digit"));
        }
        if s.is_empty() {
            return Err(self.error("expected digits"));
        }
        Ok(s)
    }

    /// Unsigned `int` or `int/int`.
    fn parse_number(&mut self) -> Result<Rational> {
        let numer: BigInt = self
            .parse_digits()?
            .parse()
            .expect("digits form an integer");
        self.skip_ws();
        if self.peek() == Some('/') {
            self.bump();
            self.skip_ws();
            let denom: BigInt = self
                .parse_digits()?
                .parse()
                .expect("digits form an integer");
            if denom.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from(numer))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn lp(min: i64, coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_int_coeffs(min, coeffs)
    }

    #[test]
    fn degree_six_example() {
        let p = parse_poly("2 - 12*t + 30*t^2 - 39*t^3 + 30*t^4 - 12*t^5 + 2*t^6").unwrap();
        assert_eq!(p, lp(0, &[2, -12, 30, -39, 30, -12, 2]));
    }

    #[test]
    fn laurent_and_rational_terms() {
        assert_eq!(parse_poly("t^-1 + 1").unwrap(), lp(-1, &[1, 1]));
        let p = parse_poly("3/2*t - 1/2").unwrap();
        assert_eq!(p, LaurentPoly::new(0, vec![rat(-1, 2), rat(3, 2)]));
        assert_eq!(parse_poly("-t").unwrap(), lp(1, &[-1]));
        assert_eq!(parse_poly("7").unwrap(), lp(0, &[7]));
        assert_eq!(parse_poly("t + t").unwrap(), lp(1, &[2]));
        assert_eq!(parse_poly("  t^3+1 ").unwrap(), lp(0, &[1, 0, 0, 1]));
    }

    #[test]
    fn json_form() {
        assert_eq!(
            parse_poly(r#"{"min_degree": -1, "coeffs": ["1", "1"]}"#).unwrap(),
            lp(-1, &[1, 1])
        );
        assert_eq!(
            parse_poly(r#"{"min_degree": 0, "coeffs": [1, "-3/2"]}"#).unwrap(),
            LaurentPoly::new(0, vec![rat(1, 1), rat(-3, 2)])
        );
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly("2 + * t") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_poly("").is_err());
        assert!(parse_poly("1/0").is_err());
        assert!(parse_poly("2**t").is_err());
        assert!(parse_poly("t^").is_err());
        assert!(parse_poly("2 2").is_err());
    }

    #[test]
    fn display_round_trip() {
        for text in [
            "2 - 12*t + 30*t^2",
            "t^-1 + 1",
            "-1/2 + 3/2*t",
            "-t + t^5",
            "4",
        ] {
            let p = parse_poly(text).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }
}
