//! Text form of exact values.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! value    := term (sign term)?
//! term     := rational | rational "phi" | sign? "phi"
//! rational := sign? digits ("/" digits)?
//! ```
//!
//! Examples: `phi`, `3/2`, `2`, `1/2+3/4phi`, `2-phi`, `-1/2+phi`.

use super::golden::{GoldenNumber, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {position}: {message}")]
pub struct ParseGoldenError {
    pub position: usize,
    pub message: String,
}

struct Scanner<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Self { text, pos: 0 }
    }

    fn skip_space(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_ascii_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn error(&self, message: impl Into<String>) -> ParseGoldenError {
        ParseGoldenError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn eat_sign(&mut self) -> i8 {
        self.skip_space();
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                1
            }
            Some('-') => {
                self.pos += 1;
                -1
            }
            _ => 1,
        }
    }

    fn eat_keyword_phi(&mut self) -> bool {
        self.skip_space();
        if self.text[self.pos..].starts_with("phi") {
            self.pos += 3;
            true
        } else {
            false
        }
    }

    fn eat_integer(&mut self) -> Result<BigInt, ParseGoldenError> {
        self.skip_space();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a digit"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|e| self.error(format!("invalid integer: {e}")))
    }

    /// `digits ("/" digits)?` with the sign already consumed.
    fn eat_unsigned_rational(&mut self) -> Result<Rational, ParseGoldenError> {
        let numer = self.eat_integer()?;
        self.skip_space();
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_space();
            let denom_pos = self.pos;
            let denom = self.eat_integer()?;
            if denom.is_zero() {
                return Err(ParseGoldenError {
                    position: denom_pos,
                    message: "denominator must be nonzero".into(),
                });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    /// One term: either a pure rational or a phi term with an optional
    /// rational coefficient. Returns `(rational part, phi part)`.
    fn eat_term(&mut self) -> Result<(Rational, Rational), ParseGoldenError> {
        let sign = self.eat_sign();
        if self.eat_keyword_phi() {
            let coeff = apply_sign(Rational::one(), sign);
            return Ok((Rational::zero(), coeff));
        }
        let magnitude = self.eat_unsigned_rational()?;
        let value = apply_sign(magnitude, sign);
        if self.eat_keyword_phi() {
            Ok((Rational::zero(), value))
        } else {
            Ok((value, Rational::zero()))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_space();
        self.pos >= self.text.len()
    }
}

fn apply_sign(x: Rational, sign: i8) -> Rational {
    if sign < 0 {
        -x
    } else {
        x
    }
}

impl FromStr for GoldenNumber {
    type Err = ParseGoldenError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut sc = Scanner::new(text);
        let (mut r, mut s) = sc.eat_term()?;
        if !sc.at_end() {
            match sc.peek() {
                Some('+') | Some('-') => {
                    if !s.is_zero() {
                        return Err(sc.error("phi term must come last"));
                    }
                    let (r2, s2) = sc.eat_term()?;
                    if s2.is_zero() {
                        return Err(sc.error("second term must carry phi"));
                    }
                    r += r2;
                    s += s2;
                }
                _ => return Err(sc.error("unexpected trailing input")),
            }
        }
        if !sc.at_end() {
            return Err(sc.error("unexpected trailing input"));
        }
        Ok(GoldenNumber::new(r, s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> GoldenNumber {
        text.parse().unwrap()
    }

    #[test]
    fn accepts_the_stated_grammar() {
        assert_eq!(parse("phi"), GoldenNumber::phi());
        assert_eq!(parse("3/2"), GoldenNumber::from_parts(3, 2, 0, 1));
        assert_eq!(parse("2"), GoldenNumber::from_int(2));
        assert_eq!(
            parse("1/2+3/4phi"),
            GoldenNumber::from_parts(1, 2, 3, 4)
        );
        assert_eq!(parse(" 1/2 + 3/4 phi "), parse("1/2+3/4phi"));
        assert_eq!(parse("2-phi"), GoldenNumber::from_parts(2, 1, -1, 1));
        assert_eq!(parse("-phi"), -GoldenNumber::phi());
        assert_eq!(parse("-3/4phi"), GoldenNumber::from_parts(0, 1, -3, 4));
    }

    #[test]
    fn reports_positions() {
        let err = "3/x".parse::<GoldenNumber>().unwrap_err();
        assert_eq!(err.position, 2);
        let err = "1/0".parse::<GoldenNumber>().unwrap_err();
        assert_eq!(err.position, 2);
        assert!(err.message.contains("nonzero"));
        let err = "phi+2".parse::<GoldenNumber>().unwrap_err();
        assert!(err.position >= 3);
        assert!("".parse::<GoldenNumber>().is_err());
        assert!("1+2".parse::<GoldenNumber>().is_err());
        assert!("2 2".parse::<GoldenNumber>().is_err());
    }
}
