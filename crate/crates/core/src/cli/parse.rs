//! Recursive-descent parser for polynomial expressions in `t`.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := rational | 't' | '(' expr ')'
//! rational := int ('/' posint)?
//! ```

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{QPoly, Rat};

/// Exponents above this are rejected to keep inputs at desk scale.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    SyntaxError { offset: usize, message: String },
    #[error("not a polynomial at offset {offset}: only division of integer constants is allowed")]
    NonPolynomial { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::SyntaxError { offset, .. } | ParseError::NonPolynomial { offset } => {
                *offset
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::SyntaxError {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn unexpected<T>(&mut self, wanted: &str) -> Result<T, ParseError> {
        match self.peek() {
            Some(c) => self.error(format!("expected {wanted}, found '{}'", c as char)),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<QPoly, ParseError> {
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        if self.peek() == Some(b'/') {
            return Err(ParseError::NonPolynomial { offset: self.pos });
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<QPoly, ParseError> {
        let base = self.base()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let start = self.pos;
        let Some(e) = self.digits()? else {
            return self.unexpected("an exponent");
        };
        match u32::try_from(&e) {
            Ok(e) if e <= MAX_EXPONENT => Ok(base.pow(e)),
            _ => Err(ParseError::SyntaxError {
                offset: start,
                message: format!("exponent exceeds {MAX_EXPONENT}"),
            }),
        }
    }

    fn base(&mut self) -> Result<QPoly, ParseError> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok(QPoly::t(()))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.unexpected("')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.rational(),
            _ => self.unexpected("a number, 't' or '('"),
        }
    }

    fn rational(&mut self) -> Result<QPoly, ParseError> {
        let n = self.digits()?.expect("caller saw a digit");
        if self.peek() != Some(b'/') {
            return Ok(QPoly::constant(Rat::from_integer(n)));
        }
        let slash = self.pos;
        self.pos += 1;
        match self.digits()? {
            Some(d) if d.is_zero() => Err(ParseError::SyntaxError {
                offset: slash + 1,
                message: "division by zero".into(),
            }),
            Some(d) => Ok(QPoly::constant(Rat::new(n, d))),
            None => Err(ParseError::NonPolynomial { offset: slash }),
        }
    }

    fn digits(&mut self) -> Result<Option<BigInt>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(Some(text.parse().expect("digits parse")))
    }
}

/// Parses a polynomial in `t` with rational coefficients.
pub fn parse_polynomial(src: &str) -> Result<QPoly, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.unexpected("an operator or end of input");
    }
    Ok(out)
}
