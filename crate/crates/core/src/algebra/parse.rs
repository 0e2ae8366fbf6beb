//! Polynomial expression parser and printer.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' nat)?
//! base   := variable | integer | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::field::{Field, Scalar};
use super::monomial::Monomial;
use super::poly::{Polynomial, Term};
use super::ring::Ring;
use crate::error::{Error, Result};

/// Largest exponent accepted after `^`.
const MAX_LITERAL_EXPONENT: u32 = 1 << 16;

impl Polynomial {
    pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            ring,
        };
        let f = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.err(format!("unexpected '{}'", p.src[p.pos] as char)));
        }
        Ok(f)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg_ref();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add_ref(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub_ref(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul_ref(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected a natural-number exponent after '^'"));
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let e: u32 = digits
                .parse()
                .ok()
                .filter(|e| *e <= MAX_LITERAL_EXPONENT)
                .ok_or_else(|| Error::parse(start, format!("exponent {digits} is too large")))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if let Some(&c) = self.src.get(self.pos) {
                    if c == b'.' || c == b'/' {
                        return Err(self.err("only integer coefficient literals are accepted"));
                    }
                    if c.is_ascii_alphabetic() || c == b'_' {
                        return Err(self.err("missing '*' between literal and variable"));
                    }
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = digits.parse().expect("digits");
                Ok(Polynomial::constant(self.ring, self.ring.field().from_bigint(&n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                self.ring
                    .var_by_name(name)
                    .ok_or_else(|| Error::parse(start, format!("unknown variable '{name}'")))
            }
            Some(c) => Err(self.err(format!("unexpected '{}'", c as char))),
        }
    }
}

fn format_monomial(m: &Monomial, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{e}", vars[i])),
        }
    }
    parts.join("*")
}

/// Formats a canonical term list. Integer coefficients print in a form
/// [`Polynomial::parse`] reads back.
pub(crate) fn format_terms(terms: &[Term], vars: &[String], field: Field) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, t) in terms.iter().enumerate() {
        let neg = field.is_negative(&t.coeff);
        let abs: Scalar = if neg { field.neg(&t.coeff) } else { t.coeff.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = format_monomial(&t.mono, vars);
        let coeff = field.display(&abs);
        if mono.is_empty() {
            out.push_str(&coeff);
        } else if field.is_one(&abs) {
            out.push_str(&mono);
        } else {
            out.push_str(&coeff);
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}
