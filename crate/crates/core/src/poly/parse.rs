//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr    := ['+' | '-'] term (('+' | '-') term)*
//! term    := power ('*' power)*
//! power   := primary ['^' digits]
//! primary := number | ident | '(' expr ')'
//! number  := digits ['/' digits]
//! ident   := [A-Za-z_][A-Za-z0-9_]* ('@' digits)*
//! ```

use alloc::string::{String, ToString};
use alloc::sync::Arc;

use super::{Polynomial, Rational, VarSet};
use crate::error::{Error, Result};

/// Checks a name against the identifier rule of the grammar.
pub fn is_identifier(name: &str) -> bool {
    let mut parts = name.split('@');
    let head = parts.next().unwrap_or("");
    let mut chars = head.chars();
    let head_ok = match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {
            chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        }
        _ => false,
    };
    head_ok && parts.all(|p| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()))
}

pub(super) fn parse(text: &str, vars: &Arc<VarSet>) -> Result<Polynomial> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Arc<VarSet>,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
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

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while self.eat(b'*') {
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if self.eat(b'^') {
            self.skip_ws();
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected exponent after `^`"));
            }
            let exp: u32 = digits
                .parse()
                .map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn primary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.ident(),
            Some(_) => Err(self.error("expected number, identifier or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<Polynomial> {
        let num = self.digits();
        let mut value: Rational = Rational::from_integer(num.parse().expect("digits"));
        if self.pos < self.src.len() && self.src[self.pos] == b'/' {
            self.pos += 1;
            let den = self.digits();
            if den.is_empty() {
                return Err(self.error("expected denominator after `/`"));
            }
            let den: num_bigint::BigInt = den.parse().expect("digits");
            if num_traits::Zero::is_zero(&den) {
                return Err(self.error("zero denominator"));
            }
            value /= Rational::from_integer(den);
        }
        Ok(Polynomial::constant(self.vars, value))
    }

    fn ident(&mut self) -> Result<Polynomial> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos] == b'@' {
            self.pos += 1;
            if self.digits().is_empty() {
                return Err(self.error("expected grade digits after `@`"));
            }
        }
        let name = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        match self.vars.index_of(name) {
            Some(index) => Ok(Polynomial::var(self.vars, index)),
            None => Err(Error::UnknownVariable(name.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn vars() -> Arc<VarSet> {
        VarSet::new(["e", "h", "f", "h@0", "h@1", "x@1@0"]).unwrap()
    }

    #[test]
    fn two_term_casimir() {
        let p = Polynomial::parse("h^2 + 4*e*f", &vars()).unwrap();
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn zero_literal() {
        assert!(Polynomial::parse("0", &vars()).unwrap().is_zero());
    }

    #[test]
    fn binomial_expansion() {
        let vs = vars();
        let p = Polynomial::parse("(h@1 + h@0)^2", &vs).unwrap();
        let q = Polynomial::parse("h@1^2 + 2*h@1*h@0 + h@0^2", &vs).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn nested_grades_and_fractions() {
        let vs = vars();
        let p = Polynomial::parse("-3/6*x@1@0 + 2", &vs).unwrap();
        assert_eq!(p.to_string(), "-1/2*x@1@0 + 2");
        assert_eq!(p.constant_term(), int(2));
    }

    #[test]
    fn errors_carry_position_or_name() {
        let vs = vars();
        match Polynomial::parse("h + * e", &vs) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            Polynomial::parse("h + q", &vs),
            Err(Error::UnknownVariable("q".into()))
        );
        // implicit multiplication is not part of the grammar
        assert!(matches!(
            Polynomial::parse("2 h", &vs),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            Polynomial::parse("1/0", &vs),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            Polynomial::parse("(h", &vs),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn identifier_rule() {
        assert!(is_identifier("e"));
        assert!(is_identifier("b_2@3@10"));
        assert!(!is_identifier("2e"));
        assert!(!is_identifier("e@"));
        assert!(!is_identifier("e@x"));
    }
}
