//! Text literals for cyclotomic numbers.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor (('*'|'/') factor)*
//! factor  := primary ['^' ['-'] INT]
//! primary := INT | 'z' INT | '(' expr ')' | '-' factor
//! ```
//!
//! `zN` is the primitive root `exp(2πi/N)`, so `-z24^4`, `z5`, `1 - z3^2`
//! and `-1` are all valid.

use num_bigint::BigInt;

use super::{Cyclotomic, CyclotomicField};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    Int(BigInt),
    Root(u32),
    Neg(Box<Literal>),
    Add(Box<Literal>, Box<Literal>),
    Sub(Box<Literal>, Box<Literal>),
    Mul(Box<Literal>, Box<Literal>),
    Div(Box<Literal>, Box<Literal>),
    Pow(Box<Literal>, i64),
}

impl Literal {
    /// Root orders mentioned anywhere in the literal.
    pub fn orders(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.collect_orders(&mut out);
        out
    }

    fn collect_orders(&self, out: &mut Vec<u32>) {
        match self {
            Literal::Int(_) => {}
            Literal::Root(n) => out.push(*n),
            Literal::Neg(a) | Literal::Pow(a, _) => a.collect_orders(out),
            Literal::Add(a, b) | Literal::Sub(a, b) | Literal::Mul(a, b) | Literal::Div(a, b) => {
                a.collect_orders(out);
                b.collect_orders(out);
            }
        }
    }

    pub fn eval(&self, field: &CyclotomicField) -> Result<Cyclotomic> {
        Ok(match self {
            Literal::Int(n) => field.from_rational(num_rational::BigRational::from_integer(n.clone())),
            Literal::Root(n) => field.make_root(*n, 1)?,
            Literal::Neg(a) => -a.eval(field)?,
            Literal::Add(a, b) => a.eval(field)? + b.eval(field)?,
            Literal::Sub(a, b) => a.eval(field)? - b.eval(field)?,
            Literal::Mul(a, b) => a.eval(field)? * b.eval(field)?,
            Literal::Div(a, b) => a.eval(field)?.div(&b.eval(field)?)?,
            Literal::Pow(a, e) => a.eval(field)?.pow(*e)?,
        })
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        position,
        message: message.into(),
    })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return err(start, "expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<Literal> {
        let mut lhs = if self.eat(b'-') {
            Literal::Neg(Box::new(self.term()?))
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                lhs = Literal::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Literal::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Literal> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat(b'*') {
                lhs = Literal::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat(b'/') {
                lhs = Literal::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Literal> {
        let base = self.primary()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let at = self.pos;
            let e: i64 = self
                .digits()?
                .parse()
                .or_else(|_| err(at, "exponent out of range"))?;
            return Ok(Literal::Pow(Box::new(base), if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Literal> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return err(self.pos, "expected ')'");
                }
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(Literal::Neg(Box::new(self.factor()?)))
            }
            Some(b'z') => {
                self.pos += 1;
                let at = self.pos;
                let n: u32 = self
                    .digits()?
                    .parse()
                    .or_else(|_| err(at, "root order out of range"))?;
                if n == 0 {
                    return err(at, "root order must be positive");
                }
                Ok(Literal::Root(n))
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                Ok(Literal::Int(d.parse().expect("digits parse as BigInt")))
            }
            Some(c) => err(self.pos, format!("unexpected character '{}'", c as char)),
            None => err(self.pos, "unexpected end of input"),
        }
    }
}

/// Parse a literal such as `-z24^4`; positions in errors are byte offsets.
pub fn parse_literal(src: &str) -> Result<Literal> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return err(p.pos, "trailing input");
    }
    Ok(e)
}
