//! A small expression language used to transcribe formulas.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | '+' unary | power
//! power := atom ('^' integer)?
//! atom  := number | ident | '(' expr ')'
//!        | '{' expr ',' expr '}'      anticommutator
//!        | '[' expr ',' expr ']'      commutator
//! ```
//!
//! Division is only allowed by expressions that evaluate to a rational
//! constant. Identifiers are resolved by the caller, so the same parse tree
//! can be evaluated into polynomials or into noncommutative elements.

use crate::error::{Error, ParseError, Result};
use crate::scalar::Scalar;

/// The operations an expression needs from its target ring.
pub trait Ring: Clone {
    fn from_scalar(s: Scalar) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::from_scalar(Scalar::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Scalar),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Anti(Box<Expr>, Box<Expr>),
    Comm(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr, ParseError> {
        let toks = lex(src)?;
        let mut p = Parser { toks, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(ParseError::new(format!(
                "unexpected `{}` in `{src}`",
                p.toks[p.pos].text()
            )));
        }
        Ok(e)
    }

    /// Value of a variable-free subexpression.
    pub fn constant(&self) -> Option<Scalar> {
        Some(match self {
            Expr::Num(s) => s.clone(),
            Expr::Var(_) => return None,
            Expr::Neg(a) => a.constant()?.neg(),
            Expr::Add(a, b) => a.constant()?.add(&b.constant()?),
            Expr::Sub(a, b) => a.constant()?.sub(&b.constant()?),
            Expr::Mul(a, b) => a.constant()?.mul(&b.constant()?),
            Expr::Div(a, b) => {
                let d = b.constant()?;
                if d.is_zero() {
                    return None;
                }
                a.constant()?.div(&d)
            }
            Expr::Pow(a, e) => a.constant()?.pow(*e),
            Expr::Anti(a, b) => a.constant()?.mul(&b.constant()?).mul(&Scalar::from_int(2)),
            Expr::Comm(a, b) => {
                a.constant()?;
                b.constant()?;
                Scalar::zero()
            }
        })
    }

    pub fn eval<R: Ring>(&self, var: &mut dyn FnMut(&str) -> Result<R>) -> Result<R> {
        Ok(match self {
            Expr::Num(s) => R::from_scalar(s.clone()),
            Expr::Var(v) => var(v)?,
            Expr::Neg(a) => a.eval(var)?.neg(),
            Expr::Add(a, b) => a.eval(var)?.add(&b.eval(var)?),
            Expr::Sub(a, b) => a.eval(var)?.sub(&b.eval(var)?),
            Expr::Mul(a, b) => {
                if let Some(c) = a.constant() {
                    b.eval(var)?.scale(&c)
                } else if let Some(c) = b.constant() {
                    a.eval(var)?.scale(&c)
                } else {
                    a.eval(var)?.mul(&b.eval(var)?)
                }
            }
            Expr::Div(a, b) => match b.constant() {
                Some(d) if !d.is_zero() => a.eval(var)?.scale(&d.inv()),
                _ => {
                    return Err(Error::Parse(ParseError::new(
                        "division by a non-constant or zero expression",
                    )))
                }
            },
            Expr::Pow(a, e) => a.eval(var)?.pow(*e),
            Expr::Anti(a, b) => {
                let (x, y) = (a.eval(var)?, b.eval(var)?);
                x.mul(&y).add(&y.mul(&x))
            }
            Expr::Comm(a, b) => {
                let (x, y) = (a.eval(var)?, b.eval(var)?);
                x.mul(&y).sub(&y.mul(&x))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

impl Tok {
    fn text(&self) -> String {
        match self {
            Tok::Num(s) | Tok::Ident(s) => s.clone(),
            Tok::Sym(c) => c.to_string(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<Tok>, ParseError> {
    let cs: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(cs[s..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let s = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_' || cs[i] == '\'') {
                i += 1;
            }
            out.push(Tok::Ident(cs[s..i].iter().collect()));
        } else if "+-*/^(){}[],.".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(ParseError::new(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek_sym(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Sym(c)) => Some(*c),
            _ => None,
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek_sym() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(format!(
                "expected `{c}`, found {}",
                self.toks
                    .get(self.pos)
                    .map_or("end of input".to_string(), |t| format!("`{}`", t.text()))
            )))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        while let Some(c) = self.peek_sym() {
            if c != '+' && c != '-' {
                break;
            }
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if c == '+' {
                Expr::Add(lhs.into(), rhs.into())
            } else {
                Expr::Sub(lhs.into(), rhs.into())
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(c) = self.peek_sym() {
            // `.` separates letters in element text; it is a product
            if c != '*' && c != '/' && c != '.' {
                break;
            }
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = if c == '/' {
                Expr::Div(lhs.into(), rhs.into())
            } else {
                Expr::Mul(lhs.into(), rhs.into())
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek_sym() {
            Some('-') => {
                self.pos += 1;
                Ok(Expr::Neg(self.unary()?.into()))
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek_sym() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .parse()
                        .map_err(|_| ParseError::new(format!("bad exponent `{n}`")))?;
                    self.pos += 1;
                    Ok(Expr::Pow(base.into(), e))
                }
                _ => Err(ParseError::new("exponent must be a non-negative integer")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| ParseError::new("unexpected end of input"))?;
        self.pos += 1;
        match t {
            Tok::Num(n) => Ok(Expr::Num(n.parse()?)),
            Tok::Ident(s) => Ok(Expr::Var(s)),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym(open @ ('{' | '[')) => {
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                if open == '{' {
                    self.expect('}')?;
                    Ok(Expr::Anti(a.into(), b.into()))
                } else {
                    self.expect(']')?;
                    Ok(Expr::Comm(a.into(), b.into()))
                }
            }
            t => Err(ParseError::new(format!("unexpected `{}`", t.text()))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_fold() {
        let e = Expr::parse("1/6*(12 - 3*2^2) + -1/4608").unwrap();
        assert_eq!(e.constant(), Some(Scalar::new(-1, 4608)));
        assert_eq!(
            Expr::parse("{2,3}").unwrap().constant(),
            Some(Scalar::from_int(12))
        );
    }

    #[test]
    fn malformed() {
        for s in ["1 +", "(a", "a ^ b", "{a b}", "a # b", "1/0*"] {
            assert!(Expr::parse(s).is_err(), "{s}");
        }
    }
}
