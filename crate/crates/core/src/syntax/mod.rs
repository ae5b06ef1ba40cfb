//! Text syntax for field descriptors, elements, polynomials and series.
//!
//! Expressions use `+ - * / ^`, parentheses, integer literals and named
//! variables. Exponents are integers, optionally negative (`t^-2`), or
//! parenthesized rationals (`t^(-1/2)`). `O(t^N)` marks a truncation.

mod descriptor;
mod eval;

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

pub use descriptor::parse_descriptor;
pub use eval::{
    parse_additive, parse_element, parse_ordinary, parse_ppolynomial, parse_series_ppolynomial, parse_skew, MPoly,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(i64),
    Var(String),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Neg(Box<Node>),
    Pow(Box<Node>, Ratio<i64>),
    /// `O(var^e)`.
    BigO(String, Ratio<i64>),
}

/// An expression with the byte offset where it starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub expr: Expr,
    pub pos: usize,
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.expr {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::Var(v) => f.write_str(v),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Neg(a) => write!(f, "-{a}"),
            Expr::Pow(a, e) => write!(f, "{a}^({e})"),
            Expr::BigO(v, e) => write!(f, "O({v}^({e}))"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

pub(crate) fn perr(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[start..i].parse::<i64>().map_err(|_| perr(start, "integer literal too large"))?;
            out.push((Tok::Num(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            return Err(perr(i, format!("unexpected character '{}'", src[i..].chars().next().unwrap())));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.1)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<()> {
        if self.eat(op) {
            Ok(())
        } else {
            Err(perr(self.pos(), format!("expected '{op}'")))
        }
    }

    // sum := term (('+' | '-') term)*
    fn sum(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        loop {
            let pos = self.pos();
            let node = if self.eat('+') {
                Expr::Add(Box::new(lhs), Box::new(self.term()?))
            } else if self.eat('-') {
                Expr::Sub(Box::new(lhs), Box::new(self.term()?))
            } else {
                return Ok(lhs);
            };
            lhs = Node { expr: node, pos };
        }
    }

    // term := unary (('*' | '/') unary)*
    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.unary()?;
        loop {
            let pos = self.pos();
            let node = if self.eat('*') {
                Expr::Mul(Box::new(lhs), Box::new(self.unary()?))
            } else if self.eat('/') {
                Expr::Div(Box::new(lhs), Box::new(self.unary()?))
            } else {
                return Ok(lhs);
            };
            lhs = Node { expr: node, pos };
        }
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<Node> {
        let pos = self.pos();
        if self.eat('-') {
            return Ok(Node { expr: Expr::Neg(Box::new(self.unary()?)), pos });
        }
        self.power()
    }

    // power := atom ('^' exponent)*
    fn power(&mut self) -> Result<Node> {
        let mut base = self.atom()?;
        while self.eat('^') {
            let e = self.exponent()?;
            let pos = base.pos;
            base = Node { expr: Expr::Pow(Box::new(base), e), pos };
        }
        Ok(base)
    }

    // exponent := ['-'] int | '(' ['-'] int ['/' int] ')'
    fn exponent(&mut self) -> Result<Ratio<i64>> {
        if self.eat('(') {
            let neg = self.eat('-');
            let num = self.int()?;
            let den = if self.eat('/') { self.int()? } else { 1 };
            if den == 0 {
                return Err(perr(self.pos(), "zero denominator in exponent"));
            }
            self.expect(')')?;
            return Ok(Ratio::new(if neg { -num } else { num }, den));
        }
        let neg = self.eat('-');
        let n = self.int()?;
        Ok(Ratio::from_integer(if neg { -n } else { n }))
    }

    fn int(&mut self) -> Result<i64> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = *n;
                self.at += 1;
                Ok(n)
            }
            _ => Err(perr(self.pos(), "expected an integer")),
        }
    }

    fn atom(&mut self) -> Result<Node> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Node { expr: Expr::Num(n), pos })
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if name == "O" && self.peek() == Some(&Tok::Op('(')) {
                    self.at += 1;
                    let vpos = self.pos();
                    let var = match self.peek().cloned() {
                        Some(Tok::Ident(v)) => {
                            self.at += 1;
                            v
                        }
                        _ => return Err(perr(vpos, "expected a variable inside O(...)")),
                    };
                    let e = if self.eat('^') { self.exponent()? } else { Ratio::from_integer(1) };
                    self.expect(')')?;
                    return Ok(Node { expr: Expr::BigO(var, e), pos });
                }
                Ok(Node { expr: Expr::Var(name), pos })
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let inner = self.sum()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(Tok::Op(c)) => Err(perr(pos, format!("unexpected '{c}'"))),
            None => Err(perr(pos, "unexpected end of input")),
        }
    }
}

/// Parses an expression into its syntax tree.
pub fn parse_expr(src: &str) -> Result<Node> {
    let toks = lex(src)?;
    let mut parser = Parser { toks, at: 0, end: src.len() };
    let node = parser.sum()?;
    if parser.at != parser.toks.len() {
        return Err(perr(parser.pos(), "unexpected trailing input"));
    }
    Ok(node)
}

/// Names of all variables used in an expression.
pub(crate) fn variables(node: &Node, out: &mut Vec<String>) {
    match &node.expr {
        Expr::Var(v) | Expr::BigO(v, _) => {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        Expr::Num(_) => {}
        Expr::Neg(a) | Expr::Pow(a, _) => variables(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            variables(a, out);
            variables(b, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let n = parse_expr("a + 2*X^4 - t^-2").unwrap();
        assert_eq!(n.to_string(), "((a + (2 * X^(4))) - t^(-2))");
        let n = parse_expr("t^(-1/2) + O(t^(1/8))").unwrap();
        assert_eq!(n.to_string(), "(t^(-1/2) + O(t^(1/8)))");
        assert_eq!(parse_expr("-X^2").unwrap().to_string(), "-X^(2)");
    }

    #[test]
    fn error_positions() {
        assert_eq!(parse_expr("X + * 2"), Err(perr(4, "unexpected '*'")));
        assert_eq!(parse_expr("X^").unwrap_err(), perr(2, "expected an integer"));
        assert_eq!(parse_expr("(X + 1").unwrap_err(), perr(6, "expected ')'"));
        assert!(matches!(parse_expr("X # 1"), Err(Error::Parse { position: 2, .. })));
    }
}
