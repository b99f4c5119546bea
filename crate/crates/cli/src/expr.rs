//! Expressions for hybrid elements with coefficients in ℚ(i)(b).
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' ['-'] integer)?
//! primary := integer | 'i' | 'b' | 'g' | 'mu' | 'nu' | 'μ' | 'ν' | '(' sum ')'
//! ```
//!
//! Integers, `i` and `b` are scalars; `g`, `mu`, `nu` are elements, and the
//! integer `1` doubles as the unit. A scalar times an element scales it, an
//! element times an element is the hybrid product, and a scalar added to an
//! element means that multiple of the unit.

use std::collections::BTreeSet;
use std::fmt;

use hybridhopf_core::{BasisIndex, Element, Field, GaussianRational, Scalar, ScalarError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("parse error at position {position}: expected {}, found {found}", expected_list(.expected))]
    Parse {
        position: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("division by zero at position {position}")]
    DivisionByZero { position: usize },
    #[error("at position {position}: {message}")]
    Type { position: usize, message: String },
    #[error("expected a constant, found `{0}`")]
    NotConstant(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn expected_list(items: &[String]) -> String {
    match items {
        [] => "nothing".to_string(),
        [one] => one.clone(),
        _ => format!("one of {}", items.join(", ")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
    Unknown(char),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(s) => write!(f, "`{s}`"),
            Token::Name(s) => write!(f, "`{s}`"),
            Token::Plus => f.write_str("`+`"),
            Token::Minus => f.write_str("`-`"),
            Token::Star => f.write_str("`*`"),
            Token::Slash => f.write_str("`/`"),
            Token::Caret => f.write_str("`^`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::End => f.write_str("end of input"),
            Token::Unknown(c) => write!(f, "`{c}`"),
        }
    }
}

/// Positions count characters from 0.
fn lex(src: &str) -> Vec<(Token, usize)> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let start = k;
        k += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '+' => Token::Plus,
            '-' | '−' => Token::Minus,
            '*' | '·' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            'μ' => Token::Name("mu".into()),
            'ν' => Token::Name("nu".into()),
            c if c.is_ascii_digit() => {
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                Token::Int(chars[start..k].iter().collect())
            }
            c if c.is_ascii_alphabetic() => {
                while k < chars.len() && chars[k].is_ascii_alphanumeric() {
                    k += 1;
                }
                Token::Name(chars[start..k].iter().collect())
            }
            other => Token::Unknown(other),
        };
        out.push((tok, start));
    }
    out.push((Token::End, chars.len()));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Int(String),
    I,
    B,
    Basis(BasisIndex),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

/// A parse tree node with the position of its operator or literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub position: usize,
}

const PRIMARY: &[&str] = &["integer", "`i`", "`b`", "`g`", "`mu`", "`nu`", "`(`"];
const OPERATORS: &[&str] = &["`+`", "`-`", "`*`", "`/`", "`^`"];

struct Parser {
    tokens: Vec<(Token, usize)>,
    at: usize,
    /// Tokens that would have been accepted at the current position.
    expected: BTreeSet<&'static str>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at].0
    }

    fn position(&self) -> usize {
        self.tokens[self.at].1
    }

    fn bump(&mut self) -> (Token, usize) {
        let t = self.tokens[self.at].clone();
        self.at += 1;
        self.expected.clear();
        t
    }

    fn expect(&mut self, items: &[&'static str]) {
        self.expected.extend(items);
    }

    fn error(&self) -> ExprError {
        ExprError::Parse {
            position: self.position(),
            expected: self.expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        }
    }

    fn node(kind: ExprKind, position: usize) -> Expr {
        Expr { kind, position }
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.product()?;
        loop {
            self.expect(&["`+`", "`-`"]);
            let make = match self.peek() {
                Token::Plus => ExprKind::Add,
                Token::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            let (_, pos) = self.bump();
            let rhs = self.product()?;
            lhs = Self::node(make(Box::new(lhs), Box::new(rhs)), pos);
        }
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            self.expect(&["`*`", "`/`"]);
            let make = match self.peek() {
                Token::Star => ExprKind::Mul,
                Token::Slash => ExprKind::Div,
                _ => return Ok(lhs),
            };
            let (_, pos) = self.bump();
            let rhs = self.unary()?;
            lhs = Self::node(make(Box::new(lhs), Box::new(rhs)), pos);
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek() == &Token::Minus {
            let (_, pos) = self.bump();
            let inner = self.unary()?;
            return Ok(Self::node(ExprKind::Neg(Box::new(inner)), pos));
        }
        self.expect(&["`-`"]);
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.primary()?;
        self.expect(&["`^`"]);
        if self.peek() != &Token::Caret {
            return Ok(base);
        }
        let (_, pos) = self.bump();
        let negative = self.peek() == &Token::Minus;
        if negative {
            self.bump();
        }
        self.expect(&["integer"]);
        if !negative {
            self.expect(&["`-`"]);
        }
        let Token::Int(digits) = self.peek().clone() else {
            return Err(self.error());
        };
        let exp_pos = self.position();
        self.bump();
        let exp: i64 = digits.parse().map_err(|_| ExprError::Type {
            position: exp_pos,
            message: format!("exponent `{digits}` is too large"),
        })?;
        let exp = if negative { -exp } else { exp };
        Ok(Self::node(ExprKind::Pow(Box::new(base), exp), pos))
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        self.expect(PRIMARY);
        let pos = self.position();
        let kind = match self.peek().clone() {
            Token::Int(digits) => ExprKind::Int(digits),
            Token::Name(name) => match name.as_str() {
                "i" => ExprKind::I,
                "b" => ExprKind::B,
                "g" => ExprKind::Basis(BasisIndex::G),
                "mu" => ExprKind::Basis(BasisIndex::Mu),
                "nu" => ExprKind::Basis(BasisIndex::Nu),
                _ => return Err(self.error()),
            },
            Token::LParen => {
                self.bump();
                let inner = self.sum()?;
                self.expect(&["`)`"]);
                if self.peek() != &Token::RParen {
                    return Err(self.error());
                }
                self.bump();
                return Ok(inner);
            }
            _ => return Err(self.error()),
        };
        self.bump();
        Ok(Self::node(kind, pos))
    }
}

pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let mut p = Parser {
        tokens: lex(src),
        at: 0,
        expected: BTreeSet::new(),
    };
    let e = p.sum()?;
    if p.peek() != &Token::End {
        p.expect(OPERATORS);
        return Err(p.error());
    }
    Ok(e)
}

/// The type of an evaluated subexpression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Scalar),
    Element(Element),
}

impl Value {
    fn into_element(self) -> Element {
        match self {
            Value::Scalar(c) => Element::one().scale(&c),
            Value::Element(x) => x,
        }
    }
}

fn pow_scalar(x: &Scalar, exp: i64, position: usize) -> Result<Scalar, ExprError> {
    let base = if exp < 0 {
        x.checked_inv().ok_or(ExprError::DivisionByZero { position })?
    } else {
        x.clone()
    };
    Ok(base.pow(exp.unsigned_abs() as u32))
}

impl Expr {
    pub fn eval(&self) -> Result<Value, ExprError> {
        use Value::{Element as E, Scalar as S};
        let pos = self.position;
        Ok(match &self.kind {
            ExprKind::Int(digits) => S(Scalar::constant(digits.parse::<GaussianRational>()?)),
            ExprKind::I => S(Scalar::i()),
            ExprKind::B => S(Scalar::b()),
            ExprKind::Basis(i) => E(Element::basis(*i)),
            ExprKind::Neg(x) => match x.eval()? {
                S(c) => S(-c),
                E(v) => E(-v),
            },
            ExprKind::Add(x, y) => match (x.eval()?, y.eval()?) {
                (S(a), S(c)) => S(a + c),
                (a, c) => E(a.into_element() + c.into_element()),
            },
            ExprKind::Sub(x, y) => match (x.eval()?, y.eval()?) {
                (S(a), S(c)) => S(a - c),
                (a, c) => E(a.into_element() - c.into_element()),
            },
            ExprKind::Mul(x, y) => match (x.eval()?, y.eval()?) {
                (S(a), S(c)) => S(a * c),
                (S(a), E(v)) | (E(v), S(a)) => E(v.scale(&a)),
                (E(u), E(v)) => E(&u * &v),
            },
            ExprKind::Div(x, y) => {
                let S(d) = y.eval()? else {
                    return Err(ExprError::Type {
                        position: pos,
                        message: "cannot divide by an element".into(),
                    });
                };
                let inv = d.checked_inv().ok_or(ExprError::DivisionByZero { position: pos })?;
                match x.eval()? {
                    S(a) => S(a * inv),
                    E(v) => E(v.scale(&inv)),
                }
            }
            ExprKind::Pow(x, exp) => match x.eval()? {
                S(a) => S(pow_scalar(&a, *exp, pos)?),
                E(v) => {
                    if *exp < 0 {
                        return Err(ExprError::Type {
                            position: pos,
                            message: "negative powers of elements are not defined".into(),
                        });
                    }
                    E((0..*exp).fold(Element::one(), |acc, _| &acc * &v))
                }
            },
        })
    }
}

/// Parses and evaluates an element; a bare scalar is a multiple of 1.
pub fn parse_element(src: &str) -> Result<Element, ExprError> {
    Ok(parse(src)?.eval()?.into_element())
}

/// Parses a constant scalar such as `3/5`, `i` or `1 - 2*i`.
pub fn parse_constant(src: &str) -> Result<GaussianRational, ExprError> {
    match parse(src)?.eval()? {
        Value::Scalar(c) => c.as_constant().ok_or_else(|| ExprError::NotConstant(src.to_string())),
        Value::Element(_) => Err(ExprError::NotConstant(src.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hybridhopf_core::build_structure;
    use hybridhopf_core::Variant;

    fn n(k: i64) -> Scalar {
        Scalar::from_i64(k)
    }

    #[test]
    fn scalar_coefficients() {
        let x = parse_element("(1/(2*b))*mu").unwrap();
        let expected = Element::basis(BasisIndex::Mu).scale(&(n(2) * Scalar::b()).checked_inv().unwrap());
        assert_eq!(x, expected);
        assert_eq!(parse_element("g + nu - nu").unwrap(), Element::basis(BasisIndex::G));
    }

    #[test]
    fn antipode_of_mu_literal() {
        let x = parse_element("2*b^2*g + 2*b^2*mu + 2*i*b^2*nu").unwrap();
        let a = build_structure(Variant::A);
        assert_eq!(x, a.antipode_ext(&Element::basis(BasisIndex::Mu)));
    }

    #[test]
    fn unicode_aliases_and_products() {
        assert_eq!(parse_element("μ").unwrap(), parse_element("mu").unwrap());
        assert_eq!(parse_element("g*ν").unwrap(), parse_element("mu + g").unwrap());
        assert_eq!(parse_element("1").unwrap(), Element::one());
        assert_eq!(
            parse_element("-b^-1").unwrap(),
            Element::one().scale(&-Scalar::b().checked_inv().unwrap())
        );
        assert_eq!(parse_element("g^2").unwrap(), -Element::one());
    }

    #[test]
    fn errors_carry_positions() {
        let ExprError::Parse {
            position,
            expected,
            found,
        } = parse_element("g + * mu").unwrap_err()
        else {
            panic!("expected a parse error");
        };
        assert_eq!(position, 4);
        assert_eq!(found, "`*`");
        assert!(expected.contains(&"`mu`".to_string()));
        assert!(expected.contains(&"`(`".to_string()));
        let ExprError::Parse { position, expected, .. } = parse_element("(g + mu").unwrap_err() else {
            panic!("expected a parse error");
        };
        assert_eq!(position, 7);
        assert!(expected.contains(&"`)`".to_string()));
        assert!(matches!(
            parse_element("g mu"),
            Err(ExprError::Parse { position: 2, .. })
        ));
        assert!(matches!(parse_element("x"), Err(ExprError::Parse { position: 0, .. })));
        assert!(matches!(
            parse_element("g/(b - b)"),
            Err(ExprError::DivisionByZero { position: 1 })
        ));
        assert!(matches!(parse_element("1/g"), Err(ExprError::Type { .. })));
    }

    #[test]
    fn constants() {
        assert_eq!(parse_constant("3/5").unwrap(), GaussianRational::from_ratio(3, 5));
        assert_eq!(parse_constant("i").unwrap(), GaussianRational::i());
        assert!(matches!(parse_constant("b"), Err(ExprError::NotConstant(_))));
        assert!(matches!(parse_constant("g"), Err(ExprError::NotConstant(_))));
    }
}
