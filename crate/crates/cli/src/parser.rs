//! Expression parser for the z- and p-variable families.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' uint]
//! atom   := rational | var | '(' expr ')'
//! rational := uint ['/' uint]
//! var    := ('z' | 'p') uint        with uint >= 1
//! ```
//!
//! A single expression may use variables from exactly one family; the
//! family must match the declared space.

use std::fmt;

use num::{BigRational, One};

use fockbridge::boson::{BosonPolynomial, ZMonomial};

/// Variable family of an expression. Expressions without variables are
/// constant and fit either space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Z,
    P,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::Z => 'z',
            Family::P => 'p',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Abstract syntax tree over rational literals and one variable family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(BigRational),
    Var(u32),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// A parsed expression together with the family its variables use
/// (`None` when the expression is constant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedExpression {
    pub expr: Expr,
    pub family: Option<Family>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(u64),
    Var(Family, u32),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                tokens.push((Token::Plus, start));
                i += 1;
            }
            '-' => {
                tokens.push((Token::Minus, start));
                i += 1;
            }
            '*' => {
                tokens.push((Token::Star, start));
                i += 1;
            }
            '^' => {
                tokens.push((Token::Caret, start));
                i += 1;
            }
            '/' => {
                tokens.push((Token::Slash, start));
                i += 1;
            }
            '(' => {
                tokens.push((Token::LParen, start));
                i += 1;
            }
            ')' => {
                tokens.push((Token::RParen, start));
                i += 1;
            }
            '0'..='9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let value: u64 = input[i..j].parse().map_err(|_| ParseError {
                    offset: start,
                    message: "integer literal too large".into(),
                })?;
                tokens.push((Token::Int(value), start));
                i = j;
            }
            'z' | 'p' => {
                let family = if c == 'z' { Family::Z } else { Family::P };
                let mut j = i + 1;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                if j == i + 1 {
                    return Err(ParseError {
                        offset: start,
                        message: format!("variable '{c}' needs an index, e.g. {c}1"),
                    });
                }
                let index: u32 = input[i + 1..j].parse().map_err(|_| ParseError {
                    offset: start,
                    message: "variable index too large".into(),
                })?;
                if index == 0 {
                    return Err(ParseError {
                        offset: start,
                        message: "variable indices start at 1".into(),
                    });
                }
                tokens.push((Token::Var(family, index), start));
                i = j;
            }
            _ => {
                return Err(ParseError {
                    offset: start,
                    message: format!("unexpected character '{c}'"),
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [(Token, usize)],
    pos: usize,
    end_offset: usize,
    family: Option<Family>,
    declared: Family,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(_, o)| o)
            .unwrap_or(self.end_offset)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&token) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError {
                offset: self.offset(),
                message: format!("expected {what}"),
            })
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut node = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    node = Expr::Add(Box::new(node), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    node = Expr::Sub(Box::new(node), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(node)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut node = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            node = Expr::Mul(Box::new(node), Box::new(self.factor()?));
        }
        Ok(node)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let offset = self.offset();
            match self.bump() {
                Some(Token::Int(e)) => {
                    let exp = u32::try_from(e).map_err(|_| ParseError {
                        offset,
                        message: "exponent too large".into(),
                    })?;
                    Ok(Expr::Pow(Box::new(base), exp))
                }
                _ => Err(ParseError {
                    offset,
                    message: "expected a non-negative integer exponent".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.bump() {
            Some(Token::Int(n)) => {
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    let d_offset = self.offset();
                    match self.bump() {
                        Some(Token::Int(d)) if d > 0 => Ok(Expr::Num(BigRational::new(
                            n.into(),
                            d.into(),
                        ))),
                        Some(Token::Int(_)) => Err(ParseError {
                            offset: d_offset,
                            message: "zero denominator".into(),
                        }),
                        _ => Err(ParseError {
                            offset: d_offset,
                            message: "expected a denominator".into(),
                        }),
                    }
                } else {
                    Ok(Expr::Num(BigRational::from_integer(n.into())))
                }
            }
            Some(Token::Var(family, index)) => {
                if family != self.declared {
                    return Err(ParseError {
                        offset,
                        message: format!(
                            "variable family '{}' does not match the declared space ('{}' expected)",
                            family.letter(),
                            self.declared.letter()
                        ),
                    });
                }
                match self.family {
                    None => self.family = Some(family),
                    Some(f) if f == family => {}
                    Some(f) => {
                        return Err(ParseError {
                            offset,
                            message: format!(
                                "mixed variable families '{}' and '{}'",
                                f.letter(),
                                family.letter()
                            ),
                        });
                    }
                }
                Ok(Expr::Var(index))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(ParseError {
                offset,
                message: "expected a number, variable or '('".into(),
            }),
        }
    }
}

/// Parses an expression for the given family (`Family::Z` for the boson
/// space, `Family::P` for the symmetric space).
pub fn parse(input: &str, declared: Family) -> Result<ParsedExpression, ParseError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        end_offset: input.len(),
        family: None,
        declared,
    };
    let expr = parser.expr()?;
    if parser.pos != tokens.len() {
        return Err(ParseError {
            offset: parser.offset(),
            message: "unexpected trailing input".into(),
        });
    }
    Ok(ParsedExpression {
        expr,
        family: parser.family,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCapError {
    pub cap: u32,
    pub degree: u32,
}

impl fmt::Display for DegreeCapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "expression degree {} exceeds the cap {} (raise with --max-degree)",
            self.degree, self.cap
        )
    }
}

impl std::error::Error for DegreeCapError {}

/// Evaluates the tree into a polynomial over the variable indices; the
/// caller reinterprets it in the declared space (the index-level algebra
/// is identical for both families). The degree cap guards truncation
/// blowups downstream.
pub fn eval(expr: &Expr, cap: u32) -> Result<BosonPolynomial, DegreeCapError> {
    let out = eval_inner(expr, cap)?;
    Ok(out)
}

fn eval_inner(expr: &Expr, cap: u32) -> Result<BosonPolynomial, DegreeCapError> {
    let poly = match expr {
        Expr::Num(c) => {
            BosonPolynomial::monomial(ZMonomial::one(), c.clone())
        }
        Expr::Var(j) => {
            if *j > cap {
                return Err(DegreeCapError { cap, degree: *j });
            }
            BosonPolynomial::monomial(ZMonomial::var(*j), BigRational::one())
        }
        Expr::Neg(inner) => eval_inner(inner, cap)?.neg(),
        Expr::Add(a, b) => eval_inner(a, cap)?.add(&eval_inner(b, cap)?),
        Expr::Sub(a, b) => eval_inner(a, cap)?.sub(&eval_inner(b, cap)?),
        Expr::Mul(a, b) => {
            let pa = eval_inner(a, cap)?;
            let pb = eval_inner(b, cap)?;
            check_cap(pa.degree() + pb.degree(), cap)?;
            pa.mul(&pb)
        }
        Expr::Pow(base, exp) => {
            let pb = eval_inner(base, cap)?;
            if !pb.is_zero() || *exp == 0 {
                check_cap(pb.degree().saturating_mul(*exp), cap)?;
            }
            pb.pow(*exp)
        }
    };
    check_cap(poly.degree(), cap)?;
    Ok(poly)
}

fn check_cap(degree: u32, cap: u32) -> Result<(), DegreeCapError> {
    if degree > cap {
        Err(DegreeCapError { cap, degree })
    } else {
        Ok(())
    }
}
