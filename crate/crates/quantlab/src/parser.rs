//! Recursive-descent parser for classical phase-space expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | base ('^' uint)?
//! base   := uint | uint '/' uint | symbol | '(' expr ')'
//! ```
//!
//! Symbols are `i`, `hbar`, `omega`, `sqrt2`, `x`, `y`, `px`, `py`.
//! Multiplication is always explicit.

use std::fmt;

use num::{BigInt, BigRational, Zero};
use thiserror::Error;

use quantcore::{Coefficient, PhasePoly};

pub const SYMBOLS: [&str; 8] = ["i", "hbar", "omega", "sqrt2", "x", "y", "px", "py"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    I,
    Hbar,
    Omega,
    Sqrt2,
    X,
    Y,
    Px,
    Py,
}

impl Symbol {
    fn lookup(name: &str) -> Option<Symbol> {
        Some(match name {
            "i" => Symbol::I,
            "hbar" => Symbol::Hbar,
            "omega" => Symbol::Omega,
            "sqrt2" => Symbol::Sqrt2,
            "x" => Symbol::X,
            "y" => Symbol::Y,
            "px" => Symbol::Px,
            "py" => Symbol::Py,
            _ => return None,
        })
    }

    fn to_poly(self) -> PhasePoly {
        match self {
            Symbol::I => Coefficient::i().into(),
            Symbol::Hbar => Coefficient::hbar().into(),
            Symbol::Omega => Coefficient::omega().into(),
            Symbol::Sqrt2 => Coefficient::sqrt2().into(),
            Symbol::X => PhasePoly::x(),
            Symbol::Y => PhasePoly::y(),
            Symbol::Px => PhasePoly::px(),
            Symbol::Py => PhasePoly::py(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Literal(BigRational),
    Symbol(Symbol),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Group(Box<Expr>),
}

impl Expr {
    /// Expands to the canonical polynomial.
    pub fn lower(&self) -> PhasePoly {
        match self {
            Expr::Literal(q) => Coefficient::from_rational(q.clone()).into(),
            Expr::Symbol(s) => s.to_poly(),
            Expr::Neg(e) => -e.lower(),
            Expr::Binary(op, l, r) => {
                let (l, r) = (l.lower(), r.lower());
                match op {
                    BinOp::Add => l + r,
                    BinOp::Sub => l - r,
                    BinOp::Mul => l * r,
                }
            }
            Expr::Pow(e, k) => e.lower().pow(*k),
            Expr::Group(e) => e.lower(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: expected {expected}, found {found}")]
    Syntax { line: usize, column: usize, found: String, expected: String },
    #[error("unknown symbol `{name}` at line {line}, column {column}; legal symbols are {}", SYMBOLS.join(", "))]
    UnknownSymbol { line: usize, column: usize, name: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Other(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{}`", n),
            Tok::Ident(s) => write!(f, "`{}`", s),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Other(c) => write!(f, "`{}`", c),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Vec<Spanned> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let (start_line, start_col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                column += 1;
            }
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                column += 1;
            }
            Tok::Ident(s)
        } else {
            chars.next();
            column += 1;
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '/' => Tok::Slash,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => Tok::Other(other),
            }
        };
        out.push(Spanned { tok, line: start_line, column: start_col });
    }
    out.push(Spanned { tok: Tok::Eof, line, column });
    out
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        let t = self.peek();
        ParseError::Syntax { line: t.line, column: t.column, found: t.tok.to_string(), expected: expected.to_string() }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            let rhs = self.factor()?;
            lhs = Expr::Binary(BinOp::Mul, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.peek().tok == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match &self.peek().tok {
            Tok::Int(n) => match u32::try_from(n) {
                Ok(k) => {
                    self.bump();
                    Ok(Expr::Pow(Box::new(base), k))
                }
                Err(_) => Err(self.error("an exponent that fits in 32 bits")),
            },
            _ => Err(self.error("a nonnegative integer exponent")),
        }
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(num) => {
                self.bump();
                if self.peek().tok != Tok::Slash {
                    return Ok(Expr::Literal(BigRational::from_integer(num)));
                }
                self.bump();
                match self.peek().tok.clone() {
                    Tok::Int(den) if !den.is_zero() => {
                        self.bump();
                        Ok(Expr::Literal(BigRational::new(num, den)))
                    }
                    _ => Err(self.error("a nonzero integer denominator")),
                }
            }
            Tok::Ident(name) => match Symbol::lookup(&name) {
                Some(s) => {
                    self.bump();
                    Ok(Expr::Symbol(s))
                }
                None => Err(ParseError::UnknownSymbol { line: t.line, column: t.column, name }),
            },
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(Expr::Group(Box::new(inner)))
            }
            _ => Err(self.error("a number, symbol or `(`")),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text), pos: 0 };
    let e = p.expr()?;
    if p.peek().tok != Tok::Eof {
        return Err(p.error("an operator or end of input"));
    }
    Ok(e)
}

/// Parses and lowers in one step.
pub fn parse_poly(text: &str) -> Result<PhasePoly, ParseError> {
    parse(text).map(|e| e.lower())
}
