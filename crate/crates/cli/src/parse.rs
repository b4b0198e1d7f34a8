//! Polynomial expressions over the variables `y`, `t`, `u`.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/')? unary)*     juxtaposition multiplies
//! unary   := '-' unary | power
//! power   := atom ('^' digits)?
//! atom    := digits | variable | '(' sum ')'
//! ```
//!
//! Juxtaposition is accepted only before a variable or a parenthesis, so
//! `2y` and `y(y + 1)` multiply while `2 3` is an error. Division is exact
//! division in the target ring; it exists so that rendered ℚ[u]
//! coefficients such as `1/2*u` read back.
//!
//! Positions in errors are 1-based character offsets; running out of input
//! is reported one past the last character.

use std::fmt;

use schinzel::{Integer, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Syntax { pos: usize, msg: String },
    UnknownVariable { pos: usize, name: char },
    RingMismatch { pos: usize, name: char, ring: String },
    Inexact { pos: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { pos, msg } => write!(f, "syntax error at {pos}: {msg}"),
            ParseError::UnknownVariable { pos, name } => write!(f, "unknown variable '{name}' at {pos}"),
            ParseError::RingMismatch { pos, name, ring } => write!(f, "variable '{name}' at {pos} is not in {ring}"),
            ParseError::Inexact { pos } => write!(f, "division at {pos} is not exact"),
        }
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    pub fn kind(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "SyntaxError",
            ParseError::UnknownVariable { .. } => "UnknownVariable",
            ParseError::RingMismatch { .. } => "RingMismatch",
            ParseError::Inexact { .. } => "InexactDivision",
        }
    }

    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. }
            | ParseError::UnknownVariable { pos, .. }
            | ParseError::RingMismatch { pos, .. }
            | ParseError::Inexact { pos } => *pos,
        }
    }
}

pub const VARIABLES: [char; 3] = ['y', 't', 'u'];

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Integer),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

/// Parse tree; `Var` keeps its position for ring-mismatch reporting.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Integer),
    Var(char, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u64),
}

impl Expr {
    /// Variables in order of first appearance.
    pub fn variables(&self) -> Vec<char> {
        fn walk(e: &Expr, out: &mut Vec<char>) {
            match e {
                Expr::Num(_) => {}
                Expr::Var(v, _) => {
                    if !out.contains(v) {
                        out.push(*v)
                    }
                }
                Expr::Neg(a) | Expr::Pow(a, _) => walk(a, out),
                Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b, _) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// Evaluate in `ring`, where `var` supplies the image of each variable
    /// (`None` for a variable outside the ring's alphabet).
    pub fn eval<R: Ring>(
        &self,
        ring: &R,
        ring_name: &str,
        var: &dyn Fn(char) -> Option<R::Elem>,
    ) -> Result<R::Elem, ParseError> {
        let go = |e: &Expr| e.eval(ring, ring_name, var);
        Ok(match self {
            Expr::Num(n) => ring.from_integer(n),
            Expr::Var(v, pos) => {
                var(*v).ok_or_else(|| ParseError::RingMismatch { pos: *pos, name: *v, ring: ring_name.into() })?
            }
            Expr::Neg(a) => ring.neg(&go(a)?),
            Expr::Add(a, b) => ring.add(&go(a)?, &go(b)?),
            Expr::Sub(a, b) => ring.sub(&go(a)?, &go(b)?),
            Expr::Mul(a, b) => ring.mul(&go(a)?, &go(b)?),
            Expr::Div(a, b, pos) => {
                let d = go(b)?;
                if ring.is_zero(&d) {
                    return Err(ParseError::Inexact { pos: *pos });
                }
                ring.divide(&go(a)?, &d).ok_or(ParseError::Inexact { pos: *pos })?
            }
            Expr::Pow(a, e) => ring.pow(&go(a)?, *e),
        })
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        let tok = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Num(digits.parse().expect("ascii digits")), pos));
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::Open,
            ')' => Tok::Close,
            _ if VARIABLES.contains(&c) => Tok::Var(c),
            _ if c.is_alphabetic() => return Err(ParseError::UnknownVariable { pos, name: c }),
            _ => return Err(ParseError::Syntax { pos, msg: format!("unexpected character '{c}'") }),
        };
        out.push((tok, pos));
        i += 1;
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
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn error(&self, what: &str) -> ParseError {
        let msg = match self.peek() {
            None => format!("expected {what}, found end of input"),
            Some(t) => format!("expected {what}, found {}", describe(t)),
        };
        ParseError::Syntax { pos: self.pos(), msg }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    let pos = self.pos();
                    self.at += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), pos);
                }
                Some(Tok::Var(_) | Tok::Open) => lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?)),
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Num(n)) => {
                let e = u64::try_from(n).map_err(|_| ParseError::Syntax { pos, msg: "exponent too large".into() })?;
                self.at += 1;
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => Err(self.error("a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Var(v)) => {
                self.at += 1;
                Ok(Expr::Var(v, pos))
            }
            Some(Tok::Open) => {
                self.at += 1;
                let inner = self.sum()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(self.error("')'"));
                }
                self.at += 1;
                Ok(inner)
            }
            _ => Err(self.error("a number, variable or '('")),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number {n}"),
        Tok::Var(v) => format!("variable {v}"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::Open => "'('".into(),
        Tok::Close => "')'".into(),
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, at: 0, end: text.chars().count() + 1 };
    let e = p.sum()?;
    if p.peek().is_some() {
        return Err(p.error("an operator or end of input"));
    }
    Ok(e)
}
