//! Polynomial expression syntax.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | whitespace) unary)*
//! unary := '-' unary | atom
//! atom  := INT | INT '/' INT | VAR | '(' expr ')' | atom '^' INT
//! ```
//!
//! Juxtaposition multiplies only across whitespace (`X^5 Y`); `X^5Y` and
//! `2Y` are rejected. `^` binds tighter than unary minus.
//! A fraction `3/4` is a single literal; its denominator must be invertible
//! in the target ring.

mod print;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::ring::{Ring, Var};

pub use print::print_poly;

/// Deepest parenthesis/unary nesting accepted.
pub const MAX_NESTING: usize = 200;
/// Largest dense term count an expression may expand to.
pub const MAX_TERMS: u64 = 4096;
/// Largest coefficient size (bits) an expression may expand to.
pub const MAX_COEFF_BITS: u64 = 1 << 20;
const MAX_WORK: u64 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyInput,
    UnknownSymbol(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    UnbalancedParen,
    MissingOperator,
    UndeclaredVariable(Var),
    NegativeExponent,
    FractionalExponent,
    BadExponent,
    ExponentTooLarge,
    NestingTooDeep,
    TooLarge,
    NonInvertibleDenominator,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        match self {
            EmptyInput => write!(f, "empty expression"),
            UnknownSymbol(c) => write!(f, "unknown symbol {c:?}"),
            UnexpectedToken(t) => write!(f, "unexpected {t}"),
            UnexpectedEnd => write!(f, "unexpected end of input"),
            UnbalancedParen => write!(f, "unbalanced parenthesis"),
            MissingOperator => write!(f, "missing '*' or whitespace between factors"),
            UndeclaredVariable(v) => write!(f, "variable {v} is not declared here"),
            NegativeExponent => write!(f, "negative exponent"),
            FractionalExponent => write!(f, "fractional exponent"),
            BadExponent => write!(f, "exponent must be a nonnegative integer literal"),
            ExponentTooLarge => write!(f, "exponent too large"),
            NestingTooDeep => write!(f, "expression nested too deeply"),
            TooLarge => write!(f, "expression expands beyond the size limit"),
            NonInvertibleDenominator => write!(f, "denominator is not invertible here"),
        }
    }
}

/// A syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {pos}: {kind}")]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(pos: usize, kind: ParseErrorKind) -> Self {
        ParseError { pos, kind }
    }
}

/// Abstract syntax tree of a polynomial expression.
///
/// Sums and products are n-ary so that long chains stay shallow; `a - b`
/// is stored as `Add([a, Neg(b)])` and `(a^b)^c` as `a^(b*c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyExpr {
    Int(BigUint),
    /// Fraction literal `num/den` and the offset of its denominator.
    Frac(BigUint, BigUint, usize),
    /// Variable and its byte offset in the source.
    Var(Var, usize),
    Neg(Box<PolyExpr>),
    Add(Vec<PolyExpr>),
    Mul(Vec<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

impl PolyExpr {
    /// Variables occurring anywhere in the expression.
    pub fn variables(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            PolyExpr::Int(_) | PolyExpr::Frac(..) => {}
            PolyExpr::Var(v, _) => {
                out.insert(*v);
            }
            PolyExpr::Neg(a) | PolyExpr::Pow(a, _) => a.collect_vars(out),
            PolyExpr::Add(xs) | PolyExpr::Mul(xs) => xs.iter().for_each(|x| x.collect_vars(out)),
        }
    }

    /// Expands the expression in `ring`, which also fixes the declared variables.
    pub fn eval<R: Ring>(&self, ring: &R) -> Result<R::Elem, ParseError> {
        self.check_size()?;
        self.eval_unchecked(ring)
    }

    fn eval_unchecked<R: Ring>(&self, ring: &R) -> Result<R::Elem, ParseError> {
        Ok(match self {
            PolyExpr::Int(n) => ring.from_int(&BigInt::from(n.clone())),
            PolyExpr::Frac(n, d, pos) => ring
                .exact_div(&ring.from_int(&BigInt::from(n.clone())), &ring.from_int(&BigInt::from(d.clone())))
                .ok_or_else(|| ParseError::new(*pos, ParseErrorKind::NonInvertibleDenominator))?,
            PolyExpr::Var(v, pos) => {
                ring.variable(*v).ok_or_else(|| ParseError::new(*pos, ParseErrorKind::UndeclaredVariable(*v)))?
            }
            PolyExpr::Neg(a) => ring.neg(&a.eval_unchecked(ring)?),
            PolyExpr::Add(xs) => {
                let mut acc = ring.zero();
                for x in xs {
                    acc = ring.add(&acc, &x.eval_unchecked(ring)?);
                }
                acc
            }
            PolyExpr::Mul(xs) => {
                let mut acc = ring.one();
                for x in xs {
                    acc = ring.mul(&acc, &x.eval_unchecked(ring)?);
                }
                acc
            }
            PolyExpr::Pow(a, e) => ring.pow(&a.eval_unchecked(ring)?, *e as u64),
        })
    }

    fn check_size(&self) -> Result<SizeBound, ParseError> {
        let b = match self {
            PolyExpr::Int(n) => SizeBound { deg: [0; 4], bits: n.bits().max(1) },
            PolyExpr::Frac(n, d, _) => SizeBound { deg: [0; 4], bits: n.bits().max(1) + d.bits().max(1) },
            PolyExpr::Var(v, _) => {
                let mut deg = [0; 4];
                deg[v.index()] = 1;
                SizeBound { deg, bits: 1 }
            }
            PolyExpr::Neg(a) => a.check_size()?,
            PolyExpr::Add(xs) => {
                let mut deg = [0; 4];
                let mut bits = 1;
                for x in xs {
                    let b = x.check_size()?;
                    for (d, bd) in deg.iter_mut().zip(b.deg) {
                        *d = (*d).max(bd);
                    }
                    bits = bits.max(b.bits);
                }
                SizeBound { deg, bits: bits.saturating_add(ceil_log2(xs.len() as u64)) }
            }
            PolyExpr::Mul(xs) => {
                let mut acc = SizeBound { deg: [0; 4], bits: 1 };
                for x in xs {
                    let b = x.check_size()?;
                    let spread = ceil_log2(acc.terms().min(b.terms()));
                    for (d, bd) in acc.deg.iter_mut().zip(b.deg) {
                        *d = d.saturating_add(bd);
                    }
                    acc.bits = acc.bits.saturating_add(b.bits).saturating_add(spread);
                    acc.check()?;
                }
                acc
            }
            PolyExpr::Pow(a, e) => {
                let a = a.check_size()?;
                let e = *e as u64;
                let mut deg = [0; 4];
                for (i, d) in deg.iter_mut().enumerate() {
                    *d = a.deg[i].saturating_mul(e);
                }
                let per = a.bits.saturating_add(ceil_log2(a.terms()));
                SizeBound { deg, bits: per.saturating_mul(e).max(1) }
            }
        };
        b.check()?;
        Ok(b)
    }
}

/// Conservative size estimate for the expanded expression.
#[derive(Debug, Clone, Copy)]
struct SizeBound {
    deg: [u64; 4],
    bits: u64,
}

impl SizeBound {
    fn terms(&self) -> u64 {
        self.deg.iter().fold(1u64, |acc, d| acc.saturating_mul(d.saturating_add(1)))
    }

    fn check(&self) -> Result<(), ParseError> {
        let terms = self.terms();
        if terms > MAX_TERMS || self.bits > MAX_COEFF_BITS || terms.saturating_mul(self.bits) > MAX_WORK {
            return Err(ParseError::new(0, ParseErrorKind::TooLarge));
        }
        Ok(())
    }
}

fn ceil_log2(n: u64) -> u64 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros() as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigUint),
    Var(Var),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Dot,
    Slash,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Var(v) => format!("variable {v}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Dot => "'.'".into(),
            Tok::Slash => "'/'".into(),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self, Tok::Int(_) | Tok::Var(_) | Tok::LParen)
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
    space_before: bool,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    let mut space = false;
    while let Some((pos, c)) = chars.next() {
        if c.is_whitespace() {
            space = true;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '.' => Tok::Dot,
            '/' => Tok::Slash,
            '0'..='9' => {
                let mut end = pos + 1;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + 1;
                    chars.next();
                }
                let n = BigUint::parse_bytes(&text.as_bytes()[pos..end], 10).expect("ascii digits");
                Tok::Int(n)
            }
            _ => match Var::from_char(c) {
                Some(v) => Tok::Var(v),
                None => return Err(ParseError::new(pos, ParseErrorKind::UnknownSymbol(c))),
            },
        };
        out.push(Token { tok, pos, space_before: space });
        space = false;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    end: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.at)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            None => ParseError::new(self.end, ParseErrorKind::UnexpectedEnd),
            Some(t) if t.tok == Tok::RParen => ParseError::new(t.pos, ParseErrorKind::UnbalancedParen),
            Some(t) => ParseError::new(t.pos, ParseErrorKind::UnexpectedToken(t.tok.describe())),
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(ParseError::new(self.pos(), ParseErrorKind::NestingTooDeep));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<PolyExpr, ParseError> {
        self.enter()?;
        let mut terms = vec![self.term()?];
        loop {
            match self.peek().map(|t| &t.tok) {
                Some(Tok::Plus) => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    terms.push(PolyExpr::Neg(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { PolyExpr::Add(terms) })
    }

    fn term(&mut self) -> Result<PolyExpr, ParseError> {
        let mut factors = vec![self.unary()?];
        loop {
            match self.peek() {
                Some(t) if t.tok == Tok::Star => {
                    self.bump();
                }
                Some(t) if t.tok.starts_atom() => {
                    if !t.space_before {
                        return Err(ParseError::new(t.pos, ParseErrorKind::MissingOperator));
                    }
                }
                _ => break,
            }
            factors.push(self.unary()?);
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { PolyExpr::Mul(factors) })
    }

    fn unary(&mut self) -> Result<PolyExpr, ParseError> {
        if self.peek().is_some_and(|t| t.tok == Tok::Minus) {
            self.bump();
            self.enter()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(PolyExpr::Neg(Box::new(inner)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<PolyExpr, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.unexpected());
        };
        let mut base = match tok.tok {
            Tok::Int(n) => {
                self.bump();
                if self.peek().is_some_and(|t| t.tok == Tok::Slash) {
                    self.bump();
                    let pos = self.pos();
                    match self.bump().map(|t| t.tok) {
                        Some(Tok::Int(d)) => PolyExpr::Frac(n, d, pos),
                        _ => {
                            self.at -= 1;
                            return Err(self.unexpected());
                        }
                    }
                } else {
                    PolyExpr::Int(n)
                }
            }
            Tok::Var(v) => {
                self.bump();
                PolyExpr::Var(v, tok.pos)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                match self.peek() {
                    Some(t) if t.tok == Tok::RParen => {
                        self.bump();
                    }
                    None => return Err(ParseError::new(tok.pos, ParseErrorKind::UnbalancedParen)),
                    Some(_) => return Err(self.unexpected()),
                }
                inner
            }
            _ => return Err(self.unexpected()),
        };
        let mut power: Option<u32> = None;
        while self.peek().is_some_and(|t| t.tok == Tok::Caret) {
            let pos = self.pos();
            self.bump();
            let e = self.exponent()?;
            power = Some(match power {
                None => e,
                Some(p) => p.checked_mul(e).ok_or(ParseError::new(pos, ParseErrorKind::ExponentTooLarge))?,
            });
        }
        if let Some(e) = power {
            base = PolyExpr::Pow(Box::new(base), e);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let pos = self.pos();
        match self.bump().map(|t| t.tok) {
            Some(Tok::Int(n)) => {
                if self.peek().is_some_and(|t| t.tok == Tok::Dot) {
                    return Err(ParseError::new(pos, ParseErrorKind::FractionalExponent));
                }
                n.to_u32().ok_or(ParseError::new(pos, ParseErrorKind::ExponentTooLarge))
            }
            Some(Tok::Minus) => Err(ParseError::new(pos, ParseErrorKind::NegativeExponent)),
            Some(Tok::Dot) => Err(ParseError::new(pos, ParseErrorKind::FractionalExponent)),
            None => Err(ParseError::new(pos, ParseErrorKind::UnexpectedEnd)),
            Some(_) => Err(ParseError::new(pos, ParseErrorKind::BadExponent)),
        }
    }
}

/// Parses text into a syntax tree without expanding it.
pub fn parse_expr(text: &str) -> Result<PolyExpr, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError::new(0, ParseErrorKind::EmptyInput));
    }
    let mut p = Parser { toks, at: 0, end: text.len(), depth: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected());
    }
    Ok(e)
}

/// Parses and expands `text` as an element of `ring`. The ring's variables
/// are the declared ones; integer literals are mapped through `Z -> ring`
/// (so they are reduced modulo `p` over `F_p`).
pub fn parse_poly<R: Ring>(text: &str, ring: &R) -> Result<R::Elem, ParseError> {
    parse_expr(text)?.eval(ring)
}
