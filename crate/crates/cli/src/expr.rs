//! Expression language for sphere polynomials: rationals, `i`, `S1 S2 S3
//! s pi a c`, `+ - * ^`, and the calls `sqrt(x)`, `Y(l, m)`, `pb(f, g)`.

use std::fmt;
use std::iter::Peekable;
use std::str::CharIndices;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use nogo_core::exactnum::{Coefficient, Rational};
use nogo_core::harmonics::ylm;
use nogo_core::sphere_poly::{canonicalize, poisson_raw, Poly3, SpherePoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    S1,
    S2,
    S3,
    S,
    Pi,
    A,
    C,
}

impl Symbol {
    pub const ALL: [Symbol; 7] = [Symbol::S1, Symbol::S2, Symbol::S3, Symbol::S, Symbol::Pi, Symbol::A, Symbol::C];

    pub fn name(self) -> &'static str {
        match self {
            Symbol::S1 => "S1",
            Symbol::S2 => "S2",
            Symbol::S3 => "S3",
            Symbol::S => "s",
            Symbol::Pi => "pi",
            Symbol::A => "a",
            Symbol::C => "c",
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Nonnegative rational literal.
    Num(Rational),
    I,
    Sym(Symbol),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Sqrt(Box<Expr>),
    Y(u32, i64),
    Pb(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: unknown symbol `{name}`")]
    UnknownSymbol { line: usize, col: usize, name: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(q) => write!(f, "number {q}"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    col: usize,
}

struct Lexer<'a> {
    chars: Peekable<CharIndices<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self { chars: src.char_indices().peekable(), line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<char> {
        let (_, ch) = self.chars.next()?;
        if ch == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(ch)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    fn err(&self, pos: Pos, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax { line: pos.line, col: pos.col, msg: msg.into() }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        s
    }

    fn tokens(mut self) -> Result<Vec<(Tok, Pos)>, ParseError> {
        let mut out = Vec::new();
        loop {
            while self.peek().is_some_and(char::is_whitespace) {
                self.bump();
            }
            let pos = Pos { line: self.line, col: self.col };
            let Some(c) = self.peek() else {
                out.push((Tok::End, pos));
                return Ok(out);
            };
            let tok = if c.is_ascii_digit() {
                let num: BigInt = self.digits().parse().expect("digits");
                if self.peek() == Some('/') {
                    self.bump();
                    let den_pos = Pos { line: self.line, col: self.col };
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(self.err(den_pos, "expected a denominator after `/`"));
                    }
                    let den: BigInt = den.parse().expect("digits");
                    if den.is_zero() {
                        return Err(self.err(den_pos, "zero denominator"));
                    }
                    Tok::Num(Rational::new(num, den))
                } else {
                    Tok::Num(Rational::from_integer(num))
                }
            } else if c.is_ascii_alphabetic() {
                let mut s = String::new();
                while let Some(c) = self.peek().filter(char::is_ascii_alphanumeric) {
                    s.push(c);
                    self.bump();
                }
                Tok::Ident(s)
            } else {
                self.bump();
                match c {
                    '+' => Tok::Plus,
                    '-' | '−' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    _ => return Err(self.err(pos, format!("unexpected character `{c}`"))),
                }
            };
            out.push((tok, pos));
        }
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        let p = self.pos();
        ParseError::Syntax { line: p.line, col: p.col, msg: msg.into() }
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            Err(self.err(format!("expected {want}, found {}", self.peek())))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.next();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.next();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.next();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.next();
        match self.next() {
            (Tok::Num(q), _) if q.is_integer() && !q.is_negative() => {
                let n: u32 = q.to_integer().try_into().map_err(|_| self.err("exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), n))
            }
            (t, p) => Err(ParseError::Syntax {
                line: p.line,
                col: p.col,
                msg: format!("expected a nonnegative integer exponent, found {t}"),
            }),
        }
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let neg = if *self.peek() == Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        match self.next() {
            (Tok::Num(q), _) if q.is_integer() => {
                let v: i64 = q.to_integer().try_into().map_err(|_| self.err("integer too large"))?;
                Ok(if neg { -v } else { v })
            }
            (t, p) => Err(ParseError::Syntax { line: p.line, col: p.col, msg: format!("expected an integer, found {t}") }),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, pos) = self.next();
        match tok {
            Tok::Num(q) => Ok(Expr::Num(q)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "i" => Ok(Expr::I),
                "sqrt" => {
                    self.expect(Tok::LParen)?;
                    let e = self.expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(Expr::Sqrt(Box::new(e)))
                }
                "pb" => {
                    self.expect(Tok::LParen)?;
                    let f = self.expr()?;
                    self.expect(Tok::Comma)?;
                    let g = self.expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(Expr::Pb(Box::new(f), Box::new(g)))
                }
                "Y" => {
                    self.expect(Tok::LParen)?;
                    let l_pos = self.pos();
                    let l = self.signed_int()?;
                    if l < 0 {
                        return Err(ParseError::Syntax { line: l_pos.line, col: l_pos.col, msg: "degree l must be nonnegative".into() });
                    }
                    self.expect(Tok::Comma)?;
                    let m = self.signed_int()?;
                    self.expect(Tok::RParen)?;
                    Ok(Expr::Y(l as u32, m))
                }
                _ => Symbol::from_name(&name)
                    .map(Expr::Sym)
                    .ok_or(ParseError::UnknownSymbol { line: pos.line, col: pos.col, name }),
            },
            t => Err(ParseError::Syntax { line: pos.line, col: pos.col, msg: format!("unexpected {t}") }),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let toks = Lexer::new(src).tokens()?;
    let mut p = Parser { toks, at: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        t => Err(p.err(format!("unexpected {t} after expression"))),
    }
}

const PREC_ADD: u8 = 1;
const PREC_MUL: u8 = 2;
const PREC_NEG: u8 = 3;
const PREC_ATOM: u8 = 5;

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => PREC_ADD,
            Expr::Mul(..) => PREC_MUL,
            Expr::Neg(_) => PREC_NEG,
            Expr::Pow(..) => 4,
            _ => PREC_ATOM,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.prec() < min;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Expr::Num(q) => write!(f, "{q}")?,
            Expr::I => f.write_str("i")?,
            Expr::Sym(s) => f.write_str(s.name())?,
            Expr::Neg(e) => {
                f.write_str("-")?;
                e.write(f, PREC_NEG)?;
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write(f, PREC_ADD)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                b.write(f, PREC_MUL)?;
            }
            Expr::Mul(a, b) => {
                a.write(f, PREC_MUL)?;
                f.write_str("*")?;
                b.write(f, PREC_NEG)?;
            }
            Expr::Pow(a, n) => {
                a.write(f, PREC_ATOM)?;
                write!(f, "^{n}")?;
            }
            Expr::Sqrt(e) => write!(f, "sqrt({e})")?,
            Expr::Y(l, m) => write!(f, "Y({l},{m})")?,
            Expr::Pb(a, b) => write!(f, "pb({a}, {b})")?,
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("symbol `{0}` has no value on the sphere; it is a quantization parameter")]
    Parameter(&'static str),
    #[error("sqrt needs a rational constant argument, got {0}")]
    SqrtArgument(String),
    #[error("invalid harmonic Y({l},{m}): need |m| <= l")]
    Harmonic { l: u32, m: i64 },
}

/// Evaluates to a representative polynomial; brackets are taken on
/// representatives.
pub fn eval(e: &Expr) -> Result<Poly3, EvalError> {
    let konst = |c: Coefficient| Poly3::constant(c);
    Ok(match e {
        Expr::Num(q) => konst(Coefficient::from_rational(q.clone())),
        Expr::I => konst(Coefficient::i()),
        Expr::Sym(s) => match s {
            Symbol::S1 => Poly3::var(0),
            Symbol::S2 => Poly3::var(1),
            Symbol::S3 => Poly3::var(2),
            Symbol::S => konst(Coefficient::s_pow(1)),
            Symbol::Pi => konst(Coefficient::pi_half_pow(2)),
            Symbol::A | Symbol::C => return Err(EvalError::Parameter(s.name())),
        },
        Expr::Neg(a) => eval(a)?.neg(),
        Expr::Add(a, b) => eval(a)?.add(&eval(b)?),
        Expr::Sub(a, b) => eval(a)?.sub(&eval(b)?),
        Expr::Mul(a, b) => eval(a)?.mul(&eval(b)?),
        Expr::Pow(a, n) => eval(a)?.pow(*n),
        Expr::Sqrt(a) => {
            let v = eval(a)?;
            let q = v
                .is_constant()
                .then(|| v.constant_term().as_rational())
                .flatten()
                .ok_or_else(|| EvalError::SqrtArgument(a.to_string()))?;
            konst(Coefficient::sqrt_rational(&q).map_err(|_| EvalError::SqrtArgument(a.to_string()))?)
        }
        Expr::Y(l, m) => {
            let y = i32::try_from(*m)
                .ok()
                .and_then(|m| ylm(*l, m).ok())
                .ok_or(EvalError::Harmonic { l: *l, m: *m })?;
            y.poly.as_poly().clone()
        }
        Expr::Pb(a, b) => poisson_raw(&eval(a)?, &eval(b)?),
    })
}

/// Evaluates and reduces on the sphere.
pub fn eval_sphere(e: &Expr) -> Result<SpherePoly, EvalError> {
    Ok(canonicalize(&eval(e)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use nogo_core::exactnum::rat;

    #[test]
    fn bracket_ast() {
        let e = parse("pb(S1^2 - S2^2, S1*S2)").unwrap();
        let Expr::Pb(f, g) = &e else { panic!("{e:?}") };
        assert!(matches!(**f, Expr::Sub(..)));
        assert!(matches!(**g, Expr::Mul(..)));
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(parse("a - c - 1").unwrap().to_string(), "a - c - 1");
        let e = parse("1 - (2 - 3)").unwrap();
        assert_eq!(e.to_string(), "1 - (2 - 3)");
        assert_eq!(parse("-S1^2").unwrap(), Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::Sym(Symbol::S1)), 2))));
        assert_eq!(parse("s^2*S3").unwrap().to_string(), "s^2*S3");
        assert_eq!(parse(" 3/4 * Y( 3 , -2 )").unwrap().to_string(), "3/4*Y(3,-2)");
    }

    #[test]
    fn error_positions() {
        assert_eq!(
            parse("S1 +\n  * S2"),
            Err(ParseError::Syntax { line: 2, col: 3, msg: "unexpected `*`".into() })
        );
        assert_eq!(parse("S4"), Err(ParseError::UnknownSymbol { line: 1, col: 1, name: "S4".into() }));
        assert!(parse("S1^-1").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("pb(S1)").is_err());
    }

    #[test]
    fn evaluation() {
        let e = parse("pb(S1, S2)").unwrap();
        assert_eq!(eval_sphere(&e).unwrap(), SpherePoly::coord(nogo_core::sphere_poly::Axis::X3));
        let r = eval_sphere(&parse("S1^2 + S2^2 + S3^2 - s^2").unwrap()).unwrap();
        assert!(r.is_zero());
        let q = eval(&parse("sqrt(8)*sqrt(1/2)").unwrap()).unwrap();
        assert_eq!(q.constant_term(), Coefficient::from_rational(rat(2, 1)));
        assert!(matches!(eval(&parse("a*S1").unwrap()), Err(EvalError::Parameter("a"))));
        assert!(eval(&parse("Y(2,3)").unwrap()).is_err());
    }
}
