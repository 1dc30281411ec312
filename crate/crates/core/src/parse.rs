//! Text input: rationals (`"a"`, `"a/b"`, optional sign) and integer
//! polynomials in `x`, either as expressions (`"9*x^3 - 4"`) or as bracketed
//! coefficient lists, constant term first (`"[-4, 0, 0, 9]"`).
//!
//! The Unicode minus sign `−` is accepted wherever `-` is. Error positions
//! are 0-based character offsets.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{reduce, Rational};
use crate::minpoly::IntPolynomial;
use crate::{Error, Result};

/// Largest exponent accepted after `^`.
const MAX_EXPONENT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Dot,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(v) => format!("integer {v}"),
        Tok::X => "'x'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Dot => "'.'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::LBracket => "'['".into(),
        Tok::RBracket => "']'".into(),
        Tok::Comma => "','".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let v = digits.parse::<BigInt>().expect("ascii digits");
                out.push((start, Tok::Int(v)));
                continue;
            }
            'x' | 'X' => Tok::X,
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '.' => Tok::Dot,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            other => return Err(Error::parse(i, format!("unexpected character '{other}'"))),
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

/// Parses `"a"` or `"a/b"` with an optional leading minus, reducing the result.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let toks = tokenize(text)?;
    let end = text.chars().count();
    let mut it = toks.into_iter().peekable();
    let negative = matches!(it.peek(), Some((_, Tok::Minus)));
    if negative {
        it.next();
    }
    let num = match it.next() {
        Some((_, Tok::Int(v))) => v,
        Some((pos, t)) => return Err(Error::parse(pos, format!("expected an integer, found {}", describe(&t)))),
        None => return Err(Error::parse(end, "expected an integer")),
    };
    let den = match it.next() {
        None => BigInt::one(),
        Some((_, Tok::Slash)) => match it.next() {
            Some((pos, Tok::Int(v))) => {
                if v.is_zero() {
                    return Err(Error::parse(pos, "zero denominator"));
                }
                v
            }
            Some((pos, t)) => {
                return Err(Error::parse(pos, format!("expected a denominator, found {}", describe(&t))))
            }
            None => return Err(Error::parse(end, "expected a denominator")),
        },
        Some((pos, Tok::Dot)) => return Err(Error::parse(pos, "decimal notation is not supported; use a/b")),
        Some((pos, t)) => return Err(Error::parse(pos, format!("unexpected {}", describe(&t)))),
    };
    if let Some((pos, t)) = it.next() {
        return Err(Error::parse(pos, format!("unexpected {}", describe(&t))));
    }
    let num = if negative { -num } else { num };
    reduce(&num, &den)
}

/// Dense coefficient vector arithmetic for the expression parser.
#[derive(Debug, Clone)]
struct Dense(Vec<BigInt>);

impl Dense {
    fn constant(c: BigInt) -> Self {
        Dense(vec![c])
    }

    fn x() -> Self {
        Dense(vec![BigInt::zero(), BigInt::one()])
    }

    fn add(mut self, other: Dense, sign: i32) -> Self {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), BigInt::zero());
        }
        for (i, c) in other.0.into_iter().enumerate() {
            if sign < 0 {
                self.0[i] -= c;
            } else {
                self.0[i] += c;
            }
        }
        self
    }

    fn neg(self) -> Self {
        Dense(self.0.into_iter().map(|c| -c).collect())
    }

    fn mul(&self, other: &Dense) -> Self {
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Dense(out)
    }

    fn degree(&self) -> usize {
        self.0.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Dense::constant(BigInt::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn unexpected(&self, what: &str) -> Error {
        match self.peek() {
            Some(Tok::Slash) | Some(Tok::Dot) => {
                Error::parse(self.offset(), "non-integer coefficient")
            }
            Some(t) => Error::parse(self.offset(), format!("expected {what}, found {}", describe(t))),
            None => Error::parse(self.end, format!("expected {what}, found end of input")),
        }
    }

    // expr := ['-'|'+'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Dense> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(self.term()?, 1);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.add(self.term()?, -1);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor (['*'] factor)*  -- juxtaposition such as "2x" multiplies
    fn term(&mut self) -> Result<Dense> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::X) | Some(Tok::LParen) => acc = acc.mul(&self.factor()?),
                _ => return Ok(acc),
            }
        }
    }

    // factor := atom ['^' integer]
    fn factor(&mut self) -> Result<Dense> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(e)) => {
                let e = u64::try_from(&e)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| Error::parse(at, format!("exponent above {MAX_EXPONENT}")))?;
                let reach = (base.degree() as u64).saturating_mul(e);
                if reach > MAX_EXPONENT {
                    return Err(Error::parse(at, format!("degree above {MAX_EXPONENT}")));
                }
                Ok(base.pow(e))
            }
            Some(Tok::Minus) => Err(Error::parse(at, "negative exponents are not allowed")),
            _ => {
                self.pos -= 1;
                Err(self.unexpected("a non-negative integer exponent"))
            }
        }
    }

    // atom := integer | 'x' | '(' expr ')'
    fn atom(&mut self) -> Result<Dense> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let Some(Tok::Int(v)) = self.bump() else { unreachable!() };
                if matches!(self.peek(), Some(Tok::Slash) | Some(Tok::Dot)) {
                    return Err(self.unexpected("an operator"));
                }
                Ok(Dense::constant(v))
            }
            Some(Tok::X) => {
                self.bump();
                Ok(Dense::x())
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("an integer, 'x' or '('")),
        }
    }

    // list := '[' [signed (',' signed)*] ']'
    fn list(&mut self) -> Result<Vec<BigInt>> {
        self.bump();
        let mut coeffs = Vec::new();
        if self.peek() == Some(&Tok::RBracket) {
            return Err(Error::parse(self.offset(), "empty coefficient list"));
        }
        loop {
            let negative = match self.peek() {
                Some(Tok::Minus) => {
                    self.bump();
                    true
                }
                Some(Tok::Plus) => {
                    self.bump();
                    false
                }
                _ => false,
            };
            match self.peek() {
                Some(Tok::Int(_)) => {
                    let Some(Tok::Int(v)) = self.bump() else { unreachable!() };
                    coeffs.push(if negative { -v } else { v });
                }
                _ => return Err(self.unexpected("an integer coefficient")),
            }
            match self.peek() {
                Some(Tok::Comma) => {
                    self.bump();
                }
                Some(Tok::RBracket) => {
                    self.bump();
                    return Ok(coeffs);
                }
                _ => return Err(self.unexpected("',' or ']'")),
            }
        }
    }
}

/// Parses an integer polynomial in `x`.
pub fn parse_polynomial(text: &str) -> Result<IntPolynomial> {
    let toks = tokenize(text)?;
    let end = text.chars().count();
    if toks.is_empty() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    let mut p = Parser { toks, pos: 0, end };
    let coeffs = if p.peek() == Some(&Tok::LBracket) {
        p.list()?
    } else {
        p.expr()?.0
    };
    if p.pos < p.toks.len() {
        return Err(p.unexpected("end of input"));
    }
    IntPolynomial::new(coeffs).map_err(|_| Error::parse(0, "polynomial is identically zero"))
}
