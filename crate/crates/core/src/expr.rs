//! Text grammar for scalars and algebra elements.
//!
//! ```text
//! element := ['-'] term (('+' | '-') term)*
//! term    := atom (['*'] atom)*
//! atom    := base ['^' nat]
//! base    := 'd' | 'u' | '(' element ')' | scalar
//! scalar  := rat [sign rat '*' 'sqrt' '(' int ')'] | [rat '*'] 'sqrt' '(' int ')'
//! rat     := int ['/' nat]
//! ```
//!
//! Whitespace is ignored; juxtaposition and `*` both mean concatenation.
//! A `+`/`-` after a number continues the same scalar literal only when
//! the full shape `rat * sqrt ( int )` follows (the canonical form
//! emitted by [`Scalar`]'s `Display`); otherwise it starts a new additive
//! term.  Parsing produces a [`FreeElement`]; no rewriting happens here.
//!
//! [`format_element`] emits the canonical text: terms sorted by
//! `(i, j, k)`, coefficients always explicit, factors `u`, `(du)`, `d`
//! with `^e` only for exponents above 1.  Emitted text re-parses to an
//! equal value.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::pbw::{Element, FreeElement, Gen};
use crate::scalar::{Int, Rat, Scalar};

/// A syntax error with the byte offset it was detected at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl core::fmt::Display for ParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.message)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParseError {}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, message: message.into() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    D,
    U,
    Sqrt,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digit run");
                toks.push((start, Tok::Num(n)));
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let name = &text[start..i];
                if name == "sqrt" {
                    toks.push((start, Tok::Sqrt));
                } else {
                    // Any other run is read letter-by-letter, so `du`
                    // means the word d*u.
                    for (off, ch) in name.char_indices() {
                        match ch {
                            'd' => toks.push((start + off, Tok::D)),
                            'u' => toks.push((start + off, Tok::U)),
                            other => {
                                return err(start + off, format!("unknown letter `{other}`"))
                            }
                        }
                    }
                }
            }
            b'+' => push1(&mut toks, &mut i, Tok::Plus),
            b'-' => push1(&mut toks, &mut i, Tok::Minus),
            b'*' => push1(&mut toks, &mut i, Tok::Star),
            b'/' => push1(&mut toks, &mut i, Tok::Slash),
            b'^' => push1(&mut toks, &mut i, Tok::Caret),
            b'(' => push1(&mut toks, &mut i, Tok::LParen),
            b')' => push1(&mut toks, &mut i, Tok::RParen),
            _ => return err(i, format!("unexpected character `{}`", &text[i..i + 1])),
        }
    }
    Ok(toks)
}

fn push1(toks: &mut Vec<(usize, Tok)>, i: &mut usize, t: Tok) {
    toks.push((*i, t));
    *i += 1;
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    cur: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: tokenize(text)?, cur: 0, end: text.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.cur).map(|(_, t)| t)
    }

    fn peek_at(&self, ahead: usize) -> Option<&Tok> {
        self.toks.get(self.cur + ahead).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.cur).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.cur).map(|(_, t)| t.clone());
        if t.is_some() {
            self.cur += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => err(pos, format!("expected {what}")),
        }
    }

    /// `nat` after `^`, capped to keep pathological exponents from
    /// exhausting memory before the rewrite cap can see them.
    fn nat(&mut self) -> Result<u32, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => {
                if n.is_negative() {
                    return err(pos, "exponent must be non-negative");
                }
                u32::try_from(&n)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or(ParseError { pos, message: "exponent too large".to_string() })
            }
            _ => err(pos, "expected a number after `^`"),
        }
    }

    /// `int ['/' nat]`, with an optional already-consumed sign.
    fn rat(&mut self, negative: bool) -> Result<Rat, ParseError> {
        let pos = self.pos();
        let numer = match self.bump() {
            Some(Tok::Num(n)) => n,
            _ => return err(pos, "expected a number"),
        };
        let denom = if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Num(n)) if !n.is_zero() => n,
                Some(Tok::Num(_)) => return err(pos, "zero denominator"),
                _ => return err(pos, "expected a denominator"),
            }
        } else {
            BigInt::one()
        };
        let r = Rat::new(numer, denom);
        Ok(if negative { -r } else { r })
    }

    /// `'sqrt' '(' ['-'] num ')'` with the `sqrt` token already consumed.
    fn sqrt_body(&mut self) -> Result<Scalar, ParseError> {
        self.expect(Tok::LParen, "`(` after sqrt")?;
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let pos = self.pos();
        let d = match self.bump() {
            Some(Tok::Num(n)) => n,
            _ => return err(pos, "expected an integer inside sqrt"),
        };
        self.expect(Tok::RParen, "`)` closing sqrt")?;
        let d: Int = if neg { -d } else { d };
        Ok(Scalar::quadratic(Rat::zero(), Rat::one(), d))
    }

    /// A scalar literal starting at the current token.  `standalone`
    /// enables the greedy `+/- sqrt(...)` tail used when the whole input
    /// is one scalar; inside element text the tail requires the explicit
    /// `rat * sqrt(...)` shape to stay distinguishable from a new term.
    fn scalar(&mut self, negative: bool, standalone: bool) -> Result<Scalar, ParseError> {
        if self.peek() == Some(&Tok::Sqrt) {
            self.bump();
            let root = self.sqrt_body()?;
            return Ok(if negative { -root } else { root });
        }
        let a = self.rat(negative)?;
        // `rat * sqrt(D)` with no separate rational part.
        if self.peek() == Some(&Tok::Star) && self.peek_at(1) == Some(&Tok::Sqrt) {
            self.bump();
            self.bump();
            let root = self.sqrt_body()?;
            return Ok(scale_rat(&root, &a));
        }
        // Tail: `+/- rat * sqrt(D)` (canonical), or `+/- sqrt(D)` when
        // parsing a standalone scalar.
        let tail_sign = match self.peek() {
            Some(Tok::Plus) => 1,
            Some(Tok::Minus) => -1,
            _ => return Ok(Scalar::rational(a)),
        };
        let full_shape = self.tail_is_rat_times_sqrt();
        let bare_shape = standalone && self.peek_at(1) == Some(&Tok::Sqrt);
        if !(full_shape || bare_shape) {
            return Ok(Scalar::rational(a));
        }
        self.bump();
        let b = if full_shape {
            let b = self.rat(tail_sign < 0)?;
            self.bump();
            self.bump();
            scale_rat(&self.sqrt_body()?, &b)
        } else {
            self.bump();
            let root = self.sqrt_body()?;
            if tail_sign < 0 {
                -root
            } else {
                root
            }
        };
        let pos = self.pos();
        Scalar::rational(a)
            .checked_add(&b)
            .map_err(|e| ParseError { pos, message: e.to_string() })
    }

    /// Whether the tokens after the current sign read `rat * sqrt`.
    fn tail_is_rat_times_sqrt(&self) -> bool {
        let mut k = 1;
        if !matches!(self.peek_at(k), Some(Tok::Num(_))) {
            return false;
        }
        k += 1;
        if self.peek_at(k) == Some(&Tok::Slash) {
            if !matches!(self.peek_at(k + 1), Some(Tok::Num(_))) {
                return false;
            }
            k += 2;
        }
        self.peek_at(k) == Some(&Tok::Star) && self.peek_at(k + 1) == Some(&Tok::Sqrt)
    }

    fn element(&mut self) -> Result<FreeElement, ParseError> {
        let mut negative = false;
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            negative = true;
        } else if self.peek() == Some(&Tok::Plus) {
            self.bump();
        }
        let mut acc = self.term(negative)?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term(false)?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.add(&self.term(true)?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self, negative: bool) -> Result<FreeElement, ParseError> {
        let mut acc = self.atom()?;
        if negative {
            acc = acc.scale(&-Scalar::one());
        }
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.atom()?);
                }
                // Juxtaposition: the next token can begin an atom.
                Some(Tok::D | Tok::U | Tok::LParen | Tok::Num(_) | Tok::Sqrt) => {
                    acc = acc.mul(&self.atom()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn atom(&mut self) -> Result<FreeElement, ParseError> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let e = self.nat()?;
            let powered = base.pow(e);
            if powered.max_word_len() > MAX_PARSE_WORD_LEN {
                return err(self.pos(), "word too long");
            }
            Ok(powered)
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<FreeElement, ParseError> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::D) => {
                self.bump();
                Ok(FreeElement::gen(Gen::D))
            }
            Some(Tok::U) => {
                self.bump();
                Ok(FreeElement::gen(Gen::U))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.element()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Num(_) | Tok::Sqrt) => {
                let c = self.scalar(false, false)?;
                Ok(FreeElement::scalar(c))
            }
            _ => err(pos, "expected `d`, `u`, `(`, or a scalar"),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.cur == self.toks.len() {
            Ok(())
        } else {
            err(self.pos(), "trailing input")
        }
    }
}

const MAX_EXPONENT: u32 = 1 << 16;
const MAX_PARSE_WORD_LEN: usize = 1 << 16;

fn scale_rat(s: &Scalar, r: &Rat) -> Scalar {
    s * &Scalar::rational(r.clone())
}

/// Parses a standalone scalar in the field text form.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let mut p = Parser::new(text)?;
    let negative = if p.peek() == Some(&Tok::Minus) {
        p.bump();
        true
    } else {
        false
    };
    let s = p.scalar(negative, true)?;
    p.finish()?;
    Ok(s)
}

/// Parses element text into a scalar-weighted combination of free words.
pub fn parse_element(text: &str) -> Result<FreeElement, ParseError> {
    let mut p = Parser::new(text)?;
    if p.peek().is_none() {
        return err(0, "empty input");
    }
    let e = p.element()?;
    p.finish()?;
    Ok(e)
}

impl core::str::FromStr for Scalar {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

fn power(factor: &str, e: u32, out: &mut Vec<String>) {
    match e {
        0 => {}
        1 => out.push(factor.to_string()),
        _ => out.push(format!("{factor}^{e}")),
    }
}

/// Splits a coefficient into (separator sign, magnitude text): the sign
/// is that of the leading component, so emitted terms read naturally and
/// re-parse to the same value.
fn coeff_text(c: &Scalar) -> (bool, String) {
    let lead_negative = if c.rational_part().is_zero() && !c.is_zero() {
        c.sqrt_coefficient().is_negative()
    } else {
        c.rational_part().is_negative()
    };
    let mag = if lead_negative { -c } else { c.clone() };
    (lead_negative, mag.to_string())
}

/// Canonical text of a normal-form element: terms ascending in
/// `(i, j, k)`, coefficients explicit, `^` only for exponents above 1.
pub fn format_element(x: &Element) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in x.terms().enumerate() {
        let (negative, mag) = coeff_text(c);
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        power("u", m.u_pow, &mut factors);
        power("(du)", m.du_pow, &mut factors);
        power("d", m.d_pow, &mut factors);
        if factors.is_empty() {
            out.push_str(&mag);
        } else {
            out.push_str(&mag);
            out.push('*');
            out.push_str(&factors.join("*"));
        }
    }
    out
}
