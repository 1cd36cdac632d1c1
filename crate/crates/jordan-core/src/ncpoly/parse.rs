use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::poly::NCPoly;
use super::word::{Alphabet, Sym, Word};
use crate::exactalg::{BigRat, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at offset {at}")]
    BadChar { ch: char, at: usize },
    #[error("unexpected {found} at offset {at}")]
    Unexpected { found: String, at: usize },
    #[error("unknown identifier {0}")]
    UnknownIdentifier(String),
    #[error("division by a non-scalar")]
    NonScalarDivisor,
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed s-expression: {0}")]
    Sexpr(String),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    End,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some(&(at, ch)) = it.peek() {
        if ch.is_whitespace() {
            it.next();
        } else if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, c)) = it.peek().filter(|(_, c)| c.is_ascii_digit()) {
                s.push(c);
                it.next();
            }
            out.push((Tok::Num(s.parse().expect("digits")), at));
        } else if ch.is_alphabetic() || ch == '_' {
            let mut s = String::new();
            while let Some(&(_, c)) = it.peek().filter(|(_, c)| c.is_alphanumeric() || *c == '_') {
                s.push(c);
                it.next();
            }
            out.push((Tok::Ident(s), at));
        } else if "+-*/^()".contains(ch) {
            out.push((Tok::Op(ch), at));
            it.next();
        } else {
            return Err(ParseError::BadChar { ch, at });
        }
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

/// Parser for polynomial expressions over an alphabet with named scalar parameters.
///
/// Products are taken in the free algebra; callers normalize. Juxtaposition multiplies,
/// and an identifier that is neither a parameter nor a generator is split greedily into
/// known names, so `ac` reads as `a*c`.
pub struct ExprParser<'a> {
    alpha: &'a Alphabet,
    params: &'a [(&'a str, RatFunc)],
}

impl<'a> ExprParser<'a> {
    pub fn new(alpha: &'a Alphabet, params: &'a [(&'a str, RatFunc)]) -> Self {
        ExprParser { alpha, params }
    }

    pub fn parse(&self, src: &str) -> Result<NCPoly, ParseError> {
        let toks = tokenize(src)?;
        let mut st = State { toks, pos: 0, p: self };
        let v = st.expr()?;
        match st.peek() {
            Tok::End => Ok(v),
            t => Err(st.unexpected(&t.clone())),
        }
    }

    /// Parse an expression that must be a scalar.
    pub fn parse_scalar(&self, src: &str) -> Result<RatFunc, ParseError> {
        let p = self.parse(src)?;
        p.as_constant().ok_or(ParseError::NonScalarDivisor)
    }

    fn resolve(&self, name: &str) -> Result<NCPoly, ParseError> {
        if let Some((_, v)) = self.params.iter().find(|(n, _)| *n == name) {
            return Ok(NCPoly::constant(v.clone()));
        }
        if let Some(s) = self.alpha.sym(name) {
            return Ok(NCPoly::sym(s));
        }
        self.split(name).ok_or_else(|| ParseError::UnknownIdentifier(name.to_string()))
    }

    /// Greedy longest-match split of a run of letters into known names.
    fn split(&self, name: &str) -> Option<NCPoly> {
        let mut acc = NCPoly::one();
        let mut rest = name;
        while !rest.is_empty() {
            let mut best: Option<(usize, NCPoly)> = None;
            for (n, v) in self.params {
                if rest.starts_with(n) && best.as_ref().is_none_or(|(l, _)| n.len() > *l) {
                    best = Some((n.len(), NCPoly::constant(v.clone())));
                }
            }
            for (k, n) in self.alpha.names().iter().enumerate() {
                if rest.starts_with(n.as_str()) && best.as_ref().is_none_or(|(l, _)| n.len() > *l) {
                    let s = Sym::try_from(k).expect("small alphabet");
                    best = Some((n.len(), NCPoly::word(Word::single(s))));
                }
            }
            let (l, v) = best?;
            acc = &acc * &v;
            rest = &rest[l..];
        }
        Some(acc)
    }
}

struct State<'p, 'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    p: &'p ExprParser<'a>,
}

impl State<'_, '_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, t: &Tok) -> ParseError {
        let found = match t {
            Tok::Num(n) => n.to_string(),
            Tok::Ident(s) => s.clone(),
            Tok::Op(c) => c.to_string(),
            Tok::End => "end of input".to_string(),
        };
        ParseError::Unexpected { found, at: self.toks[self.pos].1 }
    }

    fn expr(&mut self) -> Result<NCPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    acc += &self.term()?;
                }
                Tok::Op('-') => {
                    self.bump();
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NCPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Op('/') => {
                    self.bump();
                    let d = self.unary()?;
                    let c = d.as_constant().ok_or(ParseError::NonScalarDivisor)?;
                    let inv = c.recip().map_err(|_| ParseError::DivisionByZero)?;
                    acc = acc.scale(&inv);
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::Op('(') => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<NCPoly, ParseError> {
        if let Tok::Op('-') = self.peek() {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<NCPoly, ParseError> {
        let base = self.primary()?;
        if let Tok::Op('^') = self.peek() {
            self.bump();
            let t = self.bump();
            let Tok::Num(n) = t else {
                self.pos -= 1;
                return Err(self.unexpected(&t));
            };
            let n: u32 = n.try_into().map_err(|_| ParseError::Unexpected {
                found: "exponent".to_string(),
                at: self.toks[self.pos].1,
            })?;
            let mut acc = NCPoly::one();
            for _ in 0..n {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<NCPoly, ParseError> {
        match self.bump() {
            Tok::Num(n) => Ok(NCPoly::constant(RatFunc::from_rat(BigRat::from_integer(n)))),
            Tok::Ident(s) => self.p.resolve(&s),
            Tok::Op('(') => {
                let v = self.expr()?;
                match self.bump() {
                    Tok::Op(')') => Ok(v),
                    t => {
                        self.pos -= 1;
                        Err(self.unexpected(&t))
                    }
                }
            }
            t => {
                self.pos -= 1;
                Err(self.unexpected(&t))
            }
        }
    }
}

/// Parameters `h`, `g`, `z` bound to the corresponding indeterminates.
pub fn standard_params() -> [(&'static str, RatFunc); 3] {
    [("h", RatFunc::h()), ("g", RatFunc::g()), ("z", RatFunc::z())]
}

/// Read back the output of [`NCPoly::to_sexpr`].
pub fn parse_sexpr(src: &str, alpha: &Alphabet) -> Result<NCPoly, ParseError> {
    let bad = |m: &str| ParseError::Sexpr(m.to_string());
    let body = src
        .trim()
        .strip_prefix("(+")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| bad("expected (+ ...)"))?;
    let params = standard_params();
    let scalars = ExprParser::new(&EMPTY, &params);
    let mut out = NCPoly::zero();
    let mut rest = body.trim_start();
    while !rest.is_empty() {
        let inner = rest.strip_prefix("(*").ok_or_else(|| bad("expected (* ...)"))?;
        let close = inner.find(')').ok_or_else(|| bad("unclosed term"))?;
        let mut parts = inner[..close].split_whitespace();
        let coeff = parts.next().ok_or_else(|| bad("missing coefficient"))?;
        let word = parts.next().ok_or_else(|| bad("missing word"))?;
        if parts.next().is_some() {
            return Err(bad("too many fields in term"));
        }
        let (num, den) = coeff.split_once('/').ok_or_else(|| bad("coefficient needs num/den"))?;
        let c = scalars
            .parse_scalar(num)?
            .checked_div(&scalars.parse_scalar(den)?)
            .map_err(|_| ParseError::DivisionByZero)?;
        let w = if word == "1" {
            Word::empty()
        } else {
            Word(
                word.split('.')
                    .map(|n| alpha.sym(n).ok_or_else(|| ParseError::UnknownIdentifier(n.to_string())))
                    .collect::<Result<_, _>>()?,
            )
        };
        out.add_term(w, c);
        rest = inner[close + 1..].trim_start();
    }
    Ok(out)
}

static EMPTY: Alphabet = Alphabet::empty();
