use alloc::collections::btree_map::{self, BTreeMap};
use alloc::string::String;
use core::fmt::{self, Write as _};
use core::ops::{Add, Mul, Neg, Sub};

use super::word::{Alphabet, Sym, Word};
use crate::exactalg::{AlgError, RatFunc};

/// Finite linear combination of words with rational-function coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, RatFunc>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(RatFunc::one())
    }

    pub fn constant(c: RatFunc) -> Self {
        Self::term(c, Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(RatFunc::one(), w)
    }

    pub fn sym(s: Sym) -> Self {
        Self::word(Word::single(s))
    }

    pub fn term(c: RatFunc, w: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, RatFunc)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &RatFunc)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, RatFunc)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> RatFunc {
        self.coeff(&Word::empty())
    }

    /// Some(c) when the polynomial is a scalar multiple of the unit.
    pub fn as_constant(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&RatFunc) -> RatFunc) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn try_map_coeffs(
        &self,
        mut f: impl FnMut(&RatFunc) -> Result<RatFunc, AlgError>,
    ) -> Result<Self, AlgError> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Multiply on the left and right by fixed words.
    pub fn sandwich(&self, left: &[Sym], right: &[Sym]) -> Self {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (Word::splice(left, w.letters(), right), c.clone()))
                .collect(),
        }
    }

    /// Algebra homomorphism (or anti-homomorphism when `reverse`) of the free algebra
    /// determined by images of the generators.
    pub fn substitute_words(&self, image: &impl Fn(Sym) -> NCPoly, reverse: bool) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut acc = NCPoly::constant(c.clone());
            let letters: alloc::vec::Vec<Sym> = if reverse {
                w.letters().iter().rev().copied().collect()
            } else {
                w.letters().to_vec()
            };
            for s in letters {
                acc = &acc * &image(s);
            }
            out += &acc;
        }
        out
    }

    pub fn show<'a>(&'a self, alpha: &'a Alphabet) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, alpha }
    }

    /// `(+ (* num/den w.o.r.d) ...)`, terms in word order.
    pub fn to_sexpr(&self, alpha: &Alphabet) -> String {
        let mut s = String::from("(+");
        for (w, c) in &self.terms {
            let _ = write!(
                s,
                " (* {}/{} {})",
                c.numer(),
                c.denom(),
                alpha.show_sep(w, ".")
            );
        }
        s.push(')');
        s
    }
}

impl core::ops::AddAssign<&NCPoly> for NCPoly {
    fn add_assign(&mut self, rhs: &NCPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl core::ops::SubAssign<&NCPoly> for NCPoly {
    fn sub_assign(&mut self, rhs: &NCPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Free-algebra product (no rewriting).
impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for NCPoly {
            type Output = NCPoly;
            fn $m(self, rhs: NCPoly) -> NCPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a NCPoly,
    alpha: &'a Alphabet,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.poly.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let cs = alloc::format!("{c}");
            let needs_paren = cs.contains(['+', '/']) || cs[1..].contains('-');
            match (w.is_empty(), c.is_one(), needs_paren) {
                (true, _, _) => write!(f, "{cs}")?,
                (false, true, _) => write!(f, "{}", self.alpha.show(w))?,
                (false, false, true) => write!(f, "({cs})*{}", self.alpha.show(w))?,
                (false, false, false) => write!(f, "{cs}*{}", self.alpha.show(w))?,
            }
        }
        Ok(())
    }
}
