use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::poly::NCPoly;
use super::rewrite::{RewriteError, RewriteSystem};
use super::word::{Alphabet, Word};
use crate::exactalg::RatFunc;

/// Element of a tensor power of the free algebra; keys hold one word per leg.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TensorNCPoly {
    terms: BTreeMap<Vec<Word>, RatFunc>,
}

impl TensorNCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 ⊗ ... ⊗ 1` with `arity` legs.
    pub fn one(arity: usize) -> Self {
        Self::term(RatFunc::one(), alloc::vec![Word::empty(); arity])
    }

    pub fn term(c: RatFunc, legs: Vec<Word>) -> Self {
        let mut t = Self::zero();
        t.add_term(legs, c);
        t
    }

    /// Tensor product of polynomials.
    pub fn pure(factors: &[&NCPoly]) -> Self {
        let mut acc = Self::one(0);
        for p in factors {
            let mut next = Self::zero();
            for (legs, c) in &acc.terms {
                for (w, a) in p.terms() {
                    let mut l = legs.clone();
                    l.push(w.clone());
                    next.add_term(l, c * a);
                }
            }
            acc = next;
        }
        acc
    }

    pub fn add_term(&mut self, legs: Vec<Word>, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &RatFunc)> {
        self.terms.iter()
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

    pub fn arity(&self) -> Option<usize> {
        self.terms.keys().next().map(Vec::len)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero();
        for (l, a) in &self.terms {
            out.add_term(l.clone(), a * c);
        }
        out
    }

    /// Apply a linear map to one leg, splicing its tensor output in place of that leg.
    pub fn map_leg(&self, leg: usize, f: &impl Fn(&Word) -> TensorNCPoly) -> TensorNCPoly {
        let mut out = Self::zero();
        for (legs, c) in &self.terms {
            for (img, a) in f(&legs[leg]).terms() {
                let mut l = Vec::with_capacity(legs.len() + img.len());
                l.extend_from_slice(&legs[..leg]);
                l.extend_from_slice(img);
                l.extend_from_slice(&legs[leg + 1..]);
                out.add_term(l, c * a);
            }
        }
        out
    }

    /// Multiply all legs together in order, as a linear map to the algebra.
    pub fn multiply_legs(&self) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().map(|(legs, c)| {
            let w = legs.iter().fold(Word::empty(), |acc, x| acc.concat(x));
            (w, c.clone())
        }))
    }

    /// Normalize every leg independently and collect like terms.
    pub fn normalize(&self, rs: &RewriteSystem) -> Result<TensorNCPoly, RewriteError> {
        let mut out = Self::zero();
        for (legs, c) in &self.terms {
            let parts = legs
                .iter()
                .map(|w| rs.normalize(&NCPoly::word(w.clone())))
                .collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&NCPoly> = parts.iter().collect();
            for (l, a) in Self::pure(&refs).terms {
                out.add_term(l, c * &a);
            }
        }
        Ok(out)
    }

    pub fn show<'a>(&'a self, alpha: &'a Alphabet) -> TensorDisplay<'a> {
        TensorDisplay { t: self, alpha }
    }
}

/// Tensor normal form, leg by leg.
pub fn tensor_normalize(t: &TensorNCPoly, rs: &RewriteSystem) -> Result<TensorNCPoly, RewriteError> {
    t.normalize(rs)
}

impl Add for &TensorNCPoly {
    type Output = TensorNCPoly;
    fn add(self, rhs: &TensorNCPoly) -> TensorNCPoly {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TensorNCPoly {
    type Output = TensorNCPoly;
    fn sub(self, rhs: &TensorNCPoly) -> TensorNCPoly {
        self + &(-rhs)
    }
}

impl Neg for &TensorNCPoly {
    type Output = TensorNCPoly;
    fn neg(self) -> TensorNCPoly {
        self.scale(&RatFunc::from_int(-1))
    }
}

/// Legwise product in the free algebra.
impl Mul for &TensorNCPoly {
    type Output = TensorNCPoly;
    fn mul(self, rhs: &TensorNCPoly) -> TensorNCPoly {
        let mut out = TensorNCPoly::zero();
        for (l1, a) in &self.terms {
            for (l2, b) in &rhs.terms {
                let legs = l1.iter().zip(l2).map(|(x, y)| x.concat(y)).collect();
                out.add_term(legs, a * b);
            }
        }
        out
    }
}

pub struct TensorDisplay<'a> {
    t: &'a TensorNCPoly,
    alpha: &'a Alphabet,
}

impl fmt::Display for TensorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_zero() {
            return f.write_str("0");
        }
        for (k, (legs, c)) in self.t.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if !c.is_one() {
                write!(f, "({c})*")?;
            }
            for (i, w) in legs.iter().enumerate() {
                if i > 0 {
                    f.write_str("⊗")?;
                }
                write!(f, "{}", self.alpha.show(w))?;
            }
        }
        Ok(())
    }
}
