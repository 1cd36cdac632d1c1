use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactalg::{BigRat, TruncSeries};

/// Exponents of the PBW monomial `Yᵃ Hᵇ Xᶜ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Pbw {
    pub y: u32,
    pub h: u32,
    pub x: u32,
}

impl Pbw {
    pub const ONE: Pbw = Pbw { y: 0, h: 0, x: 0 };

    pub fn new(y: u32, h: u32, x: u32) -> Self {
        Pbw { y, h, x }
    }

    pub fn degree(self) -> u32 {
        self.y + self.h + self.x
    }
}

impl fmt::Display for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Pbw::ONE {
            return f.write_str("1");
        }
        for (name, e) in [("Y", self.y), ("H", self.h), ("X", self.x)] {
            match e {
                0 => {}
                1 => f.write_str(name)?,
                _ => write!(f, "{name}^{e}")?,
            }
        }
        Ok(())
    }
}

/// The three generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    X,
    H,
    Y,
}

impl Gen {
    pub const ALL: [Gen; 3] = [Gen::X, Gen::H, Gen::Y];

    pub fn name(self) -> &'static str {
        match self {
            Gen::X => "X",
            Gen::H => "H",
            Gen::Y => "Y",
        }
    }

    pub fn pbw(self) -> Pbw {
        match self {
            Gen::X => Pbw::new(0, 0, 1),
            Gen::H => Pbw::new(0, 1, 0),
            Gen::Y => Pbw::new(1, 0, 0),
        }
    }
}

fn insert<K: Ord>(terms: &mut BTreeMap<K, TruncSeries>, key: K, s: TruncSeries) {
    use alloc::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(v) => {
            if !s.is_zero() {
                v.insert(s);
            }
        }
        Entry::Occupied(mut o) => {
            let sum = o.get() + &s;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// Element of `U_h(sl2)` modulo `h^{N+1}` in the PBW basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UhElement {
    terms: BTreeMap<Pbw, TruncSeries>,
    order: usize,
}

impl UhElement {
    pub fn zero(order: usize) -> Self {
        UhElement { terms: BTreeMap::new(), order }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(Pbw::ONE, TruncSeries::one(order))
    }

    pub fn monomial(m: Pbw, c: TruncSeries) -> Self {
        let mut out = Self::zero(c.order());
        out.add_term(m, c);
        out
    }

    pub fn generator(g: Gen, order: usize) -> Self {
        Self::monomial(g.pbw(), TruncSeries::one(order))
    }

    /// `Σₖ cₖ hᵏ Xᵏ` truncated at the order.
    pub fn series_in_x(coeffs: impl Fn(usize) -> BigRat, order: usize) -> Self {
        let mut out = Self::zero(order);
        for k in 0..=order {
            out.add_term(Pbw::new(0, 0, k as u32), TruncSeries::monomial(coeffs(k), k, order));
        }
        out
    }

    /// `e^{t h X}`.
    pub fn exp_x(t: i64, order: usize) -> Self {
        let mut fact = BigRat::one();
        let mut pow = BigRat::one();
        let mut c = Vec::with_capacity(order + 1);
        for k in 0..=order {
            if k > 0 {
                fact *= BigRat::from_integer((k as i64).into());
                pow *= BigRat::from_integer(t.into());
            }
            c.push(&pow / &fact);
        }
        Self::series_in_x(|k| c[k].clone(), order)
    }

    /// `sinh(hX)/h`.
    pub fn sinh_x_over_h(order: usize) -> Self {
        let mut out = Self::zero(order);
        let mut fact = BigRat::one();
        for k in 1..=order + 1 {
            fact *= BigRat::from_integer((k as i64).into());
            if k % 2 == 1 {
                out.add_term(Pbw::new(0, 0, k as u32), TruncSeries::monomial(fact.recip(), k - 1, order));
            }
        }
        out
    }

    /// `cosh(hX)`.
    pub fn cosh_x(order: usize) -> Self {
        let mut fact = BigRat::one();
        let mut c = Vec::with_capacity(order + 1);
        for k in 0..=order {
            if k > 0 {
                fact *= BigRat::from_integer((k as i64).into());
            }
            c.push(if k % 2 == 0 { fact.recip() } else { BigRat::zero() });
        }
        Self::series_in_x(|k| c[k].clone(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Pbw, &TruncSeries)> {
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

    pub fn coeff(&self, m: Pbw) -> TruncSeries {
        self.terms.get(&m).cloned().unwrap_or_else(|| TruncSeries::zero(self.order))
    }

    pub fn add_term(&mut self, m: Pbw, c: TruncSeries) {
        let c = if c.order() == self.order { c } else { c.truncate(self.order) };
        insert(&mut self.terms, m, c);
    }

    pub fn scale(&self, c: &TruncSeries) -> Self {
        let mut out = Self::zero(self.order);
        for (m, s) in &self.terms {
            out.add_term(*m, s.mul_order(c, self.order));
        }
        out
    }

    pub fn scale_rat(&self, c: &BigRat) -> Self {
        self.scale(&TruncSeries::constant(c.clone(), self.order))
    }

    /// Multiply by `hᵏ`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order);
        for (m, s) in &self.terms {
            out.add_term(*m, s.shift(k));
        }
        out
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (m, s) in &self.terms {
            out.add_term(*m, s.truncate(order));
        }
        out
    }

    /// Coefficient of `hᵏ` as a PBW combination with rational coefficients.
    pub fn h_coefficient(&self, k: usize) -> BTreeMap<Pbw, BigRat> {
        self.terms
            .iter()
            .filter(|(_, s)| k <= s.order() && !s.coeff(k).is_zero())
            .map(|(m, s)| (*m, s.coeff(k).clone()))
            .collect()
    }
}

impl Add for &UhElement {
    type Output = UhElement;
    fn add(self, rhs: &UhElement) -> UhElement {
        let mut out = self.truncate(self.order.min(rhs.order));
        for (m, s) in &rhs.terms {
            out.add_term(*m, s.clone());
        }
        out
    }
}

impl Sub for &UhElement {
    type Output = UhElement;
    fn sub(self, rhs: &UhElement) -> UhElement {
        self + &(-rhs)
    }
}

impl Neg for &UhElement {
    type Output = UhElement;
    fn neg(self) -> UhElement {
        UhElement {
            terms: self.terms.iter().map(|(m, s)| (*m, -s)).collect(),
            order: self.order,
        }
    }
}

fn write_series(f: &mut fmt::Formatter<'_>, s: &TruncSeries, first: bool) -> fmt::Result {
    let nonzero = s.coeffs().iter().filter(|c| !c.is_zero()).count();
    if nonzero == 1 && s.coeff(0).is_one() {
        return if first { Ok(()) } else { f.write_str(" + ") };
    }
    if !first {
        f.write_str(" + ")?;
    }
    write!(f, "({s})")
}

impl fmt::Display for UhElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, s)) in self.terms.iter().enumerate() {
            write_series(f, s, i == 0)?;
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Element of a tensor power of `U_h(sl2)`, leg-wise in PBW form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UhTensor {
    terms: BTreeMap<Vec<Pbw>, TruncSeries>,
    legs: usize,
    order: usize,
}

impl UhTensor {
    pub fn zero(legs: usize, order: usize) -> Self {
        UhTensor { terms: BTreeMap::new(), legs, order }
    }

    pub fn one(legs: usize, order: usize) -> Self {
        let mut out = Self::zero(legs, order);
        out.add_term(alloc::vec![Pbw::ONE; legs], TruncSeries::one(order));
        out
    }

    /// `a ⊗ b`.
    pub fn pure(a: &UhElement, b: &UhElement) -> Self {
        let order = a.order().min(b.order());
        let mut out = Self::zero(2, order);
        for (ma, sa) in a.terms() {
            for (mb, sb) in b.terms() {
                out.add_term(alloc::vec![*ma, *mb], sa.mul_order(sb, order));
            }
        }
        out
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Pbw>, &TruncSeries)> {
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

    pub fn add_term(&mut self, key: Vec<Pbw>, c: TruncSeries) {
        debug_assert_eq!(key.len(), self.legs);
        let c = if c.order() == self.order { c } else { c.truncate(self.order) };
        insert(&mut self.terms, key, c);
    }

    pub fn scale(&self, c: &TruncSeries) -> Self {
        let mut out = Self::zero(self.legs, self.order);
        for (k, s) in &self.terms {
            out.add_term(k.clone(), s.mul_order(c, self.order));
        }
        out
    }

    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.legs, self.order);
        for (key, s) in &self.terms {
            out.add_term(key.clone(), s.shift(k));
        }
        out
    }
}

impl Add for &UhTensor {
    type Output = UhTensor;
    fn add(self, rhs: &UhTensor) -> UhTensor {
        assert_eq!(self.legs, rhs.legs, "tensor legs differ");
        let mut out = UhTensor::zero(self.legs, self.order.min(rhs.order));
        for (k, s) in self.terms.iter().chain(&rhs.terms) {
            out.add_term(k.clone(), s.clone());
        }
        out
    }
}

impl Sub for &UhTensor {
    type Output = UhTensor;
    fn sub(self, rhs: &UhTensor) -> UhTensor {
        self + &rhs.scale(&-&TruncSeries::one(rhs.order))
    }
}

impl fmt::Display for UhTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, s)) in self.terms.iter().enumerate() {
            write_series(f, s, i == 0)?;
            for (j, m) in k.iter().enumerate() {
                if j > 0 {
                    f.write_str("⊗")?;
                }
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}
