use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::BigRat;

/// The three deformation parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    H = 0,
    G = 1,
    Z = 2,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::H, Var::G, Var::Z];

    pub fn name(self) -> &'static str {
        match self {
            Var::H => "h",
            Var::G => "g",
            Var::Z => "z",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        match name {
            "h" => Some(Var::H),
            "g" => Some(Var::G),
            "z" => Some(Var::Z),
            _ => None,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Exponent triple `(e_h, e_g, e_z)`, ordered graded-lexicographically with h > g > z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 3]);

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut e = [0; 3];
        for (k, slot) in e.iter_mut().enumerate() {
            *slot = self.0[k].checked_sub(other.0[k])?;
        }
        Some(Monomial(e))
    }

    fn with_exp(mut self, v: Var, e: u16) -> Self {
        self.0[v.index()] = e;
        self
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in h, g, z with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigRat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::ONE, c);
        p
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRat::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(v), BigRat::one());
        p
    }

    pub fn monomial(m: Monomial, c: BigRat) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRat)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRat)> {
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

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    /// Constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRat> {
        match self.terms.len() {
            0 => Some(BigRat::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRat)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.leading().map_or(0, |(m, _)| m.degree())
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients with respect to `v`, indexed by the exponent of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(); usize::from(self.degree_in(v)) + 1];
        for (m, c) in &self.terms {
            let e = usize::from(m.exp(v));
            out[e].add_term(m.with_exp(v, 0), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[MultiPoly]) -> Self {
        let mut p = MultiPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let e = u16::try_from(e).expect("degree overflow");
            for (m, a) in &c.terms {
                p.add_term(m.with_exp(v, e), a.clone());
            }
        }
        p
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (dm, dc) = d.leading()?;
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.checked_div(dm)?;
            let c = rc / dc;
            rem = &rem - &d.mul_monomial(&m, &c);
            quot.add_term(m, c);
        }
        Some(quot)
    }

    pub fn eval(&self, point: &[BigRat; 3]) -> BigRat {
        let mut acc = BigRat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                for _ in 0..m.exp(v) {
                    t *= &point[v.index()];
                }
            }
            acc += t;
        }
        acc
    }

    /// Replace `v` by the polynomial `value`.
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> MultiPoly {
        let coeffs = self.coeffs_in(v);
        let mut acc = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Gcd of the coefficient numerators (assumes integer coefficients).
    pub fn integer_content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
    }

    /// Multivariate gcd by content / primitive-part recursion, scaled to integer
    /// coefficients with positive leading coefficient.
    pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        if a.is_zero() {
            return b.normalized_unit();
        }
        if b.is_zero() {
            return a.normalized_unit();
        }
        if a.is_constant() || b.is_constant() {
            return MultiPoly::one();
        }
        let shared = Var::ALL
            .into_iter()
            .find(|&v| a.degree_in(v) > 0 && b.degree_in(v) > 0);
        let Some(v) = shared else {
            return MultiPoly::one();
        };
        let ac = a.coeffs_in(v);
        let bc = b.coeffs_in(v);
        let ca = content(&ac);
        let cb = content(&bc);
        let pa = divide_all(&ac, &ca);
        let pb = divide_all(&bc, &cb);
        let c = MultiPoly::gcd(&ca, &cb);
        let g = primitive_prs(pa, pb);
        (&c * &MultiPoly::from_coeffs_in(v, &g)).normalized_unit()
    }

    /// Rescale to integer coefficients with unit content and positive leading coefficient.
    pub fn normalized_unit(&self) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let l = self.denominator_lcm();
        let scaled = self.scale(&BigRat::from_integer(l));
        let mut g = scaled.integer_content();
        if scaled.leading().is_some_and(|(_, c)| c.is_negative()) {
            g = -g;
        }
        scaled.scale(&BigRat::from_integer(g).recip())
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || *m == Monomial::ONE {
                factors.push(alloc::format!("{abs}"));
            }
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => factors.push(String::from(v.name())),
                    e => factors.push(alloc::format!("{}^{}", v.name(), e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

fn content(coeffs: &[MultiPoly]) -> MultiPoly {
    let mut g = MultiPoly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = MultiPoly::gcd(&g, c);
        if g.is_constant() {
            return MultiPoly::one();
        }
    }
    g
}

fn divide_all(coeffs: &[MultiPoly], d: &MultiPoly) -> Vec<MultiPoly> {
    coeffs
        .iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

fn trim(p: &mut Vec<MultiPoly>) {
    while p.last().is_some_and(MultiPoly::is_zero) {
        p.pop();
    }
}

fn pseudo_rem(f: &[MultiPoly], g: &[MultiPoly]) -> Vec<MultiPoly> {
    let lc = g.last().expect("nonzero divisor");
    let dg = g.len() - 1;
    let mut r = f.to_vec();
    trim(&mut r);
    while r.len() > dg && !r.is_empty() {
        let lr = r.last().cloned().expect("nonempty");
        let shift = r.len() - 1 - dg;
        for c in r.iter_mut() {
            *c = &*c * lc;
        }
        for (k, gc) in g.iter().enumerate() {
            let t = &lr * gc;
            r[k + shift] = &r[k + shift] - &t;
        }
        trim(&mut r);
    }
    r
}

fn primitive_prs(a: Vec<MultiPoly>, b: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let (mut f, mut g) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    trim(&mut f);
    trim(&mut g);
    loop {
        if g.is_empty() {
            return f;
        }
        let r = pseudo_rem(&f, &g);
        if r.is_empty() {
            return g;
        }
        if r.len() == 1 {
            return vec![MultiPoly::one()];
        }
        let c = content(&r);
        f = g;
        g = divide_all(&r, &c);
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> MultiPoly {
        MultiPoly::var(Var::H)
    }
    fn g() -> MultiPoly {
        MultiPoly::var(Var::G)
    }
    fn z() -> MultiPoly {
        MultiPoly::var(Var::Z)
    }
    fn c(n: i64) -> MultiPoly {
        MultiPoly::from_int(n)
    }

    #[test]
    fn graded_lex_leading_term() {
        let p = &(&h() * &g()) + &z().pow(3);
        assert_eq!(p.leading().unwrap().0, &Monomial([0, 0, 3]));
        let q = &h() + &g();
        assert_eq!(q.leading().unwrap().0, &Monomial([1, 0, 0]));
    }

    #[test]
    fn exact_division() {
        let a = &(&h() - &g()) * &(&z() + &c(1));
        let q = a.div_exact(&(&z() + &c(1))).unwrap();
        assert_eq!(q, &h() - &g());
        assert!(a.div_exact(&(&z() + &c(2))).is_none());
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f1 = &(&h() + &(&g() * &z())) * &(&z() + &c(1));
        let f2 = &(&h() - &c(3)) * &(&z() + &c(1));
        let a = &f1 * &(&h() + &g());
        let b = &f2 * &(&h() + &g());
        let expect = (&(&z() + &c(1)) * &(&h() + &g())).normalized_unit();
        assert_eq!(MultiPoly::gcd(&a, &b), expect);
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = &h().pow(2) + &g();
        let b = &z() + &c(1);
        assert!(MultiPoly::gcd(&a, &b).is_one());
    }

    #[test]
    fn substitution() {
        let p = &h().pow(2) + &g();
        assert_eq!(p.substitute(Var::G, &h()), &h().pow(2) + &h());
    }

    #[test]
    fn display() {
        let p = &(&c(3) * &z()) + &c(2);
        assert_eq!(alloc::format!("{p}"), "3*z+2");
        let q = &h() - &(&c(2) * &(&g() * &h()));
        assert_eq!(alloc::format!("{q}"), "-2*h*g+h");
    }
}
