use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::element::{Gen, Pbw, UhElement, UhTensor};
use super::UhError;
use crate::exactalg::{BigRat, RatFunc, TruncSeries, Var};
use crate::ncpoly::{Alphabet, ExprParser};

/// `U_h(sl2)` modulo `h^{N+1}`: PBW straightening, the Hopf maps and the adjoint action.
///
/// Products, coproducts of monomials and generator actions are memoized, so one instance
/// should be reused for related computations. Not `Sync`; build one per thread.
pub struct UhAlgebra {
    order: usize,
    left: RefCell<BTreeMap<(Gen, Pbw), UhElement>>,
    products: RefCell<BTreeMap<(Pbw, Pbw), UhElement>>,
    coproducts: RefCell<BTreeMap<Pbw, UhTensor>>,
    antipodes: RefCell<BTreeMap<Pbw, UhElement>>,
    cosh: UhElement,
    two_sinh: UhElement,
}

impl UhAlgebra {
    pub const DEFAULT_ORDER: usize = 6;

    pub fn new(order: usize) -> Self {
        UhAlgebra {
            order,
            left: RefCell::new(BTreeMap::new()),
            products: RefCell::new(BTreeMap::new()),
            coproducts: RefCell::new(BTreeMap::new()),
            antipodes: RefCell::new(BTreeMap::new()),
            cosh: UhElement::cosh_x(order),
            two_sinh: UhElement::sinh_x_over_h(order).scale_rat(&BigRat::from_integer(2.into())),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> UhElement {
        UhElement::zero(self.order)
    }

    pub fn one(&self) -> UhElement {
        UhElement::one(self.order)
    }

    pub fn gen(&self, g: Gen) -> UhElement {
        UhElement::generator(g, self.order)
    }

    pub fn mono(&self, m: Pbw) -> UhElement {
        UhElement::monomial(m, TruncSeries::one(self.order))
    }

    /// `e^{t h X}`.
    pub fn exp_x(&self, t: i64) -> UhElement {
        UhElement::exp_x(t, self.order)
    }

    pub fn sinh_x_over_h(&self) -> UhElement {
        UhElement::sinh_x_over_h(self.order)
    }

    pub fn cosh_x(&self) -> UhElement {
        self.cosh.clone()
    }

    /// `g · m` in PBW form.
    fn gen_times(&self, g: Gen, m: Pbw) -> UhElement {
        if let Some(v) = self.left.borrow().get(&(g, m)) {
            return v.clone();
        }
        let out = match g {
            Gen::Y => self.mono(Pbw::new(m.y + 1, m.h, m.x)),
            Gen::H if m.y == 0 => self.mono(Pbw::new(0, m.h + 1, m.x)),
            Gen::H => {
                // H·Y·r = Y·H·r − Y·cosh·r − cosh·Y·r
                let rest = self.mono(Pbw::new(m.y - 1, m.h, m.x));
                let yhr = self.gen_times_elem(Gen::Y, &self.gen_times(Gen::H, Pbw::new(m.y - 1, m.h, m.x)));
                let ycr = self.gen_times_elem(Gen::Y, &self.mul(&self.cosh, &rest));
                let cy = self.mul(&self.cosh, &self.mono(m));
                &(&yhr - &ycr) - &cy
            }
            Gen::X if m.y > 0 => {
                // X·Y·r = Y·X·r + H·r
                let rest = Pbw::new(m.y - 1, m.h, m.x);
                &self.gen_times_elem(Gen::Y, &self.gen_times(Gen::X, rest)) + &self.gen_times(Gen::H, rest)
            }
            Gen::X if m.h > 0 => {
                // X·H·r = H·X·r − (2 sinh(hX)/h)·r
                let rest = Pbw::new(0, m.h - 1, m.x);
                &self.gen_times_elem(Gen::H, &self.gen_times(Gen::X, rest)) - &self.mul(&self.two_sinh, &self.mono(rest))
            }
            Gen::X => self.mono(Pbw::new(0, 0, m.x + 1)),
        };
        self.left.borrow_mut().insert((g, m), out.clone());
        out
    }

    fn gen_times_elem(&self, g: Gen, e: &UhElement) -> UhElement {
        let mut out = self.zero();
        for (m, s) in e.terms() {
            out = &out + &self.gen_times(g, *m).scale(s);
        }
        out
    }

    /// Product of two PBW monomials.
    pub fn mul_mono(&self, a: Pbw, b: Pbw) -> UhElement {
        if a == Pbw::ONE {
            return self.mono(b);
        }
        if a.h == 0 && a.x == 0 {
            return self.mono(Pbw::new(a.y + b.y, b.h, b.x));
        }
        if b == Pbw::ONE {
            return self.mono(a);
        }
        if let Some(v) = self.products.borrow().get(&(a, b)) {
            return v.clone();
        }
        let (g, head) = if a.x > 0 {
            (Gen::X, Pbw::new(a.y, a.h, a.x - 1))
        } else if a.h > 0 {
            (Gen::H, Pbw::new(a.y, a.h - 1, 0))
        } else {
            (Gen::Y, Pbw::new(a.y - 1, 0, 0))
        };
        let mut out = self.zero();
        for (m, s) in self.gen_times(g, b).terms() {
            out = &out + &self.mul_mono(head, *m).scale(s);
        }
        self.products.borrow_mut().insert((a, b), out.clone());
        out
    }

    pub fn mul(&self, a: &UhElement, b: &UhElement) -> UhElement {
        let mut acc: BTreeMap<Pbw, TruncSeries> = BTreeMap::new();
        for (ma, sa) in a.terms() {
            let va = sa.valuation().unwrap_or(usize::MAX);
            for (mb, sb) in b.terms() {
                if va.saturating_add(sb.valuation().unwrap_or(usize::MAX)) > self.order {
                    continue;
                }
                let c = sa.mul_order(sb, self.order);
                for (m, s) in self.mul_mono(*ma, *mb).terms() {
                    let t = s.mul_order(&c, self.order);
                    let e = acc.entry(*m).or_insert_with(|| TruncSeries::zero(self.order));
                    *e = &*e + &t;
                }
            }
        }
        let mut out = self.zero();
        for (m, s) in acc {
            out.add_term(m, s);
        }
        out
    }

    pub fn product(&self, factors: &[&UhElement]) -> UhElement {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, a: &UhElement, n: u32) -> UhElement {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// `ab − ba`.
    pub fn commutator(&self, a: &UhElement, b: &UhElement) -> UhElement {
        &self.mul(a, b) - &self.mul(b, a)
    }

    /// Multiply tensors leg by leg.
    pub fn mul_tensor(&self, a: &UhTensor, b: &UhTensor) -> UhTensor {
        assert_eq!(a.legs(), b.legs(), "tensor legs differ");
        let mut out = UhTensor::zero(a.legs(), self.order);
        for (ka, sa) in a.terms() {
            let va = sa.valuation().unwrap_or(usize::MAX);
            for (kb, sb) in b.terms() {
                if va.saturating_add(sb.valuation().unwrap_or(usize::MAX)) > self.order {
                    continue;
                }
                let c = sa.mul_order(sb, self.order);
                let legs: Vec<UhElement> = ka.iter().zip(kb).map(|(p, q)| self.mul_mono(*p, *q)).collect();
                let mut partial: Vec<(Vec<Pbw>, TruncSeries)> = vec![(Vec::new(), c)];
                for leg in &legs {
                    let mut next = Vec::new();
                    for (key, s) in &partial {
                        for (m, t) in leg.terms() {
                            if s.valuation().unwrap_or(usize::MAX).saturating_add(t.valuation().unwrap_or(usize::MAX))
                                > self.order
                            {
                                continue;
                            }
                            let mut k = key.clone();
                            k.push(*m);
                            next.push((k, s.mul_order(t, self.order)));
                        }
                    }
                    partial = next;
                }
                for (k, s) in partial {
                    out.add_term(k, s);
                }
            }
        }
        out
    }

    fn gen_coproduct(&self, g: Gen) -> UhTensor {
        let one = self.one();
        let x = self.gen(g);
        match g {
            Gen::X => &UhTensor::pure(&x, &one) + &UhTensor::pure(&one, &x),
            Gen::H | Gen::Y => &UhTensor::pure(&x, &self.exp_x(1)) + &UhTensor::pure(&self.exp_x(-1), &x),
        }
    }

    fn coproduct_mono(&self, m: Pbw) -> UhTensor {
        if m == Pbw::ONE {
            return UhTensor::one(2, self.order);
        }
        if let Some(v) = self.coproducts.borrow().get(&m) {
            return v.clone();
        }
        let (g, tail) = if m.y > 0 {
            (Gen::Y, Pbw::new(m.y - 1, m.h, m.x))
        } else if m.h > 0 {
            (Gen::H, Pbw::new(0, m.h - 1, m.x))
        } else {
            (Gen::X, Pbw::new(0, 0, m.x - 1))
        };
        let out = self.mul_tensor(&self.gen_coproduct(g), &self.coproduct_mono(tail));
        self.coproducts.borrow_mut().insert(m, out.clone());
        out
    }

    pub fn coproduct(&self, e: &UhElement) -> UhTensor {
        let mut out = UhTensor::zero(2, self.order);
        for (m, s) in e.terms() {
            out = &out + &self.coproduct_mono(*m).scale(s);
        }
        out
    }

    pub fn counit(&self, e: &UhElement) -> TruncSeries {
        e.coeff(Pbw::ONE)
    }

    fn gen_antipode(&self, g: Gen) -> UhElement {
        let x = self.gen(g);
        let minus_one = BigRat::from_integer((-1).into());
        match g {
            Gen::X => x.scale_rat(&minus_one),
            Gen::H | Gen::Y => self.product(&[&self.exp_x(1), &x, &self.exp_x(-1)]).scale_rat(&minus_one),
        }
    }

    fn antipode_mono(&self, m: Pbw) -> UhElement {
        if let Some(v) = self.antipodes.borrow().get(&m) {
            return v.clone();
        }
        let (sx, sh, sy) = (self.gen_antipode(Gen::X), self.gen_antipode(Gen::H), self.gen_antipode(Gen::Y));
        let out = self.product(&[&self.pow(&sx, m.x), &self.pow(&sh, m.h), &self.pow(&sy, m.y)]);
        self.antipodes.borrow_mut().insert(m, out.clone());
        out
    }

    pub fn antipode(&self, e: &UhElement) -> UhElement {
        let mut out = self.zero();
        for (m, s) in e.terms() {
            out = &out + &self.antipode_mono(*m).scale(s);
        }
        out
    }

    /// Apply `f` to one leg of a tensor, keeping the number of legs.
    pub fn map_leg(&self, t: &UhTensor, leg: usize, f: impl Fn(&UhElement) -> UhElement) -> UhTensor {
        let mut out = UhTensor::zero(t.legs(), self.order);
        for (k, s) in t.terms() {
            for (m, c) in f(&self.mono(k[leg])).terms() {
                let mut key = k.clone();
                key[leg] = *m;
                out.add_term(key, s.mul_order(c, self.order));
            }
        }
        out
    }

    /// Apply the coproduct to one leg, adding a leg.
    pub fn split_leg(&self, t: &UhTensor, leg: usize) -> UhTensor {
        let mut out = UhTensor::zero(t.legs() + 1, self.order);
        for (k, s) in t.terms() {
            for (pair, c) in self.coproduct_mono(k[leg]).terms() {
                let mut key = k[..leg].to_vec();
                key.extend_from_slice(pair);
                key.extend_from_slice(&k[leg + 1..]);
                out.add_term(key, s.mul_order(c, self.order));
            }
        }
        out
    }

    /// Multiply the legs together.
    pub fn multiply_legs(&self, t: &UhTensor) -> UhElement {
        let mut out = self.zero();
        for (k, s) in t.terms() {
            let p = k.iter().fold(self.one(), |acc, m| self.mul(&acc, &self.mono(*m)));
            out = &out + &p.scale(s);
        }
        out
    }

    /// Left adjoint action `x ⊳ u = x₍₁₎ u S(x₍₂₎)`.
    pub fn adjoint(&self, x: &UhElement, u: &UhElement) -> UhElement {
        let mut out = self.zero();
        for (k, s) in self.coproduct(x).terms() {
            let term = self.product(&[&self.mono(k[0]), u, &self.antipode_mono(k[1])]);
            out = &out + &term.scale(s);
        }
        out
    }

    /// Parse an expression in `X`, `H`, `Y` with coefficients polynomial in `h`.
    pub fn parse(&self, src: &str) -> Result<UhElement, UhError> {
        let alpha = Alphabet::new(["X", "H", "Y"]);
        let params = [("h", RatFunc::h())];
        let poly = ExprParser::new(&alpha, &params).parse(src).map_err(|e| UhError::Parse(e.to_string()))?;
        let mut out = self.zero();
        for (w, c) in poly.terms() {
            let coeff = series_of(c, self.order).ok_or_else(|| UhError::NotPolynomial(c.to_string()))?;
            let gens: Vec<UhElement> = w
                .letters()
                .iter()
                .map(|&s| self.gen([Gen::X, Gen::H, Gen::Y][s as usize]))
                .collect();
            let word = gens.iter().fold(self.one(), |acc, g| self.mul(&acc, g));
            out = &out + &word.scale(&coeff);
        }
        Ok(out)
    }
}

/// A rational function that is a polynomial in `h` alone, as a truncated series.
pub fn series_of(c: &RatFunc, order: usize) -> Option<TruncSeries> {
    let den = c.denom().as_constant()?;
    let mut coeffs = Vec::new();
    for p in c.numer().coeffs_in(Var::H) {
        coeffs.push(p.as_constant()? / &den);
    }
    coeffs.truncate(order + 1);
    Some(TruncSeries::from_coeffs(coeffs, order))
}
