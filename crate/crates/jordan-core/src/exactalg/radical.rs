use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgError, BigRat};

/// Element `c0 + c1·√2 + c2·√3 + c3·√6` of Q(√2,√3).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RadElem(pub [BigRat; 4]);

fn q(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

impl RadElem {
    pub fn zero() -> Self {
        RadElem([BigRat::zero(), BigRat::zero(), BigRat::zero(), BigRat::zero()])
    }

    pub fn one() -> Self {
        Self::rational(BigRat::one())
    }

    pub fn rational(c: BigRat) -> Self {
        RadElem([c, BigRat::zero(), BigRat::zero(), BigRat::zero()])
    }

    pub fn int(n: i64) -> Self {
        Self::rational(q(n))
    }

    pub fn sqrt2() -> Self {
        RadElem([BigRat::zero(), BigRat::one(), BigRat::zero(), BigRat::zero()])
    }

    pub fn sqrt3() -> Self {
        RadElem([BigRat::zero(), BigRat::zero(), BigRat::one(), BigRat::zero()])
    }

    pub fn sqrt6() -> Self {
        RadElem([BigRat::zero(), BigRat::zero(), BigRat::zero(), BigRat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.0[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        RadElem(core::array::from_fn(|k| &self.0[k] * c))
    }

    /// Square root of a non-negative rational whose square-free part divides 6.
    pub fn sqrt_rational(r: &BigRat) -> Result<Self, AlgError> {
        if r.is_negative() {
            return Err(AlgError::RadicalFieldInsufficient);
        }
        if r.is_zero() {
            return Ok(Self::zero());
        }
        for (s, unit) in [
            (1, Self::one()),
            (2, Self::sqrt2()),
            (3, Self::sqrt3()),
            (6, Self::sqrt6()),
        ] {
            let x = r / q(s);
            if let (Some(a), Some(b)) = (exact_sqrt(x.numer()), exact_sqrt(x.denom())) {
                return Ok(unit.scale(&BigRat::new(a, b)));
            }
        }
        Err(AlgError::RadicalFieldInsufficient)
    }

    /// Conjugation √3 ↦ −√3, keeping Q(√2) fixed.
    fn conj3(&self) -> Self {
        RadElem([
            self.0[0].clone(),
            self.0[1].clone(),
            -&self.0[2],
            -&self.0[3],
        ])
    }

    /// Conjugation √2 ↦ −√2, keeping Q(√3) fixed.
    fn conj2(&self) -> Self {
        RadElem([
            self.0[0].clone(),
            -&self.0[1],
            self.0[2].clone(),
            -&self.0[3],
        ])
    }

    pub fn inv(&self) -> Result<Self, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        // x·conj3(x) lies in Q(√2); multiplying by its √2-conjugate lands in Q.
        let c3 = self.conj3();
        let n1 = self * &c3;
        let c2 = n1.conj2();
        let n2 = &n1 * &c2;
        debug_assert!(n2.is_rational());
        let norm = n2.0[0].clone();
        Ok((&c3 * &c2).scale(&norm.recip()))
    }
}

fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Add for &RadElem {
    type Output = RadElem;
    fn add(self, rhs: &RadElem) -> RadElem {
        RadElem(core::array::from_fn(|k| &self.0[k] + &rhs.0[k]))
    }
}

impl Sub for &RadElem {
    type Output = RadElem;
    fn sub(self, rhs: &RadElem) -> RadElem {
        RadElem(core::array::from_fn(|k| &self.0[k] - &rhs.0[k]))
    }
}

impl Neg for &RadElem {
    type Output = RadElem;
    fn neg(self) -> RadElem {
        RadElem(core::array::from_fn(|k| -&self.0[k]))
    }
}

impl Mul for &RadElem {
    type Output = RadElem;
    fn mul(self, rhs: &RadElem) -> RadElem {
        let [a0, a1, a2, a3] = &self.0;
        let [b0, b1, b2, b3] = &rhs.0;
        let two = q(2);
        let three = q(3);
        let six = q(6);
        RadElem([
            a0 * b0 + &two * a1 * b1 + &three * a2 * b2 + &six * a3 * b3,
            a0 * b1 + a1 * b0 + &three * (a2 * b3 + a3 * b2),
            a0 * b2 + a2 * b0 + &two * (a1 * b3 + a3 * b1),
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        ])
    }
}

impl fmt::Display for RadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = ["", "√2", "√3", "√6"];
        let mut first = true;
        for (c, name) in self.0.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match (a.is_one(), name.is_empty()) {
                (true, false) => f.write_str(name)?,
                (_, true) => write!(f, "{a}")?,
                (false, false) => write!(f, "{a}{name}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in h with coefficients in Q(√2,√3), lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RadPoly(Vec<RadElem>);

impl RadPoly {
    pub fn zero() -> Self {
        RadPoly(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(RadElem::one())
    }

    pub fn constant(c: RadElem) -> Self {
        Self::from_coeffs(alloc::vec![c])
    }

    pub fn int(n: i64) -> Self {
        Self::constant(RadElem::int(n))
    }

    pub fn h() -> Self {
        Self::from_coeffs(alloc::vec![RadElem::zero(), RadElem::one()])
    }

    /// `c·h^k`.
    pub fn term(c: RadElem, k: usize) -> Self {
        let mut v = alloc::vec![RadElem::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut v: Vec<RadElem>) -> Self {
        while v.last().is_some_and(RadElem::is_zero) {
            v.pop();
        }
        RadPoly(v)
    }

    pub fn coeffs(&self) -> &[RadElem] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> RadElem {
        self.0.get(k).cloned().unwrap_or_else(RadElem::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn as_constant(&self) -> Option<RadElem> {
        match self.0.len() {
            0 => Some(RadElem::zero()),
            1 => Some(self.0[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &RadElem) -> Self {
        Self::from_coeffs(self.0.iter().map(|a| a * c).collect())
    }

    /// Value at h = 0.
    pub fn at_zero(&self) -> RadElem {
        self.coeff(0)
    }

    pub fn eval(&self, h: &BigRat) -> RadElem {
        self.0.iter().rev().fold(RadElem::zero(), |acc, c| &(&acc * &RadElem::rational(h.clone())) + c)
    }
}

impl Add for &RadPoly {
    type Output = RadPoly;
    fn add(self, rhs: &RadPoly) -> RadPoly {
        let n = self.0.len().max(rhs.0.len());
        RadPoly::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &RadPoly {
    type Output = RadPoly;
    fn sub(self, rhs: &RadPoly) -> RadPoly {
        let n = self.0.len().max(rhs.0.len());
        RadPoly::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Neg for &RadPoly {
    type Output = RadPoly;
    fn neg(self) -> RadPoly {
        RadPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &RadPoly {
    type Output = RadPoly;
    fn mul(self, rhs: &RadPoly) -> RadPoly {
        if self.is_zero() || rhs.is_zero() {
            return RadPoly::zero();
        }
        let mut out = alloc::vec![RadElem::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        RadPoly::from_coeffs(out)
    }
}

impl fmt::Display for RadPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*h")?,
                _ => write!(f, "({c})*h^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        assert_eq!(&RadElem::sqrt2() * &RadElem::sqrt2(), RadElem::int(2));
        assert_eq!(&RadElem::sqrt2() * &RadElem::sqrt3(), RadElem::sqrt6());
        let half_root2 = RadElem::sqrt2().scale(&BigRat::new(1.into(), 2.into()));
        assert_eq!(&half_root2 * &RadElem::sqrt2(), RadElem::one());
    }

    #[test]
    fn inverse_of_mixed_element() {
        let x = &(&RadElem::int(1) + &RadElem::sqrt2()) + &RadElem::sqrt6();
        assert_eq!(&x * &x.inv().unwrap(), RadElem::one());
    }

    #[test]
    fn square_roots() {
        assert_eq!(
            RadElem::sqrt_rational(&BigRat::from_integer(24.into())).unwrap(),
            RadElem::sqrt6().scale(&BigRat::from_integer(2.into()))
        );
        assert_eq!(
            RadElem::sqrt_rational(&BigRat::new(1.into(), 2.into())).unwrap(),
            RadElem::sqrt2().scale(&BigRat::new(1.into(), 2.into()))
        );
        assert!(RadElem::sqrt_rational(&BigRat::from_integer(5.into())).is_err());
    }

    #[test]
    fn poly_product() {
        let p = &RadPoly::one() + &RadPoly::h();
        let m = &RadPoly::one() - &RadPoly::h();
        assert_eq!(&p * &m, &RadPoly::one() - &(&RadPoly::h() * &RadPoly::h()));
    }
}
