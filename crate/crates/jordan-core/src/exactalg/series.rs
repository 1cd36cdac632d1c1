use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::BigRat;

/// Power series in h with rational coefficients, truncated above `order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<BigRat>,
    order: usize,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigRat::zero(); order + 1],
            order,
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRat::one(), order)
    }

    pub fn constant(c: BigRat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c·h^k`, or zero when `k` exceeds the order.
    pub fn monomial(c: BigRat, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRat>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRat::zero());
        TruncSeries { coeffs, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &BigRat {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest power of h with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            order: self.order,
        }
    }

    /// Multiply by h^k.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k <= self.order {
                out.coeffs[i + k] = c.clone();
            }
        }
        out
    }

    /// Change the truncation order, dropping or padding coefficients.
    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    pub fn mul_order(&self, rhs: &Self, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        TruncSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
            order,
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order.min(rhs.order);
        TruncSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
            order,
        }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.mul_order(rhs, self.order.min(rhs.order))
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("h")?,
                (1, false) => write!(f, "{a}*h")?,
                (_, true) => write!(f, "h^{k}")?,
                (_, false) => write!(f, "{a}*h^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(n: i64) -> BigRat {
        BigRat::from_integer(BigInt::from(n))
    }

    #[test]
    fn difference_of_squares() {
        let a = TruncSeries::from_coeffs(vec![int(1), int(1)], 2);
        let b = TruncSeries::from_coeffs(vec![int(1), int(-1)], 2);
        assert_eq!(&a * &b, TruncSeries::from_coeffs(vec![int(1), int(0), int(-1)], 2));
    }

    #[test]
    fn identity_and_truncation() {
        let s = TruncSeries::from_coeffs(vec![int(3), int(0), int(5)], 4);
        assert_eq!(&TruncSeries::one(4) * &s, s);
        let top = TruncSeries::monomial(int(1), 4, 4);
        let h = TruncSeries::monomial(int(1), 1, 4);
        assert!((&top * &h).is_zero());
    }
}
