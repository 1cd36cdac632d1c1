use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{MultiPoly, Var};
use super::{AlgError, BigRat};

/// Element of Q(h,g,z) kept as a reduced fraction of integer-coefficient polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: MultiPoly::zero(),
            den: MultiPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: MultiPoly::one(),
            den: MultiPoly::one(),
        }
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    pub fn h() -> Self {
        Self::var(Var::H)
    }

    pub fn g() -> Self {
        Self::var(Var::G)
    }

    pub fn z() -> Self {
        Self::var(Var::Z)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(BigRat::from_integer(BigInt::from(n)))
    }

    pub fn from_rat(c: BigRat) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rat(BigRat::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        canonical(p, MultiPoly::one())
    }

    /// Reduce `num/den` to canonical form.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, AlgError> {
        if den.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_constant() || num.is_constant() {
            return Ok(canonical(num, den));
        }
        let g = MultiPoly::gcd(&num, &den);
        if g.is_constant() {
            return Ok(canonical(num, den));
        }
        let n = num.div_exact(&g).expect("gcd divides numerator");
        let d = den.div_exact(&g).expect("gcd divides denominator");
        Ok(canonical(n, d))
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<BigRat> {
        if self.is_constant() {
            let n = self.num.as_constant()?;
            let d = self.den.as_constant()?;
            Some(n / d)
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Rough size used for pivot selection.
    pub fn complexity(&self) -> usize {
        self.num.len() + 4 * (self.den.len() - 1) + self.den.total_degree() as usize * 4
    }

    pub fn recip(&self) -> Result<Self, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self, AlgError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[BigRat; 3]) -> Result<BigRat, AlgError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(self.num.eval(point) / d)
    }

    /// Replace `v` by a rational function.
    pub fn substitute(&self, v: Var, value: &RatFunc) -> Result<Self, AlgError> {
        let n = subst_poly(&self.num, v, value);
        let d = subst_poly(&self.den, v, value);
        n.checked_div(&d)
    }

    /// Degree in `v` of numerator and denominator, used by printers and tests.
    pub fn degree_in(&self, v: Var) -> (u16, u16) {
        (self.num.degree_in(v), self.den.degree_in(v))
    }
}

fn subst_poly(p: &MultiPoly, v: Var, value: &RatFunc) -> RatFunc {
    let coeffs = p.coeffs_in(v);
    let mut acc = RatFunc::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * value) + &RatFunc::from_poly(c.clone());
    }
    acc
}

/// Fix the unit: integer coefficients, joint content one, positive leading denominator.
fn canonical(num: MultiPoly, den: MultiPoly) -> RatFunc {
    if num.is_zero() {
        return RatFunc::zero();
    }
    let l = num.denominator_lcm().lcm(&den.denominator_lcm());
    let lr = BigRat::from_integer(l);
    let mut n = num.scale(&lr);
    let mut d = den.scale(&lr);
    let mut g = n.integer_content().gcd(&d.integer_content());
    if d.leading().is_some_and(|(_, c)| c.is_negative()) {
        g = -g;
    }
    if !g.is_one() {
        let gr = BigRat::from_integer(g).recip();
        n = n.scale(&gr);
        d = d.scale(&gr);
    }
    RatFunc { num: n, den: d }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.len() > 1 || !self.den.is_constant() {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let n = &self.num + &rhs.num;
            return RatFunc::new(n, self.den.clone()).expect("nonzero denominator");
        }
        if self.den.is_constant() && rhs.den.is_constant() {
            let a = self.den.as_constant().expect("constant");
            let b = rhs.den.as_constant().expect("constant");
            let n = &self.num.scale(&b) + &rhs.num.scale(&a);
            return canonical(n, MultiPoly::constant(a * b));
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let d = &self.den * &rhs.den;
        RatFunc::new(n, d).expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_constant() && rhs.den.is_constant() {
            return canonical(&self.num * &rhs.num, &self.den * &rhs.den);
        }
        let g1 = MultiPoly::gcd(&self.num, &rhs.den);
        let g2 = MultiPoly::gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        canonical(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl From<BigRat> for RatFunc {
    fn from(c: BigRat) -> Self {
        RatFunc::from_rat(c)
    }
}

impl num_traits::Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &[(i64, [u16; 3])]) -> MultiPoly {
        MultiPoly::from_terms(s.iter().map(|(c, e)| {
            (
                super::super::poly::Monomial(*e),
                BigRat::from_integer(BigInt::from(*c)),
            )
        }))
    }

    #[test]
    fn cancels_exact_factor() {
        let r = RatFunc::new(
            p(&[(1, [0, 0, 2]), (2, [0, 0, 1]), (1, [0, 0, 0])]),
            p(&[(1, [0, 0, 1]), (1, [0, 0, 0])]),
        )
        .unwrap();
        assert_eq!(r, RatFunc::z() + RatFunc::one());
        assert!(r.denom().is_one());
    }

    #[test]
    fn zero_numerator() {
        let r = RatFunc::new(MultiPoly::zero(), p(&[(1, [0, 0, 1]), (1, [0, 0, 0])])).unwrap();
        assert!(r.is_zero());
        assert!(r.denom().is_one());
    }

    #[test]
    fn common_factor_leaves_half() {
        let hg = p(&[(1, [1, 0, 0]), (-1, [0, 1, 0])]);
        let z1 = p(&[(1, [0, 0, 1]), (1, [0, 0, 0])]);
        let r = RatFunc::new(&hg * &z1, z1.scale(&BigRat::from_integer(2.into()))).unwrap();
        assert_eq!(r.numer(), &hg);
        assert_eq!(r.denom(), &MultiPoly::from_int(2));
        assert_eq!(alloc::format!("{r}"), "(h-g)/2");
    }

    #[test]
    fn zero_denominator_is_error() {
        let e = RatFunc::new(MultiPoly::one(), MultiPoly::zero()).unwrap_err();
        assert_eq!(alloc::format!("{e}"), "division by zero polynomial");
    }

    #[test]
    fn negative_denominator_flips() {
        let r = RatFunc::new(MultiPoly::one(), MultiPoly::from_int(-3)).unwrap();
        assert_eq!(r, RatFunc::ratio(-1, 3));
        let s = RatFunc::one().checked_div(&(RatFunc::from_int(0) - RatFunc::z())).unwrap();
        assert_eq!(s.denom(), &MultiPoly::var(Var::Z));
    }

    #[test]
    fn substitution_of_zero_pole_fails() {
        let r = RatFunc::one().checked_div(&(RatFunc::z() + RatFunc::one())).unwrap();
        assert!(r.substitute(Var::Z, &RatFunc::from_int(-1)).is_err());
        assert_eq!(
            r.substitute(Var::Z, &RatFunc::from_int(1)).unwrap(),
            RatFunc::ratio(1, 2)
        );
    }
}
