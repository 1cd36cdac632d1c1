//! Exact coefficient arithmetic.

mod linalg;
mod poly;
mod radical;
mod ratfunc;
mod series;

pub use linalg::{Field, Fp, Matrix, MODULUS};
pub use poly::{Monomial, MultiPoly, Var};
pub use radical::{RadElem, RadPoly};
pub use ratfunc::RatFunc;
pub use series::TruncSeries;

/// Arbitrary-precision rational.
pub type BigRat = num_rational::BigRational;

/// Rational constant from an integer.
pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

/// Rational constant `n/d`.
pub fn frac(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("radical field insufficient")]
    RadicalFieldInsufficient,
}
