use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::JrepError;
use crate::exactalg::{BigRat, Matrix, RadElem, RadPoly};
use crate::hopf::Check;
use crate::uhsl2::Gen;

/// A spin `j`, stored as `2j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Spin(u8);

impl Spin {
    pub const fn from_twice(twice: u8) -> Self {
        Spin(twice)
    }

    pub fn twice(self) -> u8 {
        self.0
    }

    pub fn dim(self) -> usize {
        self.0 as usize + 1
    }

    /// `2m` for the basis vector at position `i` of `e_j, e_{j−1}, …, e_{−j}`.
    pub fn twice_weight(self, i: usize) -> i64 {
        self.0 as i64 - 2 * i as i64
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for Spin {
    type Err = JrepError;
    fn from_str(s: &str) -> Result<Self, JrepError> {
        let bad = || JrepError::Parse(s.into());
        let twice = match s.trim().split_once('/') {
            Some((n, "2")) => n.trim().parse::<u8>().map_err(|_| bad())?,
            Some(_) => return Err(bad()),
            None => s.trim().parse::<u8>().map_err(|_| bad())?.checked_mul(2).ok_or_else(bad)?,
        };
        Ok(Spin(twice))
    }
}

pub type RadMatrix = Matrix<RadPoly>;

/// Images of `X`, `H`, `Y` in a representation; `x ⊳ v` is the matrix times the column of
/// coordinates of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrices {
    pub x: RadMatrix,
    pub h: RadMatrix,
    pub y: RadMatrix,
}

fn factorial(n: usize) -> BigRat {
    (1..=n).fold(BigRat::from_integer(1.into()), |acc, k| acc * BigRat::from_integer((k as i64).into()))
}

/// `Σₖ cₖ hᵏ Aᵏ` for nilpotent `A`, stopping once the power vanishes.
fn nilpotent_series(a: &RadMatrix, coeff: impl Fn(usize) -> BigRat) -> RadMatrix {
    let n = a.rows();
    let mut out = RadMatrix::zeros(n, n);
    let mut pow = RadMatrix::identity(n);
    let mut k = 0;
    while !pow.is_zero() {
        let c = coeff(k);
        if !num_traits::Zero::is_zero(&c) {
            out = out.add(&pow.scale(&RadPoly::term(RadElem::rational(c), k)));
        }
        pow = pow.mul(a);
        k += 1;
        assert!(k <= n + 1, "matrix is not nilpotent");
    }
    out
}

/// `e^{t h A}` for nilpotent `A`.
pub fn exp_nilpotent(a: &RadMatrix, t: i64) -> RadMatrix {
    nilpotent_series(a, |k| BigRat::from_integer(t.into()).pow(k as i32) / factorial(k))
}

/// `sinh(hA)/h`, a polynomial in `h`.
pub fn sinh_over_h(a: &RadMatrix) -> RadMatrix {
    let s = nilpotent_series(a, |k| if k % 2 == 1 { factorial(k).recip() } else { BigRat::from_integer(0.into()) });
    // every term carries hᵏ with k odd; divide by h
    s.map(|p| RadPoly::from_coeffs(p.coeffs().iter().skip(1).cloned().collect()))
}

pub fn cosh_nilpotent(a: &RadMatrix) -> RadMatrix {
    nilpotent_series(a, |k| if k % 2 == 0 { factorial(k).recip() } else { BigRat::from_integer(0.into()) })
}

impl RepMatrices {
    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    pub fn get(&self, g: Gen) -> &RadMatrix {
        match g {
            Gen::X => &self.x,
            Gen::H => &self.h,
            Gen::Y => &self.y,
        }
    }

    /// The defining relations of `U_h(sl2)`, exactly.
    pub fn relation_checks(&self, label: &str) -> Vec<Check> {
        let comm = |a: &RadMatrix, b: &RadMatrix| a.mul(b).sub(&b.mul(a));
        let two = RadPoly::int(2);
        let cosh = cosh_nilpotent(&self.x);
        let hx = comm(&self.h, &self.x).sub(&sinh_over_h(&self.x).scale(&two));
        let hy = comm(&self.h, &self.y).add(&self.y.mul(&cosh)).add(&cosh.mul(&self.y));
        let xy = comm(&self.x, &self.y).sub(&self.h);
        alloc::vec![
            Check::new(format!("{label}: [H,X] = 2 sinh(hX)/h"), hx.is_zero()),
            Check::new(format!("{label}: [H,Y] = −Y cosh hX − cosh hX Y"), hy.is_zero()),
            Check::new(format!("{label}: [X,Y] = H"), xy.is_zero()),
        ]
    }

    /// Matrices at `h = 0`.
    pub fn classical(&self) -> RepMatrices {
        let at0 = |m: &RadMatrix| m.map(|p| RadPoly::constant(p.at_zero()));
        RepMatrices { x: at0(&self.x), h: at0(&self.h), y: at0(&self.y) }
    }

    /// `P⁻¹ Γ P` for each generator, where the columns of `P` are the new basis vectors.
    pub fn conjugate(&self, p: &RadMatrix) -> Result<RepMatrices, JrepError> {
        let inv = p.inverse().ok_or(JrepError::Singular)?;
        let f = |m: &RadMatrix| inv.mul(m).mul(p);
        Ok(RepMatrices { x: f(&self.x), h: f(&self.h), y: f(&self.y) })
    }
}

/// `α_{j,m'}/α_{j,m}` with `α_{j,m} = √((j+m)!/(j−m)!)`, indexed by basis position.
fn alpha_ratio(spin: Spin, to: usize, from: usize) -> Result<RadElem, JrepError> {
    let tj = spin.twice() as usize;
    let alpha_sq = |i: usize| factorial(tj - i) / factorial(i);
    RadElem::sqrt_rational(&(alpha_sq(to) / alpha_sq(from))).map_err(|_| JrepError::RadicalField(spin))
}

/// The representation `V^j_h` from the closed-form action, `j ≤ 2`.
pub fn rep(spin: Spin) -> Result<RepMatrices, JrepError> {
    if spin.twice() > 4 {
        return Err(JrepError::RadicalField(spin));
    }
    let n = spin.dim();
    let tj = spin.twice() as usize;
    let mut x = RadMatrix::zeros(n, n);
    let mut y = RadMatrix::zeros(n, n);
    let h = RadMatrix::from_fn(n, n, |r, c| if r == c { RadPoly::int(spin.twice_weight(r)) } else { RadPoly::zero() });
    let quarter = BigRat::new(1.into(), 4.into());
    // (h/2)^{2k}
    let half_h = |k: usize| RadPoly::term(RadElem::rational(quarter.pow(k as i32)), 2 * k);
    for i in 0..n {
        // X e_m = Σₖ (h/2)^{2k}/(2k+1) · α_{m+1+2k}/α_m e_{m+1+2k}
        let mut k = 0;
        while i > 2 * k {
            let to = i - 1 - 2 * k;
            let c = alpha_ratio(spin, to, i)?.scale(&BigRat::new(1.into(), ((2 * k + 1) as i64).into()));
            x[(to, i)] = &x[(to, i)] + &half_h(k).scale(&c);
            k += 1;
        }
        // (j+m)(j−m+1) α_{m−1}/α_m e_{m−1}
        if i + 1 < n {
            let c = alpha_ratio(spin, i + 1, i)?.scale(&BigRat::from_integer((((tj - i) * (i + 1)) as i64).into()));
            y[(i + 1, i)] = &y[(i + 1, i)] + &RadPoly::constant(c);
        }
        // −(j−m)(j+m+1)(h/2)² α_{m+1}/α_m e_{m+1}
        if i >= 1 {
            let c = alpha_ratio(spin, i - 1, i)?.scale(&BigRat::from_integer((-((i * (tj - i + 1)) as i64)).into()));
            y[(i - 1, i)] = &y[(i - 1, i)] + &half_h(1).scale(&c);
        }
        // Σₛ (h/2)^{2s} α_{m−1+2s}/α_m e_{m−1+2s}
        for s in 1..=i.div_ceil(2) {
            let to = i + 1 - 2 * s;
            let c = alpha_ratio(spin, to, i)?;
            y[(to, i)] = &y[(to, i)] + &half_h(s).scale(&c);
        }
    }
    Ok(RepMatrices { x, h, y })
}

/// `Γ⊗(x) = Σ Γ(x₍₁₎) ⊗ Γ(x₍₂₎)`.
pub fn tensor_rep(a: &RepMatrices, b: &RepMatrices) -> RepMatrices {
    let (ia, ib) = (RadMatrix::identity(a.dim()), RadMatrix::identity(b.dim()));
    let (left, right) = (exp_nilpotent(&a.x, -1), exp_nilpotent(&b.x, 1));
    let x = a.x.kron(&ib).add(&ia.kron(&b.x));
    let h = a.h.kron(&right).add(&left.kron(&b.h));
    let y = a.y.kron(&right).add(&left.kron(&b.y));
    RepMatrices { x, h, y }
}

/// Block-diagonal sum in the given order.
pub fn direct_sum(blocks: &[RepMatrices]) -> RepMatrices {
    let n: usize = blocks.iter().map(RepMatrices::dim).sum();
    let build = |g: Gen| {
        let mut m = RadMatrix::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            let src = b.get(g);
            for (r, c, v) in src.entries() {
                m[(off + r, off + c)] = v.clone();
            }
            off += b.dim();
        }
        m
    };
    RepMatrices { x: build(Gen::X), h: build(Gen::H), y: build(Gen::Y) }
}

/// Trivial one-dimensional representation.
pub fn trivial() -> RepMatrices {
    let z = RadMatrix::zeros(1, 1);
    RepMatrices { x: z.clone(), h: z.clone(), y: z }
}

/// `Γ(X)` strictly upper triangular, `Γ(H)` diagonal with entries `2m`, `Γ(X)^{2j+1} = 0`.
pub fn shape_checks(spin: Spin, r: &RepMatrices) -> Vec<Check> {
    let n = spin.dim();
    let upper = r.x.entries().all(|(i, j, v)| v.is_zero() || i < j);
    let diag = r.h.entries().all(|(i, j, v)| {
        if i == j {
            *v == RadPoly::int(spin.twice_weight(i))
        } else {
            v.is_zero()
        }
    });
    let nilpotent = (0..n).fold(RadMatrix::identity(n), |acc, _| acc.mul(&r.x)).is_zero();
    alloc::vec![
        Check::new(format!("j={spin}: Γ(X) strictly upper triangular"), upper),
        Check::new(format!("j={spin}: Γ(H) = diag(2m)"), diag),
        Check::new(format!("j={spin}: Γ(X)^{n} = 0"), nilpotent),
    ]
}
