use alloc::vec::Vec;

use crate::exactalg::{Matrix, RatFunc, Var};
use crate::ncpoly::{Alphabet, NCPoly, Word};

/// A 4×4 matrix acting on C²⊗C², rows and columns indexed by `2i + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix(pub Matrix<RatFunc>);

/// Outcome of the structural identities checked on an R-matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrixReport {
    pub triangular: bool,
    pub hecke: bool,
    pub plus_rank: usize,
    pub minus_rank: usize,
    pub plus_idempotent: bool,
}

impl RMatrixReport {
    /// Triangular and Hecke, with projectors of rank 3 and 1.
    pub fn all_pass(&self) -> bool {
        self.triangular && self.hecke && self.plus_rank == 3 && self.minus_rank == 1 && self.plus_idempotent
    }
}

impl RMatrix {
    /// The two-parameter Jordanian solution of the Yang–Baxter equation.
    pub fn jordanian() -> Self {
        let h = RatFunc::h();
        let g = RatFunc::g();
        let z = RatFunc::zero;
        let one = RatFunc::one;
        RMatrix(Matrix::from_rows(alloc::vec![
            alloc::vec![one(), -&h, h.clone(), &g * &h],
            alloc::vec![z(), one(), z(), -&g],
            alloc::vec![z(), z(), one(), g.clone()],
            alloc::vec![z(), z(), z(), one()],
        ]))
    }

    /// Substitute a value for one parameter in every entry.
    pub fn specialize(&self, v: Var, value: &RatFunc) -> Self {
        RMatrix(self.0.map(|e| e.substitute(v, value).expect("polynomial entries")))
    }

    /// Flip of the tensor factors.
    pub fn flip() -> Matrix<RatFunc> {
        Matrix::from_fn(4, 4, |r, c| {
            let (i, j) = (r / 2, r % 2);
            let (k, l) = (c / 2, c % 2);
            if i == l && j == k {
                RatFunc::one()
            } else {
                RatFunc::zero()
            }
        })
    }

    pub fn flipped(&self) -> Self {
        let p = Self::flip();
        RMatrix(p.mul(&self.0).mul(&p))
    }

    /// `P·R`.
    pub fn braid(&self) -> Matrix<RatFunc> {
        Self::flip().mul(&self.0)
    }

    pub fn entry(&self, i: usize, j: usize, k: usize, l: usize) -> &RatFunc {
        &self.0[(2 * i + j, 2 * k + l)]
    }
}

pub fn r_matrix_checks(r: &RMatrix) -> RMatrixReport {
    let id = Matrix::<RatFunc>::identity(4);
    let rhat = r.braid();
    let half = RatFunc::ratio(1, 2);
    let plus = rhat.add(&id).scale(&half);
    let minus = rhat.sub(&id).scale(&half);
    RMatrixReport {
        triangular: r.flipped().0.mul(&r.0).is_identity(),
        hecke: rhat.sub(&id).mul(&rhat.add(&id)).is_zero(),
        plus_rank: plus.rank(),
        minus_rank: minus.rank(),
        plus_idempotent: plus.mul(&plus) == plus,
    }
}

/// Entries of `R T₁ T₂ − T₂ T₁ R` in the free algebra on `a, b, c, d`.
///
/// The alphabet must contain the four matrix generators; `t` names them row by row.
pub fn frt_relations(r: &RMatrix, alpha: &Alphabet, t: [&str; 4]) -> Vec<NCPoly> {
    let sym = |i: usize, j: usize| alpha.sym(t[2 * i + j]).expect("matrix generator");
    let tt = |i: usize, j: usize, k: usize, l: usize| {
        NCPoly::word(Word(alloc::vec![sym(i, j), sym(k, l)]))
    };
    let mut out = Vec::with_capacity(16);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let mut e = NCPoly::zero();
                    for m in 0..2 {
                        for n in 0..2 {
                            // (R T₁T₂)_{ij,kl} = R_{ij,mn} T_mk T_nl
                            e += &tt(m, k, n, l).scale(r.entry(i, j, m, n));
                            // (T₂T₁R)_{ij,kl} = T_jn T_im R_{mn,kl}
                            e -= &tt(j, n, i, m).scale(r.entry(m, n, k, l));
                        }
                    }
                    out.push(e);
                }
            }
        }
    }
    out
}
