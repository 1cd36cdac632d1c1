use alloc::vec::Vec;

use super::ExteriorError;
use crate::exactalg::{rat, BigRat, Field, Fp, Matrix, RatFunc};
use crate::focalc::FirstOrderCalculus;

/// Woronowicz braiding `Λ(θᵢ ⊗ θₖ) = Σ Λ_{ik,st} θₛ ⊗ θₜ`, stored as the operator on
/// coefficient vectors: `op[(s,t),(i,k)] = Λ_{ik,st}` with pair index `d·i + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidMatrix {
    dim: usize,
    op: Matrix<RatFunc>,
}

impl BraidMatrix {
    pub fn from_operator(dim: usize, op: Matrix<RatFunc>) -> Self {
        assert_eq!(op.rows(), dim * dim);
        BraidMatrix { dim, op }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `Λ_{ik,st}`.
    pub fn component(&self, i: usize, k: usize, s: usize, t: usize) -> &RatFunc {
        &self.op[(self.dim * s + t, self.dim * i + k)]
    }

    pub fn operator(&self) -> &Matrix<RatFunc> {
        &self.op
    }

    /// `Λ₁₂Λ₂₃Λ₁₂ = Λ₂₃Λ₁₂Λ₂₃` on three tensor factors.
    pub fn satisfies_braid_equation(&self) -> bool {
        let id = Matrix::identity(self.dim);
        let l12 = self.op.kron(&id);
        let l23 = id.kron(&self.op);
        l12.mul(&l23).mul(&l12) == l23.mul(&l12).mul(&l23)
    }

    /// Whether this is the plain flip `θᵢ ⊗ θₖ ↦ θₖ ⊗ θᵢ`.
    pub fn is_flip(&self) -> bool {
        let d = self.dim;
        (0..d * d).all(|r| {
            (0..d * d).all(|c| {
                let flip = r == d * (c % d) + c / d;
                self.op[(r, c)] == if flip { RatFunc::one() } else { RatFunc::zero() }
            })
        })
    }

    /// Entries evaluated at a point `(h, g, z)` modulo the working prime.
    pub fn at_point(&self, point: &[BigRat; 3]) -> Result<Matrix<Fp>, ExteriorError> {
        self.op.try_map(|e| {
            e.eval(point)
                .ok()
                .and_then(|v| Fp::from_rat(&v))
                .ok_or(ExteriorError::SingularSample)
        })
    }

    /// Entries with parameters substituted by rationals, exactly.
    pub fn specialised(&self, point: &[BigRat; 3]) -> Result<Matrix<BigRat>, ExteriorError> {
        self.op.try_map(|e| e.eval(point).map_err(|_| ExteriorError::SingularSample))
    }
}

/// `Λ_{ik,st} = f_it(v_sk)`, with `f` evaluated through the ABCD representation.
pub fn lambda(calc: &FirstOrderCalculus) -> BraidMatrix {
    let d = calc.dim();
    let reps: Vec<Vec<Matrix<RatFunc>>> =
        (0..d).map(|s| (0..d).map(|k| calc.rep(calc.v().get(s, k))).collect()).collect();
    let op = Matrix::from_fn(d * d, d * d, |r, c| {
        let (s, t) = (r / d, r % d);
        let (i, k) = (c / d, c % d);
        reps[s][k][(i, t)].clone()
    });
    BraidMatrix { dim: d, op }
}

/// `Λ` acting on factors `slot, slot+1` (zero-based) of an `n`-fold tensor power.
fn on_slot<F: Field>(op: &Matrix<F>, d: usize, n: usize, slot: usize) -> Matrix<F> {
    let left = Matrix::identity(d.pow(slot as u32));
    let right = Matrix::identity(d.pow((n - slot - 2) as u32));
    left.kron(op).kron(&right)
}

/// Braided antisymmetrizer on the `n`-fold tensor power, normalised so that `W₂ = id − Λ`:
/// `Wₙ = (Wₙ₋₁ ⊗ id)(id − Λₙ₋₁ + Λₙ₋₁Λₙ₋₂ − … ± Λₙ₋₁⋯Λ₁)`.
pub fn antisymmetrizer<F: Field>(op: &Matrix<F>, d: usize, n: usize) -> Matrix<F> {
    let mut w = Matrix::identity(d);
    for m in 2..=n {
        let size = d.pow(m as u32);
        let mut tail = Matrix::identity(size);
        let mut chain = Matrix::identity(size);
        for (sign, slot) in (0..m - 1).rev().enumerate() {
            chain = chain.mul(&on_slot(op, d, m, slot));
            tail = if sign % 2 == 0 { tail.sub(&chain) } else { tail.add(&chain) };
        }
        w = w.kron(&Matrix::identity(d)).mul(&tail);
    }
    w
}

/// Sample point used for rank lower bounds.
pub fn sample_point() -> [BigRat; 3] {
    [rat(3), rat(5), rat(7)]
}
