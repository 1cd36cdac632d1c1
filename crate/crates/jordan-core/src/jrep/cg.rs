use alloc::format;
use alloc::vec::Vec;

use super::literal::parse_matrix;
use super::rep::{direct_sum, rep, tensor_rep, trivial, RadMatrix, RepMatrices, Spin};
use super::JrepError;
use crate::exactalg::{BigRat, Matrix, RadElem};
use crate::hopf::Check;
use crate::uhsl2::Gen;

/// Published Clebsch–Gordan matrix for `V¹⊗V¹`: row `i` gives `vᵢ` over the product basis
/// `e₁⊗e₁, e₁⊗e₀, …, e₋₁⊗e₋₁`, with `v` ordered `e²₂, …, e²₋₂, e¹₁, e¹₀, e¹₋₁, e⁰₀`.
pub const CG_MATRIX: &str = "
    1, 0, 0, 0, 0, 0, 0, 0, 0;
    0, 1/√2, 0, 1/√2, 0, 0, 0, 0, 0;
    √2h^2/2/√3, -h/√3, 1/√6, h/√3, 2/√6, 0, 1/√6, 0, 0;
    0, √2h^2/2, -h, √2h^2/2, 0, 1/√2, h, 1/√2, 0;
    -h^4/4, -√2h^3/2, 3h^2/2, √2h^3/2, 0, -√2h, 3h^2/2, √2h, 1;
    -2h, 1/√2, 0, -1/√2, 0, 0, 0, 0, 0;
    0, -h, 1/√2, -h, 0, 0, -1/√2, 0, 0;
    0, √2h^2/2, -h, -√2h^2/2, 0, 1/√2, -h, -1/√2, 0;
    h^2/√3, -√2h/√3, 1/√3, √2h/√3, -1/√3, 0, 1/√3, 0, 0";

/// Published inverse: row `i` gives the product vector `wᵢ` over `v`.
pub const CG_INVERSE: &str = "
    1, 0, 0, 0, 0, 0, 0, 0, 0;
    √2h, √2/2, 0, 0, 0, √2/2, 0, 0, 0;
    3h^2/2, h, √6/6, 0, 0, h, √2/2, 0, √3/3;
    -√2h, √2/2, 0, 0, 0, -√2/2, 0, 0, 0;
    0, 0, √6/3, 0, 0, 0, 0, 0, -√3/3;
    √2h^3/2, √2h^2/2, √3h/3, √2/2, 0, √2h^2/2, h, √2/2, √6h/3;
    3h^2/2, -h, √6/6, 0, 0, h, -√2/2, 0, √3/3;
    -√2h^3/2, √2h^2/2, -√3h/3, √2/2, 0, -√2h^2/2, h, -√2/2, -√6h/3;
    -h^4/4, 0, √6h^2/6, 0, 1, 0, 0, 2h, √3h^2/3";

/// Spins of the blocks of `V¹⊗V¹`, in the order of `v`.
pub const BLOCKS: [Spin; 3] = [Spin::from_twice(4), Spin::from_twice(2), Spin::from_twice(0)];

/// How a Clebsch–Gordan matrix sits in the intertwiner identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Rows of `C` are the images of `vᵢ`: `Γ⊗ Cᵀ = Cᵀ Γ⊕`.
    Rows,
    /// `Γ⊕ C = C Γ⊗`.
    Columns,
}

/// The parsed matrices and the representations they relate.
#[derive(Clone, Debug)]
pub struct CgData {
    pub c: RadMatrix,
    pub c_inv: RadMatrix,
    pub tensor: RepMatrices,
    pub sum: RepMatrices,
}

impl CgData {
    pub fn load() -> Result<Self, JrepError> {
        let v1 = rep(Spin::from_twice(2))?;
        let blocks: Vec<RepMatrices> =
            BLOCKS.iter().map(|&s| if s.twice() == 0 { Ok(trivial()) } else { rep(s) }).collect::<Result<_, _>>()?;
        Ok(CgData {
            c: parse_matrix(CG_MATRIX)?,
            c_inv: parse_matrix(CG_INVERSE)?,
            tensor: tensor_rep(&v1, &v1),
            sum: direct_sum(&blocks),
        })
    }

    pub fn intertwines(&self, g: Gen, orientation: Orientation) -> bool {
        let (t, s) = (self.tensor.get(g), self.sum.get(g));
        match orientation {
            Orientation::Rows => {
                let ct = self.c.transpose();
                t.mul(&ct) == ct.mul(s)
            }
            Orientation::Columns => s.mul(&self.c) == self.c.mul(t),
        }
    }

    /// The orientation under which all three generators intertwine, if any.
    pub fn orientation(&self) -> Option<Orientation> {
        [Orientation::Rows, Orientation::Columns]
            .into_iter()
            .find(|&o| Gen::ALL.iter().all(|&g| self.intertwines(g, o)))
    }

    /// Map from product coordinates to coordinates over `v`.
    pub fn projection(&self, orientation: Orientation) -> RadMatrix {
        match orientation {
            Orientation::Rows => self.c_inv.transpose(),
            Orientation::Columns => self.c.clone(),
        }
    }
}

/// Inverse pair, block sizes, relations on the tensor product and the intertwiner identity
/// in the given orientation.
pub fn cg_checks(data: &CgData, orientation: Orientation) -> Vec<Check> {
    let n = data.c.rows();
    let mut out = alloc::vec![
        Check::new("C·C⁻¹ = I₉", data.c.mul(&data.c_inv).is_identity()),
        Check::new("C⁻¹·C = I₉", data.c_inv.mul(&data.c).is_identity()),
        Check::new(
            "block dimensions 5 + 3 + 1 = 9",
            BLOCKS.iter().map(|s| s.dim()).sum::<usize>() == n && data.tensor.dim() == n,
        ),
    ];
    out.extend(data.tensor.relation_checks("V¹⊗V¹"));
    for g in Gen::ALL {
        let name = match orientation {
            Orientation::Rows => format!("Γ⊗({0}) Cᵀ = Cᵀ Γ⊕({0})", g.name()),
            Orientation::Columns => format!("Γ⊕({0}) C = C Γ⊗({0})", g.name()),
        };
        out.push(Check::new(name, data.intertwines(g, orientation)));
    }
    out
}

/// The V⁰ component of the projection is killed by every generator.
pub fn killing_invariance_checks(data: &CgData, orientation: Orientation) -> Vec<Check> {
    let p = data.projection(orientation);
    let last = p.rows() - 1;
    let row = Matrix::from_rows(alloc::vec![p.row(last).to_vec()]);
    Gen::ALL
        .iter()
        .map(|&g| Check::new(format!("κ-row · Γ⊗({}) = 0", g.name()), row.mul(data.tensor.get(g)).is_zero()))
        .collect()
}

fn eval(m: &RadMatrix, h: &BigRat) -> Matrix<RadElem> {
    m.map(|p| p.eval(h))
}

/// Recompute the highest-weight vector of each block as the joint kernel of `Γ⊗(X)` and
/// `Γ⊗(H) − 2j` at rational values of `h`, and compare with the printed `C` up to a scalar.
pub fn highest_weight_checks(data: &CgData, samples: &[BigRat]) -> Vec<Check> {
    let mut out = Vec::new();
    let n = data.c.rows();
    let mut start = 0;
    for spin in BLOCKS {
        let mut holds = true;
        for h in samples {
            let x = eval(&data.tensor.x, h);
            let hh = eval(&data.tensor.h, h);
            let weight = RadElem::int(spin.twice() as i64);
            let shifted = Matrix::from_fn(n, n, |i, j| if i == j { &hh[(i, j)] - &weight } else { hh[(i, j)].clone() });
            let stacked = Matrix::from_rows((0..n).map(|i| x.row(i).to_vec()).chain((0..n).map(|i| shifted.row(i).to_vec())).collect());
            let kernel = stacked.nullspace();
            let printed: Vec<RadElem> = data.c.row(start).iter().map(|p| p.eval(h)).collect();
            holds &= kernel.len() == 1 && proportional(&kernel[0], &printed);
        }
        out.push(Check::new(format!("highest weight vector of V^{spin} matches C"), holds));
        start += spin.dim();
    }
    out
}

fn proportional(a: &[RadElem], b: &[RadElem]) -> bool {
    let Some(p) = b.iter().position(|x| !x.is_zero()) else {
        return a.iter().all(RadElem::is_zero);
    };
    if a[p].is_zero() {
        return false;
    }
    let ratio = &a[p] * &b[p].inv().expect("nonzero");
    a.iter().zip(b).all(|(x, y)| *x == y * &ratio)
}
