use alloc::string::String;
use alloc::vec::Vec;

use super::table::BracketTable;
use crate::exactalg::{Matrix, RatFunc};
use crate::exterior::{cartan_maurer, lambda, BraidMatrix, CartanMaurer};
use crate::focalc::FirstOrderCalculus;
use crate::hopf::Check;
use crate::ncpoly::{Alphabet, NCPoly, Word};

/// `χ1 … χd`.
pub fn chi_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| alloc::format!("χ{i}")).collect()
}

/// Quantum Lie algebra dual to a calculus: its bracket table and the braiding Λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumLieAlgebra {
    table: BracketTable,
    lambda: BraidMatrix,
}

impl QuantumLieAlgebra {
    pub fn from_parts(table: BracketTable, lambda: BraidMatrix) -> Self {
        assert_eq!(table.dim(), lambda.dim());
        QuantumLieAlgebra { table, lambda }
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn table(&self) -> &BracketTable {
        &self.table
    }

    pub fn lambda(&self) -> &BraidMatrix {
        &self.lambda
    }

    pub fn alphabet(&self) -> Alphabet {
        self.table.alphabet()
    }

    /// `χᵢχₖ − Σ Λ_{st,ik} χₛχₜ` in the free algebra on the χ's.
    pub fn commutator(&self, i: usize, k: usize) -> NCPoly {
        let d = self.dim();
        let mut p = NCPoly::word(Word(alloc::vec![i as u8, k as u8]));
        for s in 0..d {
            for t in 0..d {
                let l = self.lambda.component(s, t, i, k);
                if !l.is_zero() {
                    p -= &NCPoly::term(l.clone(), Word(alloc::vec![s as u8, t as u8]));
                }
            }
        }
        p
    }
}

/// `𝓒_{ik,j} = 𝒞_{ik,j} − Σ Λ_{st,ik} 𝒞_{st,j}`.
pub fn structure_constants(cm: &CartanMaurer, lambda: &BraidMatrix) -> QuantumLieAlgebra {
    let d = cm.dim();
    let mut c = Vec::with_capacity(d * d);
    for i in 0..d {
        for k in 0..d {
            let row: Vec<RatFunc> = (0..d)
                .map(|j| {
                    let mut v = cm.get(i, k, j).clone();
                    for s in 0..d {
                        for t in 0..d {
                            let l = lambda.component(s, t, i, k);
                            let cst = cm.get(s, t, j);
                            if !l.is_zero() && !cst.is_zero() {
                                v = &v - &(l * cst);
                            }
                        }
                    }
                    v
                })
                .collect();
            c.push(row);
        }
    }
    QuantumLieAlgebra { table: BracketTable::new(chi_names(d), c), lambda: lambda.clone() }
}

/// The quantum Lie algebra of a calculus.
pub fn quantum_lie_algebra(calc: &FirstOrderCalculus) -> QuantumLieAlgebra {
    structure_constants(&cartan_maurer(calc), &lambda(calc))
}

/// Evaluate an element of the tensor algebra on the coordinate functions `aₗ`, using
/// `χⱼ(aₗ) = δⱼₗ`, `(χⱼχₖ)(aₗ) = 𝒞_{jk,l}` and `ε(aₗ) = 0`.
pub fn pairing(cm: &CartanMaurer, p: &NCPoly) -> Option<Vec<RatFunc>> {
    let d = cm.dim();
    let mut out = alloc::vec![RatFunc::zero(); d];
    for (w, c) in p.terms() {
        match *w.letters() {
            [] => {}
            [j] => out[usize::from(j)] = &out[usize::from(j)] + c,
            [j, k] => {
                for (l, o) in out.iter_mut().enumerate() {
                    *o = &*o + &(c * cm.get(usize::from(j), usize::from(k), l));
                }
            }
            _ => return None,
        }
    }
    Some(out)
}

/// Outcome of the quantum Jacobi identity over all index triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    pub triples: usize,
    pub failures: Vec<[usize; 3]>,
}

impl JacobiReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `[χᵢ,[χⱼ,χₖ]] = [[χᵢ,χⱼ],χₖ] − Σ Λ_{st,jk} [[χᵢ,χₛ],χₜ]`.
pub fn jacobi_check(qla: &QuantumLieAlgebra) -> JacobiReport {
    let d = qla.dim();
    let table = qla.table();
    let unit = |i: usize| {
        let mut v = alloc::vec![RatFunc::zero(); d];
        v[i] = RatFunc::one();
        v
    };
    let mut failures = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let lhs = table.bracket_of(&unit(i), table.bracket(j, k));
                let mut rhs = table.bracket_of(table.bracket(i, j), &unit(k));
                for s in 0..d {
                    for t in 0..d {
                        let l = qla.lambda().component(s, t, j, k);
                        if l.is_zero() {
                            continue;
                        }
                        let inner = table.bracket_of(table.bracket(i, s), &unit(t));
                        for (r, x) in rhs.iter_mut().zip(&inner) {
                            *r = &*r - &(l * x);
                        }
                    }
                }
                if lhs != rhs {
                    failures.push([i, j, k]);
                }
            }
        }
    }
    JacobiReport { triples: d * d * d, failures }
}

/// Basis change from `χ1, χ2, χ3` to `X_h = χ2`, `H_h = χ1`, `Y_h = −hχ1 + (h²/4)χ2 + χ3`.
pub fn jordanian_basis() -> Matrix<RatFunc> {
    let h = RatFunc::h();
    let z = RatFunc::zero;
    let o = RatFunc::one;
    Matrix::from_rows(alloc::vec![
        alloc::vec![z(), o(), z()],
        alloc::vec![o(), z(), z()],
        alloc::vec![-&h, &(&h * &h) * &RatFunc::ratio(1, 4), o()],
    ])
}

/// The three-dimensional algebra rewritten in the `X_h, H_h, Y_h` basis, compared entrywise
/// with a reference table on the same basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoReport {
    pub transformed: BracketTable,
    pub checks: Vec<Check>,
}

impl IsoReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

pub fn woronowicz_iso(qla: &QuantumLieAlgebra, reference: &BracketTable) -> Result<IsoReport, super::QlieError> {
    let names: Vec<&str> = reference.names().iter().map(String::as_str).collect();
    let transformed = qla.table().change_basis(&jordanian_basis(), &names)?;
    let d = reference.dim();
    let checks = (0..d)
        .flat_map(|i| (0..d).map(move |k| (i, k)))
        .map(|(i, k)| Check::new(reference.entry_display(i, k), transformed.bracket(i, k) == reference.bracket(i, k)))
        .collect();
    Ok(IsoReport { transformed, checks })
}
