use alloc::string::String;
use alloc::vec::Vec;

use super::algebra::QuantumLieAlgebra;
use super::QlieError;
use crate::exactalg::{Matrix, RatFunc};
use crate::exterior::basis_order;
use crate::ncpoly::{Ambiguity, MonomialOrder, NCPoly, RewriteSystem, Rule, Word};

/// Defining elements `χᵢχₖ − Σ Λ_{st,ik} χₛχₜ − Σ 𝓒_{ik,j} χⱼ` as coefficient rows over
/// the `d²` quadratic words followed by the `d` letters.
fn defining_rows(qla: &QuantumLieAlgebra) -> Vec<Vec<RatFunc>> {
    let d = qla.dim();
    let mut rows = Vec::with_capacity(d * d);
    for i in 0..d {
        for k in 0..d {
            let mut row = alloc::vec![RatFunc::zero(); d * d + d];
            row[d * i + k] = RatFunc::one();
            for s in 0..d {
                for t in 0..d {
                    let l = qla.lambda().component(s, t, i, k);
                    if !l.is_zero() {
                        row[d * s + t] = &row[d * s + t] - l;
                    }
                }
            }
            for (j, c) in qla.table().bracket(i, k).iter().enumerate() {
                row[d * d + j] = -c;
            }
            rows.push(row);
        }
    }
    rows
}

/// Enveloping algebra presented by rewrite rules for the mis-ordered quadratic words.
#[derive(Clone, Debug)]
pub struct Enveloping {
    dim: usize,
    rules: Vec<(usize, usize, NCPoly)>,
    rs: RewriteSystem,
}

impl Enveloping {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `(i, k, rhs)` for `χᵢχₖ = rhs`.
    pub fn rules(&self) -> &[(usize, usize, NCPoly)] {
        &self.rules
    }

    pub fn rewrite_system(&self) -> &RewriteSystem {
        &self.rs
    }

    /// Overlap check and normal-word counts up to `max_degree`.
    pub fn pbw_report(&self, max_degree: usize) -> Result<PbwReport, QlieError> {
        let ambiguities: Vec<Ambiguity> = self.rs.check_overlaps()?;
        let unresolved = ambiguities.iter().filter(|a| !a.resolvable()).count();
        let names = self.rs.alphabet().names();
        let basis = basis_order(self.dim)
            .iter()
            .zip(["α", "β", "γ", "δ"])
            .map(|(&i, e)| alloc::format!("{}^{e}", names[i]))
            .collect::<Vec<_>>()
            .join(" ");
        let counts = (0..=max_degree)
            .map(|n| (n, self.rs.normal_words(n).len(), binomial(n + self.dim - 1, self.dim - 1)))
            .collect();
        Ok(PbwReport { basis, ambiguities: ambiguities.len(), unresolved, counts })
    }
}

/// Diamond-lemma evidence for an ordered monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwReport {
    /// The ordered monomials certified as a basis.
    pub basis: String,
    pub ambiguities: usize,
    pub unresolved: usize,
    /// `(degree, normal words, ordered monomials)`.
    pub counts: Vec<(usize, usize, usize)>,
}

impl PbwReport {
    pub fn holds(&self) -> bool {
        self.unresolved == 0 && self.counts.iter().all(|(_, a, b)| a == b)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn is_ordered(dim: usize, i: usize, k: usize) -> bool {
    let pos = |x| basis_order(dim).iter().position(|&y| y == x).expect("index in range");
    pos(i) <= pos(k)
}

/// Solve the defining relations for the mis-ordered products, ordering the χ's like the θ's.
pub fn enveloping_relations(qla: &QuantumLieAlgebra) -> Result<Enveloping, QlieError> {
    let d = qla.dim();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (0..d).map(move |k| (i, k))).collect();
    let (mis, ord): (Vec<_>, Vec<_>) = pairs.iter().copied().partition(|&(i, k)| !is_ordered(d, i, k));
    // column order: mis-ordered words, ordered words, letters
    let columns: Vec<usize> =
        mis.iter().chain(&ord).map(|&(i, k)| d * i + k).chain((0..d).map(|j| d * d + j)).collect();
    let rows: Vec<Vec<RatFunc>> =
        defining_rows(qla).into_iter().map(|r| columns.iter().map(|&c| r[c].clone()).collect()).collect();
    let (reduced, pivots) = Matrix::from_rows(rows).rref();
    if pivots.len() != mis.len() || pivots.iter().enumerate().any(|(k, &p)| k != p) {
        if pivots.len() > mis.len() && pivots[mis.len()] >= mis.len() + ord.len() {
            return Err(QlieError::Inconsistent("defining relations force a linear relation".into()));
        }
        return Err(QlieError::Underdetermined { rank: pivots.len(), expected: mis.len() });
    }
    let word = |i: usize, k: usize| Word(alloc::vec![i as u8, k as u8]);
    let rules: Vec<(usize, usize, NCPoly)> = mis
        .iter()
        .enumerate()
        .map(|(r, &(i, k))| {
            let quad = ord.iter().enumerate().map(|(c, &(s, t))| (word(s, t), -&reduced[(r, mis.len() + c)]));
            let lin = (0..d).map(|j| (Word(alloc::vec![j as u8]), -&reduced[(r, mis.len() + ord.len() + j)]));
            (i, k, NCPoly::from_terms(quad.chain(lin).filter(|(_, c)| !c.is_zero())))
        })
        .collect();
    let alpha = qla.alphabet();
    let names = alpha.names().to_vec();
    let ranked: Vec<&str> = basis_order(d).iter().map(|&i| names[i].as_str()).collect();
    let order = MonomialOrder::new(&alpha, &ranked, &[])?;
    let rs = RewriteSystem::new(
        alpha,
        order,
        rules.iter().map(|(i, k, rhs)| Rule { lhs: word(*i, *k), rhs: rhs.clone() }).collect(),
    )?;
    Ok(Enveloping { dim: d, rules, rs })
}

/// Dimension of the span of words of length ≤ 2 modulo the defining relations, by direct
/// row reduction in the free algebra.
pub fn degree_two_quotient_dimension(qla: &QuantumLieAlgebra) -> usize {
    let d = qla.dim();
    let rank = Matrix::from_rows(defining_rows(qla)).rank();
    1 + d + d * d - rank
}
