//! Quantum Lie algebras dual to the calculi: structure constants, brackets and quantum
//! commutators, the quantum Jacobi identity, enveloping algebras with a PBW check, and the
//! basis change onto the `X_h, H_h, Y_h` brackets.

mod algebra;
mod enveloping;
mod printed;
mod table;

pub use crate::exterior::{cartan_maurer, CartanMaurer};
pub use algebra::{
    chi_names, jacobi_check, jordanian_basis, pairing, quantum_lie_algebra, structure_constants, woronowicz_iso,
    IsoReport, JacobiReport, QuantumLieAlgebra,
};
pub use enveloping::{degree_two_quotient_dimension, enveloping_relations, Enveloping, PbwReport};
pub use printed::{
    compare_brackets, compare_commutators, compare_enveloping, jordanian_table, printed_brackets,
    printed_commutators, printed_enveloping, TableEntry, JORDANIAN_BRACKETS,
};
pub use table::BracketTable;

use crate::exterior::ExteriorError;
use crate::focalc::CalcError;
use crate::ncpoly::RewriteError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QlieError {
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Calc(#[from] CalcError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("cannot read table line {0}")]
    Parse(alloc::string::String),
    #[error("bracket is not linear: {0}")]
    NotLinear(alloc::string::String),
    #[error("basis change is singular")]
    SingularBasisChange,
    #[error("enveloping relations have rank {rank}, expected {expected}")]
    Underdetermined { rank: usize, expected: usize },
    #[error("inconsistent enveloping relations: {0}")]
    Inconsistent(alloc::string::String),
}

#[cfg(test)]
mod tests;
