//! Exterior algebras of the bicovariant calculi: the braiding Λ, antisymmetrizers and
//! their ranks, commutation relations of left-invariant 2-forms, and the R-matrix form of
//! the z = 0 calculus.

mod braid;
mod checks;
mod printed;
mod rforms;
mod wedge;

pub use braid::{antisymmetrizer, lambda, sample_point, BraidMatrix};
pub use checks::{
    bimodule_checks, d_squared_checks, invariant_flip_checks, inner_form_constant, push_through_checks, reduce_pairs,
    three_dim_relation_checks, trace_square,
};
pub use printed::{
    compare_cartan_maurer, printed_cartan_maurer, printed_relation_checks, printed_relations, CartanMaurerComparison,
};
pub use rforms::{da_a_difference, differential_r_form, theta_r_form, DA_A_EXPANSION};
pub use wedge::{
    basis_order, braid_kernel_relations, cartan_maurer, differentiated_relations, exterior_ranks, pair_poly,
    pair_times, solve_relations, symbolic_rank_two, two_form_times, wedge_relations, CartanMaurer,
    RankCertificate, TwoForm, WedgeRelations,
};

use crate::focalc::CalcError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExteriorError {
    #[error(transparent)]
    Calc(#[from] CalcError),
    #[error("relation system has rank {rank}, expected {expected} solvable mis-ordered products")]
    Underdetermined { rank: usize, expected: usize },
    #[error("inconsistent relations: {0}")]
    Inconsistent(alloc::string::String),
    #[error("a denominator vanishes at the sample point")]
    SingularSample,
}

impl From<crate::hopf::HopfError> for ExteriorError {
    fn from(e: crate::hopf::HopfError) -> Self {
        ExteriorError::Calc(e.into())
    }
}

#[cfg(test)]
mod tests;
