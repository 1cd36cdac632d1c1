//! Small representations `V^j_h` of U_h(sl2) over Q(√2,√3)[h], the Clebsch–Gordan
//! decomposition of `V¹⊗V¹`, and the quantum Lie bracket and Killing form read off it.

mod bracket;
mod cg;
mod literal;
mod rep;
mod suite;

pub use bracket::{
    basis_change, basis_change_iso, bracket_killing_from_cg, classical_killing_check, parse_killing,
    printed_e_brackets, BasisChangeReport, KillingForm, RadBracketTable, ADJOINT_MATRICES, BASIS_CHANGE, E_NAMES,
    JORDANIAN_NAMES, PRINTED_E_BRACKETS, PRINTED_E_KILLING, RESCALED_KILLING,
};
pub use cg::{cg_checks, highest_weight_checks, killing_invariance_checks, CgData, Orientation, BLOCKS, CG_INVERSE, CG_MATRIX};
pub use literal::{parse_entry, parse_matrix};
pub use rep::{
    cosh_nilpotent, direct_sum, exp_nilpotent, rep, shape_checks, sinh_over_h, tensor_rep, trivial, RadMatrix,
    RepMatrices, Spin,
};
pub use suite::{
    default_samples, extraction_checks, rep_checks, representation_suite, spin_one_checks, woronowicz_chain_checks,
    SPIN_ONE_MATRICES,
};

use crate::exactalg::AlgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JrepError {
    #[error("radical field insufficient for j = {0}")]
    RadicalField(Spin),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("cannot parse {0:?}")]
    Parse(alloc::string::String),
    #[error("basis change is not invertible")]
    Singular,
    #[error("isomorphism chain: {0}")]
    Chain(alloc::string::String),
}
