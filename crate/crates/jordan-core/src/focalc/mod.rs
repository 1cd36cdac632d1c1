//! First-order bicovariant calculi on GL_{h,g}(2) and SL_h(2): ABCD data, θ-generator
//! commutation, differentials, the consistency constraints and the reduction to SL_h(2).

mod calculus;
mod classify;
mod constraints;
mod families;

pub use calculus::{
    biinvariant_forms, coaction_matrix, reduction_coefficients, AlgMatrix, CalcError, Family,
    FirstOrderCalculus, OneForm, OneFormDisplay,
};
pub use classify::{classify_3d, ClassifyOptions, ClassifyReport};
pub use constraints::{
    coaction_checks, constraints_check, determinant_differential, inner_commutators, matches_three_dim,
    reduce_to_sl, Constraint, ConstraintReport, InnerReport, InnerVerdict, Reduction, Residual,
};
pub use families::{family_matrices, load_family};

#[cfg(test)]
mod tests;
