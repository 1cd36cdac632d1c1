//! The Jordanian quantised enveloping algebra U_h(sl2) modulo a power of h: PBW normal
//! forms, the Hopf maps, the adjoint action, the Casimir and the ad-submodule spanned by
//! `X_h, H_h, Y_h`.

mod algebra;
mod element;
mod submodule;

pub use algebra::{series_of, UhAlgebra};
pub use element::{Gen, Pbw, UhElement, UhTensor};
pub use submodule::{
    casimir_checks, generator_action_table, hopf_checks, order_stability_checks, submodule_checks,
    GENERATOR_ACTIONS,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UhError {
    #[error("parse error: {0}")]
    Parse(alloc::string::String),
    #[error("coefficient {0} is not a polynomial in h")]
    NotPolynomial(alloc::string::String),
}

#[cfg(test)]
mod tests;
