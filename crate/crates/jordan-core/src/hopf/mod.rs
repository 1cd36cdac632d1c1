//! Jordanian R-matrix, FRT relations and the Hopf presentations of A(R), GL_{h,g}(2)
//! and SL_h(2).

mod presentation;
mod rmatrix;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub use presentation::{HopfError, HopfPresentation, MapValue, StructureMap};
pub use rmatrix::{frt_relations, r_matrix_checks, RMatrix, RMatrixReport};

use crate::ncpoly::{NCPoly, TensorNCPoly};

/// Named boolean outcome of an identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub holds: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, holds: bool) -> Self {
        Check { name: name.into(), holds }
    }
}

/// Coassociativity, counit and antipode axioms on every generator, and compatibility of
/// Δ, ε and S with every rewrite rule.
pub fn hopf_axioms(p: &HopfPresentation) -> Result<Vec<Check>, HopfError> {
    let mut out = Vec::new();
    let alpha = p.alphabet().clone();
    for s in alpha.syms() {
        let name = alpha.name(s);
        let x = NCPoly::sym(s);
        let dx = p.coproduct(&x)?;
        out.push(Check::new(
            format!("coassociative {name}"),
            p.coproduct_leg(&dx, 0)? == p.coproduct_leg(&dx, 1)?,
        ));
        let left = p.counit_leg(&dx, 0).multiply_legs();
        let right = p.counit_leg(&dx, 1).multiply_legs();
        out.push(Check::new(format!("counit {name}"), left == x && right == x));
        if p.has_antipode() {
            let unit = NCPoly::constant(p.counit(&x));
            let l = p.normalize(&p.antipode_leg(&dx, 0)?.multiply_legs())?;
            let r = p.normalize(&p.antipode_leg(&dx, 1)?.multiply_legs())?;
            out.push(Check::new(format!("antipode {name}"), l == unit && r == unit));
        }
    }
    for rule in p.rewrite().rules() {
        let name = format!("{}", alpha.show(&rule.lhs));
        let rel = &NCPoly::word(rule.lhs.clone()) - &rule.rhs;
        out.push(Check::new(format!("coproduct respects {name}"), p.coproduct(&rel)?.is_zero()));
        out.push(Check::new(format!("counit respects {name}"), p.counit(&rel).is_zero()));
        if p.has_antipode() {
            out.push(Check::new(format!("antipode respects {name}"), p.antipode(&rel)?.is_zero()));
        }
    }
    Ok(out)
}

/// The quantum determinant with its commutation relations and group-likeness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantReport {
    pub determinant: NCPoly,
    pub checks: Vec<Check>,
    /// Whether the determinant commutes with every generator.
    pub central: bool,
}

const DET: &str = "(ad - bc + h ac)";

pub fn quantum_determinant(p: &HopfPresentation) -> Result<DeterminantReport, HopfError> {
    let det = p.parse(DET)?;
    let relations = [
        ("Da", "D a - a D - (h - g) c D"),
        ("Dd", "D d - d D + (h - g) c D"),
        ("Dc", "D c - c D"),
        ("Db", "D b - b D - (h - g)(d D - a D - (h - g) c D)"),
    ];
    let mut checks = Vec::new();
    for (name, rel) in relations {
        let expr = rel.replace('D', DET);
        checks.push(Check::new(format!("commutation {name}"), p.parse(&expr)?.is_zero()));
    }
    let grouplike = TensorNCPoly::pure(&[&det, &det]).normalize(p.rewrite())?;
    checks.push(Check::new("grouplike", p.coproduct(&det)? == grouplike));
    checks.push(Check::new("counit one", p.counit(&det).is_one()));
    let mut central = true;
    for x in ["a", "b", "c", "d"] {
        let c = p.parse(&format!("{DET} {x} - {x} {DET}"))?;
        central &= c.is_zero();
    }
    Ok(DeterminantReport { determinant: det, checks, central })
}

#[cfg(test)]
mod tests;
