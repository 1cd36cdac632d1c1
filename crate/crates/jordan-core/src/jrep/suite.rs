use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::bracket::{
    basis_change_iso, bracket_killing_from_cg, classical_killing_check, printed_e_brackets, BasisChangeReport,
    KillingForm, RadBracketTable, PRINTED_E_KILLING,
};
use super::cg::{cg_checks, highest_weight_checks, killing_invariance_checks, CgData, Orientation};
use super::literal::parse_matrix;
use super::rep::{rep, shape_checks, RepMatrices, Spin};
use super::JrepError;
use crate::exactalg::{BigRat, RatFunc};
use crate::focalc::{load_family, Family};
use crate::hopf::Check;
use crate::qlie::{quantum_lie_algebra, woronowicz_iso};

/// Published matrices of `X`, `H`, `Y` on `V¹`.
pub const SPIN_ONE_MATRICES: [&str; 3] =
    ["0, √2, 0; 0, 0, √2; 0, 0, 0", "2, 0, 0; 0, 0, 0; 0, 0, -2", "0, -√2h^2/4, 0; √2, 0, -√2h^2/4; 0, √2, 0"];

pub fn spin_one_checks(v1: &RepMatrices) -> Result<Vec<Check>, JrepError> {
    let mut out = Vec::new();
    for (name, (got, src)) in ["X", "H", "Y"].iter().zip([&v1.x, &v1.h, &v1.y].into_iter().zip(SPIN_ONE_MATRICES)) {
        out.push(Check::new(format!("j=1: Γ({name}) matches the printed matrix"), *got == parse_matrix(src)?));
    }
    Ok(out)
}

/// Every spin up to 2: shape and the three relations.
pub fn rep_checks() -> Result<Vec<Check>, JrepError> {
    let mut out = Vec::new();
    for twice in 1..=4 {
        let spin = Spin::from_twice(twice);
        let r = rep(spin)?;
        out.extend(shape_checks(spin, &r));
        out.extend(r.relation_checks(&format!("j={spin}")));
    }
    Ok(out)
}

pub fn extraction_checks(brackets: &RadBracketTable, killing: &KillingForm) -> Result<Vec<Check>, JrepError> {
    let printed = printed_e_brackets()?;
    let names = brackets.names();
    let mut out = Vec::new();
    for i in 0..3 {
        for k in 0..3 {
            out.push(Check::new(
                format!("[{},{}] matches the printed bracket", names[i], names[k]),
                brackets.bracket(i, k) == printed.bracket(i, k),
            ));
        }
    }
    let printed = parse_matrix(PRINTED_E_KILLING)?;
    for i in 0..3 {
        for k in 0..3 {
            out.push(Check::new(
                format!("κ({},{}) = {}", names[i], names[k], printed[(i, k)]),
                *killing.value(i, k) == printed[(i, k)],
            ));
        }
    }
    out.push(Check::new("bracket at h = 0 is antisymmetric", brackets.classical().is_antisymmetric()));
    Ok(out)
}

/// Basis-change brackets pushed through the rational table and compared with the
/// three-dimensional quantum Lie algebra after its own basis change.
pub fn woronowicz_chain_checks(report: &BasisChangeReport) -> Result<Vec<Check>, JrepError> {
    let Some(table) = report.brackets.to_rational() else {
        return Ok(alloc::vec![Check::new("basis-change brackets are rational", false)]);
    };
    let calc = load_family(Family::ThreeD, &RatFunc::z()).map_err(|e| JrepError::Chain(e.to_string()))?;
    let iso = woronowicz_iso(&quantum_lie_algebra(&calc), &table).map_err(|e| JrepError::Chain(e.to_string()))?;
    Ok(iso.checks.into_iter().map(|c| Check::new(format!("3D quantum Lie algebra: {}", c.name), c.holds)).collect())
}

/// Sample values of `h` for the highest-weight rederivation.
pub fn default_samples() -> Vec<BigRat> {
    [(0, 1), (1, 3), (2, 1), (-5, 7)].iter().map(|&(n, d)| BigRat::new(n.into(), d.into())).collect()
}

/// Representations, the Clebsch–Gordan data, extraction, the basis change and the chain
/// into the quantum Lie algebra.
pub fn representation_suite() -> Result<Vec<Check>, JrepError> {
    let mut out = rep_checks()?;
    out.push(Check::new(
        "j=5/2 is outside the radical field",
        matches!(rep(Spin::from_twice(5)), Err(JrepError::RadicalField(_))),
    ));
    out.extend(spin_one_checks(&rep(Spin::from_twice(2))?)?);
    let data = CgData::load()?;
    let orientation = data.orientation();
    out.push(Check::new("C intertwines in one orientation", orientation.is_some()));
    let orientation = orientation.unwrap_or(Orientation::Rows);
    out.extend(cg_checks(&data, orientation));
    out.extend(killing_invariance_checks(&data, orientation));
    out.extend(highest_weight_checks(&data, &default_samples()));
    let (brackets, killing) = bracket_killing_from_cg(&data, orientation);
    out.extend(extraction_checks(&brackets, &killing)?);
    let report = basis_change_iso(&brackets, &killing)?;
    out.extend(report.checks.iter().cloned());
    out.push(classical_killing_check(&report.rescaled));
    out.extend(woronowicz_chain_checks(&report)?);
    Ok(out)
}
