use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{reduce_pairs, CartanMaurer, ExteriorError};
use crate::exactalg::RatFunc;
use crate::focalc::{CalcError, Family};
use crate::hopf::{Check, HopfError};
use crate::ncpoly::{standard_params, Alphabet, ExprParser, RewriteSystem};

const FAMILY_ONE: [&str; 10] = [
    "θ3θ3 = 0",
    "θ3θ4 = -(2z+1)/(z+1) θ4θ3 + z/(z+1) θ1θ3",
    "θ3θ1 = -1/(z+1) θ1θ3 - z/(z+1) θ4θ3",
    "θ3θ2 = -θ2θ3 + (h+g) θ1θ3 - (h+g) θ4θ3",
    "θ4θ4 = z/(z+1) θ2θ3 - z(h+g)/(z+1) θ1θ3 + z(h+g)/(z+1) θ4θ3",
    "θ4θ1 = -θ1θ4 - z(h+g)/(z+1) θ1θ3 + z(h+g)/(z+1) θ4θ3",
    "θ4θ2 = -(2z+1)/(z+1) θ2θ4 + z/(z+1) θ2θ1 + (2z+1)(h+g)/(z+1) θ2θ3 - (h+g)^2 θ1θ3 + (h+g)^2 θ4θ3",
    "θ1θ1 = -z/(z+1) θ2θ3",
    "θ1θ2 = -1/(z+1) θ2θ1 - z/(z+1) θ2θ4 - (h+g)/(z+1) θ2θ3",
    "θ2θ2 = (h+g) θ2θ1 - (h+g) θ2θ4 + (h+g)^2 θ2θ3",
];

const FAMILIES_TWO_THREE: [&str; 10] = [
    "θ3θ3 = 0",
    "θ3θ4 = -θ4θ3",
    "θ3θ1 = -θ1θ3",
    "θ3θ2 = -θ2θ3 + (h+g) θ1θ3 - (h+g) θ4θ3",
    "θ4θ4 = 0",
    "θ4θ1 = -θ1θ4",
    "θ4θ2 = -θ2θ4 + (h+g) θ2θ3 - (h+g)^2 θ1θ3 + (h+g)^2 θ4θ3",
    "θ1θ1 = 0",
    "θ1θ2 = -θ2θ1 - (h+g) θ2θ3",
    "θ2θ2 = (h+g) θ2θ1 - (h+g) θ2θ4 + (h+g)^2 θ2θ3",
];

const THREE_DIM: [&str; 6] = [
    "θ3θ3 = 0",
    "θ3θ1 = -θ1θ3",
    "θ3θ2 = -θ2θ3 + 4h θ1θ3",
    "θ1θ1 = 0",
    "θ1θ2 = -θ2θ1 - 2h θ2θ3",
    "θ2θ2 = 4h θ2θ1 + 8h^2 θ2θ3",
];

/// Published commutation relations of the left-invariant 2-forms, one `lhs = rhs` line each.
pub fn printed_relations(family: Family) -> &'static [&'static str] {
    match family {
        Family::One => &FAMILY_ONE,
        Family::Two | Family::Three => &FAMILIES_TWO_THREE,
        Family::ThreeD => &THREE_DIM,
    }
}

/// Each printed relation, moved to one side, reduces to zero under the computed rewrite system.
pub fn printed_relation_checks(family: Family, rs: &RewriteSystem) -> Result<Vec<Check>, ExteriorError> {
    let alpha: &Alphabet = rs.alphabet();
    let params = standard_params();
    let parser = ExprParser::new(alpha, &params);
    printed_relations(family)
        .iter()
        .map(|line| {
            let (lhs, rhs) = line.split_once('=').expect("relation line");
            let parse = |s: &str| parser.parse(s).map_err(HopfError::from);
            let diff = &parse(lhs)? - &parse(rhs)?;
            let reduced = rs.normalize(&diff).map_err(CalcError::from)?;
            Ok(Check::new(format!("{}: {}", family.label(), line), reduced.is_zero()))
        })
        .collect()
}

/// Published Cartan–Maurer matrices `𝒞_{jl,i}`, one `d×d` matrix per `i`, rows separated by `;`.
pub fn printed_cartan_maurer(dim: usize) -> &'static [&'static str] {
    if dim == 4 {
        &[
            "1 0 0 0; 0 0 1 0; 0 0 0 0; 0 0 0 0",
            "0 1 0 0; 0 0 0 1; 0 0 0 0; 0 0 0 0",
            "0 0 0 0; 0 0 0 0; 1 0 0 0; 0 0 1 0",
            "0 0 0 0; 0 0 0 0; 0 1 0 0; 0 0 0 1",
        ]
    } else {
        &["1 0 0; 0 0 1; 0 0 0", "0 1 0; -1 0 -2h; 0 0 0", "0 0 -1; 0 0 0; 1 0 -2h"]
    }
}

fn parse_cartan_maurer(dim: usize) -> Result<Vec<Vec<RatFunc>>, ExteriorError> {
    let alpha = Alphabet::new(Vec::<String>::new());
    let params = standard_params();
    let parser = ExprParser::new(&alpha, &params);
    printed_cartan_maurer(dim)
        .iter()
        .map(|m| {
            m.split(';')
                .flat_map(str::split_whitespace)
                .map(|e| parser.parse_scalar(e).map_err(|e| HopfError::from(e).into()))
                .collect()
        })
        .collect()
}

/// Comparison of the computed `𝒞` with the published matrices, entrywise and modulo the
/// wedge relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMaurerComparison {
    pub identical: bool,
    pub equivalent: bool,
}

pub fn compare_cartan_maurer(cm: &CartanMaurer, rs: &RewriteSystem) -> Result<CartanMaurerComparison, ExteriorError> {
    let d = cm.dim();
    let printed = parse_cartan_maurer(d)?;
    let mut identical = true;
    let mut equivalent = true;
    for (i, p) in printed.iter().enumerate() {
        let diff: Vec<RatFunc> = cm.component(i).iter().zip(p).map(|(x, y)| x - y).collect();
        identical &= diff.iter().all(RatFunc::is_zero);
        equivalent &= reduce_pairs(rs, d, &diff)?.is_zero();
    }
    Ok(CartanMaurerComparison { identical, equivalent })
}
