use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::cg::{CgData, Orientation};
use super::literal::parse_matrix;
use super::rep::{rep, RadMatrix, RepMatrices, Spin};
use super::JrepError;
use crate::exactalg::{MultiPoly, RadElem, RadPoly, RatFunc, Var};
use crate::hopf::Check;
use crate::qlie::{jordanian_table, BracketTable};

/// Bracket table over `Q(√2,√3)[h]`: `[bᵢ, bₖ] = Σⱼ c[d·i+k][j] bⱼ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadBracketTable {
    names: Vec<String>,
    c: Vec<Vec<RadPoly>>,
}

impl RadBracketTable {
    pub fn new(names: Vec<String>, c: Vec<Vec<RadPoly>>) -> Self {
        let d = names.len();
        assert_eq!(c.len(), d * d, "bracket table needs d² entries");
        assert!(c.iter().all(|v| v.len() == d), "bracket entries need d coefficients");
        RadBracketTable { names, c }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn bracket(&self, i: usize, k: usize) -> &[RadPoly] {
        &self.c[self.dim() * i + k]
    }

    /// Table in the basis `b'ₚ = Σ_q M_pq b_q`.
    pub fn change_basis(&self, m: &RadMatrix, names: &[&str]) -> Result<RadBracketTable, JrepError> {
        let d = self.dim();
        let inv = m.inverse().ok_or(JrepError::Singular)?;
        let mut c = Vec::with_capacity(d * d);
        for p in 0..d {
            for r in 0..d {
                let mut v = alloc::vec![RadPoly::zero(); d];
                for q in 0..d {
                    for s in 0..d {
                        let w = &m[(p, q)] * &m[(r, s)];
                        if w.is_zero() {
                            continue;
                        }
                        for (t, e) in self.bracket(q, s).iter().enumerate() {
                            v[t] = &v[t] + &(&w * e);
                        }
                    }
                }
                // coordinates u with Σ u_u b'_u = v, i.e. u = v·M⁻¹
                c.push((0..d).map(|u| (0..d).fold(RadPoly::zero(), |acc, t| &acc + &(&v[t] * &inv[(t, u)]))).collect());
            }
        }
        Ok(RadBracketTable { names: names.iter().map(|s| s.to_string()).collect(), c })
    }

    /// Same table with rational coefficients, if every coefficient is rational.
    pub fn to_rational(&self) -> Option<BracketTable> {
        let c = self.c.iter().map(|v| v.iter().map(rational_poly).collect::<Option<Vec<_>>>()).collect::<Option<_>>()?;
        Some(BracketTable::new(self.names.clone(), c))
    }

    pub fn classical(&self) -> RadBracketTable {
        RadBracketTable {
            names: self.names.clone(),
            c: self.c.iter().map(|v| v.iter().map(|p| RadPoly::constant(p.at_zero())).collect()).collect(),
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|k| self.bracket(i, k).iter().zip(self.bracket(k, i)).all(|(a, b)| (a + b).is_zero())))
    }
}

impl fmt::Display for RadBracketTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        for i in 0..d {
            for k in 0..d {
                write!(f, "[{},{}] =", self.names[i], self.names[k])?;
                let mut any = false;
                for (j, p) in self.bracket(i, k).iter().enumerate() {
                    if !p.is_zero() {
                        write!(f, "{} ({p}) {}", if any { " +" } else { "" }, self.names[j])?;
                        any = true;
                    }
                }
                if !any {
                    f.write_str(" 0")?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

fn rational_poly(p: &RadPoly) -> Option<RatFunc> {
    let coeffs: Vec<MultiPoly> = p
        .coeffs()
        .iter()
        .map(|c| c.is_rational().then(|| MultiPoly::constant(c.0[0].clone())))
        .collect::<Option<_>>()?;
    Some(RatFunc::from_poly(MultiPoly::from_coeffs_in(Var::H, &coeffs)))
}

fn radical_poly(r: &RatFunc) -> Option<RadPoly> {
    let den = r.denom().as_constant()?;
    let coeffs = r
        .numer()
        .coeffs_in(Var::H)
        .iter()
        .map(|c| c.as_constant().map(|c| RadElem::rational(c / &den)))
        .collect::<Option<Vec<_>>>()?;
    Some(RadPoly::from_coeffs(coeffs))
}

/// Bilinear form as a matrix `κ(bᵢ, bₖ) = K[i][k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingForm(pub RadMatrix);

impl KillingForm {
    pub fn value(&self, i: usize, k: usize) -> &RadPoly {
        &self.0[(i, k)]
    }

    /// Form in the basis `b'ₚ = Σ_q M_pq b_q`: `M K Mᵀ`.
    pub fn change_basis(&self, m: &RadMatrix) -> KillingForm {
        KillingForm(m.mul(&self.0).mul(&m.transpose()))
    }

    pub fn scale(&self, c: &RadElem) -> KillingForm {
        KillingForm(self.0.scale(&RadPoly::constant(c.clone())))
    }

    pub fn classical(&self) -> KillingForm {
        KillingForm(self.0.map(|p| RadPoly::constant(p.at_zero())))
    }
}

pub const E_NAMES: [&str; 3] = ["e1", "e0", "e-1"];
pub const JORDANIAN_NAMES: [&str; 3] = ["X", "H", "Y"];

/// Published brackets on `e¹₁, e¹₀, e¹₋₁`: row `3i+k` holds the coefficients of `[eᵢ, eₖ]`.
pub const PRINTED_E_BRACKETS: &str = "
    0, 0, 0;
    √2/2, 0, 0;
    h, √2/2, 0;
    -√2/2, 0, 0;
    0, 0, 0;
    √2h^2/2, h, √2/2;
    h, -√2/2, 0;
    -√2h^2/2, h, -√2/2;
    0, 0, 2h";

/// Published Killing form on `e¹₁, e¹₀, e¹₋₁`.
pub const PRINTED_E_KILLING: &str = "0, 0, √3/3; 0, -√3/3, √6h/3; √3/3, -√6h/3, √3h^2/3";

/// Rows give `X_h, H_h, Y_h` over `e¹₁, e¹₀, e¹₋₁`.
pub const BASIS_CHANGE: &str = "2, 0, 0; 4h, -2√2, 0; -5h^2/2, 2√2h, -2";

/// Generator matrices on `X_h, H_h, Y_h`.
pub const ADJOINT_MATRICES: [&str; 3] =
    ["0, -2, 0; 0, 0, 1; 0, 0, 0", "2, 4h, -h^2; 0, 0, -2h; 0, 0, -2", "2h, 3h^2, -h^3; -1, 0, -h^2; 0, 2, -2h"];

/// Killing form on `X_h, H_h, Y_h` after rescaling the `V⁰` vector.
pub const RESCALED_KILLING: &str = "0, 0, 4; 0, 8, -8h; 4, -8h, -6h^2";

pub fn printed_e_brackets() -> Result<RadBracketTable, JrepError> {
    let m = parse_matrix(PRINTED_E_BRACKETS)?;
    let c = (0..9).map(|r| m.row(r).to_vec()).collect();
    Ok(RadBracketTable::new(E_NAMES.iter().map(|s| s.to_string()).collect(), c))
}

pub fn basis_change() -> RadMatrix {
    parse_matrix(BASIS_CHANGE).expect("well-formed basis change")
}

/// Bracket and Killing form read off the projection onto the `V¹` and `V⁰` blocks.
pub fn bracket_killing_from_cg(data: &CgData, orientation: Orientation) -> (RadBracketTable, KillingForm) {
    let p = data.projection(orientation);
    let c = (0..9).map(|w| (5..8).map(|v| p[(v, w)].clone()).collect()).collect();
    let k = RadMatrix::from_fn(3, 3, |a, b| p[(8, 3 * a + b)].clone());
    (RadBracketTable::new(E_NAMES.iter().map(|s| s.to_string()).collect(), c), KillingForm(k))
}

/// Everything derived from the Clebsch–Gordan data in the `X_h, H_h, Y_h` basis.
#[derive(Clone, Debug)]
pub struct BasisChangeReport {
    pub adjoint: RepMatrices,
    pub brackets: RadBracketTable,
    pub killing: KillingForm,
    pub rescaled: KillingForm,
    pub checks: Vec<Check>,
}

impl BasisChangeReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

pub fn basis_change_iso(
    e_brackets: &RadBracketTable,
    e_killing: &KillingForm,
) -> Result<BasisChangeReport, JrepError> {
    let m = basis_change();
    let adjoint = rep(Spin::from_twice(2))?.conjugate(&m.transpose())?;
    let mut checks = Vec::new();
    for (i, (name, printed)) in ["X", "H", "Y"].iter().zip(ADJOINT_MATRICES).enumerate() {
        let got = [&adjoint.x, &adjoint.h, &adjoint.y][i];
        checks.push(Check::new(format!("Γ({name}) on X_h, H_h, Y_h is the adjoint matrix"), *got == parse_matrix(printed)?));
    }
    let brackets = e_brackets.change_basis(&m, &JORDANIAN_NAMES)?;
    let reference = jordanian_table();
    for i in 0..3 {
        for k in 0..3 {
            let want: Option<Vec<RadPoly>> = reference.bracket(i, k).iter().map(radical_poly).collect();
            checks.push(Check::new(
                format!("[{}_h,{}_h] = {}", JORDANIAN_NAMES[i], JORDANIAN_NAMES[k], reference.entry_display(i, k)),
                want.as_deref() == Some(brackets.bracket(i, k)),
            ));
        }
    }
    let killing = e_killing.change_basis(&m);
    let rescaled = match killing.value(0, 2).as_constant().filter(|c| !c.is_zero()) {
        Some(c) => killing.scale(&(&RadElem::int(4) * &c.inv()?)),
        None => killing.clone(),
    };
    let printed = parse_matrix(RESCALED_KILLING)?;
    let names = ["X_h", "H_h", "Y_h"];
    for i in 0..3 {
        for k in 0..3 {
            checks.push(Check::new(
                format!("κ({},{}) = {}", names[i], names[k], printed[(i, k)]),
                *rescaled.value(i, k) == printed[(i, k)],
            ));
        }
    }
    Ok(BasisChangeReport { adjoint, brackets, killing, rescaled, checks })
}

/// `κ` at `h = 0` is the classical Killing form of sl₂ up to the rescaling.
pub fn classical_killing_check(rescaled: &KillingForm) -> Check {
    let want = parse_matrix("0, 0, 4; 0, 8, 0; 4, 0, 0").expect("well-formed");
    Check::new("κ at h = 0 is the sl₂ Killing form", rescaled.classical().0 == want)
}

pub fn parse_killing(src: &str) -> Result<KillingForm, JrepError> {
    Ok(KillingForm(parse_matrix(src)?))
}
