use alloc::vec::Vec;

use super::ExteriorError;
use crate::exactalg::{Matrix, RatFunc};
use crate::focalc::{FirstOrderCalculus, OneForm};
use crate::hopf::{Check, RMatrix};
use crate::ncpoly::NCPoly;

type FormMatrix = Vec<Vec<OneForm>>;

fn zero_forms(d: usize) -> FormMatrix {
    alloc::vec![alloc::vec![OneForm::zero(d); 4]; 4]
}

/// `M · F` for a scalar matrix `M` and a matrix of 1-forms `F`.
fn scalar_times(m: &Matrix<RatFunc>, f: &FormMatrix, d: usize) -> FormMatrix {
    let mut out = zero_forms(d);
    for r in 0..4 {
        for c in 0..4 {
            for k in 0..4 {
                if !m[(r, k)].is_zero() {
                    out[r][c] = &out[r][c] + &f[k][c].scale(&m[(r, k)]);
                }
            }
        }
    }
    out
}

/// `F · M`.
fn times_scalar(f: &FormMatrix, m: &Matrix<RatFunc>, d: usize) -> FormMatrix {
    let mut out = zero_forms(d);
    for r in 0..4 {
        for c in 0..4 {
            for k in 0..4 {
                if !m[(k, c)].is_zero() {
                    out[r][c] = &out[r][c] + &f[r][k].scale(&m[(k, c)]);
                }
            }
        }
    }
    out
}

/// `R̂⁻¹ dT₁ T₂ = T₁ dT₂ R̂`, entry by entry, with `R̂ = P R`.
pub fn differential_r_form(calc: &FirstOrderCalculus) -> Result<Vec<Check>, ExteriorError> {
    let host = calc.host();
    let d = calc.dim();
    let rhat = RMatrix::jordanian().braid();
    let rhat_inv = rhat.inverse().expect("R̂ is invertible");
    let dt: Vec<OneForm> = (0..4).map(|k| calc.differential(&host.t(k / 2, k % 2))).collect::<Result<_, _>>()?;
    let t = |i: usize, j: usize| host.t(i, j);
    let mut dt1_t2 = zero_forms(d);
    let mut t1_dt2 = zero_forms(d);
    for r in 0..4 {
        for c in 0..4 {
            let (i, j, k, l) = (r / 2, r % 2, c / 2, c % 2);
            // (dT₁T₂)_{ij,kl} = dT_ik T_jl, (T₁dT₂)_{ij,kl} = T_ik dT_jl
            dt1_t2[r][c] = calc.right_mul(&dt[2 * i + k], &t(j, l))?;
            t1_dt2[r][c] = calc.left_mul(&t(i, k), &dt[2 * j + l])?;
        }
    }
    let lhs = scalar_times(&rhat_inv, &dt1_t2, d);
    let rhs = times_scalar(&t1_dt2, &rhat, d);
    Ok(entry_checks("R̂⁻¹dT₁T₂ = T₁dT₂R̂", &lhs, &rhs))
}

/// `Θ₁T₂ = T₂R₂₁Θ₁R₁₂`, entry by entry.
pub fn theta_r_form(calc: &FirstOrderCalculus) -> Result<Vec<Check>, ExteriorError> {
    let host = calc.host();
    let d = calc.dim();
    let r12 = RMatrix::jordanian();
    let r21 = r12.flipped();
    let theta = |i: usize, k: usize| -> OneForm {
        let e = calc.embedding();
        OneForm::from_scalars(&(0..d).map(|m| e[(2 * i + k, m)].clone()).collect::<Vec<_>>())
    };
    // Θ₁ = Θ ⊗ I
    let mut theta1 = zero_forms(d);
    let mut lhs = zero_forms(d);
    for r in 0..4 {
        for c in 0..4 {
            let (i, j, k, l) = (r / 2, r % 2, c / 2, c % 2);
            if j == l {
                theta1[r][c] = theta(i, k);
            }
            // (Θ₁T₂)_{ij,kl} = θ_ik T_jl
            lhs[r][c] = theta_times(calc, &theta(i, k), &host.t(j, l))?;
        }
    }
    let inner = scalar_times(&r21.0, &times_scalar(&theta1, &r12.0, d), d);
    // T₂ = I ⊗ T: (T₂X)_{ij,kl} = Σₙ T_jn X_{in,kl}
    let mut rhs = zero_forms(d);
    for r in 0..4 {
        for c in 0..4 {
            let (i, j) = (r / 2, r % 2);
            for n in 0..2 {
                let term = calc.left_mul(&host.t(j, n), &inner[2 * i + n][c])?;
                rhs[r][c] = &rhs[r][c] + &term;
            }
        }
    }
    Ok(entry_checks("Θ₁T₂ = T₂R₂₁Θ₁R₁₂", &lhs, &rhs))
}

/// `ω·x` for a 1-form with scalar coefficients.
fn theta_times(calc: &FirstOrderCalculus, form: &OneForm, x: &NCPoly) -> Result<OneForm, ExteriorError> {
    Ok(calc.right_mul(form, x)?)
}

fn entry_checks(name: &str, lhs: &FormMatrix, rhs: &FormMatrix) -> Vec<Check> {
    let mut out = Vec::with_capacity(16);
    for r in 0..4 {
        for c in 0..4 {
            out.push(Check::new(alloc::format!("{name} entry ({}, {})", r + 1, c + 1), lhs[r][c] == rhs[r][c]));
        }
    }
    out
}

/// Coefficients of `da·a = Σₓ pₓ dx` printed for the first family, with `Dinv` for 𝒟⁻¹.
pub const DA_A_EXPANSION: [(&str, &str); 4] = [
    (
        "a",
        "(a + h c) + (z/4)(9 a + (12 h - 7 g) c + Dinv (b a c - 3 a^2 d + 2 (h - g)(4 b c^2 - 6 a d c - (h - 2 g) d c^2 + 3 h (h - 2 g) c^3)))",
    ),
    ("b", "(z/2) Dinv (a^2 c + (h - g)(2 a c^2 + (h - 2 g) c^3))"),
    (
        "c",
        "(g h c - h a) + (z/4)((7 g - 6 h) a - ((h - 7 g)(4 h - 3 g) + g h) c + Dinv (2 b a^2 - 6 h a^3 + 3 (2 h - 3 g) a^2 d - (2 h - 3 g) b a c + 2 (h - g)(3 (h - 6 g) a d c - 2 (h - 6 g) b c^2 - 3 g (h - 2 g) d c^2 + 9 g h (h - 2 g) c^3)))",
    ),
    ("d", "(-z/2) Dinv (a^3 + (2 h - 3 g) a^2 c + (h - g)((h - 6 g) a c^2 - 3 g (h - 2 g) c^3))"),
];

/// Compare `da·a` with the printed expansion over the differentials of the generators.
/// Returns the difference, zero when the expansion is right.
pub fn da_a_difference(calc: &FirstOrderCalculus) -> Result<OneForm, ExteriorError> {
    let host = calc.host();
    let a = host.t(0, 0);
    let lhs = calc.right_mul(&calc.differential(&a)?, &a)?;
    let mut rhs = OneForm::zero(calc.dim());
    for (gen, coeff) in DA_A_EXPANSION {
        let p = host.parse(coeff).map_err(crate::focalc::CalcError::from)?;
        let x = host.gen(gen).expect("matrix generator");
        rhs = &rhs + &calc.left_mul(&p, &calc.differential(&x)?)?;
    }
    Ok(&lhs - &rhs)
}
