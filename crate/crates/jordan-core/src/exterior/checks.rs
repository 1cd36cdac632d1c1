use alloc::format;
use alloc::vec::Vec;

use super::braid::BraidMatrix;
use super::wedge::{pair_poly, pair_times, two_form_times, CartanMaurer, TwoForm, WedgeRelations};
use super::ExteriorError;
use crate::exactalg::RatFunc;
use crate::focalc::FirstOrderCalculus;
use crate::hopf::Check;
use crate::ncpoly::{NCPoly, RewriteSystem};

/// Normal form of `Σ c_st θₛ∧θₜ` under the wedge relations.
pub fn reduce_pairs(rs: &RewriteSystem, dim: usize, c: &[RatFunc]) -> Result<NCPoly, ExteriorError> {
    Ok(rs.normalize(&pair_poly(dim, c)).map_err(crate::focalc::CalcError::from)?)
}

fn trace_coords(calc: &FirstOrderCalculus) -> Vec<RatFunc> {
    calc.trace_form().as_scalars().expect("scalar trace form")
}

/// `Tr_hΘ ∧ Tr_hΘ`, reduced.
pub fn trace_square(calc: &FirstOrderCalculus, rs: &RewriteSystem) -> Result<NCPoly, ExteriorError> {
    let d = calc.dim();
    let tr = trace_coords(calc);
    let c: Vec<RatFunc> = (0..d * d).map(|p| &tr[p / d] * &tr[p % d]).collect();
    reduce_pairs(rs, d, &c)
}

/// The constant `λ` with `Tr_hΘ∧θᵢ + θᵢ∧Tr_hΘ = λ Σ 𝒞_{jk,i} θⱼ∧θₖ` for every `i`, if any.
pub fn inner_form_constant(
    calc: &FirstOrderCalculus,
    rs: &RewriteSystem,
    cm: &CartanMaurer,
) -> Result<Option<RatFunc>, ExteriorError> {
    let d = calc.dim();
    let tr = trace_coords(calc);
    let mut lambda: Option<RatFunc> = None;
    for i in 0..d {
        let mut c = alloc::vec![RatFunc::zero(); d * d];
        for k in 0..d {
            c[d * k + i] = &c[d * k + i] + &tr[k];
            c[d * i + k] = &c[d * i + k] + &tr[k];
        }
        let anti = reduce_pairs(rs, d, &c)?;
        let target = reduce_pairs(rs, d, &cm.component(i))?;
        let Some((w, tc)) = target.terms().next() else {
            if anti.is_zero() {
                continue;
            }
            return Ok(None);
        };
        let ratio = anti.coeff(w).checked_div(tc).map_err(crate::focalc::CalcError::from)?;
        if anti != target.scale(&ratio) || lambda.as_ref().is_some_and(|l| *l != ratio) {
            return Ok(None);
        }
        lambda = Some(ratio);
    }
    Ok(lambda)
}

/// Multiplying each wedge relation on the right by a generator gives nothing new.
pub fn push_through_checks(
    calc: &FirstOrderCalculus,
    rels: &WedgeRelations,
    rs: &RewriteSystem,
) -> Result<Vec<Check>, ExteriorError> {
    let d = calc.dim();
    let host = calc.host();
    let alpha = rels.alphabet();
    let mut out = Vec::new();
    for (i, j, rhs) in rels.rules() {
        let mut c: Vec<RatFunc> = rhs.iter().map(|x| -x).collect();
        c[d * i + j] = &c[d * i + j] + &RatFunc::one();
        let rel = TwoForm::from_scalars(d, &c);
        for k in 0..4 {
            let moved = two_form_times(calc, &rel, &host.t(k / 2, k % 2))?;
            let mut holds = true;
            for rel in moved.split_by_word() {
                holds &= reduce_pairs(rs, d, &rel)?.is_zero();
            }
            let name = format!(
                "{}{} relation times {}",
                alpha.names()[i],
                alpha.names()[j],
                host.alphabet().name(host.t_sym(k / 2, k % 2))
            );
            out.push(Check::new(name, holds));
        }
    }
    Ok(out)
}

/// The quadratic relation forced by `θ₄ = Σ αₖθₖ` in three dimensions, and its printed form
/// `2θ₁∧θ₁ + 4hθ₃∧θ₁ + θ₂∧θ₃ + θ₃∧θ₂ = 0`, both reduce to zero.
pub fn three_dim_relation_checks(
    calc: &FirstOrderCalculus,
    cm: &CartanMaurer,
    rs: &RewriteSystem,
) -> Result<Vec<Check>, ExteriorError> {
    let Some(derived) = cm.constraint() else {
        return Ok(Vec::new());
    };
    let h = calc.host().param("h").cloned().unwrap_or_else(RatFunc::h);
    let mut printed = alloc::vec![RatFunc::zero(); 9];
    printed[0] = RatFunc::from_int(2);
    printed[3 * 2] = &RatFunc::from_int(4) * &h;
    printed[3 + 2] = RatFunc::one();
    printed[3 * 2 + 1] = RatFunc::one();
    let proportional = {
        let k = derived[0].checked_div(&printed[0]).map_err(crate::focalc::CalcError::from)?;
        derived.iter().zip(&printed).all(|(x, y)| *x == y * &k)
    };
    Ok(alloc::vec![
        Check::new("Cartan–Maurer constraint reduces to zero", reduce_pairs(rs, 3, derived)?.is_zero()),
        Check::new("printed 3D relation reduces to zero", reduce_pairs(rs, 3, &printed)?.is_zero()),
        Check::new("Cartan–Maurer constraint equals the printed relation", proportional),
    ])
}

fn apply_lambda(lambda: &BraidMatrix, form: &TwoForm) -> TwoForm {
    let d = lambda.dim();
    let mut c = alloc::vec![NCPoly::zero(); d * d];
    for w in 0..d {
        for u in 0..d {
            let p = form.coeff(w, u);
            if p.is_zero() {
                continue;
            }
            for s in 0..d {
                for t in 0..d {
                    let l = lambda.component(w, u, s, t);
                    if !l.is_zero() {
                        c[d * s + t] += &p.scale(l);
                    }
                }
            }
        }
    }
    TwoForm::from_coeffs(d, c)
}

/// `Λ((θᵢ⊗θₖ)·x) = Λ(θᵢ⊗θₖ)·x` for every pair and matrix generator.
pub fn bimodule_checks(calc: &FirstOrderCalculus, lambda: &BraidMatrix) -> Result<Vec<Check>, ExteriorError> {
    let d = calc.dim();
    let host = calc.host();
    let mut out = Vec::new();
    for k in 0..4 {
        let x = host.t(k / 2, k % 2);
        let mut holds = true;
        for i in 0..d {
            for j in 0..d {
                let lhs = apply_lambda(lambda, &pair_times(calc, i, j, &x)?);
                let mut rhs = TwoForm::zero(d);
                for s in 0..d {
                    for t in 0..d {
                        let l = lambda.component(i, j, s, t);
                        if !l.is_zero() {
                            rhs = rhs.plus(&pair_times(calc, s, t, &x)?.scaled(l));
                        }
                    }
                }
                holds &= lhs == rhs;
            }
        }
        let name = format!("Λ commutes with right multiplication by {}", host.alphabet().name(host.t_sym(k / 2, k % 2)));
        out.push(Check::new(name, holds));
    }
    Ok(out)
}

/// `Λ(θᵢ ⊗ ηₖ) = ηₖ ⊗ θᵢ` for the right-invariant forms `ηₖ = Σⱼ θⱼ S(vⱼₖ)`.
pub fn invariant_flip_checks(calc: &FirstOrderCalculus, lambda: &BraidMatrix) -> Result<Vec<Check>, ExteriorError> {
    let d = calc.dim();
    let host = calc.host();
    let sv: Vec<Vec<NCPoly>> = (0..d)
        .map(|j| (0..d).map(|k| host.antipode(calc.v().get(j, k))).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for i in 0..d {
        for k in 0..d {
            let mut lhs = TwoForm::zero(d);
            let mut rhs = TwoForm::zero(d);
            for j in 0..d {
                for s in 0..d {
                    for t in 0..d {
                        let l = lambda.component(i, j, s, t);
                        if !l.is_zero() {
                            lhs = lhs.plus(&pair_times(calc, s, t, &sv[j][k])?.scaled(l));
                        }
                    }
                }
                let moved = calc.theta_commute(j, &sv[j][k])?;
                let mut c = alloc::vec![NCPoly::zero(); d * d];
                for (w, p) in moved.0.iter().enumerate() {
                    c[d * w + i] = p.clone();
                }
                rhs = rhs.plus(&TwoForm::from_coeffs(d, c));
            }
            out.push(Check::new(format!("Λ(θ{} ⊗ η{}) = η{} ⊗ θ{}", i + 1, k + 1, k + 1, i + 1), lhs == rhs));
        }
    }
    Ok(out)
}

/// `d(dx) = 0` for every matrix generator `x`, with `dθᵢ = −Σ 𝒞_{jl,i} θⱼ∧θₗ`.
pub fn d_squared_checks(
    calc: &FirstOrderCalculus,
    cm: &CartanMaurer,
    rs: &RewriteSystem,
) -> Result<Vec<Check>, ExteriorError> {
    let d = calc.dim();
    let host = calc.host();
    let mut out = Vec::new();
    for k in 0..4 {
        let x = host.t(k / 2, k % 2);
        let dx = calc.differential(&x)?;
        let mut total = TwoForm::zero(d);
        for (j, p) in dx.0.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let dp = calc.differential(p)?;
            let mut c = alloc::vec![NCPoly::zero(); d * d];
            for (s, q) in dp.0.iter().enumerate() {
                c[d * s + j] = q.clone();
            }
            for (idx, coeff) in cm.component(j).iter().enumerate() {
                if !coeff.is_zero() {
                    c[idx] -= &p.scale(coeff);
                }
            }
            total = total.plus(&TwoForm::from_coeffs(d, c));
        }
        let mut holds = true;
        for rel in total.split_by_word() {
            holds &= reduce_pairs(rs, d, &rel)?.is_zero();
        }
        let name = format!("d²{} = 0", host.alphabet().name(host.t_sym(k / 2, k % 2)));
        out.push(Check::new(name, holds));
    }
    Ok(out)
}
