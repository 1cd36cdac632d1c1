use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::calculus::{CalcError, Family, FirstOrderCalculus, OneForm};
use super::families::family_matrices;
use crate::exactalg::{Matrix, RatFunc, Var};
use crate::hopf::{Check, HopfPresentation};
use crate::ncpoly::{NCPoly, TensorNCPoly};

/// The three families of consistency conditions on ABCD data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Constraint {
    /// The differential respects every defining relation.
    Differential,
    /// The commutation rules are compatible with the right coaction.
    Covariance,
    /// The matrices form a representation of the host algebra.
    Representation,
}

/// One equation that failed, with the relation it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub constraint: Constraint,
    pub source: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintReport {
    /// Number of equations evaluated.
    pub checked: usize,
    pub failures: Vec<Residual>,
    pub determinant_invertible: bool,
    /// `𝔇 = I`, required in three dimensions.
    pub determinant_is_identity: bool,
}

impl ConstraintReport {
    pub fn residual_count(&self) -> usize {
        self.failures.len()
    }

    pub fn all_pass(&self, dim: usize) -> bool {
        self.failures.is_empty() && self.determinant_invertible && (dim == 4 || self.determinant_is_identity)
    }
}

/// One generated equation: where it came from and its unreduced residual.
pub(crate) enum ResidualValue {
    Form(OneForm),
    Algebra(NCPoly),
    Scalars(Matrix<RatFunc>),
}

impl ResidualValue {
    fn is_zero(&self) -> bool {
        match self {
            ResidualValue::Form(w) => w.is_zero(),
            ResidualValue::Algebra(p) => p.is_zero(),
            ResidualValue::Scalars(m) => m.is_zero(),
        }
    }

    /// Coefficients keyed by position, for equating to zero.
    pub(crate) fn coefficients(&self) -> Vec<(Vec<u8>, RatFunc)> {
        let mut out = Vec::new();
        match self {
            ResidualValue::Form(w) => {
                for (i, p) in w.0.iter().enumerate() {
                    for (word, c) in p.terms() {
                        let mut key = alloc::vec![i as u8];
                        key.extend_from_slice(word.letters());
                        out.push((key, c.clone()));
                    }
                }
            }
            ResidualValue::Algebra(p) => {
                out.extend(p.terms().map(|(word, c)| (word.letters().to_vec(), c.clone())));
            }
            ResidualValue::Scalars(m) => {
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        if !m[(i, j)].is_zero() {
                            out.push((alloc::vec![i as u8, j as u8], m[(i, j)].clone()));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Every equation of the chosen constraint systems, zero or not.
pub(crate) fn generate(
    calc: &FirstOrderCalculus,
    which: &[Constraint],
) -> Result<Vec<(Constraint, String, ResidualValue)>, CalcError> {
    let host = calc.host();
    let alpha = host.alphabet();
    let n = calc.dim();
    let mut out = Vec::new();

    for rule in host.rewrite().rules() {
        let rel = &NCPoly::word(rule.lhs.clone()) - &rule.rhs;
        let source = format!("{} = {}", alpha.show(&rule.lhs), rule.rhs.show(alpha));
        if which.contains(&Constraint::Differential) {
            let d = calc.differential(&rel)?;
            out.push((Constraint::Differential, source.clone(), ResidualValue::Form(d)));
        }
        if which.contains(&Constraint::Representation) {
            let r = calc.rep(&rel);
            out.push((Constraint::Representation, source, ResidualValue::Scalars(r)));
        }
    }

    if which.contains(&Constraint::Covariance) {
        let v = calc.v();
        for s in alpha.syms() {
            let left = calc.generator_right_star(s);
            let right = calc.generator_star(s);
            for i in 0..n {
                for k in 0..n {
                    let mut e = NCPoly::zero();
                    for j in 0..n {
                        e += &(v.get(j, i) * left.get(j, k));
                        e -= &(right.get(i, j) * v.get(k, j));
                    }
                    let source = format!("generator {} at ({}, {})", alpha.name(s), i + 1, k + 1);
                    out.push((Constraint::Covariance, source, ResidualValue::Algebra(host.normalize(&e)?)));
                }
            }
        }
    }
    Ok(out)
}

/// Evaluate all three constraint systems.
pub fn constraints_check(calc: &FirstOrderCalculus) -> Result<ConstraintReport, CalcError> {
    let alpha = calc.host().alphabet();
    let all = [Constraint::Differential, Constraint::Covariance, Constraint::Representation];
    let equations = generate(calc, &all)?;
    let checked = equations.len();
    let failures = equations
        .into_iter()
        .filter(|(_, _, value)| !value.is_zero())
        .map(|(constraint, source, value)| Residual {
            constraint,
            source,
            value: match value {
                ResidualValue::Form(w) => format!("{}", w.show(alpha)),
                ResidualValue::Algebra(p) => format!("{}", p.show(alpha)),
                ResidualValue::Scalars(m) => format!("{m}"),
            },
        })
        .collect();
    let det = calc.determinant_rep();
    Ok(ConstraintReport {
        checked,
        failures,
        determinant_invertible: det.inverse().is_some(),
        determinant_is_identity: det.is_identity(),
    })
}

/// `Δ(v_ik) = Σⱼ v_ij ⊗ v_jk` and `ε(v_ik) = δ_ik`.
pub fn coaction_checks(calc: &FirstOrderCalculus) -> Result<Vec<Check>, CalcError> {
    let host = calc.host();
    let v = calc.v();
    let n = calc.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for k in 0..n {
            let lhs = host.coproduct(v.get(i, k))?;
            let mut rhs = TensorNCPoly::zero();
            for j in 0..n {
                rhs = &rhs + &TensorNCPoly::pure(&[v.get(i, j), v.get(j, k)]);
            }
            let rhs = rhs.normalize(host.rewrite())?;
            out.push(Check::new(format!("coproduct v{}{}", i + 1, k + 1), lhs == rhs));
            let eps = host.counit(v.get(i, k));
            let expect = if i == k { RatFunc::one() } else { RatFunc::zero() };
            out.push(Check::new(format!("counit v{}{}", i + 1, k + 1), eps == expect));
        }
    }
    Ok(out)
}

/// How `Tr_hΘ` interacts with the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InnerVerdict {
    /// `d x = (1/κ) [Tr_hΘ, x]` for every generator; holds `1/κ`.
    Inner(RatFunc),
    /// `[Tr_hΘ, x] = 0`.
    CentralTrace,
    /// `[Tr_hΘ, x] = λ x Tr_hΘ`; holds `λ`.
    Eigen(RatFunc),
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerReport {
    /// `[Tr_hΘ, x]` for x = a, b, c, d.
    pub commutators: Vec<OneForm>,
    pub verdict: InnerVerdict,
}

/// Ratio `c` with `lhs = c · rhs`, when one exists.
fn proportional(lhs: &OneForm, rhs: &OneForm) -> Option<RatFunc> {
    let mut ratio: Option<RatFunc> = None;
    for (l, r) in lhs.0.iter().zip(&rhs.0) {
        for (w, rc) in r.terms() {
            let c = l.coeff(w).checked_div(rc).ok()?;
            match &ratio {
                None => ratio = Some(c),
                Some(prev) if *prev == c => {}
                Some(_) => return None,
            }
        }
    }
    let c = ratio.unwrap_or_else(RatFunc::zero);
    (lhs == &rhs.scale(&c)).then_some(c)
}

pub fn inner_commutators(calc: &FirstOrderCalculus) -> Result<InnerReport, CalcError> {
    let host = calc.host();
    let tr = calc.trace_form();
    let mut commutators = Vec::new();
    let mut diffs = Vec::new();
    let mut eigen = Vec::new();
    for k in 0..4 {
        let x = host.t(k / 2, k % 2);
        let c = &calc.right_mul(&tr, &x)? - &calc.left_mul(&x, &tr)?;
        diffs.push(calc.differential(&x)?);
        eigen.push(calc.left_mul(&x, &tr)?);
        commutators.push(c);
    }
    let common = |targets: &[OneForm]| -> Option<RatFunc> {
        let mut value: Option<RatFunc> = None;
        for (c, t) in commutators.iter().zip(targets) {
            let r = proportional(c, t)?;
            match &value {
                None => value = Some(r),
                Some(v) if *v == r => {}
                Some(_) => return None,
            }
        }
        value
    };
    let verdict = if commutators.iter().all(OneForm::is_zero) {
        InnerVerdict::CentralTrace
    } else if let Some(k) = common(&diffs) {
        InnerVerdict::Inner(k.recip()?)
    } else if let Some(l) = common(&eigen) {
        InnerVerdict::Eigen(l)
    } else {
        InnerVerdict::Neither
    };
    Ok(InnerReport { commutators, verdict })
}

/// `c` with `d𝒟 = c 𝒟 Tr_hΘ`, if the differential of the determinant has that shape.
pub fn determinant_differential(calc: &FirstOrderCalculus) -> Result<(OneForm, Option<RatFunc>), CalcError> {
    let host = calc.host();
    let det = host.determinant().clone();
    let dd = calc.differential(&det)?;
    let shape = calc.left_mul(&det, &calc.trace_form())?;
    let factor = if dd.is_zero() {
        Some(RatFunc::zero())
    } else {
        proportional(&dd, &shape)
    };
    Ok((dd, factor))
}

/// Result of reducing a four-dimensional calculus on SL_h(2) to three dimensions.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub alpha: [RatFunc; 3],
    pub calculus: FirstOrderCalculus,
}

/// Set g = h and 𝒟 = 1, impose θ₄ = α₁θ₁ + α₂θ₂ + α₃θ₃ and read off 3×3 ABCD matrices.
pub fn reduce_to_sl(calc: &FirstOrderCalculus) -> Result<Reduction, CalcError> {
    if calc.dim() != 4 {
        return Err(CalcError::NotReducible("calculus is not four-dimensional".into()));
    }
    let sl = HopfPresentation::sl();
    let alpha = super::calculus::reduction_coefficients(&sl)?;
    let at_sl = |m: &Matrix<RatFunc>| m.try_map(|e| e.substitute(Var::G, &RatFunc::h()));
    let big = [
        at_sl(&calc.matrices()[0])?,
        at_sl(&calc.matrices()[1])?,
        at_sl(&calc.matrices()[2])?,
        at_sl(&calc.matrices()[3])?,
    ];
    let mut small = Vec::with_capacity(4);
    for (k, f) in big.iter().enumerate() {
        // θ₄ x must equal Σᵢ αᵢ θᵢ x once θ₄ is eliminated on the right.
        for j in 0..3 {
            let lhs = &f[(3, j)] + &(&alpha[j] * &f[(3, 3)]);
            let rhs = (0..3).fold(RatFunc::zero(), |acc, i| {
                &acc + &(&alpha[i] * &(&f[(i, j)] + &(&alpha[j] * &f[(i, 3)])))
            });
            if lhs != rhs {
                return Err(CalcError::NotReducible(format!(
                    "matrix {} is incompatible with θ₄ = Σ αᵢθᵢ in column {}",
                    ["A", "B", "C", "D"][k],
                    j + 1
                )));
            }
        }
        small.push(Matrix::from_fn(3, 3, |i, j| &f[(i, j)] + &(&alpha[j] * &f[(i, 3)])));
    }
    let abcd: [Matrix<RatFunc>; 4] = small.try_into().expect("four matrices");
    let reduced = FirstOrderCalculus::new(sl, abcd, None)?;
    if !reduced.determinant_rep().is_identity() {
        return Err(CalcError::NotReducible("𝔇 ≠ I after setting 𝒟 = 1".into()));
    }
    let (dd, _) = determinant_differential(&reduced)?;
    if !dd.is_zero() {
        return Err(CalcError::NotReducible("d𝒟 ≠ 0".into()));
    }
    Ok(Reduction { alpha, calculus: reduced })
}

/// Whether the reduction reproduces the stored three-dimensional matrices.
pub fn matches_three_dim(calc: &FirstOrderCalculus) -> Result<bool, CalcError> {
    Ok(calc.matrices() == &family_matrices(Family::ThreeD, &RatFunc::zero())?)
}
