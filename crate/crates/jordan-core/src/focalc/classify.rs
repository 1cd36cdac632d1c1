use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::calculus::{CalcError, FirstOrderCalculus};
use super::constraints::{generate, Constraint};
use super::families::family_matrices;
use super::Family;
use crate::exactalg::{rat, Matrix, MultiPoly, RatFunc, Var};
use crate::hopf::HopfPresentation;

const UNKNOWNS: usize = 36;
/// Field variables that stand in for unknowns left free by the linear stage.
const FREE_VARS: [Var; 2] = [Var::G, Var::Z];

/// Options for [`classify_3d`].
#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Nested case splits allowed while solving the quadratic residuals.
    pub split_depth: usize,
    /// Specialise h to this value before solving (`None` keeps h symbolic).
    pub h_value: Option<i64>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { split_depth: 2, h_value: None }
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyReport {
    pub unknowns: usize,
    /// Linear equations produced by the differential and covariance constraints.
    pub linear_equations: usize,
    pub linear_rank: usize,
    /// Unknowns left free after the linear stage.
    pub free_after_linear: usize,
    pub solutions: Vec<[Matrix<RatFunc>; 4]>,
    /// Whether the solutions are exactly the stored three-dimensional matrices.
    pub matches_known: bool,
}

fn unit_matrices(values: &[RatFunc]) -> [Matrix<RatFunc>; 4] {
    core::array::from_fn(|k| Matrix::from_fn(3, 3, |i, j| values[9 * k + 3 * i + j].clone()))
}

type Coeffs = BTreeMap<(usize, Vec<u8>), RatFunc>;

fn residual_coeffs(host: &HopfPresentation, values: &[RatFunc], which: &[Constraint]) -> Result<Coeffs, CalcError> {
    let calc = FirstOrderCalculus::new(host.clone(), unit_matrices(values), None)?;
    let mut out = BTreeMap::new();
    for (n, (_, _, value)) in generate(&calc, which)?.into_iter().enumerate() {
        for (key, c) in value.coefficients() {
            out.insert((n, key), c);
        }
    }
    Ok(out)
}

/// Determine every three-dimensional bicovariant calculus on SL_h(2) from an
/// unknown ABCD ansatz.
pub fn classify_3d(options: &ClassifyOptions) -> Result<ClassifyReport, CalcError> {
    let host = match options.h_value {
        None => HopfPresentation::sl(),
        Some(h) => HopfPresentation::sl_at(h),
    };
    let linear = [Constraint::Differential, Constraint::Covariance];

    // The differential and covariance equations are affine in the unknowns.
    let zero = alloc::vec![RatFunc::zero(); UNKNOWNS];
    let base = residual_coeffs(&host, &zero, &linear)?;
    let mut columns = Vec::with_capacity(UNKNOWNS);
    for u in 0..UNKNOWNS {
        let mut e = zero.clone();
        e[u] = RatFunc::one();
        columns.push(residual_coeffs(&host, &e, &linear)?);
    }
    let mut keys: Vec<&(usize, Vec<u8>)> = base.keys().chain(columns.iter().flat_map(|c| c.keys())).collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<Vec<RatFunc>> = keys
        .iter()
        .map(|k| {
            let b = base.get(*k).cloned().unwrap_or_else(RatFunc::zero);
            let mut row: Vec<RatFunc> = columns
                .iter()
                .map(|c| &c.get(*k).cloned().unwrap_or_else(RatFunc::zero) - &b)
                .collect();
            row.push(-&b);
            row
        })
        .collect();
    let linear_equations = rows.len();
    let (reduced, pivots) = Matrix::from_rows(rows).rref();
    if pivots.contains(&UNKNOWNS) {
        return Ok(ClassifyReport {
            unknowns: UNKNOWNS,
            linear_equations,
            linear_rank: pivots.len(),
            free_after_linear: 0,
            solutions: Vec::new(),
            matches_known: false,
        });
    }
    let free: Vec<usize> = (0..UNKNOWNS).filter(|u| !pivots.contains(u)).collect();
    if free.len() > FREE_VARS.len() {
        return Err(CalcError::Unresolved(format!(
            "{} unknowns remain free after the linear stage",
            free.len()
        )));
    }
    let mut general = alloc::vec![RatFunc::zero(); UNKNOWNS];
    for (&u, var) in free.iter().zip(FREE_VARS) {
        general[u] = RatFunc::var(var);
    }
    for (r, &p) in pivots.iter().enumerate() {
        let mut v = reduced[(r, UNKNOWNS)].clone();
        for (&u, var) in free.iter().zip(FREE_VARS) {
            v = &v - &(&reduced[(r, u)] * &RatFunc::var(var));
        }
        general[p] = v;
    }

    let vars: Vec<Var> = FREE_VARS[..free.len()].to_vec();
    let branches = solve_quadratic(&host, general, &vars, options.split_depth)?;
    let solutions: Vec<[Matrix<RatFunc>; 4]> = branches.iter().map(|v| unit_matrices(v)).collect();
    let known = family_matrices(Family::ThreeD, &RatFunc::zero())?;
    let known = match &options.h_value {
        None => known,
        Some(h) => {
            let h = RatFunc::from_int(*h);
            core::array::from_fn(|k| known[k].map(|e| e.substitute(Var::H, &h).expect("polynomial entry")))
        }
    };
    let matches_known = solutions.len() == 1 && solutions[0] == known;
    Ok(ClassifyReport {
        unknowns: UNKNOWNS,
        linear_equations,
        linear_rank: pivots.len(),
        free_after_linear: free.len(),
        solutions,
        matches_known,
    })
}

/// Numerators of the representation residuals at the given ansatz.
fn representation_residuals(host: &HopfPresentation, values: &[RatFunc]) -> Result<Vec<MultiPoly>, CalcError> {
    let coeffs = residual_coeffs(host, values, &[Constraint::Representation])?;
    let mut polys: Vec<MultiPoly> = coeffs.into_values().map(|c| c.numer().normalized_unit()).collect();
    let mut unique: Vec<MultiPoly> = Vec::new();
    for p in polys.drain(..) {
        if !unique.contains(&p) {
            unique.push(p);
        }
    }
    Ok(unique)
}

/// Solve the remaining polynomial equations in `vars`, branching on factors of a
/// linear leading coefficient at most `depth` times.
fn solve_quadratic(
    host: &HopfPresentation,
    values: Vec<RatFunc>,
    vars: &[Var],
    depth: usize,
) -> Result<Vec<Vec<RatFunc>>, CalcError> {
    let residuals = representation_residuals(host, &values)?;
    if residuals.is_empty() {
        if vars.is_empty() {
            return Ok(alloc::vec![values]);
        }
        return Err(CalcError::Unresolved(format!(
            "{} free parameter(s) survive every constraint",
            vars.len()
        )));
    }
    if residuals.iter().any(|p| vars.iter().all(|&v| p.degree_in(v) == 0)) {
        // A nonzero residual free of the unknowns: this branch is inconsistent.
        return Ok(Vec::new());
    }
    // Prefer an equation linear in one unknown with a coefficient free of the others.
    for p in &residuals {
        for &v in vars {
            if p.degree_in(v) != 1 {
                continue;
            }
            let c = p.coeffs_in(v);
            let (b, a) = (&c[0], &c[1]);
            if vars.iter().any(|&w| a.degree_in(w) > 0) {
                continue;
            }
            let value = RatFunc::new(b.scale(&rat(-1)), a.clone())?;
            return substitute_and_recurse(host, &values, vars, v, &value, depth);
        }
    }
    if depth == 0 {
        return Err(unresolved(&residuals));
    }
    // Split on a linear equation a v + b = 0 whose coefficient a is itself linear in another unknown.
    for p in &residuals {
        for &v in vars {
            if p.degree_in(v) != 1 {
                continue;
            }
            let c = p.coeffs_in(v);
            let (b, a) = (&c[0], &c[1]);
            let Some(&w) = vars.iter().find(|&&w| w != v && a.degree_in(w) == 1) else {
                continue;
            };
            let ca = a.coeffs_in(w);
            if vars.iter().any(|&x| ca[1].degree_in(x) > 0) {
                continue;
            }
            // Branch a = 0: fixes w.
            let w_root = RatFunc::new(ca[0].scale(&rat(-1)), ca[1].clone())?;
            let mut out = substitute_and_recurse(host, &values, vars, w, &w_root, depth - 1)?;
            // Branch a ≠ 0: v = -b/a, which leaves w free in the remaining equations.
            let v_value = RatFunc::new(b.scale(&rat(-1)), a.clone())?;
            let rest = substitute_and_recurse(host, &values, vars, v, &v_value, depth - 1)?;
            for sol in rest {
                if !out.contains(&sol) {
                    out.push(sol);
                }
            }
            return Ok(out);
        }
    }
    Err(unresolved(&residuals))
}

fn substitute_and_recurse(
    host: &HopfPresentation,
    values: &[RatFunc],
    vars: &[Var],
    v: Var,
    value: &RatFunc,
    depth: usize,
) -> Result<Vec<Vec<RatFunc>>, CalcError> {
    let next: Vec<RatFunc> = values.iter().map(|e| e.substitute(v, value)).collect::<Result<_, _>>()?;
    let rest: Vec<Var> = vars.iter().copied().filter(|&w| w != v).collect();
    solve_quadratic(host, next, &rest, depth)
}

fn unresolved(residuals: &[MultiPoly]) -> CalcError {
    let shown: Vec<String> = residuals.iter().take(6).map(|p| format!("{p}")).collect();
    CalcError::Unresolved(format!("nonlinear residual system: {}", shown.join(", ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn known_values() -> Vec<RatFunc> {
        let m = family_matrices(Family::ThreeD, &RatFunc::zero()).unwrap();
        m.iter().flat_map(|x| x.entries().map(|(_, _, e)| e.clone()).collect::<Vec<_>>()).collect()
    }

    #[test]
    fn quadratic_stage_recovers_entries() {
        for (u, w) in [(0, 4), (0, 27), (1, 9), (2, 35)] {
            let mut values = known_values();
            let expect = values.clone();
            values[u] = RatFunc::g();
            values[w] = RatFunc::z();
            let got = solve_quadratic(&HopfPresentation::sl(), values, &[Var::G, Var::Z], 2);
            match got {
                Ok(sols) => assert!(sols.contains(&expect), "{u} {w}: {}", sols.len()),
                Err(e) => panic!("{u} {w}: {e}"),
            }
        }
    }
}
