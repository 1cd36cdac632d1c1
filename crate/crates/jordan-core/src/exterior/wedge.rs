use alloc::format;
use alloc::vec::Vec;

use super::braid::{antisymmetrizer, lambda, sample_point, BraidMatrix};
use super::ExteriorError;
use crate::exactalg::{Fp, Matrix, RatFunc};
use crate::focalc::{FirstOrderCalculus, OneForm};
use crate::ncpoly::{Alphabet, MonomialOrder, NCPoly, RewriteSystem, Rule, Word};

/// Sum `Σ p_st θₛ ⊗ θₜ` with left algebra coefficients, pair index `d·s + t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoForm {
    dim: usize,
    coeffs: Vec<NCPoly>,
}

impl TwoForm {
    pub fn zero(dim: usize) -> Self {
        TwoForm { dim, coeffs: alloc::vec![NCPoly::zero(); dim * dim] }
    }

    pub fn from_scalars(dim: usize, c: &[RatFunc]) -> Self {
        TwoForm { dim, coeffs: c.iter().cloned().map(NCPoly::constant).collect() }
    }

    pub fn coeff(&self, s: usize, t: usize) -> &NCPoly {
        &self.coeffs[self.dim * s + t]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(NCPoly::is_zero)
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<NCPoly>) -> Self {
        assert_eq!(coeffs.len(), dim * dim);
        TwoForm { dim, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn plus(&self, other: &TwoForm) -> TwoForm {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x + y).collect();
        TwoForm { dim: self.dim, coeffs }
    }

    pub fn minus(&self, other: &TwoForm) -> TwoForm {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x - y).collect();
        TwoForm { dim: self.dim, coeffs }
    }

    pub fn scaled(&self, c: &RatFunc) -> TwoForm {
        TwoForm { dim: self.dim, coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    fn add_at(&mut self, s: usize, t: usize, p: &NCPoly) {
        self.coeffs[self.dim * s + t] += p;
    }

    /// Scalar relations `Σ c_st θₛ∧θₜ = 0`, one per algebra word.
    pub fn split_by_word(&self) -> Vec<Vec<RatFunc>> {
        let mut words: Vec<&Word> = self.coeffs.iter().flat_map(|p| p.terms().map(|(w, _)| w)).collect();
        words.sort();
        words.dedup();
        words
            .into_iter()
            .map(|w| self.coeffs.iter().map(|p| p.coeff(w)).collect())
            .collect()
    }

    /// Coefficients when every coefficient is a scalar.
    pub fn as_scalars(&self) -> Option<Vec<RatFunc>> {
        self.coeffs.iter().map(NCPoly::as_constant).collect()
    }
}

/// `(θₛ ⊗ θₜ)·x` rewritten with left coefficients.
pub fn pair_times(calc: &FirstOrderCalculus, s: usize, t: usize, x: &NCPoly) -> Result<TwoForm, ExteriorError> {
    let d = calc.dim();
    let mut out = TwoForm::zero(d);
    let inner = calc.theta_commute(t, x)?;
    for (u, p) in inner.0.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let outer = calc.theta_commute(s, p)?;
        for (w, q) in outer.0.iter().enumerate() {
            out.add_at(w, u, q);
        }
    }
    Ok(out)
}

/// `ω·x` for a 2-form `ω`.
pub fn two_form_times(calc: &FirstOrderCalculus, form: &TwoForm, x: &NCPoly) -> Result<TwoForm, ExteriorError> {
    let host = calc.host();
    let d = calc.dim();
    let mut out = TwoForm::zero(d);
    for s in 0..d {
        for t in 0..d {
            let p = form.coeff(s, t);
            if p.is_zero() {
                continue;
            }
            let moved = pair_times(calc, s, t, x)?;
            for (k, q) in moved.coeffs.iter().enumerate() {
                if !q.is_zero() {
                    out.coeffs[k] += &host.mul(p, q)?;
                }
            }
        }
    }
    Ok(out)
}

/// `x·ω`.
fn times_two_form(calc: &FirstOrderCalculus, x: &NCPoly, form: &TwoForm) -> Result<TwoForm, ExteriorError> {
    let host = calc.host();
    let coeffs = form.coeffs.iter().map(|p| host.mul(x, p)).collect::<Result<_, _>>()?;
    Ok(TwoForm { dim: form.dim, coeffs })
}

/// Cartan–Maurer constants: `dθₖ = −Σ 𝒞_{jl,k} θⱼ∧θₗ`, read off from `dΘ = −Θ∧Θ` for
/// `Θ = ((θ₁, θ₂), (θ₃, θ₄))` written in the calculus basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMaurer {
    dim: usize,
    /// `c[k][(j, l)] = 𝒞_{jl,k}`.
    c: Vec<Matrix<RatFunc>>,
    /// Leftover component `(Θ∧Θ)₂₂ − Σ αₖ (Θ∧Θ)ₖ` that must vanish in three dimensions.
    constraint: Option<Vec<RatFunc>>,
}

impl CartanMaurer {
    /// Constants given directly, `c[k][(j, l)] = 𝒞_{jl,k}`.
    pub fn from_matrices(c: Vec<Matrix<RatFunc>>) -> Self {
        CartanMaurer { dim: c.len(), c, constraint: None }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, j: usize, l: usize, k: usize) -> &RatFunc {
        &self.c[k][(j, l)]
    }

    pub fn matrix(&self, k: usize) -> &Matrix<RatFunc> {
        &self.c[k]
    }

    /// `Σ 𝒞_{jl,k} θⱼ ⊗ θₗ` as coefficients.
    pub fn component(&self, k: usize) -> Vec<RatFunc> {
        let d = self.dim;
        (0..d * d).map(|p| self.c[k][(p / d, p % d)].clone()).collect()
    }

    /// The extra quadratic relation among the θ's forced in three dimensions.
    pub fn constraint(&self) -> Option<&[RatFunc]> {
        self.constraint.as_deref()
    }
}

pub fn cartan_maurer(calc: &FirstOrderCalculus) -> CartanMaurer {
    let d = calc.dim();
    let embed = calc.embedding();
    // (Θ∧Θ)_{pr} = Σ_q Θ_pq ⊗ Θ_qr
    let square = |p: usize, r: usize| -> Vec<RatFunc> {
        let mut out = alloc::vec![RatFunc::zero(); d * d];
        for q in 0..2 {
            let (x, y) = (2 * p + q, 2 * q + r);
            for j in 0..d {
                for l in 0..d {
                    let c = &embed[(x, j)] * &embed[(y, l)];
                    if !c.is_zero() {
                        out[d * j + l] = &out[d * j + l] + &c;
                    }
                }
            }
        }
        out
    };
    let entries: Vec<Vec<RatFunc>> = (0..4).map(|k| square(k / 2, k % 2)).collect();
    let c = (0..d)
        .map(|k| Matrix::from_fn(d, d, |j, l| entries[k][d * j + l].clone()))
        .collect();
    let constraint = (d == 3).then(|| {
        (0..d * d)
            .map(|p| {
                (0..3).fold(entries[3][p].clone(), |acc, k| &acc - &(&embed[(3, k)] * &entries[k][p]))
            })
            .collect()
    });
    CartanMaurer { dim: d, c, constraint }
}

fn d_theta(cm: &CartanMaurer, i: usize) -> TwoForm {
    let c: Vec<RatFunc> = cm.component(i).iter().map(|x| -x).collect();
    TwoForm::from_scalars(cm.dim, &c)
}

/// `ω ∧ θⱼ` for a 1-form `ω`.
fn form_wedge_theta(form: &OneForm, j: usize) -> TwoForm {
    let d = form.dim();
    let mut out = TwoForm::zero(d);
    for (s, p) in form.0.iter().enumerate() {
        out.add_at(s, j, p);
    }
    out
}

/// `θᵢ ∧ ω` for a 1-form `ω`.
fn theta_wedge_form(calc: &FirstOrderCalculus, i: usize, form: &OneForm) -> Result<TwoForm, ExteriorError> {
    let d = form.dim();
    let mut out = TwoForm::zero(d);
    for (t, q) in form.0.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        for (u, p) in calc.theta_commute(i, q)?.0.iter().enumerate() {
            out.add_at(u, t, p);
        }
    }
    Ok(out)
}

/// Relations among the θₛ∧θₜ obtained by differentiating `θᵢ x = Σⱼ (fᵢⱼ⋆x) θⱼ` for every
/// matrix generator `x`.
pub fn differentiated_relations(calc: &FirstOrderCalculus, cm: &CartanMaurer) -> Result<Vec<Vec<RatFunc>>, ExteriorError> {
    let host = calc.host();
    let d = calc.dim();
    let mut out = Vec::new();
    for k in 0..4 {
        let x = host.t(k / 2, k % 2);
        let dx = calc.differential(&x)?;
        let star = calc.generator_star(host.t_sym(k / 2, k % 2));
        for i in 0..d {
            // d(θᵢ x) = dθᵢ·x − θᵢ∧dx
            let lhs = two_form_times(calc, &d_theta(cm, i), &x)?.minus(&theta_wedge_form(calc, i, &dx)?);
            // d((fᵢⱼ⋆x) θⱼ) = d(fᵢⱼ⋆x)∧θⱼ + (fᵢⱼ⋆x) dθⱼ
            let mut rhs = TwoForm::zero(d);
            for j in 0..d {
                let p = star.get(i, j);
                if p.is_zero() {
                    continue;
                }
                rhs = rhs.plus(&form_wedge_theta(&calc.differential(p)?, j));
                rhs = rhs.plus(&times_two_form(calc, p, &d_theta(cm, j))?);
            }
            out.extend(lhs.minus(&rhs).split_by_word());
        }
    }
    Ok(out)
}

/// Relations from the kernel of `id − Λ`.
pub fn braid_kernel_relations(lambda: &BraidMatrix) -> Vec<Vec<RatFunc>> {
    let n = lambda.dim() * lambda.dim();
    Matrix::identity(n).sub(lambda.operator()).nullspace()
}

/// Preferred order of the θ's in the ordered wedge basis.
pub fn basis_order(dim: usize) -> &'static [usize] {
    if dim == 4 {
        &[1, 0, 3, 2]
    } else {
        &[1, 0, 2]
    }
}

/// Mis-ordered products θᵢ∧θⱼ expressed over the ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeRelations {
    dim: usize,
    /// `(i, j, rhs)` with `rhs` indexed like pair coefficients.
    rules: Vec<(usize, usize, Vec<RatFunc>)>,
}

impl WedgeRelations {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rules(&self) -> impl Iterator<Item = (usize, usize, &[RatFunc])> {
        self.rules.iter().map(|(i, j, r)| (*i, *j, r.as_slice()))
    }

    /// Right-hand side for θᵢ∧θⱼ, or `None` if the pair is already ordered.
    pub fn rhs(&self, i: usize, j: usize) -> Option<&[RatFunc]> {
        self.rules.iter().find(|(a, b, _)| (*a, *b) == (i, j)).map(|(_, _, r)| r.as_slice())
    }

    /// Letters `θ1 … θd`.
    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new((1..=self.dim).map(|i| format!("θ{i}")))
    }

    /// The relations as a terminating rewrite system on words in the θ's.
    pub fn rewrite_system(&self) -> Result<RewriteSystem, ExteriorError> {
        let alpha = self.alphabet();
        let names = alpha.names().to_vec();
        let order: Vec<&str> = basis_order(self.dim).iter().map(|&i| names[i].as_str()).collect();
        let weights: Vec<(&str, u32)> = basis_order(self.dim)
            .iter()
            .zip(basis_weights(self.dim))
            .map(|(&i, &w)| (names[i].as_str(), w))
            .collect();
        let mono = MonomialOrder::new(&alpha, &order, &weights).map_err(crate::focalc::CalcError::from)?;
        let rules = self
            .rules
            .iter()
            .map(|(i, j, rhs)| Rule {
                lhs: Word(alloc::vec![*i as u8, *j as u8]),
                rhs: pair_poly(self.dim, rhs),
            })
            .collect();
        Ok(RewriteSystem::new(alpha, mono, rules).map_err(crate::focalc::CalcError::from)?)
    }
}

/// Weights along [`basis_order`] making every mis-ordered product the leading word.
fn basis_weights(dim: usize) -> &'static [u32] {
    if dim == 4 {
        &[2, 1, 1, 0]
    } else {
        &[2, 1, 0]
    }
}

/// `Σ c_st θₛθₜ` as a noncommutative polynomial in the θ letters.
pub fn pair_poly(dim: usize, c: &[RatFunc]) -> NCPoly {
    NCPoly::from_terms(
        c.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(p, x)| (Word(alloc::vec![(p / dim) as u8, (p % dim) as u8]), x.clone())),
    )
}

fn is_ordered(dim: usize, i: usize, j: usize) -> bool {
    let pos = |x| basis_order(dim).iter().position(|&y| y == x).expect("index in range");
    pos(i) < pos(j)
}

/// Solve a spanning set of relations for the mis-ordered products.
pub fn solve_relations(dim: usize, relations: &[Vec<RatFunc>]) -> Result<WedgeRelations, ExteriorError> {
    let pairs: Vec<(usize, usize)> = (0..dim).flat_map(|i| (0..dim).map(move |j| (i, j))).collect();
    let (mis, ord): (Vec<_>, Vec<_>) = pairs.iter().copied().partition(|&(i, j)| !is_ordered(dim, i, j));
    let columns: Vec<(usize, usize)> = mis.iter().chain(&ord).copied().collect();
    let rows: Vec<Vec<RatFunc>> = relations
        .iter()
        .map(|r| columns.iter().map(|&(i, j)| r[dim * i + j].clone()).collect())
        .collect();
    if rows.is_empty() {
        return Err(ExteriorError::Underdetermined { rank: 0, expected: mis.len() });
    }
    let (reduced, pivots) = Matrix::from_rows(rows).rref();
    if pivots.len() != mis.len() || pivots.iter().enumerate().any(|(k, &p)| k != p) {
        return Err(ExteriorError::Underdetermined { rank: pivots.len(), expected: mis.len() });
    }
    let rules = mis
        .iter()
        .enumerate()
        .map(|(r, &(i, j))| {
            let mut rhs = alloc::vec![RatFunc::zero(); dim * dim];
            for (c, &(s, t)) in ord.iter().enumerate() {
                rhs[dim * s + t] = -&reduced[(r, mis.len() + c)];
            }
            (i, j, rhs)
        })
        .collect();
    Ok(WedgeRelations { dim, rules })
}

/// Wedge relations of a calculus from differentiated commutation rules, checked against
/// the kernel of `id − Λ`.
pub fn wedge_relations(calc: &FirstOrderCalculus, cm: &CartanMaurer) -> Result<WedgeRelations, ExteriorError> {
    let from_diff = solve_relations(calc.dim(), &differentiated_relations(calc, cm)?)?;
    let from_braid = solve_relations(calc.dim(), &braid_kernel_relations(&lambda(calc)))?;
    if from_diff != from_braid {
        return Err(ExteriorError::Inconsistent("differentiated relations differ from ker(id − Λ)".into()));
    }
    Ok(from_diff)
}

/// Rank of `Wₙ`, certified from both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub n: usize,
    /// Rank modulo p at the sample point: a lower bound for the generic rank.
    pub lower: usize,
    /// Normal words of the wedge rewrite system in degree n: an upper bound.
    pub upper: usize,
    /// `dⁿ − lower`, the nullity at the sample point.
    pub nullity: usize,
}

impl RankCertificate {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

/// Ranks of `W₁ … W_d`.
///
/// `Wₙ` factors through `id − Λ` on every adjacent pair once the braid equation holds, so the
/// degree-n words left irreducible by the wedge relations span its image.
pub fn exterior_ranks(lambda: &BraidMatrix, rels: &WedgeRelations) -> Result<Vec<RankCertificate>, ExteriorError> {
    let d = lambda.dim();
    let op: Matrix<Fp> = lambda.at_point(&sample_point())?;
    let rs = rels.rewrite_system()?;
    (1..=d)
        .map(|n| {
            let w = antisymmetrizer(&op, d, n);
            let lower = w.rank();
            Ok(RankCertificate { n, lower, upper: rs.normal_words(n).len(), nullity: w.cols() - lower })
        })
        .collect()
}

/// Exact symbolic rank of `W₂ = id − Λ`.
pub fn symbolic_rank_two(lambda: &BraidMatrix) -> usize {
    let n = lambda.dim() * lambda.dim();
    n - braid_kernel_relations(lambda).len()
}
