use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exactalg::{AlgError, Matrix, RatFunc};
use crate::hopf::{HopfError, HopfPresentation};
use crate::ncpoly::{Alphabet, NCPoly, RewriteError, Sym, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CalcError {
    #[error("𝒟-representation not invertible")]
    DeterminantNotInvertible,
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("generator {0} has no representation in this calculus")]
    Unrepresented(String),
    #[error("matrices must be square of size 3 or 4, got {0}")]
    BadDimension(usize),
    #[error("no reduction to three dimensions: {0}")]
    NotReducible(String),
    #[error("classification unresolved: {0}")]
    Unresolved(String),
}

impl From<RewriteError> for CalcError {
    fn from(e: RewriteError) -> Self {
        CalcError::Hopf(e.into())
    }
}

/// Which of the known calculi a [`FirstOrderCalculus`] was loaded from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    One,
    Two,
    Three,
    ThreeD,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::One, Family::Two, Family::Three, Family::ThreeD];

    pub fn dim(self) -> usize {
        match self {
            Family::ThreeD => 3,
            _ => 4,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::One => "1",
            Family::Two => "2",
            Family::Three => "3",
            Family::ThreeD => "3D",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl core::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" => Ok(Family::One),
            "2" => Ok(Family::Two),
            "3" => Ok(Family::Three),
            "3D" | "3d" => Ok(Family::ThreeD),
            _ => Err(alloc::format!("unknown family {s}")),
        }
    }
}

/// Square matrix with entries in a host algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgMatrix {
    n: usize,
    entries: Vec<NCPoly>,
}

impl AlgMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> NCPoly) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        AlgMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[i * self.n + j]
    }
}

/// A one-form `Σ qᵢ θᵢ`, coefficients on the left in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForm(pub Vec<NCPoly>);

impl OneForm {
    pub fn zero(dim: usize) -> Self {
        OneForm(alloc::vec![NCPoly::zero(); dim])
    }

    /// The invariant form `θᵢ`.
    pub fn theta(dim: usize, i: usize) -> Self {
        let mut f = Self::zero(dim);
        f.0[i] = NCPoly::one();
        f
    }

    pub fn from_scalars(c: &[RatFunc]) -> Self {
        OneForm(c.iter().map(|x| NCPoly::constant(x.clone())).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(NCPoly::is_zero)
    }

    pub fn coeff(&self, i: usize) -> &NCPoly {
        &self.0[i]
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        OneForm(self.0.iter().map(|q| q.scale(c)).collect())
    }

    /// Scalar coordinates, when every coefficient is a constant.
    pub fn as_scalars(&self) -> Option<Vec<RatFunc>> {
        self.0.iter().map(NCPoly::as_constant).collect()
    }

    pub fn show<'a>(&'a self, alpha: &'a Alphabet) -> OneFormDisplay<'a> {
        OneFormDisplay { form: self, alpha }
    }
}

impl core::ops::Add for &OneForm {
    type Output = OneForm;
    fn add(self, o: &OneForm) -> OneForm {
        OneForm(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl core::ops::Sub for &OneForm {
    type Output = OneForm;
    fn sub(self, o: &OneForm) -> OneForm {
        OneForm(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl core::ops::Neg for &OneForm {
    type Output = OneForm;
    fn neg(self) -> OneForm {
        OneForm(self.0.iter().map(|a| -a).collect())
    }
}

pub struct OneFormDisplay<'a> {
    form: &'a OneForm,
    alpha: &'a Alphabet,
}

impl fmt::Display for OneFormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, q) in self.form.0.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({}) θ{}", q.show(self.alpha), i + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A first-order bicovariant calculus: the functionals `f_ij` given by their values
/// `A, B, C, D` on the matrix generators, together with the right-coaction matrix `V`.
#[derive(Clone, Debug)]
pub struct FirstOrderCalculus {
    family: Option<Family>,
    host: HopfPresentation,
    abcd: [Matrix<RatFunc>; 4],
    det_rep: Matrix<RatFunc>,
    /// Rows θ₁..θ₄ written in the chosen basis.
    embed: Matrix<RatFunc>,
    gen_rep: Vec<Matrix<RatFunc>>,
    star: Vec<AlgMatrix>,
    right_star: Vec<AlgMatrix>,
    gen_diff: Vec<OneForm>,
    v: AlgMatrix,
}

impl FirstOrderCalculus {
    /// Assemble a calculus on `host` from its ABCD matrices. Size 4 uses the basis
    /// θ₁..θ₄; size 3 uses θ₁, θ₂, θ₃ with θ₄ fixed by the bi-invariant relation.
    /// 𝔇 must be invertible only when the host has an inverse-determinant generator.
    pub fn new(host: HopfPresentation, abcd: [Matrix<RatFunc>; 4], family: Option<Family>) -> Result<Self, CalcError> {
        let dim = abcd[0].rows();
        if !(dim == 3 || dim == 4) || abcd.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(CalcError::BadDimension(dim));
        }
        let embed = if dim == 4 {
            Matrix::identity(4)
        } else {
            three_dim_embedding(&host)?
        };
        let h = host.param("h").cloned().unwrap_or_else(RatFunc::h);
        let [a, b, c, d] = &abcd;
        let det_rep = a.mul(d).sub(&b.mul(c)).add(&a.mul(c).scale(&h));
        let alpha = host.alphabet().clone();
        let det_sym = single_symbol(host.determinant());
        let inv_sym = match (det_sym, host.has_antipode()) {
            (Some(s), true) => single_symbol(&host.antipode(&NCPoly::sym(s))?),
            _ => None,
        };
        let det_inv = match inv_sym {
            Some(_) => Some(det_rep.inverse().ok_or(CalcError::DeterminantNotInvertible)?),
            None => None,
        };
        let mut gen_rep = Vec::with_capacity(alpha.len());
        for s in alpha.syms() {
            let m = if let Some(k) = (0..4).find(|&k| host.t_sym(k / 2, k % 2) == s) {
                abcd[k].clone()
            } else if Some(s) == det_sym {
                det_rep.clone()
            } else if let (true, Some(inv)) = (Some(s) == inv_sym, &det_inv) {
                inv.clone()
            } else {
                return Err(CalcError::Unrepresented(alpha.name(s).into()));
            };
            gen_rep.push(m);
        }

        let mut calc = FirstOrderCalculus {
            family,
            host,
            abcd,
            det_rep,
            embed,
            gen_rep,
            star: Vec::new(),
            right_star: Vec::new(),
            gen_diff: Vec::new(),
            v: AlgMatrix { n: 0, entries: Vec::new() },
        };
        for s in alpha.syms() {
            let x = NCPoly::sym(s);
            let star = calc.star_direct(&x)?;
            let right = calc.right_star_direct(&x)?;
            calc.star.push(star);
            calc.right_star.push(right);
        }
        calc.v = calc.build_v()?;
        for s in alpha.syms() {
            let d = calc.generator_differential(s, det_sym, inv_sym)?;
            calc.gen_diff.push(d);
        }
        Ok(calc)
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn host(&self) -> &HopfPresentation {
        &self.host
    }

    pub fn dim(&self) -> usize {
        self.abcd[0].rows()
    }

    /// The matrices `A, B, C, D`.
    pub fn matrices(&self) -> &[Matrix<RatFunc>; 4] {
        &self.abcd
    }

    /// `𝔇 = AD − BC + hAC`.
    pub fn determinant_rep(&self) -> &Matrix<RatFunc> {
        &self.det_rep
    }

    /// How θ₁..θ₄ are expressed in the chosen basis (4 × dim).
    pub fn embedding(&self) -> &Matrix<RatFunc> {
        &self.embed
    }

    /// The right-coaction matrix `V`, `Δ_R(θᵢ) = Σⱼ θⱼ ⊗ vⱼᵢ`.
    pub fn v(&self) -> &AlgMatrix {
        &self.v
    }

    /// Copy with one ABCD entry shifted by `delta` (`k` = 0..3 for A..D).
    pub fn perturbed(&self, k: usize, i: usize, j: usize, delta: &RatFunc) -> Result<Self, CalcError> {
        let mut abcd = self.abcd.clone();
        abcd[k][(i, j)] = &abcd[k][(i, j)] + delta;
        FirstOrderCalculus::new(self.host.clone(), abcd, None)
    }

    /// Matrix `(f_ij(p))`.
    pub fn rep(&self, p: &NCPoly) -> Matrix<RatFunc> {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (w, c) in p.terms() {
            out = out.add(&self.rep_word(w).scale(c));
        }
        out
    }

    fn rep_word(&self, w: &Word) -> Matrix<RatFunc> {
        w.letters()
            .iter()
            .fold(Matrix::identity(self.dim()), |acc, &s| acc.mul(&self.gen_rep[usize::from(s)]))
    }

    /// `(f_ij ⋆ p)` computed in one step from the coproduct of `p`.
    pub fn star_direct(&self, p: &NCPoly) -> Result<AlgMatrix, CalcError> {
        let n = self.dim();
        let mut acc = alloc::vec![NCPoly::zero(); n * n];
        for (legs, c) in self.host.coproduct(p)?.terms() {
            let f = self.rep_word(&legs[1]);
            for (k, slot) in acc.iter_mut().enumerate() {
                let e = &f[(k / n, k % n)];
                if !e.is_zero() {
                    slot.add_term(legs[0].clone(), c * e);
                }
            }
        }
        Ok(AlgMatrix { n, entries: acc })
    }

    /// `(p ⋆ f_ij) = f_ij(p₍₁₎) p₍₂₎`.
    pub fn right_star_direct(&self, p: &NCPoly) -> Result<AlgMatrix, CalcError> {
        let n = self.dim();
        let mut acc = alloc::vec![NCPoly::zero(); n * n];
        for (legs, c) in self.host.coproduct(p)?.terms() {
            let f = self.rep_word(&legs[0]);
            for (k, slot) in acc.iter_mut().enumerate() {
                let e = &f[(k / n, k % n)];
                if !e.is_zero() {
                    slot.add_term(legs[1].clone(), c * e);
                }
            }
        }
        Ok(AlgMatrix { n, entries: acc })
    }

    /// `(f_ij ⋆ x)` for a generator.
    pub fn generator_star(&self, s: Sym) -> &AlgMatrix {
        &self.star[usize::from(s)]
    }

    /// `(x ⋆ f_ij)` for a generator.
    pub fn generator_right_star(&self, s: Sym) -> &AlgMatrix {
        &self.right_star[usize::from(s)]
    }

    /// `(f_ij ⋆ p)` built letter by letter from the generator tables.
    pub fn star(&self, p: &NCPoly) -> Result<AlgMatrix, CalcError> {
        let n = self.dim();
        let rows = (0..n)
            .map(|i| self.theta_commute(i, p))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AlgMatrix::from_fn(n, |i, j| rows[i].0[j].clone()))
    }

    /// `θᵢ · p` rewritten as `Σ qⱼ θⱼ`.
    pub fn theta_commute(&self, i: usize, p: &NCPoly) -> Result<OneForm, CalcError> {
        self.right_mul(&OneForm::theta(self.dim(), i), p)
    }

    /// `ω · p`.
    pub fn right_mul(&self, w: &OneForm, p: &NCPoly) -> Result<OneForm, CalcError> {
        let mut out = OneForm::zero(self.dim());
        for (word, c) in p.terms() {
            let mut acc = w.scale(c);
            for &s in word.letters() {
                acc = self.right_mul_gen(&acc, s)?;
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    fn right_mul_gen(&self, w: &OneForm, s: Sym) -> Result<OneForm, CalcError> {
        let n = self.dim();
        let star = &self.star[usize::from(s)];
        let mut out = alloc::vec![NCPoly::zero(); n];
        for (i, q) in w.0.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let e = star.get(i, j);
                if !e.is_zero() {
                    *slot += &(q * e);
                }
            }
        }
        self.normalize_form(&OneForm(out))
    }

    /// `p · ω`.
    pub fn left_mul(&self, p: &NCPoly, w: &OneForm) -> Result<OneForm, CalcError> {
        let coeffs = w.0.iter().map(|q| self.host.mul(p, q)).collect::<Result<Vec<_>, _>>()?;
        Ok(OneForm(coeffs))
    }

    pub fn normalize_form(&self, w: &OneForm) -> Result<OneForm, CalcError> {
        Ok(OneForm(w.0.iter().map(|q| self.host.normalize(q)).collect::<Result<Vec<_>, _>>()?))
    }

    /// `d p` by the Leibniz rule from the generator differentials.
    pub fn differential(&self, p: &NCPoly) -> Result<OneForm, CalcError> {
        let mut out = OneForm::zero(self.dim());
        for (word, c) in p.terms() {
            out = &out + &self.differential_word(word)?.scale(c);
        }
        Ok(out)
    }

    fn differential_word(&self, w: &Word) -> Result<OneForm, CalcError> {
        let mut prefix = NCPoly::one();
        let mut acc = OneForm::zero(self.dim());
        for &s in w.letters() {
            let moved = self.right_mul_gen(&acc, s)?;
            let fresh = self.left_mul(&prefix, &self.gen_diff[usize::from(s)])?;
            acc = &moved + &fresh;
            prefix = self.host.mul(&prefix, &NCPoly::sym(s))?;
        }
        Ok(acc)
    }

    /// `d T_ik = Σⱼ T_ij θ_(jk)` with θ₄ rewritten through the embedding in 3D.
    fn matrix_differential(&self, i: usize, k: usize) -> OneForm {
        let n = self.dim();
        let mut out = alloc::vec![NCPoly::zero(); n];
        for j in 0..2 {
            let t = self.host.t(i, j);
            for (m, slot) in out.iter_mut().enumerate() {
                let e = &self.embed[(2 * j + k, m)];
                if !e.is_zero() {
                    *slot += &t.scale(e);
                }
            }
        }
        OneForm(out)
    }

    fn generator_differential(&self, s: Sym, det: Option<Sym>, inv: Option<Sym>) -> Result<OneForm, CalcError> {
        if let Ok(d) = self.matrix_diff_of(s) {
            return Ok(d);
        }
        if Some(s) == det {
            return self.determinant_polynomial_diff();
        }
        if Some(s) == inv {
            let right = self.right_mul_gen(&self.determinant_polynomial_diff()?, s)?;
            return Ok(-&self.left_mul(&NCPoly::sym(s), &right)?);
        }
        Err(CalcError::Unrepresented(self.host.alphabet().name(s).into()))
    }

    /// Leibniz rule applied to the free polynomial `ad − bc + h ac`.
    fn determinant_polynomial_diff(&self) -> Result<OneForm, CalcError> {
        let h = self.host.param("h").cloned().unwrap_or_else(RatFunc::h);
        let t = |i, j| self.host.t(i, j);
        let poly = &(&(&t(0, 0) * &t(1, 1)) - &(&t(0, 1) * &t(1, 0))) + &(&t(0, 0) * &t(1, 0)).scale(&h);
        let mut out = OneForm::zero(self.dim());
        for (w, c) in poly.terms() {
            let [x, y] = [w.letters()[0], w.letters()[1]];
            let dx = self.right_mul_gen(&self.matrix_diff_of(x)?, y)?;
            let dy = self.left_mul(&NCPoly::sym(x), &self.matrix_diff_of(y)?)?;
            out = &out + &(&dx + &dy).scale(c);
        }
        self.normalize_form(&out)
    }

    fn matrix_diff_of(&self, s: Sym) -> Result<OneForm, CalcError> {
        (0..4)
            .find(|&k| self.host.t_sym(k / 2, k % 2) == s)
            .map(|k| self.matrix_differential(k / 2, k % 2))
            .ok_or_else(|| CalcError::Unrepresented(self.host.alphabet().name(s).into()))
    }

    /// Differential of a single generator.
    pub fn generator_diff(&self, s: Sym) -> &OneForm {
        &self.gen_diff[usize::from(s)]
    }

    fn build_v(&self) -> Result<AlgMatrix, CalcError> {
        let v4 = coaction_matrix(&self.host)?;
        let n = self.dim();
        Ok(AlgMatrix::from_fn(n, |m, i| {
            let mut e = NCPoly::zero();
            for j in 0..4 {
                let c = &self.embed[(j, m)];
                if !c.is_zero() {
                    e += &v4.get(j, i).scale(c);
                }
            }
            e
        }))
    }

    /// `Tr_hΘ = θ₁ + 2hθ₃ + θ₄` in the chosen basis; zero in three dimensions.
    pub fn trace_form(&self) -> OneForm {
        let h = self.host.param("h").cloned().unwrap_or_else(RatFunc::h);
        let g = self.host.param("g").cloned().unwrap_or_else(RatFunc::g);
        let tr = [RatFunc::one(), RatFunc::zero(), &h + &g, RatFunc::one()];
        let n = self.dim();
        let coords: Vec<RatFunc> = (0..n)
            .map(|m| {
                (0..4).fold(RatFunc::zero(), |acc, j| &acc + &(&tr[j] * &self.embed[(j, m)]))
            })
            .collect();
        OneForm::from_scalars(&coords)
    }
}

fn single_symbol(p: &NCPoly) -> Option<Sym> {
    match p.terms().next() {
        Some((w, c)) if p.len() == 1 && c.is_one() && w.len() == 1 => Some(w.letters()[0]),
        _ => None,
    }
}

/// `v_(st),(ik) = S(T_is) T_tk`, the right coaction on θ₁..θ₄ (θ index `2s + t`).
pub fn coaction_matrix(host: &HopfPresentation) -> Result<AlgMatrix, CalcError> {
    let mut entries = Vec::with_capacity(16);
    for row in 0..4 {
        let (s, t) = (row / 2, row % 2);
        for col in 0..4 {
            let (i, k) = (col / 2, col % 2);
            let si = host.antipode(&host.t(i, s))?;
            entries.push(host.mul(&si, &host.t(t, k))?);
        }
    }
    Ok(AlgMatrix { n: 4, entries })
}

/// Scalar vectors `w` with `Σᵢ v_jᵢ wᵢ = wⱼ`: the coefficients of the bi-invariant
/// combinations of θ₁..θ₄.
pub fn biinvariant_forms(host: &HopfPresentation) -> Result<Vec<Vec<RatFunc>>, CalcError> {
    let v = coaction_matrix(host)?;
    let mut words: Vec<Word> = Vec::new();
    for k in 0..16 {
        for (w, _) in v.entries[k].terms() {
            if !words.contains(w) {
                words.push(w.clone());
            }
        }
    }
    let mut rows = Vec::new();
    for j in 0..4 {
        for w in &words {
            let row: Vec<RatFunc> = (0..4)
                .map(|i| {
                    let c = v.get(j, i).coeff(w);
                    if w.is_empty() && i == j {
                        &c - &RatFunc::one()
                    } else {
                        c
                    }
                })
                .collect();
            rows.push(row);
        }
    }
    Ok(Matrix::from_rows(rows).nullspace())
}

/// θ₁..θ₃ basis with θ₄ = Σ αⱼθⱼ read off from the unique bi-invariant relation.
fn three_dim_embedding(host: &HopfPresentation) -> Result<Matrix<RatFunc>, CalcError> {
    let alpha = reduction_coefficients(host)?;
    Ok(Matrix::from_fn(4, 3, |r, c| {
        if r < 3 {
            if r == c {
                RatFunc::one()
            } else {
                RatFunc::zero()
            }
        } else {
            alpha[c].clone()
        }
    }))
}

/// The coefficients α with θ₄ = α₁θ₁ + α₂θ₂ + α₃θ₃ compatible with the right coaction.
pub fn reduction_coefficients(host: &HopfPresentation) -> Result<[RatFunc; 3], CalcError> {
    let forms = biinvariant_forms(host)?;
    let [w] = forms.as_slice() else {
        return Err(CalcError::NotReducible(alloc::format!(
            "{} bi-invariant forms instead of one",
            forms.len()
        )));
    };
    let w4 = w[3].clone();
    if w4.is_zero() {
        return Err(CalcError::NotReducible("θ₄ absent from the bi-invariant form".into()));
    }
    let a = |k: usize| -> Result<RatFunc, CalcError> { Ok((-&w[k]).checked_div(&w4)?) };
    Ok([a(0)?, a(1)?, a(2)?])
}
