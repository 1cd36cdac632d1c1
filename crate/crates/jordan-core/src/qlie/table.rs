use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::QlieError;
use crate::exactalg::{Matrix, RatFunc, Var};
use crate::hopf::Check;
use crate::ncpoly::{standard_params, Alphabet, ExprParser, NCPoly, Word};

/// A bilinear bracket `[eᵢ, eₖ] = Σⱼ c_{ik,j} eⱼ` on a named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    names: Vec<String>,
    /// `c[d·i + k][j]`.
    c: Vec<Vec<RatFunc>>,
}

impl BracketTable {
    pub fn new(names: Vec<String>, c: Vec<Vec<RatFunc>>) -> Self {
        let d = names.len();
        assert_eq!(c.len(), d * d);
        assert!(c.iter().all(|v| v.len() == d));
        BracketTable { names, c }
    }

    /// Read `[x,y] = Σ coeff·basis` lines; every pair must appear exactly once.
    pub fn parse(names: &[&str], lines: &[&str]) -> Result<Self, QlieError> {
        let d = names.len();
        let alpha = Alphabet::new(names.iter().copied());
        let params = standard_params();
        let parser = ExprParser::new(&alpha, &params);
        let mut c: Vec<Option<Vec<RatFunc>>> = alloc::vec![None; d * d];
        for line in lines {
            let (i, k, rhs) = split_bracket_line(&alpha, line)?;
            let p = parser.parse(rhs).map_err(|e| QlieError::Parse(alloc::format!("{line}: {e}")))?;
            c[d * i + k] = Some(linear_coeffs(&p, d).ok_or_else(|| QlieError::NotLinear(line.to_string()))?);
        }
        let c = c
            .into_iter()
            .enumerate()
            .map(|(p, v)| v.ok_or_else(|| QlieError::Parse(alloc::format!("missing [{},{}]", names[p / d], names[p % d]))))
            .collect::<Result<_, _>>()?;
        Ok(BracketTable { names: names.iter().map(|s| s.to_string()).collect(), c })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn bracket(&self, i: usize, k: usize) -> &[RatFunc] {
        &self.c[self.dim() * i + k]
    }

    pub fn bracket_mut(&mut self, i: usize, k: usize) -> &mut [RatFunc] {
        let d = self.dim();
        &mut self.c[d * i + k]
    }

    /// The bracket extended bilinearly to coefficient vectors.
    pub fn bracket_of(&self, x: &[RatFunc], y: &[RatFunc]) -> Vec<RatFunc> {
        let d = self.dim();
        let mut out = alloc::vec![RatFunc::zero(); d];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (k, yk) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let w = xi * yk;
                for (o, cj) in out.iter_mut().zip(self.bracket(i, k)) {
                    if !cj.is_zero() {
                        *o = &*o + &(&w * cj);
                    }
                }
            }
        }
        out
    }

    /// The table on a new basis whose `a`-th element is `Σᵢ rows[(a, i)] eᵢ`.
    pub fn change_basis(&self, rows: &Matrix<RatFunc>, names: &[&str]) -> Result<BracketTable, QlieError> {
        let d = self.dim();
        let inv = rows.inverse().ok_or(QlieError::SingularBasisChange)?;
        let row = |a: usize| (0..d).map(|i| rows[(a, i)].clone()).collect::<Vec<_>>();
        let mut c = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                let v = self.bracket_of(&row(a), &row(b));
                c.push((0..d).map(|j| (0..d).fold(RatFunc::zero(), |acc, i| &acc + &(&v[i] * &inv[(i, j)]))).collect());
            }
        }
        Ok(BracketTable { names: names.iter().map(|s| s.to_string()).collect(), c })
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> BracketTable {
        BracketTable { names: self.names.clone(), c: self.c.iter().map(|v| v.iter().map(&f).collect()).collect() }
    }

    /// Every parameter set to zero.
    pub fn classical(&self) -> BracketTable {
        self.map_coeffs(|x| {
            [Var::H, Var::G, Var::Z]
                .iter()
                .try_fold(x.clone(), |acc, v| acc.substitute(*v, &RatFunc::zero()))
                .expect("regular at zero")
        })
    }

    /// `[eᵢ, eₖ] + [eₖ, eᵢ]` for `i ≤ k` vanishes once `h = g = z = 0`.
    pub fn h_antisymmetry(&self) -> Vec<Check> {
        let d = self.dim();
        let classical = self.classical();
        let mut out = Vec::new();
        for i in 0..d {
            for k in i..d {
                let holds = classical.bracket(i, k).iter().zip(classical.bracket(k, i)).all(|(x, y)| (x + y).is_zero());
                out.push(Check::new(
                    alloc::format!("[{a},{b}] + [{b},{a}] vanishes classically", a = self.names[i], b = self.names[k]),
                    holds,
                ));
            }
        }
        out
    }

    /// `[eᵢ, eₖ]` as a linear polynomial in the basis names.
    pub fn bracket_poly(&self, i: usize, k: usize) -> NCPoly {
        linear_poly(self.bracket(i, k))
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.names.iter().cloned())
    }

    pub fn entry_display(&self, i: usize, k: usize) -> String {
        let alpha = self.alphabet();
        alloc::format!("[{},{}] = {}", self.names[i], self.names[k], self.bracket_poly(i, k).show(&alpha))
    }
}

impl fmt::Display for BracketTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        for i in 0..d {
            for k in 0..d {
                writeln!(f, "{}", self.entry_display(i, k))?;
            }
        }
        Ok(())
    }
}

pub(crate) fn linear_poly(c: &[RatFunc]) -> NCPoly {
    NCPoly::from_terms(
        c.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (Word(alloc::vec![j as u8]), x.clone())),
    )
}

/// Coefficients of a polynomial made only of single letters.
pub(crate) fn linear_coeffs(p: &NCPoly, d: usize) -> Option<Vec<RatFunc>> {
    let mut out = alloc::vec![RatFunc::zero(); d];
    for (w, c) in p.terms() {
        let [s] = w.letters() else { return None };
        out[usize::from(*s)] = c.clone();
    }
    Some(out)
}

/// `"[x,y] = rhs"` into the two basis indices and the right-hand side.
pub(crate) fn split_bracket_line<'l>(alpha: &Alphabet, line: &'l str) -> Result<(usize, usize, &'l str), QlieError> {
    let bad = || QlieError::Parse(line.to_string());
    let (lhs, rhs) = line.split_once('=').ok_or_else(bad)?;
    let inner = lhs.trim().strip_prefix('[').and_then(|s| s.strip_suffix(']')).ok_or_else(bad)?;
    let (x, y) = inner.split_once(',').ok_or_else(bad)?;
    let index = |s: &str| alpha.sym(s.trim()).map(usize::from).ok_or_else(bad);
    Ok((index(x)?, index(y)?, rhs))
}
