use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::exactalg::RatFunc;
use crate::ncpoly::{
    Alphabet, ExprParser, MonomialOrder, NCPoly, ParseError, RewriteError, RewriteSystem, Rule, Sym,
    TensorNCPoly, Word,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("presentation {0} has no antipode")]
    NoAntipode(String),
    #[error("generator {0} has no coproduct")]
    MissingCoproduct(String),
}

/// Which structure map to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureMap {
    Coproduct,
    Counit,
    Antipode,
}

/// Value of a structure map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapValue {
    Tensor(TensorNCPoly),
    Scalar(RatFunc),
    Element(NCPoly),
}

/// A Hopf algebra (or bialgebra) given by generators, a confluent rewrite system and
/// structure tables on generators.
#[derive(Clone, Debug)]
pub struct HopfPresentation {
    name: String,
    rs: RewriteSystem,
    params: Vec<(String, RatFunc)>,
    matrix: [Sym; 4],
    coproduct: Vec<TensorNCPoly>,
    counit: Vec<RatFunc>,
    antipode: Option<Vec<NCPoly>>,
    determinant: NCPoly,
}

const MATRIX_BIALGEBRA: &str = include_str!("../../presentations/matrix_bialgebra.pres");
const GL: &str = include_str!("../../presentations/gl.pres");
const SL: &str = include_str!("../../presentations/sl.pres");

impl HopfPresentation {
    pub fn matrix_bialgebra() -> Self {
        Self::from_text(MATRIX_BIALGEBRA).expect("builtin presentation")
    }

    pub fn gl() -> Self {
        Self::from_text(GL).expect("builtin presentation")
    }

    pub fn sl() -> Self {
        Self::from_text(SL).expect("builtin presentation")
    }

    /// SL_h(2) with h fixed to an integer.
    pub fn sl_at(h: i64) -> Self {
        Self::from_text(&alloc::format!("bind h {h}\n{SL}")).expect("builtin presentation")
    }

    /// Read the line-oriented presentation format.
    ///
    /// Directives: `name`, `generators`, `order`, `weight SYM N`, `bind PARAM EXPR`,
    /// `matrix A B C D`, `grouplike SYM...`, `rule LHS = RHS`, `antipode SYM = EXPR`,
    /// `determinant EXPR`. `#` starts a comment.
    pub fn from_text(src: &str) -> Result<Self, HopfError> {
        let mut name = String::new();
        let mut gens: Vec<String> = Vec::new();
        let mut order: Vec<String> = Vec::new();
        let mut weights: Vec<(String, u32)> = Vec::new();
        let mut binds: Vec<(String, String)> = Vec::new();
        let mut matrix: Option<[String; 4]> = None;
        let mut grouplike: Vec<String> = Vec::new();
        let mut rules: Vec<(String, String)> = Vec::new();
        let mut antipode: Vec<(String, String)> = Vec::new();
        let mut determinant: Option<String> = None;

        for (n, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| HopfError::Syntax { line: n + 1, msg: msg.to_string() };
            let (key, rest) = line.split_once(char::is_whitespace).ok_or_else(|| err("missing argument"))?;
            let rest = rest.trim();
            let words = || rest.split_whitespace().map(String::from).collect::<Vec<_>>();
            let equation = || {
                rest.split_once('=')
                    .map(|(l, r)| (l.trim().to_string(), r.trim().to_string()))
                    .ok_or_else(|| err("expected LHS = RHS"))
            };
            match key {
                "name" => name = rest.to_string(),
                "generators" => gens = words(),
                "order" => order = words(),
                "weight" => {
                    let w = words();
                    let [s, v] = w.as_slice() else { return Err(err("expected SYM N")) };
                    weights.push((s.clone(), v.parse().map_err(|_| err("bad weight"))?));
                }
                "bind" => {
                    let (p, e) = rest.split_once(char::is_whitespace).ok_or_else(|| err("expected PARAM EXPR"))?;
                    binds.push((p.to_string(), e.trim().to_string()));
                }
                "matrix" => {
                    let w = words();
                    matrix = Some(w.try_into().map_err(|_| err("matrix needs four generators"))?);
                }
                "grouplike" => grouplike.extend(words()),
                "rule" => rules.push(equation()?),
                "antipode" => antipode.push(equation()?),
                "determinant" => determinant = Some(rest.to_string()),
                _ => return Err(err("unknown directive")),
            }
        }
        let syntax = |msg: &str| HopfError::Syntax { line: 0, msg: msg.to_string() };
        if gens.is_empty() {
            return Err(syntax("no generators"));
        }
        let alpha = Alphabet::new(gens.iter().cloned());
        let order_refs: Vec<&str> = if order.is_empty() {
            gens.iter().map(String::as_str).collect()
        } else {
            order.iter().map(String::as_str).collect()
        };
        let weight_refs: Vec<(&str, u32)> = weights.iter().map(|(s, w)| (s.as_str(), *w)).collect();
        let mono = MonomialOrder::new(&alpha, &order_refs, &weight_refs)?;

        let mut params: Vec<(String, RatFunc)> = alloc::vec![
            ("h".into(), RatFunc::h()),
            ("g".into(), RatFunc::g()),
            ("z".into(), RatFunc::z()),
        ];
        for (p, e) in &binds {
            let v = with_params(&params, |ps| ExprParser::new(&Alphabet::empty(), ps).parse_scalar(e))?;
            match params.iter_mut().find(|(n, _)| n == p) {
                Some(slot) => slot.1 = v,
                None => params.push((p.clone(), v)),
            }
        }
        let parse = |s: &str| with_params(&params, |ps| ExprParser::new(&alpha, ps).parse(s));

        let mut rule_list = Vec::with_capacity(rules.len());
        for (l, r) in &rules {
            let lhs = parse(l)?;
            let lw = match lhs.terms().next() {
                Some((w, c)) if lhs.len() == 1 && c.is_one() => w.clone(),
                _ => return Err(syntax("rule left side must be a single word")),
            };
            rule_list.push(Rule { lhs: lw, rhs: parse(r)? });
        }
        let rs = RewriteSystem::new(alpha.clone(), mono, rule_list)?;

        let m = matrix.ok_or_else(|| syntax("missing matrix directive"))?;
        let msym = |k: usize| alpha.sym(&m[k]).ok_or_else(|| syntax("unknown matrix generator"));
        let msyms = [msym(0)?, msym(1)?, msym(2)?, msym(3)?];

        let mut coproduct: Vec<Option<TensorNCPoly>> = alloc::vec![None; alpha.len()];
        let mut counit: Vec<RatFunc> = alloc::vec![RatFunc::zero(); alpha.len()];
        for i in 0..2 {
            for j in 0..2 {
                let mut t = TensorNCPoly::zero();
                for k in 0..2 {
                    t = &t + &TensorNCPoly::term(
                        RatFunc::one(),
                        alloc::vec![Word::single(msyms[2 * i + k]), Word::single(msyms[2 * k + j])],
                    );
                }
                coproduct[usize::from(msyms[2 * i + j])] = Some(t);
                if i == j {
                    counit[usize::from(msyms[2 * i + j])] = RatFunc::one();
                }
            }
        }
        for gname in &grouplike {
            let s = alpha.sym(gname).ok_or_else(|| syntax("unknown grouplike generator"))?;
            coproduct[usize::from(s)] = Some(TensorNCPoly::term(
                RatFunc::one(),
                alloc::vec![Word::single(s), Word::single(s)],
            ));
            counit[usize::from(s)] = RatFunc::one();
        }
        let coproduct = coproduct
            .into_iter()
            .enumerate()
            .map(|(k, t)| {
                t.ok_or_else(|| HopfError::MissingCoproduct(alpha.names()[k].clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;

        let antipode = if antipode.is_empty() {
            None
        } else {
            let mut table: Vec<Option<NCPoly>> = alloc::vec![None; alpha.len()];
            for (l, r) in &antipode {
                let s = alpha.sym(l).ok_or_else(|| syntax("unknown antipode generator"))?;
                table[usize::from(s)] = Some(rs.normalize(&parse(r)?)?);
            }
            Some(
                table
                    .into_iter()
                    .enumerate()
                    .map(|(k, t)| t.ok_or_else(|| syntax(&alloc::format!("antipode missing for {}", alpha.names()[k]))))
                    .collect::<Result<Vec<_>, _>>()?,
            )
        };
        let determinant = rs.normalize(&parse(determinant.as_deref().ok_or_else(|| syntax("missing determinant"))?)?)?;

        Ok(HopfPresentation {
            name,
            rs,
            params,
            matrix: msyms,
            coproduct,
            counit,
            antipode,
            determinant,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rewrite(&self) -> &RewriteSystem {
        &self.rs
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.rs.alphabet()
    }

    pub fn has_antipode(&self) -> bool {
        self.antipode.is_some()
    }

    /// Value bound to a parameter name (after any `bind`).
    pub fn param(&self, name: &str) -> Option<&RatFunc> {
        self.params.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    /// Parse an expression with this presentation's parameters, in normal form.
    pub fn parse(&self, src: &str) -> Result<NCPoly, HopfError> {
        let p = with_params(&self.params, |ps| ExprParser::new(self.alphabet(), ps).parse(src))?;
        Ok(self.rs.normalize(&p)?)
    }

    /// Parse a scalar expression with this presentation's parameters.
    pub fn parse_scalar(&self, src: &str) -> Result<RatFunc, HopfError> {
        Ok(with_params(&self.params, |ps| ExprParser::new(&Alphabet::empty(), ps).parse_scalar(src))?)
    }

    pub fn normalize(&self, p: &NCPoly) -> Result<NCPoly, HopfError> {
        Ok(self.rs.normalize(p)?)
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly, HopfError> {
        Ok(self.rs.mul(a, b)?)
    }

    /// Entry `T_ij` of the generator matrix.
    pub fn t(&self, i: usize, j: usize) -> NCPoly {
        NCPoly::sym(self.matrix[2 * i + j])
    }

    pub fn t_sym(&self, i: usize, j: usize) -> Sym {
        self.matrix[2 * i + j]
    }

    pub fn gen(&self, name: &str) -> Option<NCPoly> {
        self.alphabet().sym(name).map(NCPoly::sym)
    }

    /// The element playing the role of the quantum determinant, in normal form.
    pub fn determinant(&self) -> &NCPoly {
        &self.determinant
    }

    /// Multiplicative extension of the coproduct table, both legs normalized.
    pub fn coproduct(&self, p: &NCPoly) -> Result<TensorNCPoly, HopfError> {
        let mut out = TensorNCPoly::zero();
        for (w, c) in p.terms() {
            out = &out + &self.coproduct_word(w)?.scale(c);
        }
        Ok(out)
    }

    fn coproduct_word(&self, w: &Word) -> Result<TensorNCPoly, HopfError> {
        let mut acc = TensorNCPoly::one(2);
        for &s in w.letters() {
            acc = (&acc * &self.coproduct[usize::from(s)]).normalize(&self.rs)?;
        }
        Ok(acc)
    }

    pub fn counit(&self, p: &NCPoly) -> RatFunc {
        p.terms().fold(RatFunc::zero(), |acc, (w, c)| {
            let v = w
                .letters()
                .iter()
                .fold(c.clone(), |x, &s| &x * &self.counit[usize::from(s)]);
            &acc + &v
        })
    }

    /// Anti-multiplicative extension of the antipode table.
    pub fn antipode(&self, p: &NCPoly) -> Result<NCPoly, HopfError> {
        let table = self
            .antipode
            .as_ref()
            .ok_or_else(|| HopfError::NoAntipode(self.name.clone()))?;
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = NCPoly::constant(c.clone());
            for &s in w.letters().iter().rev() {
                acc = self.rs.mul(&acc, &table[usize::from(s)])?;
            }
            out += &acc;
        }
        Ok(out)
    }

    pub fn structure_map(&self, p: &NCPoly, which: StructureMap) -> Result<MapValue, HopfError> {
        Ok(match which {
            StructureMap::Coproduct => MapValue::Tensor(self.coproduct(p)?),
            StructureMap::Counit => MapValue::Scalar(self.counit(p)),
            StructureMap::Antipode => MapValue::Element(self.antipode(p)?),
        })
    }

    /// Apply ε to one leg of a tensor, dropping that leg.
    pub fn counit_leg(&self, t: &TensorNCPoly, leg: usize) -> TensorNCPoly {
        t.map_leg(leg, &|w: &Word| {
            TensorNCPoly::term(self.counit(&NCPoly::word(w.clone())), Vec::new())
        })
    }

    /// Apply Δ to one leg of a tensor.
    pub fn coproduct_leg(&self, t: &TensorNCPoly, leg: usize) -> Result<TensorNCPoly, HopfError> {
        let mut out = TensorNCPoly::zero();
        for (legs, c) in t.terms() {
            for (img, a) in self.coproduct_word(&legs[leg])?.terms() {
                let mut l = legs[..leg].to_vec();
                l.extend(img.iter().cloned());
                l.extend(legs[leg + 1..].iter().cloned());
                out.add_term(l, c * a);
            }
        }
        Ok(out)
    }

    /// Apply S to one leg of a tensor.
    pub fn antipode_leg(&self, t: &TensorNCPoly, leg: usize) -> Result<TensorNCPoly, HopfError> {
        let mut out = TensorNCPoly::zero();
        for (legs, c) in t.terms() {
            let img = self.antipode(&NCPoly::word(legs[leg].clone()))?;
            let mut parts: Vec<NCPoly> = legs.iter().map(|w| NCPoly::word(w.clone())).collect();
            parts[leg] = img;
            let refs: Vec<&NCPoly> = parts.iter().collect();
            out = &out + &TensorNCPoly::pure(&refs).scale(c);
        }
        Ok(out)
    }
}

fn with_params<T>(
    params: &[(String, RatFunc)],
    f: impl FnOnce(&[(&str, RatFunc)]) -> Result<T, ParseError>,
) -> Result<T, ParseError> {
    let refs: Vec<(&str, RatFunc)> = params.iter().map(|(n, v)| (n.as_str(), v.clone())).collect();
    f(&refs)
}
