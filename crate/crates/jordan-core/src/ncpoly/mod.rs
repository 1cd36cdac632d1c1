//! Free algebras over rational functions, rewrite systems and tensor powers.

mod parse;
mod poly;
mod rewrite;
mod tensor;
mod word;

pub use parse::{parse_sexpr, standard_params, ExprParser, ParseError};
pub use poly::{NCPoly, PolyDisplay};
pub use rewrite::{
    orient_relations, Ambiguity, AmbiguityKind, MonomialOrder, OrderKey, RewriteError, RewriteSystem, Rule,
};
pub use tensor::{tensor_normalize, TensorDisplay, TensorNCPoly};
pub use word::{Alphabet, Sym, Word, WordDisplay};

/// Normal form of `p` under `rs`.
pub fn normalize(p: &NCPoly, rs: &RewriteSystem) -> Result<NCPoly, RewriteError> {
    rs.normalize(p)
}

/// Build rules from `lhs -> rhs` expression pairs.
pub fn rules_from_strs(
    alpha: &Alphabet,
    params: &[(&str, crate::exactalg::RatFunc)],
    pairs: &[(&str, &str)],
) -> Result<alloc::vec::Vec<Rule>, ParseError> {
    let p = ExprParser::new(alpha, params);
    pairs
        .iter()
        .map(|(l, r)| {
            let lhs = p.parse(l)?;
            let lw = match lhs.terms().next() {
                Some((w, c)) if lhs.len() == 1 && c.is_one() => w.clone(),
                _ => {
                    return Err(ParseError::Unexpected {
                        found: alloc::string::String::from(*l),
                        at: 0,
                    })
                }
            };
            Ok(Rule {
                lhs: lw,
                rhs: p.parse(r)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests;
