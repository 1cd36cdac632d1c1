use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::poly::NCPoly;
use super::word::{Alphabet, Sym, Word};
use crate::exactalg::{Matrix, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("rule {0}: left side must have at least two letters")]
    ShortLhs(String),
    #[error("duplicate rule for {0}")]
    Duplicate(String),
    #[error("rule {lhs}: term {word} on the right is not smaller than the left side")]
    NotDecreasing { lhs: String, word: String },
    #[error("reduction did not terminate within {limit} steps; last words: {trace}")]
    NonTerminating { limit: usize, trace: String },
    #[error("unknown generator {0}")]
    UnknownSymbol(String),
}

/// Sort key of a word: weighted degree, then length, then inversions against the target
/// generator order, then lexicographic by rank.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrderKey {
    weight: u32,
    len: usize,
    inversions: usize,
    ranks: Vec<u8>,
}

/// Well-founded order on words used to orient rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    rank: Vec<u8>,
    weight: Vec<u32>,
}

impl MonomialOrder {
    /// `ranked` lists every generator from smallest to largest; unlisted weights are 1.
    pub fn new(alpha: &Alphabet, ranked: &[&str], weights: &[(&str, u32)]) -> Result<Self, RewriteError> {
        let mut rank = alloc::vec![u8::MAX; alpha.len()];
        for (r, name) in ranked.iter().enumerate() {
            let s = alpha.sym(name).ok_or_else(|| RewriteError::UnknownSymbol(name.to_string()))?;
            rank[usize::from(s)] = u8::try_from(r).expect("small alphabet");
        }
        if let Some(p) = rank.iter().position(|&r| r == u8::MAX) {
            return Err(RewriteError::UnknownSymbol(alpha.names()[p].clone()));
        }
        let mut weight = alloc::vec![1; alpha.len()];
        for (name, wt) in weights {
            let s = alpha.sym(name).ok_or_else(|| RewriteError::UnknownSymbol(name.to_string()))?;
            weight[usize::from(s)] = *wt;
        }
        Ok(MonomialOrder { rank, weight })
    }

    /// Generators ranked in alphabet order, all of weight one.
    pub fn alphabetical(alpha: &Alphabet) -> Self {
        MonomialOrder {
            rank: (0..alpha.len()).map(|r| u8::try_from(r).expect("small alphabet")).collect(),
            weight: alloc::vec![1; alpha.len()],
        }
    }

    pub fn rank(&self, s: Sym) -> u8 {
        self.rank[usize::from(s)]
    }

    pub fn key(&self, w: &Word) -> OrderKey {
        let ranks: Vec<u8> = w.letters().iter().map(|&s| self.rank(s)).collect();
        let mut inversions = 0;
        for i in 0..ranks.len() {
            for j in i + 1..ranks.len() {
                if ranks[i] > ranks[j] {
                    inversions += 1;
                }
            }
        }
        OrderKey {
            weight: w.letters().iter().map(|&s| self.weight[usize::from(s)]).sum(),
            len: w.len(),
            inversions,
            ranks,
        }
    }

    pub fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

/// Kind of critical pair found between two rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

/// A critical word together with the difference of its two reductions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub word: Word,
    pub rules: (usize, usize),
    pub difference: NCPoly,
}

impl Ambiguity {
    pub fn resolvable(&self) -> bool {
        self.difference.is_zero()
    }
}

const DEFAULT_STEP_LIMIT: usize = 2_000_000;

/// Oriented rewrite rules over an alphabet, with leftmost reduction to normal form.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    order: MonomialOrder,
    rules: Vec<Rule>,
    index: BTreeMap<Vec<Sym>, usize>,
    lhs_lens: Vec<usize>,
    step_limit: usize,
}

impl RewriteSystem {
    /// Validates that every rule decreases the order, then interreduces right-hand sides.
    pub fn new(alphabet: Alphabet, order: MonomialOrder, rules: Vec<Rule>) -> Result<Self, RewriteError> {
        let mut index = BTreeMap::new();
        let mut lens = BTreeSet::new();
        for (k, r) in rules.iter().enumerate() {
            let name = alphabet.show(&r.lhs).to_string();
            if r.lhs.len() < 2 {
                return Err(RewriteError::ShortLhs(name));
            }
            if index.insert(r.lhs.0.clone(), k).is_some() {
                return Err(RewriteError::Duplicate(name));
            }
            lens.insert(r.lhs.len());
            let lk = order.key(&r.lhs);
            if let Some((w, _)) = r.rhs.terms().find(|(w, _)| order.key(w) >= lk) {
                return Err(RewriteError::NotDecreasing {
                    lhs: name,
                    word: alphabet.show(w).to_string(),
                });
            }
        }
        let mut rs = RewriteSystem {
            alphabet,
            order,
            rules,
            index,
            lhs_lens: lens.into_iter().collect(),
            step_limit: DEFAULT_STEP_LIMIT,
        };
        let reduced = rs
            .rules
            .iter()
            .map(|r| rs.normalize(&r.rhs))
            .collect::<Result<Vec<_>, _>>()?;
        for (r, rhs) in rs.rules.iter_mut().zip(reduced) {
            r.rhs = rhs;
        }
        Ok(rs)
    }

    pub fn with_step_limit(mut self, limit: usize) -> Self {
        self.step_limit = limit;
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule_for(&self, lhs: &Word) -> Option<&Rule> {
        self.index.get(lhs.letters()).map(|&k| &self.rules[k])
    }

    /// Leftmost position and rule index of a reducible subword, shortest left side first.
    pub fn find_redex(&self, w: &[Sym]) -> Option<(usize, usize)> {
        (0..w.len()).find_map(|i| {
            self.lhs_lens
                .iter()
                .take_while(|&&l| i + l <= w.len())
                .find_map(|&l| self.index.get(&w[i..i + l]).map(|&k| (i, k)))
        })
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_redex(w.letters()).is_none()
    }

    pub fn normalize(&self, p: &NCPoly) -> Result<NCPoly, RewriteError> {
        let mut work: BTreeMap<(OrderKey, Word), RatFunc> = BTreeMap::new();
        for (w, c) in p.terms() {
            push(&mut work, self.order.key(w), w.clone(), c.clone());
        }
        let mut out = NCPoly::zero();
        let mut steps = 0usize;
        let mut trace: VecDeque<Word> = VecDeque::new();
        while let Some(((_, w), c)) = work.pop_last() {
            let Some((pos, k)) = self.find_redex(w.letters()) else {
                out.add_term(w, c);
                continue;
            };
            steps += 1;
            if trace.len() == 8 {
                trace.pop_front();
            }
            trace.push_back(w.clone());
            if steps > self.step_limit {
                let words: Vec<String> = trace.iter().map(|t| self.alphabet.show(t).to_string()).collect();
                return Err(RewriteError::NonTerminating {
                    limit: self.step_limit,
                    trace: words.join(" -> "),
                });
            }
            let rule = &self.rules[k];
            let (pre, rest) = w.letters().split_at(pos);
            let post = &rest[rule.lhs.len()..];
            for (rw, rc) in rule.rhs.terms() {
                let nw = Word::splice(pre, rw.letters(), post);
                push(&mut work, self.order.key(&nw), nw, &c * rc);
            }
        }
        Ok(out)
    }

    /// Normal form of the product.
    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> Result<NCPoly, RewriteError> {
        self.normalize(&(a * b))
    }

    pub fn pow(&self, a: &NCPoly, n: u32) -> Result<NCPoly, RewriteError> {
        let mut acc = NCPoly::one();
        for _ in 0..n {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Irreducible words of length exactly `n`.
    pub fn normal_words(&self, n: usize) -> Vec<Word> {
        let mut layer = alloc::vec![Word::empty()];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &layer {
                for s in self.alphabet.syms() {
                    let mut v = w.0.clone();
                    v.push(s);
                    let ends_in_redex = self
                        .lhs_lens
                        .iter()
                        .any(|&l| l <= v.len() && self.index.contains_key(&v[v.len() - l..]));
                    if !ends_in_redex {
                        next.push(Word(v));
                    }
                }
            }
            layer = next;
        }
        layer
    }

    /// All overlap and inclusion ambiguities with the difference of their two reductions.
    pub fn check_overlaps(&self) -> Result<Vec<Ambiguity>, RewriteError> {
        let mut out = Vec::new();
        for (i, r1) in self.rules.iter().enumerate() {
            let l1 = r1.lhs.letters();
            for (j, r2) in self.rules.iter().enumerate() {
                let l2 = r2.lhs.letters();
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] != l2[..k] {
                        continue;
                    }
                    let tail = &l2[k..];
                    let head = &l1[..l1.len() - k];
                    let left = r1.rhs.sandwich(&[], tail);
                    let right = r2.rhs.sandwich(head, &[]);
                    out.push(Ambiguity {
                        kind: AmbiguityKind::Overlap,
                        word: Word::splice(l1, tail, &[]),
                        rules: (i, j),
                        difference: self.normalize(&(&left - &right))?,
                    });
                }
                if i != j && l2.len() < l1.len() {
                    for p in 0..=l1.len() - l2.len() {
                        if l1[p..p + l2.len()] != *l2 {
                            continue;
                        }
                        let right = r2.rhs.sandwich(&l1[..p], &l1[p + l2.len()..]);
                        out.push(Ambiguity {
                            kind: AmbiguityKind::Inclusion,
                            word: r1.lhs.clone(),
                            rules: (i, j),
                            difference: self.normalize(&(&r1.rhs - &right))?,
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_confluent(&self) -> Result<bool, RewriteError> {
        Ok(self.check_overlaps()?.iter().all(Ambiguity::resolvable))
    }

    /// Apply a coefficient map to every rule, keeping the alphabet and order.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Result<Self, RewriteError> {
        let rules = self
            .rules
            .iter()
            .map(|r| Rule {
                lhs: r.lhs.clone(),
                rhs: r.rhs.map_coeffs(&f),
            })
            .collect();
        RewriteSystem::new(self.alphabet.clone(), self.order.clone(), rules)
    }
}

fn push(work: &mut BTreeMap<(OrderKey, Word), RatFunc>, key: OrderKey, w: Word, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match work.entry((key, w)) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Row-reduce a set of relations with columns sorted from largest word to smallest; each
/// nonzero row becomes a rule rewriting its pivot (leading) word.
pub fn orient_relations(order: &MonomialOrder, relations: &[NCPoly]) -> Vec<Rule> {
    let mut words: Vec<Word> = relations
        .iter()
        .flat_map(|r| r.terms().map(|(w, _)| w.clone()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    words.sort_by_key(|w| core::cmp::Reverse(order.key(w)));
    let m = Matrix::from_fn(relations.len(), words.len(), |i, j| relations[i].coeff(&words[j]));
    let (r, pivots) = m.rref();
    pivots
        .iter()
        .enumerate()
        .map(|(row, &pc)| Rule {
            lhs: words[pc].clone(),
            rhs: NCPoly::from_terms(
                (pc + 1..words.len()).map(|j| (words[j].clone(), -&r[(row, j)])),
            ),
        })
        .collect()
}
