use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::exactalg::{rat, BigRat, Field, Fp, Matrix, RatFunc};

const ALGEBRA_RULES: [(&str, &str); 6] = [
    ("ca", "ac - g c^2"),
    ("cd", "dc - h c^2"),
    ("db", "bd + g(ad - bc + h ac - d^2)"),
    ("ab", "ba + h(ad - bc + h ac - a^2)"),
    ("cb", "bc - h ac - g dc + g h c^2"),
    ("da", "ad + h ac - g dc"),
];

fn algebra() -> RewriteSystem {
    let alpha = Alphabet::new(["a", "b", "c", "d"]);
    let order = MonomialOrder::new(&alpha, &["b", "a", "d", "c"], &[]).unwrap();
    let rules = rules_from_strs(&alpha, &standard_params(), &ALGEBRA_RULES).unwrap();
    RewriteSystem::new(alpha, order, rules).unwrap()
}

fn parse(rs: &RewriteSystem, s: &str) -> NCPoly {
    ExprParser::new(rs.alphabet(), &standard_params()).parse(s).unwrap()
}

#[test]
fn relation_words_reduce_to_ordered_form() {
    let rs = algebra();
    for (lhs, rhs) in ALGEBRA_RULES {
        assert_eq!(rs.normalize(&parse(&rs, lhs)).unwrap(), parse(&rs, rhs), "{lhs}");
    }
    assert_eq!(rs.normalize(&NCPoly::one()).unwrap(), NCPoly::one());
}

#[test]
fn algebra_rules_are_confluent() {
    let rs = algebra();
    let amb = rs.check_overlaps().unwrap();
    assert!(!amb.is_empty());
    for a in &amb {
        assert!(a.resolvable(), "{}", rs.alphabet().show(&a.word));
    }
}

#[test]
fn single_rule_has_no_ambiguity() {
    let alpha = Alphabet::new(["a", "b"]);
    let order = MonomialOrder::alphabetical(&alpha);
    let rules = rules_from_strs(&alpha, &[], &[("ba", "ab")]).unwrap();
    let rs = RewriteSystem::new(alpha, order, rules).unwrap();
    assert!(rs.check_overlaps().unwrap().is_empty());
    assert!(rs.is_confluent().unwrap());
}

#[test]
fn non_confluent_system_reports_difference() {
    let alpha = Alphabet::new(["x", "y"]);
    let order = MonomialOrder::alphabetical(&alpha);
    let rules = rules_from_strs(&alpha, &[], &[("yx", "xy + x"), ("yy", "x")]).unwrap();
    let rs = RewriteSystem::new(alpha, order, rules).unwrap();
    let amb = rs.check_overlaps().unwrap();
    assert!(amb.iter().any(|a| !a.resolvable()));
}

#[test]
fn increasing_rule_is_rejected() {
    let alpha = Alphabet::new(["a", "b"]);
    let order = MonomialOrder::alphabetical(&alpha);
    let rules = rules_from_strs(&alpha, &[], &[("ab", "ba")]).unwrap();
    let e = RewriteSystem::new(alpha, order, rules).unwrap_err();
    assert!(matches!(e, RewriteError::NotDecreasing { .. }));
}

#[test]
fn step_bound_reports_trace() {
    let rs = algebra().with_step_limit(3);
    let e = rs.normalize(&parse(&rs, "cccbbb")).unwrap_err();
    match e {
        RewriteError::NonTerminating { limit, trace } => {
            assert_eq!(limit, 3);
            assert!(trace.contains("->"));
        }
        other => panic!("{other}"),
    }
}

#[test]
fn sexpr_round_trip() {
    let rs = algebra();
    let p = rs.normalize(&parse(&rs, "cb - 1/2 + (h-g)/3 ca")).unwrap();
    let s = p.to_sexpr(rs.alphabet());
    assert!(s.starts_with("(+ (* -1/2 1)"), "{s}");
    assert_eq!(parse_sexpr(&s, rs.alphabet()).unwrap(), p);
    assert_eq!(NCPoly::zero().to_sexpr(rs.alphabet()), "(+)");
}

#[test]
fn parser_errors() {
    let alpha = Alphabet::new(["a", "b"]);
    let p = ExprParser::new(&alpha, &[]);
    assert_eq!(p.parse("a / b"), Err(ParseError::NonScalarDivisor));
    assert_eq!(p.parse("a / 0"), Err(ParseError::DivisionByZero));
    assert!(matches!(p.parse("q"), Err(ParseError::UnknownIdentifier(_))));
    assert!(matches!(p.parse("a +"), Err(ParseError::Unexpected { .. })));
    assert_eq!(p.parse("ab").unwrap(), p.parse("a*b").unwrap());
    assert_eq!(p.parse("(a+b)^2").unwrap(), p.parse("aa+ab+ba+bb").unwrap());
}

fn coproduct(rs: &RewriteSystem, s: Sym) -> TensorNCPoly {
    // Δ(T_ij) = Σ_k T_ik ⊗ T_kj with T = [[a, b], [c, d]].
    let name = rs.alphabet().name(s);
    let (i, j) = match name {
        "a" => (0, 0),
        "b" => (0, 1),
        "c" => (1, 0),
        _ => (1, 1),
    };
    let t = [["a", "b"], ["c", "d"]];
    let mut out = TensorNCPoly::zero();
    for k in 0..2 {
        let l = NCPoly::sym(rs.alphabet().sym(t[i][k]).unwrap());
        let r = NCPoly::sym(rs.alphabet().sym(t[k][j]).unwrap());
        out = &out + &TensorNCPoly::pure(&[&l, &r]);
    }
    out
}

fn coproduct_of(rs: &RewriteSystem, p: &NCPoly) -> TensorNCPoly {
    let mut out = TensorNCPoly::zero();
    for (w, c) in p.terms() {
        let mut acc = TensorNCPoly::one(2);
        for &s in w.letters() {
            acc = &acc * &coproduct(rs, s);
        }
        out = &out + &acc.scale(c);
    }
    out.normalize(rs).unwrap()
}

#[test]
fn tensor_normalization() {
    let rs = algebra();
    let da = coproduct(&rs, rs.alphabet().sym("a").unwrap());
    assert_eq!(tensor_normalize(&da, &rs).unwrap(), da);
    assert_eq!(
        TensorNCPoly::one(2).normalize(&rs).unwrap(),
        TensorNCPoly::one(2)
    );
    let c = rs.alphabet().sym("c").unwrap();
    let a = rs.alphabet().sym("a").unwrap();
    let lhs = (&coproduct(&rs, c) * &coproduct(&rs, a)).normalize(&rs).unwrap();
    let rhs = coproduct_of(&rs, &parse(&rs, "ac - g c^2"));
    assert_eq!(lhs, rhs);
}

#[test]
fn coproduct_respects_every_relation() {
    let rs = algebra();
    for (l, r) in ALGEBRA_RULES {
        let rel = &parse(&rs, l) - &parse(&rs, r);
        let mut acc = TensorNCPoly::zero();
        for (w, c) in rel.terms() {
            let mut t = TensorNCPoly::one(2);
            for &s in w.letters() {
                t = &t * &coproduct(&rs, s);
            }
            acc = &acc + &t.scale(c);
        }
        assert!(acc.normalize(&rs).unwrap().is_zero(), "{l}");
    }
}

fn fp_at(c: &RatFunc, point: &[BigRat; 3]) -> Fp {
    Fp::from_rat(&c.eval(point).unwrap()).unwrap()
}

/// Dimension of the degree-n part of the quotient, by row reduction of the ideal.
fn quotient_dimension(rs: &RewriteSystem, n: usize, point: &[BigRat; 3]) -> usize {
    let k = rs.alphabet().len();
    let words: Vec<Word> = (0..k.pow(n as u32))
        .map(|mut x| {
            let mut v = alloc::vec![0u8; n];
            for slot in v.iter_mut().rev() {
                *slot = (x % k) as u8;
                x /= k;
            }
            Word(v)
        })
        .collect();
    let col = |w: &Word| words.binary_search(w).unwrap();
    let mut rows = Vec::new();
    for r in rs.rules() {
        let rel = &NCPoly::word(r.lhs.clone()) - &r.rhs;
        for left in 0..=n - 2 {
            let right = n - 2 - left;
            for u in &words {
                let pre = &u.letters()[..left];
                let post = &u.letters()[n - right..];
                if u.letters()[left..n - right].iter().any(|&s| s != 0) {
                    continue;
                }
                let mut row = alloc::vec![Fp::zero(); words.len()];
                for (w, c) in rel.sandwich(pre, post).terms() {
                    let j = col(w);
                    row[j] = row[j].plus(&fp_at(c, point));
                }
                rows.push(row);
            }
        }
    }
    words.len() - Matrix::from_rows(rows).rank()
}

#[test]
fn normal_word_count_matches_quotient_dimension() {
    let rs = algebra();
    let point = [rat(3), rat(-7), rat(5)];
    let sum = parse(&rs, "a+b+c+d");
    for n in 2..=4 {
        let power = rs.pow(&sum, n as u32).unwrap();
        let expected = quotient_dimension(&rs, n, &point);
        assert_eq!(power.len(), expected, "degree {n}");
        assert_eq!(rs.normal_words(n).len(), expected);
    }
}

fn small_poly(rs: &RewriteSystem) -> impl Strategy<Value = NCPoly> {
    let n = rs.alphabet().len() as u8;
    proptest::collection::vec(
        (proptest::collection::vec(0..n, 0..4), -3i64..4, 0u32..2),
        1..4,
    )
    .prop_map(|terms| {
        NCPoly::from_terms(
            terms
                .into_iter()
                .map(|(w, c, hp)| (Word(w), &RatFunc::from_int(c) * &RatFunc::h().pow(hp))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn normalize_is_idempotent(p in small_poly(&algebra())) {
        let rs = algebra();
        let n = rs.normalize(&p).unwrap();
        prop_assert_eq!(rs.normalize(&n).unwrap(), n.clone());
        prop_assert!(n.terms().all(|(w, _)| rs.is_normal(w)));
    }

    #[test]
    fn products_of_normal_forms_agree(p in small_poly(&algebra()), q in small_poly(&algebra())) {
        let rs = algebra();
        let direct = rs.normalize(&(&p * &q)).unwrap();
        let staged = rs.mul(&rs.normalize(&p).unwrap(), &rs.normalize(&q).unwrap()).unwrap();
        prop_assert_eq!(direct, staged);
    }
}
