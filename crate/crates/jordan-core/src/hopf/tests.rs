use super::*;
use crate::exactalg::{RatFunc, Var};
use crate::ncpoly::{orient_relations, Alphabet, MonomialOrder, RewriteSystem};

fn matrix_bialgebra_at_equal_parameters() -> HopfPresentation {
    let text = include_str!("../../presentations/matrix_bialgebra.pres");
    HopfPresentation::from_text(&alloc::format!("{text}\nbind g h\n")).unwrap()
}

#[test]
fn jordanian_r_matrix_identities() {
    let rep = r_matrix_checks(&RMatrix::jordanian());
    assert!(rep.triangular && rep.hecke);
    assert_eq!((rep.plus_rank, rep.minus_rank), (3, 1));
    assert!(rep.all_pass());
}

#[test]
fn classical_limit_is_identity() {
    let r = RMatrix::jordanian()
        .specialize(Var::H, &RatFunc::zero())
        .specialize(Var::G, &RatFunc::zero());
    assert!(r.0.is_identity());
    assert!(r_matrix_checks(&r).all_pass());
}

fn frt(p: &HopfPresentation, r: &RMatrix) -> alloc::vec::Vec<NCPoly> {
    frt_relations(r, p.alphabet(), ["a", "b", "c", "d"])
}

fn contains_multiple(set: &[NCPoly], target: &NCPoly) -> bool {
    set.iter().any(|q| {
        let Some((w, c)) = target.terms().next() else { return false };
        let k = q.coeff(w);
        !k.is_zero() && q == &target.scale(&k.checked_div(c).unwrap())
    })
}

#[test]
fn frt_relations_contain_listed_relations() {
    let ar = HopfPresentation::matrix_bialgebra();
    let rels = frt(&ar, &RMatrix::jordanian());
    assert_eq!(rels.len(), 16);
    let free = |s: &str| {
        crate::ncpoly::ExprParser::new(ar.alphabet(), &crate::ncpoly::standard_params())
            .parse(s)
            .unwrap()
    };
    assert!(contains_multiple(&rels, &free("ca - ac + g c^2")));
    assert!(contains_multiple(&rels, &free("db - bd - g(ad - bc + h ac - d^2)")));
}

#[test]
fn classical_frt_relations_are_commutators() {
    let ar = HopfPresentation::matrix_bialgebra();
    let r = RMatrix::jordanian()
        .specialize(Var::H, &RatFunc::zero())
        .specialize(Var::G, &RatFunc::zero());
    let rels = frt(&ar, &r);
    for x in ["a", "b", "c", "d"] {
        for y in ["a", "b", "c", "d"] {
            if x == y {
                continue;
            }
            let free = crate::ncpoly::ExprParser::new(ar.alphabet(), &[])
                .parse(&alloc::format!("{x}{y} - {y}{x}"))
                .unwrap();
            assert!(contains_multiple(&rels, &free), "{x}{y}");
        }
    }
    assert!(rels.iter().all(|q| q.is_zero() || q.len() == 2));
}

#[test]
fn frt_and_listed_relations_generate_same_ideal() {
    let ar = HopfPresentation::matrix_bialgebra();
    let rels = frt(&ar, &RMatrix::jordanian());
    for q in &rels {
        assert!(ar.normalize(q).unwrap().is_zero());
    }
    let alpha = Alphabet::new(["a", "b", "c", "d"]);
    let order = MonomialOrder::new(&alpha, &["b", "a", "d", "c"], &[("a", 2), ("b", 2), ("d", 2)]).unwrap();
    let rules = orient_relations(&order, &rels);
    assert_eq!(rules.len(), 6);
    let from_frt = RewriteSystem::new(alpha, order, rules).unwrap();
    for rule in ar.rewrite().rules() {
        let rel = &NCPoly::word(rule.lhs.clone()) - &rule.rhs;
        assert!(from_frt.normalize(&rel).unwrap().is_zero());
    }
}

#[test]
fn listed_examples_normalize() {
    let ar = HopfPresentation::matrix_bialgebra();
    assert_eq!(ar.parse("ca").unwrap(), ar.parse("ac - g c^2").unwrap());
    let da = ar.parse("da").unwrap();
    assert_eq!(da.len(), 3);
    assert_eq!(da, ar.parse("ad + h ac - g dc").unwrap());
    assert_eq!(ar.parse("cb").unwrap().len(), 4);
    let gl = HopfPresentation::gl();
    assert_eq!(gl.parse("da").unwrap(), gl.parse("ad + h ac - g dc").unwrap());
    assert_eq!(gl.parse("ca").unwrap().to_sexpr(gl.alphabet()), "(+ (* 1/1 a.c) (* -g/1 c.c))");
}

#[test]
fn presentations_are_confluent() {
    for p in [
        HopfPresentation::matrix_bialgebra(),
        HopfPresentation::gl(),
        HopfPresentation::sl(),
    ] {
        for a in p.rewrite().check_overlaps().unwrap() {
            assert!(a.resolvable(), "{}: {}", p.name(), p.alphabet().show(&a.word));
        }
    }
}

#[test]
fn structure_maps_on_generators() {
    let gl = HopfPresentation::gl();
    let d = gl.determinant().clone();
    assert_eq!(d, gl.gen("D").unwrap());
    assert_eq!(gl.coproduct(&d).unwrap(), TensorNCPoly::pure(&[&d, &d]));
    assert!(gl.counit(&gl.gen("a").unwrap()).is_one());
    assert!(gl.counit(&gl.gen("b").unwrap()).is_zero());
    let a = gl.gen("a").unwrap();
    let sa = gl.antipode_leg(&gl.coproduct(&a).unwrap(), 0).unwrap().multiply_legs();
    assert_eq!(gl.normalize(&sa).unwrap(), NCPoly::one());
    let ar = HopfPresentation::matrix_bialgebra();
    let a = ar.gen("a").unwrap();
    assert!(matches!(ar.antipode(&a), Err(HopfError::NoAntipode(_))));
    assert!(matches!(
        ar.structure_map(&a, StructureMap::Counit).unwrap(),
        MapValue::Scalar(c) if c.is_one()
    ));
}

#[test]
fn hopf_axioms_hold() {
    for p in [HopfPresentation::gl(), HopfPresentation::sl()] {
        for c in hopf_axioms(&p).unwrap() {
            assert!(c.holds, "{}: {}", p.name(), c.name);
        }
    }
    for c in hopf_axioms(&HopfPresentation::matrix_bialgebra()).unwrap() {
        assert!(c.holds, "{}", c.name);
    }
}

#[test]
fn determinant_relations() {
    for p in [HopfPresentation::matrix_bialgebra(), HopfPresentation::gl()] {
        let rep = quantum_determinant(&p).unwrap();
        for c in &rep.checks {
            assert!(c.holds, "{}: {}", p.name(), c.name);
        }
        assert!(!rep.central);
    }
    let eq = quantum_determinant(&matrix_bialgebra_at_equal_parameters()).unwrap();
    assert!(eq.central);
    let sl = quantum_determinant(&HopfPresentation::sl()).unwrap();
    assert_eq!(sl.determinant, NCPoly::one());
}

#[test]
fn sl_is_quotient_of_equal_parameter_bialgebra() {
    let sl = HopfPresentation::sl();
    assert_eq!(sl.parse("ad").unwrap(), sl.parse("bc - h ac + 1").unwrap());
    assert!(sl.rewrite().normal_words(2).iter().all(|w| sl.alphabet().show(w).to_string() != "a*d"));
}

#[test]
fn malformed_presentation_reports_line() {
    let e = HopfPresentation::from_text("generators a b\nfrobnicate x\n").unwrap_err();
    assert_eq!(e, HopfError::Syntax { line: 2, msg: "unknown directive".into() });
}

use alloc::string::ToString;
