use std::sync::OnceLock;

use proptest::prelude::*;

use super::*;
use crate::exactalg::{Matrix, RatFunc};
use crate::exterior::{lambda, BraidMatrix};
use crate::focalc::{load_family, Family};
use crate::ncpoly::{standard_params, ExprParser};

fn algebra(family: Family) -> &'static QuantumLieAlgebra {
    static CELLS: [OnceLock<QuantumLieAlgebra>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let k = Family::ALL.iter().position(|f| *f == family).unwrap();
    CELLS[k].get_or_init(|| quantum_lie_algebra(&load_family(family, &RatFunc::z()).unwrap()))
}

fn cm(family: Family) -> CartanMaurer {
    cartan_maurer(&load_family(family, &RatFunc::z()).unwrap())
}

fn parse_linear(qla: &QuantumLieAlgebra, src: &str) -> Vec<RatFunc> {
    let alpha = qla.alphabet();
    let params = standard_params();
    let p = ExprParser::new(&alpha, &params).parse(src).unwrap();
    (0..qla.dim()).map(|j| p.coeff(&crate::ncpoly::Word(vec![j as u8]))).collect()
}

fn h() -> RatFunc {
    RatFunc::h()
}

#[test]
fn cartan_maurer_examples() {
    let four = cm(Family::Two);
    assert_eq!(four.matrix(0).row(0).to_vec(), vec![RatFunc::one(), RatFunc::zero(), RatFunc::zero(), RatFunc::zero()]);
    let three = cm(Family::ThreeD);
    assert_eq!(*three.get(1, 2, 1), &RatFunc::from_int(-2) * &h());
    assert!(three.constraint().is_some());
}

#[test]
fn three_dim_brackets() {
    let qla = algebra(Family::ThreeD);
    assert_eq!(qla.table().bracket(0, 1), parse_linear(qla, "2 χ2").as_slice());
    assert_eq!(qla.table().bracket(2, 2), parse_linear(qla, "-4h χ3").as_slice());
    let fam3 = algebra(Family::Three);
    assert_eq!(fam3.table().bracket(1, 2), parse_linear(fam3, "χ1 - (h+g) χ2 - χ4").as_slice());
}

#[test]
fn printed_brackets_agree() {
    for f in Family::ALL {
        for e in compare_brackets(algebra(f), f).unwrap() {
            assert!(e.matches, "{f}: {} vs {}", e.printed, e.computed);
        }
    }
}

#[test]
fn printed_commutator_discrepancies() {
    let mut mismatched = Vec::new();
    for f in Family::ALL {
        for e in compare_commutators(algebra(f), f).unwrap() {
            if !e.matches {
                mismatched.push((f, e.printed.split_once(" =").unwrap().0));
            }
        }
    }
    assert_eq!(
        mismatched,
        vec![
            (Family::One, "[χ1,χ3]"),
            (Family::Two, "[χ4,χ3]"),
            (Family::Three, "[χ1,χ4]"),
            (Family::Three, "[χ4,χ1]"),
        ]
    );
}

#[test]
fn commutator_corrections() {
    let check = |f: Family, i: usize, k: usize, src: &str| {
        let qla = algebra(f);
        let alpha = qla.alphabet();
        let params = standard_params();
        let expected = ExprParser::new(&alpha, &params).parse(src).unwrap();
        assert_eq!(qla.commutator(i, k), expected, "{f} [{i},{k}]");
    };
    check(
        Family::One,
        0,
        2,
        "χ1χ3 - (-z/(z+1) χ1χ3 + z(h+g)/(z+1) χ1χ4 + χ3χ1 - (h+g) χ3χ2 + (h+g)^2 χ4χ2 - z/(z+1) χ4χ3 + z(h+g)/(z+1) χ4χ4)",
    );
    check(
        Family::Two,
        3,
        2,
        "χ4χ3 - (-z(h+g)^2 χ2χ1 + z(h+g) χ2χ3 - (h+g)(z-1) χ3χ2 + χ3χ4 + (h+g)^2(z-1) χ4χ2)",
    );
    check(Family::Three, 0, 3, "χ1χ4 - χ4χ1");
}

#[test]
fn commutator_pairing_gives_structure_constants() {
    for f in Family::ALL {
        let qla = algebra(f);
        let cm = cm(f);
        let d = qla.dim();
        for i in 0..d {
            for k in 0..d {
                assert_eq!(pairing(&cm, &qla.commutator(i, k)).unwrap(), qla.table().bracket(i, k), "{f}");
            }
        }
    }
}

#[test]
fn quantum_jacobi_identity() {
    for f in Family::ALL {
        let report = jacobi_check(algebra(f));
        assert!(report.holds(), "{f}: {:?}", report.failures);
        assert_eq!(report.triples, if f == Family::ThreeD { 27 } else { 64 });
    }
}

#[test]
fn perturbed_structure_constant_breaks_jacobi() {
    let qla = algebra(Family::ThreeD);
    let mut table = qla.table().clone();
    table.bracket_mut(0, 1)[1] = &table.bracket(0, 1)[1] + &RatFunc::one();
    let perturbed = QuantumLieAlgebra::from_parts(table, qla.lambda().clone());
    assert!(!jacobi_check(&perturbed).holds());
}

#[test]
fn classical_limit_is_gl2() {
    let calc = load_family(Family::Two, &RatFunc::zero()).unwrap();
    let classical = quantum_lie_algebra(&calc).table().classical();
    let point = [crate::exactalg::rat(0), crate::exactalg::rat(0), crate::exactalg::rat(0)];
    let op = lambda(&calc).specialised(&point).unwrap();
    let flip = BraidMatrix::from_operator(4, op.map(|x| RatFunc::from_rat(x.clone())));
    assert!(flip.is_flip());
    let qla = QuantumLieAlgebra::from_parts(classical.clone(), flip);
    assert!(jacobi_check(&qla).holds());
    // e_ij basis: [E11, E12] = E12, [E12, E21] = E11 − E22
    assert_eq!(classical.bracket(0, 1), parse_linear(&qla, "χ2").as_slice());
    assert_eq!(classical.bracket(1, 2), parse_linear(&qla, "χ1 - χ4").as_slice());
    assert!(classical.h_antisymmetry().iter().all(|c| c.holds));
}

#[test]
fn structure_constants_agree_at_zero() {
    let tables: Vec<BracketTable> = [Family::One, Family::Two, Family::Three]
        .iter()
        .map(|&f| quantum_lie_algebra(&load_family(f, &RatFunc::zero()).unwrap()).table().clone())
        .collect();
    assert_eq!(tables[0], tables[1]);
    assert_eq!(tables[1], tables[2]);
}

#[test]
fn enveloping_relations_and_pbw() {
    for f in Family::ALL {
        let env = enveloping_relations(algebra(f)).unwrap();
        let report = env.pbw_report(4).unwrap();
        assert!(report.holds(), "{f}: {report:?}");
        for e in compare_enveloping(&env, f).unwrap() {
            assert!(e.matches, "{f}: {} vs {}", e.printed, e.computed);
        }
    }
    let three = enveloping_relations(algebra(Family::ThreeD)).unwrap();
    assert_eq!(three.pbw_report(2).unwrap().basis, "χ2^α χ1^β χ3^γ");
    assert_eq!(enveloping_relations(algebra(Family::One)).unwrap().pbw_report(2).unwrap().basis, "χ2^α χ1^β χ4^γ χ3^δ");
}

#[test]
fn three_dim_enveloping_example() {
    let qla = algebra(Family::ThreeD);
    let env = enveloping_relations(qla).unwrap();
    let alpha = qla.alphabet();
    let params = standard_params();
    let expected = ExprParser::new(&alpha, &params).parse("-2h χ2χ1 + χ2χ3 - χ1").unwrap();
    let (_, _, rhs) = env.rules().iter().find(|(i, k, _)| (*i, *k) == (2, 1)).unwrap();
    assert_eq!(*rhs, expected);
}

#[test]
fn enveloping_families_agree() {
    let two = enveloping_relations(algebra(Family::Two)).unwrap();
    let three = enveloping_relations(algebra(Family::Three)).unwrap();
    assert_eq!(two.rules(), three.rules());
    let one_at_zero = quantum_lie_algebra(&load_family(Family::One, &RatFunc::zero()).unwrap());
    assert_eq!(enveloping_relations(&one_at_zero).unwrap().rules(), two.rules());
}

#[test]
fn degree_two_quotient_matches_normal_words() {
    for f in Family::ALL {
        let qla = algebra(f);
        let d = qla.dim();
        let oracle = degree_two_quotient_dimension(qla);
        assert_eq!(oracle, 1 + d + d * (d + 1) / 2, "{f}");
        let env = enveloping_relations(qla).unwrap();
        let counted: usize = env.pbw_report(2).unwrap().counts.iter().map(|c| c.1).sum();
        assert_eq!(counted, oracle, "{f}");
    }
}

#[test]
fn jordanian_brackets_are_h_antisymmetric() {
    let table = jordanian_table();
    assert!(table.h_antisymmetry().iter().all(|c| c.holds));
    let (x, y) = (0, 2);
    let sum: Vec<RatFunc> = table.bracket(x, y).iter().zip(table.bracket(y, x)).map(|(a, b)| a + b).collect();
    assert_eq!(sum, vec![&RatFunc::from_int(-4) * &h(), RatFunc::zero(), RatFunc::zero()]);
    assert!(table.bracket(1, 1).iter().all(RatFunc::is_zero));
}

#[test]
fn woronowicz_bracket_is_jordanian() {
    let report = woronowicz_iso(algebra(Family::ThreeD), &jordanian_table()).unwrap();
    assert!(report.holds(), "{}", report.transformed);
    assert!(report.transformed.h_antisymmetry().iter().all(|c| c.holds));
    let h_zero = jordanian_basis().map(|x| x.substitute(crate::exactalg::Var::H, &RatFunc::zero()).unwrap());
    let permutation = Matrix::from_rows(vec![
        vec![RatFunc::zero(), RatFunc::one(), RatFunc::zero()],
        vec![RatFunc::one(), RatFunc::zero(), RatFunc::zero()],
        vec![RatFunc::zero(), RatFunc::zero(), RatFunc::one()],
    ]);
    assert_eq!(h_zero, permutation);
}

#[test]
fn table_round_trips_through_display() {
    let table = jordanian_table();
    let text = table.to_string().replace('*', " ");
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(BracketTable::parse(&["X", "H", "Y"], &lines).unwrap(), table);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bracket_is_bilinear(x in prop::collection::vec(-4i64..4, 3), y in prop::collection::vec(-4i64..4, 3), s in -3i64..3) {
        let table = algebra(Family::ThreeD).table();
        let v = |c: &[i64]| c.iter().map(|&n| RatFunc::from_int(n)).collect::<Vec<_>>();
        let (x, y) = (v(&x), v(&y));
        let sx: Vec<RatFunc> = x.iter().map(|c| c * &RatFunc::from_int(s)).collect();
        let lhs = table.bracket_of(&sx, &y);
        let rhs: Vec<RatFunc> = table.bracket_of(&x, &y).iter().map(|c| c * &RatFunc::from_int(s)).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn basis_change_round_trips(a in -3i64..3, b in -3i64..3, c in -3i64..3) {
        let table = algebra(Family::ThreeD).table();
        let int = RatFunc::from_int;
        // unit upper triangular, so always invertible
        let m = Matrix::from_rows(vec![
            vec![int(1), int(a), int(b)],
            vec![int(0), int(1), int(c)],
            vec![int(0), int(0), int(1)],
        ]);
        let names = ["χ1", "χ2", "χ3"];
        let there = table.change_basis(&m, &names).unwrap();
        let back = there.change_basis(&m.inverse().unwrap(), &names).unwrap();
        prop_assert_eq!(&back, table);
    }
}
