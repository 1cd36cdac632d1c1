use super::*;
use crate::exactalg::{BigRat, TruncSeries};
use crate::hopf::Check;
use proptest::prelude::*;

fn failing(checks: &[Check]) -> Vec<&str> {
    checks.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect()
}

fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

fn series(coeffs: &[(usize, i64, i64)], order: usize) -> TruncSeries {
    coeffs
        .iter()
        .fold(TruncSeries::zero(order), |acc, &(k, n, d)| &acc + &TruncSeries::monomial(rat(n, d), k, order))
}

#[test]
fn straightening_examples() {
    let uh = UhAlgebra::new(6);
    assert_eq!(uh.parse("X Y").unwrap(), uh.parse("Y X + H").unwrap());
    // XH = HX − 2 sinh(hX)/h
    let expected = &uh.parse("H X").unwrap() - &uh.sinh_x_over_h().scale_rat(&rat(2, 1));
    assert_eq!(uh.parse("X H").unwrap(), expected);
    let xh = uh.parse("X H").unwrap();
    assert_eq!(xh.coeff(Pbw::new(0, 0, 1)), series(&[(0, -2, 1)], 6));
    assert_eq!(xh.coeff(Pbw::new(0, 0, 3)), series(&[(2, -1, 3)], 6));
    assert_eq!(xh.coeff(Pbw::new(0, 0, 5)), series(&[(4, -1, 60)], 6));
    assert_eq!(uh.parse("Y H X").unwrap(), uh.mono(Pbw::new(1, 1, 1)));
}

#[test]
fn h_y_relation_sign() {
    let uh = UhAlgebra::new(6);
    let hy = uh.parse("H Y").unwrap();
    let cosh = uh.cosh_x();
    let y = uh.gen(Gen::Y);
    let expected = &(&uh.parse("Y H").unwrap() - &uh.mul(&y, &cosh)) - &uh.mul(&cosh, &y);
    assert_eq!(hy, expected);
    // classically [H,Y] = −2Y
    let classical = UhAlgebra::new(0);
    let c = classical.commutator(&classical.gen(Gen::H), &classical.gen(Gen::Y));
    assert_eq!(c, classical.parse("-2 Y").unwrap());
}

#[test]
fn plus_sign_reading_is_not_a_hopf_relation() {
    let uh = UhAlgebra::new(6);
    let (dh, dy) = (uh.coproduct(&uh.gen(Gen::H)), uh.coproduct(&uh.gen(Gen::Y)));
    let dcosh = uh.coproduct(&uh.cosh_x());
    let bracket = &uh.mul_tensor(&dh, &dy) - &uh.mul_tensor(&dy, &dh);
    let minus = &bracket + &(&uh.mul_tensor(&dy, &dcosh) + &uh.mul_tensor(&dcosh, &dy));
    let plus = &bracket - &(&uh.mul_tensor(&dy, &dcosh) + &uh.mul_tensor(&dcosh, &dy));
    assert!(minus.is_zero());
    assert!(!plus.is_zero());
}

#[test]
fn hopf_map_examples() {
    let uh = UhAlgebra::new(6);
    let x = uh.gen(Gen::X);
    let one = uh.one();
    assert_eq!(uh.coproduct(&x), &UhTensor::pure(&x, &one) + &UhTensor::pure(&one, &x));
    assert!(uh.counit(&uh.gen(Gen::H)).is_zero());
    let dy = uh.coproduct(&uh.gen(Gen::Y));
    assert_eq!(uh.split_leg(&dy, 0), uh.split_leg(&dy, 1));
    let y = uh.gen(Gen::Y);
    let sy = uh.product(&[&uh.exp_x(1), &y, &uh.exp_x(-1)]).scale_rat(&rat(-1, 1));
    assert_eq!(uh.antipode(&y), sy);
}

#[test]
fn hopf_axioms_hold() {
    for n in [2, 6] {
        let checks = hopf_checks(n);
        assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
    }
}

#[test]
fn adjoint_examples() {
    let uh = UhAlgebra::new(6);
    let [xh, hh, yh] = uh.submodule_basis();
    let (x, h, y) = (uh.gen(Gen::X), uh.gen(Gen::H), uh.gen(Gen::Y));
    assert_eq!(uh.adjoint(&h, &xh), xh.scale_rat(&rat(2, 1)));
    assert!(uh.adjoint(&x, &xh).is_zero());
    let expected = &(&yh.scale(&series(&[(1, -2, 1)], 6)) - &hh.shift(2)) - &xh.shift(3);
    assert_eq!(uh.adjoint(&y, &yh), expected);
    let expected = [series(&[(2, 3, 1)], 6), TruncSeries::zero(6), series(&[(0, 2, 1)], 6)];
    assert_eq!(uh.decompose(&uh.adjoint(&y, &hh)), Some(expected));
    // [Y_h, H_h] = 2Y_h − 2hH_h − h²X_h
    let expected = [series(&[(2, -1, 1)], 6), series(&[(1, -2, 1)], 6), series(&[(0, 2, 1)], 6)];
    assert_eq!(uh.decompose(&uh.adjoint(&yh, &hh)), Some(expected));
}

#[test]
fn adjoint_of_unit_is_identity() {
    let uh = UhAlgebra::new(4);
    let u = uh.parse("Y H X + h H H").unwrap();
    assert_eq!(uh.adjoint(&uh.one(), &u), u);
}

#[test]
fn casimir_is_central() {
    let checks = casimir_checks(6);
    assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
}

#[test]
fn literal_casimir_normalisation_is_not_central() {
    let uh = UhAlgebra::new(6);
    let c = uh.casimir_as_printed();
    assert!(!uh.commutator(&c, &uh.gen(Gen::X)).is_zero());
    let diff = &uh.casimir() - &c;
    assert!(!diff.is_zero());
}

#[test]
fn submodule_is_stable_with_printed_tables() {
    let checks = submodule_checks(6);
    assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
    assert_eq!(checks.len(), 21);
}

#[test]
fn wrong_casimir_breaks_the_submodule() {
    let uh = UhAlgebra::new(6);
    let y_bad = &uh.mul(&uh.gen(Gen::Y), &uh.exp_x(1)) - &uh.casimir_as_printed().shift(1).scale_rat(&rat(2, 1));
    let acted = uh.adjoint(&uh.gen(Gen::X), &y_bad);
    assert_ne!(uh.decompose(&acted), Some([TruncSeries::zero(6), TruncSeries::one(6), TruncSeries::zero(6)]));
}

#[test]
fn brackets_match_the_jordanian_table_at_low_order() {
    let checks = submodule_checks(4);
    assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
}

#[test]
fn order_stability() {
    for n in [4, 6] {
        let checks = order_stability_checks(n);
        assert!(failing(&checks).is_empty(), "{:?}", failing(&checks));
    }
}

#[test]
fn parse_rejects_non_polynomial_coefficients() {
    let uh = UhAlgebra::new(3);
    assert!(matches!(uh.parse("1/h X"), Err(UhError::NotPolynomial(_))));
    assert!(matches!(uh.parse("X +"), Err(UhError::Parse(_))));
}

#[test]
fn display_lists_pbw_terms() {
    let uh = UhAlgebra::new(2);
    assert_eq!(uh.parse("X Y").unwrap().to_string(), "H + YX");
}

fn arb_element() -> impl Strategy<Value = Vec<((u32, u32, u32), i64, usize)>> {
    prop::collection::vec(((0u32..2, 0u32..2, 0u32..3), -3i64..4, 0usize..3), 1..4)
}

fn build(uh: &UhAlgebra, terms: &[((u32, u32, u32), i64, usize)]) -> UhElement {
    terms.iter().fold(uh.zero(), |acc, &((y, h, x), c, k)| {
        &acc + &UhElement::monomial(Pbw::new(y, h, x), TruncSeries::monomial(rat(c, 1), k, uh.order()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multiplication_is_associative(a in arb_element(), b in arb_element(), c in arb_element()) {
        let uh = UhAlgebra::new(4);
        let (a, b, c) = (build(&uh, &a), build(&uh, &b), build(&uh, &c));
        prop_assert_eq!(uh.mul(&uh.mul(&a, &b), &c), uh.mul(&a, &uh.mul(&b, &c)));
    }

    #[test]
    fn coproduct_is_multiplicative(a in arb_element(), b in arb_element()) {
        let uh = UhAlgebra::new(3);
        let (a, b) = (build(&uh, &a), build(&uh, &b));
        prop_assert_eq!(uh.coproduct(&uh.mul(&a, &b)), uh.mul_tensor(&uh.coproduct(&a), &uh.coproduct(&b)));
    }

    #[test]
    fn adjoint_is_a_left_action(i in 0usize..3, j in 0usize..3, u in arb_element()) {
        let uh = UhAlgebra::new(3);
        let (a, b) = (uh.gen(Gen::ALL[i]), uh.gen(Gen::ALL[j]));
        let u = build(&uh, &u);
        prop_assert_eq!(uh.adjoint(&uh.mul(&a, &b), &u), uh.adjoint(&a, &uh.adjoint(&b, &u)));
    }
}
