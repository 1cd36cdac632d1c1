use super::*;
use crate::exactalg::RatFunc;

fn z() -> RatFunc {
    RatFunc::z()
}

#[test]
fn family_entries() {
    let f1 = family_matrices(Family::One, &z()).unwrap();
    assert_eq!(f1[0][(0, 0)], RatFunc::ratio(3, 2) * &z() + RatFunc::one());
    let f3 = family_matrices(Family::Three, &z()).unwrap();
    assert!(f3[2].is_zero());
    let at0 = |f| family_matrices(f, &RatFunc::zero()).unwrap();
    assert_eq!(at0(Family::One), at0(Family::Two));
    assert_eq!(at0(Family::Two), at0(Family::Three));
}

#[test]
fn singular_parameter_rejected() {
    for f in [Family::One, Family::Three] {
        let e = load_family(f, &RatFunc::from_int(-1)).unwrap_err();
        assert_eq!(e, CalcError::DeterminantNotInvertible);
        assert_eq!(e.to_string(), "𝒟-representation not invertible");
    }
}

#[test]
fn generator_differentials() {
    let c = load_family(Family::One, &z()).unwrap();
    let host = c.host();
    let a = host.gen("a").unwrap();
    let da = c.differential(&a).unwrap();
    assert_eq!(da.0, vec![a.clone(), NCPoly::zero(), host.gen("b").unwrap(), NCPoly::zero()]);
    assert!(c.differential(&NCPoly::one()).unwrap().is_zero());
}

#[test]
fn theta_commutation_on_a() {
    let c = load_family(Family::Two, &z()).unwrap();
    let host = c.host();
    let a = host.gen("a").unwrap();
    let b = host.gen("b").unwrap();
    let [am, _, cm, _] = c.matrices();
    for i in 0..4 {
        let f = c.theta_commute(i, &a).unwrap();
        for j in 0..4 {
            let expect = &a.scale(&am[(i, j)]) + &b.scale(&cm[(i, j)]);
            assert_eq!(f.0[j], expect);
        }
    }
}

#[test]
fn classical_limit_commutes() {
    let zero = RatFunc::zero();
    let c = load_family(Family::Two, &zero).unwrap();
    let host = c.host().clone();
    let spec = |p: &NCPoly| {
        p.map_coeffs(|x| {
            x.substitute(crate::exactalg::Var::H, &zero)
                .unwrap()
                .substitute(crate::exactalg::Var::G, &zero)
                .unwrap()
        })
    };
    for x in ["a", "b", "c", "d"] {
        let g = host.gen(x).unwrap();
        for i in 0..4 {
            let f = c.theta_commute(i, &g).unwrap();
            for j in 0..4 {
                let expect = if i == j { g.clone() } else { NCPoly::zero() };
                assert_eq!(spec(&f.0[j]), expect);
            }
        }
    }
}

#[test]
fn theta_on_determinant_recursion_matches_direct() {
    let c = load_family(Family::One, &z()).unwrap();
    let det = c.host().parse("ad - bc + h ac").unwrap();
    let rec = c.star(&det).unwrap();
    let direct = c.star_direct(&det).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(c.host().normalize(direct.get(i, j)).unwrap(), *rec.get(i, j));
        }
    }
}

#[test]
fn families_satisfy_constraints() {
    for f in Family::ALL {
        let c = load_family(f, &z()).unwrap();
        let rep = constraints_check(&c).unwrap();
        assert!(rep.failures.is_empty(), "family {f}: {:?}", rep.failures.first());
        assert!(rep.all_pass(c.dim()), "family {f}");
    }
}

#[test]
fn perturbed_entry_fails() {
    let c = load_family(Family::One, &z()).unwrap().perturbed(0, 0, 0, &RatFunc::one()).unwrap();
    let rep = constraints_check(&c).unwrap();
    assert!(rep.residual_count() > 0);
}

#[test]
fn coaction_is_comodule() {
    for f in [Family::One, Family::ThreeD] {
        let c = load_family(f, &z()).unwrap();
        for chk in coaction_checks(&c).unwrap() {
            assert!(chk.holds, "{f}: {}", chk.name);
        }
    }
}

#[test]
fn determinant_differentials() {
    let half = |n: i64, k: i64| &(&z() * &RatFunc::ratio(k, 2)) + &RatFunc::ratio(n, 2);
    for (f, expect) in [(Family::One, half(2, 1)), (Family::Two, half(2, -3)), (Family::Three, half(2, 1))] {
        let c = load_family(f, &z()).unwrap();
        let (_, factor) = determinant_differential(&c).unwrap();
        assert_eq!(factor, Some(expect), "family {f}");
    }
}

#[test]
fn inner_verdicts() {
    let v = |f| inner_commutators(&load_family(f, &z()).unwrap()).unwrap().verdict;
    let two_z = &RatFunc::from_int(2) * &z();
    assert_eq!(v(Family::One), InnerVerdict::Inner(two_z.recip().unwrap()));
    assert_eq!(v(Family::Two), InnerVerdict::CentralTrace);
    assert_eq!(v(Family::Three), InnerVerdict::Eigen(z()));
}

#[test]
fn trace_is_the_unique_biinvariant_form() {
    let forms = biinvariant_forms(&crate::hopf::HopfPresentation::gl()).unwrap();
    assert_eq!(forms.len(), 1);
    let w = &forms[0];
    let s = w[0].clone();
    let hg = &RatFunc::h() + &RatFunc::g();
    let norm: Vec<RatFunc> = w.iter().map(|x| x.checked_div(&s).unwrap()).collect();
    assert_eq!(norm, vec![RatFunc::one(), RatFunc::zero(), hg, RatFunc::one()]);
}

#[test]
fn reduction_to_three_dimensions() {
    let sl = crate::hopf::HopfPresentation::sl();
    let alpha = reduction_coefficients(&sl).unwrap();
    let h2 = &RatFunc::from_int(-2) * &RatFunc::h();
    assert_eq!(alpha, [RatFunc::from_int(-1), RatFunc::zero(), h2]);
    let zero = RatFunc::zero();
    let r3 = reduce_to_sl(&load_family(Family::Three, &zero).unwrap()).unwrap();
    assert!(matches_three_dim(&r3.calculus).unwrap());
    let r1 = reduce_to_sl(&load_family(Family::One, &zero).unwrap()).unwrap();
    assert_eq!(r1.calculus.matrices(), r3.calculus.matrices());
    let a = &r3.calculus.matrices()[0];
    let h = RatFunc::h();
    assert_eq!(a[(0, 2)], -&h);
    assert_eq!(a[(1, 0)], &RatFunc::from_int(2) * &h);
}

#[test]
fn three_dim_determinant_is_identity() {
    let c = load_family(Family::ThreeD, &z()).unwrap();
    assert!(c.determinant_rep().is_identity());
}

#[test]
fn three_dim_classification_is_unique() {
    let r = classify_3d(&ClassifyOptions::default()).unwrap();
    assert_eq!(r.unknowns, 36);
    assert_eq!(r.solutions.len(), 1);
    assert!(r.matches_known);
    assert_eq!(r.solutions[0], family_matrices(Family::ThreeD, &RatFunc::zero()).unwrap());
}

#[test]
fn classical_three_dim_calculus() {
    // Commutative functions: θᵢ x = x θᵢ, so A = D = I and B = C = 0.
    let r = classify_3d(&ClassifyOptions { h_value: Some(0), ..Default::default() }).unwrap();
    assert_eq!(r.solutions.len(), 1);
    let [a, b, c, d] = &r.solutions[0];
    assert!(a.is_identity() && d.is_identity() && b.is_zero() && c.is_zero());
    assert!(r.matches_known);
}

fn family_one() -> &'static FirstOrderCalculus {
    static CALC: std::sync::OnceLock<FirstOrderCalculus> = std::sync::OnceLock::new();
    CALC.get_or_init(|| load_family(Family::One, &z()).unwrap())
}

fn host_poly() -> impl Strategy<Value = NCPoly> {
    let host = family_one().host();
    let gens: Vec<_> = ["a", "b", "c", "d"].iter().map(|g| host.alphabet().sym(g).unwrap()).collect();
    proptest::collection::vec((proptest::collection::vec(proptest::sample::select(gens), 0..3), -2i64..3), 1..3)
        .prop_map(|terms| NCPoly::from_terms(terms.into_iter().map(|(w, c)| (Word(w), RatFunc::from_int(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn differential_obeys_leibniz(p in host_poly(), q in host_poly()) {
        let c = family_one();
        let host = c.host();
        let pq = host.mul(&host.normalize(&p).unwrap(), &host.normalize(&q).unwrap()).unwrap();
        let lhs = c.differential(&pq).unwrap();
        let rhs = &c.right_mul(&c.differential(&p).unwrap(), &q).unwrap()
            + &c.left_mul(&p, &c.differential(&q).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn theta_commutation_is_multiplicative(p in host_poly(), q in host_poly(), i in 0usize..4) {
        let c = family_one();
        let host = c.host();
        let pq = host.mul(&host.normalize(&p).unwrap(), &host.normalize(&q).unwrap()).unwrap();
        let staged = c.right_mul(&c.theta_commute(i, &p).unwrap(), &q).unwrap();
        prop_assert_eq!(c.theta_commute(i, &pq).unwrap(), staged);
    }
}

use crate::ncpoly::{NCPoly, Word};
use alloc::string::ToString;
use proptest::prelude::*;
use alloc::vec;
use alloc::vec::Vec;
