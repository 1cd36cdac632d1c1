use std::sync::OnceLock;

use proptest::prelude::*;

use super::*;
use crate::exactalg::{rat, Matrix, RatFunc};
use crate::focalc::{load_family, Family, FirstOrderCalculus};
use crate::ncpoly::RewriteSystem;

struct Fixture {
    calc: FirstOrderCalculus,
    lambda: BraidMatrix,
    cm: CartanMaurer,
    rels: WedgeRelations,
    rs: RewriteSystem,
}

fn build(family: Family, z: &RatFunc) -> Fixture {
    let calc = load_family(family, z).unwrap();
    let lambda = lambda(&calc);
    let cm = cartan_maurer(&calc);
    let rels = wedge_relations(&calc, &cm).unwrap();
    let rs = rels.rewrite_system().unwrap();
    Fixture { calc, lambda, cm, rels, rs }
}

fn fixture(family: Family) -> &'static Fixture {
    static CELLS: [OnceLock<Fixture>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let k = Family::ALL.iter().position(|f| *f == family).unwrap();
    CELLS[k].get_or_init(|| build(family, &RatFunc::z()))
}

fn all_hold(checks: &[crate::hopf::Check]) -> bool {
    checks.iter().all(|c| c.holds)
}

#[test]
fn braid_equation_holds() {
    for f in Family::ALL {
        assert!(fixture(f).lambda.satisfies_braid_equation(), "{f}");
    }
}

#[test]
fn classical_braiding_is_the_flip() {
    let zero = RatFunc::zero();
    for f in Family::ALL {
        let calc = load_family(f, &zero).unwrap();
        let point = [rat(0), rat(0), rat(0)];
        let op = lambda(&calc).specialised(&point).unwrap();
        let flip = BraidMatrix::from_operator(calc.dim(), op.map(|x| RatFunc::from_rat(x.clone())));
        assert!(flip.is_flip(), "{f}");
    }
}

#[test]
fn relation_counts_and_confluence() {
    for f in Family::ALL {
        let fx = fixture(f);
        let expected = if f.dim() == 4 { 10 } else { 6 };
        assert_eq!(fx.rels.rules().count(), expected, "{f}");
        assert!(fx.rs.is_confluent().unwrap(), "{f}");
    }
}

#[test]
fn differentiated_relations_span_the_braid_kernel() {
    for f in Family::ALL {
        let fx = fixture(f);
        let from_braid = solve_relations(fx.calc.dim(), &braid_kernel_relations(&fx.lambda)).unwrap();
        assert_eq!(from_braid, fx.rels, "{f}");
    }
}

#[test]
fn printed_relations_reduce_to_zero() {
    for f in Family::ALL {
        let checks = printed_relation_checks(f, &fixture(f).rs).unwrap();
        for c in &checks {
            assert!(c.holds, "{}", c.name);
        }
    }
}

#[test]
fn families_two_and_three_share_relations() {
    assert_eq!(fixture(Family::Two).rels, fixture(Family::Three).rels);
}

#[test]
fn family_one_at_zero_matches_family_two() {
    let at_zero = build(Family::One, &RatFunc::zero());
    assert_eq!(at_zero.rels, fixture(Family::Two).rels);
}

#[test]
fn exterior_ranks_are_binomial() {
    for f in Family::ALL {
        let fx = fixture(f);
        let ranks: Vec<usize> = exterior_ranks(&fx.lambda, &fx.rels)
            .unwrap()
            .iter()
            .map(|r| r.exact().expect("certified"))
            .collect();
        let expected: &[usize] = if f.dim() == 4 { &[4, 6, 4, 1] } else { &[3, 3, 1] };
        assert_eq!(ranks, expected, "{f}");
    }
}

#[test]
fn rank_two_symbolically() {
    for f in Family::ALL {
        let fx = fixture(f);
        let d = fx.calc.dim();
        assert_eq!(symbolic_rank_two(&fx.lambda), d * (d - 1) / 2, "{f}");
    }
}

#[test]
fn trace_form_squares_to_zero() {
    for f in Family::ALL {
        let fx = fixture(f);
        assert!(trace_square(&fx.calc, &fx.rs).unwrap().is_zero(), "{f}");
    }
}

#[test]
fn anticommutator_with_trace_is_cartan_maurer() {
    let one = fixture(Family::One);
    let lambda = inner_form_constant(&one.calc, &one.rs, &one.cm).unwrap();
    assert_eq!(lambda, Some(&RatFunc::from_int(-2) * &RatFunc::z()));
    for f in [Family::Two, Family::Three] {
        let fx = fixture(f);
        assert_eq!(inner_form_constant(&fx.calc, &fx.rs, &fx.cm).unwrap(), Some(RatFunc::zero()), "{f}");
    }
}

#[test]
fn differential_squares_to_zero() {
    for f in Family::ALL {
        let fx = fixture(f);
        let checks = d_squared_checks(&fx.calc, &fx.cm, &fx.rs).unwrap();
        assert_eq!(checks.len(), 4);
        assert!(all_hold(&checks), "{f}: {checks:?}");
    }
}

#[test]
fn cartan_maurer_matches_printed_matrices() {
    for f in Family::ALL {
        let fx = fixture(f);
        let cmp = compare_cartan_maurer(&fx.cm, &fx.rs).unwrap();
        assert!(cmp.identical && cmp.equivalent, "{f}");
    }
}

#[test]
fn perturbed_cartan_maurer_breaks_d_squared() {
    let fx = fixture(Family::Two);
    let mut mats: Vec<Matrix<RatFunc>> = (0..4).map(|k| fx.cm.matrix(k).clone()).collect();
    mats[0][(0, 1)] = &mats[0][(0, 1)] + &RatFunc::one();
    let cm = CartanMaurer::from_matrices(mats);
    assert!(!all_hold(&d_squared_checks(&fx.calc, &cm, &fx.rs).unwrap()));
}

#[test]
fn three_dim_quadratic_relation() {
    let fx = fixture(Family::ThreeD);
    let checks = three_dim_relation_checks(&fx.calc, &fx.cm, &fx.rs).unwrap();
    assert_eq!(checks.len(), 3);
    assert!(all_hold(&checks), "{checks:?}");
    assert!(fixture(Family::One).cm.constraint().is_none());
}

#[test]
fn relations_pass_through_generators() {
    for f in Family::ALL {
        let fx = fixture(f);
        assert!(all_hold(&push_through_checks(&fx.calc, &fx.rels, &fx.rs).unwrap()), "{f}");
    }
}

#[test]
fn braiding_is_a_bimodule_map() {
    for f in Family::ALL {
        let fx = fixture(f);
        assert!(all_hold(&bimodule_checks(&fx.calc, &fx.lambda).unwrap()), "{f}");
    }
}

#[test]
fn braiding_flips_invariant_forms() {
    for f in Family::ALL {
        let fx = fixture(f);
        assert!(all_hold(&invariant_flip_checks(&fx.calc, &fx.lambda).unwrap()), "{f}");
    }
}

#[test]
fn r_matrix_form_at_zero() {
    let calc = load_family(Family::One, &RatFunc::zero()).unwrap();
    let dr = differential_r_form(&calc).unwrap();
    let tr = theta_r_form(&calc).unwrap();
    let failed: Vec<_> = dr.iter().chain(&tr).filter(|c| !c.holds).map(|c| c.name.clone()).collect();
    assert!(failed.is_empty(), "{failed:?}");
}

#[test]
fn r_matrix_form_fails_away_from_zero() {
    let calc = &fixture(Family::One).calc;
    assert!(!all_hold(&differential_r_form(calc).unwrap()));
}

#[test]
fn da_times_a_expansion() {
    let diff = da_a_difference(&fixture(Family::One).calc).unwrap();
    assert!(diff.is_zero(), "{diff:?}");
}

#[test]
fn antisymmetrizer_two_is_id_minus_braid() {
    let fx = fixture(Family::ThreeD);
    let w = antisymmetrizer(fx.lambda.operator(), 3, 2);
    assert_eq!(w, Matrix::identity(9).sub(fx.lambda.operator()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn rank_and_nullity_fill_the_tensor_power(n in 2usize..=3, k in 0usize..4) {
        let fx = fixture(Family::ALL[k]);
        let d = fx.calc.dim();
        let cert = &exterior_ranks(&fx.lambda, &fx.rels).unwrap()[n - 1];
        prop_assert_eq!(cert.n, n);
        prop_assert_eq!(cert.lower + cert.nullity, d.pow(n as u32));
    }

    #[test]
    fn wedge_reduction_is_linear(a in -5i64..5, b in -5i64..5, s in 0usize..16, t in 0usize..16) {
        let fx = fixture(Family::Two);
        let unit = |p: usize| {
            let mut c = vec![RatFunc::zero(); 16];
            c[p] = RatFunc::one();
            reduce_pairs(&fx.rs, 4, &c).unwrap()
        };
        let mut c = vec![RatFunc::zero(); 16];
        c[s] = &c[s] + &RatFunc::from_int(a);
        c[t] = &c[t] + &RatFunc::from_int(b);
        let combined = reduce_pairs(&fx.rs, 4, &c).unwrap();
        let expected = &unit(s).scale(&RatFunc::from_int(a)) + &unit(t).scale(&RatFunc::from_int(b));
        prop_assert_eq!(combined, expected);
    }
}

