use jordan_core::exactalg::RatFunc;
use jordan_core::exterior::{cartan_maurer, exterior_ranks, lambda, wedge_relations};
use jordan_core::focalc::{constraints_check, load_family, Family};
use jordan_core::hopf::{r_matrix_checks, RMatrix};
use jordan_core::qlie::{jacobi_check, jordanian_table, quantum_lie_algebra, woronowicz_iso};
use jordan_core::uhsl2;

#[test]
fn three_dim_calculus_end_to_end() {
    assert!(r_matrix_checks(&RMatrix::jordanian()).all_pass());
    let calc = load_family(Family::ThreeD, &RatFunc::z()).unwrap();
    assert!(constraints_check(&calc).unwrap().all_pass(3));
    let rels = wedge_relations(&calc, &cartan_maurer(&calc)).unwrap();
    let ranks: Vec<_> = exterior_ranks(&lambda(&calc), &rels).unwrap().iter().map(|r| r.exact()).collect();
    assert_eq!(ranks, [Some(3), Some(3), Some(1)]);
    let qla = quantum_lie_algebra(&calc);
    assert!(jacobi_check(&qla).holds());
    let iso = woronowicz_iso(&qla, &jordanian_table()).unwrap();
    assert!(iso.checks.iter().all(|c| c.holds));
}

#[test]
fn enveloping_algebra_at_low_order() {
    for c in uhsl2::casimir_checks(3).into_iter().chain(uhsl2::submodule_checks(3)) {
        assert!(c.holds, "{}", c.name);
    }
}
