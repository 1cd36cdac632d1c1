use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use jordan_core::exactalg::{BigRat, RatFunc};
use jordan_core::exterior::{
    bimodule_checks, cartan_maurer, compare_cartan_maurer, d_squared_checks, da_a_difference, differential_r_form,
    exterior_ranks, inner_form_constant, invariant_flip_checks, lambda, printed_relation_checks, push_through_checks,
    symbolic_rank_two, theta_r_form, three_dim_relation_checks, trace_square, wedge_relations, BraidMatrix,
};
use jordan_core::focalc::{
    classify_3d, coaction_checks, constraints_check, determinant_differential, family_matrices, inner_commutators,
    load_family, matches_three_dim, reduce_to_sl, CalcError, ClassifyOptions, Family, InnerVerdict,
};
use jordan_core::hopf::{
    frt_relations, hopf_axioms, quantum_determinant, r_matrix_checks, Check, HopfPresentation, RMatrix,
};
use jordan_core::ncpoly::{orient_relations, Alphabet, MonomialOrder, NCPoly, RewriteSystem};
use jordan_core::qlie::{
    compare_brackets, compare_commutators, compare_enveloping, enveloping_relations, jacobi_check, jordanian_table,
    quantum_lie_algebra, woronowicz_iso,
};
use jordan_core::{jrep, uhsl2};
use rayon::prelude::*;

use crate::report::{CheckRecord, Params, SuiteReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Hopf,
    Calculus,
    Exterior,
    Qlie,
    Uhsl2,
    Reps,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Calculus => "calculus",
            Suite::Exterior => "exterior",
            Suite::Qlie => "qlie",
            Suite::Uhsl2 => "uhsl2",
            Suite::Reps => "reps",
            Suite::All => "all",
        }
    }
}

/// `--family` value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyArg(pub Family);

impl FromStr for FamilyArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.label().eq_ignore_ascii_case(s))
            .map(FamilyArg)
            .ok_or_else(|| format!("unknown family {s:?}; expected 1, 2, 3 or 3D"))
    }
}

/// `--z` value: symbolic or a rational number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZValue {
    Symbolic,
    Rational(BigRat),
}

impl FromStr for ZValue {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "sym" {
            return Ok(ZValue::Symbolic);
        }
        s.parse::<BigRat>().map(ZValue::Rational).map_err(|_| format!("expected a rational or `sym`, got {s:?}"))
    }
}

impl fmt::Display for ZValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZValue::Symbolic => f.write_str("sym"),
            ZValue::Rational(q) => write!(f, "{q}"),
        }
    }
}

impl ZValue {
    pub fn value(&self) -> RatFunc {
        match self {
            ZValue::Symbolic => RatFunc::z(),
            ZValue::Rational(q) => RatFunc::from_rat(q.clone()),
        }
    }

    fn is_symbolic(&self) -> bool {
        matches!(self, ZValue::Symbolic)
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub family: Option<Family>,
    pub z: ZValue,
    pub order: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { family: None, z: ZValue::Symbolic, order: uhsl2::UhAlgebra::DEFAULT_ORDER }
    }
}

type Outcome = Result<Vec<CheckRecord>, String>;

struct Task {
    group: String,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

fn task(group: impl Into<String>, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Task {
    Task { group: group.into(), run: Box::new(run) }
}

fn records(checks: Vec<Check>) -> Vec<CheckRecord> {
    checks.into_iter().map(CheckRecord::from).collect()
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

/// Printed lines known to be misprinted, as `(family, entry)`.
pub const KNOWN_COMMUTATOR_MISPRINTS: [(Family, &str); 4] =
    [(Family::One, "[χ1,χ3]"), (Family::Two, "[χ4,χ3]"), (Family::Three, "[χ1,χ4]"), (Family::Three, "[χ4,χ1]")];

fn hopf_tasks() -> Vec<Task> {
    vec![
        task("R-matrix", || {
            let r = r_matrix_checks(&RMatrix::jordanian());
            let classical = RMatrix::jordanian()
                .specialize(jordan_core::exactalg::Var::H, &RatFunc::zero())
                .specialize(jordan_core::exactalg::Var::G, &RatFunc::zero());
            Ok(vec![
                CheckRecord::new("R₂₁R = I", r.triangular),
                CheckRecord::new("(R̂ − 1)(R̂ + 1) = 0", r.hecke),
                CheckRecord::new("projector ranks 3 + 1", (r.plus_rank, r.minus_rank) == (3, 1)),
                CheckRecord::new("P₊ idempotent", r.plus_idempotent),
                CheckRecord::new("R at h = g = 0 is the identity", classical.0.is_identity()),
            ])
        }),
        task("FRT", || {
            let ar = HopfPresentation::matrix_bialgebra();
            let rels = frt_relations(&RMatrix::jordanian(), ar.alphabet(), ["a", "b", "c", "d"]);
            let mut out = vec![CheckRecord::new("16 FRT entries", rels.len() == 16)];
            let residual = rels.iter().map(|q| ar.normalize(q).map(|n| !n.is_zero())).collect::<Result<Vec<_>, _>>();
            out.push(CheckRecord::with_residuals(
                "RT₁T₂ − T₂T₁R normalizes to 0",
                residual.map_err(err)?.into_iter().filter(|&x| x).count(),
            ));
            let alpha = Alphabet::new(["a", "b", "c", "d"]);
            let order =
                MonomialOrder::new(&alpha, &["b", "a", "d", "c"], &[("a", 2), ("b", 2), ("d", 2)]).map_err(err)?;
            let from_frt = RewriteSystem::new(alpha, order.clone(), orient_relations(&order, &rels)).map_err(err)?;
            let mut outside = 0;
            for rule in ar.rewrite().rules() {
                let rel = &NCPoly::word(rule.lhs.clone()) - &rule.rhs;
                outside += usize::from(!from_frt.normalize(&rel).map_err(err)?.is_zero());
            }
            out.push(CheckRecord::with_residuals("listed relations lie in the FRT ideal", outside));
            Ok(out)
        }),
        task("confluence", || {
            let mut out = Vec::new();
            for p in [HopfPresentation::matrix_bialgebra(), HopfPresentation::gl(), HopfPresentation::sl()] {
                let amb = p.rewrite().check_overlaps().map_err(err)?;
                let bad = amb.iter().filter(|a| !a.resolvable()).count();
                out.push(CheckRecord::with_residuals(format!("{}: {} overlaps resolve", p.name(), amb.len()), bad));
            }
            Ok(out)
        }),
        task("axioms", || {
            let mut out = Vec::new();
            for p in [HopfPresentation::matrix_bialgebra(), HopfPresentation::gl(), HopfPresentation::sl()] {
                out.extend(
                    hopf_axioms(&p).map_err(err)?.into_iter().map(|c| CheckRecord::new(format!("{}: {}", p.name(), c.name), c.holds)),
                );
            }
            Ok(out)
        }),
        task("determinant", || {
            let mut out = Vec::new();
            for p in [HopfPresentation::matrix_bialgebra(), HopfPresentation::gl()] {
                let rep = quantum_determinant(&p).map_err(err)?;
                out.extend(rep.checks.into_iter().map(|c| CheckRecord::new(format!("{}: {}", p.name(), c.name), c.holds)));
            }
            let sl = quantum_determinant(&HopfPresentation::sl()).map_err(err)?;
            out.push(CheckRecord::new("SL: 𝒟 = 1", sl.determinant == NCPoly::one()));
            Ok(out)
        }),
    ]
}

fn verdict_label(v: &InnerVerdict) -> String {
    match v {
        InnerVerdict::Inner(c) => format!("inner, d = ({c})[Tr_hΘ, ·]"),
        InnerVerdict::CentralTrace => "central".into(),
        InnerVerdict::Eigen(c) => format!("[Tr_hΘ, x] = ({c}) x Tr_hΘ"),
        InnerVerdict::Neither => "neither inner nor central".into(),
    }
}

fn half_linear(z: &RatFunc, n: i64, k: i64) -> RatFunc {
    &(z * &RatFunc::ratio(k, 2)) + &RatFunc::ratio(n, 2)
}

fn calculus_tasks(families: &[Family], z: &ZValue, cross: bool) -> Vec<Task> {
    let mut tasks = Vec::new();
    for &f in families {
        let z = z.clone();
        tasks.push(task(format!("family {}", f.label()), move || {
            let zv = z.value();
            let calc = load_family(f, &zv).map_err(err)?;
            let rep = constraints_check(&calc).map_err(err)?;
            let mut out = vec![CheckRecord::with_residuals("constraints 1–3", rep.residual_count())];
            if let Some(first) = rep.failures.first() {
                out[0].note = Some(format!("{:?} from {}: {}", first.constraint, first.source, first.value));
            }
            out.push(CheckRecord::new("𝔇 invertible", rep.determinant_invertible));
            if f.dim() == 3 {
                out.push(CheckRecord::new("𝔇 = I", rep.determinant_is_identity));
            }
            out.extend(records(coaction_checks(&calc).map_err(err)?));
            if f.dim() == 4 {
                let expected = match f {
                    Family::Two => half_linear(&zv, 2, -3),
                    _ => half_linear(&zv, 2, 1),
                };
                let (_, factor) = determinant_differential(&calc).map_err(err)?;
                out.push(
                    CheckRecord::new(format!("d𝒟 = ({expected}) 𝒟 Tr_hΘ"), factor.as_ref() == Some(&expected))
                        .note(factor.map_or("not proportional".into(), |c| c.to_string())),
                );
                let verdict = inner_commutators(&calc).map_err(err)?.verdict;
                // at z = 0 all three families coincide with family 2
                let expected = match f {
                    Family::One if !zv.is_zero() => InnerVerdict::Inner((&RatFunc::from_int(2) * &zv).recip().map_err(err)?),
                    Family::Three if !zv.is_zero() => InnerVerdict::Eigen(zv.clone()),
                    _ => InnerVerdict::CentralTrace,
                };
                out.push(
                    CheckRecord::new(format!("Tr_hΘ {}", verdict_label(&expected)), verdict == expected)
                        .note(verdict_label(&verdict)),
                );
            }
            if matches!(f, Family::One | Family::Three) {
                let singular = load_family(f, &RatFunc::from_int(-1));
                out.push(CheckRecord::new(
                    "𝔇 singular at z = −1",
                    matches!(singular, Err(CalcError::DeterminantNotInvertible)),
                ));
            }
            Ok(out)
        }));
    }
    if cross {
        tasks.push(task("z = 0", || {
            let zero = RatFunc::zero();
            let sets: Vec<_> =
                [Family::One, Family::Two, Family::Three].iter().map(|&f| family_matrices(f, &zero)).collect::<Result<_, _>>().map_err(err)?;
            let r3 = reduce_to_sl(&load_family(Family::Three, &zero).map_err(err)?).map_err(err)?;
            Ok(vec![
                CheckRecord::new("ABCD of families 1, 2, 3 coincide", sets[0] == sets[1] && sets[1] == sets[2]),
                CheckRecord::new("family 3 reduces to the 3D calculus", matches_three_dim(&r3.calculus).map_err(err)?),
            ])
        }));
        tasks.push(task("3D classification", || {
            let r = classify_3d(&ClassifyOptions::default()).map_err(err)?;
            Ok(vec![
                CheckRecord::new("exactly one solution", r.solutions.len() == 1)
                    .note(format!("{} unknowns, linear rank {}", r.unknowns, r.linear_rank)),
                CheckRecord::new("solution is the 3D ABCD set", r.matches_known),
            ])
        }));
    }
    tasks
}

fn exterior_tasks(families: &[Family], z: &ZValue) -> Vec<Task> {
    let mut tasks = Vec::new();
    for &f in families {
        let z = z.clone();
        tasks.push(task(format!("family {}", f.label()), move || {
            let zv = z.value();
            let calc = load_family(f, &zv).map_err(err)?;
            let braid = lambda(&calc);
            let cm = cartan_maurer(&calc);
            let rels = wedge_relations(&calc, &cm).map_err(err)?;
            let rs = rels.rewrite_system().map_err(err)?;
            let d = calc.dim();
            let mut out = vec![CheckRecord::new("braid equation", braid.satisfies_braid_equation())];
            let classical = load_family(f, &RatFunc::zero()).map_err(err)?;
            let point = [jordan_core::exactalg::rat(0), jordan_core::exactalg::rat(0), jordan_core::exactalg::rat(0)];
            let op = lambda(&classical).specialised(&point).map_err(err)?;
            let flip = BraidMatrix::from_operator(d, op.map(|x| RatFunc::from_rat(x.clone())));
            out.push(CheckRecord::new("Λ at h = g = z = 0 is the flip", flip.is_flip()));
            out.push(CheckRecord::new("wedge relations confluent", rs.is_confluent().map_err(err)?));
            let ranks: Vec<_> = exterior_ranks(&braid, &rels).map_err(err)?;
            let got: Vec<Option<usize>> = ranks.iter().map(|r| r.exact()).collect();
            let expected: Vec<Option<usize>> =
                (1..=d).map(|n| Some((0..n).fold(1, |acc, i| acc * (d - i) / (i + 1)))).collect();
            out.push(CheckRecord::new("rank Wₙ = C(d, n)", got == expected).note(format!("{got:?}")));
            out.push(CheckRecord::new("rank W₂ symbolic", symbolic_rank_two(&braid) == d * (d - 1) / 2));
            out.push(CheckRecord::new("Tr_hΘ ∧ Tr_hΘ = 0", trace_square(&calc, &rs).map_err(err)?.is_zero()));
            if d == 4 {
                let expected = match f {
                    Family::One => &RatFunc::from_int(-2) * &zv,
                    _ => RatFunc::zero(),
                };
                let got = inner_form_constant(&calc, &rs, &cm).map_err(err)?;
                out.push(
                    CheckRecord::new(format!("[Tr_hΘ, θᵢ]₊ = ({expected}) Σ𝒞θθ"), got.as_ref() == Some(&expected))
                        .note(got.map_or("not proportional".into(), |c| c.to_string())),
                );
            } else {
                out.extend(records(three_dim_relation_checks(&calc, &cm, &rs).map_err(err)?));
            }
            out.extend(records(d_squared_checks(&calc, &cm, &rs).map_err(err)?));
            out.extend(records(push_through_checks(&calc, &rels, &rs).map_err(err)?));
            out.extend(records(bimodule_checks(&calc, &braid).map_err(err)?));
            out.extend(records(invariant_flip_checks(&calc, &braid).map_err(err)?));
            if z.is_symbolic() {
                out.extend(records(printed_relation_checks(f, &rs).map_err(err)?));
                let cmp = compare_cartan_maurer(&cm, &rs).map_err(err)?;
                out.push(CheckRecord::new("𝒞 matches the printed matrices", cmp.identical && cmp.equivalent));
            } else {
                out.push(CheckRecord::skipped("printed wedge relations", "printed tables are symbolic in z"));
            }
            if f == Family::One {
                let at_zero = load_family(f, &RatFunc::zero()).map_err(err)?;
                out.extend(records(differential_r_form(&at_zero).map_err(err)?));
                out.extend(records(theta_r_form(&at_zero).map_err(err)?));
                if z.is_symbolic() {
                    out.push(CheckRecord::new("d(a)·a expansion", da_a_difference(&calc).map_err(err)?.is_zero()));
                }
            }
            Ok(out)
        }));
    }
    tasks
}

fn qlie_tasks(families: &[Family], z: &ZValue) -> Vec<Task> {
    let mut tasks = Vec::new();
    for &f in families {
        let z = z.clone();
        tasks.push(task(format!("family {}", f.label()), move || {
            let calc = load_family(f, &z.value()).map_err(err)?;
            let qla = quantum_lie_algebra(&calc);
            let jacobi = jacobi_check(&qla);
            let mut out = vec![CheckRecord::with_residuals(
                format!("quantum Jacobi on {} triples", jacobi.triples),
                jacobi.failures.len(),
            )];
            let env = enveloping_relations(&qla).map_err(err)?;
            let pbw = env.pbw_report(4).map_err(err)?;
            out.push(CheckRecord::with_residuals(format!("PBW basis {}", pbw.basis), pbw.unresolved));
            out.push(CheckRecord::new("normal words match ordered monomials to degree 4", pbw.holds()));
            if z.is_symbolic() {
                for e in compare_brackets(&qla, f).map_err(err)? {
                    out.push(CheckRecord::new(format!("bracket {}", e.printed), e.matches).note(e.computed));
                }
                for e in compare_commutators(&qla, f).map_err(err)? {
                    let key = e.printed.split_once(" =").map_or(e.printed, |p| p.0);
                    let rec = if e.matches {
                        CheckRecord::new(format!("commutator {key}"), true)
                    } else {
                        let known = KNOWN_COMMUTATOR_MISPRINTS.contains(&(f, key));
                        CheckRecord::new(format!("commutator {key} misprinted"), known).note(e.computed)
                    };
                    out.push(rec);
                }
                for e in compare_enveloping(&env, f).map_err(err)? {
                    out.push(CheckRecord::new(format!("enveloping {}", e.printed), e.matches).note(e.computed));
                }
            }
            if f == Family::ThreeD {
                let iso = woronowicz_iso(&qla, &jordanian_table()).map_err(err)?;
                out.extend(iso.checks.into_iter().map(|c| CheckRecord::new(format!("X_h, H_h, Y_h: {}", c.name), c.holds)));
            }
            Ok(out)
        }));
    }
    tasks
}

fn uhsl2_tasks(order: usize) -> Vec<Task> {
    vec![
        task("Casimir", move || Ok(records(uhsl2::casimir_checks(order)))),
        task("ad-submodule", move || Ok(records(uhsl2::submodule_checks(order)))),
        task("Hopf", move || Ok(records(uhsl2::hopf_checks(order)))),
        task("order stability", move || Ok(records(uhsl2::order_stability_checks(order)))),
    ]
}

fn reps_tasks() -> Vec<Task> {
    vec![task("representations", || jrep::representation_suite().map(records).map_err(err))]
}

fn tasks(suite: Suite, opts: &Options) -> Vec<Task> {
    let families: Vec<Family> = opts.family.map_or(Family::ALL.to_vec(), |f| vec![f]);
    let prefixed = |name: &str, ts: Vec<Task>| {
        ts.into_iter().map(|t| Task { group: format!("{name}/{}", t.group), run: t.run }).collect::<Vec<_>>()
    };
    match suite {
        Suite::Hopf => hopf_tasks(),
        Suite::Calculus => calculus_tasks(&families, &opts.z, opts.family.is_none()),
        Suite::Exterior => exterior_tasks(&families, &opts.z),
        Suite::Qlie => qlie_tasks(&families, &opts.z),
        Suite::Uhsl2 => uhsl2_tasks(opts.order),
        Suite::Reps => reps_tasks(),
        Suite::All => [
            prefixed("hopf", hopf_tasks()),
            prefixed("calculus", calculus_tasks(&families, &opts.z, opts.family.is_none())),
            prefixed("exterior", exterior_tasks(&families, &opts.z)),
            prefixed("qlie", qlie_tasks(&families, &opts.z)),
            prefixed("uhsl2", uhsl2_tasks(opts.order)),
            prefixed("reps", reps_tasks()),
        ]
        .into_iter()
        .flatten()
        .collect(),
    }
}

pub fn params(suite: Suite, opts: &Options) -> Params {
    let uses_family = matches!(suite, Suite::Calculus | Suite::Exterior | Suite::Qlie | Suite::All);
    Params {
        z: opts.z.to_string(),
        family: if uses_family { Some(opts.family.map_or("all".into(), |f| f.label().into())) } else { None },
        order: matches!(suite, Suite::Uhsl2 | Suite::All).then_some(opts.order),
        ..Params::default()
    }
}

/// Run a suite; task groups run in parallel on the current rayon pool, and the report keeps
/// their declared order. `timings` adds per-check elapsed times, which makes output vary
/// between runs.
pub fn run_suite(suite: Suite, opts: &Options, timings: bool) -> SuiteReport {
    let outcomes: Vec<(String, Outcome, Duration)> = tasks(suite, opts)
        .into_par_iter()
        .map(|t| {
            let start = Instant::now();
            let out = (t.run)();
            (t.group, out, start.elapsed())
        })
        .collect();
    let mut report = SuiteReport::new(suite.name(), params(suite, opts));
    for (group, outcome, elapsed) in outcomes {
        let checks = outcome.unwrap_or_else(|e| vec![CheckRecord::new("completes", false).note(e)]);
        report.push_group(&group, checks, timings.then_some(elapsed));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_flags() {
        assert_eq!("3D".parse::<FamilyArg>().unwrap(), FamilyArg(Family::ThreeD));
        assert_eq!("3d".parse::<FamilyArg>().unwrap(), FamilyArg(Family::ThreeD));
        assert!("4".parse::<FamilyArg>().is_err());
        assert_eq!("sym".parse::<ZValue>().unwrap(), ZValue::Symbolic);
        assert_eq!("-1/2".parse::<ZValue>().unwrap().to_string(), "-1/2");
        assert!("z".parse::<ZValue>().is_err());
    }

    #[test]
    fn params_record_the_bindings() {
        let opts = Options { family: Some(Family::Two), z: ZValue::Rational(BigRat::from_integer(3.into())), order: 4 };
        let p = params(Suite::Calculus, &opts);
        assert_eq!((p.z.as_str(), p.family.as_deref(), p.order), ("3", Some("2"), None));
        assert_eq!(params(Suite::Uhsl2, &opts).order, Some(4));
    }

    #[test]
    fn reps_suite_reports_the_killing_conflict_only() {
        let report = run_suite(Suite::Reps, &Options::default(), false);
        let failed: Vec<_> = report.failures().map(|c| c.id.as_str()).collect();
        assert_eq!(failed, ["representations: κ(Y_h,H_h) = (-8)*h"]);
    }

    #[test]
    fn uhsl2_suite_passes_at_low_order() {
        let opts = Options { order: 3, ..Options::default() };
        let report = run_suite(Suite::Uhsl2, &opts, false);
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        assert!(report.checks.len() > 21);
    }

    #[test]
    fn timings_are_opt_in() {
        let a = run_suite(Suite::Hopf, &Options::default(), false);
        assert!(a.checks.iter().all(|c| c.elapsed_ms.is_none()));
        assert_eq!(a, run_suite(Suite::Hopf, &Options::default(), false));
        assert!(a.passed());
        let b = run_suite(Suite::Hopf, &Options::default(), true);
        assert!(b.checks.iter().all(|c| c.elapsed_ms.is_some()));
    }
}
