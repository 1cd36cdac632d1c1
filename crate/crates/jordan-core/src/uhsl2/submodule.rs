use alloc::format;
use alloc::vec::Vec;

use super::algebra::{series_of, UhAlgebra};
use super::element::{Gen, UhElement, UhTensor};
use crate::exactalg::{BigRat, TruncSeries};
use crate::hopf::Check;
use num_traits::Zero;
use crate::qlie::{jordanian_table, BracketTable};

fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

/// Action of the generators on `X_h, H_h, Y_h`: the entry `[g,B]` is `g ⊳ B_h`.
pub const GENERATOR_ACTIONS: [&str; 9] = [
    "[X,X] = 0",
    "[X,H] = -2 X",
    "[X,Y] = H",
    "[H,X] = 2 X",
    "[H,H] = 4h X",
    "[H,Y] = -2 Y - 2h H - h^2 X",
    "[Y,X] = -H + 2h X",
    "[Y,H] = 2 Y + 3h^2 X",
    "[Y,Y] = -2h Y - h^2 H - h^3 X",
];

pub fn generator_action_table() -> BracketTable {
    BracketTable::parse(&["X", "H", "Y"], &GENERATOR_ACTIONS).expect("well-formed table")
}

impl UhAlgebra {
    /// `C = (Y sinh hX + sinh hX Y)/2h + H²/4 + (sinh hX)²/4`.
    pub fn casimir(&self) -> UhElement {
        let s = self.sinh_x_over_h();
        let y = self.gen(Gen::Y);
        let hh = self.gen(Gen::H);
        let sym = &self.mul(&y, &s) + &self.mul(&s, &y);
        let sq = self.mul(&s, &s).shift(2);
        let quarter = rat(1, 4);
        &(&sym.scale_rat(&rat(1, 2)) + &self.mul(&hh, &hh).scale_rat(&quarter)) + &sq.scale_rat(&quarter)
    }

    /// The Casimir with the symmetric term taken literally as `Y sinh hX + sinh hX Y`.
    pub fn casimir_as_printed(&self) -> UhElement {
        let s = self.sinh_x_over_h().shift(1);
        let y = self.gen(Gen::Y);
        let hh = self.gen(Gen::H);
        let quarter = rat(1, 4);
        let sym = &self.mul(&y, &s) + &self.mul(&s, &y);
        &(&sym + &self.mul(&hh, &hh).scale_rat(&quarter)) + &self.mul(&s, &s).scale_rat(&quarter)
    }

    /// `X_h = e^{hX} sinh(hX)/h`.
    pub fn x_h(&self) -> UhElement {
        self.mul(&self.exp_x(1), &self.sinh_x_over_h())
    }

    /// `H_h = H e^{hX}`.
    pub fn h_h(&self) -> UhElement {
        self.mul(&self.gen(Gen::H), &self.exp_x(1))
    }

    /// `Y_h = Y e^{hX} − 2hC`.
    pub fn y_h(&self) -> UhElement {
        &self.mul(&self.gen(Gen::Y), &self.exp_x(1)) - &self.casimir().shift(1).scale_rat(&rat(2, 1))
    }

    pub fn submodule_basis(&self) -> [UhElement; 3] {
        [self.x_h(), self.h_h(), self.y_h()]
    }

    /// Coefficients `cᵢ` with `e = Σ cᵢ Bᵢ` over `X_h, H_h, Y_h`, solved order by order.
    pub fn decompose(&self, e: &UhElement) -> Option<[TruncSeries; 3]> {
        let basis = self.submodule_basis();
        let leads = [Gen::X.pbw(), Gen::H.pbw(), Gen::Y.pbw()];
        let mut rest = e.clone();
        let mut out: [TruncSeries; 3] = core::array::from_fn(|_| TruncSeries::zero(self.order()));
        for k in 0..=self.order() {
            for (i, lead) in leads.iter().enumerate() {
                let c = rest.coeff(*lead).coeff(k).clone();
                if c.is_zero() {
                    continue;
                }
                let term = TruncSeries::monomial(c, k, self.order());
                rest = &rest - &basis[i].scale(&term);
                out[i] = &out[i] + &term;
            }
        }
        rest.is_zero().then_some(out)
    }
}

fn table_row(table: &BracketTable, i: usize, k: usize, order: usize) -> [TruncSeries; 3] {
    core::array::from_fn(|j| series_of(&table.bracket(i, k)[j], order).expect("polynomial entry"))
}

fn compare_actions(
    uh: &UhAlgebra,
    left: &[(UhElement, &str); 3],
    table: &BracketTable,
    suffix: &str,
) -> Vec<Check> {
    let basis = uh.submodule_basis();
    let names = ["X", "H", "Y"];
    let mut out = Vec::new();
    for (i, (g, gn)) in left.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            let got = uh.decompose(&uh.adjoint(g, b));
            let want = table_row(table, i, k, uh.order());
            let holds = got.is_some_and(|c| c == want);
            out.push(Check::new(format!("{gn}{suffix} ⊳ {}_h = {}", names[k], table_entry(table, i, k)), holds));
        }
    }
    out
}

fn table_entry(table: &BracketTable, i: usize, k: usize) -> alloc::string::String {
    let e = table.entry_display(i, k);
    let mut out = alloc::string::String::new();
    let chars = e.chars().peekable();
    for c in chars {
        out.push(c);
        if matches!(c, 'X' | 'H' | 'Y') {
            out.push_str("_h");
        }
    }
    out
}

/// `[C, g] = 0` for each generator and the `h = 0` limit `YX + H/2 + H²/4`.
pub fn casimir_checks(order: usize) -> Vec<Check> {
    let uh = UhAlgebra::new(order);
    let c = uh.casimir();
    let mut out: Vec<Check> = Gen::ALL
        .iter()
        .map(|g| Check::new(format!("[C,{}] = 0", g.name()), uh.commutator(&c, &uh.gen(*g)).is_zero()))
        .collect();
    let classical = UhAlgebra::new(0);
    let c0 = classical.casimir();
    let expected = classical.parse("Y X + 1/2 H + 1/4 H H").expect("classical Casimir");
    out.push(Check::new("C at h = 0 is YX + H/2 + H²/4", c0 == expected));
    out.push(Check::new(
        "C at h = 0 is central",
        Gen::ALL.iter().all(|g| classical.commutator(&c0, &classical.gen(*g)).is_zero()),
    ));
    out
}

/// Stability of `span{X_h, H_h, Y_h}`, its brackets and the coproduct formulas.
pub fn submodule_checks(order: usize) -> Vec<Check> {
    let uh = UhAlgebra::new(order);
    let gens = [(uh.gen(Gen::X), "X"), (uh.gen(Gen::H), "H"), (uh.gen(Gen::Y), "Y")];
    let mut out = compare_actions(&uh, &gens, &generator_action_table(), "");
    let [xh, hh, yh] = uh.submodule_basis();
    let elems = [(xh.clone(), "X"), (hh.clone(), "H"), (yh.clone(), "Y")];
    out.extend(compare_actions(&uh, &elems, &jordanian_table(), "_h"));
    let one = uh.one();
    let e2 = uh.exp_x(2);
    for (b, name) in [(&xh, "X_h"), (&hh, "H_h")] {
        let expected = &UhTensor::pure(&one, b) + &UhTensor::pure(b, &e2);
        out.push(Check::new(
            format!("Δ({name}) = 1⊗{name} + {name}⊗e^{{2hX}}"),
            uh.coproduct(b) == expected,
        ));
    }
    let c = uh.casimir();
    let correction = &(&UhTensor::pure(&one, &c) + &UhTensor::pure(&c, &e2)) - &uh.coproduct(&c);
    let expected = &(&UhTensor::pure(&one, &yh) + &UhTensor::pure(&yh, &e2))
        + &correction.shift(1).scale(&TruncSeries::constant(rat(2, 1), order));
    out.push(Check::new(
        "Δ(Y_h) = 1⊗Y_h + Y_h⊗e^{2hX} + 2h(1⊗C + C⊗e^{2hX} − Δ(C))",
        uh.coproduct(&yh) == expected,
    ));
    out
}

/// Coassociativity, counit and antipode axioms on the generators, and `Δ`, `ε`, `S`
/// respecting the defining relations.
pub fn hopf_checks(order: usize) -> Vec<Check> {
    let uh = UhAlgebra::new(order);
    let mut out = Vec::new();
    for g in Gen::ALL {
        let x = uh.gen(g);
        let name = g.name();
        let d = uh.coproduct(&x);
        out.push(Check::new(format!("coassociativity on {name}"), uh.split_leg(&d, 0) == uh.split_leg(&d, 1)));
        let eps = |e: &UhElement| UhElement::one(order).scale(&uh.counit(e));
        let left = uh.multiply_legs(&uh.map_leg(&d, 0, eps));
        let right = uh.multiply_legs(&uh.map_leg(&d, 1, eps));
        out.push(Check::new(format!("counit on {name}"), left == x && right == x));
        let unit = UhElement::one(order).scale(&uh.counit(&x));
        let sl = uh.multiply_legs(&uh.map_leg(&d, 0, |e| uh.antipode(e)));
        let sr = uh.multiply_legs(&uh.map_leg(&d, 1, |e| uh.antipode(e)));
        out.push(Check::new(format!("antipode on {name}"), sl == unit && sr == unit));
    }
    out.extend(relation_checks(&uh));
    out
}

/// `Δ` and `S` applied to the generators satisfy the defining relations (with `S`
/// reversing products), and `ε` kills them.
fn relation_checks(uh: &UhAlgebra) -> Vec<Check> {
    let two = TruncSeries::constant(rat(2, 1), uh.order());
    let (x, hh, y) = (uh.gen(Gen::X), uh.gen(Gen::H), uh.gen(Gen::Y));
    let sinh = uh.sinh_x_over_h();
    let cosh = uh.cosh_x();

    let (dx, dh, dy) = (uh.coproduct(&x), uh.coproduct(&hh), uh.coproduct(&y));
    let (dsinh, dcosh) = (uh.coproduct(&sinh), uh.coproduct(&cosh));
    let bracket = |a: &UhTensor, b: &UhTensor| &uh.mul_tensor(a, b) - &uh.mul_tensor(b, a);
    let delta = [
        &bracket(&dh, &dx) - &dsinh.scale(&two),
        &(&bracket(&dh, &dy) + &uh.mul_tensor(&dy, &dcosh)) + &uh.mul_tensor(&dcosh, &dy),
        &bracket(&dx, &dy) - &dh,
    ];

    let (sx, sh, sy) = (uh.antipode(&x), uh.antipode(&hh), uh.antipode(&y));
    let (ssinh, scosh) = (uh.antipode(&sinh), uh.antipode(&cosh));
    let anti = |a: &UhElement, b: &UhElement| uh.commutator(b, a);
    let antipode = [
        &anti(&sh, &sx) - &ssinh.scale(&two),
        &(&anti(&sh, &sy) + &uh.mul(&scosh, &sy)) + &uh.mul(&sy, &scosh),
        &anti(&sx, &sy) - &sh,
    ];

    let eps = |e: &UhElement| uh.counit(e);
    let e = |a: &UhElement, b: &UhElement| &(&eps(a) * &eps(b)) - &(&eps(b) * &eps(a));
    let counit = [
        &e(&hh, &x) - &(&eps(&sinh) * &two),
        &e(&hh, &y) + &(&(&eps(&y) * &eps(&cosh)) * &two),
        &e(&x, &y) - &eps(&hh),
    ];

    let names = ["[H,X] = 2 sinh(hX)/h", "[H,Y] = −Y cosh hX − cosh hX Y", "[X,Y] = H"];
    let mut out = Vec::new();
    for (i, name) in names.iter().enumerate() {
        out.push(Check::new(format!("Δ respects {name}"), delta[i].is_zero()));
        out.push(Check::new(format!("ε respects {name}"), counit[i].is_zero()));
        out.push(Check::new(format!("S respects {name}"), antipode[i].is_zero()));
    }
    out
}

type Sample = (&'static str, fn(&UhAlgebra) -> UhElement);

/// Results at order `N + 2`, truncated, agree with results at order `N`.
pub fn order_stability_checks(order: usize) -> Vec<Check> {
    let low = UhAlgebra::new(order);
    let high = UhAlgebra::new(order + 2);
    let samples: [Sample; 5] = [
        ("XH", |uh| uh.mul(&uh.gen(Gen::X), &uh.gen(Gen::H))),
        ("HY", |uh| uh.mul(&uh.gen(Gen::H), &uh.gen(Gen::Y))),
        ("X²HY²", |uh| uh.parse("X X H Y Y").expect("word")),
        ("C", UhAlgebra::casimir),
        ("Y ⊳ Y_h", |uh| uh.adjoint(&uh.gen(Gen::Y), &uh.y_h())),
    ];
    let mut out: Vec<Check> = samples
        .iter()
        .map(|(name, f)| Check::new(format!("{name} stable from order {} to {}", order + 2, order), f(&high).truncate(order) == f(&low)))
        .collect();
    let dl = low.coproduct(&low.gen(Gen::Y));
    let dh = high.coproduct(&high.gen(Gen::Y));
    let truncated: UhTensor = {
        let mut t = UhTensor::zero(2, order);
        for (k, s) in dh.terms() {
            t.add_term(k.clone(), s.truncate(order));
        }
        t
    };
    out.push(Check::new(format!("Δ(Y) stable from order {} to {}", order + 2, order), truncated == dl));
    out
}
