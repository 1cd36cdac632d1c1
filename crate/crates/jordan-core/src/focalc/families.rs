use alloc::vec::Vec;

use super::calculus::{CalcError, Family, FirstOrderCalculus};
use crate::exactalg::{Matrix, RatFunc, Var};
use crate::hopf::HopfPresentation;
use crate::ncpoly::{standard_params, Alphabet, ExprParser};

type Table = [[&'static str; 4]; 4];

const ONE: [Table; 4] = [
    [
        ["(3z+2)/2", "0", "(-(3h+g)z-2h)/2", "-z/2"],
        ["h(z+1)", "z+1", "-h^2(z+1)", "-h(z+1)"],
        ["0", "0", "z+1", "0"],
        ["z/2", "0", "((h-g)z+2h)/2", "(z+2)/2"],
    ],
    [
        ["0", "z", "h(h+g)(z+1)", "0"],
        ["0", "(h+g)(z+1)", "-hg(h+g)(z+1)", "0"],
        ["0", "0", "-(h+g)(z+1)", "0"],
        ["0", "z", "g(h+g)(z+1)", "0"],
    ],
    [
        ["0", "0", "z", "0"],
        ["0", "0", "0", "0"],
        ["0", "0", "0", "0"],
        ["0", "0", "z", "0"],
    ],
    [
        ["(z+2)/2", "0", "(-(h-g)z+2g)/2", "z/2"],
        ["-g(z+1)", "z+1", "-g^2(z+1)", "g(z+1)"],
        ["0", "0", "z+1", "0"],
        ["-z/2", "0", "(-(h+3g)z-2g)/2", "(3z+2)/2"],
    ],
];

const TWO: [Table; 4] = [
    [
        ["(z+2)/2", "0", "((h+g)z-2h)/2", "z/2"],
        ["h(z+1)", "1", "h((h+g)z-h)", "h(z-1)"],
        ["0", "0", "1", "0"],
        ["-z/2", "0", "(-(h+g)z+2h)/2", "(-z+2)/2"],
    ],
    [
        ["-hz", "0", "h(h+g)(1-z)", "-hz"],
        ["hgz", "h+g", "hg(h+g)(z-1)", "ghz"],
        ["z", "0", "(h+g)(z-1)", "z"],
        ["-gz", "0", "g(h+g)(1-z)", "-gz"],
    ],
    [
        ["0", "0", "0", "0"],
        ["z", "0", "(h+g)z", "z"],
        ["0", "0", "0", "0"],
        ["0", "0", "0", "0"],
    ],
    [
        ["(-z+2)/2", "0", "(-(h+g)z+2g)/2", "-z/2"],
        ["g(z-1)", "1", "g((h+g)z-g)", "g(z+1)"],
        ["0", "0", "1", "0"],
        ["z/2", "0", "((h+g)z-2g)/2", "(z+2)/2"],
    ],
];

const THREE: [Table; 4] = [
    [
        ["(z+2)/2", "0", "((h+g)z-2h)/2", "z/2"],
        ["h", "1", "-h^2", "-h"],
        ["0", "0", "1", "0"],
        ["z/2", "0", "((h+g)z+2h)/2", "(z+2)/2"],
    ],
    [
        ["0", "0", "h(h+g)", "0"],
        ["0", "h+g", "-hg(h+g)", "0"],
        ["0", "0", "-(h+g)", "0"],
        ["0", "0", "g(h+g)", "0"],
    ],
    [["0"; 4]; 4],
    [
        ["(z+2)/2", "0", "((h+g)z+2g)/2", "z/2"],
        ["-g", "1", "-g^2", "g"],
        ["0", "0", "1", "0"],
        ["z/2", "0", "((h+g)z-2g)/2", "(z+2)/2"],
    ],
];

const THREE_D: [[[&str; 3]; 3]; 4] = [
    [["1", "0", "-h"], ["2h", "1", "h^2"], ["0", "0", "1"]],
    [["0", "0", "2h^2"], ["0", "2h", "-2h^3"], ["0", "0", "-2h"]],
    [["0"; 3]; 3],
    [["1", "0", "h"], ["-2h", "1", "-3h^2"], ["0", "0", "1"]],
];

fn parse_rows<const N: usize>(rows: &[[&str; N]; N], z: &RatFunc) -> Result<Matrix<RatFunc>, CalcError> {
    let params = standard_params();
    let alpha = Alphabet::empty();
    let parser = ExprParser::new(&alpha, &params);
    let mut out = Vec::with_capacity(N);
    for row in rows {
        let mut r = Vec::with_capacity(N);
        for src in row {
            let v = parser.parse_scalar(src).expect("builtin matrix entry");
            r.push(v.substitute(Var::Z, z)?);
        }
        out.push(r);
    }
    Ok(Matrix::from_rows(out))
}

/// ABCD matrices of a known family; `z` may be `RatFunc::z()` to stay symbolic.
/// The three-dimensional calculus has no parameter and ignores `z`.
pub fn family_matrices(family: Family, z: &RatFunc) -> Result<[Matrix<RatFunc>; 4], CalcError> {
    let t = match family {
        Family::One => &ONE,
        Family::Two => &TWO,
        Family::Three => &THREE,
        Family::ThreeD => {
            let m = |k: usize| parse_rows(&THREE_D[k], z);
            return Ok([m(0)?, m(1)?, m(2)?, m(3)?]);
        }
    };
    let m = |k: usize| parse_rows(&t[k], z);
    Ok([m(0)?, m(1)?, m(2)?, m(3)?])
}

/// Load a family on GL_{h,g}(2) (or the three-dimensional calculus on SL_h(2)).
pub fn load_family(family: Family, z: &RatFunc) -> Result<FirstOrderCalculus, CalcError> {
    let host = match family {
        Family::ThreeD => HopfPresentation::sl(),
        _ => HopfPresentation::gl(),
    };
    FirstOrderCalculus::new(host, family_matrices(family, z)?, Some(family))
}
