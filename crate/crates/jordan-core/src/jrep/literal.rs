use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::JrepError;
use crate::exactalg::{BigRat, Matrix, RadElem, RadPoly};

/// Parse a matrix entry over `Q(√2,√3)[h]`.
///
/// Terms are products of factors (`3`, `√2`, `h`, `h^4`); a `/` makes the next factor a
/// divisor, so `√2h^2/2/√3` is `√2h²/(2√3)`. Terms are joined by `+` or `-`.
pub fn parse_entry(src: &str) -> Result<RadPoly, JrepError> {
    let err = || JrepError::Parse(src.to_string());
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err());
    }
    let mut total = RadPoly::zero();
    let mut chars = s.chars().peekable();
    loop {
        let mut sign = 1;
        while let Some(&c) = chars.peek() {
            match c {
                '+' => {}
                '-' => sign = -sign,
                _ => break,
            }
            chars.next();
        }
        let mut coeff = RadElem::int(sign);
        let mut power = 0usize;
        let mut divide = false;
        let mut factors = 0;
        while let Some(&c) = chars.peek() {
            if c == '+' || c == '-' {
                break;
            }
            chars.next();
            let factor = match c {
                '/' => {
                    divide = true;
                    continue;
                }
                'h' => {
                    let mut e = 1;
                    if chars.peek() == Some(&'^') {
                        chars.next();
                        e = read_int(&mut chars).ok_or_else(err)?;
                    }
                    if divide {
                        return Err(err());
                    }
                    power += e as usize;
                    factors += 1;
                    continue;
                }
                '√' => {
                    let n = read_int(&mut chars).ok_or_else(err)?;
                    RadElem::sqrt_rational(&BigRat::from_integer(n.into()))?
                }
                d if d.is_ascii_digit() => {
                    let mut n = d.to_digit(10).expect("digit") as i64;
                    while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                        n = n * 10 + d as i64;
                        chars.next();
                    }
                    RadElem::int(n)
                }
                _ => return Err(err()),
            };
            coeff = if divide { &coeff * &factor.inv()? } else { &coeff * &factor };
            divide = false;
            factors += 1;
        }
        if factors == 0 || divide {
            return Err(err());
        }
        total = &total + &RadPoly::term(coeff, power);
        if chars.peek().is_none() {
            return Ok(total);
        }
    }
}

fn read_int(chars: &mut core::iter::Peekable<core::str::Chars<'_>>) -> Option<i64> {
    let mut n: Option<i64> = None;
    while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
        n = Some(n.unwrap_or(0) * 10 + d as i64);
        chars.next();
    }
    n
}

/// Rows separated by `;`, entries by `,`.
pub fn parse_matrix(src: &str) -> Result<Matrix<RadPoly>, JrepError> {
    let rows: Vec<Vec<RadPoly>> = src
        .split(';')
        .map(|row| row.split(',').map(parse_entry).collect())
        .collect::<Result<_, _>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(JrepError::Parse(src.to_string()));
    }
    Ok(Matrix::from_rows(rows))
}
