//! JSON form of matrices over `Q(√2,√3)[h]`.
//!
//! A matrix is a list of rows; an entry is the list of its coefficients in ascending powers
//! of `h`; a coefficient is a 4-tuple of rationals over the basis `1, √2, √3, √6`, each
//! written as a `"p/q"` or integer string.

use jordan_core::exactalg::{RadElem, RadPoly};
use jordan_core::jrep::{self, JrepError, RadMatrix, Spin};
use serde::Serialize;
use serde_json::{json, Value};

pub fn radical(c: &RadElem) -> Value {
    json!(c.0.iter().map(|q| q.to_string()).collect::<Vec<_>>())
}

pub fn entry(p: &RadPoly) -> Value {
    Value::Array(p.coeffs().iter().map(radical).collect())
}

pub fn matrix(m: &RadMatrix) -> Value {
    Value::Array((0..m.rows()).map(|r| Value::Array(m.row(r).iter().map(entry).collect())).collect())
}

#[derive(Serialize)]
struct Named {
    name: String,
    matrix: Value,
}

/// The representation matrices for `j ≤ 2`, the Clebsch–Gordan pair and the adjoint data
/// on `X_h, H_h, Y_h`, in a fixed order.
pub fn representation_matrices() -> Result<Value, JrepError> {
    let mut out = Vec::new();
    for twice in 1..=4 {
        let spin = Spin::from_twice(twice);
        let r = jrep::rep(spin)?;
        for (g, m) in [("X", &r.x), ("H", &r.h), ("Y", &r.y)] {
            out.push(Named { name: format!("j={spin} {g}"), matrix: matrix(m) });
        }
    }
    let data = jrep::CgData::load()?;
    out.push(Named { name: "C".into(), matrix: matrix(&data.c) });
    out.push(Named { name: "C^-1".into(), matrix: matrix(&data.c_inv) });
    let orientation = data.orientation().unwrap_or(jrep::Orientation::Rows);
    let (brackets, killing) = jrep::bracket_killing_from_cg(&data, orientation);
    out.push(Named { name: "killing e".into(), matrix: matrix(&killing.0) });
    let report = jrep::basis_change_iso(&brackets, &killing)?;
    for (g, m) in [("X", &report.adjoint.x), ("H", &report.adjoint.h), ("Y", &report.adjoint.y)] {
        out.push(Named { name: format!("adjoint {g}"), matrix: matrix(m) });
    }
    out.push(Named { name: "killing rescaled".into(), matrix: matrix(&report.rescaled.0) });
    Ok(serde_json::to_value(out).expect("plain data"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use jordan_core::jrep::parse_entry;

    #[test]
    fn radical_entries_are_four_tuples() {
        let v = entry(&parse_entry("√2/2 + √6h/3").unwrap());
        assert_eq!(v, json!([["0", "1/2", "0", "0"], ["0", "0", "0", "1/3"]]));
        assert_eq!(entry(&RadPoly::zero()), json!([]));
    }

    #[test]
    fn export_lists_every_matrix() {
        let v = representation_matrices().unwrap();
        let names: Vec<&str> = v.as_array().unwrap().iter().map(|n| n["name"].as_str().unwrap()).collect();
        assert_eq!(names.len(), 12 + 2 + 1 + 3 + 1);
        assert_eq!(names[3], "j=1 X");
        let adj_y = &v[17]["matrix"];
        assert_eq!(adj_y[1][0], json!([["-1", "0", "0", "0"]]));
    }
}
