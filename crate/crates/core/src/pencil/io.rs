//! Pencil JSON:
//! `{"d": 2, "n": 2, "class": "hermitian", "mode": "rational",
//!   "matrices": [{"re": [[..]], "im": [[..]]}, ..]}`
//! with `d + 1` row-major matrices. Entries are rational strings or JSON
//! numbers; `im` may be omitted for real matrices. Without an explicit
//! `mode`, any non-integer number switches the file to float mode.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Deserialize;
use serde_json::Value;

use crate::error::Result;
use crate::poly::io::{coeff_json, json_number, key_position, perr};
use crate::scalar::{CoeffMode, GaussRational, Scalar};

use super::{MatrixPencil, SymmetryClass};

#[derive(Debug, Clone, PartialEq)]
pub struct PencilFile {
    pub mode: CoeffMode,
    pub pencil: MatrixPencil<GaussRational>,
}

impl PencilFile {
    pub fn to_pencil<S: Scalar>(&self) -> MatrixPencil<S> {
        self.pencil.convert()
    }
}

#[derive(Deserialize)]
struct JsonPencil {
    d: usize,
    n: usize,
    class: SymmetryClass,
    #[serde(default)]
    mode: Option<CoeffMode>,
    matrices: Vec<JsonMatrix>,
}

#[derive(Deserialize)]
struct JsonMatrix {
    re: Vec<Vec<Value>>,
    #[serde(default)]
    im: Option<Vec<Vec<Value>>>,
}

fn is_float_literal(v: &Value) -> bool {
    matches!(v, Value::Number(n) if !n.is_i64() && !n.is_u64())
}

pub fn parse_pencil_json(src: &str) -> Result<PencilFile> {
    let raw: JsonPencil =
        serde_json::from_str(src).map_err(|e| perr(e.line(), e.column(), e.to_string()))?;
    let (ml, mc) = key_position(src, "matrices", 0);
    if raw.matrices.len() != raw.d + 1 {
        return Err(perr(
            ml,
            mc,
            format!("expected {} matrices for d = {}, found {}", raw.d + 1, raw.d, raw.matrices.len()),
        ));
    }
    let mut float = false;
    let mut mats = Vec::with_capacity(raw.matrices.len());
    for (k, m) in raw.matrices.iter().enumerate() {
        let (line, column) = key_position(src, "re", k);
        let shape_ok = |rows: &Vec<Vec<Value>>| rows.len() == raw.n && rows.iter().all(|r| r.len() == raw.n);
        if !shape_ok(&m.re) || m.im.as_ref().is_some_and(|im| !shape_ok(im)) {
            return Err(perr(line, column, format!("matrix {k} is not {0}x{0}", raw.n)));
        }
        let mut out = Vec::with_capacity(raw.n);
        for i in 0..raw.n {
            let mut row = Vec::with_capacity(raw.n);
            for j in 0..raw.n {
                let re_v = &m.re[i][j];
                let re = json_number(re_v)
                    .ok_or_else(|| perr(line, column, format!("matrix {k} entry ({i},{j}): bad number {re_v}")))?;
                float |= is_float_literal(re_v);
                let im = match &m.im {
                    Some(im) => {
                        let v = &im[i][j];
                        float |= is_float_literal(v);
                        json_number(v).ok_or_else(|| {
                            perr(line, column, format!("matrix {k} entry ({i},{j}): bad number {v}"))
                        })?
                    }
                    None => BigRational::zero(),
                };
                row.push(GaussRational::new(re, im));
            }
            out.push(row);
        }
        mats.push(out);
    }
    let pencil = MatrixPencil::new(mats).map_err(|e| perr(ml, mc, e.to_string()))?;
    if raw.class == SymmetryClass::RealSymmetric && pencil.class() != SymmetryClass::RealSymmetric {
        return Err(perr(ml, mc, "class real-symmetric but imaginary parts are nonzero"));
    }
    let mode = raw.mode.unwrap_or(if float { CoeffMode::Float } else { CoeffMode::Rational });
    Ok(PencilFile { mode, pencil })
}

/// JSON value of a pencil, in the mode of its scalar type.
pub fn pencil_to_json_value<S: Scalar>(p: &MatrixPencil<S>) -> Value {
    let grid = |m: &Vec<Vec<S>>, im: bool| -> Value {
        Value::Array(
            m.iter()
                .map(|r| {
                    Value::Array(
                        r.iter()
                            .map(|c| {
                                if im {
                                    coeff_json(c, |g| &g.im, |z| z.im)
                                } else {
                                    coeff_json(c, |g| &g.re, |z| z.re)
                                }
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
    };
    let mats: Vec<Value> = p
        .matrices()
        .iter()
        .map(|m| serde_json::json!({"re": grid(m, false), "im": grid(m, true)}))
        .collect();
    serde_json::json!({
        "d": p.dim(),
        "n": p.size(),
        "class": p.class(),
        "mode": S::MODE,
        "matrices": mats,
    })
}

pub fn pencil_to_json<S: Scalar>(p: &MatrixPencil<S>) -> String {
    serde_json::to_string_pretty(&pencil_to_json_value(p)).unwrap()
}
