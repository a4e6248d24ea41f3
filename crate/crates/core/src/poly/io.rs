//! Polynomial file formats.
//!
//! Text: one term per line, `coeff * x1^e1 * x2^e2 ...`; the coefficient is
//! a rational (`-3/4`), a decimal (`0.25`, `1e-3`) or a complex pair
//! `(re,im)`, and may be omitted (`x1^2`, `-x2`). Blank lines and `#`
//! comments are ignored; a `# vars: d` comment fixes the variable count.
//!
//! JSON: `{"vars": d, "mode": "rational"|"float", "terms": [{"exp": [..],
//! "re": "num/den" | number, "im": ...}]}` with `im` optional.
//!
//! Both parsers read coefficients exactly (decimals in base ten) and reject
//! repeated exponent vectors.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, CoeffMode, GaussRational, Scalar};

use super::{Monomial, Polynomial};

/// A parsed polynomial together with its declared coefficient mode.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyFile {
    pub mode: CoeffMode,
    pub poly: Polynomial<GaussRational>,
}

impl PolyFile {
    pub fn to_poly<S: Scalar>(&self) -> Polynomial<S> {
        self.poly.convert()
    }
}

pub(crate) fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parse either format, choosing JSON when the input starts with `{`.
pub fn parse_auto(src: &str) -> Result<PolyFile> {
    if src.trim_start().starts_with('{') {
        parse_json(src)
    } else {
        parse_text(src, None)
    }
}

#[derive(Deserialize)]
struct JsonPoly {
    vars: usize,
    mode: CoeffMode,
    terms: Vec<JsonTerm>,
}

#[derive(Deserialize)]
struct JsonTerm {
    exp: Vec<u32>,
    re: Value,
    #[serde(default)]
    im: Option<Value>,
}

/// 1-based line/column of the `n`-th occurrence of `"key"` in `src`.
pub(crate) fn key_position(src: &str, key: &str, n: usize) -> (usize, usize) {
    let needle = format!("\"{}\"", key);
    let Some((offset, _)) = src.match_indices(&needle).nth(n) else {
        return (0, 0);
    };
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let column = offset - before.rfind('\n').map_or(0, |p| p + 1) + 1;
    (line, column)
}

pub(crate) fn json_number(v: &Value) -> Option<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        _ => None,
    }
}

pub fn parse_json(src: &str) -> Result<PolyFile> {
    let raw: JsonPoly = serde_json::from_str(src)
        .map_err(|e| perr(e.line(), e.column(), e.to_string()))?;
    let mut seen: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut poly = Polynomial::zero(raw.vars);
    for (k, t) in raw.terms.into_iter().enumerate() {
        let (line, column) = key_position(src, "exp", k);
        if t.exp.len() != raw.vars {
            return Err(perr(
                line,
                column,
                format!("term {k}: exponent has length {}, expected {}", t.exp.len(), raw.vars),
            ));
        }
        if let Some(first) = seen.insert(t.exp.clone(), k) {
            return Err(perr(
                line,
                column,
                format!("term {k}: exponent {:?} repeats term {first}", t.exp),
            ));
        }
        let re = json_number(&t.re)
            .ok_or_else(|| perr(line, column, format!("term {k}: bad real part {}", t.re)))?;
        let im = match &t.im {
            None | Some(Value::Null) => BigRational::zero(),
            Some(v) => json_number(v)
                .ok_or_else(|| perr(line, column, format!("term {k}: bad imaginary part {v}")))?,
        };
        poly.add_term(t.exp, GaussRational::new(re, im));
    }
    Ok(PolyFile {
        mode: raw.mode,
        poly,
    })
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }
    fn err(&self, msg: impl Into<String>) -> Error {
        perr(self.line, self.pos + 1, msg)
    }
    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &'a str {
        let start = self.pos;
        while self.pos < self.s.len() && f(self.s[self.pos]) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap()
    }
    fn number(&mut self) -> Result<(BigRational, bool)> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            let exp_sign = (c == b'-' || c == b'+')
                && self.pos > start
                && matches!(self.s[self.pos - 1], b'e' | b'E');
            if c.is_ascii_digit() || matches!(c, b'.' | b'/' | b'e' | b'E') || exp_sign {
                self.pos += 1;
            } else {
                break;
            }
        }
        let tok = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        let is_float = tok.contains(['.', 'e', 'E']);
        match parse_rational(tok) {
            Some(r) => Ok((r, is_float)),
            None => Err(perr(self.line, start + 1, format!("bad number '{tok}'"))),
        }
    }
}

/// Parse the one-term-per-line text format. `nvars` overrides both the
/// `# vars:` header and the largest variable index seen.
pub fn parse_text(src: &str, nvars: Option<usize>) -> Result<PolyFile> {
    let mut header_vars = None;
    let mut terms: Vec<(usize, usize, BTreeMap<usize, u32>, GaussRational)> = Vec::new();
    let mut float = false;
    for (lineno, raw_line) in src.lines().enumerate() {
        let line = lineno + 1;
        let (body, comment) = match raw_line.find('#') {
            Some(p) => (&raw_line[..p], Some(&raw_line[p + 1..])),
            None => (raw_line, None),
        };
        if let Some(c) = comment {
            if let Some(v) = c.trim().strip_prefix("vars:") {
                header_vars = Some(v.trim().parse::<usize>().map_err(|_| {
                    perr(line, raw_line.find('#').unwrap() + 1, "bad vars header")
                })?);
            }
        }
        if body.trim().is_empty() {
            continue;
        }
        let (exps, coeff, is_float) = parse_term(body, line)?;
        float |= is_float;
        let col = body.len() - body.trim_start().len() + 1;
        terms.push((line, col, exps, coeff));
    }
    let max_index = terms
        .iter()
        .flat_map(|(_, _, e, _)| e.keys().copied())
        .max()
        .map_or(0, |i| i + 1);
    let n = nvars.or(header_vars).unwrap_or(max_index);
    if max_index > n {
        let (line, col, _, _) = terms
            .iter()
            .find(|(_, _, e, _)| e.keys().any(|&i| i >= n))
            .unwrap();
        return Err(perr(*line, *col, format!("variable index exceeds {n}")));
    }
    let mut seen: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut poly = Polynomial::zero(n);
    for (line, col, exps, coeff) in terms {
        let mut e = vec![0u32; n];
        for (i, k) in exps {
            e[i] = k;
        }
        if let Some(first) = seen.insert(e.clone(), line) {
            return Err(perr(
                line,
                col,
                format!("exponent {e:?} already given on line {first}"),
            ));
        }
        poly.add_term(e, coeff);
    }
    Ok(PolyFile {
        mode: if float { CoeffMode::Float } else { CoeffMode::Rational },
        poly,
    })
}

fn parse_term(body: &str, line: usize) -> Result<(BTreeMap<usize, u32>, GaussRational, bool)> {
    let mut cur = Cursor {
        s: body.as_bytes(),
        pos: 0,
        line,
    };
    cur.skip_ws();
    let mut negate = false;
    while let Some(c @ (b'-' | b'+')) = cur.peek() {
        if c == b'-' {
            negate = !negate;
        }
        cur.pos += 1;
        cur.skip_ws();
    }
    let mut coeff = GaussRational::one();
    let mut is_float = false;
    match cur.peek() {
        Some(b'(') => {
            cur.pos += 1;
            let (re, f1) = signed_number(&mut cur)?;
            cur.skip_ws();
            if cur.peek() != Some(b',') {
                return Err(cur.err("expected ',' in complex coefficient"));
            }
            cur.pos += 1;
            let (im, f2) = signed_number(&mut cur)?;
            cur.skip_ws();
            if cur.peek() != Some(b')') {
                return Err(cur.err("expected ')'"));
            }
            cur.pos += 1;
            coeff = GaussRational::new(re, im);
            is_float = f1 || f2;
        }
        Some(c) if c.is_ascii_digit() || c == b'.' => {
            let (r, f) = cur.number()?;
            coeff = GaussRational::real(r);
            is_float = f;
        }
        Some(b'x') => {}
        Some(_) => return Err(cur.err("expected a coefficient or a variable")),
        None => return Err(cur.err("missing term after sign")),
    }
    if negate {
        coeff = -coeff;
    }
    let mut exps: BTreeMap<usize, u32> = BTreeMap::new();
    let mut first_factor = matches!(cur.peek(), Some(b'x'));
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'*') if !first_factor => {
                cur.pos += 1;
                cur.skip_ws();
            }
            Some(b'x') if first_factor => {}
            Some(_) => return Err(cur.err("expected '*'")),
        }
        first_factor = false;
        if cur.peek() != Some(b'x') {
            return Err(cur.err("expected a variable like x1"));
        }
        cur.pos += 1;
        let start = cur.pos;
        let idx = cur.take_while(|c| c.is_ascii_digit());
        let idx: usize = idx
            .parse()
            .ok()
            .filter(|&i| i >= 1)
            .ok_or_else(|| perr(line, start + 1, "variable index must be a positive integer"))?;
        let mut k = 1u32;
        cur.skip_ws();
        if cur.peek() == Some(b'^') {
            cur.pos += 1;
            cur.skip_ws();
            let start = cur.pos;
            let e = cur.take_while(|c| c.is_ascii_digit());
            k = e
                .parse()
                .map_err(|_| perr(line, start + 1, "bad exponent"))?;
        }
        *exps.entry(idx - 1).or_insert(0) += k;
    }
    Ok((exps, coeff, is_float))
}

fn signed_number(cur: &mut Cursor<'_>) -> Result<(BigRational, bool)> {
    cur.skip_ws();
    let mut neg = false;
    if let Some(c @ (b'-' | b'+')) = cur.peek() {
        neg = c == b'-';
        cur.pos += 1;
    }
    let (r, f) = cur.number()?;
    Ok((if neg { -r } else { r }, f))
}

pub(crate) fn coeff_json<S: Scalar>(c: &S, part: fn(&GaussRational) -> &BigRational, fpart: fn(num_complex::Complex64) -> f64) -> Value {
    match c.to_exact() {
        Some(g) => Value::String(format_rational(part(&g))),
        None => serde_json::Number::from_f64(fpart(c.to_c64()))
            .map(Value::Number)
            .unwrap_or(Value::Null),
    }
}

/// JSON value of a polynomial, in the mode of its scalar type.
pub fn to_json_value<S: Scalar>(p: &Polynomial<S>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| {
            let mut obj = serde_json::Map::new();
            obj.insert("exp".into(), serde_json::json!(e));
            obj.insert("re".into(), coeff_json(c, |g| &g.re, |z| z.re));
            if !c.is_real() {
                obj.insert("im".into(), coeff_json(c, |g| &g.im, |z| z.im));
            }
            Value::Object(obj)
        })
        .collect();
    serde_json::json!({
        "vars": p.nvars(),
        "mode": S::MODE,
        "terms": terms,
    })
}

pub fn to_json<S: Scalar>(p: &Polynomial<S>) -> String {
    serde_json::to_string_pretty(&to_json_value(p)).unwrap()
}

fn fmt_part<S: Scalar>(c: &S, im: bool) -> String {
    match c.to_exact() {
        Some(g) => format_rational(if im { &g.im } else { &g.re }),
        None => {
            let z = c.to_c64();
            let v = if im { z.im } else { z.re };
            let s = format!("{v:?}");
            s
        }
    }
}

/// Text form, readable back by [`parse_text`].
pub fn to_text<S: Scalar>(p: &Polynomial<S>) -> String {
    let mut out = format!("# vars: {}\n", p.nvars());
    for (e, c) in p.terms() {
        let coeff = if c.is_real() {
            fmt_part(c, false)
        } else {
            format!("({},{})", fmt_part(c, false), fmt_part(c, true))
        };
        out.push_str(&coeff);
        for (i, &k) in e.iter().enumerate() {
            match k {
                0 => {}
                1 => out.push_str(&format!(" * x{}", i + 1)),
                _ => out.push_str(&format!(" * x{}^{}", i + 1, k)),
            }
        }
        out.push('\n');
    }
    out
}
