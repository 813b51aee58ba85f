use std::path::Path;

use cubica::algebra::{Field, MultiPoly, PolyJson, PrimeField};
use cubica::cubic::CubicThreefold;
use cubica::projlin::{LineJson, PluckerLine};
use serde_json::Value;

use crate::CliError;

/// The `--field` flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<FieldSpec, CliError> {
        if s == "qq" {
            return Ok(FieldSpec::Rational);
        }
        let p = s
            .strip_prefix("fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| CliError::input(format!("unknown field {s:?}; expected qq or fp:P")))?;
        PrimeField::new(p)?;
        Ok(FieldSpec::Prime(p))
    }

    pub fn prime_field(&self, command: &str) -> Result<PrimeField, CliError> {
        match self {
            FieldSpec::Prime(p) => Ok(PrimeField::new(*p)?),
            FieldSpec::Rational => Err(CliError::input(format!("{command} needs a prime field (--field fp:P)"))),
        }
    }
}

/// Reads a file when `arg` names one, otherwise returns `arg` itself.
fn file_or_inline(arg: &str) -> Result<String, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn parse_json(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map(stringify_numbers).map_err(|e| CliError::input(format!("malformed JSON: {e}")))
}

/// Coordinates may be written as JSON numbers or strings; both become
/// strings so that parsing stays exact.
fn stringify_numbers(v: Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(a) => Value::Array(a.into_iter().map(stringify_numbers).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, stringify_numbers(v))).collect()),
        v => v,
    }
}

/// `builtin:klein`, `builtin:fermat`, a polynomial, or a file holding a
/// polynomial as text, as `{"cubic": "..."}` or as a term list.
pub fn cubic<K: Field>(k: &K, arg: &str) -> Result<CubicThreefold<K>, CliError> {
    match arg {
        "builtin:klein" => return Ok(CubicThreefold::klein(k.clone())?),
        "builtin:fermat" => return Ok(CubicThreefold::fermat(k.clone())?),
        a if a.starts_with("builtin:") => return Err(CliError::input(format!("unknown builtin cubic {a:?}"))),
        _ => {}
    }
    let text = file_or_inline(arg)?;
    if !text.trim_start().starts_with('{') {
        return Ok(CubicThreefold::parse(k.clone(), text.trim())?);
    }
    let v = parse_json(&text)?;
    if let Some(s) = v.get("cubic").and_then(Value::as_str) {
        return Ok(CubicThreefold::parse(k.clone(), s)?);
    }
    let pj: PolyJson = serde_json::from_value(v).map_err(|e| CliError::input(format!("not a cubic: {e}")))?;
    Ok(CubicThreefold::new(MultiPoly::from_json_in(k.clone(), &pj)?)?)
}

fn coords<K: Field>(k: &K, items: &[String]) -> Result<Vec<K::Elem>, CliError> {
    Ok(items.iter().map(|s| k.parse_elem(s.trim())).collect::<cubica::Result<_>>()?)
}

fn inline_coords(s: &str) -> Vec<String> {
    s.split(',').map(|c| c.trim().to_string()).collect()
}

fn string_list(v: &Value) -> Result<Vec<String>, CliError> {
    serde_json::from_value(v.clone()).map_err(|e| CliError::input(format!("expected a list of coordinates: {e}")))
}

/// `1,0,0,0,0`, or a file with `[...]` or `{"point": [...]}`.
pub fn point<K: Field>(k: &K, arg: &str) -> Result<Vec<K::Elem>, CliError> {
    let text = file_or_inline(arg)?;
    let t = text.trim();
    let items = if t.starts_with('[') || t.starts_with('{') {
        let v = parse_json(t)?;
        string_list(v.get("point").unwrap_or(&v))?
    } else {
        inline_coords(t)
    };
    let p = coords(k, &items)?;
    if p.len() != 5 {
        return Err(CliError::input(format!("a point of P4 needs 5 coordinates, got {}", p.len())));
    }
    if p.iter().all(|c| k.is_zero(c)) {
        return Err(CliError::input("the zero vector is not a projective point"));
    }
    Ok(p)
}

fn line_from_value<K: Field>(k: &K, v: &Value) -> Result<PluckerLine<K>, CliError> {
    let j: LineJson = serde_json::from_value(v.clone()).map_err(|e| CliError::input(format!("not a line: {e}")))?;
    let l = PluckerLine::from_json(k.clone(), &j)?;
    if l.ambient() != 4 {
        return Err(CliError::input(format!("expected a line in P4, got one in P{}", l.ambient())));
    }
    Ok(l)
}

fn inline_line<K: Field>(k: &K, s: &str) -> Result<PluckerLine<K>, CliError> {
    let parts: Vec<&str> = s.split(';').collect();
    let [p, q] = parts.as_slice() else {
        return Err(CliError::input(format!("an inline line is two points separated by ';', got {s:?}")));
    };
    line_from_value(k, &serde_json::json!({"points": [inline_coords(p), inline_coords(q)]}))
}

/// `p;q` with comma-separated points, or a file with a line object
/// (`{"points": [...]}` or `{"plucker": [...]}`), optionally under `"line"`.
pub fn line<K: Field>(k: &K, arg: &str) -> Result<PluckerLine<K>, CliError> {
    let text = file_or_inline(arg)?;
    let t = text.trim();
    if t.starts_with('{') {
        let v = parse_json(t)?;
        return line_from_value(k, v.get("line").unwrap_or(&v));
    }
    inline_line(k, t)
}

/// Lines separated by `|` inline, or a file with `{"lines": [...]}` or a
/// bare list of line objects.
pub fn lines<K: Field>(k: &K, arg: &str) -> Result<Vec<PluckerLine<K>>, CliError> {
    let text = file_or_inline(arg)?;
    let t = text.trim();
    if t.starts_with('{') || t.starts_with('[') {
        let v = parse_json(t)?;
        let list = v
            .get("lines")
            .unwrap_or(&v)
            .as_array()
            .ok_or_else(|| CliError::input("expected a list of lines"))?;
        return list.iter().map(|l| line_from_value(k, l)).collect();
    }
    t.split('|').map(|s| inline_line(k, s.trim())).collect()
}

pub fn primes(arg: &str) -> Result<(u64, u64), CliError> {
    let ps: Vec<u64> = arg
        .split(',')
        .map(|s| s.trim().parse::<u64>().map_err(|_| CliError::input(format!("bad prime {s:?}"))))
        .collect::<Result<_, _>>()?;
    let [p1, p2] = ps.as_slice() else {
        return Err(CliError::input(format!("expected two primes, got {}", ps.len())));
    };
    for &p in [p1, p2] {
        PrimeField::new(p)?;
    }
    Ok((*p1, *p2))
}
