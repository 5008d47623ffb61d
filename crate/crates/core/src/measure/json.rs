//! JSON measure files. Rationals are written as `"p/q"` strings; integers,
//! decimal strings and plain JSON integers are accepted on input.

use serde_json::{json, Value};

use super::{AtomicMeasure, JacobiParams, MeasureRep, MomentSequence, Representation, TailPolicy};
use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational};
use crate::Rational;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn number(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).ok_or_else(|| parse_err(format!("not a rational: {s:?}"))),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else {
                parse_rational(&n.to_string()).ok_or_else(|| parse_err(format!("not a rational: {n}")))
            }
        }
        other => Err(parse_err(format!("expected a rational, found {other}"))),
    }
}

fn numbers(v: Option<&Value>, field: &str) -> Result<Vec<Rational>> {
    match v {
        None => Ok(Vec::new()),
        Some(Value::Array(items)) => items.iter().map(number).collect(),
        Some(_) => Err(parse_err(format!("field {field:?} must be an array"))),
    }
}

fn pair(v: Option<&Value>, field: &str) -> Result<[Rational; 2]> {
    let xs = numbers(v, field)?;
    <[Rational; 2]>::try_from(xs).map_err(|_| parse_err(format!("field {field:?} needs exactly two entries")))
}

fn tail(v: Option<&Value>) -> Result<TailPolicy<Rational>> {
    let Some(t) = v else { return Ok(TailPolicy::Truncate) };
    let kind = t.get("kind").and_then(Value::as_str).ok_or_else(|| parse_err("tail needs a \"kind\""))?;
    match kind {
        "truncate" => Ok(TailPolicy::Truncate),
        "wigner" => {
            let a = t.get("a").map(number).transpose()?.unwrap_or_default();
            let b = number(t.get("b").ok_or_else(|| parse_err("wigner tail needs \"b\""))?)?;
            Ok(TailPolicy::Wigner { a, b })
        }
        "periodic2" => Ok(TailPolicy::Periodic2 { a: pair(t.get("a"), "a")?, b: pair(t.get("b"), "b")? }),
        other => Err(parse_err(format!("unknown tail kind {other:?}"))),
    }
}

pub fn measure_from_json(v: &Value) -> Result<MeasureRep<Rational>> {
    let kind = v.get("type").and_then(Value::as_str).ok_or_else(|| parse_err("measure needs a \"type\""))?;
    let invalid = |e: Error| match e {
        Error::InvalidParameter(s) => parse_err(s),
        other => other,
    };
    match kind {
        "moments" => Ok(MeasureRep::from_moments(numbers(v.get("m"), "m")?)),
        "jacobi" => {
            let alpha = numbers(v.get("alpha"), "alpha")?;
            let omega = numbers(v.get("omega"), "omega")?;
            Ok(MeasureRep::from_jacobi(JacobiParams::new(alpha, omega, tail(v.get("tail"))?).map_err(invalid)?))
        }
        "atoms" => {
            let Some(Value::Array(items)) = v.get("atoms") else {
                return Err(parse_err("field \"atoms\" must be an array"));
            };
            let atoms = items
                .iter()
                .map(|a| match a.as_array().map(Vec::as_slice) {
                    Some([x, w]) => Ok((number(x)?, number(w)?)),
                    _ => Err(parse_err("each atom is [location, weight]")),
                })
                .collect::<Result<Vec<_>>>()?;
            MeasureRep::from_atoms(atoms).map_err(invalid)
        }
        other => Err(parse_err(format!("unknown measure type {other:?}"))),
    }
}

pub fn measure_from_str(text: &str) -> Result<MeasureRep<Rational>> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    measure_from_json(&v)
}

fn strings(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(format_rational(x))).collect())
}

pub fn moments_json(m: &MomentSequence<Rational>) -> Value {
    json!({ "type": "moments", "m": strings(m.as_slice()) })
}

pub fn jacobi_json(j: &JacobiParams<Rational>) -> Value {
    let tail = match &j.tail {
        TailPolicy::Truncate => json!({ "kind": "truncate" }),
        TailPolicy::Wigner { a, b } => json!({ "kind": "wigner", "a": format_rational(a), "b": format_rational(b) }),
        TailPolicy::Periodic2 { a, b } => json!({ "kind": "periodic2", "a": strings(a), "b": strings(b) }),
    };
    json!({ "type": "jacobi", "alpha": strings(&j.alpha), "omega": strings(&j.omega), "tail": tail })
}

pub fn atoms_json(a: &AtomicMeasure<Rational>) -> Value {
    let atoms = a
        .atoms()
        .iter()
        .map(|(x, w)| json!([format_rational(x), format_rational(w)]))
        .collect();
    json!({ "type": "atoms", "atoms": Value::Array(atoms) })
}

/// The primary representation as a measure file.
pub fn measure_to_json(m: &MeasureRep<Rational>) -> Value {
    match m.representation() {
        Representation::Moments(s) => moments_json(s),
        Representation::Jacobi(j) => jacobi_json(j),
        Representation::Atoms(a) => atoms_json(a),
    }
}
