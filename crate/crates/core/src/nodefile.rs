//! JSON node lists: each entry is either a coordinate array (integers or
//! `"p/q"` strings) or `{"minpoly": "...", "point": ["expr", ...]}` with the
//! coordinates written as polynomials in the root `a` of `minpoly`.

use serde_json::{json, Value};

use crate::arith::{parse_rat, NumberField, Rat};
use crate::error::{Error, Result};
use crate::mpoly::{parse_upoly, ProjPoint};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn rational(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => n.as_i64().map(crate::arith::rat).ok_or_else(|| bad(format!("coordinate {n} is not an integer"))),
        Value::String(s) => parse_rat(s).ok_or_else(|| bad(format!("coordinate {s:?} is not a rational number"))),
        other => Err(bad(format!("unexpected coordinate {other}"))),
    }
}

fn check_dim(len: usize, dim: usize, i: usize) -> Result<()> {
    if len != dim + 1 {
        return Err(bad(format!("node #{i} has {len} coordinates, expected {}", dim + 1)));
    }
    Ok(())
}

pub fn parse_point(v: &Value, dim: usize, i: usize) -> Result<ProjPoint> {
    match v {
        Value::Array(cs) => {
            check_dim(cs.len(), dim, i)?;
            ProjPoint::rational(&cs.iter().map(rational).collect::<Result<Vec<_>>>()?)
        }
        Value::Object(o) => {
            let minpoly = o.get("minpoly").and_then(Value::as_str).ok_or_else(|| bad(format!("node #{i}: missing minpoly")))?;
            let coords = o.get("point").and_then(Value::as_array).ok_or_else(|| bad(format!("node #{i}: missing point")))?;
            check_dim(coords.len(), dim, i)?;
            let field = NumberField::new(&parse_upoly(minpoly, "a")?)?;
            let polys = coords
                .iter()
                .map(|c| match c {
                    Value::String(s) => parse_upoly(s, "a"),
                    Value::Number(_) => Ok(crate::arith::UPoly::constant(rational(c)?)),
                    other => Err(bad(format!("node #{i}: unexpected coordinate {other}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            ProjPoint::over(&field, &polys)
        }
        other => Err(bad(format!("node #{i}: expected an array or an object, got {other}"))),
    }
}

/// Points of `P^dim` from a JSON array.
pub fn parse_nodes(text: &str, dim: usize) -> Result<Vec<ProjPoint>> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(format!("node list: {e}")))?;
    let items = v.as_array().ok_or_else(|| bad("node list must be a JSON array"))?;
    items.iter().enumerate().map(|(i, p)| parse_point(p, dim, i)).collect()
}

pub fn point_json(p: &ProjPoint) -> Value {
    if let Some(cs) = p.rational_coords() {
        return Value::Array(cs.iter().map(|c| Value::String(c.to_string())).collect());
    }
    let coords: Vec<String> = p.coords().iter().map(|c| c.to_string()).collect();
    json!({ "minpoly": p.field().minpoly().to_string(), "point": coords })
}
