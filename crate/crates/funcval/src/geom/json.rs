//! JSON wire format for polytopes.
//!
//! `{"n": 2, "vertices": [[0, "1/2"], ...]}` or
//! `{"n": 2, "halfspaces": [{"normal": [...], "offset": ...}, ...]}`;
//! rationals are serialized as `"p/q"` strings (plain integers stay numbers).

use crate::error::{Error, Result};
use crate::geom::point::Point;
use crate::geom::polytope::{Halfspace, PolytopeH, PolytopeV};
use crate::rat::{format_rat, from_f64, parse_rat, Rat};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// Serializes a rational as a JSON number when integral and small, otherwise
/// as a `"p/q"` string.
pub fn rat_to_json(x: &Rat) -> Value {
    if x.denom() == &BigInt::from(1) {
        if let Ok(i) = i64::try_from(x.numer().clone()) {
            return json!(i);
        }
    }
    json!(format_rat(x))
}

/// Accepts integers, floats (converted exactly) and `"p/q"` strings.
pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else if let Some(f) = n.as_f64() {
                from_f64(f).ok_or_else(|| Error::Parse(format!("non-finite number {f}")))
            } else {
                Err(Error::Parse(format!("unrepresentable number {n}")))
            }
        }
        Value::String(s) => {
            parse_rat(s).ok_or_else(|| Error::Parse(format!("bad rational literal {s:?}")))
        }
        other => Err(Error::Parse(format!("expected rational, got {other}"))),
    }
}

pub fn point_to_json(p: &Point) -> Value {
    Value::Array(p.coords().iter().map(rat_to_json).collect())
}

pub fn point_from_json(v: &Value) -> Result<Point> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("point must be an array".into()))?;
    Ok(Point(
        arr.iter().map(rat_from_json).collect::<Result<Vec<_>>>()?,
    ))
}

pub fn vrep_to_json(p: &PolytopeV) -> Value {
    json!({
        "n": p.n(),
        "vertices": p.vertices().iter().map(point_to_json).collect::<Vec<_>>(),
    })
}

pub fn hrep_to_json(p: &PolytopeH) -> Value {
    json!({
        "n": p.n(),
        "halfspaces": p.halfspaces().iter().map(|h| json!({
            "normal": point_to_json(&h.normal),
            "offset": rat_to_json(&h.offset),
        })).collect::<Vec<_>>(),
    })
}

/// Reads either representation and returns a canonical V-polytope.
pub fn vrep_from_json(v: &Value) -> Result<PolytopeV> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("polytope must be an object".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing dimension field \"n\"".into()))? as usize;
    if let Some(verts) = obj.get("vertices") {
        let arr = verts
            .as_array()
            .ok_or_else(|| Error::Parse("\"vertices\" must be an array".into()))?;
        let pts = arr
            .iter()
            .map(point_from_json)
            .collect::<Result<Vec<_>>>()?;
        for p in &pts {
            if p.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: p.dim(),
                });
            }
        }
        PolytopeV::hull(&pts)
    } else if let Some(hs) = obj.get("halfspaces") {
        hrep_from_parts(n, hs)?.to_vrep()
    } else {
        Err(Error::Parse(
            "polytope needs \"vertices\" or \"halfspaces\"".into(),
        ))
    }
}

/// Reads either representation and returns a canonical H-polytope.
pub fn hrep_from_json(v: &Value) -> Result<PolytopeH> {
    Ok(vrep_from_json(v)?.to_hrep())
}

fn hrep_from_parts(n: usize, hs: &Value) -> Result<PolytopeH> {
    let arr = hs
        .as_array()
        .ok_or_else(|| Error::Parse("\"halfspaces\" must be an array".into()))?;
    let mut halfspaces = Vec::with_capacity(arr.len());
    for item in arr {
        let obj = item
            .as_object()
            .ok_or_else(|| Error::Parse("halfspace must be an object".into()))?;
        let normal = point_from_json(
            obj.get("normal")
                .ok_or_else(|| Error::Parse("halfspace missing \"normal\"".into()))?,
        )?;
        let offset = rat_from_json(
            obj.get("offset")
                .ok_or_else(|| Error::Parse("halfspace missing \"offset\"".into()))?,
        )?;
        if normal.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: normal.dim(),
            });
        }
        halfspaces.push(Halfspace::new(normal, offset));
    }
    PolytopeH::new(n, halfspaces)
}
