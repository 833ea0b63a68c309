//! JSON encodings of rings, character tables and exact numbers.

use serde::ser::SerializeMap;
use serde::Serializer;
use serde_json::{json, Value};

use crate::construct::CharacterTable;
use crate::error::{FusionError, Result};
use crate::numbers::{AlgebraicReal, QuadraticNumber, Rational};
use crate::ring::FusionRing;

pub fn rational_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `a + b√D` as `{"a": "p/q", "b": "p/q", "D": n}`.
pub fn quadratic_json(q: &QuadraticNumber) -> Value {
    json!({ "a": rational_string(q.a()), "b": rational_string(q.b()), "D": q.radicand() })
}

/// Quadratic values use [`quadratic_json`]; other values give the defining
/// polynomial (low degree first) and an isolating interval.
pub fn algebraic_json(v: &AlgebraicReal) -> Value {
    match v {
        AlgebraicReal::Quadratic(q) => quadratic_json(q),
        AlgebraicReal::Isolated { poly, lo, hi } => json!({
            "poly": poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "lo": rational_string(lo),
            "hi": rational_string(hi),
        }),
    }
}

pub fn ser_algebraic<S: Serializer>(v: &AlgebraicReal, s: S) -> std::result::Result<S::Ok, S::Error> {
    let Value::Object(obj) = algebraic_json(v) else { unreachable!() };
    let mut map = s.serialize_map(Some(obj.len()))?;
    for (k, val) in &obj {
        map.serialize_entry(k, val)?;
    }
    map.end()
}

pub fn ser_rational<S: Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(v))
}

pub fn ser_quadratic<S: Serializer>(v: &QuadraticNumber, s: S) -> std::result::Result<S::Ok, S::Error> {
    ser_algebraic(&AlgebraicReal::Quadratic(v.clone()), s)
}

/// `{"rank", "labels", "dual", "tensor"}` with `tensor[i][j][k] = c_{ij}^k`.
pub fn ring_to_json(ring: &FusionRing) -> Value {
    json!({
        "rank": ring.rank(),
        "labels": ring.labels(),
        "dual": ring.duals(),
        "tensor": ring.nested_tensor(),
    })
}

/// Writes the ring with one `tensor[i][j]` row per line.
pub fn ring_to_json_string(ring: &FusionRing) -> String {
    let n = ring.rank();
    let nested = ring.nested_tensor();
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"rank\": {n},\n"));
    out.push_str(&format!("  \"labels\": {},\n", serde_json::to_string(ring.labels()).unwrap()));
    out.push_str(&format!("  \"dual\": {},\n", serde_json::to_string(ring.duals()).unwrap()));
    out.push_str("  \"tensor\": [\n");
    for (i, plane) in nested.iter().enumerate() {
        out.push_str("    [\n");
        for (j, row) in plane.iter().enumerate() {
            let sep = if j + 1 < n { "," } else { "" };
            out.push_str(&format!("      {}{sep}\n", serde_json::to_string(row).unwrap()));
        }
        out.push_str(if i + 1 < n { "    ],\n" } else { "    ]\n" });
    }
    out.push_str("  ]\n}\n");
    out
}

fn malformed(m: impl Into<String>) -> FusionError {
    FusionError::Malformed(m.into())
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| malformed(format!("{what} must be a nonnegative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| malformed(format!("{what} must be an array")))
}

/// Parses the format of [`ring_to_json`]. `labels` and `rank` are optional.
pub fn ring_from_json(v: &Value) -> Result<FusionRing> {
    let t_val = v.get("tensor").ok_or_else(|| malformed("missing \"tensor\""))?;
    let planes = as_array(t_val, "tensor")?;
    let n = planes.len();
    if let Some(r) = v.get("rank") {
        if as_usize(r, "rank")? != n {
            return Err(malformed("rank does not match tensor"));
        }
    }
    let mut nested = Vec::with_capacity(n);
    for (i, plane) in planes.iter().enumerate() {
        let rows = as_array(plane, &format!("tensor[{i}]"))?;
        let mut p = Vec::with_capacity(rows.len());
        for (j, row) in rows.iter().enumerate() {
            let entries = as_array(row, &format!("tensor[{i}][{j}]"))?;
            let r: Result<Vec<u32>> = entries
                .iter()
                .map(|e| {
                    e.as_u64()
                        .and_then(|x| u32::try_from(x).ok())
                        .ok_or_else(|| malformed(format!("tensor[{i}][{j}] entries must be u32")))
                })
                .collect();
            p.push(r?);
        }
        nested.push(p);
    }
    let dual = match v.get("dual") {
        Some(d) => as_array(d, "dual")?.iter().map(|x| as_usize(x, "dual entry")).collect::<Result<Vec<_>>>()?,
        None => return Err(malformed("missing \"dual\"")),
    };
    let labels = match v.get("labels") {
        Some(l) => as_array(l, "labels")?
            .iter()
            .map(|x| x.as_str().map(String::from).ok_or_else(|| malformed("labels must be strings")))
            .collect::<Result<Vec<_>>>()?,
        None => (0..n).map(|i| i.to_string()).collect(),
    };
    FusionRing::new(labels, dual, nested)
}

pub fn ring_from_str(s: &str) -> Result<FusionRing> {
    let v: Value = serde_json::from_str(s).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    ring_from_json(&v)
}

/// `{"group_order", "root_order", "class_sizes", "values", "labels"?}` with
/// each value a list of integer coefficients of powers of `ζ_N`.
pub fn character_table_from_json(v: &Value) -> Result<CharacterTable> {
    let field = |k: &str| v.get(k).ok_or_else(|| malformed(format!("missing \"{k}\"")));
    let group_order = field("group_order")?.as_u64().ok_or_else(|| malformed("group_order must be an integer"))?;
    let root_order = as_usize(field("root_order")?, "root_order")?;
    let class_sizes = as_array(field("class_sizes")?, "class_sizes")?
        .iter()
        .map(|x| x.as_u64().ok_or_else(|| malformed("class sizes must be integers")))
        .collect::<Result<Vec<_>>>()?;
    let values = as_array(field("values")?, "values")?
        .iter()
        .map(|row| {
            as_array(row, "values row")?
                .iter()
                .map(|e| match e {
                    Value::Number(_) => {
                        let x = e.as_i64().ok_or_else(|| malformed("entries must be integers"))?;
                        let mut c = vec![0i64; root_order.max(1)];
                        c[0] = x;
                        Ok(c)
                    }
                    _ => as_array(e, "entry")?
                        .iter()
                        .map(|c| c.as_i64().ok_or_else(|| malformed("coefficients must be integers")))
                        .collect(),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let labels = match v.get("labels") {
        None | Some(Value::Null) => None,
        Some(l) => Some(
            as_array(l, "labels")?
                .iter()
                .map(|x| x.as_str().map(String::from).ok_or_else(|| malformed("labels must be strings")))
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    if root_order == 0 {
        return Err(malformed("root_order must be positive"));
    }
    Ok(CharacterTable { group_order, root_order, class_sizes, values, labels })
}

pub fn character_table_to_json(t: &CharacterTable) -> Value {
    json!({
        "group_order": t.group_order,
        "root_order": t.root_order,
        "class_sizes": t.class_sizes,
        "values": t.values,
        "labels": t.labels,
    })
}
