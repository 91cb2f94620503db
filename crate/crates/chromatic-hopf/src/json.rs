//! JSON encodings: rational functions as `{"num":[...],"den":[...]}`
//! with exact rationals rendered as `p/q` strings, elements as tagged
//! term lists, graphs as Hessenberg vectors or edge lists. Round trips
//! are bit-exact.

use crate::algebra::{Basis, Element, Key};
use crate::graphs::{DyckGraph, LabeledGraph};
use crate::ratfun::{Poly, QRat, RationalFunction};
use serde_json::{json, Map, Value};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("invalid value: {0}")]
    Invalid(String),
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
    #[error(transparent)]
    Graph(#[from] crate::graphs::GraphError),
}

fn invalid(msg: impl Into<String>) -> JsonError {
    JsonError::Invalid(msg.into())
}

fn qrat_to_string(q: &QRat) -> String {
    q.to_string()
}

fn qrat_from_str(s: &str) -> Result<QRat, JsonError> {
    QRat::from_str(s).map_err(|e| invalid(format!("bad rational '{}': {}", s, e)))
}

fn poly_to_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(qrat_to_string(c))).collect())
}

fn poly_from_json(v: &Value) -> Result<Poly, JsonError> {
    let arr = v.as_array().ok_or_else(|| invalid("polynomial must be an array"))?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for c in arr {
        let s = c.as_str().ok_or_else(|| invalid("coefficient must be a string"))?;
        coeffs.push(qrat_from_str(s)?);
    }
    Ok(Poly::new(coeffs))
}

pub fn rational_to_json(f: &RationalFunction) -> Value {
    json!({ "num": poly_to_json(f.numerator()), "den": poly_to_json(f.denominator()) })
}

pub fn rational_from_json(v: &Value) -> Result<RationalFunction, JsonError> {
    let num = poly_from_json(v.get("num").ok_or_else(|| invalid("missing 'num'"))?)?;
    let den = poly_from_json(v.get("den").ok_or_else(|| invalid("missing 'den'"))?)?;
    if den.is_zero() {
        return Err(invalid("zero denominator"));
    }
    Ok(RationalFunction::new(num, den).expect("nonzero denominator"))
}

fn key_to_json(k: &Key) -> Value {
    Value::Array(k.entries().iter().map(|&a| Value::Number(a.into())).collect())
}

fn key_from_json(v: &Value) -> Result<Key, JsonError> {
    let arr = v.as_array().ok_or_else(|| invalid("key must be an array"))?;
    let mut entries = Vec::with_capacity(arr.len());
    for x in arr {
        let n = x
            .as_u64()
            .filter(|&n| n >= 1 && n <= u8::MAX as u64)
            .ok_or_else(|| invalid("key entries must be small positive integers"))?;
        entries.push(n as u8);
    }
    Ok(Key::new(entries))
}

pub fn element_to_json(e: &Element) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(k, c)| json!({ "key": key_to_json(k), "coeff": rational_to_json(c) }))
        .collect();
    json!({ "basis": e.basis().name(), "terms": terms })
}

pub fn element_from_json(v: &Value) -> Result<Element, JsonError> {
    let name = v
        .get("basis")
        .and_then(Value::as_str)
        .ok_or_else(|| invalid("missing 'basis'"))?;
    let basis = Basis::from_name(name).ok_or_else(|| invalid(format!("unknown basis {}", name)))?;
    let mut out = Element::zero(basis);
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| invalid("missing 'terms'"))?;
    for term in terms {
        let key = key_from_json(term.get("key").ok_or_else(|| invalid("missing 'key'"))?)?;
        let coeff =
            rational_from_json(term.get("coeff").ok_or_else(|| invalid("missing 'coeff'"))?)?;
        let single = Element::from_term(basis, key, coeff)?;
        out = out.add(&single)?;
    }
    Ok(out)
}

pub fn dyck_to_json(g: &DyckGraph) -> Value {
    json!({
        "n": g.n(),
        "h": g.hessenberg().iter().map(|&x| x as u64).collect::<Vec<u64>>(),
        "edges": g.edges().iter().map(|&(i, j)| vec![i as u64, j as u64]).collect::<Vec<_>>(),
        "diagram": g.to_diagram().parts().iter().map(|&p| p as u64).collect::<Vec<u64>>(),
    })
}

pub fn labeled_graph_to_json(g: &LabeledGraph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edges().map(|(i, j)| vec![i as u64, j as u64]).collect::<Vec<_>>(),
    })
}

/// Accepts either `{"n": 5, "h": [...]}` or `{"n": 5, "edges": [[i, j], ...]}`.
pub fn graph_from_json(v: &Value) -> Result<LabeledGraph, JsonError> {
    let obj: &Map<String, Value> =
        v.as_object().ok_or_else(|| invalid("graph must be an object"))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| invalid("missing vertex count 'n'"))? as usize;
    if let Some(h) = obj.get("h") {
        let arr = h.as_array().ok_or_else(|| invalid("'h' must be an array"))?;
        let mut hess = Vec::with_capacity(arr.len());
        for x in arr {
            hess.push(
                x.as_u64().filter(|&v| v <= u8::MAX as u64).ok_or_else(|| invalid("bad 'h'"))?
                    as u8,
            );
        }
        if hess.len() != n {
            return Err(invalid("'h' length must equal 'n'"));
        }
        return Ok(DyckGraph::new(hess)?.to_graph());
    }
    if let Some(edges) = obj.get("edges") {
        let arr = edges.as_array().ok_or_else(|| invalid("'edges' must be an array"))?;
        let mut list = Vec::with_capacity(arr.len());
        for e in arr {
            let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| invalid("bad edge"))?;
            let i = pair[0].as_u64().ok_or_else(|| invalid("bad edge endpoint"))? as usize;
            let j = pair[1].as_u64().ok_or_else(|| invalid("bad edge endpoint"))? as usize;
            list.push((i, j));
        }
        return Ok(LabeledGraph::new(n, list)?);
    }
    Err(invalid("graph needs 'h' or 'edges'"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::q_factorial;

    #[test]
    fn rational_round_trip_is_bit_exact() {
        let samples = [
            RationalFunction::zero(),
            RationalFunction::one(),
            q_factorial(4),
            RationalFunction::new(Poly::from_i64(&[0, -1, 1]), Poly::from_i64(&[1, 1]))
                .unwrap(),
            RationalFunction::new(
                Poly::new(vec![QRat::new(3.into(), 2.into())]),
                Poly::from_i64(&[-1, 0, 1]),
            )
            .unwrap(),
        ];
        for f in &samples {
            let v = rational_to_json(f);
            let back = rational_from_json(&v).unwrap();
            assert_eq!(&back, f);
            // through a string render as well
            let s = serde_json::to_string(&v).unwrap();
            let back2 = rational_from_json(&serde_json::from_str(&s).unwrap()).unwrap();
            assert_eq!(&back2, f);
        }
    }

    #[test]
    fn element_round_trip() {
        let g = DyckGraph::new(vec![2, 2, 3]).unwrap();
        let e = crate::chromatic::x_wqsym(&g.to_graph());
        let v = element_to_json(&e);
        assert_eq!(element_from_json(&v).unwrap(), e);
        let f = crate::chromatic::sw_f_expansion(&g);
        assert_eq!(element_from_json(&element_to_json(&f)).unwrap(), f);
    }

    #[test]
    fn graph_parsing() {
        let g = graph_from_json(&serde_json::json!({"n": 5, "h": [2, 3, 5, 5, 5]})).unwrap();
        assert_eq!(g.edge_count(), 5);
        let h = graph_from_json(
            &serde_json::json!({"n": 3, "edges": [[1, 2], [2, 3]]}),
        )
        .unwrap();
        assert_eq!(h, DyckGraph::path(3).to_graph());
        assert!(graph_from_json(&serde_json::json!({"n": 3, "h": [2, 2]})).is_err());
        assert!(graph_from_json(&serde_json::json!({"n": 2})).is_err());
        assert!(graph_from_json(&serde_json::json!({"n": 3, "h": [3, 2, 3]})).is_err());
    }

    #[test]
    fn dyck_json_shape() {
        let g = DyckGraph::new(vec![2, 3, 5, 5, 5]).unwrap();
        let v = dyck_to_json(&g);
        assert_eq!(v["n"], 5);
        assert_eq!(v["h"].as_array().unwrap().len(), 5);
        assert_eq!(v["diagram"].as_array().unwrap().len(), 3);
        let back = graph_from_json(&v).unwrap();
        assert_eq!(back, g.to_graph());
    }
}
