//! JSON documents for graphs and splines, and the JSON renderings of every
//! report the library produces.
//!
//! Parsing happens in two stages: `serde_json` reports syntax errors with a
//! line and column, then the schema walk reports the offending field path.

use std::collections::HashMap;

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use super::element::parse_element;
use crate::analysis::{CheckMode, DecompositionReport, SplineSet};
use crate::construct::GeneratingFamily;
use crate::error::{Error, Result};
use crate::gkm::{GkmMatrix, GkmRow, ReducedSystem, RowOp};
use crate::graph::{EdgeInput, EdgeLabeledGraph};
use crate::ring::{QPoly, RingElement, RingSpec};
use crate::spline::{Spline, VerificationReport};

fn syntax(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.to_string(),
        message: message.into(),
    }
}

fn object<'a>(v: &'a Value, path: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>> {
    let obj = v.as_object().ok_or_else(|| schema(path, "expected an object"))?;
    if let Some(k) = obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(schema(&format!("{path}.{k}"), "unknown field"));
    }
    Ok(obj)
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| schema(&format!("{path}.{key}"), "missing field"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn string<'a>(v: &'a Value, path: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| schema(path, "expected a string"))
}

/// Elements are JSON integers or strings in the element syntax. Over `Q[x]`
/// an array of coefficients (integers or "p/q" strings, ascending degree) is
/// also accepted.
pub fn element_from_value(v: &Value, ring: RingSpec, path: &str) -> Result<RingElement> {
    if let (Value::Array(cs), RingSpec::PolyRational) = (v, ring) {
        return coefficient_array(cs, path);
    }
    let text = match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        Value::Number(_) => return Err(schema(path, "expected an integer")),
        Value::String(s) => s.clone(),
        _ => return Err(schema(path, "expected an element (integer or string)")),
    };
    parse_element(&text, ring).map_err(|e| schema(path, e.to_string()))
}

fn coefficient_array(cs: &[Value], path: &str) -> Result<RingElement> {
    let mut coeffs = Vec::with_capacity(cs.len());
    for (i, c) in cs.iter().enumerate() {
        let cpath = format!("{path}[{i}]");
        let parsed = match c {
            Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string().parse::<BigRational>().ok(),
            Value::String(t) => t.trim().parse::<BigRational>().ok(),
            _ => None,
        };
        coeffs.push(parsed.ok_or_else(|| schema(&cpath, "expected a rational coefficient"))?);
    }
    Ok(RingElement::Poly(QPoly::new(coeffs)))
}

/// Integers that fit in 64 bits and residues become JSON numbers; everything
/// else is a string in the element syntax.
pub fn element_to_value(x: &RingElement) -> Value {
    match x {
        RingElement::Int(n) => i64::try_from(n)
            .map(Value::from)
            .unwrap_or_else(|_| Value::String(n.to_string())),
        RingElement::Mod(r) => Value::from(r.value()),
        RingElement::Poly(p) => Value::String(p.to_string()),
    }
}

pub fn ring_from_value(v: &Value, path: &str) -> Result<RingSpec> {
    let obj = object(v, path, &["kind", "modulus"])?;
    let kind = string(field(obj, path, "kind")?, &format!("{path}.kind"))?;
    let modulus = obj.get("modulus");
    match (kind, modulus) {
        ("integers", None) => Ok(RingSpec::Integers),
        ("poly-rational", None) => Ok(RingSpec::PolyRational),
        ("integers-mod", Some(m)) => {
            let mpath = format!("{path}.modulus");
            let m = m
                .as_u64()
                .ok_or_else(|| schema(&mpath, "expected a positive integer"))?;
            RingSpec::integers_mod(m).map_err(|e| schema(&mpath, e.to_string()))
        }
        ("integers-mod", None) => Err(schema(&format!("{path}.modulus"), "missing field")),
        ("integers" | "poly-rational", Some(_)) => {
            Err(schema(&format!("{path}.modulus"), "only integers-mod takes a modulus"))
        }
        (other, _) => Err(schema(
            &format!("{path}.kind"),
            format!("unknown ring `{other}` (expected integers, integers-mod or poly-rational)"),
        )),
    }
}

pub fn ring_to_value(r: RingSpec) -> Value {
    match r.modulus() {
        Some(m) => json!({"kind": r.kind_name(), "modulus": m}),
        None => json!({"kind": r.kind_name()}),
    }
}

pub fn graph_from_value(v: &Value) -> Result<EdgeLabeledGraph> {
    let obj = object(v, "$", &["ring", "vertices", "edges"])?;
    let ring = ring_from_value(field(obj, "$", "ring")?, "$.ring")?;
    let vertices = array(field(obj, "$", "vertices")?, "$.vertices")?
        .iter()
        .enumerate()
        .map(|(i, x)| string(x, &format!("$.vertices[{i}]")).map(str::to_string))
        .collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::new();
    for (i, e) in array(field(obj, "$", "edges")?, "$.edges")?.iter().enumerate() {
        let path = format!("$.edges[{i}]");
        let eo = object(e, &path, &["u", "v", "ideal"])?;
        let u = string(field(eo, &path, "u")?, &format!("{path}.u"))?;
        let w = string(field(eo, &path, "v")?, &format!("{path}.v"))?;
        let gpath = format!("{path}.ideal");
        let gens = array(field(eo, &path, "ideal")?, &gpath)?
            .iter()
            .enumerate()
            .map(|(j, x)| element_from_value(x, ring, &format!("{gpath}[{j}]")))
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            return Err(schema(&gpath, "an ideal needs at least one generator"));
        }
        edges.push(EdgeInput::new(u, w, gens));
    }
    EdgeLabeledGraph::build(ring, vertices, edges).map_err(|e| schema("$", e.to_string()))
}

pub fn parse_graph(text: &str) -> Result<EdgeLabeledGraph> {
    graph_from_value(&syntax(text)?)
}

/// Canonical form: edges sorted by endpoint positions, earlier endpoint as `u`.
pub fn graph_to_value(g: &EdgeLabeledGraph) -> Value {
    let mut edges: Vec<_> = g.edges().iter().collect();
    edges.sort_by_key(|e| (e.tail(), e.head()));
    json!({
        "ring": ring_to_value(g.ring()),
        "vertices": g.vertices(),
        "edges": edges.iter().map(|e| json!({
            "u": g.vertex_id(e.tail()),
            "v": g.vertex_id(e.head()),
            "ideal": e.label().generators().iter().map(element_to_value).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn spline_from_value(v: &Value, g: &EdgeLabeledGraph) -> Result<Spline> {
    let obj = object(v, "$", &["values"])?;
    let values = field(obj, "$", "values")?
        .as_object()
        .ok_or_else(|| schema("$.values", "expected an object keyed by vertex id"))?;
    let mut map = HashMap::with_capacity(values.len());
    for (k, x) in values {
        let path = format!("$.values.{k}");
        if g.vertex_index(k).is_none() {
            return Err(schema(&path, "not a vertex of the graph"));
        }
        map.insert(k.clone(), element_from_value(x, g.ring(), &path)?);
    }
    if let Some(missing) = g.vertices().iter().find(|v| !map.contains_key(*v)) {
        return Err(schema(&format!("$.values.{missing}"), "missing vertex"));
    }
    Spline::from_map(g, map).map_err(|e| schema("$.values", e.to_string()))
}

pub fn parse_spline(text: &str, g: &EdgeLabeledGraph) -> Result<Spline> {
    spline_from_value(&syntax(text)?, g)
}

pub fn spline_to_value(g: &EdgeLabeledGraph, p: &Spline) -> Value {
    let values: Map<String, Value> = g
        .vertices()
        .iter()
        .zip(p.values())
        .map(|(v, x)| (v.clone(), element_to_value(x)))
        .collect();
    json!({ "values": values })
}

fn edge_pair(g: &EdgeLabeledGraph, e: usize) -> Value {
    let (u, v) = g.edge_ids(e);
    json!([u, v])
}

pub fn report_to_value(g: &EdgeLabeledGraph, r: &VerificationReport) -> Value {
    json!({
        "ok": r.ok,
        "violations": r.violations.iter().map(|v| json!({
            "edge": edge_pair(g, v.edge),
            "difference": element_to_value(&v.difference),
        })).collect::<Vec<_>>(),
    })
}

pub fn family_to_value(f: &GeneratingFamily) -> Value {
    let ids = |vs: &[usize]| vs.iter().map(|&v| f.host.vertex_id(v).to_string()).collect::<Vec<_>>();
    json!({
        "vertex_order": ids(&f.vertex_order),
        "pivots": ids(&f.pivots),
        "members": f.members.iter().map(|m| spline_to_value(&f.host, m)).collect::<Vec<_>>(),
        "scaling_factors": f.scaling_factors.iter().map(element_to_value).collect::<Vec<_>>(),
        "flagged": f.flagged,
        "triangular": f.is_triangular(),
    })
}

fn row_to_value(m: &GkmMatrix, row: &GkmRow, kind: &str) -> Value {
    let (a, b) = m.directed(row.edge);
    json!({
        "edge": [m.graph().vertex_id(a), m.graph().vertex_id(b)],
        "kind": kind,
        "coeffs": row.coeffs,
        "rhs": m.render_rhs(row),
    })
}

pub fn matrix_to_value(m: &GkmMatrix) -> Value {
    json!({
        "columns": m.columns(),
        "rows": m.rows().iter().map(|r| row_to_value(m, r, "edge")).collect::<Vec<_>>(),
    })
}

fn op_to_value(op: &RowOp) -> Value {
    match *op {
        RowOp::Swap(a, b) => json!({"op": "swap", "rows": [a, b]}),
        RowOp::Negate(a) => json!({"op": "negate", "row": a}),
        RowOp::AddMultiple { target, source, factor } => {
            json!({"op": "add", "target": target, "source": source, "factor": factor})
        }
    }
}

pub fn reduced_to_value(r: &ReducedSystem) -> Value {
    let m = r.matrix();
    let rows: Vec<Value> = r
        .tree_rows
        .iter()
        .map(|row| row_to_value(m, row, "tree"))
        .chain(r.cycle_rows.iter().map(|row| row_to_value(m, row, "cycle")))
        .collect();
    json!({
        "columns": m.columns(),
        "rows": rows,
        "transform_log": r.transform_log.iter().map(op_to_value).collect::<Vec<_>>(),
    })
}

pub fn spline_set_to_value(g: &EdgeLabeledGraph, s: &SplineSet, max_listed: usize) -> Value {
    if s.count() > max_listed {
        return json!({"count": s.count(), "elided": true});
    }
    json!({
        "count": s.count(),
        "members": (0..s.count()).map(|i| spline_to_value(g, &s.spline(i))).collect::<Vec<_>>(),
    })
}

pub fn decomposition_to_value(g: &EdgeLabeledGraph, r: &DecompositionReport) -> Value {
    let mode = match r.mode {
        CheckMode::Exhaustive { budget } => json!({"kind": "exhaustive", "budget": budget}),
        CheckMode::Sampled { seed, samples } => json!({"kind": "sampled", "seed": seed, "samples": samples}),
    };
    json!({
        "claim": r.claim.name(),
        "mode": mode,
        "subgraphs": r.subgraphs.iter().map(|s| s.iter().map(|&e| edge_pair(g, e)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "verdict": r.verdict,
        "counterexample": r.counterexample.as_ref().map(|p| spline_to_value(g, p)),
        "checked": r.checked,
    })
}
