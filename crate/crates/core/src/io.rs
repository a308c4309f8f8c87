//! JSON forms of every input and result.
//!
//! Output goes through [`serde_json::Value`], whose maps keep keys sorted,
//! so equal values always serialize to identical bytes. Rationals are
//! strings `"p/q"` in lowest terms with `q > 0`, or `"p"` for integers.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::bergman::{CellComplexSummary, CoarseComplex};
use crate::error::{Error, Result};
use crate::initial::{Flag, WeightVector};
use crate::matrix::{format_rational, parse_rational, Rational, RationalMatrix};
use crate::om::{OrientedMatroid, ValidationReport};
use crate::set::ElementSet;
use crate::signed::SignedSet;
use crate::trees::{EquidistantTree, TreeNode};

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SignedJson {
    #[serde(default)]
    pos: Vec<usize>,
    #[serde(default)]
    neg: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CircuitsJson {
    n: usize,
    circuits: Vec<SignedJson>,
}

/// A rational given as a string, or as a JSON integer for convenience.
#[derive(Deserialize)]
#[serde(untagged)]
enum RationalJson {
    Text(String),
    Integer(i64),
}

impl RationalJson {
    fn value(&self) -> Result<Rational> {
        match self {
            RationalJson::Text(s) => parse_rational(s),
            RationalJson::Integer(k) => Ok(Rational::from_integer((*k).into())),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    n: usize,
    rows: Vec<Vec<RationalJson>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightsJson {
    w: Vec<RationalJson>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FlagJson {
    chain: Vec<Vec<usize>>,
}

/// Signed sets as listed, each validated against `n`.
pub fn signed_sets_from_json(text: &str) -> Result<(usize, Vec<SignedSet>)> {
    let parsed: CircuitsJson = parse_json(text, "circuits")?;
    let sets = parsed
        .circuits
        .iter()
        .map(|c| SignedSet::from_lists(parsed.n, &c.pos, &c.neg))
        .collect::<Result<Vec<_>>>()?;
    Ok((parsed.n, sets))
}

/// `{"n": 6, "circuits": [{"pos": [1, 4], "neg": [2]}, ...]}`; either member
/// of a `±` pair may be listed.
pub fn circuits_from_json(text: &str) -> Result<OrientedMatroid> {
    let (n, sets) = signed_sets_from_json(text)?;
    OrientedMatroid::new(n, sets)
}

pub fn signed_set_json(c: &SignedSet) -> Value {
    json!({ "pos": c.pos().to_vec(), "neg": c.neg().to_vec() })
}

/// Canonical representatives in sorted order.
pub fn circuits_to_json(m: &OrientedMatroid) -> Value {
    json!({
        "n": m.ground_size(),
        "circuits": m.circuits().iter().map(signed_set_json).collect::<Vec<_>>(),
    })
}

/// `{"n": 3, "rows": [["1", "-1/2", "0"], ...]}`.
pub fn matrix_from_json(text: &str) -> Result<RationalMatrix> {
    let parsed: MatrixJson = parse_json(text, "matrix")?;
    let rows = parsed
        .rows
        .iter()
        .map(|r| {
            r.iter()
                .map(RationalJson::value)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    RationalMatrix::new(parsed.n, rows)
}

pub fn matrix_to_json(a: &RationalMatrix) -> Value {
    json!({
        "n": a.cols(),
        "rows": a.rows().iter().map(|r| r.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

/// `{"w": ["1", "1", "0"]}`.
pub fn weights_from_json(text: &str) -> Result<WeightVector> {
    let parsed: WeightsJson = parse_json(text, "weights")?;
    let w = parsed
        .w
        .iter()
        .map(RationalJson::value)
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightVector::new(w))
}

pub fn weights_to_json(w: &WeightVector) -> Value {
    json!({ "w": w.to_strings() })
}

/// `{"chain": [[6], [1, 6]]}`, listing only the proper part.
pub fn flag_from_json(n: usize, text: &str) -> Result<Flag> {
    let parsed: FlagJson = parse_json(text, "flag")?;
    let mut proper = Vec::with_capacity(parsed.chain.len());
    for s in &parsed.chain {
        if let Some(&e) = s.iter().find(|&&e| e == 0 || e > n) {
            return Err(Error::ElementOutOfRange { element: e, n });
        }
        proper.push(s.iter().collect::<ElementSet>());
    }
    Flag::new(n, proper)
}

pub fn flag_to_json(f: &Flag) -> Value {
    json!({ "chain": f.proper_part().iter().map(|s| s.to_vec()).collect::<Vec<_>>() })
}

pub fn report_to_json(r: &ValidationReport) -> Value {
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| {
            json!({
                "axiom": v.axiom.to_string(),
                "witnesses": v.witnesses.iter().map(signed_set_json).collect::<Vec<_>>(),
                "element": v.element,
                "kept": v.kept,
            })
        })
        .collect();
    json!({ "passed": r.passed, "violations": violations })
}

/// `{"f_vector": [...], "euler_char": k, "full_dimensional": m}`, plus
/// `"coarse_cells"` when the coarse subdivision was computed.
pub fn bergman_summary_to_json(s: &CellComplexSummary) -> Value {
    let mut out = json!({
        "positive": s.fine.positive,
        "rank": s.fine.rank,
        "f_vector": s.f_vector(),
        "euler_char": s.euler_characteristic(),
        "full_dimensional": s.full_dimensional_fine(),
    });
    if let Some(coarse) = &s.coarse {
        let obj = out.as_object_mut().unwrap();
        obj.insert("coarse_cells".into(), coarse_cells_json(coarse));
        obj.insert(
            "coarse_full_dimensional".into(),
            json!(coarse.full_dimensional_count()),
        );
    }
    out
}

fn coarse_cells_json(c: &CoarseComplex) -> Value {
    Value::Array(
        c.cells
            .iter()
            .map(|cell| {
                json!({
                    "mw_circuits": cell.mw.circuits().iter().map(signed_set_json).collect::<Vec<_>>(),
                    "flags": cell.flags.iter().map(|f| {
                        f.proper_part().iter().map(|s| s.to_vec()).collect::<Vec<_>>()
                    }).collect::<Vec<_>>(),
                    "full_dimensional": cell.full_dimensional,
                })
            })
            .collect(),
    )
}

/// `{"h": "1", "root": {"height": "0", "children": [{"leaf": 1}, ...]}}`.
pub fn tree_to_json(t: &EquidistantTree) -> Value {
    json!({ "h": format_rational(t.leaf_height()), "root": node_to_json(t.root()) })
}

fn node_to_json(node: &TreeNode) -> Value {
    match node {
        TreeNode::Leaf(l) => json!({ "leaf": l }),
        TreeNode::Internal { height, children } => json!({
            "height": format_rational(height),
            "children": children.iter().map(node_to_json).collect::<Vec<_>>(),
        }),
    }
}

pub fn tree_from_json(text: &str) -> Result<EquidistantTree> {
    let v: Value = parse_json(text, "tree")?;
    let h = v
        .get("h")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("tree: missing string \"h\"".into()))?;
    let root = v
        .get("root")
        .ok_or_else(|| Error::Parse("tree: missing \"root\"".into()))?;
    EquidistantTree::new(parse_rational(h)?, node_from_json(root)?)
}

fn node_from_json(v: &Value) -> Result<TreeNode> {
    if let Some(l) = v.get("leaf") {
        let l = l
            .as_u64()
            .ok_or_else(|| Error::Parse(format!("tree: bad leaf {l}")))?;
        return Ok(TreeNode::Leaf(l as usize));
    }
    let height = v
        .get("height")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("tree: internal vertex without string \"height\"".into()))?;
    let children = v
        .get("children")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("tree: internal vertex without \"children\"".into()))?;
    Ok(TreeNode::Internal {
        height: parse_rational(height)?,
        children: children.iter().map(node_from_json).collect::<Result<_>>()?,
    })
}

/// A permutation as a digit string such as `"57316284"` or a JSON list.
pub fn permutation_from_str(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    if t.starts_with('[') {
        return parse_json(t, "permutation");
    }
    t.chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as usize)
                .ok_or_else(|| Error::Parse(format!("permutation: bad digit {c:?}")))
        })
        .collect()
}

/// Canonical serialization: sorted keys, no insignificant whitespace.
pub fn to_canonical_string(v: &Value) -> String {
    serde_json::to_string(v).expect("values always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circuits_round_trip() {
        let text = r#"{"n": 3, "circuits": [{"pos": [2], "neg": [1, 3]}]}"#;
        let m = circuits_from_json(text).unwrap();
        let out = to_canonical_string(&circuits_to_json(&m));
        assert_eq!(out, r#"{"circuits":[{"neg":[2],"pos":[1,3]}],"n":3}"#);
        assert_eq!(circuits_from_json(&out).unwrap(), m);
    }

    #[test]
    fn malformed_inputs() {
        assert!(circuits_from_json("").is_err());
        assert!(circuits_from_json(r#"{"n": 2, "circuits": [{"pos": [3]}]}"#).is_err());
        assert!(circuits_from_json(r#"{"n": 2, "circuits": [], "extra": 1}"#).is_err());
        assert!(weights_from_json(r#"{"w": ["1/0"]}"#).is_err());
        assert!(flag_from_json(2, r#"{"chain": [[1, 2]]}"#).is_err());
        assert!(flag_from_json(2, r#"{"chain": [[3]]}"#).is_err());
    }

    #[test]
    fn weights_and_flags() {
        let w = weights_from_json(r#"{"w": ["2/4", 3, "-1"]}"#).unwrap();
        assert_eq!(
            to_canonical_string(&weights_to_json(&w)),
            r#"{"w":["1/2","3","-1"]}"#
        );
        let f = flag_from_json(6, r#"{"chain": [[6]]}"#).unwrap();
        assert_eq!(to_canonical_string(&flag_to_json(&f)), r#"{"chain":[[6]]}"#);
    }

    #[test]
    fn tree_round_trip() {
        let text = r#"{"h": "1", "root": {"height": "0", "children": [{"leaf": 1}, {"height": "1/2", "children": [{"leaf": 2}, {"leaf": 3}]}]}}"#;
        let t = tree_from_json(text).unwrap();
        assert_eq!(t.shape().to_string(), "(1,(2,3))");
        let again = tree_from_json(&to_canonical_string(&tree_to_json(&t))).unwrap();
        assert_eq!(again, t);
        assert!(tree_from_json(r#"{"h": "1", "root": {"leaf": 1}}"#).is_err());
    }

    #[test]
    fn permutations() {
        assert_eq!(permutation_from_str("312").unwrap(), vec![3, 1, 2]);
        assert_eq!(permutation_from_str("[10, 2]").unwrap(), vec![10, 2]);
        assert!(permutation_from_str("3a").is_err());
    }

    #[test]
    fn matrices() {
        let a = matrix_from_json(r#"{"n": 2, "rows": [["1", "-1"]]}"#).unwrap();
        assert_eq!(
            to_canonical_string(&matrix_to_json(&a)),
            r#"{"n":2,"rows":[["1","-1"]]}"#
        );
        assert!(matrix_from_json(r#"{"n": 3, "rows": [["1", "-1"]]}"#).is_err());
    }
}
