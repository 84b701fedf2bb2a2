//! JSON encoding of threshold trees.

use serde_json::{json, Map, Value};
use xclust_core::{AxisCut, Node, ThresholdTree};

use crate::{Error, Result};

pub fn to_value(tree: &ThresholdTree) -> Value {
    fn node(n: &Node) -> Value {
        match n {
            Node::Leaf(id) => json!({ "leaf": id }),
            Node::Split { cut, left, right } => json!({
                "cut": { "dim": cut.dim, "theta": cut.theta },
                "left": node(left),
                "right": node(right),
            }),
        }
    }
    node(tree.root())
}

/// Compact JSON with keys in a fixed order, e.g. `{"leaf":0}`.
pub fn to_string(tree: &ThresholdTree) -> String {
    to_value(tree).to_string()
}

fn schema(msg: impl Into<String>) -> Error {
    Error::TreeSchema(msg.into())
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema(format!("missing field `{key}`")))
}

fn as_index(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| schema(format!("`{what}` must be a non-negative integer, got {v}")))
}

fn node_from(v: &Value) -> Result<Node> {
    let obj = v
        .as_object()
        .ok_or_else(|| schema(format!("node must be an object, got {v}")))?;
    if obj.contains_key("leaf") {
        if obj.len() != 1 {
            return Err(schema("leaf node must only hold `leaf`"));
        }
        return Ok(Node::Leaf(as_index(&obj["leaf"], "leaf")?));
    }
    if let Some(extra) = obj.keys().find(|k| !["cut", "left", "right"].contains(&k.as_str())) {
        return Err(schema(format!("unexpected field `{extra}`; nodes are binary")));
    }
    let cut = field(obj, "cut")?
        .as_object()
        .ok_or_else(|| schema("`cut` must be an object"))?;
    let dim = as_index(field(cut, "dim")?, "dim")?;
    let theta = field(cut, "theta")?
        .as_f64()
        .ok_or_else(|| schema("`theta` must be a number"))?;
    Ok(Node::split(
        AxisCut::new(dim, theta),
        node_from(field(obj, "left")?)?,
        node_from(field(obj, "right")?)?,
    ))
}

pub fn from_value(v: &Value) -> Result<ThresholdTree> {
    Ok(ThresholdTree::new(node_from(v)?)?)
}

pub fn from_str(s: &str) -> Result<ThresholdTree> {
    from_value(&serde_json::from_str(s)?)
}
