//! Deterministic artifact text.
//!
//! JSON is pretty-printed with struct fields in declaration order and a
//! trailing newline; DOT comes from [`CommGraph::to_dot`]. Equal inputs give
//! byte-identical output.

use serde::Serialize;

use crate::commgraph::CommGraph;
use crate::error::Result;

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn to_dot(graph: &CommGraph) -> String {
    graph.to_dot()
}
