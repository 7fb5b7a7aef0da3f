//! Graph JSON wire format and DOT export.
//!
//! ```json
//! {"vertices": ["a", "b"], "edges": [["a", "b"]], "coords": {"a": [0, 0]}}
//! ```
//!
//! `coords` is optional and only present for grid-built graphs. Output is
//! deterministic: vertices in canonical order, edges sorted canonically.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coords: Option<BTreeMap<String, (i64, i64)>>,
}

pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphJson {
        vertices: g.vertex_names().to_vec(),
        edges: g.edges(),
        coords: g.coords().cloned(),
    };
    serde_json::to_string(&doc).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<Graph, GraphError> {
    let doc: GraphJson =
        serde_json::from_str(text).map_err(|e| GraphError::BadJson(e.to_string()))?;
    let mut g = Graph::new();
    for v in &doc.vertices {
        g.add_vertex(v)?;
    }
    for (u, v) in &doc.edges {
        g.add_edge(u, v)?;
    }
    if let Some(coords) = doc.coords {
        for (v, c) in coords {
            g.set_coord(&v, c)?;
        }
    }
    Ok(g)
}

/// DOT text for visualization; vertex and edge order are canonical.
pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        if let Some((i, j)) = g.coord_of(v) {
            out.push_str(&format!("  \"{v}\" [pos=\"{j},{i}!\"];\n"));
        } else {
            out.push_str(&format!("  \"{v}\";\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  \"{u}\" -- \"{v}\";\n"));
    }
    out.push_str("}\n");
    out
}
