//! Library side of the CLI: input loading shared by the binary and the
//! verification harness, and the data-driven registry of checkable facts.

pub mod facts;

use std::path::Path;

use listchoose::graph::{build_named, graph_from_json, Graph, NamedGraph};

/// Loads a graph argument: an existing file wins, otherwise the argument is
/// parsed as a named-graph descriptor such as `theta:2,2,4` or `chocolate`.
pub fn load_graph(arg: &str) -> Result<Graph, String> {
    if Path::new(arg).exists() {
        let text = std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?;
        return graph_from_json(&text).map_err(|e| format!("{arg}: {e}"));
    }
    match arg.parse::<NamedGraph>() {
        Ok(spec) => build_named(&spec).map_err(|e| e.to_string()),
        Err(e) => Err(format!("{arg} is neither a file nor a descriptor: {e}")),
    }
}
