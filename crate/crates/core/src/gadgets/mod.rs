//! Reduction constructions: graphs with labeled role vertices, a size
//! function, a palette, and (where the construction prescribes one) a
//! canonical list assignment.
//!
//! Colors in the source constructions that count from 0 are shifted to the
//! 1-based palette here; builders note the shift where it applies.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::listcolor::{ListAssignment, ListColorError, SizeFunction};

mod basic;
mod bipartite;
mod g3;
mod h;
mod hypergraph;
mod misc;

pub use basic::{diamond_gadget, forall_variable_gadget, path_transmitter};
pub use bipartite::{bipartite_ch_reduction, bipartite_critical_gadget, compose_ff};
pub use g3::{candidate_148, gadget_g, gadget_g3, GlueSpec};
pub use h::{
    attach_h_everywhere, gadget_h, h_witness_assignment, listcol_reduction_34, AttachedH,
    ListcolReduction34,
};
pub use hypergraph::{hypergraph_reduction, HypergraphReduction};
pub use misc::{c6_preext_reduction, pad_subgrid_to_grid, PaddedGrid};

#[derive(Debug, Error)]
pub enum GadgetError {
    #[error("bad gadget parameters: {0}")]
    BadParameters(String),
    #[error("glue specification rejected: {0}")]
    GlueRejected(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("{0} and {1} lie in different parts")]
    DifferentParts(String, String),
    #[error("bad hypergraph: {0}")]
    BadHypergraph(String),
    #[error("not a valid 2-coloring: {0}")]
    BadTwoColoring(String),
    #[error("input is not an induced subgrid: {0}")]
    NotSubgrid(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    List(#[from] ListColorError),
}

/// A graph together with labeled role vertices, the size function of the
/// construction, its palette, and an optional canonical list assignment.
#[derive(Debug, Clone)]
pub struct GadgetWithRoles {
    pub graph: Graph,
    pub roles: BTreeMap<String, Vec<String>>,
    pub sizes: SizeFunction,
    pub canonical_assignment: Option<ListAssignment>,
    pub palette: u8,
}

impl GadgetWithRoles {
    pub fn role_set(&self, name: &str) -> Option<&[String]> {
        self.roles.get(name).map(|v| v.as_slice())
    }

    /// Singleton roles (Input, Output, X, ...).
    pub fn role_vertex(&self, name: &str) -> Option<&str> {
        match self.roles.get(name) {
            Some(vs) if vs.len() == 1 => Some(vs[0].as_str()),
            _ => None,
        }
    }

    pub(crate) fn add_role(&mut self, name: &str, vertices: &[&str]) {
        self.roles.insert(
            name.to_string(),
            vertices.iter().map(|s| s.to_string()).collect(),
        );
    }
}

/// Renames every vertex of `h` so that nothing collides with `taken`:
/// the smallest prefix "H1#", "H2#", ... making all names fresh is applied.
pub(crate) fn fresh_prefix(taken: &Graph, h: &Graph) -> String {
    for t in 1.. {
        let prefix = format!("H{t}#");
        let clash = h
            .vertices()
            .any(|v| taken.has_vertex(&format!("{prefix}{v}")));
        if !clash {
            return prefix;
        }
    }
    unreachable!()
}

/// Copies `src` into `dst` with every vertex renamed through `map`.
pub(crate) fn copy_renamed(
    dst: &mut Graph,
    src: &Graph,
    map: impl Fn(&str) -> String,
) -> Result<(), GraphError> {
    for v in src.vertices() {
        let name = map(v);
        if !dst.has_vertex(&name) {
            dst.add_vertex(&name)?;
        }
    }
    for (u, v) in src.edges() {
        dst.add_edge(&map(&u), &map(&v))?;
    }
    Ok(())
}
