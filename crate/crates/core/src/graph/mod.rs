//! Simple undirected graphs with stable, ordered string identifiers.
//!
//! The declared vertex order is total and deterministic; every search,
//! enumeration and witness downstream iterates in this order.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use thiserror::Error;

mod blocks;
mod cores;
mod io;
mod named;
pub mod smallgraphs;

pub use blocks::{
    block_decomposition, classify_block, is_block_cactus, is_quasi_line_perfect, BlockClass,
    BlockDecomposition,
};
pub use cores::{
    classify_core_component, compute_core, compute_core_with_priority, CoreClass, CoreResult,
};
pub use io::{graph_from_json, graph_to_dot, graph_to_json};
pub use named::{build_named, GridGraph, NamedGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("loop edge at {0:?}")]
    LoopEdge(String),
    #[error("bad named-graph descriptor: {0}")]
    BadDescriptor(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("vertex {0:?} carries no grid coordinates")]
    MissingCoordinates(String),
    #[error("invalid graph JSON: {0}")]
    BadJson(String),
}

/// Simple undirected graph. Vertices are strings; the declared order is the
/// canonical order used by every algorithm in this crate.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
    coords: Option<BTreeMap<String, (i64, i64)>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.adj == other.adj && self.coords == other.coords
    }
}
impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Builds a graph from vertex names (in canonical order) and edges.
    pub fn from_parts<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self, GraphError> {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v.as_ref())?;
        }
        for (u, v) in edges {
            g.add_edge(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<usize, GraphError> {
        if self.index.contains_key(name) {
            return Err(GraphError::DuplicateVertex(name.to_string()));
        }
        let id = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        self.adj.push(BTreeSet::new());
        Ok(id)
    }

    /// Inserts a vertex if not already present, returning its index.
    pub fn ensure_vertex(&mut self, name: &str) -> usize {
        match self.index.get(name) {
            Some(&i) => i,
            None => self.add_vertex(name).expect("fresh vertex"),
        }
    }

    /// Adds an undirected edge. Loops are rejected; parallel edges collapse.
    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<(), GraphError> {
        let ui = self.index_of(u)?;
        let vi = self.index_of(v)?;
        if ui == vi {
            return Err(GraphError::LoopEdge(u.to_string()));
        }
        self.adj[ui].insert(vi);
        self.adj[vi].insert(ui);
        Ok(())
    }

    pub fn set_coord(&mut self, v: &str, coord: (i64, i64)) -> Result<(), GraphError> {
        self.index_of(v)?;
        self.coords
            .get_or_insert_with(BTreeMap::new)
            .insert(v.to_string(), coord);
        Ok(())
    }

    pub fn coords(&self) -> Option<&BTreeMap<String, (i64, i64)>> {
        self.coords.as_ref()
    }

    pub fn coord_of(&self, v: &str) -> Option<(i64, i64)> {
        self.coords.as_ref().and_then(|m| m.get(v).copied())
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn has_vertex(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn index_of(&self, name: &str) -> Result<usize, GraphError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn name_of(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    /// Vertex names in canonical (declared) order.
    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|s| s.as_str())
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in canonical order.
    pub fn edge_indices(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.adj.len() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edges as name pairs in canonical order.
    pub fn edges(&self) -> Vec<(String, String)> {
        self.edge_indices()
            .into_iter()
            .map(|(u, v)| (self.names[u].clone(), self.names[v].clone()))
            .collect()
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index.get(u), self.index.get(v)) {
            (Some(&ui), Some(&vi)) => self.adj[ui].contains(&vi),
            _ => false,
        }
    }

    pub fn degree(&self, v: &str) -> Result<usize, GraphError> {
        Ok(self.adj[self.index_of(v)?].len())
    }

    pub fn degree_of_index(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Neighbor indices of `v`, ascending (canonical order).
    pub fn neighbor_indices(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbors(&self, v: &str) -> Result<Vec<&str>, GraphError> {
        let vi = self.index_of(v)?;
        Ok(self.adj[vi]
            .iter()
            .map(|&u| self.names[u].as_str())
            .collect())
    }

    /// Connected components as lists of vertex indices; component order is by
    /// smallest contained vertex, vertices ascending within a component.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on the given vertices, keeping canonical order and
    /// any grid coordinates of the kept vertices.
    pub fn induced_subgraph<S: AsRef<str>>(&self, keep: &[S]) -> Result<Graph, GraphError> {
        let mut keep_idx = BTreeSet::new();
        for v in keep {
            keep_idx.insert(self.index_of(v.as_ref())?);
        }
        let mut g = Graph::new();
        for &i in &keep_idx {
            g.add_vertex(&self.names[i])?;
        }
        for &i in &keep_idx {
            for &j in &self.adj[i] {
                if i < j && keep_idx.contains(&j) {
                    g.add_edge(&self.names[i], &self.names[j])?;
                }
            }
        }
        if let Some(coords) = &self.coords {
            for &i in &keep_idx {
                if let Some(&c) = coords.get(&self.names[i]) {
                    g.set_coord(&self.names[i], c)?;
                }
            }
        }
        Ok(g)
    }

    /// Two-colors the graph. Returns `(B, W)` with `B` holding the canonically
    /// smallest vertex of every component, or `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<(Vec<String>, Vec<String>)> {
        let side = self.bipartition_sides()?;
        let mut b = Vec::new();
        let mut w = Vec::new();
        for (i, s) in side.iter().enumerate() {
            if *s == 0 {
                b.push(self.names[i].clone());
            } else {
                w.push(self.names[i].clone());
            }
        }
        Some((b, w))
    }

    /// Per-vertex side (0 = part of the component's smallest vertex).
    pub fn bipartition_sides(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition_sides().is_some()
    }

    pub fn contains_triangle(&self) -> bool {
        for (u, v) in self.edge_indices() {
            if self.adj[u].intersection(&self.adj[v]).next().is_some() {
                return true;
            }
        }
        false
    }

    /// Connected, all degrees 2: an elementary cycle. Returns its length.
    pub fn cycle_length(&self) -> Option<usize> {
        let n = self.vertex_count();
        if n < 3 || !self.is_connected() {
            return None;
        }
        if self.adj.iter().all(|s| s.len() == 2) {
            Some(n)
        } else {
            None
        }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        n >= 1 && self.adj.iter().all(|s| s.len() == n - 1)
    }

    /// Recognizes `K_{1,1,p}`: an edge `ab` completely joined to a stable set
    /// of size `p >= 1`. Returns `p`.
    pub fn k11p_parameter(&self) -> Option<usize> {
        let n = self.vertex_count();
        if n < 3 {
            return None;
        }
        let p = n - 2;
        let hubs: Vec<usize> = (0..n).filter(|&v| self.adj[v].len() == n - 1).collect();
        if hubs.len() != 2 {
            return None;
        }
        let ok = (0..n)
            .filter(|v| !hubs.contains(v))
            .all(|v| self.adj[v].len() == 2);
        if ok {
            Some(p)
        } else {
            None
        }
    }

    /// Recognizes a complete bipartite graph, returning ascending part sizes.
    pub fn complete_bipartite_parameters(&self) -> Option<(usize, usize)> {
        let side = self.bipartition_sides()?;
        if !self.is_connected() || self.vertex_count() < 2 {
            return None;
        }
        let p = side.iter().filter(|&&s| s == 0).count();
        let q = side.len() - p;
        let complete = (0..side.len()).all(|v| {
            let other = if side[v] == 0 { q } else { p };
            self.adj[v].len() == other
        });
        if complete {
            Some((p.min(q), p.max(q)))
        } else {
            None
        }
    }

    /// Removes `v` and contracts all its neighbors to a single vertex, which
    /// keeps the identifier and position of the canonically first neighbor.
    /// Parallel edges collapse, so the output is simple. Intended for the
    /// 2-choosability reduction on bipartite graphs, but defined for any
    /// input; an isolated `v` is simply deleted.
    pub fn merge_neighbors(&self, v: &str) -> Result<Graph, GraphError> {
        let vi = self.index_of(v)?;
        let nbrs: Vec<usize> = self.adj[vi].iter().copied().collect();
        let target = nbrs.first().copied();
        let mut g = Graph::new();
        for (i, name) in self.names.iter().enumerate() {
            if i == vi {
                continue;
            }
            if nbrs.contains(&i) && Some(i) != target {
                continue;
            }
            g.add_vertex(name)?;
        }
        let map = |i: usize| -> Option<&str> {
            if i == vi {
                None
            } else if nbrs.contains(&i) {
                target.map(|t| self.names[t].as_str())
            } else {
                Some(self.names[i].as_str())
            }
        };
        for (a, b) in self.edge_indices() {
            if let (Some(x), Some(y)) = (map(a), map(b)) {
                if x != y {
                    g.add_edge(x, y)?;
                }
            }
        }
        Ok(g)
    }
}
