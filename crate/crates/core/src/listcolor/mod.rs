//! List assignments, size functions, colorings, and the list-coloring
//! algorithms: the exact solver, the greedy orientation colorer, the
//! bipartite `[3,4]` colorer, block-tree propagation, and the polynomial
//! algorithm for hypergraph-reduction instances.
//!
//! Colors are integers `1..=k` throughout; constructions whose source
//! material counts from 0 are shifted by +1 at the interface.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

mod block_coloring;
mod greedy;
mod reduction;
mod solve;

pub use block_coloring::{auto_strategy, color_via_blocks, BlockContext, BlockStrategy};
pub use greedy::{color_bipartite_34, greedy_order_color};
pub use reduction::color_reduction_class;
pub(crate) use solve::feasible_masks;
pub use solve::{colorings, count_colorings, feasible, feasible_colors, solve};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ListColorError {
    #[error("vertex {0:?} has no list")]
    MissingList(String),
    #[error("vertex {0:?} has an empty list")]
    EmptyList(String),
    #[error("color {color} at {vertex:?} outside palette 1..={palette}")]
    ColorOutsidePalette {
        vertex: String,
        color: u8,
        palette: u8,
    },
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("pin color {color} not in the list of {vertex:?}")]
    PinOutsideList { vertex: String, color: u8 },
    #[error("vertex {vertex:?} has list size {got}, expected {expected}")]
    WrongListSize {
        vertex: String,
        expected: usize,
        got: usize,
    },
    #[error("palette is {got}, expected {expected}")]
    PaletteMismatch { expected: u8, got: u8 },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error(
        "greedy precondition violated at {vertex:?}: list size {size} < indegree {indegree} + 1"
    )]
    GreedyPrecondition {
        vertex: String,
        size: usize,
        indegree: usize,
    },
    #[error("order is not a permutation of the vertices (problem near {0:?})")]
    BadOrder(String),
    #[error("malformed instance: {0}")]
    MalformedInstance(String),
}

/// Per-vertex color sets drawn from the palette `{1..k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    pub palette: u8,
    pub lists: BTreeMap<String, BTreeSet<u8>>,
}

impl ListAssignment {
    pub fn new(palette: u8) -> Self {
        ListAssignment {
            palette,
            lists: BTreeMap::new(),
        }
    }

    pub fn set<I: IntoIterator<Item = u8>>(&mut self, v: &str, colors: I) -> &mut Self {
        self.lists
            .insert(v.to_string(), colors.into_iter().collect());
        self
    }

    pub fn get(&self, v: &str) -> Option<&BTreeSet<u8>> {
        self.lists.get(v)
    }

    /// Uniform assignment: every vertex of `g` gets `colors`.
    pub fn uniform<I: IntoIterator<Item = u8> + Clone>(g: &Graph, palette: u8, colors: I) -> Self {
        let mut l = ListAssignment::new(palette);
        for v in g.vertices() {
            l.set(v, colors.clone());
        }
        l
    }

    /// Checks coverage of `g` and color bounds.
    pub fn validate(&self, g: &Graph) -> Result<(), ListColorError> {
        for v in g.vertices() {
            let list = self
                .lists
                .get(v)
                .ok_or_else(|| ListColorError::MissingList(v.to_string()))?;
            if list.is_empty() {
                return Err(ListColorError::EmptyList(v.to_string()));
            }
            for &c in list {
                if c < 1 || c > self.palette {
                    return Err(ListColorError::ColorOutsidePalette {
                        vertex: v.to_string(),
                        color: c,
                        palette: self.palette,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn restrict<S: AsRef<str>>(&self, vertices: &[S]) -> ListAssignment {
        let mut l = ListAssignment::new(self.palette);
        for v in vertices {
            if let Some(list) = self.lists.get(v.as_ref()) {
                l.lists.insert(v.as_ref().to_string(), list.clone());
            }
        }
        l
    }

    /// Lists as bitmasks (bit `c-1` for color `c`), in `g`'s canonical order.
    pub fn to_masks(&self, g: &Graph) -> Result<Vec<u32>, ListColorError> {
        self.validate(g)?;
        Ok(g.vertices()
            .map(|v| self.lists[v].iter().fold(0u32, |m, &c| m | 1 << (c - 1)))
            .collect())
    }

    pub fn from_masks(g: &Graph, palette: u8, masks: &[u32]) -> ListAssignment {
        let mut l = ListAssignment::new(palette);
        for (i, v) in g.vertices().enumerate() {
            let colors: Vec<u8> = (1..=palette)
                .filter(|&c| masks[i] >> (c - 1) & 1 == 1)
                .collect();
            l.set(v, colors);
        }
        l
    }
}

/// Required list size per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeFunction {
    pub sizes: BTreeMap<String, u8>,
}

impl SizeFunction {
    pub fn uniform(g: &Graph, size: u8) -> Self {
        SizeFunction {
            sizes: g.vertices().map(|v| (v.to_string(), size)).collect(),
        }
    }

    pub fn new() -> Self {
        SizeFunction {
            sizes: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, v: &str, size: u8) -> &mut Self {
        self.sizes.insert(v.to_string(), size);
        self
    }

    pub fn get(&self, v: &str) -> Option<u8> {
        self.sizes.get(v).copied()
    }

    /// Bumps `f(v)` by one, leaving the rest unchanged.
    pub fn bumped(&self, v: &str) -> SizeFunction {
        let mut s = self.clone();
        if let Some(x) = s.sizes.get_mut(v) {
            *x += 1;
        }
        s
    }
}

impl Default for SizeFunction {
    fn default() -> Self {
        Self::new()
    }
}

/// A (partial or total) proper coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: BTreeMap<String, u8>,
}

impl Coloring {
    pub fn new() -> Self {
        Coloring {
            colors: BTreeMap::new(),
        }
    }

    pub fn get(&self, v: &str) -> Option<u8> {
        self.colors.get(v).copied()
    }

    pub fn set(&mut self, v: &str, c: u8) -> &mut Self {
        self.colors.insert(v.to_string(), c);
        self
    }

    /// Proper and within lists.
    pub fn is_valid_for(&self, g: &Graph, l: &ListAssignment) -> bool {
        for v in g.vertices() {
            match self.colors.get(v) {
                None => return false,
                Some(c) => match l.get(v) {
                    None => return false,
                    Some(list) if !list.contains(c) => return false,
                    _ => {}
                },
            }
        }
        g.edges()
            .iter()
            .all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

impl Default for Coloring {
    fn default() -> Self {
        Self::new()
    }
}
