//! Exact list-coloring search.
//!
//! Two entry points share one propagation engine. [`feasible`] decides
//! satisfiability branching on a minimum-remaining-values vertex (ties and
//! colors in canonical order). [`solve`] returns the canonical witness: the
//! lexicographically first solution in (vertex order, color order), found by
//! branching on the first uncolored vertex instead. Both run forced-singleton
//! propagation, which only ever makes assignments shared by every extension
//! of the current prefix, so the lexicographic guarantee survives it.

use crate::graph::Graph;

use super::{Coloring, ListAssignment, ListColorError};

struct Csp {
    adj: Vec<Vec<usize>>,
    domains: Vec<u32>,
}

fn build_csp(g: &Graph, l: &ListAssignment, pins: &[(&str, u8)]) -> Result<Csp, ListColorError> {
    let mut domains = l.to_masks(g)?;
    for &(v, c) in pins {
        let vi = g
            .index_of(v)
            .map_err(|_| ListColorError::UnknownVertex(v.to_string()))?;
        let bit = 1u32 << (c - 1);
        if c < 1 || c > l.palette || domains[vi] & bit == 0 {
            return Err(ListColorError::PinOutsideList {
                vertex: v.to_string(),
                color: c,
            });
        }
        domains[vi] = bit;
    }
    let adj = (0..g.vertex_count())
        .map(|v| g.neighbor_indices(v).collect())
        .collect();
    Ok(Csp { adj, domains })
}

/// Satisfiability on raw bitmask domains; the hot path of the exhaustive
/// deciders.
pub(crate) fn feasible_masks(adj: &[Vec<usize>], domains: &[u32]) -> bool {
    Search::new(adj, domains.to_vec()).run(false)
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    domains: Vec<u32>,
    fixed: Vec<bool>,
    trail: Vec<(usize, u32)>,
    fixed_trail: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<usize>], domains: Vec<u32>) -> Self {
        Search {
            fixed: vec![false; domains.len()],
            trail: Vec::new(),
            fixed_trail: Vec::new(),
            adj,
            domains,
        }
    }

    fn set_domain(&mut self, v: usize, dom: u32) {
        self.trail.push((v, self.domains[v]));
        self.domains[v] = dom;
    }

    /// Fixes every singleton reachable by unit propagation from `queue`.
    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        while let Some(v) = queue.pop() {
            if self.fixed[v] {
                continue;
            }
            self.fixed[v] = true;
            self.fixed_trail.push(v);
            let bit = self.domains[v];
            for i in 0..self.adj[v].len() {
                let w = self.adj[v][i];
                if self.fixed[w] {
                    if self.domains[w] == bit {
                        return false;
                    }
                    continue;
                }
                if self.domains[w] & bit != 0 {
                    let next = self.domains[w] & !bit;
                    if next == 0 {
                        return false;
                    }
                    self.set_domain(w, next);
                    if next.count_ones() == 1 {
                        queue.push(w);
                    }
                }
            }
        }
        true
    }

    fn marks(&self) -> (usize, usize) {
        (self.trail.len(), self.fixed_trail.len())
    }

    fn rollback(&mut self, marks: (usize, usize)) {
        while self.trail.len() > marks.0 {
            let (v, dom) = self.trail.pop().expect("trail");
            self.domains[v] = dom;
        }
        while self.fixed_trail.len() > marks.1 {
            let v = self.fixed_trail.pop().expect("fixed trail");
            self.fixed[v] = false;
        }
    }

    fn initial_queue(&self) -> Vec<usize> {
        (0..self.domains.len())
            .filter(|&v| self.domains[v].count_ones() == 1)
            .collect()
    }

    fn dfs(&mut self, lex: bool) -> bool {
        let pick = if lex {
            (0..self.domains.len()).find(|&v| !self.fixed[v])
        } else {
            (0..self.domains.len())
                .filter(|&v| !self.fixed[v])
                .min_by_key(|&v| (self.domains[v].count_ones(), v))
        };
        let v = match pick {
            None => return true,
            Some(v) => v,
        };
        let dom = self.domains[v];
        let mut rest = dom;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= !bit;
            let marks = self.marks();
            self.set_domain(v, bit);
            if self.propagate(vec![v]) && self.dfs(lex) {
                return true;
            }
            self.rollback(marks);
        }
        false
    }

    fn run(&mut self, lex: bool) -> bool {
        let queue = self.initial_queue();
        self.propagate(queue) && self.dfs(lex)
    }
}

/// Is there a proper list coloring extending `pins`?
pub fn feasible(
    g: &Graph,
    l: &ListAssignment,
    pins: &[(&str, u8)],
) -> Result<bool, ListColorError> {
    let csp = build_csp(g, l, pins)?;
    Ok(Search::new(&csp.adj, csp.domains.clone()).run(false))
}

/// The canonical solution extending `pins` (lexicographically first in
/// vertex order, then color order), or `None` if infeasible.
pub fn solve(
    g: &Graph,
    l: &ListAssignment,
    pins: &[(&str, u8)],
) -> Result<Option<Coloring>, ListColorError> {
    let csp = build_csp(g, l, pins)?;
    let mut s = Search::new(&csp.adj, csp.domains.clone());
    if !s.run(true) {
        return Ok(None);
    }
    let mut coloring = Coloring::new();
    for (i, v) in g.vertices().enumerate() {
        debug_assert_eq!(s.domains[i].count_ones(), 1);
        coloring.set(v, s.domains[i].trailing_zeros() as u8 + 1);
    }
    Ok(Some(coloring))
}

/// Exact number of proper list colorings extending `pins`.
/// Intended for desk scale (roughly |V| <= 20).
pub fn count_colorings(
    g: &Graph,
    l: &ListAssignment,
    pins: &[(&str, u8)],
) -> Result<u64, ListColorError> {
    let csp = build_csp(g, l, pins)?;
    let mut count = 0u64;
    enumerate_rec(&csp, &mut vec![0u32; csp.domains.len()], 0, &mut |_| {
        count += 1
    });
    Ok(count)
}

/// Every proper list coloring extending `pins`, in canonical order.
pub fn colorings(
    g: &Graph,
    l: &ListAssignment,
    pins: &[(&str, u8)],
) -> Result<Vec<Coloring>, ListColorError> {
    let csp = build_csp(g, l, pins)?;
    let mut out = Vec::new();
    enumerate_rec(&csp, &mut vec![0u32; csp.domains.len()], 0, &mut |bits| {
        let mut coloring = Coloring::new();
        for (i, v) in g.vertices().enumerate() {
            coloring.set(v, bits[i].trailing_zeros() as u8 + 1);
        }
        out.push(coloring);
    });
    Ok(out)
}

/// The set of colors `v` can take in some solution extending `pins`.
pub fn feasible_colors(
    g: &Graph,
    l: &ListAssignment,
    pins: &[(&str, u8)],
    v: &str,
) -> Result<Vec<u8>, ListColorError> {
    let list = l
        .get(v)
        .ok_or_else(|| ListColorError::MissingList(v.to_string()))?
        .clone();
    let mut out = Vec::new();
    for c in list {
        let mut all: Vec<(&str, u8)> = pins.to_vec();
        all.push((v, c));
        if feasible(g, l, &all)? {
            out.push(c);
        }
    }
    Ok(out)
}

fn enumerate_rec(csp: &Csp, chosen: &mut Vec<u32>, v: usize, visit: &mut impl FnMut(&[u32])) {
    if v == csp.domains.len() {
        visit(chosen);
        return;
    }
    let mut avail = csp.domains[v];
    for &w in &csp.adj[v] {
        if w < v {
            avail &= !chosen[w];
        }
    }
    let mut rest = avail;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest &= !bit;
        chosen[v] = bit;
        enumerate_rec(csp, chosen, v + 1, visit);
    }
    chosen[v] = 0;
}
