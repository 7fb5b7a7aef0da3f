//! The hypergraph 2-colorability (set splitting) reduction: a graph whose
//! choosability, at the prescribed list sizes, is equivalent to the
//! 2-colorability of the hypergraph — and whose list coloring stays
//! polynomial.
//!
//! Colors 0..m of the source construction are shifted to 1..=m+1 here.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::Graph;
use crate::listcolor::{Coloring, ListAssignment, SizeFunction};

use super::{GadgetError, GadgetWithRoles};

/// The built instance, keeping the originating hypergraph for the
/// derived list systems and the 2-colorability oracle.
#[derive(Debug, Clone)]
pub struct HypergraphReduction {
    pub gadget: GadgetWithRoles,
    pub x: Vec<String>,
    pub hyperedges: Vec<Vec<String>>,
    pub m: usize,
}

/// Builds the reduction graph for hyperedges of size at most 3:
/// a clique `v0_0..v0_m`, a clique `vF_1..vF_m` (one vertex per hyperedge)
/// joined to `v0_0`, stable element vertices `vX_*` joined to their
/// hyperedges' clause vertices, and one stable vertex `vS_s_t` per color
/// pair except {1,2}, all joined to `v0_2..v0_m`. List sizes: m-1 on VS,
/// m on VX, m+1 elsewhere; palette m+1.
pub fn hypergraph_reduction(
    x: &[String],
    hyperedges: &[Vec<String>],
) -> Result<HypergraphReduction, GadgetError> {
    let m = hyperedges.len();
    if m < 2 {
        return Err(GadgetError::BadHypergraph(format!(
            "need at least 2 hyperedges (degenerate lists otherwise), got {m}"
        )));
    }
    if x.is_empty() {
        return Err(GadgetError::BadHypergraph("empty vertex set".into()));
    }
    let xset: BTreeSet<&String> = x.iter().collect();
    if xset.len() != x.len() {
        return Err(GadgetError::BadHypergraph("duplicate vertices in X".into()));
    }
    for (i, f) in hyperedges.iter().enumerate() {
        if f.is_empty() || f.len() > 3 {
            return Err(GadgetError::BadHypergraph(format!(
                "hyperedge {} has size {}, need 1..=3",
                i + 1,
                f.len()
            )));
        }
        let fset: BTreeSet<&String> = f.iter().collect();
        if fset.len() != f.len() {
            return Err(GadgetError::BadHypergraph(format!(
                "hyperedge {} repeats a vertex",
                i + 1
            )));
        }
        for v in f {
            if !xset.contains(v) {
                return Err(GadgetError::BadHypergraph(format!(
                    "hyperedge vertex {v:?} not in X"
                )));
            }
        }
    }

    let k = (m + 1) as u8;
    let v0: Vec<String> = (0..=m).map(|i| format!("v0_{i}")).collect();
    let vf: Vec<String> = (1..=m).map(|i| format!("vF_{i}")).collect();
    let vx: Vec<String> = x.iter().map(|v| format!("vX_{v}")).collect();
    let mut vs = Vec::new();
    for s in 1..=k {
        for t in (s + 1)..=k {
            if (s, t) == (1, 2) {
                continue;
            }
            vs.push(format!("vS_{s}_{t}"));
        }
    }

    let mut graph = Graph::new();
    for v in v0.iter().chain(vf.iter()).chain(vx.iter()).chain(vs.iter()) {
        graph.add_vertex(v)?;
    }
    for (i, u) in v0.iter().enumerate() {
        for w in &v0[i + 1..] {
            graph.add_edge(u, w)?;
        }
    }
    for (i, u) in vf.iter().enumerate() {
        for w in &vf[i + 1..] {
            graph.add_edge(u, w)?;
        }
    }
    for f in &vf {
        graph.add_edge(&v0[0], f)?;
    }
    for hub in &v0[2..] {
        for t in vx.iter().chain(vs.iter()) {
            graph.add_edge(hub, t)?;
        }
    }
    for (i, f) in hyperedges.iter().enumerate() {
        for member in f {
            graph.add_edge(&vf[i], &format!("vX_{member}"))?;
        }
    }

    let mut sizes = SizeFunction::new();
    for v in v0.iter().chain(vf.iter()) {
        sizes.set(v, k);
    }
    for v in &vx {
        sizes.set(v, m as u8);
    }
    for v in &vs {
        sizes.set(v, m as u8 - 1);
    }

    let mut gadget = GadgetWithRoles {
        graph,
        roles: BTreeMap::new(),
        sizes,
        canonical_assignment: None,
        palette: k,
    };
    gadget.roles.insert("V0".to_string(), v0);
    gadget.roles.insert("VF".to_string(), vf);
    gadget.roles.insert("VX".to_string(), vx);
    gadget.roles.insert("VS".to_string(), vs);
    Ok(HypergraphReduction {
        gadget,
        x: x.to_vec(),
        hyperedges: hyperedges.to_vec(),
        m,
    })
}

impl HypergraphReduction {
    fn palette(&self) -> u8 {
        (self.m + 1) as u8
    }

    /// The proper (m+1)-coloring showing chi = m+1: `v0_i` takes color i+1,
    /// the i-th clause vertex i+1, elements and pair vertices color 1.
    pub fn canonical_coloring(&self) -> Coloring {
        let mut c = Coloring::new();
        for (i, v) in self.gadget.role_set("V0").expect("V0").iter().enumerate() {
            c.set(v, i as u8 + 1);
        }
        for (i, v) in self.gadget.role_set("VF").expect("VF").iter().enumerate() {
            c.set(v, i as u8 + 2);
        }
        for v in self.gadget.role_set("VX").expect("VX") {
            c.set(v, 1);
        }
        for v in self.gadget.role_set("VS").expect("VS") {
            c.set(v, 1);
        }
        c
    }

    /// The infeasible list system derived from a proper 2-coloring of the
    /// hypergraph (colors 1 and 2): element vertices keep their own color
    /// plus `{3..m+1}`, each pair vertex drops its own pair, everything else
    /// gets the full palette.
    pub fn infeasible_from_2coloring(
        &self,
        coloring: &BTreeMap<String, u8>,
    ) -> Result<ListAssignment, GadgetError> {
        for v in &self.x {
            match coloring.get(v) {
                Some(1) | Some(2) => {}
                other => {
                    return Err(GadgetError::BadTwoColoring(format!(
                        "vertex {v:?} has color {other:?}, need 1 or 2"
                    )))
                }
            }
        }
        for (i, f) in self.hyperedges.iter().enumerate() {
            let colors: BTreeSet<u8> = f.iter().map(|v| coloring[v]).collect();
            if colors.len() < 2 {
                return Err(GadgetError::BadTwoColoring(format!(
                    "hyperedge {} is monochromatic",
                    i + 1
                )));
            }
        }
        let k = self.palette();
        let mut l = ListAssignment::new(k);
        let full: Vec<u8> = (1..=k).collect();
        for v in self
            .gadget
            .role_set("V0")
            .expect("V0")
            .iter()
            .chain(self.gadget.role_set("VF").expect("VF"))
        {
            l.set(v, full.clone());
        }
        for (x, v) in self.x.iter().zip(self.gadget.role_set("VX").expect("VX")) {
            let mut colors = vec![coloring[x]];
            colors.extend(3..=k);
            l.set(v, colors);
        }
        let mut pair_iter = Vec::new();
        for s in 1..=k {
            for t in (s + 1)..=k {
                if (s, t) != (1, 2) {
                    pair_iter.push((s, t));
                }
            }
        }
        for ((s, t), v) in pair_iter
            .iter()
            .zip(self.gadget.role_set("VS").expect("VS"))
        {
            let colors: Vec<u8> = (1..=k).filter(|c| c != s && c != t).collect();
            l.set(v, colors);
        }
        Ok(l)
    }

    /// All proper 2-colorings (colors 1/2), by brute force. Desk scale only.
    pub fn two_colorings(&self) -> Vec<BTreeMap<String, u8>> {
        assert!(self.x.len() <= 20, "brute-force 2-coloring is desk scale");
        let mut out = Vec::new();
        for bits in 0u32..(1 << self.x.len()) {
            let coloring: BTreeMap<String, u8> = self
                .x
                .iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), (bits >> i & 1) as u8 + 1))
                .collect();
            let ok = self.hyperedges.iter().all(|f| {
                let colors: BTreeSet<u8> = f.iter().map(|v| coloring[v]).collect();
                colors.len() >= 2
            });
            if ok {
                out.push(coloring);
            }
        }
        out
    }

    pub fn is_two_colorable(&self) -> bool {
        !self.two_colorings().is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::listcolor::solve;

    fn small_instance() -> HypergraphReduction {
        let x: Vec<String> = ["x1", "x2", "x3"].iter().map(|s| s.to_string()).collect();
        let f = vec![
            vec!["x1".to_string(), "x2".to_string()],
            vec!["x2".to_string(), "x3".to_string()],
        ];
        hypergraph_reduction(&x, &f).unwrap()
    }

    #[test]
    fn shape_and_canonical_coloring() {
        let red = small_instance();
        let g = &red.gadget.graph;
        // m = 2: 3 + 2 + 3 + (C(3,2) - 1 = 2) vertices
        assert_eq!(g.vertex_count(), 10);
        let c = red.canonical_coloring();
        for (u, v) in g.edges() {
            assert_ne!(c.get(&u), c.get(&v));
        }
        // chi = m + 1: the clique v0 forces it, the coloring attains it
        assert!(c.colors.values().all(|&x| x <= 3));
    }

    #[test]
    fn derived_list_system_is_infeasible() {
        let red = small_instance();
        let coloring: BTreeMap<String, u8> = [("x1", 1u8), ("x2", 2), ("x3", 1)]
            .iter()
            .map(|(v, c)| (v.to_string(), *c))
            .collect();
        let l = red.infeasible_from_2coloring(&coloring).unwrap();
        assert_eq!(solve(&red.gadget.graph, &l, &[]).unwrap(), None);
    }

    #[test]
    fn rejects_bad_2colorings() {
        let red = small_instance();
        let mono: BTreeMap<String, u8> = [("x1", 1u8), ("x2", 1), ("x3", 1)]
            .iter()
            .map(|(v, c)| (v.to_string(), *c))
            .collect();
        assert!(matches!(
            red.infeasible_from_2coloring(&mono),
            Err(GadgetError::BadTwoColoring(_))
        ));
    }

    #[test]
    fn rejects_degenerate_hypergraphs() {
        let x: Vec<String> = vec!["x1".to_string()];
        assert!(hypergraph_reduction(&x, &[vec!["x1".to_string()]]).is_err());
        let big = vec![vec!["x1".to_string(); 4]];
        assert!(hypergraph_reduction(&x, &big).is_err());
    }

    #[test]
    fn two_colorability_oracle() {
        let red = small_instance();
        assert!(red.is_two_colorable());
        // the "triangle" hypergraph is not 2-colorable with singleton edges
        let x: Vec<String> = ["x1", "x2"].iter().map(|s| s.to_string()).collect();
        let f = vec![vec!["x1".to_string()], vec!["x2".to_string()]];
        let red = hypergraph_reduction(&x, &f).unwrap();
        assert!(!red.is_two_colorable());
    }
}
