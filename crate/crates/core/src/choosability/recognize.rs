//! Polynomial recognizers.
//!
//! 2-choosability and `[2,3]`-choosability reduce to classifying the core of
//! each component: the admissible cores are K1, even cycles and
//! theta_{2,2,2m}; for `[2,3]` additionally K_{2,m} with m >= 4.
//!
//! `decide_23_3_ch_bipartite` settles `[{2,3},3]`-choosability of a bipartite
//! graph given the set of 2-list vertices: up to five such vertices (or at
//! most two on one side) always color; for six of them the induced subgraph
//! H decides — a vertex of degree <= 1 in H colors, a six-cycle needs the
//! (constant-size) enumeration, anything denser contains a chocolate as a
//! partial subgraph and refutes choosability.

use std::collections::BTreeSet;

use crate::graph::{
    build_named, classify_core_component, compute_core, CoreClass, Graph, NamedGraph,
};
use crate::listcolor::SizeFunction;

use super::{is_fk_choosable, ChooseError, ChooseOptions};

/// Verdict of the `[{2,3},3]` decision procedure. The structural branches
/// answer directly; the six-cycle case and the >6 fallback report the
/// verdict of the constant-size enumeration they performed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict23 {
    Choosable,
    NotChoosable,
    ResolvedByEnumeration(bool),
}

impl Verdict23 {
    pub fn choosable(self) -> bool {
        match self {
            Verdict23::Choosable => true,
            Verdict23::NotChoosable => false,
            Verdict23::ResolvedByEnumeration(b) => b,
        }
    }
}

fn core_classes(g: &Graph) -> Vec<CoreClass> {
    g.components()
        .into_iter()
        .map(|comp| {
            let names: Vec<&str> = comp.iter().map(|&i| g.name_of(i)).collect();
            let sub = g.induced_subgraph(&names).expect("component vertices");
            let core = compute_core(&sub).core;
            classify_core_component(&core).expect("a core is classifiable")
        })
        .collect()
}

/// A connected graph is 2-choosable iff its core is K1, an even cycle or a
/// theta_{2,2,2m}; a disconnected graph iff every component is.
pub fn recognize_2_choosable(g: &Graph) -> bool {
    core_classes(g).into_iter().all(|c| {
        matches!(
            c,
            CoreClass::K1 | CoreClass::EvenCycle(_) | CoreClass::Theta222m(_)
        )
    })
}

/// `[2,3]`-choosability additionally admits the cores K_{2,m}, m >= 4.
pub fn recognize_23_choosable(g: &Graph) -> bool {
    core_classes(g).into_iter().all(|c| {
        matches!(
            c,
            CoreClass::K1 | CoreClass::EvenCycle(_) | CoreClass::Theta222m(_)
        ) || matches!(c, CoreClass::K2m(m) if m >= 4)
    })
}

/// Does `h` (six vertices) contain the 2x3 grid as a partial subgraph?
/// Brute force over vertex bijections; constant work.
fn contains_chocolate_partial(h: &Graph) -> bool {
    debug_assert_eq!(h.vertex_count(), 6);
    let chocolate = build_named(&NamedGraph::Chocolate).expect("chocolate");
    let choc_edges: Vec<(usize, usize)> = chocolate.edge_indices();
    let verts: Vec<usize> = (0..6).collect();
    let mut perm = verts.clone();
    permute_check(h, &choc_edges, &mut perm, 0)
}

fn permute_check(h: &Graph, pattern: &[(usize, usize)], perm: &mut Vec<usize>, i: usize) -> bool {
    if i == perm.len() {
        return pattern
            .iter()
            .all(|&(a, b)| h.has_edge(h.name_of(perm[a]), h.name_of(perm[b])));
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        if permute_check(h, pattern, perm, i + 1) {
            perm.swap(i, j);
            return true;
        }
        perm.swap(i, j);
    }
    false
}

/// Decides whether a bipartite graph with 2-lists exactly on
/// `two_list_vertices` (3-lists elsewhere) is `[f,3]`-choosable.
pub fn decide_23_3_ch_bipartite(
    g: &Graph,
    two_list_vertices: &[String],
    opts: &ChooseOptions,
) -> Result<Verdict23, ChooseError> {
    let sides = g.bipartition_sides().ok_or(ChooseError::NotBipartite)?;
    let mut seen = BTreeSet::new();
    for v in two_list_vertices {
        g.index_of(v)
            .map_err(|_| ChooseError::UnknownVertex(v.clone()))?;
        if !seen.insert(v.clone()) {
            return Err(ChooseError::BadCriticalSubset(format!(
                "duplicate vertex {v:?}"
            )));
        }
    }

    let n2 = two_list_vertices.len();
    if n2 <= 5 {
        return Ok(Verdict23::Choosable);
    }
    if n2 > 6 {
        return exhaust(g, two_list_vertices, opts);
    }

    let on_b = two_list_vertices
        .iter()
        .filter(|v| sides[g.index_of(v).expect("checked")] == 0)
        .count();
    if on_b.min(n2 - on_b) <= 2 {
        // one side has at most two 2-lists: a single common color colors it
        return Ok(Verdict23::Choosable);
    }

    let h = g.induced_subgraph(two_list_vertices).expect("checked");
    if h.cycle_length() == Some(6) {
        return exhaust(g, two_list_vertices, opts);
    }
    let min_degree = h
        .vertices()
        .map(|v| h.degree(v).expect("vertex"))
        .min()
        .expect("six vertices");
    if min_degree <= 1 {
        return Ok(Verdict23::Choosable);
    }
    // min degree >= 2 on 3+3 bipartite, not a six-cycle: a chocolate sits
    // inside H as a partial subgraph and its lists refute choosability
    if contains_chocolate_partial(&h) {
        return Ok(Verdict23::NotChoosable);
    }
    exhaust(g, two_list_vertices, opts)
}

fn exhaust(
    g: &Graph,
    two_list_vertices: &[String],
    opts: &ChooseOptions,
) -> Result<Verdict23, ChooseError> {
    let set: BTreeSet<&String> = two_list_vertices.iter().collect();
    let mut f = SizeFunction::new();
    for v in g.vertices() {
        f.set(v, if set.contains(&v.to_string()) { 2 } else { 3 });
    }
    let verdict = is_fk_choosable(g, &f, 3, opts)?;
    Ok(Verdict23::ResolvedByEnumeration(verdict.choosable))
}
