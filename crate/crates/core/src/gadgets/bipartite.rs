//! The complete-bipartite critical gadget, the gadget-composition operation
//! behind the hardness lifts, and the bipartite reduction to uniform list
//! sizes.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::listcolor::{ListAssignment, SizeFunction};

use super::{fresh_prefix, GadgetError, GadgetWithRoles};

fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out = 1u64;
    for i in 0..k as u64 {
        out = out * (n as u64 - i) / (i + 1);
    }
    out
}

fn subsets_lex(universe: u8, size: u8) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(universe: u8, size: u8, start: u8, current: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if current.len() == size as usize {
            out.push(current.clone());
            return;
        }
        for c in start..=universe {
            current.push(c);
            rec(universe, size, c + 1, current, out);
            current.pop();
        }
    }
    rec(universe, size, 1, &mut current, &mut out);
    out
}

/// `K_{C(2l-2,l), C(2l-2,l-1)}` with l-lists on B and (l-1)-lists on W over
/// palette `2l-1`. The canonical assignment puts every l-subset of
/// `{1..2l-2}` on B and every (l-1)-subset on W, which is infeasible; the
/// gadget is `([(l,l-1), 2l-1], W)`-critical.
pub fn bipartite_critical_gadget(l: u8) -> Result<GadgetWithRoles, GadgetError> {
    if l < 2 {
        return Err(GadgetError::BadParameters(format!("need l >= 2, got {l}")));
    }
    let b_count = binomial(2 * l as u32 - 2, l as u32);
    let w_count = binomial(2 * l as u32 - 2, l as u32 - 1);
    let mut graph = Graph::new();
    let b_names: Vec<String> = (1..=b_count).map(|i| format!("b{i}")).collect();
    let w_names: Vec<String> = (1..=w_count).map(|i| format!("w{i}")).collect();
    for v in b_names.iter().chain(w_names.iter()) {
        graph.add_vertex(v)?;
    }
    for b in &b_names {
        for w in &w_names {
            graph.add_edge(b, w)?;
        }
    }

    let mut sizes = SizeFunction::new();
    for b in &b_names {
        sizes.set(b, l);
    }
    for w in &w_names {
        sizes.set(w, l - 1);
    }

    let mut canonical = ListAssignment::new(2 * l - 1);
    for (b, subset) in b_names.iter().zip(subsets_lex(2 * l - 2, l)) {
        canonical.set(b, subset);
    }
    for (w, subset) in w_names.iter().zip(subsets_lex(2 * l - 2, l - 1)) {
        canonical.set(w, subset);
    }

    let mut gadget = GadgetWithRoles {
        graph,
        roles: BTreeMap::new(),
        sizes,
        canonical_assignment: Some(canonical),
        palette: 2 * l - 1,
    };
    gadget.roles.insert("B".to_string(), b_names.clone());
    gadget.roles.insert("W".to_string(), w_names.clone());
    gadget.roles.insert("S".to_string(), w_names);
    Ok(gadget)
}

/// Disjoint union of `g` and the gadget, plus a star joining the gadget's S
/// role to `v0`. The new size function adds one to `f` at `v0` and to the
/// gadget's sizes on S. Gadget vertex names are prefixed to stay fresh.
pub fn compose_ff(
    g: &Graph,
    f: &SizeFunction,
    v0: &str,
    h: &GadgetWithRoles,
    k: u8,
) -> Result<(Graph, SizeFunction), GadgetError> {
    g.index_of(v0)?;
    let fv0 = f
        .get(v0)
        .ok_or_else(|| GadgetError::BadParameters(format!("f({v0:?}) missing")))?;
    if fv0 >= k {
        return Err(GadgetError::BadParameters(format!(
            "f({v0:?}) = {fv0} cannot grow within palette {k}"
        )));
    }
    let s_role = h
        .role_set("S")
        .ok_or_else(|| GadgetError::BadParameters("gadget lacks an S role".into()))?
        .to_vec();

    let prefix = fresh_prefix(g, &h.graph);
    let mut graph = g.clone();
    super::copy_renamed(&mut graph, &h.graph, |v| format!("{prefix}{v}"))?;
    for s in &s_role {
        graph.add_edge(&format!("{prefix}{s}"), v0)?;
    }

    let mut sizes = SizeFunction::new();
    for v in g.vertices() {
        let base = f
            .get(v)
            .ok_or_else(|| GadgetError::BadParameters(format!("f({v:?}) missing")))?;
        sizes.set(v, if v == v0 { base + 1 } else { base });
    }
    for v in h.graph.vertices() {
        let base = h
            .sizes
            .get(v)
            .ok_or_else(|| GadgetError::BadParameters(format!("gadget size for {v:?} missing")))?;
        let bumped = s_role.iter().any(|s| s == v);
        sizes.set(
            &format!("{prefix}{v}"),
            if bumped { base + 1 } else { base },
        );
    }
    Ok((graph, sizes))
}

/// Lifts a bipartite `{2,3}`-sized instance to uniform size `l` (palette
/// `2l-1`) by attaching `l - f(v)` critical gadgets to every vertex.
pub fn bipartite_ch_reduction(
    g: &Graph,
    f: &SizeFunction,
    l: u8,
) -> Result<(Graph, SizeFunction), GadgetError> {
    if l < 3 {
        return Err(GadgetError::BadParameters(format!("need l >= 3, got {l}")));
    }
    if !g.is_bipartite() {
        return Err(GadgetError::NotBipartite);
    }
    let k = 2 * l - 1;
    for v in g.vertices() {
        match f.get(v) {
            Some(2) | Some(3) => {}
            other => {
                return Err(GadgetError::BadParameters(format!(
                    "f({v:?}) = {other:?}, need 2 or 3"
                )))
            }
        }
    }
    let h = bipartite_critical_gadget(l)?;
    let mut graph = g.clone();
    let mut sizes = f.clone();
    for v in g.vertices() {
        let reps = l - f.get(v).expect("validated");
        for _ in 0..reps {
            let (next_graph, next_sizes) = compose_ff(&graph, &sizes, v, &h, k)?;
            graph = next_graph;
            sizes = next_sizes;
        }
    }
    debug_assert!(graph.vertices().all(|v| sizes.get(v) == Some(l)));
    Ok((graph, sizes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedGraph};
    use crate::listcolor::solve;

    #[test]
    fn l2_is_k12() {
        let gadget = bipartite_critical_gadget(2).unwrap();
        assert_eq!(gadget.graph.vertex_count(), 3);
        assert_eq!(gadget.graph.edge_count(), 2);
        let canonical = gadget.canonical_assignment.as_ref().unwrap();
        assert_eq!(
            canonical
                .get("b1")
                .unwrap()
                .iter()
                .copied()
                .collect::<Vec<_>>(),
            vec![1, 2]
        );
        assert_eq!(
            canonical
                .get("w1")
                .unwrap()
                .iter()
                .copied()
                .collect::<Vec<_>>(),
            vec![1]
        );
        assert_eq!(
            canonical
                .get("w2")
                .unwrap()
                .iter()
                .copied()
                .collect::<Vec<_>>(),
            vec![2]
        );
        assert_eq!(solve(&gadget.graph, canonical, &[]).unwrap(), None);
    }

    #[test]
    fn l3_is_k46_and_infeasible() {
        let gadget = bipartite_critical_gadget(3).unwrap();
        assert_eq!(gadget.graph.complete_bipartite_parameters(), Some((4, 6)));
        assert_eq!(gadget.palette, 5);
        let canonical = gadget.canonical_assignment.as_ref().unwrap();
        assert_eq!(solve(&gadget.graph, canonical, &[]).unwrap(), None);
    }

    #[test]
    fn compose_example() {
        // base K1 with f = 1, gadget K_{1,2}, palette 3
        let g = build_named(&NamedGraph::Path(1)).unwrap();
        let mut f = SizeFunction::new();
        f.set("v1", 1);
        let h = bipartite_critical_gadget(2).unwrap();
        let (composed, sizes) = compose_ff(&g, &f, "v1", &h, 3).unwrap();
        assert_eq!(composed.vertex_count(), 4);
        assert_eq!(sizes.get("v1"), Some(2));
        assert_eq!(sizes.get("H1#b1"), Some(2));
        assert_eq!(sizes.get("H1#w1"), Some(2));
        // restriction to the base graph is the base graph
        let restricted = composed.induced_subgraph(&["v1"]).unwrap();
        assert_eq!(restricted.vertex_count(), 1);
        assert_eq!(restricted.edge_count(), 0);
    }

    #[test]
    fn compose_rejects_full_size() {
        let g = build_named(&NamedGraph::Path(1)).unwrap();
        let mut f = SizeFunction::new();
        f.set("v1", 3);
        let h = bipartite_critical_gadget(2).unwrap();
        assert!(compose_ff(&g, &f, "v1", &h, 3).is_err());
    }

    #[test]
    fn reduction_is_bipartite_and_uniform() {
        let g = build_named(&NamedGraph::Path(2)).unwrap();
        let mut f = SizeFunction::new();
        f.set("v1", 2).set("v2", 3);
        let (lifted, sizes) = bipartite_ch_reduction(&g, &f, 3).unwrap();
        assert!(lifted.is_bipartite());
        assert_eq!(lifted.vertex_count(), 2 + 10);
        assert!(lifted.vertices().all(|v| sizes.get(v) == Some(3)));
    }

    #[test]
    fn reduction_single_vertex_attaches_one_k46() {
        let g = build_named(&NamedGraph::Path(1)).unwrap();
        let mut f = SizeFunction::new();
        f.set("v1", 2);
        let (lifted, sizes) = bipartite_ch_reduction(&g, &f, 3).unwrap();
        assert_eq!(lifted.vertex_count(), 1 + 10);
        assert_eq!(sizes.get("v1"), Some(3));
        assert_eq!(lifted.degree("v1").unwrap(), 6); // the whole W side
    }

    #[test]
    fn reduction_rejects_bad_inputs() {
        let c5 = build_named(&NamedGraph::Cycle(5)).unwrap();
        let f = SizeFunction::uniform(&c5, 2);
        assert!(matches!(
            bipartite_ch_reduction(&c5, &f, 3),
            Err(GadgetError::NotBipartite)
        ));
        let g = build_named(&NamedGraph::Path(2)).unwrap();
        let f = SizeFunction::uniform(&g, 1);
        assert!(bipartite_ch_reduction(&g, &f, 3).is_err());
    }

    #[test]
    fn repeated_composition_prefixes_stay_fresh() {
        let g = build_named(&NamedGraph::Path(1)).unwrap();
        let mut f = SizeFunction::new();
        f.set("v1", 1);
        let h = bipartite_critical_gadget(2).unwrap();
        let (g1, f1) = compose_ff(&g, &f, "v1", &h, 4).unwrap();
        let (g2, f2) = compose_ff(&g1, &f1, "v1", &h, 4).unwrap();
        assert_eq!(g2.vertex_count(), 7);
        assert_eq!(f2.get("v1"), Some(3));
        assert!(g2.has_vertex("H1#b1") && g2.has_vertex("H2#b1"));
    }
}
