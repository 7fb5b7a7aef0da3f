//! Structural invariants: core confluence, block cover, classifier
//! agreement with brute-force isomorphism, and merge/bipartite interplay.

mod common;

use common::{isomorphic, random_bipartite, random_graph};
use listchoose::graph::smallgraphs::{connected_graphs, connected_graphs_up_to};
use listchoose::graph::{
    block_decomposition, build_named, classify_core_component, compute_core,
    compute_core_with_priority, graph_from_json, graph_to_json, CoreClass, Graph, NamedGraph,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// The order-independent signature of a core: the non-isolated part (the
/// unique maximal min-degree-2 subgraph) as a labeled vertex set, plus the
/// count of isolated tree remnants. The identity of a tree component's
/// single surviving vertex depends on removal order by nature.
fn core_signature(core: &Graph) -> (Vec<String>, usize) {
    for v in core.vertices() {
        assert_ne!(core.degree(v).unwrap(), 1, "core keeps a degree-1 vertex");
    }
    let mut live: Vec<String> = core
        .vertices()
        .filter(|v| core.degree(v).unwrap() >= 2)
        .map(|s| s.to_string())
        .collect();
    live.sort();
    let isolated = core
        .vertices()
        .filter(|v| core.degree(v).unwrap() == 0)
        .count();
    (live, isolated)
}

#[test]
fn core_confluence_exhaustive_small() {
    let mut rng = StdRng::seed_from_u64(0x9a_0001);
    for mask in connected_graphs_up_to(6) {
        let g = mask.to_graph();
        let reference = core_signature(&compute_core(&g).core);
        let mut names: Vec<String> = g.vertices().map(|s| s.to_string()).collect();
        for _ in 0..20 {
            for i in 0..names.len() {
                let j = rng.gen_range(i..names.len());
                names.swap(i, j);
            }
            let shuffled = core_signature(&compute_core_with_priority(&g, &names).core);
            assert_eq!(reference, shuffled, "{:?}", g.edges());
        }
    }
}

#[test]
fn core_confluence_random_larger() {
    let mut rng = StdRng::seed_from_u64(0x9a_0002);
    for _ in 0..200 {
        let n = rng.gen_range(7..=8);
        let g = {
            let arg2 = rng.gen_range(0.15..0.5);
            random_graph(&mut rng, n, arg2)
        };
        let reference = core_signature(&compute_core(&g).core);
        let mut names: Vec<String> = g.vertices().map(|s| s.to_string()).collect();
        for _ in 0..100 {
            for i in 0..names.len() {
                let j = rng.gen_range(i..names.len());
                names.swap(i, j);
            }
            let shuffled = core_signature(&compute_core_with_priority(&g, &names).core);
            assert_eq!(reference, shuffled);
        }
    }
}

#[test]
fn block_cover_and_edge_partition() {
    let mut rng = StdRng::seed_from_u64(0x9a_0003);
    for _ in 0..300 {
        let n = rng.gen_range(1..=9);
        let g = {
            let arg2 = rng.gen_range(0.1..0.6);
            random_graph(&mut rng, n, arg2)
        };
        let d = block_decomposition(&g, None);
        // union of blocks = non-isolated vertices
        let mut covered: std::collections::BTreeSet<String> = Default::default();
        for b in &d.blocks {
            covered.extend(b.iter().cloned());
        }
        for v in g.vertices() {
            let isolated = g.degree(v).unwrap() == 0;
            assert_eq!(!covered.contains(v), isolated, "{v}");
        }
        // every edge in exactly one block
        let mut edge_count = 0;
        for b in &d.blocks {
            edge_count += g.induced_subgraph(b).unwrap().edge_count();
        }
        assert_eq!(edge_count, g.edge_count());
        // bfs order: non-root blocks share exactly one vertex with predecessors
        let mut seen: std::collections::BTreeSet<&String> = Default::default();
        for (pos, &b) in d.bfs_order.iter().enumerate() {
            let shared = d.blocks[b].iter().filter(|v| seen.contains(v)).count();
            if d.attach[b].is_some() {
                assert_eq!(shared, 1, "block {pos}");
            } else {
                assert_eq!(shared, 0, "root {pos}");
            }
            seen.extend(d.blocks[b].iter());
        }
    }
}

/// Family members with a given vertex count, used as isomorphism references.
fn family_members(n: usize) -> Vec<(CoreClass, Graph)> {
    let mut out = Vec::new();
    if n == 1 {
        out.push((CoreClass::K1, build_named(&NamedGraph::Path(1)).unwrap()));
    }
    if n >= 4 && n.is_multiple_of(2) {
        out.push((
            CoreClass::EvenCycle(n),
            build_named(&NamedGraph::Cycle(n as u32)).unwrap(),
        ));
    }
    // theta_{2,2,2m} has 2m + 3 vertices
    if n >= 5 && n % 2 == 1 {
        let m = (n - 3) / 2;
        if m >= 1 {
            out.push((
                CoreClass::Theta222m(m),
                build_named(&NamedGraph::Theta3(2, 2, 2 * m as u32)).unwrap(),
            ));
        }
    }
    // K_{2,m} has m + 2 vertices
    if n >= 5 {
        let m = n - 2;
        out.push((
            CoreClass::K2m(m),
            build_named(&NamedGraph::CompleteBipartite(2, m as u32)).unwrap(),
        ));
    }
    out
}

#[test]
fn classifier_agrees_with_isomorphism_on_small_cores() {
    // all connected cores on <= 7 vertices, checked against generated family
    // members by brute-force isomorphism
    for n in 1..=7usize {
        let members = family_members(n);
        for mask in connected_graphs(n).iter() {
            let g = mask.to_graph();
            if g.vertices().any(|v| g.degree(v).unwrap() == 1) {
                continue; // not a core
            }
            let got = classify_core_component(&g).unwrap();
            match got {
                CoreClass::K1 => assert_eq!(g.vertex_count(), 1),
                CoreClass::EvenCycle(l) => {
                    let reference = build_named(&NamedGraph::Cycle(l as u32)).unwrap();
                    assert!(isomorphic(&g, &reference));
                }
                CoreClass::Theta222m(m) => {
                    let reference = build_named(&NamedGraph::Theta3(2, 2, 2 * m as u32)).unwrap();
                    assert!(isomorphic(&g, &reference));
                }
                CoreClass::K2m(m) => {
                    let reference =
                        build_named(&NamedGraph::CompleteBipartite(2, m as u32)).unwrap();
                    assert!(isomorphic(&g, &reference));
                }
                CoreClass::Other => {
                    for (tag, reference) in &members {
                        assert!(
                            !isomorphic(&g, reference),
                            "classified Other but isomorphic to {tag:?}: {:?}",
                            g.edges()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn classifier_on_eight_and_nine_vertex_members() {
    // directed members and near-misses beyond the exhaustive range
    let c8 = build_named(&NamedGraph::Cycle(8)).unwrap();
    assert_eq!(
        classify_core_component(&c8).unwrap(),
        CoreClass::EvenCycle(8)
    );
    let t9 = build_named(&NamedGraph::Theta3(2, 2, 6)).unwrap(); // 9 vertices
    assert_eq!(
        classify_core_component(&t9).unwrap(),
        CoreClass::Theta222m(3)
    );
    let k26 = build_named(&NamedGraph::CompleteBipartite(2, 6)).unwrap();
    assert_eq!(classify_core_component(&k26).unwrap(), CoreClass::K2m(6));
    let k27 = build_named(&NamedGraph::CompleteBipartite(2, 7)).unwrap();
    assert_eq!(classify_core_component(&k27).unwrap(), CoreClass::K2m(7));
    // near-misses
    let t25 = build_named(&NamedGraph::Theta3(2, 2, 5)).unwrap(); // odd third path
    assert_eq!(classify_core_component(&t25).unwrap(), CoreClass::Other);
    let t44 = build_named(&NamedGraph::Theta3(2, 4, 4)).unwrap();
    assert_eq!(classify_core_component(&t44).unwrap(), CoreClass::Other);
    let gamma = build_named(&NamedGraph::Gamma(4, 4, 1)).unwrap();
    assert_eq!(classify_core_component(&gamma).unwrap(), CoreClass::Other);
    let mut near_k2m = build_named(&NamedGraph::CompleteBipartite(2, 6)).unwrap();
    near_k2m.add_edge("b1", "b2").unwrap(); // spoil bipartiteness
    assert_eq!(
        classify_core_component(&near_k2m).unwrap(),
        CoreClass::Other
    );
    let c9 = build_named(&NamedGraph::Cycle(9)).unwrap();
    assert_eq!(classify_core_component(&c9).unwrap(), CoreClass::Other);
}

#[test]
fn classifier_invariant_under_relabeling() {
    let mut rng = StdRng::seed_from_u64(0x9a_0004);
    let members: Vec<Graph> = vec![
        build_named(&NamedGraph::Cycle(8)).unwrap(),
        build_named(&NamedGraph::Theta3(2, 2, 6)).unwrap(),
        build_named(&NamedGraph::CompleteBipartite(2, 7)).unwrap(),
    ];
    for g in members {
        let reference = classify_core_component(&g).unwrap();
        let names: Vec<String> = g.vertices().map(|s| s.to_string()).collect();
        for _ in 0..30 {
            let mut perm = names.clone();
            for i in 0..perm.len() {
                let j = rng.gen_range(i..perm.len());
                perm.swap(i, j);
            }
            let mut relabeled = Graph::new();
            for v in &perm {
                relabeled.add_vertex(v).unwrap();
            }
            let position: std::collections::HashMap<&String, usize> =
                names.iter().enumerate().map(|(i, v)| (v, i)).collect();
            let renamed: Vec<&String> = names.iter().map(|v| &perm[position[v]]).collect();
            for (u, v) in g.edges() {
                let ui = position[&u];
                let vi = position[&v];
                relabeled.add_edge(renamed[ui], renamed[vi]).unwrap();
            }
            assert_eq!(classify_core_component(&relabeled).unwrap(), reference);
        }
    }
}

#[test]
fn cut_vertices_match_removal_definition() {
    let mut rng = StdRng::seed_from_u64(0x9a_0006);
    for _ in 0..200 {
        let n = rng.gen_range(2..=8);
        let g = {
            let arg2 = rng.gen_range(0.15..0.6);
            random_graph(&mut rng, n, arg2)
        };
        let d = block_decomposition(&g, None);
        for v in g.vertices() {
            // a vertex cuts iff deleting it splits its component
            let comp = g
                .components()
                .into_iter()
                .find(|c| c.contains(&g.index_of(v).unwrap()))
                .unwrap();
            let rest: Vec<&str> = comp
                .iter()
                .map(|&i| g.name_of(i))
                .filter(|w| *w != v)
                .collect();
            let split = if rest.is_empty() {
                false
            } else {
                g.induced_subgraph(&rest).unwrap().components().len() > 1
            };
            assert_eq!(
                d.cut_vertices.contains(&v.to_string()),
                split,
                "vertex {v} in {:?}",
                g.edges()
            );
        }
    }
}

#[test]
fn merge_preserves_bipartiteness_randomized() {
    let mut rng = StdRng::seed_from_u64(0x9a_0005);
    for _ in 0..300 {
        let g = {
            let arg1 = rng.gen_range(1..=4);
            let arg2 = rng.gen_range(1..=4);
            random_bipartite(&mut rng, arg1, arg2, 0.5)
        };
        for v in g.vertices() {
            let merged = g.merge_neighbors(v).unwrap();
            assert!(merged.is_bipartite(), "merge at {v} of {:?}", g.edges());
        }
    }
}

proptest! {
    #[test]
    fn graph_json_round_trip(n in 1usize..7, seed in 0u64..5000) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.4);
        let text = graph_to_json(&g);
        let back = graph_from_json(&text).unwrap();
        prop_assert_eq!(&g, &back);
        prop_assert_eq!(text, graph_to_json(&back));
    }

    #[test]
    fn merge_preserves_bipartiteness_prop(p in 1usize..4, q in 1usize..4, seed in 0u64..5000) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_bipartite(&mut rng, p, q, 0.5);
        let names: Vec<String> = g.vertices().map(|s| s.to_string()).collect();
        let v = &names[(seed as usize) % names.len()];
        prop_assert!(g.merge_neighbors(v).unwrap().is_bipartite());
    }
}
