//! Invariants of the exhaustive deciders: agreement with brute force and
//! the recognizers, monotonicity, component decomposition, core and merge
//! reductions, symmetry soundness, and the pentagon facts.

mod common;

use std::collections::BTreeMap;

use common::{brute_choosable, random_bipartite, random_graph};
use listchoose::choosability::{
    decide_23_3_ch_bipartite, enumerate_assignments, is_fk_choosable, recognize_23_choosable,
    recognize_2_choosable, ChooseOptions,
};
use listchoose::graph::smallgraphs::connected_graphs_up_to;
use listchoose::graph::{build_named, compute_core, Graph, NamedGraph};
use listchoose::listcolor::{feasible, SizeFunction};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn opts() -> ChooseOptions {
    ChooseOptions::default()
}

fn uniform(g: &Graph, s: u8) -> SizeFunction {
    SizeFunction::uniform(g, s)
}

#[test]
fn decider_matches_brute_force_choosability() {
    // every connected graph on <= 4 vertices, f random in {1,2}, k in {2,3}
    let mut rng = StdRng::seed_from_u64(0xc0_0001);
    for mask in connected_graphs_up_to(4) {
        let g = mask.to_graph();
        for k in 2..=3u8 {
            for _ in 0..4 {
                let mut sizes = BTreeMap::new();
                let mut f = SizeFunction::new();
                for v in g.vertices() {
                    let s = rng.gen_range(1..=2u8);
                    sizes.insert(v.to_string(), s);
                    f.set(v, s);
                }
                let fast = is_fk_choosable(&g, &f, k, &opts()).unwrap();
                assert_eq!(fast.choosable, brute_choosable(&g, &sizes, k));
            }
        }
    }
}

#[test]
fn recognizers_agree_with_deciders_up_to_six_vertices() {
    for mask in connected_graphs_up_to(6) {
        let g = mask.to_graph();
        let f = uniform(&g, 2);
        let v23 = is_fk_choosable(&g, &f, 3, &opts()).unwrap();
        assert_eq!(recognize_23_choosable(&g), v23.choosable, "{:?}", g.edges());
        let v2 = is_fk_choosable(&g, &f, 4, &opts()).unwrap();
        assert_eq!(recognize_2_choosable(&g), v2.choosable, "{:?}", g.edges());
    }
}

#[test]
fn palette_four_is_the_two_list_threshold_up_to_five_vertices() {
    for mask in connected_graphs_up_to(5) {
        let g = mask.to_graph();
        let f = uniform(&g, 2);
        let at4 = is_fk_choosable(&g, &f, 4, &opts()).unwrap().choosable;
        let at5 = is_fk_choosable(&g, &f, 5, &opts()).unwrap().choosable;
        assert_eq!(at4, at5, "{:?}", g.edges());
    }
}

#[test]
fn palette_monotonicity() {
    let mut rng = StdRng::seed_from_u64(0xc0_0002);
    for _ in 0..60 {
        let g = {
            let arg1 = rng.gen_range(1..=5);
            random_graph(&mut rng, arg1, 0.5)
        };
        let f = uniform(&g, 2);
        let mut last: Option<bool> = None;
        for k in 2..=5u8 {
            let v = is_fk_choosable(&g, &f, k, &opts()).unwrap().choosable;
            if let Some(prev) = last {
                // choosable at k implies choosable at every smaller palette >= max f
                if v {
                    assert!(prev, "{:?} k={}", g.edges(), k);
                }
            }
            last = Some(v);
        }
    }
}

#[test]
fn size_monotonicity() {
    let mut rng = StdRng::seed_from_u64(0xc0_0003);
    for _ in 0..60 {
        let g = {
            let arg1 = rng.gen_range(1..=5);
            random_graph(&mut rng, arg1, 0.5)
        };
        if g.vertex_count() == 0 {
            continue;
        }
        let f = uniform(&g, 2);
        let k = 3u8;
        let base = is_fk_choosable(&g, &f, k, &opts()).unwrap().choosable;
        if !base {
            continue;
        }
        for v in g.vertices() {
            let bumped = f.bumped(v);
            let better = is_fk_choosable(&g, &bumped, k, &opts()).unwrap().choosable;
            assert!(better, "bumping {v} flipped the verdict");
        }
    }
}

#[test]
fn component_decomposition() {
    let mut rng = StdRng::seed_from_u64(0xc0_0004);
    for _ in 0..40 {
        // disjoint union of two small graphs
        let a = {
            let arg1 = rng.gen_range(1..=4);
            random_graph(&mut rng, arg1, 0.6)
        };
        let b = {
            let arg1 = rng.gen_range(1..=4);
            random_graph(&mut rng, arg1, 0.6)
        };
        let mut g = Graph::new();
        for v in a.vertices() {
            g.add_vertex(&format!("a_{v}")).unwrap();
        }
        for v in b.vertices() {
            g.add_vertex(&format!("b_{v}")).unwrap();
        }
        for (u, v) in a.edges() {
            g.add_edge(&format!("a_{u}"), &format!("a_{v}")).unwrap();
        }
        for (u, v) in b.edges() {
            g.add_edge(&format!("b_{u}"), &format!("b_{v}")).unwrap();
        }
        let whole = is_fk_choosable(&g, &uniform(&g, 2), 3, &opts())
            .unwrap()
            .choosable;
        let pa = is_fk_choosable(&a, &uniform(&a, 2), 3, &opts())
            .unwrap()
            .choosable;
        let pb = is_fk_choosable(&b, &uniform(&b, 2), 3, &opts())
            .unwrap()
            .choosable;
        assert_eq!(whole, pa && pb);
    }
}

#[test]
fn core_reduction_preserves_two_list_verdicts() {
    // exhaustive over all connected graphs on <= 7 vertices, f = 2, k = 3
    for mask in connected_graphs_up_to(7) {
        let g = mask.to_graph();
        let core = compute_core(&g).core;
        let on_g = is_fk_choosable(&g, &uniform(&g, 2), 3, &opts())
            .unwrap()
            .choosable;
        let on_core = is_fk_choosable(&core, &uniform(&core, 2), 3, &opts())
            .unwrap()
            .choosable;
        assert_eq!(on_g, on_core, "{:?}", g.edges());
    }
}

#[test]
fn merge_reduction_preserves_choosability() {
    // bipartite g: [2,k]-choosable implies the merge is [2,k]-choosable
    let mut rng = StdRng::seed_from_u64(0xc0_0005);
    for _ in 0..120 {
        let g = {
            let arg1 = rng.gen_range(1..=3);
            let arg2 = rng.gen_range(1..=3);
            random_bipartite(&mut rng, arg1, arg2, 0.7)
        };
        for k in 2..=4u8 {
            let before = is_fk_choosable(&g, &uniform(&g, 2), k, &opts())
                .unwrap()
                .choosable;
            if !before {
                continue;
            }
            for v in g.vertices() {
                let merged = g.merge_neighbors(v).unwrap();
                if merged.vertex_count() == 0 {
                    continue;
                }
                let after = is_fk_choosable(&merged, &uniform(&merged, 2), k, &opts())
                    .unwrap()
                    .choosable;
                assert!(after, "merge at {v} broke [2,{k}]-choosability");
            }
        }
    }
}

#[test]
fn symmetry_pruning_is_sound() {
    for mask in connected_graphs_up_to(5) {
        let g = mask.to_graph();
        let f = uniform(&g, 2);
        for k in 2..=4u8 {
            let sym = is_fk_choosable(&g, &f, k, &opts()).unwrap();
            let plain = is_fk_choosable(
                &g,
                &f,
                k,
                &ChooseOptions {
                    symmetry: false,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(sym.choosable, plain.choosable, "{:?} k={}", g.edges(), k);
        }
    }
}

#[test]
fn pentagon_facts() {
    let c5 = build_named(&NamedGraph::Cycle(5)).unwrap();
    let f = uniform(&c5, 2);
    // the only infeasible 2-list assignment over palette 5 has five identical lists
    let mut infeasible = 0u32;
    for l in enumerate_assignments(&c5, &f, 5, false, None).unwrap() {
        if !feasible(&c5, &l, &[]).unwrap() {
            infeasible += 1;
            let lists: Vec<_> = c5.vertices().map(|v| l.get(v).unwrap().clone()).collect();
            assert!(lists.windows(2).all(|w| w[0] == w[1]), "{l:?}");
        }
    }
    assert_eq!(infeasible, 10); // one per 2-subset of the palette

    // with one 3-list anywhere, always feasible
    for position in 0..5usize {
        let mut f = SizeFunction::new();
        for (i, v) in c5.vertices().enumerate() {
            f.set(v, if i == position { 3 } else { 2 });
        }
        let verdict = is_fk_choosable(&c5, &f, 5, &opts()).unwrap();
        assert!(verdict.choosable);
    }
}

#[test]
fn pentagon_three_fixed_vertices_leave_two_completions() {
    // fix any proper coloring of three consecutive vertices and give the
    // other two 3-lists: at least two list colorings of the whole C5 remain
    let c5 = build_named(&NamedGraph::Cycle(5)).unwrap();
    let triples = common::subsets(5, 3);
    for a in 1..=5u8 {
        for b in (1..=5u8).filter(|&b| b != a) {
            for c in (1..=5u8).filter(|&c| c != b) {
                for l4 in &triples {
                    for l5 in &triples {
                        let mut l = listchoose::listcolor::ListAssignment::new(5);
                        l.set("v1", [a]);
                        l.set("v2", [b]);
                        l.set("v3", [c]);
                        l.set("v4", l4.iter().copied());
                        l.set("v5", l5.iter().copied());
                        let n = listchoose::listcolor::count_colorings(&c5, &l, &[]).unwrap();
                        assert!(n >= 2, "fixing {a},{b},{c} with {l4:?}/{l5:?} left {n}");
                    }
                }
            }
        }
    }
}

#[test]
fn matched_pentagons_extend_when_outer_has_two_colorings() {
    // two C5's joined by a perfect matching; 2- or 3-lists outside, 3-lists
    // inside: whenever the outer cycle alone has two distinct list
    // colorings, the whole graph is colorable
    let mut g = Graph::new();
    for i in 1..=5 {
        g.add_vertex(&format!("o{i}")).unwrap();
    }
    for i in 1..=5 {
        g.add_vertex(&format!("i{i}")).unwrap();
    }
    for i in 1..=5usize {
        g.add_edge(&format!("o{i}"), &format!("o{}", i % 5 + 1))
            .unwrap();
        g.add_edge(&format!("i{i}"), &format!("i{}", i % 5 + 1))
            .unwrap();
        g.add_edge(&format!("o{i}"), &format!("i{i}")).unwrap();
    }
    let outer = g.induced_subgraph(&["o1", "o2", "o3", "o4", "o5"]).unwrap();
    let mut rng = StdRng::seed_from_u64(0xc0_0007);
    let mut hits = 0;
    for _ in 0..3000 {
        let mut l = listchoose::listcolor::ListAssignment::new(5);
        for i in 1..=5 {
            let size = if rng.gen_bool(0.5) { 2 } else { 3 };
            let mut colors: Vec<u8> = (1..=5).collect();
            for s in 0..size {
                let j = rng.gen_range(s..colors.len());
                colors.swap(s, j);
            }
            l.set(&format!("o{i}"), colors[..size].iter().copied());
        }
        for i in 1..=5 {
            let mut colors: Vec<u8> = (1..=5).collect();
            for s in 0..3 {
                let j = rng.gen_range(s..colors.len());
                colors.swap(s, j);
            }
            l.set(&format!("i{i}"), colors[..3].iter().copied());
        }
        let outer_count = listchoose::listcolor::count_colorings(
            &outer,
            &l.restrict(&["o1", "o2", "o3", "o4", "o5"]),
            &[],
        )
        .unwrap();
        if outer_count >= 2 {
            hits += 1;
            assert!(feasible(&g, &l, &[]).unwrap(), "{l:?}");
        }
    }
    assert!(hits > 100, "sampling produced too few applicable instances");
}

#[test]
fn decide_23_matches_decider_on_random_bipartite_graphs() {
    let mut rng = StdRng::seed_from_u64(0xc0_0006);
    for _ in 0..200 {
        let p = rng.gen_range(1..=5);
        let q = rng.gen_range(1..=5);
        let g = {
            let arg3 = rng.gen_range(0.2..0.9);
            random_bipartite(&mut rng, p, q, arg3)
        };
        let names: Vec<String> = g.vertices().map(|s| s.to_string()).collect();
        let count = rng.gen_range(0..=6.min(names.len()));
        let mut chosen: Vec<String> = Vec::new();
        while chosen.len() < count {
            let v = names[rng.gen_range(0..names.len())].clone();
            if !chosen.contains(&v) {
                chosen.push(v);
            }
        }
        let verdict = decide_23_3_ch_bipartite(&g, &chosen, &opts()).unwrap();
        let mut f = SizeFunction::uniform(&g, 3);
        for v in &chosen {
            f.set(v, 2);
        }
        let exhaustive = is_fk_choosable(&g, &f, 3, &opts()).unwrap().choosable;
        assert_eq!(
            verdict.choosable(),
            exhaustive,
            "graph {:?} two-lists {chosen:?} verdict {verdict:?}",
            g.edges()
        );
    }
}

#[test]
fn palette_equals_size_is_colorability() {
    // [k,k]-choosability is exactly k-colorability: lists are forced full
    for mask in connected_graphs_up_to(5) {
        let g = mask.to_graph();
        let two = is_fk_choosable(&g, &uniform(&g, 2), 2, &opts())
            .unwrap()
            .choosable;
        assert_eq!(two, g.is_bipartite(), "{:?}", g.edges());
        let three = is_fk_choosable(&g, &uniform(&g, 3), 3, &opts())
            .unwrap()
            .choosable;
        let l = listchoose::listcolor::ListAssignment::uniform(&g, 3, [1, 2, 3]);
        assert_eq!(three, feasible(&g, &l, &[]).unwrap(), "{:?}", g.edges());
    }
}

#[test]
fn choosability_is_hereditary() {
    // an induced subgraph of an [f,k]-choosable graph stays choosable
    let mut rng = StdRng::seed_from_u64(0xc0_0008);
    for _ in 0..60 {
        let g = {
            let arg1 = rng.gen_range(2..=5);
            random_graph(&mut rng, arg1, 0.6)
        };
        let f = uniform(&g, 2);
        if !is_fk_choosable(&g, &f, 3, &opts()).unwrap().choosable {
            continue;
        }
        let names: Vec<String> = g.vertices().map(|s| s.to_string()).collect();
        let keep: Vec<String> = names
            .iter()
            .filter(|_| rng.gen_bool(0.7))
            .cloned()
            .collect();
        if keep.is_empty() {
            continue;
        }
        let sub = g.induced_subgraph(&keep).unwrap();
        assert!(
            is_fk_choosable(&sub, &uniform(&sub, 2), 3, &opts())
                .unwrap()
                .choosable
        );
    }
}

#[test]
fn decide_23_branch_pins() {
    use listchoose::choosability::Verdict23;
    // six 2-lists all on one side: the other side takes a single color
    let g = build_named(&NamedGraph::CompleteBipartite(6, 1)).unwrap();
    let set: Vec<String> = (1..=6).map(|i| format!("b{i}")).collect();
    assert_eq!(
        decide_23_3_ch_bipartite(&g, &set, &opts()).unwrap(),
        Verdict23::Choosable
    );
    let mut f = SizeFunction::uniform(&g, 3);
    for v in &set {
        f.set(v, 2);
    }
    assert!(is_fk_choosable(&g, &f, 3, &opts()).unwrap().choosable);

    // an induced C6 across a pre-extension instance resolves by enumeration
    let p5 = build_named(&NamedGraph::Path(5)).unwrap();
    let gadget = listchoose::gadgets::c6_preext_reduction(&p5, "v1", "v3", "v5").unwrap();
    let cycle: Vec<String> = gadget.role_set("C").unwrap().to_vec();
    let verdict = decide_23_3_ch_bipartite(&gadget.graph, &cycle, &opts()).unwrap();
    let mut f = SizeFunction::uniform(&gadget.graph, 3);
    for v in &cycle {
        f.set(v, 2);
    }
    let exhaustive = is_fk_choosable(&gadget.graph, &f, 3, &opts())
        .unwrap()
        .choosable;
    match verdict {
        Verdict23::ResolvedByEnumeration(b) => assert_eq!(b, exhaustive),
        other => panic!("expected enumeration on an induced C6, got {other:?}"),
    }
}

#[test]
fn two_choosable_families_by_decider() {
    // K_{2,m} is [2,3]-choosable for all m, 2-choosable only up to m = 3
    for m in 2..=6u32 {
        let g = build_named(&NamedGraph::CompleteBipartite(2, m)).unwrap();
        let f = uniform(&g, 2);
        assert!(is_fk_choosable(&g, &f, 3, &opts()).unwrap().choosable);
        let two_choosable = is_fk_choosable(&g, &f, 4, &opts()).unwrap().choosable;
        assert_eq!(two_choosable, m <= 3);
    }
}

#[test]
fn verdict_stable_under_enumeration_order() {
    // one graph checked at both job counts and both symmetry settings
    let g = build_named(&NamedGraph::Chocolate).unwrap();
    let f = uniform(&g, 2);
    let a = is_fk_choosable(&g, &f, 3, &opts()).unwrap();
    let b = is_fk_choosable(
        &g,
        &f,
        3,
        &ChooseOptions {
            jobs: 3,
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(a.witness, b.witness);
    assert_eq!(a.assignments_examined, b.assignments_examined);
}
