//! The exact solver against an independent brute-force oracle, plus the
//! always-succeeds properties of the linear-time colorers.

mod common;

use common::{brute_count, brute_feasible, random_bipartite, random_graph, random_lists};
use listchoose::graph::{build_named, NamedGraph};
use listchoose::listcolor::{
    color_bipartite_34, colorings, count_colorings, feasible, greedy_order_color, solve,
    ListAssignment,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn solver_matches_brute_force_on_random_instances() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=6);
        let k = rng.gen_range(1..=3) as u8;
        let g = {
            let arg2 = rng.gen_range(0.2..0.8);
            random_graph(&mut rng, n, arg2)
        };
        let mut l = ListAssignment::new(k);
        for v in g.vertices() {
            let size = rng.gen_range(1..=k);
            let mut colors: Vec<u8> = (1..=k).collect();
            for i in 0..size as usize {
                let j = rng.gen_range(i..colors.len());
                colors.swap(i, j);
            }
            l.set(v, colors[..size as usize].iter().copied());
        }
        let brute = brute_feasible(&g, &l);
        let fast = feasible(&g, &l, &[]).unwrap();
        assert_eq!(brute, fast, "graph {:?} lists {:?}", g.edges(), l);
        match solve(&g, &l, &[]).unwrap() {
            Some(c) => {
                assert!(brute);
                assert!(c.is_valid_for(&g, &l));
            }
            None => assert!(!brute),
        }
    }
}

#[test]
fn counting_matches_brute_force() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    for _ in 0..2_000 {
        let n = rng.gen_range(1..=5);
        let k = rng.gen_range(2..=3) as u8;
        let g = random_graph(&mut rng, n, 0.5);
        let size = rng.gen_range(1..=k);
        let l = random_lists(&mut rng, &g, k, |_| size);
        assert_eq!(
            count_colorings(&g, &l, &[]).unwrap(),
            brute_count(&g, &l, None)
        );
    }
}

#[test]
fn colorings_are_lexicographically_sorted_and_valid() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 5, 0.5);
        let l = random_lists(&mut rng, &g, 3, |_| 2);
        let all = colorings(&g, &l, &[]).unwrap();
        for c in &all {
            assert!(c.is_valid_for(&g, &l));
        }
        let keys: Vec<Vec<u8>> = all
            .iter()
            .map(|c| g.vertices().map(|v| c.get(v).unwrap()).collect())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
    }
}

#[test]
fn greedy_never_fails_under_precondition() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let mut trials = 0;
    while trials < 10_000 {
        let n = rng.gen_range(2..=7);
        let k = rng.gen_range(3..=5) as u8;
        let g = random_graph(&mut rng, n, 0.5);
        // random order, then lists sized exactly d^- + 1 (clipped to k)
        let mut order: Vec<String> = g.vertices().map(|s| s.to_string()).collect();
        for i in 0..order.len() {
            let j = rng.gen_range(i..order.len());
            order.swap(i, j);
        }
        let position: std::collections::HashMap<&str, usize> = order
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut l = ListAssignment::new(k);
        let mut ok = true;
        for v in g.vertices() {
            let indeg = g
                .neighbors(v)
                .unwrap()
                .iter()
                .filter(|w| position[**w] < position[v])
                .count();
            if indeg + 1 > k as usize {
                ok = false;
                break;
            }
            let mut colors: Vec<u8> = (1..=k).collect();
            for i in 0..(indeg + 1) {
                let j = rng.gen_range(i..colors.len());
                colors.swap(i, j);
            }
            l.set(v, colors[..indeg + 1].iter().copied());
        }
        if !ok {
            continue;
        }
        trials += 1;
        let first = *l.get(&order[0]).unwrap().iter().next().unwrap();
        let c = greedy_order_color(&g, &order, &l, first).unwrap();
        assert!(c.is_valid_for(&g, &l));
        assert_eq!(c.get(&order[0]), Some(first));
    }
}

#[test]
fn bipartite_34_never_fails_with_random_pins() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    for _ in 0..10_000 {
        let p = rng.gen_range(1..=20);
        let q = rng.gen_range(1..=20);
        let g = {
            let arg3 = rng.gen_range(0.1..0.7);
            random_bipartite(&mut rng, p, q, arg3)
        };
        let l = random_lists(&mut rng, &g, 4, |_| 3);
        let names: Vec<&str> = g.vertices().collect();
        let pin_v = names[rng.gen_range(0..names.len())];
        let pin_list: Vec<u8> = l.get(pin_v).unwrap().iter().copied().collect();
        let pin_c = pin_list[rng.gen_range(0..pin_list.len())];
        let c = color_bipartite_34(&g, &l, (pin_v, pin_c)).unwrap();
        assert!(c.is_valid_for(&g, &l));
        assert_eq!(c.get(pin_v), Some(pin_c));
    }
}

#[test]
fn bipartite_23_palette3_always_feasible() {
    // 2-lists on B, 3-lists (forced full) on W, palette 3
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    for _ in 0..2_000 {
        let p = rng.gen_range(1..=10);
        let q = rng.gen_range(1..=10);
        let g = {
            let arg3 = rng.gen_range(0.2..0.8);
            random_bipartite(&mut rng, p, q, arg3)
        };
        let l = random_lists(&mut rng, &g, 3, |v| if v.starts_with('b') { 2 } else { 3 });
        assert!(feasible(&g, &l, &[]).unwrap());
    }
}

#[test]
fn delta_plus_one_greedy_always_succeeds() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    for _ in 0..2_000 {
        let n = rng.gen_range(2..=7);
        let g = random_graph(&mut rng, n, 0.5);
        let k = (g.max_degree() + 1).max(2) as u8;
        let l = random_lists(&mut rng, &g, k.max(3), |_| k);
        let order: Vec<String> = g.vertices().map(|s| s.to_string()).collect();
        let first = *l.get(&order[0]).unwrap().iter().next().unwrap();
        let c = greedy_order_color(&g, &order, &l, first).unwrap();
        assert!(c.is_valid_for(&g, &l));
    }
}

#[test]
fn k11p_three_lists_succeed_with_clique_early() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    for p in 1..=6u32 {
        let g = build_named(&NamedGraph::K11p(p)).unwrap();
        for _ in 0..50 {
            let l = random_lists(&mut rng, &g, 5, |_| 3);
            let mut order: Vec<String> = vec!["a".into(), "b".into()];
            order.extend((1..=p).map(|i| format!("s{i}")));
            let first = *l.get("a").unwrap().iter().next().unwrap();
            let c = greedy_order_color(&g, &order, &l, first).unwrap();
            assert!(c.is_valid_for(&g, &l));
        }
    }
}
