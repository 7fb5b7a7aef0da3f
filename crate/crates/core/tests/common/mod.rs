//! Shared test oracles, independent of the library's solver internals.
#![allow(dead_code)] // each test binary uses its own subset

use std::collections::BTreeMap;

use listchoose::graph::Graph;
use listchoose::listcolor::ListAssignment;
use rand::rngs::StdRng;
use rand::Rng;

/// Brute-force list-coloring oracle: enumerate every tuple of list choices
/// and test properness directly. No propagation, no bitmasks, no pruning
/// shared with the implementation under test.
pub fn brute_feasible(g: &Graph, l: &ListAssignment) -> bool {
    brute_count(g, l, Some(1)) > 0
}

/// Brute-force count of proper list colorings (capped if `cap` is given).
pub fn brute_count(g: &Graph, l: &ListAssignment, cap: Option<u64>) -> u64 {
    let vertices: Vec<&str> = g.vertices().collect();
    let lists: Vec<Vec<u8>> = vertices
        .iter()
        .map(|v| l.get(v).expect("list present").iter().copied().collect())
        .collect();
    let edges: Vec<(usize, usize)> = g.edge_indices();
    let mut chosen = vec![0u8; vertices.len()];
    let mut count = 0u64;
    fn rec(
        lists: &[Vec<u8>],
        edges: &[(usize, usize)],
        chosen: &mut Vec<u8>,
        v: usize,
        count: &mut u64,
        cap: Option<u64>,
    ) {
        if let Some(c) = cap {
            if *count >= c {
                return;
            }
        }
        if v == lists.len() {
            let proper = edges.iter().all(|&(a, b)| chosen[a] != chosen[b]);
            if proper {
                *count += 1;
            }
            return;
        }
        for &c in &lists[v] {
            chosen[v] = c;
            rec(lists, edges, chosen, v + 1, count, cap);
        }
    }
    rec(&lists, &edges, &mut chosen, 0, &mut count, cap);
    count
}

/// Brute-force `[f,k]`-choosability: every f-assignment must be feasible.
pub fn brute_choosable(g: &Graph, sizes: &BTreeMap<String, u8>, k: u8) -> bool {
    let vertices: Vec<String> = g.vertices().map(|s| s.to_string()).collect();
    let per_vertex: Vec<Vec<Vec<u8>>> = vertices.iter().map(|v| subsets(k, sizes[v])).collect();
    let mut choice = vec![0usize; vertices.len()];
    loop {
        let mut l = ListAssignment::new(k);
        for (i, v) in vertices.iter().enumerate() {
            l.set(v, per_vertex[i][choice[i]].clone());
        }
        if !brute_feasible(g, &l) {
            return false;
        }
        let mut pos = vertices.len();
        loop {
            if pos == 0 {
                return true;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < per_vertex[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

pub fn subsets(k: u8, size: u8) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(k: u8, size: u8, start: u8, current: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if current.len() == size as usize {
            out.push(current.clone());
            return;
        }
        for c in start..=k {
            current.push(c);
            rec(k, size, c + 1, current, out);
            current.pop();
        }
    }
    rec(k, size, 1, &mut current, &mut out);
    out
}

/// Random graph on `n` vertices `v1..vn` with edge probability `p`.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut g = Graph::new();
    for v in &names {
        g.add_vertex(v).unwrap();
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(&names[i], &names[j]).unwrap();
            }
        }
    }
    g
}

/// Random bipartite graph with parts `b1..bp` / `w1..wq`.
pub fn random_bipartite(rng: &mut StdRng, p: usize, q: usize, prob: f64) -> Graph {
    let mut g = Graph::new();
    for i in 1..=p {
        g.add_vertex(&format!("b{i}")).unwrap();
    }
    for j in 1..=q {
        g.add_vertex(&format!("w{j}")).unwrap();
    }
    for i in 1..=p {
        for j in 1..=q {
            if rng.gen_bool(prob) {
                g.add_edge(&format!("b{i}"), &format!("w{j}")).unwrap();
            }
        }
    }
    g
}

/// Random list assignment with the given sizes.
pub fn random_lists(
    rng: &mut StdRng,
    g: &Graph,
    k: u8,
    size_of: impl Fn(&str) -> u8,
) -> ListAssignment {
    let mut l = ListAssignment::new(k);
    for v in g.vertices() {
        let size = size_of(v);
        let mut colors: Vec<u8> = (1..=k).collect();
        // partial shuffle
        for i in 0..size as usize {
            let j = rng.gen_range(i..colors.len());
            colors.swap(i, j);
        }
        l.set(v, colors[..size as usize].iter().copied());
    }
    l
}

/// Brute-force graph isomorphism for tiny graphs (degree-pruned).
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.vertex_count();
    let mut deg_a: Vec<usize> = (0..n).map(|v| a.degree_of_index(v)).collect();
    let mut deg_b: Vec<usize> = (0..n).map(|v| b.degree_of_index(v)).collect();
    {
        let mut sa = deg_a.clone();
        let mut sb = deg_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(a: &Graph, b: &Graph, v: usize, mapping: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = a.vertex_count();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || a.degree_of_index(v) != b.degree_of_index(w) {
                continue;
            }
            let consistent = (0..v).all(|u| {
                let adj_a = a.neighbor_indices(v).any(|x| x == u);
                let adj_b = b.neighbor_indices(w).any(|x| x == mapping[u]);
                adj_a == adj_b
            });
            if consistent {
                mapping[v] = w;
                used[w] = true;
                if rec(a, b, v + 1, mapping, used) {
                    return true;
                }
                used[w] = false;
                mapping[v] = usize::MAX;
            }
        }
        false
    }
    rec(a, b, 0, &mut mapping, &mut used)
}
