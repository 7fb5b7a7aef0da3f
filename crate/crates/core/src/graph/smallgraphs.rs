//! Isomorph-free enumeration of small connected graphs.
//!
//! A graph on `n` labeled vertices is encoded as an edge bitmask over the
//! pairs `(0,1), (0,2), .., (0,n-1), (1,2), ..` in that order. The canonical
//! representative of an isomorphism class is the mask whose bit sequence is
//! lexicographically maximal over all vertex permutations; enumeration keeps
//! exactly the canonical masks. Intended for desk scale (n <= 7, where there
//! are 853 connected graphs).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphMask {
    pub n: usize,
    pub edges: u32,
}

impl GraphMask {
    pub fn to_graph(self) -> Graph {
        let names: Vec<String> = (1..=self.n).map(|i| format!("v{i}")).collect();
        let mut g = Graph::new();
        for v in &names {
            g.add_vertex(v).expect("fresh");
        }
        for (pos, (i, j)) in pair_order(self.n).into_iter().enumerate() {
            if self.edges >> pos & 1 == 1 {
                g.add_edge(&names[i], &names[j]).expect("valid edge");
            }
        }
        g
    }
}

fn pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            v.push((i, j));
        }
    }
    v
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

fn is_connected_mask(n: usize, edges: u32, pairs: &[(usize, usize)]) -> bool {
    let mut adj = vec![0u8; 0];
    adj.resize(n * n, 0);
    for (pos, &(i, j)) in pairs.iter().enumerate() {
        if edges >> pos & 1 == 1 {
            adj[i * n + j] = 1;
            adj[j * n + i] = 1;
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for w in 0..n {
            if adj[u * n + w] == 1 && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// For each permutation, `posmap[pos(a,b)] = pos(perm^-1(a), perm^-1(b))`:
/// streaming the permuted graph's bits in canonical pair order.
fn position_maps(n: usize, perms: &[Vec<usize>]) -> Vec<Vec<u8>> {
    let pairs = pair_order(n);
    let pos_of = |a: usize, b: usize| -> usize {
        let (a, b) = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == (a, b)).expect("pair")
    };
    perms
        .iter()
        .map(|perm| {
            let mut inv = vec![0usize; n];
            for (i, &p) in perm.iter().enumerate() {
                inv[p] = i;
            }
            pairs
                .iter()
                .map(|&(a, b)| pos_of(inv[a], inv[b]) as u8)
                .collect()
        })
        .collect()
}

fn is_canonical(edges: u32, posmaps: &[Vec<u8>]) -> bool {
    for pm in posmaps {
        // compare the permuted bit stream against the original, lexicographically
        for (pos, &mapped) in pm.iter().enumerate() {
            let orig = edges >> pos & 1;
            let perm = edges >> mapped & 1;
            if perm > orig {
                return false; // permuted image is lexicographically larger
            }
            if perm < orig {
                break;
            }
        }
    }
    true
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class.
/// Results are cached per process. Panics for n > 8 (not desk scale).
pub fn connected_graphs(n: usize) -> Arc<Vec<GraphMask>> {
    assert!(
        (1..=8).contains(&n),
        "connected_graphs is a desk-scale enumerator"
    );
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<GraphMask>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(found) = cache.lock().unwrap().get(&n) {
        return Arc::clone(found);
    }
    let computed = Arc::new(enumerate(n));
    cache.lock().unwrap().insert(n, Arc::clone(&computed));
    computed
}

/// Connected graphs with 1..=n vertices, one per isomorphism class.
pub fn connected_graphs_up_to(n: usize) -> Vec<GraphMask> {
    (1..=n)
        .flat_map(|m| connected_graphs(m).iter().copied().collect::<Vec<_>>())
        .collect()
}

fn enumerate(n: usize) -> Vec<GraphMask> {
    if n == 1 {
        return vec![GraphMask { n: 1, edges: 0 }];
    }
    let pairs = pair_order(n);
    let npairs = pairs.len();
    let perms: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
        .collect();
    let posmaps = position_maps(n, &perms);
    let mut out = Vec::new();
    for edges in 0..(1u32 << npairs) {
        if (edges.count_ones() as usize) < n - 1 {
            continue;
        }
        if !is_canonical(edges, &posmaps) {
            continue;
        }
        if !is_connected_mask(n, edges, &pairs) {
            continue;
        }
        out.push(GraphMask { n, edges });
    }
    out
}
