//! Block (biconnected component) decomposition, the block-cut tree, and the
//! block classification behind the quasi-line-perfect and block-cactus
//! predicates.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::Graph;

/// Blocks, cut vertices, the bipartite block-cut incidence, and a breadth
/// first order of the blocks in which every non-root block meets the union
/// of its predecessors in exactly one vertex (its `attach` vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets, each sorted in canonical order. Isolated vertices belong
    /// to no block.
    pub blocks: Vec<Vec<String>>,
    pub cut_vertices: Vec<String>,
    /// Incidences (block index, cut vertex) of the block-cut tree.
    pub block_tree: Vec<(usize, String)>,
    /// Block indices, one component after another, roots first.
    pub bfs_order: Vec<usize>,
    /// For each block, the cut vertex shared with earlier blocks of its
    /// component (`None` for the component root).
    pub attach: Vec<Option<String>>,
}

/// Classification of a single block under a fixed priority:
/// single edge, K4, odd cycle, even cycle, clique (n >= 5), K_{1,1,p}
/// (p >= 2), 2-connected bipartite, other. K4 always wins over `Clique(4)`
/// and K3 classifies as `OddCycle(3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockClass {
    K4,
    K11p(usize),
    TwoConnectedBipartite,
    OddCycle(usize),
    EvenCycle(usize),
    Clique(usize),
    SingleEdge,
    Other,
}

/// Linear-time block decomposition (Hopcroft–Tarjan low points). The
/// optional `root` hint selects the root block of its component: the first
/// block containing that vertex.
pub fn block_decomposition(g: &Graph, root: Option<&str>) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut disc = vec![0u32; n];
    let mut low = vec![0u32; n];
    let mut visited = vec![false; n];
    let mut timer = 1u32;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw_blocks: Vec<BTreeSet<usize>> = Vec::new();

    enum Act {
        Descend(usize, usize), // (child, parent)
        Retreat,
        Done,
    }

    for start in 0..n {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        disc[start] = timer;
        low[start] = timer;
        timer += 1;
        // frame: (vertex, parent, neighbors, next neighbor position)
        let mut stack: Vec<(usize, usize, Vec<usize>, usize)> =
            vec![(start, usize::MAX, g.neighbor_indices(start).collect(), 0)];
        loop {
            let act = match stack.last_mut() {
                None => Act::Done,
                Some(frame) => {
                    let u = frame.0;
                    let parent = frame.1;
                    let mut act = Act::Retreat;
                    while frame.3 < frame.2.len() {
                        let w = frame.2[frame.3];
                        frame.3 += 1;
                        if !visited[w] {
                            visited[w] = true;
                            disc[w] = timer;
                            low[w] = timer;
                            timer += 1;
                            edge_stack.push((u, w));
                            act = Act::Descend(w, u);
                            break;
                        } else if w != parent && disc[w] < disc[u] {
                            edge_stack.push((u, w));
                            low[u] = low[u].min(disc[w]);
                        }
                    }
                    act
                }
            };
            match act {
                Act::Done => break,
                Act::Descend(w, u) => {
                    stack.push((w, u, g.neighbor_indices(w).collect(), 0));
                }
                Act::Retreat => {
                    let (u, _, _, _) = stack.pop().expect("frame");
                    if let Some(pframe) = stack.last() {
                        let p = pframe.0;
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            // edges above and including (p, u) form one block
                            let mut verts = BTreeSet::new();
                            while let Some((a, b)) = edge_stack.pop() {
                                verts.insert(a);
                                verts.insert(b);
                                if (a, b) == (p, u) {
                                    break;
                                }
                            }
                            raw_blocks.push(verts);
                        }
                    }
                }
            }
        }
    }

    // canonical block order: by sorted vertex-index lists
    let mut blocks_idx: Vec<Vec<usize>> = raw_blocks
        .into_iter()
        .map(|s| s.into_iter().collect::<Vec<_>>())
        .collect();
    blocks_idx.sort();

    let mut containing: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (b, verts) in blocks_idx.iter().enumerate() {
        for &v in verts {
            containing.entry(v).or_default().push(b);
        }
    }
    let cut_idx: Vec<usize> = containing
        .iter()
        .filter(|(_, bs)| bs.len() >= 2)
        .map(|(&v, _)| v)
        .collect();

    let block_tree: Vec<(usize, String)> = blocks_idx
        .iter()
        .enumerate()
        .flat_map(|(b, verts)| {
            verts
                .iter()
                .filter(|v| cut_idx.contains(v))
                .map(move |&v| (b, v))
        })
        .map(|(b, v)| (b, g.name_of(v).to_string()))
        .collect();

    // breadth-first order per component
    let root_idx = root.and_then(|r| g.index_of(r).ok());
    let nblocks = blocks_idx.len();
    let mut seen_block = vec![false; nblocks];
    let mut attach: Vec<Option<String>> = vec![None; nblocks];
    let mut bfs_order = Vec::new();
    for comp in g.components() {
        let comp_set: BTreeSet<usize> = comp.iter().copied().collect();
        let comp_blocks: Vec<usize> = (0..nblocks)
            .filter(|&b| comp_set.contains(&blocks_idx[b][0]))
            .collect();
        if comp_blocks.is_empty() {
            continue; // isolated vertex
        }
        let root_block = root_idx
            .filter(|v| comp_set.contains(v))
            .and_then(|v| {
                comp_blocks
                    .iter()
                    .copied()
                    .find(|&b| blocks_idx[b].contains(&v))
            })
            .unwrap_or(comp_blocks[0]);
        let mut queue = VecDeque::from([root_block]);
        seen_block[root_block] = true;
        while let Some(b) = queue.pop_front() {
            bfs_order.push(b);
            for &v in &blocks_idx[b] {
                if !cut_idx.contains(&v) {
                    continue;
                }
                for &nb in &containing[&v] {
                    if !seen_block[nb] {
                        seen_block[nb] = true;
                        attach[nb] = Some(g.name_of(v).to_string());
                        queue.push_back(nb);
                    }
                }
            }
        }
    }

    BlockDecomposition {
        blocks: blocks_idx
            .iter()
            .map(|verts| verts.iter().map(|&v| g.name_of(v).to_string()).collect())
            .collect(),
        cut_vertices: cut_idx.iter().map(|&v| g.name_of(v).to_string()).collect(),
        block_tree,
        bfs_order,
        attach,
    }
}

fn is_two_connected(g: &Graph) -> bool {
    if g.vertex_count() < 3 || !g.is_connected() {
        return false;
    }
    block_decomposition(g, None).cut_vertices.is_empty()
}

pub fn classify_block(g: &Graph) -> BlockClass {
    let n = g.vertex_count();
    if n == 2 && g.edge_count() == 1 {
        return BlockClass::SingleEdge;
    }
    if n == 4 && g.is_complete() {
        return BlockClass::K4;
    }
    if let Some(len) = g.cycle_length() {
        return if len % 2 == 1 {
            BlockClass::OddCycle(len)
        } else {
            BlockClass::EvenCycle(len)
        };
    }
    if n >= 3 && g.is_complete() {
        return BlockClass::Clique(n);
    }
    if let Some(p) = g.k11p_parameter() {
        if p >= 2 {
            return BlockClass::K11p(p);
        }
    }
    if g.is_bipartite() && is_two_connected(g) {
        return BlockClass::TwoConnectedBipartite;
    }
    BlockClass::Other
}

/// All blocks are K4, 2-connected bipartite, K_{1,1,p} or odd cycles
/// (single edges count as degenerate 2-connected bipartite blocks).
pub fn is_quasi_line_perfect(g: &Graph) -> bool {
    each_block(g, |b| {
        matches!(
            classify_block(b),
            BlockClass::SingleEdge
                | BlockClass::K4
                | BlockClass::OddCycle(_)
                | BlockClass::EvenCycle(_)
                | BlockClass::K11p(_)
                | BlockClass::TwoConnectedBipartite
        )
    })
}

/// All blocks are cliques or cycles of length at least four.
pub fn is_block_cactus(g: &Graph) -> bool {
    each_block(g, |b| {
        b.is_complete() || b.cycle_length().is_some_and(|l| l >= 4)
    })
}

fn each_block(g: &Graph, pred: impl Fn(&Graph) -> bool) -> bool {
    block_decomposition(g, None)
        .blocks
        .iter()
        .all(|verts| pred(&g.induced_subgraph(verts).expect("block vertices exist")))
}
