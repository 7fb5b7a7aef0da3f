//! Block-tree list coloring: solve the root block, then extend block by
//! block in breadth-first order with the shared cut vertex pinned. With an
//! ideal per-block strategy the extension step never fails; with the exact
//! fallback a failure simply propagates as `None`.

use crate::graph::{block_decomposition, Graph};

use super::{
    color_bipartite_34, greedy_order_color, solve, Coloring, ListAssignment, ListColorError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockStrategy {
    /// Greedy along (pin first, then descending degree, ties canonical).
    Greedy,
    /// The constructive ideal `[3,4]` bipartite colorer.
    Bipartite34,
    /// The exact solver with the cut vertex pinned.
    Exact,
}

pub struct BlockContext<'a> {
    pub block: &'a Graph,
    pub lists: &'a ListAssignment,
    pub pin: Option<(&'a str, u8)>,
    pub is_root: bool,
}

/// Default strategy: exact at the root; greedy whenever the indegree
/// precondition holds along the pin-first order; the bipartite `[3,4]`
/// colorer for bipartite blocks with 3-lists over palette 4; exact otherwise.
pub fn auto_strategy(ctx: &BlockContext) -> BlockStrategy {
    if ctx.is_root {
        return BlockStrategy::Exact;
    }
    let order = pin_first_order(ctx.block, ctx.pin.map(|(v, _)| v));
    if greedy_applies(ctx.block, ctx.lists, &order) {
        return BlockStrategy::Greedy;
    }
    let all_three = ctx
        .block
        .vertices()
        .all(|v| ctx.lists.get(v).is_some_and(|l| l.len() == 3));
    if ctx.lists.palette == 4 && all_three && ctx.block.is_bipartite() {
        return BlockStrategy::Bipartite34;
    }
    BlockStrategy::Exact
}

fn pin_first_order(block: &Graph, pin: Option<&str>) -> Vec<String> {
    let mut order: Vec<String> = block.vertices().map(|s| s.to_string()).collect();
    order.sort_by_key(|v| {
        let deg = block.degree(v).expect("block vertex");
        let idx = block.index_of(v).expect("block vertex");
        (Some(v.as_str()) != pin, usize::MAX - deg, idx)
    });
    order
}

fn greedy_applies(block: &Graph, lists: &ListAssignment, order: &[String]) -> bool {
    let position: std::collections::HashMap<&str, usize> = order
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();
    order.iter().enumerate().all(|(pos, v)| {
        let indegree = block
            .neighbors(v)
            .expect("block vertex")
            .iter()
            .filter(|w| position[**w] < pos)
            .count();
        lists.get(v).is_some_and(|l| l.len() > indegree)
    })
}

/// Colors `g` block by block. The root block of each component is colored
/// first, remaining blocks follow in breadth-first order with their attach
/// vertex pinned; isolated vertices take the first color of their list.
pub fn color_via_blocks(
    g: &Graph,
    l: &ListAssignment,
    pick: impl Fn(&BlockContext) -> BlockStrategy,
) -> Result<Option<Coloring>, ListColorError> {
    l.validate(g)?;
    let decomposition = block_decomposition(g, None);
    let mut coloring = Coloring::new();

    // vertices outside every block are isolated
    let in_blocks: std::collections::BTreeSet<&str> = decomposition
        .blocks
        .iter()
        .flat_map(|b| b.iter().map(|s| s.as_str()))
        .collect();
    for v in g.vertices() {
        if !in_blocks.contains(v) {
            let c = *l
                .get(v)
                .expect("validated")
                .iter()
                .next()
                .expect("nonempty");
            coloring.set(v, c);
        }
    }

    for &bi in &decomposition.bfs_order {
        let verts = &decomposition.blocks[bi];
        let block = g.induced_subgraph(verts).expect("block vertices");
        let lists = l.restrict(verts);
        let pin_owned = decomposition.attach[bi].as_ref().map(|v| {
            (
                v.clone(),
                coloring.get(v).expect("attach vertex already colored"),
            )
        });
        let pin = pin_owned.as_ref().map(|(v, c)| (v.as_str(), *c));
        let ctx = BlockContext {
            block: &block,
            lists: &lists,
            pin,
            is_root: pin.is_none(),
        };
        let sub = match pick(&ctx) {
            BlockStrategy::Exact => {
                let pins: Vec<(&str, u8)> = pin.into_iter().collect();
                match solve(&block, &lists, &pins)? {
                    None => return Ok(None),
                    Some(c) => c,
                }
            }
            BlockStrategy::Greedy => {
                let order = pin_first_order(&block, pin.map(|(v, _)| v));
                let first = match pin {
                    Some((_, c)) => c,
                    None => *lists
                        .get(&order[0])
                        .expect("validated")
                        .iter()
                        .next()
                        .expect("nonempty"),
                };
                greedy_order_color(&block, &order, &lists, first)?
            }
            BlockStrategy::Bipartite34 => {
                let (v, c) = match pin {
                    Some(p) => p,
                    None => {
                        let v = block.vertices().next().expect("block nonempty");
                        (
                            v,
                            *lists
                                .get(v)
                                .expect("validated")
                                .iter()
                                .next()
                                .expect("nonempty"),
                        )
                    }
                };
                color_bipartite_34(&block, &lists, (v, c))?
            }
        };
        for (v, c) in sub.colors {
            coloring.set(&v, c);
        }
    }
    Ok(Some(coloring))
}
