//! Linear-time colorers: greedy coloring along an acyclic orientation, and
//! the constructive ideal `[3,4]` coloring of bipartite graphs.

use std::collections::BTreeSet;

use crate::graph::Graph;

use super::{Coloring, ListAssignment, ListColorError};

/// Colors `order[0]` with `first_color`, then every later vertex with the
/// first available color in its list. Requires `|L(v_i)| >= d^-(v_i) + 1`
/// where `d^-` counts neighbors earlier in the order; under that
/// precondition the greedy pass cannot fail.
pub fn greedy_order_color(
    g: &Graph,
    order: &[String],
    l: &ListAssignment,
    first_color: u8,
) -> Result<Coloring, ListColorError> {
    l.validate(g)?;
    if order.len() != g.vertex_count() {
        return Err(ListColorError::BadOrder(format!("length {}", order.len())));
    }
    let mut position = vec![usize::MAX; g.vertex_count()];
    for (pos, v) in order.iter().enumerate() {
        let vi = g
            .index_of(v)
            .map_err(|_| ListColorError::BadOrder(v.clone()))?;
        if position[vi] != usize::MAX {
            return Err(ListColorError::BadOrder(v.clone()));
        }
        position[vi] = pos;
    }

    for (pos, v) in order.iter().enumerate() {
        let vi = g.index_of(v).expect("checked");
        let indegree = g
            .neighbor_indices(vi)
            .filter(|&w| position[w] < pos)
            .count();
        let size = l.get(v).expect("validated").len();
        if size < indegree + 1 {
            return Err(ListColorError::GreedyPrecondition {
                vertex: v.clone(),
                size,
                indegree,
            });
        }
    }
    if !l.get(&order[0]).expect("validated").contains(&first_color) {
        return Err(ListColorError::PinOutsideList {
            vertex: order[0].clone(),
            color: first_color,
        });
    }

    let mut colors = vec![0u8; g.vertex_count()];
    for (pos, v) in order.iter().enumerate() {
        let vi = g.index_of(v).expect("checked");
        if pos == 0 {
            colors[vi] = first_color;
            continue;
        }
        let used: BTreeSet<u8> = g
            .neighbor_indices(vi)
            .filter(|&w| position[w] < pos)
            .map(|w| colors[w])
            .collect();
        let c = l
            .get(v)
            .expect("validated")
            .iter()
            .copied()
            .find(|c| !used.contains(c));
        colors[vi] = c.expect("guaranteed by the indegree precondition");
    }
    let mut out = Coloring::new();
    for (i, v) in g.vertices().enumerate() {
        out.set(v, colors[i]);
    }
    Ok(out)
}

/// Ideal `[3,4]` coloring of a bipartite graph: the pinned vertex's side uses
/// at most two colors. All lists must have size 3 over palette 4.
pub fn color_bipartite_34(
    g: &Graph,
    l: &ListAssignment,
    pin: (&str, u8),
) -> Result<Coloring, ListColorError> {
    if l.palette != 4 {
        return Err(ListColorError::PaletteMismatch {
            expected: 4,
            got: l.palette,
        });
    }
    l.validate(g)?;
    for v in g.vertices() {
        let size = l.get(v).expect("validated").len();
        if size != 3 {
            return Err(ListColorError::WrongListSize {
                vertex: v.to_string(),
                expected: 3,
                got: size,
            });
        }
    }
    let sides = g.bipartition_sides().ok_or(ListColorError::NotBipartite)?;
    let (v0, c) = pin;
    let v0i = g
        .index_of(v0)
        .map_err(|_| ListColorError::UnknownVertex(v0.to_string()))?;
    if !l.get(v0).expect("validated").contains(&c) {
        return Err(ListColorError::PinOutsideList {
            vertex: v0.to_string(),
            color: c,
        });
    }

    // v0's side is "B"; vertices there missing c all share the list
    // {1,2,3,4} \ {c} and get its first color.
    let b_side = sides[v0i];
    let c2 = (1..=4).find(|&x| x != c).expect("palette has four colors");
    let mut out = Coloring::new();
    for (i, v) in g.vertices().enumerate() {
        let list = l.get(v).expect("validated");
        if sides[i] == b_side {
            out.set(v, if list.contains(&c) { c } else { c2 });
        } else {
            let d = list
                .iter()
                .copied()
                .find(|&x| x != c && x != c2)
                .expect("3-list avoids two colors");
            out.set(v, d);
        }
    }
    Ok(out)
}
