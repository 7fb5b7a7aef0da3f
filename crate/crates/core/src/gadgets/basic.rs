//! The universal-variable gadget, path transmitters, and the diamond.

use std::collections::BTreeMap;

use crate::graph::{build_named, Graph, NamedGraph};
use crate::listcolor::{ListAssignment, SizeFunction};

use super::{GadgetError, GadgetWithRoles};

/// Six vertices: a 4-cycle `c1..c4` with pendant literal vertices `u` at
/// `c1` and `ubar` at `c3`. All list sizes are 2; the core is a C4, so the
/// gadget is 2-choosable.
pub fn forall_variable_gadget() -> GadgetWithRoles {
    let graph = Graph::from_parts(
        &["u", "ubar", "c1", "c2", "c3", "c4"],
        &[
            ("c1", "c2"),
            ("c2", "c3"),
            ("c3", "c4"),
            ("c4", "c1"),
            ("u", "c1"),
            ("ubar", "c3"),
        ],
    )
    .expect("fixed construction");
    let sizes = SizeFunction::uniform(&graph, 2);
    let mut gadget = GadgetWithRoles {
        graph,
        roles: BTreeMap::new(),
        sizes,
        canonical_assignment: None,
        palette: 3,
    };
    gadget.add_role("u", &["u"]);
    gadget.add_role("ubar", &["ubar"]);
    gadget.add_role("literals", &["u", "ubar"]);
    gadget
}

/// A path `x, w1, .., w{p-1}, y` of length `p` with the 2-list pattern that
/// forces `y` to the target color whenever `x` takes the base color 1.
/// Targets count 0,1,2 in the source construction; the lists here are
/// shifted to palette `{1,2,3}`, so the pin is `x = 1` and the forced color
/// is `target + 1`.
pub fn path_transmitter(p: u32, target: u8) -> Result<GadgetWithRoles, GadgetError> {
    if p < 2 {
        return Err(GadgetError::BadParameters(format!("path length {p} < 2")));
    }
    if target > 2 {
        return Err(GadgetError::BadParameters(format!(
            "target color {target} not in 0..=2"
        )));
    }
    let mut names = vec!["x".to_string()];
    names.extend((1..p).map(|i| format!("w{i}")));
    names.push("y".to_string());
    let mut graph = Graph::new();
    for v in &names {
        graph.add_vertex(v)?;
    }
    for pair in names.windows(2) {
        graph.add_edge(&pair[0], &pair[1])?;
    }

    // 2-lists over {0,1,2}, shifted by +1
    let shift = |a: u8, b: u8| [a + 1, b + 1];
    let n = names.len();
    let mut lists: Vec<[u8; 2]> = Vec::with_capacity(n);
    if target == 0 {
        if p.is_multiple_of(2) {
            lists.resize(n, shift(0, 1));
        } else {
            lists.resize(n - 2, shift(0, 1));
            lists.push(shift(1, 2));
            lists.push(shift(0, 2));
        }
    } else {
        let j = 3 - target; // the third color: {0, target, j} = {0,1,2}
        let ell = if p % 2 == 1 { 0 } else { j };
        lists.push(shift(0, 1));
        lists.resize(n - 1, shift(0, j));
        lists.push(shift(ell, target));
    }
    let mut assignment = ListAssignment::new(3);
    for (v, list) in names.iter().zip(&lists) {
        assignment.set(v, list.iter().copied());
    }

    let sizes = SizeFunction::uniform(&graph, 2);
    let mut gadget = GadgetWithRoles {
        graph,
        roles: BTreeMap::new(),
        sizes,
        canonical_assignment: Some(assignment),
        palette: 3,
    };
    gadget.add_role("x", &["x"]);
    gadget.add_role("y", &["y"]);
    Ok(gadget)
}

/// The diamond K4 minus an edge, sized by vertex degree (2 on the missing
/// edge's endpoints, 3 on the rest).
pub fn diamond_gadget() -> GadgetWithRoles {
    let graph = build_named(&NamedGraph::Diamond).expect("diamond");
    let mut sizes = SizeFunction::new();
    for v in graph.vertices() {
        sizes.set(v, graph.degree(v).expect("vertex") as u8);
    }
    let mut gadget = GadgetWithRoles {
        graph,
        roles: BTreeMap::new(),
        sizes,
        canonical_assignment: None,
        palette: 4,
    };
    gadget.add_role("low", &["v1", "v4"]);
    gadget
}
