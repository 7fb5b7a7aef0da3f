//! The pre-extension six-cycle reduction and grid padding.

use std::collections::BTreeMap;

use crate::graph::{Graph, GraphError, GridGraph};
use crate::listcolor::{ListAssignment, SizeFunction};

use super::{GadgetError, GadgetWithRoles};

/// Adds three vertices closing a six-cycle `v1,u1,v2,u2,v3,u3` through the
/// given same-part vertices, labels the cycle as the 2-list role set, and
/// attaches the rigid assignment that forces three distinct colors on
/// `v1, v2, v3` in every solution.
pub fn c6_preext_reduction(
    g: &Graph,
    v1: &str,
    v2: &str,
    v3: &str,
) -> Result<GadgetWithRoles, GadgetError> {
    let spine = [v1, v2, v3];
    for v in spine {
        g.index_of(v)?;
    }
    if v1 == v2 || v2 == v3 || v1 == v3 {
        return Err(GadgetError::BadParameters(
            "spine vertices must be distinct".into(),
        ));
    }
    let sides = g.bipartition_sides().ok_or(GadgetError::NotBipartite)?;
    let comps = g.components();
    let comp_of = |v: &str| -> usize {
        let idx = g.index_of(v).expect("checked");
        comps
            .iter()
            .position(|c| c.contains(&idx))
            .expect("component")
    };
    for (i, a) in spine.iter().enumerate() {
        for b in &spine[i + 1..] {
            if comp_of(a) == comp_of(b)
                && sides[g.index_of(a).expect("checked")] != sides[g.index_of(b).expect("checked")]
            {
                return Err(GadgetError::DifferentParts(a.to_string(), b.to_string()));
            }
        }
    }

    let mut graph = g.clone();
    let prefix = if ["u1", "u2", "u3"].iter().any(|u| g.has_vertex(u)) {
        "c6#"
    } else {
        ""
    };
    let u: Vec<String> = (1..=3).map(|i| format!("{prefix}u{i}")).collect();
    for name in &u {
        graph.add_vertex(name)?;
    }
    graph.add_edge(v1, &u[0])?;
    graph.add_edge(&u[0], v2)?;
    graph.add_edge(v2, &u[1])?;
    graph.add_edge(&u[1], v3)?;
    graph.add_edge(v3, &u[2])?;
    graph.add_edge(&u[2], v1)?;

    let cycle: Vec<String> = vec![
        v1.to_string(),
        u[0].clone(),
        v2.to_string(),
        u[1].clone(),
        v3.to_string(),
        u[2].clone(),
    ];
    let mut sizes = SizeFunction::new();
    for v in graph.vertices() {
        sizes.set(v, if cycle.iter().any(|c| c == v) { 2 } else { 3 });
    }
    let mut canonical = ListAssignment::new(3);
    for v in graph.vertices() {
        canonical.set(v, [1, 2, 3]);
    }
    let rigid: [(usize, [u8; 2]); 6] = [
        (0, [1, 2]), // v1
        (1, [2, 3]), // u1
        (2, [1, 3]), // v2
        (3, [1, 2]), // u2
        (4, [2, 3]), // v3
        (5, [1, 3]), // u3
    ];
    for (i, list) in rigid {
        canonical.set(&cycle[i], list);
    }

    let mut gadget = GadgetWithRoles {
        graph,
        roles: BTreeMap::new(),
        sizes,
        canonical_assignment: Some(canonical),
        palette: 3,
    };
    gadget.roles.insert("C".to_string(), cycle);
    gadget.add_role("v1", &[v1]);
    gadget.add_role("v2", &[v2]);
    gadget.add_role("v3", &[v3]);
    Ok(gadget)
}

/// A subgrid padded to its bounding-box grid.
#[derive(Debug, Clone)]
pub struct PaddedGrid {
    pub grid: GridGraph,
    pub sizes: SizeFunction,
    /// original vertex -> grid vertex (by shared coordinates).
    pub vertex_map: BTreeMap<String, String>,
}

/// Embeds an induced subgrid (a coordinate-carrying graph) into its bounding
/// box and assigns size 5 to every padding vertex. Rejects coordinate-less
/// vertices and inputs that are not induced subgrids.
pub fn pad_subgrid_to_grid(s: &Graph, f_s: &SizeFunction) -> Result<PaddedGrid, GadgetError> {
    if s.vertex_count() == 0 {
        return Err(GadgetError::BadParameters("empty subgrid".into()));
    }
    let mut coords = Vec::new();
    for v in s.vertices() {
        let c = s
            .coord_of(v)
            .ok_or_else(|| GraphError::MissingCoordinates(v.to_string()))?;
        if f_s.get(v).is_none() {
            return Err(GadgetError::BadParameters(format!("f({v:?}) missing")));
        }
        coords.push((v.to_string(), c));
    }
    let occupied: BTreeMap<(i64, i64), &str> =
        coords.iter().map(|(v, c)| (*c, v.as_str())).collect();
    if occupied.len() != coords.len() {
        return Err(GadgetError::NotSubgrid("duplicate coordinates".into()));
    }
    // induced: unit-distance pairs are exactly the edges
    for (v, (i, j)) in &coords {
        for (di, dj) in [(0i64, 1i64), (1, 0)] {
            let there = occupied.get(&(i + di, j + dj));
            if let Some(w) = there {
                if !s.has_edge(v, w) {
                    return Err(GadgetError::NotSubgrid(format!(
                        "unit-distance vertices {v:?} and {w:?} are not adjacent"
                    )));
                }
            }
        }
    }
    for (u, v) in s.edges() {
        let (ui, uj) = s.coord_of(&u).expect("checked");
        let (vi, vj) = s.coord_of(&v).expect("checked");
        if (ui - vi).abs() + (uj - vj).abs() != 1 {
            return Err(GadgetError::NotSubgrid(format!(
                "edge {u:?}-{v:?} is not a unit step"
            )));
        }
    }

    let min_i = coords.iter().map(|(_, (i, _))| *i).min().expect("nonempty");
    let max_i = coords.iter().map(|(_, (i, _))| *i).max().expect("nonempty");
    let min_j = coords.iter().map(|(_, (_, j))| *j).min().expect("nonempty");
    let max_j = coords.iter().map(|(_, (_, j))| *j).max().expect("nonempty");
    let rows = (max_i - min_i + 1) as u32;
    let cols = (max_j - min_j + 1) as u32;
    let grid = GridGraph::new(rows, cols)?;

    let mut sizes = SizeFunction::uniform(grid.graph(), 5);
    let mut vertex_map = BTreeMap::new();
    for (v, (i, j)) in &coords {
        let name = GridGraph::vertex_name(i - min_i + 1, j - min_j + 1);
        sizes.set(&name, f_s.get(v).expect("checked"));
        vertex_map.insert(v.clone(), name);
    }
    Ok(PaddedGrid {
        grid,
        sizes,
        vertex_map,
    })
}
