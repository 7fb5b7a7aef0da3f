//! The double-diamond gadget H and its two uses: lifting 2-lists to 3-lists
//! for choosability (attach H to every 2-list vertex), and the `[3,4]`
//! list-coloring reduction that blocks one color at a vertex.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::choosability::enumerate_assignments;
use crate::graph::Graph;
use crate::listcolor::{feasible, Coloring, ListAssignment, SizeFunction};

use super::{copy_renamed, GadgetError, GadgetWithRoles};

fn h_graph() -> Graph {
    // two diamonds sharing the merged degree-2 vertex X; Y and Z are the
    // remaining degree-2 vertices, a*/b* the degree-3 pairs
    Graph::from_parts(
        &["X", "Y", "Z", "a1", "b1", "a2", "b2"],
        &[
            ("a1", "b1"),
            ("X", "a1"),
            ("X", "b1"),
            ("Y", "a1"),
            ("Y", "b1"),
            ("a2", "b2"),
            ("X", "a2"),
            ("X", "b2"),
            ("Z", "a2"),
            ("Z", "b2"),
        ],
    )
    .expect("fixed construction")
}

fn h_sizes(g: &Graph) -> SizeFunction {
    let mut sizes = SizeFunction::new();
    for v in g.vertices() {
        sizes.set(v, if matches!(v, "X" | "Y" | "Z") { 2 } else { 3 });
    }
    sizes
}

/// The first infeasible f_H-assignment over palette 4 whose lists on
/// {X, Y, Z} miss a color, in plain (symmetry-off) enumeration order.
/// This is the derivation procedure for the gadget's canonical assignment;
/// the result is cached and frozen by tests.
pub fn h_witness_assignment() -> ListAssignment {
    static CANON: OnceLock<ListAssignment> = OnceLock::new();
    CANON
        .get_or_init(|| {
            let g = h_graph();
            let sizes = h_sizes(&g);
            let s_role: Vec<String> = ["X", "Y", "Z"].iter().map(|s| s.to_string()).collect();
            enumerate_assignments(&g, &sizes, 4, false, Some((&s_role, 3)))
                .expect("valid space")
                .find(|l| !feasible(&g, l, &[]).expect("valid instance"))
                .expect("H has a constrained infeasible assignment")
        })
        .clone()
}

/// The 7-vertex gadget H with roles X, Y, Z, size 2 on them and 3 elsewhere,
/// palette 4, and its derived infeasible canonical assignment.
pub fn gadget_h() -> GadgetWithRoles {
    let graph = h_graph();
    let sizes = h_sizes(&graph);
    let mut gadget = GadgetWithRoles {
        graph,
        roles: BTreeMap::new(),
        sizes,
        canonical_assignment: Some(h_witness_assignment()),
        palette: 4,
    };
    gadget.add_role("X", &["X"]);
    gadget.add_role("Y", &["Y"]);
    gadget.add_role("Z", &["Z"]);
    gadget.add_role("S", &["X", "Y", "Z"]);
    gadget
}

/// Result of attaching one H per designated vertex.
#[derive(Debug, Clone)]
pub struct AttachedH {
    pub graph: Graph,
    /// Uniformly 3.
    pub sizes: SizeFunction,
    /// The 3-coloring certificate (host graph on two colors, every X/Y/Z on
    /// the third); present iff the host graph is bipartite.
    pub certificate: Option<Coloring>,
    /// (host vertex, name prefix of its gadget copy).
    pub attachments: Vec<(String, String)>,
}

/// Adds a gadget H per vertex of `two_list_vertices` and links its X, Y, Z
/// to that vertex. The resulting size function is uniformly 3 (palette 4
/// intended).
pub fn attach_h_everywhere(
    g: &Graph,
    two_list_vertices: &[String],
) -> Result<AttachedH, GadgetError> {
    if two_list_vertices.is_empty() {
        return Err(GadgetError::BadParameters(
            "no vertices to attach to".into(),
        ));
    }
    let h = h_graph();
    let mut graph = g.clone();
    let mut attachments = Vec::new();
    for v in two_list_vertices {
        graph.index_of(v)?;
        let prefix = format!("{v}#");
        copy_renamed(&mut graph, &h, |name| format!("{prefix}{name}"))?;
        for role in ["X", "Y", "Z"] {
            graph.add_edge(v, &format!("{prefix}{role}"))?;
        }
        attachments.push((v.clone(), prefix));
    }
    let sizes = SizeFunction::uniform(&graph, 3);
    let certificate = g.bipartition_sides().map(|sides| {
        let mut cert = Coloring::new();
        for (i, v) in g.vertices().enumerate() {
            cert.set(v, sides[i] + 1);
        }
        for (_, prefix) in &attachments {
            for (name, c) in [
                ("X", 3),
                ("Y", 3),
                ("Z", 3),
                ("a1", 1),
                ("b1", 2),
                ("a2", 1),
                ("b2", 2),
            ] {
                cert.set(&format!("{prefix}{name}"), c);
            }
        }
        cert
    });
    Ok(AttachedH {
        graph,
        sizes,
        certificate,
        attachments,
    })
}

/// Result of the `[3,4]` list-coloring reduction.
#[derive(Debug, Clone)]
pub struct ListcolReduction34 {
    pub graph: Graph,
    pub lists: ListAssignment,
    pub certificate: Option<Coloring>,
    pub attachments: Vec<(String, String)>,
}

const SIGMA_BASE_X: [u8; 3] = [2, 3, 4];
const SIGMA_BASE_Y: [u8; 3] = [1, 3, 4];
const SIGMA_BASE_Z: [u8; 3] = [1, 2, 3];
const SIGMA_BASE_INNER: [u8; 3] = [1, 2, 4];

fn rotate(c: u8, t: u8) -> u8 {
    (c - 1 + t) % 4 + 1
}

/// Turns a `{2,3}`-list instance over palette 4 into a 3-list instance:
/// every 2-list vertex `v` receives a gadget H_v whose lists block, at `v`,
/// the one rotated color added to `L(v)`. Feasibility is preserved exactly.
pub fn listcol_reduction_34(
    g: &Graph,
    lists: &ListAssignment,
) -> Result<ListcolReduction34, GadgetError> {
    if lists.palette != 4 {
        return Err(GadgetError::BadParameters(format!(
            "palette must be 4, got {}",
            lists.palette
        )));
    }
    lists.validate(g)?;
    for v in g.vertices() {
        let s = lists.get(v).expect("validated").len();
        if s != 2 && s != 3 {
            return Err(GadgetError::BadParameters(format!(
                "list sizes must be 2 or 3, vertex {v:?} has {s}"
            )));
        }
    }

    let h = h_graph();
    let mut graph = g.clone();
    let mut out = lists.clone();
    let mut attachments = Vec::new();
    let two_list: Vec<String> = g
        .vertices()
        .filter(|v| lists.get(v).expect("validated").len() == 2)
        .map(|v| v.to_string())
        .collect();
    for v in &two_list {
        let list = lists.get(v).expect("validated");
        // smallest rotation whose image of color 3 misses L(v)
        let t = (0..4)
            .find(|&t| !list.contains(&rotate(3, t)))
            .expect("a 2-list misses two of four colors");
        let blocked = rotate(3, t);
        let prefix = format!("{v}#");
        copy_renamed(&mut graph, &h, |name| format!("{prefix}{name}"))?;
        for role in ["X", "Y", "Z"] {
            graph.add_edge(v, &format!("{prefix}{role}"))?;
        }
        let mut extended = list.clone();
        extended.insert(blocked);
        out.set(v, extended.iter().copied());
        out.set(&format!("{prefix}X"), SIGMA_BASE_X.map(|c| rotate(c, t)));
        out.set(&format!("{prefix}Y"), SIGMA_BASE_Y.map(|c| rotate(c, t)));
        out.set(&format!("{prefix}Z"), SIGMA_BASE_Z.map(|c| rotate(c, t)));
        for inner in ["a1", "b1", "a2", "b2"] {
            out.set(
                &format!("{prefix}{inner}"),
                SIGMA_BASE_INNER.map(|c| rotate(c, t)),
            );
        }
        attachments.push((v.clone(), prefix));
    }

    let certificate = g.bipartition_sides().map(|sides| {
        let mut cert = Coloring::new();
        for (i, v) in g.vertices().enumerate() {
            cert.set(v, sides[i] + 1);
        }
        for (_, prefix) in &attachments {
            for (name, c) in [
                ("X", 3),
                ("Y", 3),
                ("Z", 3),
                ("a1", 1),
                ("b1", 2),
                ("a2", 1),
                ("b2", 2),
            ] {
                cert.set(&format!("{prefix}{name}"), c);
            }
        }
        cert
    });
    Ok(ListcolReduction34 {
        graph,
        lists: out,
        certificate,
        attachments,
    })
}
