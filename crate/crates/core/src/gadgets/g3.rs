//! The triangle-free gadgets over palette 5: the 18-vertex building block
//! made of four pentagons, the 49-vertex assembly of three glued copies, and
//! the 148-vertex candidate (three assemblies under a common apex).

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::listcolor::SizeFunction;

use super::{copy_renamed, GadgetError, GadgetWithRoles};

const G3_TWO_LIST: [&str; 4] = ["C", "E", "F", "H"];

fn g3_graph() -> Graph {
    let mut g = Graph::new();
    for v in [
        "A", "B", "C", "D", "E", "F", "G", "H", // two outer C5's glued on AB
        "a", "b", "c", "d", "e", // inner C5 matched to (A,B,C,D,E)
        "ap", "bp", "f", "g", "h", // inner C5 matched to (A,B,F,G,H)
    ] {
        g.add_vertex(v).expect("fresh");
    }
    let edges = [
        // C1 = (A,B,C,D,E)
        ("A", "B"),
        ("B", "C"),
        ("C", "D"),
        ("D", "E"),
        ("E", "A"),
        // C2 = (A,B,F,G,H), glued along AB
        ("B", "F"),
        ("F", "G"),
        ("G", "H"),
        ("H", "A"),
        // C3 = (a,b,c,d,e)
        ("a", "b"),
        ("b", "c"),
        ("c", "d"),
        ("d", "e"),
        ("e", "a"),
        // C4 = (ap,bp,f,g,h)
        ("ap", "bp"),
        ("bp", "f"),
        ("f", "g"),
        ("g", "h"),
        ("h", "ap"),
        // matching C1 -- C3
        ("A", "a"),
        ("B", "b"),
        ("C", "c"),
        ("D", "d"),
        ("E", "e"),
        // matching C2 -- C4
        ("A", "ap"),
        ("B", "bp"),
        ("F", "f"),
        ("G", "g"),
        ("H", "h"),
    ];
    for (u, v) in edges {
        g.add_edge(u, v).expect("valid edge");
    }
    g
}

/// The 18-vertex block: two pentagons glued on an edge, each matched to an
/// inner pentagon. Size 2 on C, E, F, H and 3 elsewhere; palette 5.
pub fn gadget_g3() -> GadgetWithRoles {
    let graph = g3_graph();
    let mut sizes = SizeFunction::new();
    for v in graph.vertices() {
        sizes.set(v, if G3_TWO_LIST.contains(&v) { 2 } else { 3 });
    }
    let mut gadget = GadgetWithRoles {
        graph,
        roles: BTreeMap::new(),
        sizes,
        canonical_assignment: None,
        palette: 5,
    };
    gadget.add_role("A", &["A"]);
    gadget.add_role("S", &G3_TWO_LIST);
    gadget
}

/// How the three copies of the block are pairwise glued: `pairs[i]` names
/// the vertex of copy `i+1` identified with a vertex of copy `(i+1) % 3 +
/// 1`, besides the globally shared `A`. The source construction does not
/// pin these down; the default identifies each copy's `E` with the next
/// copy's `H`, which meets every stated constraint (|S| = 9, center degree
/// 12, triangle-free, 49 vertices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueSpec {
    pub pairs: [(String, String); 3],
}

impl Default for GlueSpec {
    fn default() -> Self {
        let eh = ("E".to_string(), "H".to_string());
        GlueSpec {
            pairs: [eh.clone(), eh.clone(), eh],
        }
    }
}

/// Three copies of the block sharing the center `A` and pairwise glued per
/// `spec`. Rejects glue specifications that identify vertices of unequal
/// list size, create a triangle, or fail |S| = 9.
pub fn gadget_g(spec: &GlueSpec) -> Result<GadgetWithRoles, GadgetError> {
    let block = gadget_g3();
    for (x, y) in &spec.pairs {
        for name in [x, y] {
            if !block.graph.has_vertex(name) || name == "A" {
                return Err(GadgetError::GlueRejected(format!(
                    "bad glue vertex {name:?}"
                )));
            }
        }
        if block.sizes.get(x) != block.sizes.get(y) {
            return Err(GadgetError::GlueRejected(format!(
                "glued pair {x:?}/{y:?} mixes list sizes"
            )));
        }
    }

    // identified vertex of pair i keeps the copy-(i+1) name
    let merged_name = |copy: usize, v: &str| -> String {
        if v == "A" {
            return "A".to_string();
        }
        let i = copy - 1; // 0-based
        if v == spec.pairs[i].0 {
            return format!("g{copy}#{v}");
        }
        let prev = (i + 2) % 3; // copy gluing ONTO this one
        if v == spec.pairs[prev].1 {
            return format!("g{}#{}", prev + 1, spec.pairs[prev].0);
        }
        format!("g{copy}#{v}")
    };

    let mut graph = Graph::new();
    graph.add_vertex("A")?;
    for copy in 1..=3 {
        for v in block.graph.vertices() {
            let name = merged_name(copy, v);
            if !graph.has_vertex(&name) {
                graph.add_vertex(&name)?;
            }
        }
    }
    for copy in 1..=3 {
        for (u, v) in block.graph.edges() {
            let (nu, nv) = (merged_name(copy, &u), merged_name(copy, &v));
            if nu == nv {
                return Err(GadgetError::GlueRejected(format!(
                    "glue collapses the edge {u}-{v} of copy {copy}"
                )));
            }
            graph.add_edge(&nu, &nv)?;
        }
    }

    let mut sizes = SizeFunction::new();
    let mut s_role: Vec<String> = Vec::new();
    for copy in 1..=3 {
        for v in block.graph.vertices() {
            let name = merged_name(copy, v);
            sizes.set(&name, block.sizes.get(v).expect("block size"));
            if G3_TWO_LIST.contains(&v) && !s_role.contains(&name) {
                s_role.push(name);
            }
        }
    }
    s_role.sort_by_key(|v| graph.index_of(v).expect("vertex"));

    if s_role.len() != 9 {
        return Err(GadgetError::GlueRejected(format!(
            "|S| = {}, need 9",
            s_role.len()
        )));
    }
    if graph.contains_triangle() {
        return Err(GadgetError::GlueRejected("glue creates a triangle".into()));
    }

    let mut gadget = GadgetWithRoles {
        graph,
        roles: BTreeMap::new(),
        sizes,
        canonical_assignment: None,
        palette: 5,
    };
    gadget.add_role("A", &["A"]);
    gadget.roles.insert("S".to_string(), s_role);
    Ok(gadget)
}

/// Three copies of the 49-vertex assembly plus one apex adjacent to all
/// 27 black (size-2) vertices: the 148-vertex triangle-free candidate.
/// Structural only; sizes are uniformly 3 for the intended `[3,5]` claim.
pub fn candidate_148(spec: &GlueSpec) -> Result<GadgetWithRoles, GadgetError> {
    let g_one = gadget_g(spec)?;
    let mut graph = Graph::new();
    graph.add_vertex("apex")?;
    let mut black = Vec::new();
    for copy in 1..=3 {
        let map = |v: &str| format!("G{copy}#{v}");
        copy_renamed(&mut graph, &g_one.graph, map)?;
        for v in g_one.role_set("S").expect("S role") {
            let name = format!("G{copy}#{v}");
            graph.add_edge("apex", &name)?;
            black.push(name);
        }
    }
    let sizes = SizeFunction::uniform(&graph, 3);
    let mut gadget = GadgetWithRoles {
        graph,
        roles: BTreeMap::new(),
        sizes,
        canonical_assignment: None,
        palette: 5,
    };
    gadget.add_role("apex", &["apex"]);
    gadget.roles.insert("black".to_string(), black);
    Ok(gadget)
}
