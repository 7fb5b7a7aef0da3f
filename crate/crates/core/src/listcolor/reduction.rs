//! Polynomial list coloring for hypergraph-reduction instances.
//!
//! In such a graph the clique `V0` carries full lists, so any proper list
//! coloring colors `V0` with all `m+1` colors and squeezes the stable part
//! `VX ∪ VS` into the two colors `{i, j}` of `v0_0` and `v0_1`. That makes a
//! quadratic pair sweep exact: for every ordered pair `(i, j)` check that no
//! `VS` list forbids both, and that some clause vertex can take `j` because
//! all its element neighbors accept `i`.

use std::collections::BTreeSet;

use crate::gadgets::GadgetWithRoles;
use crate::graph::Graph;

use super::{Coloring, ListAssignment, ListColorError};

fn role<'a>(gadget: &'a GadgetWithRoles, name: &str) -> Result<&'a Vec<String>, ListColorError> {
    gadget
        .roles
        .get(name)
        .ok_or_else(|| ListColorError::MalformedInstance(format!("missing role {name:?}")))
}

fn check(cond: bool, msg: &str) -> Result<(), ListColorError> {
    if cond {
        Ok(())
    } else {
        Err(ListColorError::MalformedInstance(msg.to_string()))
    }
}

/// Decides list colorability of a hypergraph-reduction instance in
/// O(m^2 (n + m)) and returns the canonical coloring it finds. Agrees with
/// the exact solver on every valid instance.
pub fn color_reduction_class(
    gadget: &GadgetWithRoles,
    l: &ListAssignment,
) -> Result<Option<Coloring>, ListColorError> {
    let g = &gadget.graph;
    l.validate(g)?;
    let v0 = role(gadget, "V0")?.clone();
    let vf = role(gadget, "VF")?.clone();
    let vx = role(gadget, "VX")?.clone();
    let vs = role(gadget, "VS")?.clone();

    let m = vf.len();
    check(v0.len() == m + 1, "|V0| must be m+1")?;
    check(m >= 2, "need m >= 2")?;
    let k = (m + 1) as u8;
    check(l.palette == k, "palette must be m+1")?;
    let total = v0.len() + vf.len() + vx.len() + vs.len();
    check(
        total == g.vertex_count(),
        "roles must partition the vertex set",
    )?;

    let full: BTreeSet<u8> = (1..=k).collect();
    for v in v0.iter().chain(vf.iter()) {
        check(l.get(v) == Some(&full), "V0 and VF need full lists")?;
    }
    for v in &vx {
        check(l.get(v).is_some_and(|s| s.len() == m), "VX needs m-lists")?;
    }
    for v in &vs {
        check(
            l.get(v).is_some_and(|s| s.len() == m - 1),
            "VS needs (m-1)-lists",
        )?;
    }

    validate_shape(g, &v0, &vf, &vx, &vs)?;

    // hyperedges read off the adjacency between VF and VX
    let members: Vec<Vec<&String>> = vf
        .iter()
        .map(|f| vx.iter().filter(|x| g.has_edge(f, x)).collect())
        .collect();

    for i in 1..=k {
        for j in 1..=k {
            if i == j {
                continue;
            }
            let vs_ok = vs.iter().all(|v| {
                let list = l.get(v).expect("validated");
                list.contains(&i) || list.contains(&j)
            });
            if !vs_ok {
                continue;
            }
            let clause = members
                .iter()
                .position(|xs| xs.iter().all(|x| l.get(x).expect("validated").contains(&i)));
            let clause = match clause {
                None => continue,
                Some(c) => c,
            };
            return Ok(Some(build_coloring(
                l, &v0, &vf, &vx, &vs, &members, i, j, clause,
            )));
        }
    }
    Ok(None)
}

fn validate_shape(
    g: &Graph,
    v0: &[String],
    vf: &[String],
    vx: &[String],
    vs: &[String],
) -> Result<(), ListColorError> {
    let pairwise_clique = |set: &[String]| -> bool {
        set.iter()
            .enumerate()
            .all(|(a, u)| set.iter().skip(a + 1).all(|v| g.has_edge(u, v)))
    };
    check(pairwise_clique(v0), "V0 must induce a clique")?;
    check(pairwise_clique(vf), "VF must induce a clique")?;
    let stable: Vec<&String> = vx.iter().chain(vs.iter()).collect();
    for (a, u) in stable.iter().enumerate() {
        for v in stable.iter().skip(a + 1) {
            check(!g.has_edge(u, v), "VX and VS must be stable")?;
        }
    }
    for f in vf {
        check(g.has_edge(&v0[0], f), "v0_0 must see all of VF")?;
        check(!g.has_edge(&v0[1], f), "v0_1 must not see VF")?;
    }
    for t in stable {
        check(!g.has_edge(&v0[0], t), "v0_0 must not see VX or VS")?;
        check(!g.has_edge(&v0[1], t), "v0_1 must not see VX or VS")?;
        for hub in &v0[2..] {
            check(g.has_edge(hub, t), "v0_2.. must see all of VX and VS")?;
        }
        for f in vf {
            if vs.contains(t) {
                check(!g.has_edge(f, t), "VF must not see VS")?;
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn build_coloring(
    l: &ListAssignment,
    v0: &[String],
    vf: &[String],
    vx: &[String],
    vs: &[String],
    members: &[Vec<&String>],
    i: u8,
    j: u8,
    clause: usize,
) -> Coloring {
    let k = l.palette;
    let mut coloring = Coloring::new();
    coloring.set(&v0[0], i);
    coloring.set(&v0[1], j);
    let mut spare: Vec<u8> = (1..=k).filter(|&c| c != i && c != j).collect();
    for v in &v0[2..] {
        coloring.set(v, spare.pop().expect("m-1 spare colors"));
    }
    let mut spare: Vec<u8> = (1..=k).filter(|&c| c != i && c != j).collect();
    spare.reverse();
    for (fi, f) in vf.iter().enumerate() {
        if fi == clause {
            coloring.set(f, j);
        } else {
            coloring.set(f, spare.pop().expect("m-1 spare colors"));
        }
    }
    let forced: BTreeSet<&String> = members[clause].iter().copied().collect();
    for x in vx {
        let list = l.get(x).expect("validated");
        if forced.contains(x) || list.contains(&i) {
            coloring.set(x, i);
        } else {
            coloring.set(x, j);
        }
    }
    for s in vs {
        let list = l.get(s).expect("validated");
        coloring.set(s, if list.contains(&i) { i } else { j });
    }
    coloring
}
