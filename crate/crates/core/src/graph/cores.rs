//! Cores (repeated deletion of degree-1 vertices) and the structural
//! classification of core components into the families that characterize
//! 2- and `[2,3]`-choosability.

use super::{Graph, GraphError};

/// Result of the core computation. Replaying `removal_order` in reverse
/// reconstructs the input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreResult {
    pub core: Graph,
    /// `(vertex, (vertex, neighbor))` pairs in removal order; the edge is the
    /// single edge incident to the vertex at the moment of removal.
    pub removal_order: Vec<(String, (String, String))>,
}

/// Connected-core classification. `Theta222m(m)` is the theta graph with two
/// paths of length 2 and one of length `2m`; `K2m(m)` is `K_{2,m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreClass {
    K1,
    EvenCycle(usize),
    Theta222m(usize),
    K2m(usize),
    Other,
}

/// Removes degree-1 vertices (with their incident edge) until only isolated
/// vertices and vertices of degree >= 2 remain. Ties break by canonical
/// vertex order; the result is independent of removal order.
pub fn compute_core(g: &Graph) -> CoreResult {
    compute_core_by(g, |alive_deg1| alive_deg1[0])
}

/// Same as [`compute_core`], but picks among removable vertices by the given
/// priority order. Exists to witness order-independence (confluence) in tests.
pub fn compute_core_with_priority(g: &Graph, priority: &[String]) -> CoreResult {
    let pos = |v: &str| priority.iter().position(|p| p == v).unwrap_or(usize::MAX);
    compute_core_by(g, |alive_deg1| {
        *alive_deg1
            .iter()
            .min_by_key(|&&i| (pos(g.name_of(i)), i))
            .expect("nonempty")
    })
}

fn compute_core_by(g: &Graph, pick: impl Fn(&[usize]) -> usize) -> CoreResult {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree_of_index(v)).collect();
    let mut order = Vec::new();
    loop {
        let deg1: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] == 1).collect();
        if deg1.is_empty() {
            break;
        }
        let v = pick(&deg1);
        let u = g
            .neighbor_indices(v)
            .find(|&u| alive[u])
            .expect("degree-1 vertex has a live neighbor");
        alive[v] = false;
        deg[u] -= 1;
        deg[v] = 0;
        order.push((
            g.name_of(v).to_string(),
            (g.name_of(v).to_string(), g.name_of(u).to_string()),
        ));
    }
    let keep: Vec<&str> = (0..n).filter(|&v| alive[v]).map(|v| g.name_of(v)).collect();
    let core = g.induced_subgraph(&keep).expect("kept vertices exist");
    CoreResult {
        core,
        removal_order: order,
    }
}

/// Classifies a connected core by degree-sequence analysis (no general
/// isomorphism testing). Rejects inputs with a degree-1 vertex.
pub fn classify_core_component(g: &Graph) -> Result<CoreClass, GraphError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GraphError::BadParameters("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(GraphError::BadParameters(
            "core component must be connected".into(),
        ));
    }
    if let Some(v) = g.vertices().find(|v| g.degree(v).unwrap() == 1) {
        return Err(GraphError::BadParameters(format!(
            "vertex {v:?} has degree 1: not a core"
        )));
    }
    if n == 1 {
        return Ok(CoreClass::K1);
    }
    if let Some(len) = g.cycle_length() {
        return Ok(if len % 2 == 0 {
            CoreClass::EvenCycle(len)
        } else {
            CoreClass::Other
        });
    }
    if let Some(m) = theta_22_2m(g) {
        return Ok(CoreClass::Theta222m(m));
    }
    if let Some((p, q)) = g.complete_bipartite_parameters() {
        if p == 2 {
            return Ok(CoreClass::K2m(q));
        }
    }
    Ok(CoreClass::Other)
}

/// Detects theta_{2,2,2m}: two degree-3 hubs joined by three internally
/// disjoint paths with lengths {2, 2, 2m}, all other vertices of degree 2.
fn theta_22_2m(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let hubs: Vec<usize> = (0..n).filter(|&v| g.degree_of_index(v) == 3).collect();
    if hubs.len() != 2 {
        return None;
    }
    if (0..n).any(|v| !hubs.contains(&v) && g.degree_of_index(v) != 2) {
        return None;
    }
    let (h0, h1) = (hubs[0], hubs[1]);
    let mut lengths = Vec::new();
    let mut internal = 0usize;
    for start in g.neighbor_indices(h0) {
        // walk the degree-2 chain from h0 through `start`
        let mut prev = h0;
        let mut cur = start;
        let mut len = 1usize;
        while cur != h1 {
            if cur == h0 || g.degree_of_index(cur) != 2 {
                return None;
            }
            internal += 1;
            let next = g.neighbor_indices(cur).find(|&w| w != prev)?;
            prev = cur;
            cur = next;
            len += 1;
        }
        lengths.push(len);
    }
    if lengths.len() != 3 || internal + 2 != n {
        return None;
    }
    lengths.sort_unstable();
    if lengths[0] == 2 && lengths[1] == 2 && lengths[2] % 2 == 0 {
        Some(lengths[2] / 2)
    } else {
        None
    }
}
