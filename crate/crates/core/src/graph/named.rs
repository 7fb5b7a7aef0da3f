//! Builders for the named graph families, with deterministic vertex naming.
//!
//! Naming schemes:
//! * `cycle(n)`, `path(n)`, `complete(n)` — `v1..vn`;
//! * `completeBipartite(p,q)` — `b1..bp` / `w1..wq`;
//! * `completeTripartite(p,q,r)` — `a1..`, `b1..`, `c1..`;
//! * `k11p(p)` — clique `a`,`b` joined to stable `s1..sp`;
//! * `theta(a,b,c[,d])` — hubs `u`,`v`, path `i` internals `p{i}_1..`;
//! * `gamma(p,q,r)` — cycles `a1..ap`, `b1..bq`, connecting path `q1..`;
//!   `r = 0` shares the single vertex `a1`;
//! * `grid(p,q)` — `r{i}c{j}` carrying coordinates `(i,j)`, 1-based.

use std::str::FromStr;

use super::{Graph, GraphError};

/// Descriptor for a named graph family, e.g. parsed from `theta:2,2,4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedGraph {
    Cycle(u32),
    Path(u32),
    Complete(u32),
    CompleteBipartite(u32, u32),
    CompleteTripartite(u32, u32, u32),
    K11p(u32),
    Theta3(u32, u32, u32),
    Theta4(u32, u32, u32, u32),
    Gamma(u32, u32, u32),
    Grid(u32, u32),
    Chocolate,
    Diamond,
}

impl FromStr for NamedGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        let (name, args) = match s.split_once(':') {
            Some((n, a)) => (n, a),
            None => (s, ""),
        };
        let nums: Vec<u32> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|t| {
                    t.trim().parse::<u32>().map_err(|_| {
                        GraphError::BadDescriptor(format!("bad number {t:?} in {s:?}"))
                    })
                })
                .collect::<Result<_, _>>()?
        };
        let arity = |want: usize| -> Result<(), GraphError> {
            if nums.len() == want {
                Ok(())
            } else {
                Err(GraphError::BadDescriptor(format!(
                    "{name} expects {want} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        match name {
            "cycle" => {
                arity(1)?;
                Ok(NamedGraph::Cycle(nums[0]))
            }
            "path" => {
                arity(1)?;
                Ok(NamedGraph::Path(nums[0]))
            }
            "complete" => {
                arity(1)?;
                Ok(NamedGraph::Complete(nums[0]))
            }
            "bipartite" | "completeBipartite" => {
                arity(2)?;
                Ok(NamedGraph::CompleteBipartite(nums[0], nums[1]))
            }
            "tripartite" | "completeTripartite" => {
                arity(3)?;
                Ok(NamedGraph::CompleteTripartite(nums[0], nums[1], nums[2]))
            }
            "k11p" => {
                arity(1)?;
                Ok(NamedGraph::K11p(nums[0]))
            }
            "theta" => match nums.len() {
                3 => Ok(NamedGraph::Theta3(nums[0], nums[1], nums[2])),
                4 => Ok(NamedGraph::Theta4(nums[0], nums[1], nums[2], nums[3])),
                n => Err(GraphError::BadDescriptor(format!(
                    "theta expects 3 or 4 path lengths, got {n}"
                ))),
            },
            "gamma" => {
                arity(3)?;
                Ok(NamedGraph::Gamma(nums[0], nums[1], nums[2]))
            }
            "grid" => {
                arity(2)?;
                Ok(NamedGraph::Grid(nums[0], nums[1]))
            }
            "chocolate" => {
                arity(0)?;
                Ok(NamedGraph::Chocolate)
            }
            "diamond" => {
                arity(0)?;
                Ok(NamedGraph::Diamond)
            }
            other => Err(GraphError::BadDescriptor(format!(
                "unknown family {other:?}"
            ))),
        }
    }
}

/// Builds the graph described by `spec`.
pub fn build_named(spec: &NamedGraph) -> Result<Graph, GraphError> {
    match *spec {
        NamedGraph::Cycle(n) => cycle(n),
        NamedGraph::Path(n) => path(n),
        NamedGraph::Complete(n) => complete(n),
        NamedGraph::CompleteBipartite(p, q) => complete_bipartite(p, q),
        NamedGraph::CompleteTripartite(p, q, r) => complete_tripartite(p, q, r),
        NamedGraph::K11p(p) => k11p(p),
        NamedGraph::Theta3(a, b, c) => theta(&[a, b, c]),
        NamedGraph::Theta4(a, b, c, d) => theta(&[a, b, c, d]),
        NamedGraph::Gamma(p, q, r) => gamma(p, q, r),
        NamedGraph::Grid(p, q) => Ok(GridGraph::new(p, q)?.into_graph()),
        NamedGraph::Chocolate => Ok(GridGraph::new(2, 3)?.into_graph()),
        NamedGraph::Diamond => diamond(),
    }
}

fn bad(msg: String) -> GraphError {
    GraphError::BadParameters(msg)
}

fn cycle(n: u32) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(bad(format!("cycle needs n >= 3, got {n}")));
    }
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut g = Graph::new();
    for v in &names {
        g.add_vertex(v)?;
    }
    for i in 0..n as usize {
        g.add_edge(&names[i], &names[(i + 1) % n as usize])?;
    }
    Ok(g)
}

fn path(n: u32) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(bad("path needs n >= 1".into()));
    }
    let mut g = Graph::new();
    for i in 1..=n {
        g.add_vertex(&format!("v{i}"))?;
    }
    for i in 1..n {
        g.add_edge(&format!("v{i}"), &format!("v{}", i + 1))?;
    }
    Ok(g)
}

fn complete(n: u32) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(bad("complete needs n >= 1".into()));
    }
    let mut g = Graph::new();
    for i in 1..=n {
        g.add_vertex(&format!("v{i}"))?;
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            g.add_edge(&format!("v{i}"), &format!("v{j}"))?;
        }
    }
    Ok(g)
}

fn complete_bipartite(p: u32, q: u32) -> Result<Graph, GraphError> {
    if p < 1 || q < 1 {
        return Err(bad(format!(
            "completeBipartite needs p,q >= 1, got {p},{q}"
        )));
    }
    let mut g = Graph::new();
    for i in 1..=p {
        g.add_vertex(&format!("b{i}"))?;
    }
    for j in 1..=q {
        g.add_vertex(&format!("w{j}"))?;
    }
    for i in 1..=p {
        for j in 1..=q {
            g.add_edge(&format!("b{i}"), &format!("w{j}"))?;
        }
    }
    Ok(g)
}

fn complete_tripartite(p: u32, q: u32, r: u32) -> Result<Graph, GraphError> {
    if p < 1 || q < 1 || r < 1 {
        return Err(bad(format!(
            "completeTripartite needs p,q,r >= 1, got {p},{q},{r}"
        )));
    }
    let mut g = Graph::new();
    let part = |tag: char, m: u32| (1..=m).map(move |i| format!("{tag}{i}"));
    for v in part('a', p).chain(part('b', q)).chain(part('c', r)) {
        g.add_vertex(&v)?;
    }
    for a in part('a', p) {
        for b in part('b', q) {
            g.add_edge(&a, &b)?;
        }
        for c in part('c', r) {
            g.add_edge(&a, &c)?;
        }
    }
    for b in part('b', q) {
        for c in part('c', r) {
            g.add_edge(&b, &c)?;
        }
    }
    Ok(g)
}

fn k11p(p: u32) -> Result<Graph, GraphError> {
    if p < 1 {
        return Err(bad("k11p needs p >= 1".into()));
    }
    let mut g = Graph::new();
    g.add_vertex("a")?;
    g.add_vertex("b")?;
    g.add_edge("a", "b")?;
    for i in 1..=p {
        let s = format!("s{i}");
        g.add_vertex(&s)?;
        g.add_edge("a", &s)?;
        g.add_edge("b", &s)?;
    }
    Ok(g)
}

/// Theta graph: hubs `u`,`v` joined by internally disjoint paths of the given
/// lengths. At most one path may have length 1 (two would be parallel edges).
fn theta(lengths: &[u32]) -> Result<Graph, GraphError> {
    if lengths.iter().any(|&l| l < 1) {
        return Err(bad("theta path lengths must be >= 1".into()));
    }
    if lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(bad("theta admits at most one path of length 1".into()));
    }
    let mut g = Graph::new();
    g.add_vertex("u")?;
    g.add_vertex("v")?;
    for (i, &len) in lengths.iter().enumerate() {
        let mut prev = "u".to_string();
        for j in 1..len {
            let w = format!("p{}_{j}", i + 1);
            g.add_vertex(&w)?;
            g.add_edge(&prev, &w)?;
            prev = w;
        }
        g.add_edge(&prev, "v")?;
    }
    Ok(g)
}

/// Two disjoint cycles `C_p`, `C_q` joined by a path of length `r`;
/// `r = 0` means the cycles share one vertex.
fn gamma(p: u32, q: u32, r: u32) -> Result<Graph, GraphError> {
    if p < 3 || q < 3 {
        return Err(bad(format!("gamma needs cycle sizes >= 3, got {p},{q}")));
    }
    let mut g = Graph::new();
    for i in 1..=p {
        g.add_vertex(&format!("a{i}"))?;
    }
    for i in 1..=p {
        g.add_edge(&format!("a{i}"), &format!("a{}", i % p + 1))?;
    }
    if r == 0 {
        // second cycle a1, b2, ..., bq
        for i in 2..=q {
            g.add_vertex(&format!("b{i}"))?;
        }
        g.add_edge("a1", "b2")?;
        for i in 2..q {
            g.add_edge(&format!("b{i}"), &format!("b{}", i + 1))?;
        }
        g.add_edge(&format!("b{q}"), "a1")?;
    } else {
        for i in 1..=q {
            g.add_vertex(&format!("b{i}"))?;
        }
        for i in 1..=q {
            g.add_edge(&format!("b{i}"), &format!("b{}", i % q + 1))?;
        }
        let mut prev = "a1".to_string();
        for j in 1..r {
            let w = format!("q{j}");
            g.add_vertex(&w)?;
            g.add_edge(&prev, &w)?;
            prev = w;
        }
        g.add_edge(&prev, "b1")?;
    }
    Ok(g)
}

fn diamond() -> Result<Graph, GraphError> {
    // K4 minus the edge v1v4; v1 and v4 are the degree-2 vertices.
    Graph::from_parts(
        &["v1", "v2", "v3", "v4"],
        &[
            ("v1", "v2"),
            ("v1", "v3"),
            ("v2", "v3"),
            ("v2", "v4"),
            ("v3", "v4"),
        ],
    )
}

/// A `p x q` grid; vertices `r{i}c{j}` carry their coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridGraph {
    graph: Graph,
    rows: u32,
    cols: u32,
}

impl GridGraph {
    pub fn new(rows: u32, cols: u32) -> Result<Self, GraphError> {
        if rows < 1 || cols < 1 {
            return Err(bad(format!("grid needs p,q >= 1, got {rows},{cols}")));
        }
        let mut g = Graph::new();
        for i in 1..=rows {
            for j in 1..=cols {
                let v = Self::vertex_name(i as i64, j as i64);
                g.add_vertex(&v)?;
                g.set_coord(&v, (i as i64, j as i64))?;
            }
        }
        for i in 1..=rows as i64 {
            for j in 1..=cols as i64 {
                if j < cols as i64 {
                    g.add_edge(&Self::vertex_name(i, j), &Self::vertex_name(i, j + 1))?;
                }
                if i < rows as i64 {
                    g.add_edge(&Self::vertex_name(i, j), &Self::vertex_name(i + 1, j))?;
                }
            }
        }
        Ok(GridGraph {
            graph: g,
            rows,
            cols,
        })
    }

    pub fn vertex_name(i: i64, j: i64) -> String {
        format!("r{i}c{j}")
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}
