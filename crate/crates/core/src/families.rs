//! Named graph constructions. All of them are deterministic labelled graphs.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

fn at_least(what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::InvalidParameter(format!("{what} must be at least {min}, got {value}")))
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BasicKind {
    Complete,
    Edgeless,
    Cycle,
    Path,
}

pub fn basic(kind: BasicKind, n: usize) -> Result<Graph> {
    match kind {
        BasicKind::Complete => Ok(Graph::complete(n)),
        BasicKind::Edgeless => Ok(Graph::edgeless(n)),
        BasicKind::Cycle => cycle(n),
        BasicKind::Path => Ok(path(n)),
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle length", n, 3)?;
    Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// `C_n²`; for `n = 5` this is `K5`.
pub fn cycle_square(n: usize) -> Result<Graph> {
    at_least("cycle-square length", n, 5)?;
    Ok(cycle(n)?.square())
}

/// `C_n + K1` with the hub at index `n`.
pub fn wheel(n: usize) -> Result<Graph> {
    at_least("wheel rim length", n, 3)?;
    Ok(cycle(n)?.complete_join(&Graph::edgeless(1)))
}

/// The two bricks obtained from `K5` and the octahedron `K2,2,2` by deleting
/// the edges of one triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BrickKind {
    K5Nabla,
    K222Nabla,
}

impl BrickKind {
    pub const ALL: [BrickKind; 2] = [BrickKind::K5Nabla, BrickKind::K222Nabla];

    /// Short CLI name: `k5` or `k222`.
    pub fn short_name(self) -> &'static str {
        match self {
            BrickKind::K5Nabla => "k5",
            BrickKind::K222Nabla => "k222",
        }
    }

    pub fn from_short_name(name: &str) -> Option<Self> {
        match name {
            "k5" => Some(BrickKind::K5Nabla),
            "k222" => Some(BrickKind::K222Nabla),
            _ => None,
        }
    }
}

impl fmt::Display for BrickKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BrickKind::K5Nabla => "K5-nabla",
            BrickKind::K222Nabla => "K222-nabla",
        })
    }
}

/// Attachment vertices of every brick are `0, 1, 2`.
pub const ATTACHMENTS: [usize; 3] = [0, 1, 2];

pub fn brick(kind: BrickKind) -> Graph {
    match kind {
        // 3 and 4 see everything; 0, 1, 2 only see 3 and 4
        BrickKind::K5Nabla => Graph::from_edge_list(
            5,
            [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        ),
        // parts {0,3} {1,4} {2,5}; triangle 0 1 2 removed
        BrickKind::K222Nabla => Graph::from_edge_list(
            6,
            [(0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)],
        ),
    }
    .expect("valid brick")
}

/// Two bricks glued along their attachment triples, attachment `i` of `a`
/// to attachment `i` of `b`. Vertices of `a` keep their indices; the
/// non-attachment vertices of `b` follow.
pub fn glued_pair(a: BrickKind, b: BrickKind) -> Graph {
    glued_pair_with(a, b, [0, 1, 2])
}

/// As [`glued_pair`] but attachment `i` of `b` is identified with
/// attachment `bijection[i]` of `a`.
pub fn glued_pair_with(a: BrickKind, b: BrickKind, bijection: [usize; 3]) -> Graph {
    let ga = brick(a);
    let gb = brick(b);
    let na = ga.n();
    let map = |v: usize| if v < 3 { bijection[v] } else { na + v - 3 };
    let edges = ga
        .edges()
        .map(|e| (e.u, e.v))
        .chain(gb.edges().map(|e| (map(e.u), map(e.v))));
    Graph::from_edge_list(na + gb.n() - 3, edges).expect("valid gluing")
}

/// Position of `v_i` on the `2k`-cycle.
pub fn f_graph_v(i: usize) -> usize {
    i
}

/// Position of `u_j` on the `2k`-cycle.
pub fn f_graph_u(k: usize, j: usize) -> usize {
    2 * k - j
}

/// Name (`v3`, `u1`, ...) of an `f_graph(k)` vertex.
pub fn f_graph_label(k: usize, vertex: usize) -> String {
    if vertex <= k {
        format!("v{vertex}")
    } else {
        format!("u{}", 2 * k - vertex)
    }
}

/// The `2k`-cycle `v0 v1 ... vk u_{k-1} ... u1`, squared, minus `u1v1` and
/// `u_{k-1}v_{k-1}`, plus the two crossing edges `v1u_{k-1}` and
/// `u1v_{k-1}`. The result is 4-regular with `4k` edges, and the two added
/// edges are exactly the ones that are not double-col-critical.
pub fn f_graph(k: usize) -> Result<Graph> {
    f_graph_with(k, |k| [(f_graph_v(1), f_graph_u(k, k - 1)), (f_graph_u(k, 1), f_graph_v(k - 1))])
}

/// Same deletions as [`f_graph`] but adding `v1v_{k-1}` and `u1u_{k-1}`.
/// These join vertices that are already close on the cycle: for `k = 4`
/// both edges exist before the addition, and for every `k` the sets
/// `{v1..v4}` and `{u1..u4}` become 4-cliques. Kept for comparison only.
pub fn f_graph_as_printed(k: usize) -> Result<Graph> {
    f_graph_with(k, |k| [(f_graph_v(1), f_graph_v(k - 1)), (f_graph_u(k, 1), f_graph_u(k, k - 1))])
}

fn f_graph_with(k: usize, added: impl Fn(usize) -> [(usize, usize); 2]) -> Result<Graph> {
    at_least("f-graph parameter k", k, 4)?;
    let (v, u) = (f_graph_v, |j| f_graph_u(k, j));
    let mut g = cycle(2 * k)?.square();
    g = g.delete_edge(Edge::new(u(1), v(1))?)?;
    g = g.delete_edge(Edge::new(u(k - 1), v(k - 1))?)?;
    for (a, b) in added(k) {
        g = g.add_edge(Edge::new(a, b)?)?;
    }
    Ok(g)
}

/// The two added edges of [`f_graph`], `v1u_{k-1}` and `u1v_{k-1}`.
pub fn f_graph_crossing_edges(k: usize) -> [Edge; 2] {
    [
        Edge::new(f_graph_v(1), f_graph_u(k, k - 1)).expect("distinct"),
        Edge::new(f_graph_u(k, 1), f_graph_v(k - 1)).expect("distinct"),
    ]
}

const ICOSAHEDRON_EDGES: [(usize, usize); 30] = [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
    (1, 6), (1, 7), (2, 7), (2, 8), (3, 8), (3, 9), (4, 9), (4, 10), (5, 10), (5, 6),
    (6, 7), (7, 8), (8, 9), (9, 10), (6, 10),
    (6, 11), (7, 11), (8, 11), (9, 11), (10, 11),
];

pub fn icosahedron() -> Graph {
    Graph::from_edge_list(12, ICOSAHEDRON_EDGES).expect("valid icosahedron")
}

/// Toroidal grid `Z_rows × Z_cols` with all diagonals in one direction.
/// Vertex `(i, j)` has index `i * cols + j`.
pub fn toroidal_triangulated(rows: usize, cols: usize) -> Result<Graph> {
    at_least("torus rows", rows, 3)?;
    at_least("torus cols", cols, 3)?;
    let id = |i: usize, j: usize| (i % rows) * cols + j % cols;
    let mut edges = Vec::with_capacity(3 * rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            edges.push((id(i, j), id(i + 1, j)));
            edges.push((id(i, j), id(i, j + 1)));
            edges.push((id(i, j), id(i + 1, j + 1)));
        }
    }
    Graph::from_edge_list(rows * cols, edges)
}

/// `F_k + \overline{K_{p-5}}`; `p = 5` gives `F_k`.
pub fn ratio_family(p: usize, k: usize) -> Result<Graph> {
    at_least("ratio-family p", p, 5)?;
    Ok(f_graph(k)?.complete_join(&Graph::edgeless(p - 5)))
}

/// `C_6² + K_t`.
pub fn g_t(t: usize) -> Result<Graph> {
    Ok(cycle_square(6)?.complete_join(&Graph::complete(t)))
}

/// Every named construction at a spread of small parameters, labelled by
/// its CLI spelling.
pub fn family_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut push = |name: String, g: Result<Graph>| out.push((name, g.expect("valid parameters")));
    for n in 1..=7 {
        push(format!("complete {n}"), Ok(Graph::complete(n)));
    }
    for n in 1..=4 {
        push(format!("edgeless {n}"), Ok(Graph::edgeless(n)));
    }
    for n in 3..=8 {
        push(format!("cycle {n}"), cycle(n));
    }
    for n in 2..=6 {
        push(format!("path {n}"), Ok(path(n)));
    }
    for n in 5..=12 {
        push(format!("cycle-square {n}"), cycle_square(n));
    }
    for n in 3..=8 {
        push(format!("wheel {n}"), wheel(n));
    }
    for kind in BrickKind::ALL {
        push(format!("brick {}", kind.short_name()), Ok(brick(kind)));
    }
    for (i, a) in BrickKind::ALL.into_iter().enumerate() {
        for b in BrickKind::ALL.into_iter().skip(i) {
            push(format!("glued {} {}", a.short_name(), b.short_name()), Ok(glued_pair(a, b)));
        }
    }
    for k in 4..=10 {
        push(format!("f-graph {k}"), f_graph(k));
        push(format!("f-graph-as-printed {k}"), f_graph_as_printed(k));
    }
    push("icosahedron".into(), Ok(icosahedron()));
    for (r, c) in [(3, 3), (3, 4), (4, 4)] {
        push(format!("torus {r} {c}"), toroidal_triangulated(r, c));
    }
    for (p, k) in [(6, 4), (6, 8), (7, 5)] {
        push(format!("ratio-family {p} {k}"), ratio_family(p, k));
    }
    for t in 1..=3 {
        push(format!("gt {t}"), g_t(t));
    }
    out
}
