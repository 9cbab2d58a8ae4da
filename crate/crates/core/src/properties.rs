//! Structural properties every graph must satisfy, checked against a
//! claimed [`CriticalityReport`]. Passing a tampered report lets the checks
//! act as their own negative control.

use serde::Serialize;

use crate::classifier::graph6_or_size;
use crate::criticality::CriticalityReport;
use crate::degeneracy::colouring_number;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub property: &'static str,
    pub graph6: String,
    pub detail: String,
}

struct Collector<'a> {
    g: &'a Graph,
    out: Vec<Violation>,
}

impl Collector<'_> {
    fn fail(&mut self, property: &'static str, detail: String) {
        self.out.push(Violation {
            property,
            graph6: graph6_or_size(self.g),
            detail,
        });
    }
}

pub const DROP_BY_ONE: &str = "deletion-drops-col-by-at-most-one";
pub const CRITICAL_MIN_DEGREE: &str = "critical-implies-col-equals-min-degree-plus-one";
pub const DCC_VERTEX_CRITICAL: &str = "dcc-implies-vertex-critical";
pub const DCC_SMALL_COL_CLIQUE: &str = "dcc-with-col-at-most-4-is-clique";
pub const DCC_COMMON_NEIGHBOUR: &str = "dcc-edge-has-common-min-degree-neighbour";
pub const DCC_NO_BIG_CLIQUE: &str = "non-complete-dcc-has-no-clique-of-order-col-minus-1";
pub const DCC_TWO_CONNECTED: &str = "dcc-with-col-at-least-3-is-2-connected";
pub const DCC5_DEGREE4_END: &str = "dcc-col-5-edge-has-degree-4-end";
pub const COL4_INCIDENT: &str = "col-4-critical-dcc-edges-pairwise-incident";
pub const COL4_HALF: &str = "col-4-critical-dcc-edges-at-most-half";
pub const THM_MIN_DEGREE: &str = "dcc5-min-degree-4";
pub const THM_DEGREE4_END: &str = "dcc5-edge-has-degree-4-end";
pub const THM_COMMON_4_NEIGHBOUR: &str = "dcc5-edge-has-common-4-neighbour";
pub const THM_NO_DENSE_REMAINDER: &str = "dcc5-edge-removal-leaves-no-min-degree-3-subgraph";

fn common_neighbours<'a>(g: &'a Graph, x: usize, y: usize) -> impl Iterator<Item = usize> + 'a {
    g.neighbours(x).iter().copied().filter(move |&w| g.has_edge(w, y))
}

/// All general properties. Each is an implication whose hypothesis is read
/// from `claimed`; conclusions are computed from `g` (or from `claimed`
/// where the property relates two claimed fields).
pub fn check_all(g: &Graph, claimed: &CriticalityReport) -> Vec<Violation> {
    let mut c = Collector { g, out: Vec::new() };
    let col = claimed.col;
    let delta = g.min_degree();

    for e in g.edges() {
        let after = colouring_number(&g.delete_edge(e).expect("edge present"));
        if after > col || after + 1 < col {
            c.fail(DROP_BY_ONE, format!("col {col} -> {after} after deleting edge {e}"));
        }
    }
    for v in g.vertices() {
        let after = colouring_number(&g.delete_vertex(v).expect("vertex present"));
        if after > col || after + 1 < col {
            c.fail(DROP_BY_ONE, format!("col {col} -> {after} after deleting vertex {v}"));
        }
    }

    if (claimed.is_col_critical || claimed.is_col_vertex_critical) && !g.is_empty() && delta.map(|d| d + 1) != Some(col) {
        c.fail(CRITICAL_MIN_DEGREE, format!("col {col}, min degree {delta:?}"));
    }

    if claimed.is_double_col_critical {
        dcc_properties(&mut c, claimed);
    }

    if claimed.is_col_critical && col == 4 && !g.is_complete() {
        let dcc = &claimed.dcc_edges;
        for (i, e) in dcc.iter().enumerate() {
            for f in &dcc[i + 1..] {
                if !e.is_incident(f) {
                    c.fail(COL4_INCIDENT, format!("{e} and {f} are disjoint"));
                }
            }
        }
        if 2 * claimed.dcc_edge_count > g.m() {
            c.fail(COL4_HALF, format!("{} of {} edges", claimed.dcc_edge_count, g.m()));
        }
    }
    c.out
}

fn dcc_properties(c: &mut Collector<'_>, claimed: &CriticalityReport) {
    let g = c.g;
    let col = claimed.col;
    if !claimed.is_col_vertex_critical {
        c.fail(DCC_VERTEX_CRITICAL, "report says not col-vertex-critical".into());
    }
    if col <= 4 && !(g.is_complete() && g.n() == col) {
        c.fail(DCC_SMALL_COL_CLIQUE, format!("col {col} but not K{col}"));
    }
    let delta = g.min_degree().unwrap_or(0);
    if !g.is_empty() && delta + 1 != col {
        c.fail(DCC_COMMON_NEIGHBOUR, format!("min degree {delta} with col {col}"));
    }
    // for K2 the graph G - x - y is empty and there is nothing to share
    if g.n() >= 3 {
        for e in g.edges() {
            if !common_neighbours(g, e.u, e.v).any(|w| g.degree(w) == delta) {
                c.fail(DCC_COMMON_NEIGHBOUR, format!("edge {e} has no common neighbour of degree {delta}"));
            }
        }
    }
    if !g.is_complete() && col >= 1 && g.has_clique(col - 1) {
        c.fail(DCC_NO_BIG_CLIQUE, format!("contains K{}", col - 1));
    }
    if col >= 3 && !g.is_two_connected() {
        c.fail(DCC_TWO_CONNECTED, format!("col {col} but not 2-connected"));
    }
    if col == 5 {
        for e in g.edges() {
            if g.degree(e.u) != 4 && g.degree(e.v) != 4 {
                c.fail(DCC5_DEGREE4_END, format!("edge {e} has end degrees {} and {}", g.degree(e.u), g.degree(e.v)));
            }
        }
    }
}

/// The four structural facts used to classify double-col-critical graphs
/// with colouring number 5. Only meaningful when `claimed` says the graph is
/// such a graph; otherwise nothing is checked.
pub fn theorem_properties(g: &Graph, claimed: &CriticalityReport) -> Vec<Violation> {
    let mut c = Collector { g, out: Vec::new() };
    if !(claimed.is_double_col_critical && claimed.col == 5) {
        return c.out;
    }
    if g.min_degree() != Some(4) {
        c.fail(THM_MIN_DEGREE, format!("min degree {:?}", g.min_degree()));
    }
    for e in g.edges() {
        if g.degree(e.u) != 4 && g.degree(e.v) != 4 {
            c.fail(THM_DEGREE4_END, format!("edge {e}"));
        }
        if !common_neighbours(g, e.u, e.v).any(|w| g.degree(w) == 4) {
            c.fail(THM_COMMON_4_NEIGHBOUR, format!("edge {e}"));
        }
        let rest = g.delete_vertices(&[e.u, e.v]).expect("endpoints present");
        if colouring_number(&rest) > 3 {
            c.fail(THM_NO_DENSE_REMAINDER, format!("edge {e}"));
        }
    }
    c.out
}
