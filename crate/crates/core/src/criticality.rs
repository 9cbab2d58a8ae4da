//! Criticality predicates with respect to the colouring number.

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::degeneracy::colouring_number;
use crate::graph::{Edge, Graph};

/// Below this many edges the per-edge checks run sequentially.
const PARALLEL_EDGE_THRESHOLD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub col: usize,
    pub is_col_critical: bool,
    pub is_col_vertex_critical: bool,
    #[serde(serialize_with = "serialize_edges")]
    pub dcc_edges: Vec<Edge>,
    pub dcc_edge_count: usize,
    pub edge_count: usize,
    /// `dcc_edge_count / edge_count`; absent for edgeless graphs.
    #[serde(serialize_with = "serialize_ratio_opt")]
    pub dcc_ratio: Option<Ratio<usize>>,
    pub is_double_col_critical: bool,
    pub is_two_connected: bool,
}

/// Exact `a/b`, including `1/1` and `0/1`.
pub fn ratio_string(r: &Ratio<usize>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `a/b` (or a bare integer) into a reduced ratio.
pub fn parse_ratio(text: &str) -> Option<Ratio<usize>> {
    let text = text.trim();
    let (a, b) = match text.split_once('/') {
        Some((a, b)) => (a.trim().parse().ok()?, b.trim().parse().ok()?),
        None => (text.parse().ok()?, 1),
    };
    (b != 0).then(|| Ratio::new(a, b))
}

fn serialize_edges<S: Serializer>(edges: &[Edge], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(edges.iter().map(Edge::to_string))
}

fn serialize_ratio_opt<S: Serializer>(r: &Option<Ratio<usize>>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&ratio_string(r)),
        None => s.serialize_none(),
    }
}

pub fn is_col_vertex_critical(g: &Graph) -> bool {
    let col = colouring_number(g);
    g.vertices()
        .all(|v| colouring_number(&g.delete_vertex(v).expect("vertex in range")) < col)
}

/// Single edge and vertex deletions suffice: col is monotone, so every
/// proper subgraph sits inside some `G - e` or `G - v`.
pub fn is_col_critical(g: &Graph) -> bool {
    let col = colouring_number(g);
    g.edges()
        .all(|e| colouring_number(&g.delete_edge(e).expect("edge present")) < col)
        && is_col_vertex_critical(g)
}

fn is_dcc_edge(g: &Graph, col: usize, e: Edge) -> bool {
    let rest = g.delete_vertices(&[e.u, e.v]).expect("endpoints in range");
    colouring_number(&rest) + 2 <= col
}

/// Edges `e` with `col(G - V(e)) <= col(G) - 2`, in lexicographic order.
pub fn double_col_critical_edges(g: &Graph) -> Vec<Edge> {
    let col = colouring_number(g);
    let edges: Vec<Edge> = g.edges().collect();
    if edges.len() < PARALLEL_EDGE_THRESHOLD {
        edges.into_iter().filter(|&e| is_dcc_edge(g, col, e)).collect()
    } else {
        edges.into_par_iter().filter(|&e| is_dcc_edge(g, col, e)).collect()
    }
}

/// Connected and every edge double-col-critical.
pub fn is_double_col_critical(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    let col = colouring_number(g);
    g.edges().all(|e| is_dcc_edge(g, col, e))
}

pub fn criticality_report(g: &Graph) -> CriticalityReport {
    let col = colouring_number(g);
    let dcc_edges = double_col_critical_edges(g);
    let edge_count = g.m();
    let dcc_edge_count = dcc_edges.len();
    let connected = g.is_connected();
    CriticalityReport {
        col,
        is_col_critical: is_col_critical(g),
        is_col_vertex_critical: is_col_vertex_critical(g),
        dcc_ratio: (edge_count > 0).then(|| Ratio::new(dcc_edge_count, edge_count)),
        is_double_col_critical: connected && dcc_edge_count == edge_count,
        is_two_connected: g.is_two_connected(),
        dcc_edges,
        dcc_edge_count,
        edge_count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn wheel(n: usize) -> Graph {
        cycle(n).complete_join(&Graph::edgeless(1))
    }

    /// Every proper subgraph, by brute force over vertex masks and edge masks.
    fn col_critical_by_subgraphs(g: &Graph) -> bool {
        let col = colouring_number(g);
        let n = g.n();
        let edges: Vec<Edge> = g.edges().collect();
        for mask in 0u32..1 << n {
            let keep: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let inner: Vec<(usize, usize)> = edges
                .iter()
                .filter(|e| mask >> e.u & 1 == 1 && mask >> e.v & 1 == 1)
                .map(|e| (keep.binary_search(&e.u).unwrap(), keep.binary_search(&e.v).unwrap()))
                .collect();
            for sub in 0u64..1 << inner.len() {
                let full = mask as usize == (1 << n) - 1 && sub == (1 << inner.len()) - 1;
                if full {
                    continue;
                }
                let chosen = inner
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| sub >> i & 1 == 1)
                    .map(|(_, &e)| e);
                let h = Graph::from_edge_list(keep.len(), chosen).unwrap();
                if colouring_number(&h) >= col {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn vertex_criticality() {
        for n in 3..9 {
            assert!(is_col_vertex_critical(&cycle(n)));
        }
        assert!(!is_col_vertex_critical(&path(4)));
        assert!(is_col_vertex_critical(&cycle(6).square()));
        assert!(is_col_vertex_critical(&Graph::empty()));
    }

    #[test]
    fn col_criticality() {
        for n in 1..7 {
            assert!(is_col_critical(&Graph::complete(n)));
        }
        let chorded = cycle(6).add_edge(Edge::new(0, 3).unwrap()).unwrap();
        assert!(!is_col_critical(&chorded));
        let k4_tail = Graph::complete(4).disjoint_union(&Graph::edgeless(1));
        assert!(!is_col_critical(&k4_tail));
    }

    #[test]
    fn single_deletions_agree_with_all_subgraphs() {
        let samples = [
            cycle(5),
            path(4),
            Graph::complete(4),
            wheel(4),
            cycle(6),
            cycle(6).add_edge(Edge::new(0, 3).unwrap()).unwrap(),
            Graph::complete(3).disjoint_union(&Graph::complete(3)),
            Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap(),
        ];
        for g in &samples {
            assert_eq!(is_col_critical(g), col_critical_by_subgraphs(g), "{g:?}");
        }
    }

    #[test]
    fn dcc_edges_examples() {
        let w5 = wheel(5);
        let hub = 5;
        let dcc = double_col_critical_edges(&w5);
        assert_eq!(dcc.len(), 5);
        assert!(dcc.iter().all(|e| e.v == hub));
        assert!(!is_double_col_critical(&w5));

        assert_eq!(double_col_critical_edges(&Graph::complete(4)).len(), 6);
        assert!(is_double_col_critical(&Graph::complete(4)));
        for n in 5..10 {
            assert!(is_double_col_critical(&cycle(n).square()), "C{n}^2");
        }
    }

    #[test]
    fn reports() {
        let r = criticality_report(&cycle(6).square());
        assert_eq!(r.col, 5);
        assert!(r.is_double_col_critical && r.is_col_critical && r.is_two_connected);
        assert_eq!(r.dcc_ratio, Some(Ratio::new(1, 1)));
        assert_eq!(ratio_string(&r.dcc_ratio.unwrap()), "1/1");

        let tree = Graph::from_edge_list(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let r = criticality_report(&tree);
        assert_eq!(r.col, 2);
        assert!(r.dcc_edges.is_empty());
        assert_eq!(r.dcc_ratio, Some(Ratio::new(0, 1)));

        let k2 = criticality_report(&Graph::complete(2));
        assert_eq!(k2.dcc_edge_count, 1);
        assert!(k2.is_double_col_critical);

        let empty = criticality_report(&Graph::edgeless(3));
        assert_eq!(empty.dcc_ratio, None);
        assert!(!empty.is_double_col_critical);
        assert!(criticality_report(&Graph::edgeless(1)).is_double_col_critical);
    }

    #[test]
    fn report_json_shape() {
        let json = serde_json::to_value(criticality_report(&cycle(4))).unwrap();
        assert_eq!(json["dcc_ratio"], "0/1");
        assert_eq!(json["dcc_edges"], serde_json::json!([]));
        let json = serde_json::to_value(criticality_report(&Graph::complete(3))).unwrap();
        assert_eq!(json["dcc_edges"], serde_json::json!(["0-1", "0-2", "1-2"]));
        assert_eq!(json["dcc_ratio"], "1/1");
    }

    #[test]
    fn ratio_parsing() {
        assert_eq!(parse_ratio("1/10"), Some(Ratio::new(1, 10)));
        assert_eq!(parse_ratio(" 2/4 "), Some(Ratio::new(1, 2)));
        assert_eq!(parse_ratio("3"), Some(Ratio::new(3, 1)));
        assert_eq!(parse_ratio("1/0"), None);
        assert_eq!(parse_ratio("a/b"), None);
        assert_eq!(parse_ratio("-1/2"), None);
    }

    #[test]
    fn parallel_path_keeps_order() {
        let g = cycle(40).square();
        let dcc = double_col_critical_edges(&g);
        assert!(g.m() >= PARALLEL_EDGE_THRESHOLD);
        assert_eq!(dcc, g.edges().collect::<Vec<_>>());
    }
}
