//! Colouring number (degeneracy + 1).
//!
//! The fast path is smallest-last elimination. Two exponential oracles
//! evaluate the definitions directly and exist to cross-check it: a minimum
//! over vertex orderings of the maximum back-degree, and a maximum of the
//! minimum degree over induced subgraphs.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{check_permutation, Graph};
use crate::limits;

/// A smallest-last elimination run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegeneracyCertificate {
    /// Removal order; a permutation of the vertices.
    pub order: Vec<usize>,
    /// Degree of `order[i]` in the graph of not-yet-removed vertices at the
    /// moment it is removed.
    pub removal_degree: Vec<usize>,
    pub col: usize,
}

impl DegeneracyCertificate {
    /// Replays the removals on `g` and checks every recorded degree and the
    /// claimed colouring number.
    pub fn verify(&self, g: &Graph) -> bool {
        if check_permutation(&self.order, g.n()).is_err() {
            return false;
        }
        let Ok(replayed) = removal_degrees(g, &self.order) else {
            return false;
        };
        let col = replayed.iter().max().map_or(0, |d| d + 1);
        replayed == self.removal_degree && col == self.col
    }

    /// Colouring order (reverse of the removal order).
    pub fn colouring_order(&self) -> Vec<usize> {
        self.order.iter().rev().copied().collect()
    }
}

/// Degree of each vertex, in removal order, among the vertices not yet
/// removed.
pub fn removal_degrees(g: &Graph, order: &[usize]) -> Result<Vec<usize>> {
    check_permutation(order, g.n())?;
    let mut removed = vec![false; g.n()];
    Ok(order
        .iter()
        .map(|&v| {
            removed[v] = true;
            g.neighbours(v).iter().filter(|&&w| !removed[w]).count()
        })
        .collect())
}

/// Smallest-last ordering. Ties go to the lowest vertex index.
///
/// Vertices sit in per-degree buckets; a degree decrement pushes a fresh
/// entry into the lower bucket and leaves the old one to be skipped lazily.
/// Buckets are min-heaps so the tie-break is exact.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyCertificate {
    let n = g.n();
    let max_deg = g.max_degree().unwrap_or(0);
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut buckets: Vec<BinaryHeap<Reverse<usize>>> = vec![BinaryHeap::new(); max_deg + 1];
    for v in g.vertices() {
        buckets[degree[v]].push(Reverse(v));
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut removal_degree = Vec::with_capacity(n);
    let mut low = 0;
    while order.len() < n {
        while buckets[low].is_empty() {
            low += 1;
        }
        let Reverse(v) = buckets[low].pop().expect("non-empty bucket");
        if removed[v] || degree[v] != low {
            continue;
        }
        removed[v] = true;
        order.push(v);
        removal_degree.push(low);
        for &w in g.neighbours(v) {
            if !removed[w] {
                degree[w] -= 1;
                buckets[degree[w]].push(Reverse(w));
            }
        }
        low = low.saturating_sub(1);
    }
    let col = removal_degree.iter().max().map_or(0, |d| d + 1);
    DegeneracyCertificate {
        order,
        removal_degree,
        col,
    }
}

/// col(G); zero for K0.
pub fn colouring_number(g: &Graph) -> usize {
    degeneracy_ordering(g).col
}

fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::SizeGuard { what, size, limit })
    } else {
        Ok(())
    }
}

/// Minimum over all vertex orderings of the maximum back-degree, plus one.
/// Branch-and-bound over permutation prefixes: a prefix whose running
/// maximum already reaches the best complete value cannot improve it.
pub fn colouring_number_bruteforce(g: &Graph) -> Result<usize> {
    let n = g.n();
    guard("permutation oracle", n, limits::bruteforce_permutation_limit())?;
    if n == 0 {
        return Ok(0);
    }
    let rows = g.bit_rows();
    let mut best = usize::MAX;
    permutation_search(&rows, 0, 0, &mut best);
    Ok(best + 1)
}

fn permutation_search(rows: &[u64], placed: u64, running_max: usize, best: &mut usize) {
    let n = rows.len();
    if placed.count_ones() as usize == n {
        *best = (*best).min(running_max);
        return;
    }
    for v in 0..n {
        if placed >> v & 1 == 1 {
            continue;
        }
        let back = (rows[v] & placed).count_ones() as usize;
        let next = running_max.max(back);
        if next >= *best {
            continue;
        }
        permutation_search(rows, placed | 1 << v, next, best);
    }
}

/// One plus the largest minimum degree of a non-empty induced subgraph,
/// found by sweeping every vertex subset.
pub fn colouring_number_subset_sweep(g: &Graph) -> Result<usize> {
    let n = g.n();
    guard("subset oracle", n, limits::subset_sweep_limit())?;
    if n == 0 {
        return Ok(0);
    }
    let rows = g.bit_rows();
    let best = (1u64..1 << n)
        .map(|set| {
            (0..n)
                .filter(|&v| set >> v & 1 == 1)
                .map(|v| (rows[v] & set).count_ones() as usize)
                .min()
                .expect("non-empty subset")
        })
        .max()
        .expect("n >= 1");
    Ok(best + 1)
}

/// `k = col(G) - 1` and a vertex set `S` with `δ(G[S]) = k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinDegreeWitness {
    pub k: usize,
    pub vertices: Vec<usize>,
}

/// The suffix of the smallest-last order starting at the first step whose
/// removal degree is maximal. Each remainder's minimum degree equals the
/// degree removed there, so that suffix induces minimum degree `col - 1`.
pub fn max_min_degree_witness(g: &Graph) -> Result<MinDegreeWitness> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let cert = degeneracy_ordering(g);
    let k = cert.col - 1;
    let start = cert
        .removal_degree
        .iter()
        .position(|&d| d == k)
        .expect("maximum is attained");
    let mut vertices = cert.order[start..].to_vec();
    vertices.sort_unstable();
    Ok(MinDegreeWitness { k, vertices })
}

/// A col-critical subgraph `F ⊆ G` with `col(F) = δ(F) + 1 = col(G)`,
/// returned with the original indices of its vertices (ascending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalSubgraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

pub fn col_critical_subgraph(g: &Graph) -> Result<Graph> {
    Ok(col_critical_subgraph_labelled(g)?.graph)
}

/// Starts from the minimum-degree witness and shrinks it while the minimum
/// degree stays at `k = col(G) - 1`.
///
/// Vertices go first, lowest index first, and each trial deletion is
/// followed by peeling to the k-core, so the loop also escapes situations
/// where no single vertex can go but a smaller k-core exists. Edges go
/// afterwards in lexicographic order; an edge can go exactly when both ends
/// have degree above `k`.
pub fn col_critical_subgraph_labelled(g: &Graph) -> Result<CriticalSubgraph> {
    let witness = max_min_degree_witness(g)?;
    let k = witness.k;
    let n = g.n();
    let mut alive = vec![false; n];
    for &v in &witness.vertices {
        alive[v] = true;
    }
    let mut adj: Vec<BTreeSet<usize>> = g
        .vertices()
        .map(|v| {
            if alive[v] {
                g.neighbours(v).iter().copied().filter(|&w| alive[w]).collect()
            } else {
                BTreeSet::new()
            }
        })
        .collect();

    loop {
        let mut changed = false;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let mut trial = alive.clone();
            trial[v] = false;
            peel_to_core(&adj, &mut trial, k);
            if trial.iter().any(|&a| a) {
                alive = trial;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for v in 0..n {
        if alive[v] {
            adj[v].retain(|&w| alive[w]);
        } else {
            adj[v].clear();
        }
    }

    for u in 0..n {
        let partners: Vec<usize> = adj[u].iter().copied().filter(|&w| w > u).collect();
        for w in partners {
            if adj[u].len() > k && adj[w].len() > k {
                adj[u].remove(&w);
                adj[w].remove(&u);
            }
        }
    }

    let vertices: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    let lists = vertices
        .iter()
        .map(|&v| adj[v].iter().map(|&w| index[w]).collect())
        .collect();
    Ok(CriticalSubgraph {
        graph: Graph::from_raw_lists(lists),
        vertices,
    })
}

/// Repeatedly drops alive vertices with fewer than `k` alive neighbours.
fn peel_to_core(adj: &[BTreeSet<usize>], alive: &mut [bool], k: usize) {
    let mut degree: Vec<usize> = adj
        .iter()
        .enumerate()
        .map(|(v, list)| {
            if alive[v] {
                list.iter().filter(|&&w| alive[w]).count()
            } else {
                0
            }
        })
        .collect();
    let mut queue: VecDeque<usize> = (0..adj.len())
        .filter(|&v| alive[v] && degree[v] < k)
        .collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in &adj[v] {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] + 1 == k {
                    queue.push_back(w);
                }
            }
        }
    }
}

/// First-fit colouring along `order`: each vertex receives the smallest
/// positive colour not used by an earlier neighbour. `colours[v]` is the
/// colour of vertex `v`.
pub fn greedy_colour_along(g: &Graph, order: &[usize]) -> Result<Vec<usize>> {
    check_permutation(order, g.n())?;
    let mut colour = vec![0usize; g.n()];
    let mut used = Vec::new();
    for &v in order {
        used.clear();
        used.resize(g.degree(v) + 2, false);
        for &w in g.neighbours(v) {
            if colour[w] != 0 && colour[w] < used.len() {
                used[colour[w]] = true;
            }
        }
        colour[v] = (1..used.len()).find(|&c| !used[c]).expect("degree + 1 colours suffice");
    }
    Ok(colour)
}

pub fn is_proper_colouring(g: &Graph, colours: &[usize]) -> bool {
    colours.len() == g.n() && g.edges().all(|e| colours[e.u] != colours[e.v])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edge_list(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    fn wheel5() -> Graph {
        cycle(5).complete_join(&Graph::edgeless(1))
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::from_edge_list(10, edges).unwrap()
    }

    #[test]
    fn colouring_number_examples() {
        assert_eq!(colouring_number(&Graph::empty()), 0);
        assert_eq!(colouring_number(&Graph::edgeless(4)), 1);
        assert_eq!(colouring_number(&cycle(6).square()), 5);
        assert_eq!(colouring_number(&star(5)), 2);
        assert_eq!(colouring_number(&petersen()), 4);
        let tree = Graph::from_edge_list(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        assert_eq!(colouring_number(&tree), 2);
    }

    #[test]
    fn orderings() {
        let c4 = degeneracy_ordering(&cycle(4));
        assert_eq!(c4.col, 3);
        assert_eq!(c4.removal_degree.iter().max(), Some(&2));
        assert!(c4.verify(&cycle(4)));
        let k4 = degeneracy_ordering(&Graph::complete(4));
        assert_eq!(k4.removal_degree, vec![3, 2, 1, 0]);
        assert_eq!(k4.order, vec![0, 1, 2, 3]);
        assert_eq!(k4.col, 4);
        assert_eq!(degeneracy_ordering(&star(5)).col, 2);
        let empty = degeneracy_ordering(&Graph::empty());
        assert_eq!((empty.col, empty.order.len()), (0, 0));
    }

    #[test]
    fn tie_break_prefers_lowest_index() {
        // path 0-1-2-3: leaves 0 and 3 tie at degree 1
        let p4 = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(degeneracy_ordering(&p4).order, vec![0, 1, 2, 3]);
    }

    #[test]
    fn certificate_rejects_tampering() {
        let g = wheel5();
        let mut cert = degeneracy_ordering(&g);
        assert!(cert.verify(&g));
        cert.removal_degree[0] += 1;
        assert!(!cert.verify(&g));
        let mut cert = degeneracy_ordering(&g);
        cert.order.swap(0, 1);
        assert!(!cert.verify(&g) || cert.removal_degree == removal_degrees(&g, &cert.order).unwrap());
        let mut cert = degeneracy_ordering(&g);
        cert.col += 1;
        assert!(!cert.verify(&g));
    }

    #[test]
    fn bruteforce_examples_and_guard() {
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(colouring_number_bruteforce(&p3).unwrap(), 2);
        assert_eq!(colouring_number_bruteforce(&cycle(4)).unwrap(), 3);
        assert_eq!(colouring_number_bruteforce(&Graph::complete(5)).unwrap(), 5);
        assert_eq!(colouring_number_bruteforce(&Graph::empty()).unwrap(), 0);
        assert!(matches!(
            colouring_number_bruteforce(&Graph::edgeless(10)),
            Err(Error::SizeGuard { .. })
        ));
        assert_eq!(colouring_number_subset_sweep(&cycle(6).square()).unwrap(), 5);
        assert!(matches!(
            colouring_number_subset_sweep(&Graph::edgeless(8)),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn witnesses() {
        let c6sq = cycle(6).square();
        let w = max_min_degree_witness(&c6sq).unwrap();
        assert_eq!((w.k, w.vertices), (4, (0..6).collect::<Vec<_>>()));
        let w = max_min_degree_witness(&wheel5()).unwrap();
        assert_eq!((w.k, w.vertices), (3, (0..6).collect::<Vec<_>>()));
        let forest = Graph::from_edge_list(5, [(0, 1), (3, 4)]).unwrap();
        let w = max_min_degree_witness(&forest).unwrap();
        assert_eq!(w.k, 1);
        let sub = forest.induced_subgraph(&w.vertices).unwrap();
        assert_eq!(sub.min_degree(), Some(1));
        assert_eq!(max_min_degree_witness(&Graph::empty()), Err(Error::EmptyGraph));
    }

    #[test]
    fn critical_subgraph_examples() {
        // K5 plus a pendant vertex
        let mut edges: Vec<(usize, usize)> = Graph::complete(5).edges().map(|e| (e.u, e.v)).collect();
        edges.push((4, 5));
        let g = Graph::from_edge_list(6, edges).unwrap();
        let f = col_critical_subgraph_labelled(&g).unwrap();
        assert_eq!(f.graph, Graph::complete(5));
        assert_eq!(f.vertices, vec![0, 1, 2, 3, 4]);

        let c6sq = cycle(6).square();
        assert_eq!(col_critical_subgraph(&c6sq).unwrap(), c6sq);

        let chorded = cycle(6).add_edge(crate::graph::Edge::new(0, 3).unwrap()).unwrap();
        let f = col_critical_subgraph(&chorded).unwrap();
        assert!(f.is_connected() && f.n() >= 3 && f.degree_profile().unwrap().sequence.iter().all(|&d| d == 2));

        // two disjoint K4s: no single vertex deletion keeps δ = 3, the k-core peel does
        let two = Graph::complete(4).disjoint_union(&Graph::complete(4));
        assert_eq!(col_critical_subgraph(&two).unwrap(), Graph::complete(4));

        assert_eq!(col_critical_subgraph(&Graph::edgeless(3)).unwrap(), Graph::edgeless(1));
        assert_eq!(col_critical_subgraph(&Graph::empty()), Err(Error::EmptyGraph));
    }

    #[test]
    fn greedy_colouring() {
        let c5 = cycle(5);
        let cert = degeneracy_ordering(&c5);
        let colours = greedy_colour_along(&c5, &cert.colouring_order()).unwrap();
        assert!(is_proper_colouring(&c5, &colours));
        assert!(colours.iter().max().copied().unwrap() <= 3);

        let k4 = Graph::complete(4);
        let colours = greedy_colour_along(&k4, &[2, 0, 3, 1]).unwrap();
        assert_eq!(colours.iter().max(), Some(&4));

        let bip = Graph::from_edge_list(6, [(0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3)]).unwrap();
        let colours = greedy_colour_along(&bip, &[0, 5, 1, 3, 2, 4]).unwrap();
        assert!(is_proper_colouring(&bip, &colours));

        assert!(matches!(greedy_colour_along(&k4, &[0, 1, 2]), Err(Error::NotAPermutation(_))));
        assert!(matches!(greedy_colour_along(&k4, &[0, 1, 2, 2]), Err(Error::NotAPermutation(_))));
    }
}
