//! Immutable simple graphs on dense vertex indices `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalises the endpoint order. Fails on a loop.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    pub fn ends(&self) -> [usize; 2] {
        [self.u, self.v]
    }

    pub fn is_incident(&self, other: &Edge) -> bool {
        self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A finite simple graph. Vertices are `0..n`; each adjacency list is sorted
/// and free of duplicates and loops, and adjacency is symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    /// Degrees sorted ascending.
    pub sequence: Vec<usize>,
    pub min: usize,
    pub max: usize,
}

impl Graph {
    /// The empty graph K0.
    pub fn empty() -> Self {
        Graph::default()
    }

    /// `n` vertices, no edges.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&w| w != v).collect())
            .collect();
        Graph {
            adj,
            m: n * n.saturating_sub(1) / 2,
        }
    }

    /// Builds a graph from vertex pairs. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        Ok(Self::from_raw_lists(adj))
    }

    /// Sorts and dedups raw (already symmetric, loop-free) lists.
    pub(crate) fn from_raw_lists(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        debug_assert!(twice % 2 == 0);
        Graph { adj, m: twice / 2 }
    }

    /// Row bitmasks, for graphs with at most 64 vertices.
    pub(crate) fn from_bit_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        let adj = rows
            .iter()
            .map(|&row| (0..n).filter(|&w| row >> w & 1 == 1).collect())
            .collect();
        Self::from_raw_lists(adj)
    }

    pub(crate) fn bit_rows(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &w| acc | 1 << w))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        if self.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut sequence: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        sequence.sort_unstable();
        Ok(DegreeProfile {
            min: sequence[0],
            max: sequence[sequence.len() - 1],
            sequence,
        })
    }

    fn check_vertices(&self, set: &[usize]) -> Result<()> {
        match set.iter().find(|&&v| v >= self.n()) {
            Some(&v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            }),
            None => Ok(()),
        }
    }

    /// `G[S]`, relabelled to `0..|S|` in ascending order of the original
    /// indices. Duplicates in `set` are ignored.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<Graph> {
        self.check_vertices(set)?;
        let mut keep = vec![false; self.n()];
        for &v in set {
            keep[v] = true;
        }
        Ok(self.induced_by_mask(&keep))
    }

    pub(crate) fn induced_by_mask(&self, keep: &[bool]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        let mut next = 0;
        for v in self.vertices() {
            if keep[v] {
                index[v] = next;
                next += 1;
            }
        }
        let adj = self
            .vertices()
            .filter(|&v| keep[v])
            .map(|v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| keep[w])
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        Self::from_raw_lists(adj)
    }

    /// `G - S`.
    pub fn delete_vertices(&self, set: &[usize]) -> Result<Graph> {
        self.check_vertices(set)?;
        let mut keep = vec![true; self.n()];
        for &v in set {
            keep[v] = false;
        }
        Ok(self.induced_by_mask(&keep))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.delete_vertices(&[v])
    }

    /// `G - e`, keeping both endpoints. Deleting a non-edge is a no-op.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        self.check_vertices(&[e.u, e.v])?;
        let mut adj = self.adj.clone();
        let removed = match adj[e.u].binary_search(&e.v) {
            Ok(i) => {
                adj[e.u].remove(i);
                true
            }
            Err(_) => false,
        };
        if removed {
            let j = adj[e.v].binary_search(&e.u).expect("symmetric adjacency");
            adj[e.v].remove(j);
        }
        Ok(Graph {
            adj,
            m: self.m - usize::from(removed),
        })
    }

    /// `G + e`.
    pub fn add_edge(&self, e: Edge) -> Result<Graph> {
        self.check_vertices(&[e.u, e.v])?;
        let mut adj = self.adj.clone();
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
        Ok(Self::from_raw_lists(adj))
    }

    /// Complete join `self + other`; `self` keeps indices `0..n1`.
    pub fn complete_join(&self, other: &Graph) -> Graph {
        let n1 = self.n();
        let n2 = other.n();
        let mut adj = Vec::with_capacity(n1 + n2);
        for list in &self.adj {
            let mut row = list.clone();
            row.extend(n1..n1 + n2);
            adj.push(row);
        }
        for list in &other.adj {
            let mut row: Vec<usize> = (0..n1).collect();
            row.extend(list.iter().map(|&w| w + n1));
            adj.push(row);
        }
        Graph {
            adj,
            m: self.m + other.m + n1 * n2,
        }
    }

    /// Vertex-disjoint union; `self` keeps indices `0..n1`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n1 = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&w| w + n1).collect()),
        );
        Graph {
            adj,
            m: self.m + other.m,
        }
    }

    /// `G^2`: adds an edge between every pair at distance 2.
    pub fn square(&self) -> Graph {
        let adj = self
            .vertices()
            .map(|v| {
                let mut row = Vec::new();
                for &w in &self.adj[v] {
                    row.push(w);
                    row.extend(self.adj[w].iter().copied().filter(|&x| x != v));
                }
                row
            })
            .collect();
        Self::from_raw_lists(adj)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n())?;
        let mut adj = vec![Vec::new(); self.n()];
        for v in self.vertices() {
            adj[perm[v]] = self.adj[v].iter().map(|&w| perm[w]).collect();
        }
        Ok(Self::from_raw_lists(adj))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// K0 counts as connected (vacuously).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// At least 3 vertices, connected, and no cutvertex.
    pub fn is_two_connected(&self) -> bool {
        self.n() >= 3 && self.is_connected() && self.cut_vertices().is_empty()
    }

    /// Cutvertices of a graph (vertices whose removal increases the number
    /// of components), via DFS low-points.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in self.vertices() {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, next neighbour position)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
                if *pos < self.adj[v].len() {
                    let w = self.adj[v][*pos];
                    *pos += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// Whether some `k` vertices are pairwise adjacent.
    pub fn has_clique(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if k > self.n() {
            return false;
        }
        if k == 1 {
            return true;
        }
        let candidates: Vec<usize> = self
            .vertices()
            .filter(|&v| self.degree(v) + 1 >= k)
            .collect();
        self.extend_clique(&candidates, k)
    }

    /// `candidates` are pairwise-unconstrained vertices that are adjacent
    /// to every vertex chosen so far; `need` more are required.
    fn extend_clique(&self, candidates: &[usize], need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if candidates.len() < need {
            return false;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if candidates.len() - i < need {
                break;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| self.has_edge(v, w))
                .collect();
            if self.extend_clique(&next, need - 1) {
                return true;
            }
        }
        false
    }

    /// Clique number ω(G).
    pub fn clique_number(&self) -> usize {
        let mut k = 0;
        while self.has_clique(k + 1) {
            k += 1;
        }
        k
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::NotAPermutation(format!(
            "length {} for {} vertices",
            perm.len(),
            n
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::NotAPermutation(format!("entry {p} repeated or out of range")));
        }
        seen[p] = true;
    }
    Ok(())
}
