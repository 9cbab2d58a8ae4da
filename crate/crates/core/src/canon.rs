//! Canonical labelling of small graphs.
//!
//! Individualisation-refinement: the vertex partition is refined to an
//! equitable one, a vertex of the first non-singleton cell is individualised,
//! and the search recurses until the partition is discrete. Each discrete
//! leaf induces a relabelled adjacency matrix; the lexicographically least
//! matrix is the canonical one. Leaves that reproduce an earlier matrix give
//! automorphisms, which prune sibling subtrees lying in the same orbit.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::limits;

/// Isomorphism-class key: the graph6 encoding of the canonically relabelled
/// graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The form is valid graph6 text.
    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_graph6())
    }
}

/// Full result of a canonical labelling run.
#[derive(Debug, Clone)]
pub struct Canonical {
    pub form: CanonicalForm,
    /// `order[i]` is the vertex that receives canonical label `i`.
    pub order: Vec<usize>,
    /// Generators of the automorphism group, as vertex maps.
    pub generators: Vec<Vec<usize>>,
    pub graph: Graph,
}

impl Canonical {
    /// Canonical label of each vertex (inverse of `order`).
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            labels[v] = i;
        }
        labels
    }

    /// Orbit representative (smallest member) for every vertex.
    pub fn orbits(&self) -> Vec<usize> {
        orbits_of(self.order.len(), self.generators.iter())
    }
}

fn check_cap(g: &Graph) -> Result<()> {
    let cap = limits::canon_cap();
    if g.n() > cap {
        return Err(Error::SizeGuard {
            what: "canonical labelling",
            size: g.n(),
            limit: cap,
        });
    }
    Ok(())
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical(g)?.form)
}

pub fn canonical(g: &Graph) -> Result<Canonical> {
    check_cap(g)?;
    Ok(canonical_unchecked(&g.bit_rows()))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    check_cap(g)?;
    check_cap(h)?;
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(false);
    }
    if !g.is_empty() && g.degree_profile()?.sequence != h.degree_profile()?.sequence {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Canonical labelling over bit rows; callers guarantee `rows.len() <= 64`.
pub(crate) fn canonical_unchecked(rows: &[u64]) -> Canonical {
    let n = rows.len();
    let mut search = Search {
        rows,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let root: Vec<Vec<usize>> = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    let mut prefix = Vec::new();
    search.descend(root, &mut prefix);
    let Leaf { code, order, .. } = search.best.expect("at least one leaf");
    let graph = Graph::from_bit_rows(&code);
    let form = CanonicalForm(to_graph6(&graph).expect("n <= 64").into_bytes());
    Canonical {
        form,
        order,
        generators: search.generators,
        graph,
    }
}

struct Leaf {
    code: Vec<u64>,
    order: Vec<usize>,
    /// Individualised vertices on the way down.
    path: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    /// The first leaf reached and the best leaf so far.
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns the depth the search should unwind to. A leaf equivalent to
    /// the first or best leaf shows the whole subtree below the divergence
    /// point is an automorphic image of an explored one.
    fn descend(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) -> usize {
        refine(&mut cells, self.rows);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(cells.into_iter().map(|c| c[0]).collect(), prefix);
        };
        let depth = prefix.len();
        let mut choices = cells[target].clone();
        choices.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in choices {
            if !explored.is_empty() {
                let stabiliser = self
                    .generators
                    .iter()
                    .filter(|g| prefix.iter().all(|&p| g[p] == p));
                let orbit = orbits_of(self.rows.len(), stabiliser);
                if explored.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            let unwind = self.descend(child, prefix);
            prefix.pop();
            if unwind < depth {
                return unwind;
            }
        }
        depth
    }

    fn leaf(&mut self, order: Vec<usize>, path: &[usize]) -> usize {
        let code = relabelled_rows(self.rows, &order);
        let n = order.len();
        let (Some(first), Some(best)) = (&self.first, &self.best) else {
            let leaf = Leaf {
                code,
                order,
                path: path.to_vec(),
            };
            self.first = Some(Leaf {
                code: leaf.code.clone(),
                order: leaf.order.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return n;
        };
        let twin = if code == first.code {
            Some(first)
        } else if code == best.code {
            Some(best)
        } else {
            None
        };
        match twin {
            Some(twin) => {
                let g = automorphism(&twin.order, &order);
                let back = common_prefix(&twin.path, path);
                self.push_generator(g);
                back
            }
            None => {
                if code < best.code {
                    self.best = Some(Leaf {
                        code,
                        order,
                        path: path.to_vec(),
                    });
                }
                n
            }
        }
    }

    fn push_generator(&mut self, g: Vec<usize>) {
        if g.iter().enumerate().any(|(i, &x)| i != x) {
            self.generators.push(g);
        }
    }
}

/// Depth of the deepest search node shared by two root-to-leaf paths.
fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// The vertex map sending the leaf `from` onto the leaf `to`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut g = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        g[a] = b;
    }
    g
}

fn relabelled_rows(rows: &[u64], order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0; rows.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            let mut row = 0u64;
            let mut bits = rows[v];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                row |= 1 << pos[w];
            }
            row
        })
        .collect()
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Every split depends only on cell contents and adjacency, never on vertex
/// names, so the result commutes with relabelling.
fn refine(cells: &mut Vec<Vec<usize>>, rows: &[u64]) {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].iter().fold(0u64, |acc, &v| acc | 1 << v);
            for i in 0..cells.len() {
                if cells[i].len() == 1 {
                    continue;
                }
                let count = |v: usize| (rows[v] & splitter).count_ones();
                let c0 = count(cells[i][0]);
                if cells[i].iter().all(|&v| count(v) == c0) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[i].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        parts.push(Vec::new());
                        last = Some(k);
                    }
                    parts.last_mut().expect("pushed").push(v);
                }
                cells.splice(i..=i, parts);
                continue 'restart;
            }
        }
        break;
    }
}

/// Union-find orbits; each vertex maps to the smallest vertex of its orbit.
pub(crate) fn orbits_of<'a, I>(n: usize, generators: I) -> Vec<usize>
where
    I: IntoIterator<Item = &'a Vec<usize>>,
{
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in generators {
        for (v, &w) in g.iter().enumerate() {
            let a = find(&mut parent, v);
            let b = find(&mut parent, w);
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}
