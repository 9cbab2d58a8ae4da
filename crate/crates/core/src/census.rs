//! Exhaustive isomorph-free enumeration of small graphs, and the censuses
//! built on top of it.
//!
//! Generation adds one vertex at a time. A child `P + v` is kept only if
//! `v` lies in the automorphism orbit of the child's canonical deletion
//! vertex, so every isomorphism class has exactly one parent class. Children
//! of a single parent that coincide are merged by canonical form.

use std::collections::HashSet;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_unchecked, CanonicalForm};
use crate::classifier::{check_decomposable_col_critical, classify_dcc5, graph6_or_size, ClassLabel};
use crate::criticality::{criticality_report, ratio_string};
use crate::error::{Error, Result};
use crate::families::{f_graph, ratio_family, wheel};
use crate::graph::Graph;
use crate::limits;
use crate::properties::{check_all, theorem_properties, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusConstraints {
    pub n: usize,
    pub min_degree: usize,
    pub max_degree: Option<usize>,
    /// Reject graphs containing `K_k`.
    pub forbid_clique: Option<usize>,
    pub require_connected: bool,
}

impl CensusConstraints {
    pub fn connected(n: usize) -> Self {
        CensusConstraints {
            n,
            min_degree: 0,
            max_degree: None,
            forbid_clique: None,
            require_connected: true,
        }
    }

    pub fn with_min_degree(mut self, d: usize) -> Self {
        self.min_degree = d;
        self
    }

    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn forbidding_clique(mut self, k: usize) -> Self {
        self.forbid_clique = Some(k);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let limit = limits::census_limit(self.min_degree);
        if self.n > limit {
            return Err(Error::SizeGuard {
                what: "census",
                size: self.n,
                limit,
            });
        }
        let top = self.n.saturating_sub(1);
        if self.n > 0 && self.min_degree > top {
            return Err(Error::InvalidParameter(format!(
                "min degree {} exceeds n - 1 = {top}",
                self.min_degree
            )));
        }
        if let Some(max) = self.max_degree {
            if max < self.min_degree || (self.n > 0 && max > top) {
                return Err(Error::InvalidParameter(format!(
                    "max degree {max} outside {}..={top}",
                    self.min_degree
                )));
            }
        }
        if matches!(self.forbid_clique, Some(k) if k < 2) {
            return Err(Error::InvalidParameter("forbidden clique order must be at least 2".into()));
        }
        Ok(())
    }

    /// Whether a finished graph satisfies every constraint.
    pub fn admits(&self, g: &Graph) -> bool {
        g.n() == self.n
            && g.vertices().all(|v| g.degree(v) >= self.min_degree)
            && self.max_degree.map_or(true, |d| g.max_degree().unwrap_or(0) <= d)
            && self.forbid_clique.map_or(true, |k| !g.has_clique(k))
            && (!self.require_connected || g.is_connected())
    }

    /// Degree floor for an intermediate graph on `k` vertices: the final
    /// graph loses at most `n - k` neighbours of any vertex on the way down.
    fn floor_at(&self, k: usize) -> usize {
        self.min_degree.saturating_sub(self.n - k)
    }
}

type Rows = Vec<u64>;

fn degree(rows: &[u64], v: usize) -> u32 {
    rows[v].count_ones()
}

fn connected_within(rows: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let mut seen = 1u64 << mask.trailing_zeros();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = rows[v] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == mask
}

fn has_clique_within(rows: &[u64], candidates: u64, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if (candidates.count_ones() as usize) < need {
        return false;
    }
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique_within(rows, rest & rows[v], need - 1) {
            return true;
        }
    }
    false
}

/// Invariant used to narrow the deletion candidates before canonical
/// labelling: degree, then the sum of neighbour degrees.
fn vertex_key(rows: &[u64], v: usize) -> (u32, u32) {
    let mut nbrs = rows[v];
    let mut sum = 0;
    while nbrs != 0 {
        sum += degree(rows, nbrs.trailing_zeros() as usize);
        nbrs &= nbrs - 1;
    }
    (degree(rows, v), sum)
}

/// Canonical form of `child` if `new` is in the orbit of its canonical
/// deletion vertex: among the vertices whose removal is allowed (non-cut
/// when connectivity is required), those with the largest key, and among
/// them the one with the largest canonical label.
fn accept(child: &[u64], new: usize, connected: bool) -> Option<(CanonicalForm, Rows)> {
    let n = child.len();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let eligible: Vec<usize> = (0..n)
        .filter(|&v| !connected || connected_within(child, full & !(1 << v)))
        .collect();
    if !eligible.contains(&new) {
        return None;
    }
    let best = eligible.iter().map(|&v| vertex_key(child, v)).max().expect("new is eligible");
    if vertex_key(child, new) != best {
        return None;
    }
    let canon = canonical_unchecked(child);
    let labels = canon.labels();
    let target = eligible
        .iter()
        .copied()
        .filter(|&v| vertex_key(child, v) == best)
        .max_by_key(|&v| labels[v])
        .expect("non-empty");
    let orbits = canon.orbits();
    (orbits[target] == orbits[new]).then(|| (canon.form, canon.graph.bit_rows()))
}

fn children(parent: &[u64], c: &CensusConstraints) -> Vec<(CanonicalForm, Rows)> {
    let k = parent.len();
    let level = k + 1;
    let floor = c.floor_at(level) as u32;
    let cap = c.max_degree.map_or(u32::MAX, |d| d as u32);
    let mut required = 0u64;
    let mut blocked = 0u64;
    for v in 0..k {
        let d = degree(parent, v);
        if d < floor {
            required |= 1 << v;
        }
        if d >= cap {
            blocked |= 1 << v;
        }
    }
    if required & blocked != 0 {
        return Vec::new();
    }
    let free: Vec<usize> = (0..k).filter(|&v| (required | blocked) >> v & 1 == 0).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for bits in 0u64..1 << free.len() {
        let mut s = required;
        for (i, &v) in free.iter().enumerate() {
            if bits >> i & 1 == 1 {
                s |= 1 << v;
            }
        }
        let size = s.count_ones();
        if size < floor || size > cap || (c.require_connected && k > 0 && s == 0) {
            continue;
        }
        if let Some(kk) = c.forbid_clique {
            if has_clique_within(parent, s, kk - 1) {
                continue;
            }
        }
        let mut child: Rows = parent.to_vec();
        for (v, row) in child.iter_mut().enumerate() {
            if s >> v & 1 == 1 {
                *row |= 1 << k;
            }
        }
        child.push(s);
        if let Some((form, rows)) = accept(&child, k, c.require_connected) {
            if seen.insert(form.clone()) {
                out.push((form, rows));
            }
        }
    }
    out
}

/// One canonical representative per isomorphism class satisfying the
/// constraints, with its canonical form, sorted by form.
pub fn enumerate_with_forms(c: &CensusConstraints) -> Result<Vec<(CanonicalForm, Graph)>> {
    c.validate()?;
    if c.n == 0 {
        let g = Graph::empty();
        return Ok(if c.admits(&g) {
            vec![(canonical_unchecked(&[]).form, g)]
        } else {
            Vec::new()
        });
    }
    let k1: Rows = vec![0];
    let mut level: Vec<Rows> = if c.floor_at(1) == 0 { vec![k1] } else { Vec::new() };
    for _ in 1..c.n {
        level = level
            .par_iter()
            .flat_map_iter(|p| children(p, c).into_iter().map(|(_, rows)| rows))
            .collect();
    }
    let mut out: Vec<(CanonicalForm, Graph)> = level
        .into_par_iter()
        .map(|rows| {
            let g = Graph::from_bit_rows(&rows);
            (canonical_unchecked(&rows).form, g)
        })
        .filter(|(_, g)| c.admits(g))
        .collect();
    out.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

pub fn enumerate_connected(c: &CensusConstraints) -> Result<Vec<Graph>> {
    Ok(enumerate_with_forms(c)?.into_iter().map(|(_, g)| g).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusHit {
    /// Canonical graph6.
    pub graph6: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub graphs_enumerated: usize,
    pub hits: Vec<CensusHit>,
}

/// For each order `5..=n_max`, every double-col-critical graph with
/// colouring number 5, classified. Such graphs have minimum degree 4, which
/// is the only pruning used.
pub fn census_dcc5(n_max: usize) -> Result<Vec<CensusRow>> {
    let limit = limits::census_limit(0);
    if n_max > limit {
        return Err(Error::SizeGuard {
            what: "dcc5 census",
            size: n_max,
            limit,
        });
    }
    (5..=n_max)
        .map(|n| {
            let graphs = enumerate_with_forms(&CensusConstraints::connected(n).with_min_degree(4))?;
            let hits = graphs
                .par_iter()
                .filter_map(|(form, g)| {
                    let r = criticality_report(g);
                    (r.col == 5 && r.is_double_col_critical).then_some((form, g))
                })
                .map(|(form, g)| {
                    let label = classify_dcc5(g)?;
                    if !label.is_applicable() {
                        return Err(Error::ClaimViolated(format!("{form} was not classified: {label}")));
                    }
                    Ok(CensusHit {
                        graph6: form.to_string(),
                        label: label.to_string(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(CensusRow {
                n,
                graphs_enumerated: graphs.len(),
                hits,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Col4Row {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub dcc_count: usize,
    /// `2 * dcc_count == m`.
    pub is_extremal: bool,
    pub is_wheel: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Col4Census {
    pub n_max: usize,
    pub rows: Vec<Col4Row>,
    /// Rows with `2 * dcc_count > m`.
    pub bound_violations: Vec<String>,
    pub extremal_non_wheels: Vec<String>,
    /// Orders of the extremal graphs found, ascending and deduplicated.
    pub extremal_orders: Vec<usize>,
    pub min_extremal_order: Option<usize>,
    /// Wheels `W_r` (order `r + 1`) within range and whether each is
    /// extremal.
    pub wheels: Vec<(usize, bool)>,
}

/// Every non-complete 4-col-critical graph with at most `n_max` vertices,
/// with its number of double-col-critical edges.
pub fn census_col4_edge_bound(n_max: usize) -> Result<Col4Census> {
    const LIMIT: usize = 8;
    if n_max > LIMIT {
        return Err(Error::SizeGuard {
            what: "col-4 edge census",
            size: n_max,
            limit: LIMIT,
        });
    }
    let mut rows = Vec::new();
    for n in 5..=n_max {
        let graphs = enumerate_with_forms(&CensusConstraints::connected(n).with_min_degree(3))?;
        let wheel_n = wheel(n - 1)?;
        let mut found: Vec<Col4Row> = graphs
            .par_iter()
            .filter_map(|(form, g)| {
                let r = criticality_report(g);
                (r.col == 4 && r.is_col_critical && !g.is_complete()).then(|| Col4Row {
                    graph6: form.to_string(),
                    n,
                    m: g.m(),
                    dcc_count: r.dcc_edge_count,
                    is_extremal: 2 * r.dcc_edge_count == g.m(),
                    is_wheel: crate::canon::are_isomorphic(g, &wheel_n).expect("within cap"),
                })
            })
            .collect();
        rows.append(&mut found);
    }
    let bound_violations = rows
        .iter()
        .filter(|r| 2 * r.dcc_count > r.m)
        .map(|r| r.graph6.clone())
        .collect();
    let extremal_non_wheels = rows
        .iter()
        .filter(|r| r.is_extremal && !r.is_wheel)
        .map(|r| r.graph6.clone())
        .collect();
    let mut extremal_orders: Vec<usize> = rows.iter().filter(|r| r.is_extremal).map(|r| r.n).collect();
    extremal_orders.dedup();
    let wheels = (4..n_max)
        .map(|rim| {
            let w = wheel(rim)?;
            let r = criticality_report(&w);
            Ok((rim, 2 * r.dcc_edge_count == w.m()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Col4Census {
        n_max,
        min_extremal_order: extremal_orders.first().copied(),
        rows,
        bound_violations,
        extremal_non_wheels,
        extremal_orders,
        wheels,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n_max: usize,
    pub graphs_checked: usize,
    /// Double-col-critical graphs with colouring number 5 among them.
    pub dcc5_checked: usize,
    pub violations: Vec<Violation>,
}

/// Runs every property check over all connected graphs with at most
/// `n_max` vertices.
pub fn property_sweep(n_max: usize) -> Result<SweepReport> {
    let limit = limits::sweep_limit();
    if n_max > limit {
        return Err(Error::SizeGuard {
            what: "property sweep",
            size: n_max,
            limit,
        });
    }
    let mut graphs_checked = 0;
    let mut dcc5_checked = 0;
    let mut violations = Vec::new();
    for n in 1..=n_max {
        let graphs = enumerate_connected(&CensusConstraints::connected(n))?;
        graphs_checked += graphs.len();
        let found: Vec<(bool, Vec<Violation>)> = graphs
            .par_iter()
            .map(|g| {
                let r = criticality_report(g);
                let mut v = check_all(g, &r);
                let dcc5 = r.is_double_col_critical && r.col == 5;
                if dcc5 {
                    v.extend(theorem_properties(g, &r));
                }
                (dcc5, v)
            })
            .collect();
        for (dcc5, v) in found {
            dcc5_checked += usize::from(dcc5);
            violations.extend(v);
        }
    }
    Ok(SweepReport {
        n_max,
        graphs_checked,
        dcc5_checked,
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RatioThreshold {
    Found {
        p: usize,
        k: usize,
        #[serde(serialize_with = "ser_ratio")]
        ratio: Ratio<usize>,
        dcc_count: usize,
        m: usize,
    },
    CapExceeded {
        p: usize,
        cap: usize,
    },
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio<usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ratio_string(r))
}

pub const RATIO_SEARCH_CAP: usize = 64;

/// Least `k` such that `F_k + \overline{K_{p-5}}` is `p`-col-critical with
/// a double-col-critical edge ratio strictly between `1 - ε` and `1`.
/// Criticality is confirmed both directly and, for `p > 5`, through the
/// join decomposition.
pub fn find_ratio_threshold(p: usize, epsilon: Ratio<usize>) -> Result<RatioThreshold> {
    if !(5..=8).contains(&p) {
        return Err(Error::InvalidParameter(format!("p must lie in 5..=8, got {p}")));
    }
    if *epsilon.numer() == 0 {
        return Err(Error::InvalidParameter("epsilon must be positive".into()));
    }
    let one = Ratio::from_integer(1usize);
    for k in 4..=RATIO_SEARCH_CAP {
        let g = ratio_family(p, k)?;
        let r = criticality_report(&g);
        let Some(ratio) = r.dcc_ratio else { continue };
        // ratio > 1 - ε, rearranged to stay in unsigned arithmetic
        let above = ratio + epsilon > one;
        if !(above && ratio < one && r.col == p && r.is_col_critical) {
            continue;
        }
        if p > 5 {
            let fk = f_graph(k)?.n();
            let v1: Vec<usize> = (0..fk).collect();
            let v2: Vec<usize> = (fk..g.n()).collect();
            let check = check_decomposable_col_critical(&g, &v1, &v2)?;
            if check.predicted_col != Some(p) {
                return Err(Error::ClaimViolated(format!(
                    "{}: join decomposition predicts {:?}, expected {p}",
                    graph6_or_size(&g),
                    check.predicted_col
                )));
            }
        }
        return Ok(RatioThreshold::Found {
            p,
            k,
            ratio,
            dcc_count: r.dcc_edge_count,
            m: r.edge_count,
        });
    }
    Ok(RatioThreshold::CapExceeded {
        p,
        cap: RATIO_SEARCH_CAP,
    })
}

/// Convenience for checking a label against its reference construction.
pub fn label_matches(g: &Graph, label: &ClassLabel) -> Result<bool> {
    match label.reference_graph() {
        Some(h) => crate::canon::are_isomorphic(g, &h),
        None => Ok(false),
    }
}
