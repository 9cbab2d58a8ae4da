//! Named verification suites, run by the CLI `verify` command.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::canon::{are_isomorphic, canonical_form};
use crate::census::{census_col4_edge_bound, census_dcc5, enumerate_connected, property_sweep, CensusConstraints};
use crate::classifier::{join_col_bounds, verify_join_double_col_critical, GLUED_PAIRS};
use crate::criticality::{criticality_report, is_double_col_critical};
use crate::degeneracy::{colouring_number, colouring_number_bruteforce, colouring_number_subset_sweep};
use crate::error::Result;
use crate::families::{cycle, cycle_square, family_corpus, glued_pair, icosahedron, wheel};
use crate::graph::{Edge, Graph};
use crate::limits;
use crate::properties::{check_all, theorem_properties};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Observations,
    Joins,
    Theorem28,
    Prop33,
}

impl Suite {
    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "all" => Suite::All,
            "observations" => Suite::Observations,
            "joins" => Suite::Joins,
            "theorem28" => Suite::Theorem28,
            "prop33" => Suite::Prop33,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub suite: &'static str,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

fn outcome(suite: &'static str, check: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome {
        suite,
        check: check.into(),
        passed,
        detail: detail.into(),
    }
}

/// Runs a suite. `n_max` overrides the default census size of the suites
/// that enumerate.
pub fn run_suite(suite: Suite, n_max: Option<usize>) -> Result<Vec<CheckOutcome>> {
    Ok(match suite {
        Suite::All => {
            let mut all = observations(n_max.unwrap_or(7))?;
            all.extend(joins(5)?);
            all.extend(theorem28(n_max.unwrap_or(9))?);
            all.extend(prop33(n_max.unwrap_or(8).min(8))?);
            all
        }
        Suite::Observations => observations(n_max.unwrap_or(7))?,
        Suite::Joins => joins(n_max.unwrap_or(5))?,
        Suite::Theorem28 => theorem28(n_max.unwrap_or(9))?,
        Suite::Prop33 => prop33(n_max.unwrap_or(8))?,
    })
}

pub fn observations(n_max: usize) -> Result<Vec<CheckOutcome>> {
    const S: &str = "observations";
    let mut out = Vec::new();
    let sweep = property_sweep(n_max)?;
    out.push(outcome(
        S,
        format!("connected graphs up to {n_max} vertices"),
        sweep.violations.is_empty(),
        format!("{} graphs, {} violations", sweep.graphs_checked, sweep.violations.len()),
    ));
    let mut family_violations = Vec::new();
    for (name, g) in family_corpus() {
        let r = criticality_report(&g);
        for v in check_all(&g, &r).into_iter().chain(theorem_properties(&g, &r)) {
            family_violations.push(format!("{name}: {}", v.property));
        }
    }
    out.push(outcome(
        S,
        "family constructions",
        family_violations.is_empty(),
        family_violations.join("; "),
    ));
    let caught = negative_controls();
    out.push(outcome(S, "negative controls caught", caught.iter().all(|&(_, c)| c), format!("{caught:?}")));
    Ok(out)
}

/// Tampered reports that the property checks must reject.
pub fn negative_controls() -> Vec<(&'static str, bool)> {
    let spoke_less = wheel(5).expect("valid").delete_edge(Edge::new(0, 5).expect("edge")).expect("valid");
    let mut r = criticality_report(&spoke_less);
    r.is_double_col_critical = true;
    let wheel_caught = !check_all(&spoke_less, &r).is_empty();

    let two = cycle_square(6).expect("valid").disjoint_union(&Graph::complete(5));
    let mut r = criticality_report(&two);
    r.is_double_col_critical = true;
    let split_caught = !theorem_properties(&two, &r).is_empty();

    let c7 = cycle_square(7).expect("valid");
    let mut r = criticality_report(&c7);
    r.col += 1;
    let col_caught = !check_all(&c7, &r).is_empty();

    vec![
        ("wheel minus a spoke marked double-col-critical", wheel_caught),
        ("disjoint C6^2 and K5 marked double-col-critical", split_caught),
        ("C7^2 with inflated colouring number", col_caught),
    ]
}

/// All graphs (connected or not) with `1..=n_max` vertices.
pub fn all_small_graphs(n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let c = CensusConstraints {
            require_connected: false,
            ..CensusConstraints::connected(n)
        };
        out.extend(enumerate_connected(&c)?);
    }
    Ok(out)
}

/// The pool from which double-col-critical join pairs are drawn.
pub fn join_pool() -> Vec<(String, Graph)> {
    let mut pool: Vec<(String, Graph)> = (1..=6).map(|n| (format!("K{n}"), Graph::complete(n))).collect();
    for m in 5..=9 {
        pool.push((format!("C{m}^2"), cycle_square(m).expect("valid")));
    }
    for (a, b, _) in GLUED_PAIRS {
        pool.push((format!("glued {} {}", a.short_name(), b.short_name()), glued_pair(a, b)));
    }
    pool.push(("icosahedron".into(), icosahedron()));
    pool
}

/// `count` distinct unordered pairs from [`join_pool`], seeded.
pub fn sample_join_pairs(count: usize, seed: u64) -> Vec<(usize, usize)> {
    let n = join_pool().len();
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    pairs.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    pairs.truncate(count);
    pairs.sort_unstable();
    pairs
}

pub fn joins(n_max: usize) -> Result<Vec<CheckOutcome>> {
    const S: &str = "joins";
    let mut out = Vec::new();

    let small = all_small_graphs(n_max)?;
    let mut failures = Vec::new();
    let mut exact_checked = 0;
    for g1 in &small {
        for g2 in &small {
            let b = join_col_bounds(g1, g2)?;
            let actual = colouring_number(&g1.complete_join(g2));
            let exact_ok = b.exact.map_or(true, |e| e == actual);
            exact_checked += usize::from(b.exact.is_some());
            if !(b.lower <= actual && actual <= b.upper && exact_ok) {
                failures.push(format!("{g1:?} + {g2:?}: {b:?} vs {actual}"));
            }
        }
    }
    out.push(outcome(
        S,
        format!("join bounds on all pairs up to {n_max} vertices"),
        failures.is_empty(),
        format!("{} pairs, {exact_checked} exact, {} failures", small.len() * small.len(), failures.len()),
    ));

    let pool = join_pool();
    let pairs = sample_join_pairs(50, 0x5eed);
    let mut bad = Vec::new();
    for &(i, j) in &pairs {
        let v = verify_join_double_col_critical(&pool[i].1, &pool[j].1)?;
        if !v.holds() {
            bad.push(format!("{} + {}", pool[i].0, pool[j].0));
        }
    }
    out.push(outcome(S, format!("{} joins of double-col-critical graphs", pairs.len()), bad.is_empty(), bad.join("; ")));

    let c4 = cycle(4)?;
    let pair = Graph::edgeless(2);
    let join = c4.complete_join(&pair);
    let witness = are_isomorphic(&join, &cycle_square(6)?)?
        && is_double_col_critical(&join)
        && !is_double_col_critical(&c4)
        && !is_double_col_critical(&pair);
    out.push(outcome(S, "C4 + two isolated vertices is C6^2, sides not double-col-critical", witness, ""));
    Ok(out)
}

/// Canonical forms expected among the double-col-critical graphs with
/// colouring number 5 on `n` vertices.
pub fn expected_dcc5(n: usize) -> Result<Vec<String>> {
    let mut forms = vec![canonical_form(&cycle_square(n)?)?.to_string()];
    for (a, b, order) in GLUED_PAIRS {
        if order == n {
            forms.push(canonical_form(&glued_pair(a, b))?.to_string());
        }
    }
    forms.sort();
    Ok(forms)
}

pub fn theorem28(n_max: usize) -> Result<Vec<CheckOutcome>> {
    const S: &str = "theorem28";
    let rows = census_dcc5(n_max)?;
    rows.iter()
        .map(|row| {
            let mut got: Vec<String> = row.hits.iter().map(|h| h.graph6.clone()).collect();
            got.sort();
            let expected = expected_dcc5(row.n)?;
            let labels: Vec<&str> = row.hits.iter().map(|h| h.label.as_str()).collect();
            Ok(outcome(
                S,
                format!("n = {}", row.n),
                got == expected,
                format!("{} enumerated, hits {labels:?}", row.graphs_enumerated),
            ))
        })
        .collect()
}

pub fn prop33(n_max: usize) -> Result<Vec<CheckOutcome>> {
    const S: &str = "prop33";
    let c = census_col4_edge_bound(n_max)?;
    Ok(vec![
        outcome(
            S,
            "at most half the edges are double-col-critical",
            c.bound_violations.is_empty(),
            format!("{} graphs, violations {:?}", c.rows.len(), c.bound_violations),
        ),
        outcome(
            S,
            "every extremal graph is a wheel",
            c.extremal_non_wheels.is_empty(),
            format!("extremal orders {:?}, smallest {:?}", c.extremal_orders, c.min_extremal_order),
        ),
    ])
}

/// Fast and brute-force colouring numbers of one graph. `subset_sweep` is
/// only computed within its own size guard.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleComparison {
    pub n: usize,
    pub m: usize,
    pub col: usize,
    pub bruteforce: usize,
    pub subset_sweep: Option<usize>,
}

impl OracleComparison {
    pub fn agrees(&self) -> bool {
        self.col == self.bruteforce && self.subset_sweep.map_or(true, |s| s == self.col)
    }
}

pub fn oracle_compare(g: &Graph) -> Result<OracleComparison> {
    let bruteforce = colouring_number_bruteforce(g)?;
    let subset_sweep = if g.n() <= limits::subset_sweep_limit() {
        Some(colouring_number_subset_sweep(g)?)
    } else {
        None
    };
    Ok(OracleComparison {
        n: g.n(),
        m: g.m(),
        col: colouring_number(g),
        bruteforce,
        subset_sweep,
    })
}

/// `count` random graphs with `1..=n_max` vertices. Each graph draws its own
/// edge density uniformly, so sparse and dense graphs both appear.
pub fn random_corpus(seed: u64, count: usize, n_max: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=n_max.max(1));
            let p: f64 = rng.gen();
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            Graph::from_edge_list(n, edges).expect("valid random graph")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!(Suite::from_name("prop33"), Some(Suite::Prop33));
        assert_eq!(Suite::from_name("nope"), None);
    }

    #[test]
    fn negative_controls_all_caught() {
        assert!(negative_controls().iter().all(|&(_, caught)| caught));
    }

    #[test]
    fn join_pairs_are_distinct_and_seeded() {
        let a = sample_join_pairs(50, 7);
        assert_eq!(a.len(), 50);
        let mut d = a.clone();
        d.dedup();
        assert_eq!(d.len(), 50);
        assert_eq!(a, sample_join_pairs(50, 7));
    }

    #[test]
    fn small_suites_pass() {
        for check in joins(3).unwrap().into_iter().chain(theorem28(7).unwrap()).chain(prop33(6).unwrap()) {
            assert!(check.passed, "{check:?}");
        }
        for check in observations(5).unwrap() {
            assert!(check.passed, "{check:?}");
        }
    }

    #[test]
    fn random_corpus_is_seeded() {
        let a = random_corpus(3, 20, 9);
        assert_eq!(a, random_corpus(3, 20, 9));
        assert_ne!(a, random_corpus(4, 20, 9));
        assert!(a.iter().all(|g| (1..=9).contains(&g.n())));
        for g in &a {
            assert!(oracle_compare(g).unwrap().agrees());
        }
    }

    #[test]
    fn small_graph_counts() {
        // 1 + 2 + 4 + 11 graphs on 1..=4 vertices
        assert_eq!(all_small_graphs(4).unwrap().len(), 18);
    }
}
