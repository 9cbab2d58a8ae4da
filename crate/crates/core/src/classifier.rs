//! Classification of double-col-critical graphs with colouring number 5,
//! plus the complete-join bounds and criticality conditions.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::canon::are_isomorphic;
use crate::criticality::{is_col_critical, is_double_col_critical};
use crate::degeneracy::{col_critical_subgraph, colouring_number};
use crate::error::{Error, Result};
use crate::families::{cycle_square, glued_pair, BrickKind};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::limits;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    /// `C_n²`. `K5 = C_5²` is reported here as well.
    CycleSquare(usize),
    GluedBricks(BrickKind, BrickKind),
    NotApplicable(String),
}

impl ClassLabel {
    pub fn is_applicable(&self) -> bool {
        !matches!(self, ClassLabel::NotApplicable(_))
    }

    /// The construction this label names, if any.
    pub fn reference_graph(&self) -> Option<Graph> {
        match *self {
            ClassLabel::CycleSquare(n) => cycle_square(n).ok(),
            ClassLabel::GluedBricks(a, b) => Some(glued_pair(a, b)),
            ClassLabel::NotApplicable(_) => None,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::CycleSquare(n) => write!(f, "CycleSquare({n})"),
            ClassLabel::GluedBricks(a, b) => write!(f, "GluedBricks({a},{b})"),
            ClassLabel::NotApplicable(reason) => write!(f, "NotApplicable({reason})"),
        }
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Glued pairs in a fixed order, with their orders.
pub const GLUED_PAIRS: [(BrickKind, BrickKind, usize); 3] = [
    (BrickKind::K5Nabla, BrickKind::K5Nabla, 7),
    (BrickKind::K5Nabla, BrickKind::K222Nabla, 8),
    (BrickKind::K222Nabla, BrickKind::K222Nabla, 9),
];

pub(crate) fn graph6_or_size(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| format!("<graph on {} vertices>", g.n()))
}

/// Compares `g` against `C_n²` and every glued pair on `n` vertices.
/// Exactly one reference must match when `g` is double-col-critical with
/// col 5; anything else is reported as [`Error::ClaimViolated`].
pub fn classify_dcc5(g: &Graph) -> Result<ClassLabel> {
    let cap = limits::canon_cap();
    if g.n() > cap {
        return Err(Error::SizeGuard {
            what: "classifier",
            size: g.n(),
            limit: cap,
        });
    }
    if !is_double_col_critical(g) {
        return Ok(ClassLabel::NotApplicable("not double-col-critical".into()));
    }
    let col = colouring_number(g);
    if col != 5 {
        return Ok(ClassLabel::NotApplicable(format!("colouring number {col}, not 5")));
    }
    let n = g.n();
    let mut matches = Vec::new();
    if n >= 5 && are_isomorphic(g, &cycle_square(n)?)? {
        matches.push(ClassLabel::CycleSquare(n));
    }
    for (a, b, order) in GLUED_PAIRS {
        if order == n && are_isomorphic(g, &glued_pair(a, b))? {
            matches.push(ClassLabel::GluedBricks(a, b));
        }
    }
    match matches.len() {
        1 => Ok(matches.pop().expect("one match")),
        0 => Err(Error::ClaimViolated(format!(
            "{} is double-col-critical with col 5 but matches no reference graph",
            graph6_or_size(g)
        ))),
        _ => Err(Error::ClaimViolated(format!(
            "{} matches several reference graphs: {:?}",
            graph6_or_size(g),
            matches.iter().map(ToString::to_string).collect::<Vec<_>>()
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JoinColBounds {
    pub lower: usize,
    pub upper: usize,
    /// Present when `col(G_i) = δ(G_i) + 1` for both sides; then the upper
    /// bound is attained.
    pub exact: Option<usize>,
}

/// Bounds on `col(G1 + G2)`. The lower bound uses the minimal critical
/// subgraph of each side as `J_i`; a smaller `J_i` could tighten it.
pub fn join_col_bounds(g1: &Graph, g2: &Graph) -> Result<JoinColBounds> {
    if g1.is_empty() || g2.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let (c1, c2) = (colouring_number(g1), colouring_number(g2));
    let (n1, n2) = (g1.n(), g2.n());
    let j1 = col_critical_subgraph(g1)?.n();
    let j2 = col_critical_subgraph(g2)?.n();
    let upper = (c1 + n2).min(c2 + n1);
    let lower = (c1 + j2).min(c2 + j1);
    let tight = |g: &Graph, c| g.min_degree().map(|d| d + 1) == Some(c);
    let exact = (tight(g1, c1) && tight(g2, c2)).then_some(upper);
    Ok(JoinColBounds { lower, upper, exact })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionCheck {
    pub condition_i: bool,
    pub condition_ii: bool,
    /// `δ(G1) + n(G2) + 1` when either condition holds.
    pub predicted_col: Option<usize>,
    pub col: usize,
    pub is_col_critical: bool,
}

impl DecompositionCheck {
    pub fn matches(&self) -> bool {
        self.condition_i || self.condition_ii
    }
}

/// Evaluates both join-criticality conditions for `G = G[V1] + G[V2]`.
///
/// When a condition holds, `G` must be col-critical with the predicted
/// colouring number; a mismatch is returned as [`Error::ClaimViolated`].
pub fn check_decomposable_col_critical(
    g: &Graph,
    v1: &[usize],
    v2: &[usize],
) -> Result<DecompositionCheck> {
    let s1: BTreeSet<usize> = v1.iter().copied().collect();
    let s2: BTreeSet<usize> = v2.iter().copied().collect();
    let bad = |msg: String| Err(Error::InvalidDecomposition(msg));
    if s1.is_empty() || s2.is_empty() {
        return bad("both sides must be non-empty".into());
    }
    if s1.len() != v1.len() || s2.len() != v2.len() {
        return bad("repeated vertex in a side".into());
    }
    if let Some(&v) = s1.iter().chain(&s2).find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if s1.len() + s2.len() != g.n() || !s1.is_disjoint(&s2) {
        return bad("sides must partition the vertex set".into());
    }
    for &a in &s1 {
        if let Some(&b) = s2.iter().find(|&&b| !g.has_edge(a, b)) {
            return bad(format!("{a} and {b} lie on opposite sides but are not adjacent"));
        }
    }
    let side1: Vec<usize> = s1.into_iter().collect();
    let side2: Vec<usize> = s2.into_iter().collect();
    let g1 = g.induced_subgraph(&side1)?;
    let g2 = g.induced_subgraph(&side2)?;
    if !g1.is_regular() {
        return bad("G[V1] is not regular".into());
    }
    let (n1, n2) = (g1.n(), g2.n());
    let d1 = g1.min_degree().expect("non-empty");
    let d2 = g2.min_degree().expect("non-empty");

    let non_min: Vec<usize> = g2.vertices().filter(|&v| g2.degree(v) != d2).collect();
    let independent = non_min
        .iter()
        .all(|&a| non_min.iter().all(|&b| !g2.has_edge(a, b)));
    let condition_i = independent && d1 + n2 == d2 + n1;

    let smallest = g1.components().iter().map(Vec::len).min().expect("non-empty");
    let condition_ii = g2.m() == 0 && n1 < n2 + d1 + smallest && n2 + d1 < n1;

    let predicted_col = (condition_i || condition_ii).then_some(d1 + n2 + 1);
    let col = colouring_number(g);
    let critical = is_col_critical(g);
    if let Some(p) = predicted_col {
        if !critical || col != p {
            return Err(Error::ClaimViolated(format!(
                "{}: condition holds (i = {condition_i}, ii = {condition_ii}) with predicted col {p}, \
                 but col = {col} and col-critical = {critical}",
                graph6_or_size(g)
            )));
        }
    }
    Ok(DecompositionCheck {
        condition_i,
        condition_ii,
        predicted_col,
        col,
        is_col_critical: critical,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JoinVerification {
    pub is_double_col_critical: bool,
    pub col: usize,
    /// `min{col(G1) + n(G2), col(G2) + n(G1)}`.
    pub expected_col: usize,
}

impl JoinVerification {
    pub fn holds(&self) -> bool {
        self.is_double_col_critical && self.col == self.expected_col
    }
}

/// Checks that the join of two double-col-critical graphs is again
/// double-col-critical with the expected colouring number. Inputs that are
/// not double-col-critical are rejected with [`Error::Precondition`].
pub fn verify_join_double_col_critical(g1: &Graph, g2: &Graph) -> Result<JoinVerification> {
    for (name, g) in [("G1", g1), ("G2", g2)] {
        if !is_double_col_critical(g) {
            return Err(Error::Precondition(format!(
                "{name} = {} is not double-col-critical",
                graph6_or_size(g)
            )));
        }
    }
    let join = g1.complete_join(g2);
    let expected_col = (colouring_number(g1) + g2.n()).min(colouring_number(g2) + g1.n());
    Ok(JoinVerification {
        is_double_col_critical: is_double_col_critical(&join),
        col: colouring_number(&join),
        expected_col,
    })
}
