//! The `degencrit` command line. [`run`] takes its streams as arguments so
//! tests can drive it in process.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::json;

use crate::census::{census_col4_edge_bound, census_dcc5, find_ratio_threshold, property_sweep, RatioThreshold};
use crate::classifier::{classify_dcc5, ClassLabel};
use crate::criticality::{criticality_report, parse_ratio, ratio_string, CriticalityReport};
use crate::error::{Error, Result};
use crate::families::{
    brick, cycle, cycle_square, f_graph, f_graph_as_printed, g_t, glued_pair, icosahedron, path, ratio_family,
    toroidal_triangulated, wheel, BrickKind,
};
use crate::graph::Graph;
use crate::io::{parse_graphs, to_edge_list, to_graph6};
use crate::verify::{self, oracle_compare, random_corpus, run_suite, CheckOutcome, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "degencrit", version, about = "Colouring number and double-col-critical graphs")]
pub struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a member of a named family.
    Gen {
        /// complete|edgeless|cycle|path|cycle-square|wheel N, brick k5|k222,
        /// glued A B, f-graph K, f-graph-as-printed K, icosahedron,
        /// torus R C, ratio-family P K, gt T
        family: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Colouring number and criticality of every graph in the input.
    Analyze(Input),
    /// Classify double-col-critical graphs with colouring number 5.
    Classify(Input),
    /// Exhaustive censuses.
    Census {
        #[arg(value_enum)]
        kind: CensusKind,
        #[arg(long)]
        nmax: Option<usize>,
        /// Rational tolerance for ratio-threshold, as a/b.
        #[arg(long, default_value = "1/10", value_parser = parse_epsilon)]
        epsilon: Ratio<usize>,
        /// Colouring number for ratio-threshold; all of 5, 6, 7 when absent.
        #[arg(long)]
        p: Option<usize>,
        /// Also write the graph6 of every reported graph to this file.
        #[arg(long)]
        sidecar: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum, default_value_t = SuiteName::All)]
        suite: SuiteName,
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Compare the fast colouring number with the brute-force oracles.
    Oracle {
        /// Graph file or "-"; a seeded random corpus when absent.
        input: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 9)]
        nmax: usize,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Graph file (graph6 lines or an edge list), or "-" for stdin.
    #[arg(default_value = "-")]
    pub input: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CensusKind {
    Dcc5,
    Col4Bound,
    Sweep,
    RatioThreshold,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    All,
    Observations,
    Joins,
    Theorem28,
    Prop33,
}

impl From<SuiteName> for Suite {
    fn from(s: SuiteName) -> Self {
        match s {
            SuiteName::All => Suite::All,
            SuiteName::Observations => Suite::Observations,
            SuiteName::Joins => Suite::Joins,
            SuiteName::Theorem28 => Suite::Theorem28,
            SuiteName::Prop33 => Suite::Prop33,
        }
    }
}

fn parse_epsilon(s: &str) -> std::result::Result<Ratio<usize>, String> {
    parse_ratio(s).ok_or_else(|| format!("expected a rational a/b with b > 0, got {s:?}"))
}

/// Errors from a command, each tied to an exit code.
#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Lib(Error::Graph6(_) | Error::EdgeList(_)) | Failure::Io(_) => EXIT_INPUT,
            Failure::Lib(Error::ClaimViolated(_)) => EXIT_FAILED,
            Failure::Lib(_) => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "I/O error: {e}"),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli, stdin, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {f}");
            f.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Gen { family, params, format } => {
            let g = family_graph(family, params)?;
            if json {
                let value = json!({
                    "family": family,
                    "params": params,
                    "n": g.n(),
                    "m": g.m(),
                    "graph6": to_graph6(&g)?,
                });
                writeln!(out, "{value}")?;
            } else {
                match format {
                    Format::Graph6 => writeln!(out, "{}", to_graph6(&g)?)?,
                    Format::Edges => write!(out, "{}", to_edge_list(&g))?,
                }
            }
            Ok(EXIT_OK)
        }
        Command::Analyze(input) => {
            for g in read_graphs(&input.input, stdin)? {
                let a = analysis(&g)?;
                if json {
                    writeln!(out, "{}", serde_json::to_string(&a)?)?;
                } else {
                    write_analysis(out, &a)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Classify(input) => {
            for g in read_graphs(&input.input, stdin)? {
                let label = classify_dcc5(&g)?;
                if json {
                    writeln!(out, "{}", json!({ "graph6": to_graph6(&g)?, "class_label": label }))?;
                } else {
                    writeln!(out, "{label}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Census {
            kind,
            nmax,
            epsilon,
            p,
            sidecar,
        } => census(*kind, *nmax, *epsilon, *p, sidecar.as_deref(), json, out),
        Command::Verify { suite, nmax } => {
            let checks = run_suite((*suite).into(), *nmax)?;
            write_checks(out, &checks, json)?;
            Ok(if checks.iter().all(|c| c.passed) { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Oracle {
            input,
            seed,
            count,
            nmax,
        } => {
            let graphs = match input {
                Some(path) => read_graphs(path, stdin)?,
                None => random_corpus(*seed, *count, *nmax),
            };
            let mut mismatches = 0;
            for g in &graphs {
                let c = oracle_compare(g)?;
                if !c.agrees() {
                    mismatches += 1;
                    let text = to_graph6(g)?;
                    if json {
                        writeln!(out, "{}", json!({ "mismatch": text, "comparison": c }))?;
                    } else {
                        writeln!(out, "mismatch {text}: {c:?}")?;
                    }
                }
            }
            if json {
                writeln!(out, "{}", json!({ "graphs": graphs.len(), "mismatches": mismatches }))?;
            } else {
                writeln!(out, "{} graphs, {mismatches} mismatches", graphs.len())?;
            }
            Ok(if mismatches == 0 { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

fn census(
    kind: CensusKind,
    nmax: Option<usize>,
    epsilon: Ratio<usize>,
    p: Option<usize>,
    sidecar: Option<&str>,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let mut listed = Vec::new();
    let passed = match kind {
        CensusKind::Dcc5 => {
            let rows = census_dcc5(nmax.unwrap_or(9))?;
            let mut ok = true;
            for row in &rows {
                let mut got: Vec<&str> = row.hits.iter().map(|h| h.graph6.as_str()).collect();
                got.sort_unstable();
                ok &= got == verify::expected_dcc5(row.n)?;
                listed.extend(row.hits.iter().map(|h| h.graph6.clone()));
                if json {
                    writeln!(out, "{}", serde_json::to_string(row)?)?;
                } else {
                    let labels: Vec<&str> = row.hits.iter().map(|h| h.label.as_str()).collect();
                    writeln!(out, "n={} enumerated={} hits={} {}", row.n, row.graphs_enumerated, row.hits.len(), labels.join(" "))?;
                }
            }
            ok
        }
        CensusKind::Col4Bound => {
            let c = census_col4_edge_bound(nmax.unwrap_or(8))?;
            if json {
                for row in &c.rows {
                    writeln!(out, "{}", serde_json::to_string(row)?)?;
                }
                let summary = json!({
                    "n_max": c.n_max,
                    "graphs": c.rows.len(),
                    "bound_violations": c.bound_violations,
                    "extremal_non_wheels": c.extremal_non_wheels,
                    "extremal_orders": c.extremal_orders,
                    "min_extremal_order": c.min_extremal_order,
                    "wheels": c.wheels,
                });
                writeln!(out, "{summary}")?;
            } else {
                for row in &c.rows {
                    let tag = match (row.is_extremal, row.is_wheel) {
                        (true, true) => " extremal wheel",
                        (true, false) => " extremal",
                        (false, true) => " wheel",
                        _ => "",
                    };
                    writeln!(out, "{} n={} m={} dcc={}{tag}", row.graph6, row.n, row.m, row.dcc_count)?;
                }
                writeln!(
                    out,
                    "{} graphs, {} bound violations, {} extremal non-wheels, extremal orders {:?}",
                    c.rows.len(),
                    c.bound_violations.len(),
                    c.extremal_non_wheels.len(),
                    c.extremal_orders
                )?;
            }
            listed.extend(c.rows.iter().map(|r| r.graph6.clone()));
            c.bound_violations.is_empty() && c.extremal_non_wheels.is_empty()
        }
        CensusKind::Sweep => {
            let s = property_sweep(nmax.unwrap_or(7))?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&s)?)?;
            } else {
                for v in &s.violations {
                    writeln!(out, "violation {} {}: {}", v.property, v.graph6, v.detail)?;
                }
                writeln!(
                    out,
                    "{} graphs, {} double-col-critical with col 5, {} violations",
                    s.graphs_checked,
                    s.dcc5_checked,
                    s.violations.len()
                )?;
            }
            listed.extend(s.violations.iter().map(|v| v.graph6.clone()));
            s.violations.is_empty()
        }
        CensusKind::RatioThreshold => {
            let ps = match p {
                Some(p) => vec![p],
                None => vec![5, 6, 7],
            };
            let mut ok = true;
            for p in ps {
                let t = find_ratio_threshold(p, epsilon)?;
                if json {
                    writeln!(out, "{}", serde_json::to_string(&t)?)?;
                } else {
                    match &t {
                        RatioThreshold::Found { p, k, ratio, dcc_count, m } => writeln!(
                            out,
                            "p={p} epsilon={} k={k} ratio={} ({dcc_count} of {m} edges)",
                            ratio_string(&epsilon),
                            ratio_string(ratio)
                        )?,
                        RatioThreshold::CapExceeded { p, cap } => {
                            writeln!(out, "p={p} epsilon={} no k up to {cap}", ratio_string(&epsilon))?
                        }
                    }
                }
                if let RatioThreshold::Found { p, k, .. } = t {
                    listed.push(to_graph6(&ratio_family(p, k)?)?);
                } else {
                    ok = false;
                }
            }
            ok
        }
    };
    if let Some(path) = sidecar {
        let mut text = listed.join("\n");
        if !text.is_empty() {
            text.push('\n');
        }
        fs::write(path, text)?;
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}

fn write_checks(out: &mut dyn Write, checks: &[CheckOutcome], json: bool) -> io::Result<()> {
    for c in checks {
        if json {
            writeln!(out, "{}", serde_json::to_string(c)?)?;
        } else {
            let status = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(out, "{status} {}: {}", c.suite, c.check)?;
            } else {
                writeln!(out, "{status} {}: {} ({})", c.suite, c.check, c.detail)?;
            }
        }
    }
    Ok(())
}

fn read_graphs(source: &str, stdin: &mut dyn Read) -> std::result::Result<Vec<Graph>, Failure> {
    let text = if source == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(source)?
    };
    Ok(parse_graphs(&text)?)
}

/// The JSON record printed by `analyze --json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub n: usize,
    pub m: usize,
    pub col: usize,
    pub delta: Option<usize>,
    #[serde(rename = "Delta")]
    pub max_delta: Option<usize>,
    pub col_critical: bool,
    pub col_vertex_critical: bool,
    pub double_col_critical: bool,
    pub dcc_edges: Vec<String>,
    pub dcc_ratio: Option<String>,
    pub two_connected: bool,
    pub class_label: ClassLabel,
}

impl Analysis {
    pub fn new(g: &Graph, r: &CriticalityReport, class_label: ClassLabel) -> Self {
        Analysis {
            n: g.n(),
            m: g.m(),
            col: r.col,
            delta: g.min_degree(),
            max_delta: g.max_degree(),
            col_critical: r.is_col_critical,
            col_vertex_critical: r.is_col_vertex_critical,
            double_col_critical: r.is_double_col_critical,
            dcc_edges: r.dcc_edges.iter().map(ToString::to_string).collect(),
            dcc_ratio: r.dcc_ratio.as_ref().map(ratio_string),
            two_connected: r.is_two_connected,
            class_label,
        }
    }
}

/// The in-process equivalent of `analyze`.
pub fn analysis(g: &Graph) -> Result<Analysis> {
    let r = criticality_report(g);
    let label = if !r.is_double_col_critical {
        ClassLabel::NotApplicable("not double-col-critical".into())
    } else if r.col != 5 {
        ClassLabel::NotApplicable(format!("colouring number {}, not 5", r.col))
    } else {
        classify_dcc5(g)?
    };
    Ok(Analysis::new(g, &r, label))
}

fn write_analysis(out: &mut dyn Write, a: &Analysis) -> io::Result<()> {
    let opt = |x: Option<usize>| x.map_or("-".to_string(), |d| d.to_string());
    writeln!(out, "n {}", a.n)?;
    writeln!(out, "m {}", a.m)?;
    writeln!(out, "col {}", a.col)?;
    writeln!(out, "delta {}", opt(a.delta))?;
    writeln!(out, "Delta {}", opt(a.max_delta))?;
    writeln!(out, "col_critical {}", a.col_critical)?;
    writeln!(out, "col_vertex_critical {}", a.col_vertex_critical)?;
    writeln!(out, "double_col_critical {}", a.double_col_critical)?;
    writeln!(out, "dcc_edges {}", a.dcc_edges.join(" "))?;
    writeln!(out, "dcc_ratio {}", a.dcc_ratio.as_deref().unwrap_or("-"))?;
    writeln!(out, "two_connected {}", a.two_connected)?;
    writeln!(out, "class_label {}", a.class_label)?;
    writeln!(out)
}

fn number(family: &str, s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::InvalidParameter(format!("{family}: expected a non-negative integer, got {s:?}")))
}

fn brick_kind(s: &str) -> Result<BrickKind> {
    BrickKind::from_short_name(s)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown brick {s:?}, expected k5 or k222")))
}

/// Builds a family member from its CLI spelling, e.g. `("torus", ["4", "4"])`.
pub fn family_graph(family: &str, params: &[String]) -> Result<Graph> {
    let arity = match family {
        "icosahedron" => 0,
        "complete" | "edgeless" | "cycle" | "path" | "cycle-square" | "wheel" | "brick" | "f-graph"
        | "f-graph-as-printed" | "gt" => 1,
        "glued" | "torus" | "ratio-family" => 2,
        _ => return Err(Error::InvalidParameter(format!("unknown family {family:?}"))),
    };
    if params.len() != arity {
        return Err(Error::InvalidParameter(format!(
            "{family} takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    let num = |i: usize| number(family, &params[i]);
    Ok(match family {
        "icosahedron" => icosahedron(),
        "complete" => Graph::complete(num(0)?),
        "edgeless" => Graph::edgeless(num(0)?),
        "cycle" => cycle(num(0)?)?,
        "path" => path(num(0)?),
        "cycle-square" => cycle_square(num(0)?)?,
        "wheel" => wheel(num(0)?)?,
        "brick" => brick(brick_kind(&params[0])?),
        "f-graph" => f_graph(num(0)?)?,
        "f-graph-as-printed" => f_graph_as_printed(num(0)?)?,
        "gt" => g_t(num(0)?)?,
        "glued" => glued_pair(brick_kind(&params[0])?, brick_kind(&params[1])?),
        "torus" => toroidal_triangulated(num(0)?, num(1)?)?,
        "ratio-family" => ratio_family(num(0)?, num(1)?)?,
        _ => unreachable!("arity table covers every family"),
    })
}
