//! Corpus generation, file ingestion and batch scanning: run the solver,
//! the bound catalog and the consistency checks over every small graph
//! and emit a deterministic CSV report.

use std::collections::BTreeSet;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bounds::{self, BoundKind};
use crate::graph6::{self, Graph6Error};
use crate::multigraph::MultiGraph;
use crate::solver::{self, Mode, SolveError};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("builtin generator supports at most 7 vertices, requested {0}")]
    GeneratorTooLarge(usize),
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

/// All pairwise non-isomorphic connected simple graphs on exactly `n`
/// vertices (including the one-vertex graph for `n = 1`), as canonical
/// representatives in a deterministic order.
///
/// Graphs are grown one vertex at a time: every connected graph has a
/// non-cut vertex, so attaching a new vertex to each nonempty subset of
/// each smaller graph reaches everything; duplicates are removed by the
/// minimum adjacency encoding over all vertex permutations.
pub fn connected_graphs(n: usize) -> Result<Vec<MultiGraph>, HarnessError> {
    if n > 7 {
        return Err(HarnessError::GeneratorTooLarge(n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: Vec<u64> = vec![0]; // adjacency code of K_1
    for k in 2..=n {
        let perms = permutations(k);
        let mut next: BTreeSet<u64> = BTreeSet::new();
        for &code in &level {
            for subset in 1u64..(1 << (k - 1)) {
                let mut adj = decode_adj(code, k - 1);
                adj.push(0);
                for w in 0..k - 1 {
                    if subset & (1 << w) != 0 {
                        adj[w] |= 1 << (k - 1);
                        adj[k - 1] |= 1 << w;
                    }
                }
                next.insert(canonical_code(&adj, k, &perms));
            }
        }
        level = next.into_iter().collect();
    }
    Ok(level
        .into_iter()
        .map(|code| graph_from_code(code, n))
        .collect())
}

/// Stream of all connected simple graphs with `1..=max_n` vertices and at
/// least one edge.
pub fn generate_connected_graphs(max_n: usize) -> Result<Vec<MultiGraph>, HarnessError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(connected_graphs(n)?.into_iter().filter(|g| g.m() >= 1));
    }
    Ok(out)
}

/// Canonical form of a simple graph on up to 8 vertices: the minimum
/// upper-triangle bit packing over all vertex permutations.
pub fn canonical_form(g: &MultiGraph) -> u64 {
    assert!(g.n() <= 8, "canonical form supports at most 8 vertices");
    assert!(g.is_simple(), "canonical form needs a simple graph");
    let n = g.n();
    let mut adj = vec![0u8; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    canonical_code(&adj, n, &permutations(n))
}

/// The canonical id used in reports: the graph6 encoding of the
/// canonical representative.
pub fn canonical_id(g: &MultiGraph) -> String {
    let code = canonical_form(g);
    graph6::encode(&graph_from_code(code, g.n())).expect("canonical representative is simple")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

fn pack(adj: &[u8], n: usize) -> u64 {
    let mut code = 0u64;
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] & (1 << v) != 0 {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

fn decode_adj(code: u64, n: usize) -> Vec<u8> {
    let mut adj = vec![0u8; n];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code & (1 << bit) != 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    adj
}

fn canonical_code(adj: &[u8], n: usize, perms: &[Vec<usize>]) -> u64 {
    let mut best = u64::MAX;
    for p in perms {
        let mut permuted = vec![0u8; n];
        for u in 0..n {
            for v in u + 1..n {
                if adj[u] & (1 << v) != 0 {
                    permuted[p[u]] |= 1 << p[v];
                    permuted[p[v]] |= 1 << p[u];
                }
            }
        }
        best = best.min(pack(&permuted, n));
    }
    best
}

fn graph_from_code(code: u64, n: usize) -> MultiGraph {
    let adj = decode_adj(code, n);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] & (1 << v) != 0 {
                edges.push((u, v));
            }
        }
    }
    MultiGraph::new(n, edges).expect("decoded graph is loopless")
}

/// One line of a graph6 file: the graph, or the decode error with its
/// line number. Malformed lines never stop the stream.
#[derive(Debug)]
pub struct Graph6Record {
    pub line: usize,
    pub result: Result<MultiGraph, Graph6Error>,
}

pub fn ingest_graph6(path: &Path) -> Result<Vec<Graph6Record>, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(ingest_graph6_str(&text))
}

pub fn ingest_graph6_str(text: &str) -> Vec<Graph6Record> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| Graph6Record {
            line: i + 1,
            result: graph6::decode(l),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    Interval,
    Cyclic,
    Both,
}

impl ScanMode {
    fn modes(self) -> Vec<Mode> {
        match self {
            ScanMode::Interval => vec![Mode::Interval],
            ScanMode::Cyclic => vec![Mode::Cyclic],
            ScanMode::Both => vec![Mode::Interval, Mode::Cyclic],
        }
    }
}

#[derive(Debug, Clone)]
pub enum ScanSource {
    /// Builtin generator up to `max_vertices`.
    Builtin,
    /// A graph6 file produced externally.
    Graph6File(PathBuf),
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub max_vertices: usize,
    pub max_degree: Option<usize>,
    pub triangle_free_only: bool,
    pub mode: ScanMode,
    pub source: ScanSource,
    pub out_path: Option<PathBuf>,
    /// Per-graph wall clock budget; rows past it get the `timeout`
    /// verdict instead of stalling the scan.
    pub budget: Option<Duration>,
}

#[derive(Debug, Clone)]
pub struct ScanRow {
    pub graph_id: String,
    pub mode: Mode,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub triangle_free: bool,
    pub bipartite: bool,
    pub min_colors: Option<usize>,
    pub max_colors: Option<usize>,
    pub feasible: Vec<usize>,
    pub verdict: String,
    pub violations: Vec<String>,
    pub conjecture: String,
}

#[derive(Debug, Clone, Default)]
pub struct ScanSummary {
    pub graphs: usize,
    pub rows: usize,
    pub violations: usize,
    pub conjecture_violations: usize,
    /// Largest observed `W_c - n` over cyclically colorable rows.
    pub max_wc_minus_n: Option<i64>,
    /// Rows where some applicable upper bound is attained exactly.
    pub tight_rows: usize,
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub summary: ScanSummary,
}

pub const SCAN_CSV_HEADER: &str =
    "graph-id,mode,n,m,delta,triangle-free,bipartite,wmin,wmax,feasible-set,verdict,violations,conjecture";

impl ScanReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(SCAN_CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let fmt_opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
            let feas = r
                .feasible
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(";");
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                r.graph_id,
                r.mode,
                r.n,
                r.m,
                r.delta,
                r.triangle_free,
                r.bipartite,
                fmt_opt(r.min_colors),
                fmt_opt(r.max_colors),
                feas,
                r.verdict,
                r.violations.join(";"),
                r.conjecture
            ));
        }
        out
    }
}

/// Scan a corpus: stats, exact solve at cutoff `m` for each configured
/// mode, bound evaluation and consistency checks per graph, plus an
/// aggregate summary. Identical configurations yield byte-identical
/// reports (absent a time budget).
pub fn scan(config: &ScanConfig) -> Result<ScanReport, HarnessError> {
    let mut graphs: Vec<(String, MultiGraph)> = Vec::new();
    match &config.source {
        ScanSource::Builtin => {
            for g in generate_connected_graphs(config.max_vertices)? {
                // Generator output is already the canonical representative.
                let id = graph6::encode(&g).expect("generated graphs are simple");
                graphs.push((id, g));
            }
        }
        ScanSource::Graph6File(path) => {
            for record in ingest_graph6(path)? {
                match record.result {
                    Ok(g) => {
                        let id = if g.n() <= 8 {
                            canonical_id(&g)
                        } else {
                            graph6::encode(&g).unwrap_or_else(|_| format!("line{}", record.line))
                        };
                        graphs.push((id, g));
                    }
                    Err(e) => eprintln!("graph6 line {}: {}", record.line, e),
                }
            }
        }
    }

    let mut rows = Vec::new();
    let mut summary = ScanSummary::default();
    for (id, g) in &graphs {
        let stats = g.stats();
        if stats.n > config.max_vertices || stats.m == 0 {
            continue;
        }
        if config.triangle_free_only && !stats.triangle_free {
            continue;
        }
        if let Some(cap) = config.max_degree {
            if stats.max_degree > cap {
                continue;
            }
        }
        summary.graphs += 1;
        let report = bounds::evaluate_bounds(g, &stats);
        let deadline = config.budget.map(|b| Instant::now() + b);
        for mode in config.mode.modes() {
            let mut row = ScanRow {
                graph_id: id.clone(),
                mode,
                n: stats.n,
                m: stats.m,
                delta: stats.max_degree,
                triangle_free: stats.triangle_free,
                bipartite: stats.bipartite,
                min_colors: None,
                max_colors: None,
                feasible: Vec::new(),
                verdict: String::new(),
                violations: Vec::new(),
                conjecture: "-".to_string(),
            };
            match solver::solve_with_deadline(g, mode, Some(stats.m), deadline) {
                Ok(result) => {
                    row.min_colors = result.min_colors();
                    row.max_colors = result.max_colors();
                    row.feasible = result.feasible_set();
                    row.verdict = result.verdict.to_string();
                    let consistency = bounds::check_consistency(g, &stats, &report, &result);
                    row.violations = consistency
                        .violations
                        .iter()
                        .map(|v| format!("{}({})", v.bound, v.detail.replace(',', ";")))
                        .collect();
                    summary.violations += row.violations.len();
                    if mode == Mode::Cyclic {
                        if !consistency.conjectures.is_empty() {
                            row.conjecture = consistency
                                .conjectures
                                .iter()
                                .map(|c| {
                                    format!(
                                        "{}:{}",
                                        c.name,
                                        if c.holds { "holds" } else { "VIOLATED" }
                                    )
                                })
                                .collect::<Vec<_>>()
                                .join(";");
                        }
                        summary.conjecture_violations +=
                            consistency.conjectures.iter().filter(|c| !c.holds).count();
                        if let Some(wc) = result.max_colors() {
                            let diff = wc as i64 - stats.n as i64;
                            summary.max_wc_minus_n =
                                Some(summary.max_wc_minus_n.map_or(diff, |x| x.max(diff)));
                        }
                    }
                    if let Some(observed) = result.max_colors() {
                        let want = match mode {
                            Mode::Interval => BoundKind::UpperW,
                            Mode::Cyclic => BoundKind::UpperWc,
                        };
                        let tight = report.entries.iter().any(|e| {
                            e.applicable
                                && e.kind == want
                                && bounds::floor_value(e.value.unwrap()) == observed as i64
                        });
                        if tight {
                            summary.tight_rows += 1;
                        }
                    }
                }
                Err(SolveError::Timeout) => {
                    row.verdict = "timeout".to_string();
                }
                Err(e) => {
                    row.verdict = format!("error:{}", e).replace(',', ";");
                }
            }
            rows.push(row);
        }
    }
    summary.rows = rows.len();
    let report = ScanReport { rows, summary };
    if let Some(path) = &config.out_path {
        let mut file = std::fs::File::create(path).map_err(|source| HarnessError::Io {
            path: path.clone(),
            source,
        })?;
        file.write_all(report.to_csv().as_bytes())
            .map_err(|source| HarnessError::Io {
                path: path.clone(),
                source,
            })?;
    }
    Ok(report)
}
