//! The bound catalog: every upper/lower bound and obstruction evaluated
//! against a graph's structure, plus the consistency checker that turns
//! each bound into an assertion against exact solver results.
//!
//! Real-valued bounds are kept as reals; an integer color count `W`
//! satisfies `W <= bound` iff `W <= floor(bound)`, so comparisons floor
//! (resp. ceil for lower bounds) with a small epsilon to absorb dyadic
//! rounding.

use std::fmt;

use crate::multigraph::{GraphStats, MultiGraph};
use crate::solver::{Mode, SolveResult, Verdict};

pub const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// Upper bound on W (interval).
    UpperW,
    /// Upper bound on W_c (cyclic).
    UpperWc,
    /// Lower bound on w (interval minimum).
    LowerW,
    /// Lower bound on W (interval maximum).
    LowerWMax,
    /// Structural proof of non-colorability (interval).
    Obstruction,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::UpperW => write!(f, "upper-W"),
            BoundKind::UpperWc => write!(f, "upper-Wc"),
            BoundKind::LowerW => write!(f, "lower-w"),
            BoundKind::LowerWMax => write!(f, "lower-W"),
            BoundKind::Obstruction => write!(f, "obstruction"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BoundEntry {
    pub name: &'static str,
    pub kind: BoundKind,
    /// Present iff applicable.
    pub value: Option<f64>,
    pub applicable: bool,
    /// Why the bound does or does not apply.
    pub reason: String,
}

#[derive(Debug, Clone, Default)]
pub struct BoundsReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundsReport {
    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// CSV rows `graph-id,bound-name,kind,applicable,value`.
    pub fn csv_rows(&self, graph_id: &str) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let value = e.value.map(format_value).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                graph_id, e.name, e.kind, e.applicable, value
            ));
        }
        out
    }

    pub const CSV_HEADER: &'static str = "graph-id,bound-name,kind,applicable,value";
}

pub fn format_value(v: f64) -> String {
    if (v - v.round()).abs() < 1e-9 {
        format!("{}", v.round() as i64)
    } else {
        format!("{:.4}", v)
    }
}

/// Sharp integer consequence of `x <= v` for integer x.
pub fn floor_value(v: f64) -> i64 {
    (v + 1e-9).floor() as i64
}

/// Sharp integer consequence of `x >= v` for integer x.
pub fn ceil_value(v: f64) -> i64 {
    (v - 1e-9).ceil() as i64
}

/// Smallest `d >= 2` dividing every degree but not the edge count; its
/// presence proves the graph has no interval coloring. The Eulerian
/// odd-size case is `d = 2`.
pub fn divisibility_obstruction(g: &MultiGraph) -> Option<usize> {
    if g.n() == 0 || g.m() == 0 {
        return None;
    }
    let min_deg = g.min_degree();
    if min_deg == 0 {
        return None;
    }
    (2..=min_deg).find(|&d| {
        (0..g.n()).all(|v| g.incident(v).len() % d == 0) && g.m() % d != 0
    })
}

/// Evaluate the full catalog with flag-driven defaults for the sparse
/// bound parameters.
pub fn evaluate_bounds(g: &MultiGraph, stats: &GraphStats) -> BoundsReport {
    evaluate_bounds_with(g, stats, None)
}

/// Evaluate the catalog; `sparse_params = Some((a, b))` overrides the
/// flag-driven `(a, b)` of the sparse cyclic bound (planar: `(3, -6)`,
/// outerplanar: `(2, -3)`).
pub fn evaluate_bounds_with(
    g: &MultiGraph,
    stats: &GraphStats,
    sparse_params: Option<(f64, f64)>,
) -> BoundsReport {
    let mut entries = Vec::new();
    let n = stats.n as f64;
    let m = stats.m as f64;
    let delta = stats.max_degree as f64;
    let small_delta = stats.min_degree as f64;
    let d = stats.average_degree;
    let simple = g.is_simple();
    let flags = g.flags();
    let regular = stats.max_degree == stats.min_degree && stats.n > 0;

    let mut push = |name: &'static str, kind: BoundKind, applicable: bool, value: f64, reason: String| {
        entries.push(BoundEntry {
            name,
            kind,
            value: applicable.then_some(value),
            applicable,
            reason,
        });
    };

    // Upper bounds on W.
    push(
        "triangle-free-order",
        BoundKind::UpperW,
        simple && stats.triangle_free && stats.n >= 2,
        n - 1.0,
        tag(
            simple && stats.triangle_free && stats.n >= 2,
            "triangle-free graph",
        ),
    );
    push(
        "general-order",
        BoundKind::UpperW,
        simple && stats.n >= 2,
        2.0 * n - 3.0,
        tag(simple && stats.n >= 2, "graph with at least two vertices"),
    );
    push(
        "general-order-improved",
        BoundKind::UpperW,
        simple && stats.n >= 3,
        2.0 * n - 4.0,
        tag(simple && stats.n >= 3, "graph with at least three vertices"),
    );
    if stats.biconnected {
        let c = g.circumference() as f64;
        push(
            "circumference",
            BoundKind::UpperW,
            true,
            1.0 + (c / 2.0).floor() * (delta - 1.0),
            "2-connected multigraph".to_string(),
        );
    } else {
        push(
            "circumference",
            BoundKind::UpperW,
            false,
            0.0,
            "needs a 2-connected multigraph".to_string(),
        );
    }
    push(
        "half-order",
        BoundKind::UpperW,
        stats.biconnected,
        1.0 + (n / 2.0).floor() * (delta - 1.0),
        tag(stats.biconnected, "2-connected multigraph"),
    );
    push(
        "half-order-deg4",
        BoundKind::UpperW,
        stats.biconnected && stats.max_degree <= 4,
        3.0 * (n / 2.0).floor() + 1.0,
        tag(
            stats.biconnected && stats.max_degree <= 4,
            "2-connected multigraph with maximum degree at most 4",
        ),
    );
    push(
        "planar-deg4",
        BoundKind::UpperW,
        stats.biconnected && stats.max_degree <= 4 && flags.planar && simple,
        1.5 * n,
        tag(
            stats.biconnected && stats.max_degree <= 4 && flags.planar && simple,
            "2-connected planar graph with maximum degree at most 4",
        ),
    );
    push(
        "regular-half-order",
        BoundKind::UpperW,
        stats.connected && regular,
        1.0 + (n / 2.0).floor() * (delta - 1.0),
        tag(stats.connected && regular, "connected regular multigraph"),
    );
    push(
        "cubic-order",
        BoundKind::UpperW,
        stats.connected && regular && stats.max_degree == 3,
        n + 1.0,
        tag(
            stats.connected && regular && stats.max_degree == 3,
            "connected cubic multigraph",
        ),
    );
    let diam = if stats.connected && simple {
        g.diameter().ok().map(|x| x as f64)
    } else {
        None
    };
    push(
        "diameter",
        BoundKind::UpperW,
        diam.is_some(),
        diam.map(|dm| (dm + 1.0) * (delta - 1.0) + 1.0).unwrap_or(0.0),
        tag(diam.is_some(), "connected graph"),
    );
    push(
        "diameter-bipartite",
        BoundKind::UpperW,
        diam.is_some() && stats.bipartite,
        diam.map(|dm| dm * (delta - 1.0) + 1.0).unwrap_or(0.0),
        tag(diam.is_some() && stats.bipartite, "connected bipartite graph"),
    );
    push(
        "planar-axenovich",
        BoundKind::UpperW,
        simple && flags.planar,
        11.0 * n / 6.0,
        tag(simple && flags.planar, "planar graph"),
    );

    // Lower bound on W for regular graphs with chromatic index Delta.
    {
        let cheap = simple
            && regular
            && stats.n >= 3
            && stats.max_degree < 60
            && stats.n <= (1usize << stats.max_degree) + 1
            && stats.m >= 1;
        let applicable = cheap && g.chromatic_index() == stats.max_degree;
        let value = delta + ((n - 1.0).log2()).floor();
        push(
            "regular-log-lower",
            BoundKind::LowerWMax,
            applicable,
            value,
            tag(
                applicable,
                "regular graph with chromatic index equal to its maximum degree and 3 <= n <= 2^Delta + 1",
            ),
        );
    }

    // Upper bounds on W_c. The cyclic results are stated for graphs.
    push(
        "cyclic-tf-order-delta-2",
        BoundKind::UpperWc,
        simple && stats.connected && stats.triangle_free && stats.n >= 2,
        n + delta - 2.0,
        tag(
            simple && stats.connected && stats.triangle_free && stats.n >= 2,
            "connected triangle-free graph",
        ),
    );
    push(
        "cyclic-order-delta-5",
        BoundKind::UpperWc,
        simple && stats.connected && stats.n >= 3,
        2.0 * n + delta - 5.0,
        tag(
            simple && stats.connected && stats.n >= 3,
            "connected graph with at least three vertices",
        ),
    );
    push(
        "cyclic-tf-order-delta-3",
        BoundKind::UpperWc,
        simple && stats.triangle_free && stats.max_degree >= 3,
        n + delta - 3.0,
        tag(
            simple && stats.triangle_free && stats.max_degree >= 3,
            "triangle-free graph with maximum degree at least 3",
        ),
    );
    push(
        "cyclic-order-delta-6",
        BoundKind::UpperWc,
        simple && stats.max_degree >= 3,
        2.0 * n + delta - 6.0,
        tag(
            simple && stats.max_degree >= 3,
            "graph with maximum degree at least 3",
        ),
    );
    push(
        "cyclic-tf-deg4-order",
        BoundKind::UpperWc,
        simple && stats.triangle_free && stats.max_degree <= 4,
        n,
        tag(
            simple && stats.triangle_free && stats.max_degree <= 4,
            "triangle-free graph with maximum degree at most 4",
        ),
    );
    push(
        "cyclic-tf-sqrt3",
        BoundKind::UpperWc,
        simple && stats.triangle_free,
        (SQRT3 + 1.0) / 2.0 * (n - 1.0),
        tag(simple && stats.triangle_free, "triangle-free graph"),
    );
    push(
        "cyclic-sqrt3",
        BoundKind::UpperWc,
        simple && stats.n >= 2,
        (SQRT3 + 1.0) * n - 3.0,
        tag(simple && stats.n >= 2, "graph with at least two vertices"),
    );
    push(
        "cyclic-average-degree",
        BoundKind::UpperWc,
        simple && stats.n >= 3,
        2.0 * n + d - 3.5,
        tag(simple && stats.n >= 3, "graph with at least three vertices"),
    );
    push(
        "cyclic-planar",
        BoundKind::UpperWc,
        simple && flags.planar,
        2.0 * n + 2.0,
        tag(simple && flags.planar, "planar graph"),
    );
    {
        // Sparse bound with parameters (a, b): needs m <= a n + b and
        // 8b + 1 <= (3 - 4a)^2.
        let params = sparse_params.or(if flags.planar {
            Some((3.0, -6.0))
        } else if flags.outerplanar {
            Some((2.0, -3.0))
        } else {
            None
        });
        let (applicable, value, reason) = match params {
            Some((a, b)) => {
                let density_ok = m <= a * n + b + 1e-9;
                let discriminant_ok = 8.0 * b + 1.0 <= (3.0 - 4.0 * a).powi(2) + 1e-9;
                let ok = simple && stats.triangle_free && density_ok && discriminant_ok;
                let reason = if ok {
                    format!("triangle-free graph with m <= {}n{:+}", a, b)
                } else if !discriminant_ok {
                    format!("(a, b) = ({}, {}) violates 8b+1 <= (3-4a)^2", a, b)
                } else if !density_ok {
                    format!("m = {} exceeds {}n{:+}", stats.m, a, b)
                } else {
                    "needs a triangle-free graph".to_string()
                };
                (ok, n + 2.0 * a - 2.0, reason)
            }
            None => (
                false,
                0.0,
                "no (a, b) parameters; pass them or set a geometry flag".to_string(),
            ),
        };
        push("cyclic-sparse", BoundKind::UpperWc, applicable, value, reason);
    }
    push(
        "cyclic-tf-planar",
        BoundKind::UpperWc,
        simple && stats.triangle_free && flags.planar,
        n + 2.0,
        tag(
            simple && stats.triangle_free && flags.planar,
            "triangle-free planar graph",
        ),
    );
    push(
        "cyclic-tf-outerplanar",
        BoundKind::UpperWc,
        simple && stats.triangle_free && flags.outerplanar && stats.n >= 2,
        n + 1.0,
        tag(
            simple && stats.triangle_free && flags.outerplanar && stats.n >= 2,
            "triangle-free outerplanar graph",
        ),
    );

    // Lower bounds on w.
    {
        let applicable = stats.m >= 1;
        let value = if applicable {
            let matching = g.max_matching_size() as f64;
            (n / (2.0 * matching)).ceil() * small_delta
        } else {
            0.0
        };
        push(
            "matching-lower",
            BoundKind::LowerW,
            applicable,
            value,
            tag(applicable, "multigraph (via its maximum matching)"),
        );
    }
    {
        let applicable = stats.m >= 1 && 2 * g.max_matching_size() < stats.n;
        push(
            "no-perfect-matching-lower",
            BoundKind::LowerW,
            applicable,
            delta.max(2.0 * small_delta),
            tag(applicable, "multigraph without a perfect matching"),
        );
    }
    {
        let applicable = stats.odd_multigraph
            && stats.n >= 1
            && stats.n % 2 == 0
            && (stats.m - stats.n / 2) % 2 == 1;
        push(
            "odd-multigraph-lower",
            BoundKind::LowerW,
            applicable,
            delta.max(2.0 * small_delta),
            tag(
                applicable,
                "odd multigraph with m - n/2 odd",
            ),
        );
    }

    // Divisibility obstruction.
    {
        let d = divisibility_obstruction(g);
        push(
            "divisibility",
            BoundKind::Obstruction,
            d.is_some(),
            d.unwrap_or(0) as f64,
            match d {
                Some(d) => format!("{} divides every degree but not m = {}", d, stats.m),
                None => "no divisor of all degrees avoids m".to_string(),
            },
        );
    }

    BoundsReport { entries }
}

fn tag(applicable: bool, hypothesis: &str) -> String {
    if applicable {
        hypothesis.to_string()
    } else {
        format!("needs: {}", hypothesis)
    }
}

/// A failed theorem assertion; any occurrence on exact solver output is a
/// bug in this artifact (or a disproof of published work).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyViolation {
    pub bound: String,
    pub detail: String,
}

impl fmt::Display for ConsistencyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.bound, self.detail)
    }
}

/// Status of the open conjectured bounds, reported on a separate channel:
/// a counterexample is a finding, never a test failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureStatus {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct ConsistencyReport {
    pub violations: Vec<ConsistencyViolation>,
    pub conjectures: Vec<ConjectureStatus>,
}

/// Check an exact solve against every applicable bound: upper bounds must
/// dominate the observed maximum, lower bounds stay below the minimum, an
/// obstruction forces infeasibility, and colorability forces the
/// chromatic index down to the maximum degree (with the converse for
/// regular multigraphs).
pub fn check_consistency(
    g: &MultiGraph,
    stats: &GraphStats,
    report: &BoundsReport,
    result: &SolveResult,
) -> ConsistencyReport {
    let mut out = ConsistencyReport::default();
    let exact = result.cutoff == stats.m;
    let mut violate = |bound: &str, detail: String| {
        out.violations.push(ConsistencyViolation {
            bound: bound.to_string(),
            detail,
        });
    };
    match result.mode {
        Mode::Interval => {
            if let (Some(w), Some(w_max)) = (result.min_colors(), result.max_colors()) {
                let chi = g.chromatic_index();
                if chi != stats.max_degree {
                    violate(
                        "proposition-chromatic-index",
                        format!(
                            "interval colorable but chromatic index {} != max degree {}",
                            chi, stats.max_degree
                        ),
                    );
                }
                for e in report.entries.iter().filter(|e| e.applicable) {
                    let value = e.value.expect("applicable entries carry values");
                    match e.kind {
                        BoundKind::UpperW => {
                            if (w_max as i64) > floor_value(value) {
                                violate(
                                    e.name,
                                    format!("W >= {} exceeds upper bound {}", w_max, value),
                                );
                            }
                        }
                        BoundKind::LowerW => {
                            if (w as i64) < ceil_value(value) {
                                violate(
                                    e.name,
                                    format!("w = {} below lower bound {}", w, value),
                                );
                            }
                        }
                        BoundKind::LowerWMax => {
                            if exact && (w_max as i64) < ceil_value(value) {
                                violate(
                                    e.name,
                                    format!("W = {} below lower bound {}", w_max, value),
                                );
                            }
                        }
                        BoundKind::Obstruction => {
                            violate(
                                e.name,
                                format!(
                                    "obstruction (d = {}) on an interval colorable graph",
                                    value
                                ),
                            );
                        }
                        BoundKind::UpperWc => {}
                    }
                }
            } else if exact {
                debug_assert_eq!(result.verdict, Verdict::ProvenNotColorable);
                let regular = stats.max_degree == stats.min_degree;
                if regular && stats.m >= 1 && g.chromatic_index() == stats.max_degree {
                    violate(
                        "proposition-regular",
                        "regular multigraph with chromatic index Delta is interval colorable, \
                         but the exhaustive search found nothing"
                            .to_string(),
                    );
                }
            }
        }
        Mode::Cyclic => {
            if let Some(wc_max) = result.max_colors() {
                for e in report
                    .entries
                    .iter()
                    .filter(|e| e.applicable && e.kind == BoundKind::UpperWc)
                {
                    let value = e.value.expect("applicable entries carry values");
                    if (wc_max as i64) > floor_value(value) {
                        violate(
                            e.name,
                            format!("W_c >= {} exceeds upper bound {}", wc_max, value),
                        );
                    }
                }
                let simple = g.is_simple();
                if simple && stats.triangle_free {
                    let holds = wc_max <= stats.n;
                    out.conjectures.push(ConjectureStatus {
                        name: "cyclic-conjecture-triangle-free",
                        holds,
                        detail: format!("W_c = {} vs n = {}", wc_max, stats.n),
                    });
                }
                if simple && stats.n >= 2 {
                    let holds = wc_max <= 2 * stats.n - 3 || stats.n < 2;
                    out.conjectures.push(ConjectureStatus {
                        name: "cyclic-conjecture-general",
                        holds,
                        detail: format!("W_c = {} vs 2n - 3 = {}", wc_max, 2 * stats.n - 3),
                    });
                }
            }
        }
    }
    out
}
