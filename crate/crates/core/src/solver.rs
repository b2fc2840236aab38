//! Exact decision and optimization for interval and cyclic interval
//! colorings: does `G` admit a t-coloring, and the derived quantities
//! `w`, `W` (interval) and `w_c`, `W_c` (cyclic).
//!
//! The search processes edges along a depth-first traversal so that each
//! new edge touches an already constrained vertex, keeps per-vertex color
//! windows (a spectrum can only ever become an interval, or in cyclic mode
//! a cyclic arc, of length equal to the degree), and prunes on the
//! nonempty-class condition. Interval mode halves the search by the
//! reflection `c -> t+1-c`; cyclic mode pins the first edge to color 1,
//! which rotation invariance justifies. Each `t` is decided independently:
//! the feasible set is not assumed contiguous.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use thiserror::Error;

use crate::coloring::{self, EdgeColoring};
use crate::multigraph::MultiGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} is isolated; interval colorings need positive degrees")]
    IsolatedVertex(usize),
    #[error("t = {t} outside the valid range [{lo}, {hi}]")]
    TOutOfRange { t: usize, lo: usize, hi: usize },
    #[error("palette too large: t = {0} exceeds 63 colors")]
    PaletteTooLarge(usize),
    #[error("instance too large for the oracle: m = {0} > 8")]
    OracleTooLarge(usize),
    #[error("time budget exhausted")]
    Timeout,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Interval,
    Cyclic,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Interval => write!(f, "interval"),
            Mode::Cyclic => write!(f, "cyclic"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Colorable,
    NotColorableWithinCutoff,
    ProvenNotColorable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Colorable => write!(f, "colorable"),
            Verdict::NotColorableWithinCutoff => write!(f, "not-colorable-within-cutoff"),
            Verdict::ProvenNotColorable => write!(f, "proven-not-colorable"),
        }
    }
}

/// Feasibility over `t in [max_degree, cutoff]` with one certificate per
/// feasible `t`. `proven-not-colorable` is only ever claimed at the
/// universal ceiling `cutoff = m` (no color class may be empty).
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub mode: Mode,
    pub cutoff: usize,
    pub feasible: BTreeMap<usize, EdgeColoring>,
    pub verdict: Verdict,
}

impl SolveResult {
    /// `w(G)` resp. `w_c(G)` when colorable.
    pub fn min_colors(&self) -> Option<usize> {
        self.feasible.keys().next().copied()
    }

    /// Largest feasible `t` within the cutoff; equals `W(G)` resp.
    /// `W_c(G)` when the cutoff was the universal ceiling.
    pub fn max_colors(&self) -> Option<usize> {
        self.feasible.keys().next_back().copied()
    }

    pub fn feasible_set(&self) -> Vec<usize> {
        self.feasible.keys().copied().collect()
    }
}

fn precheck(g: &MultiGraph) -> Result<(), SolveError> {
    if g.n() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    for v in 0..g.n() {
        if g.incident(v).is_empty() {
            return Err(SolveError::IsolatedVertex(v));
        }
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    Ok(())
}

/// A valid interval t-coloring of `G`, or `None` if none exists.
pub fn exists_interval_coloring(
    g: &MultiGraph,
    t: usize,
) -> Result<Option<EdgeColoring>, SolveError> {
    decide(g, t, Mode::Interval, None)
}

/// A valid cyclic interval t-coloring of `G`, or `None` if none exists.
pub fn exists_cyclic_interval_coloring(
    g: &MultiGraph,
    t: usize,
) -> Result<Option<EdgeColoring>, SolveError> {
    decide(g, t, Mode::Cyclic, None)
}

fn decide(
    g: &MultiGraph,
    t: usize,
    mode: Mode,
    deadline: Option<Instant>,
) -> Result<Option<EdgeColoring>, SolveError> {
    precheck(g)?;
    let (lo, hi) = (g.max_degree(), g.m());
    if t < lo || t > hi {
        return Err(SolveError::TOutOfRange { t, lo, hi });
    }
    if t > 63 {
        return Err(SolveError::PaletteTooLarge(t));
    }
    let mut search = Search::new(g, t, mode, deadline);
    match search.run()? {
        Some(colors) => {
            let coloring = EdgeColoring::new(t, colors).expect("search colors are in range");
            debug_assert!(match mode {
                Mode::Interval => coloring::verify_interval(g, &coloring).is_ok(),
                Mode::Cyclic => coloring::verify_cyclic_interval(g, &coloring).is_ok(),
            });
            Ok(Some(coloring))
        }
        None => Ok(None),
    }
}

/// Feasibility of every `t in [max_degree, cutoff]` with certificates.
///
/// `cutoff = None` uses the best applicable theorem upper bound from the
/// bound catalog, clamped to `m`; explicit cutoffs are clamped to `m` as
/// well. The verdict is `ProvenNotColorable` only when nothing was
/// feasible and the cutoff was `m` itself.
pub fn solve(g: &MultiGraph, mode: Mode, cutoff: Option<usize>) -> Result<SolveResult, SolveError> {
    solve_with_deadline(g, mode, cutoff, None)
}

/// As [`solve`], aborting with [`SolveError::Timeout`] past the deadline.
pub fn solve_with_deadline(
    g: &MultiGraph,
    mode: Mode,
    cutoff: Option<usize>,
    deadline: Option<Instant>,
) -> Result<SolveResult, SolveError> {
    precheck(g)?;
    let m = g.m();
    let delta = g.max_degree();
    let cut = match cutoff {
        Some(c) => c.min(m),
        None => default_cutoff(g, mode),
    };
    if cut > 63 && cut >= delta {
        // Refusing beats silently truncating the searched range, which
        // would corrupt the proven-not-colorable verdict.
        return Err(SolveError::PaletteTooLarge(cut));
    }
    let mut feasible = BTreeMap::new();
    for t in delta..=cut {
        if let Some(c) = decide(g, t, mode, deadline)? {
            feasible.insert(t, c);
        }
    }
    let verdict = if !feasible.is_empty() {
        Verdict::Colorable
    } else if cut == m {
        Verdict::ProvenNotColorable
    } else {
        Verdict::NotColorableWithinCutoff
    };
    Ok(SolveResult {
        mode,
        cutoff: cut,
        feasible,
        verdict,
    })
}

fn default_cutoff(g: &MultiGraph, mode: Mode) -> usize {
    use crate::bounds::BoundKind;
    let stats = g.stats();
    let report = crate::bounds::evaluate_bounds(g, &stats);
    let want = match mode {
        Mode::Interval => BoundKind::UpperW,
        Mode::Cyclic => BoundKind::UpperWc,
    };
    let best = report
        .entries
        .iter()
        .filter(|e| e.kind == want && e.applicable)
        .filter_map(|e| e.value)
        .map(crate::bounds::floor_value)
        .min();
    match best {
        Some(b) if b >= 0 => g.m().min(b as usize),
        Some(_) => g.max_degree().saturating_sub(1), // bound below any valid t
        None => g.m(),
    }
}

/// Brute-force feasibility over all `t^m` assignments, filtered by the
/// verification predicate. The independent correctness oracle; guarded to
/// `m <= 8`.
pub fn oracle_enumerate(g: &MultiGraph, t: usize, mode: Mode) -> Result<bool, SolveError> {
    let m = g.m();
    if m > 8 {
        return Err(SolveError::OracleTooLarge(m));
    }
    if t > 63 {
        return Err(SolveError::PaletteTooLarge(t));
    }
    if t == 0 {
        return Ok(false);
    }
    let mut colors = vec![1usize; m];
    loop {
        let c = EdgeColoring::new(t, colors.clone()).expect("colors in range");
        let ok = match mode {
            Mode::Interval => coloring::verify_interval(g, &c).is_ok(),
            Mode::Cyclic => coloring::verify_cyclic_interval(g, &c).is_ok(),
        };
        if ok {
            return Ok(true);
        }
        // Advance the base-t counter.
        let mut i = 0;
        loop {
            if i == m {
                return Ok(false);
            }
            if colors[i] < t {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

/// One CSV row per solve: `graph-id,mode,delta,m,wmin,wmax,feasible-set,verdict`.
pub fn result_csv_row(graph_id: &str, g: &MultiGraph, r: &SolveResult) -> String {
    let fmt_opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
    let set = r
        .feasible_set()
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(";");
    format!(
        "{},{},{},{},{},{},{},{}",
        graph_id,
        r.mode,
        g.max_degree(),
        g.m(),
        fmt_opt(r.min_colors()),
        fmt_opt(r.max_colors()),
        set,
        r.verdict
    )
}

struct Search<'a> {
    g: &'a MultiGraph,
    t: usize,
    cyclic: bool,
    order: Vec<usize>,
    colors: Vec<usize>,
    vmask: Vec<u64>,
    placed: Vec<usize>,
    class_count: Vec<usize>,
    unused: usize,
    deadline: Option<Instant>,
    poll: u32,
}

impl<'a> Search<'a> {
    fn new(g: &'a MultiGraph, t: usize, mode: Mode, deadline: Option<Instant>) -> Self {
        Search {
            g,
            t,
            cyclic: mode == Mode::Cyclic,
            order: g.dfs_edge_order(),
            colors: vec![0; g.m()],
            vmask: vec![0; g.n()],
            placed: vec![0; g.n()],
            class_count: vec![0; t],
            unused: t,
            deadline,
            poll: 0,
        }
    }

    fn run(&mut self) -> Result<Option<Vec<usize>>, SolveError> {
        if self.extend(0)? {
            Ok(Some(self.colors.clone()))
        } else {
            Ok(None)
        }
    }

    fn extend(&mut self, idx: usize) -> Result<bool, SolveError> {
        if idx == self.order.len() {
            return Ok(true);
        }
        if let Some(deadline) = self.deadline {
            self.poll = self.poll.wrapping_add(1);
            if self.poll % 4096 == 0 && Instant::now() > deadline {
                return Err(SolveError::Timeout);
            }
        }
        let e = self.order[idx];
        let (u, v) = self.g.endpoints(e);
        let cap = if idx == 0 {
            if self.cyclic {
                1
            } else {
                self.t.div_ceil(2)
            }
        } else {
            self.t
        };
        let remaining_after = self.order.len() - idx - 1;
        for c in 1..=cap {
            let bit = 1u64 << (c - 1);
            if (self.vmask[u] | self.vmask[v]) & bit != 0 {
                continue;
            }
            let fresh = self.class_count[c - 1] == 0;
            if self.unused - usize::from(fresh) > remaining_after {
                continue;
            }
            self.vmask[u] |= bit;
            self.vmask[v] |= bit;
            self.placed[u] += 1;
            self.placed[v] += 1;
            self.class_count[c - 1] += 1;
            if fresh {
                self.unused -= 1;
            }
            self.colors[e] = c;
            let ok = self.vertex_ok(u) && self.vertex_ok(v);
            if ok && self.extend(idx + 1)? {
                return Ok(true);
            }
            self.colors[e] = 0;
            if fresh {
                self.unused += 1;
            }
            self.class_count[c - 1] -= 1;
            self.placed[u] -= 1;
            self.placed[v] -= 1;
            self.vmask[u] &= !bit;
            self.vmask[v] &= !bit;
        }
        Ok(false)
    }

    /// A partial spectrum must still fit inside some interval (cyclic
    /// mode: cyclic arc) of length equal to the vertex degree; a complete
    /// spectrum must be exactly one.
    fn vertex_ok(&self, x: usize) -> bool {
        let deg = self.g.incident(x).len();
        let mask = self.vmask[x];
        let cover = if self.cyclic {
            self.t - max_cyclic_gap(mask, self.t)
        } else {
            let lo = mask.trailing_zeros() as usize;
            let hi = 63 - mask.leading_zeros() as usize;
            hi - lo + 1
        };
        if self.placed[x] == deg {
            cover == deg
        } else {
            cover <= deg
        }
    }
}

/// Longest cyclic run of absent colors in `mask` over positions `0..t`.
/// Zero when every color is present; `mask` must be nonzero.
fn max_cyclic_gap(mask: u64, t: usize) -> usize {
    debug_assert!(mask != 0);
    let mut first_set = None;
    let mut prev_set = None;
    let mut best = 0;
    for c in 0..t {
        if mask & (1 << c) != 0 {
            match prev_set {
                Some(p) => best = best.max(c - p - 1),
                None => first_set = Some(c),
            }
            prev_set = Some(c);
        }
    }
    let (first, last) = (first_set.unwrap(), prev_set.unwrap());
    best.max(t - 1 - last + first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{verify_cyclic_interval, verify_interval};

    fn cycle(n: usize) -> MultiGraph {
        MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> MultiGraph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        MultiGraph::new(a + b, edges).unwrap()
    }

    fn hypercube(dim: usize) -> MultiGraph {
        let n = 1usize << dim;
        let mut edges = Vec::new();
        for x in 0..n {
            for k in 0..dim {
                if x & (1 << k) == 0 {
                    edges.push((x, x | (1 << k)));
                }
            }
        }
        MultiGraph::new(n, edges).unwrap()
    }

    #[test]
    fn cyclic_gap_computation() {
        // mask {1} with t=4: absent run 3.
        assert_eq!(max_cyclic_gap(0b0001, 4), 3);
        // mask {1,4}: runs of length 2 (2,3) and 0 (wrap).
        assert_eq!(max_cyclic_gap(0b1001, 4), 2);
        // full mask: no gap.
        assert_eq!(max_cyclic_gap(0b1111, 4), 0);
        // mask {4,1,2} of t=5: gap is {3..=5}\{4} pieces: absent 3,5 -> runs 1,1.
        assert_eq!(max_cyclic_gap(0b01011, 5), 1);
    }

    #[test]
    fn kab_decisions() {
        let g = complete_bipartite(2, 2);
        let c = exists_interval_coloring(&g, 2).unwrap().unwrap();
        assert!(verify_interval(&g, &c).is_ok());
        assert!(exists_interval_coloring(&g, 4).unwrap().is_none());
        assert!(matches!(
            exists_interval_coloring(&g, 1),
            Err(SolveError::TOutOfRange { .. })
        ));
    }

    #[test]
    fn triangle_has_no_interval_coloring() {
        let g = cycle(3);
        for t in 2..=3 {
            assert!(exists_interval_coloring(&g, t).unwrap().is_none());
        }
        let r = solve(&g, Mode::Interval, Some(3)).unwrap();
        assert_eq!(r.verdict, Verdict::ProvenNotColorable);
    }

    #[test]
    fn cyclic_decisions() {
        let c5 = cycle(5);
        let c = exists_cyclic_interval_coloring(&c5, 5).unwrap().unwrap();
        assert!(verify_cyclic_interval(&c5, &c).is_ok());
        assert!(exists_cyclic_interval_coloring(&c5, 2).unwrap().is_none());
        let k3 = cycle(3);
        assert!(exists_cyclic_interval_coloring(&k3, 3).unwrap().is_some());
    }

    #[test]
    fn solve_small_spectra() {
        let q3 = hypercube(3);
        let r = solve(&q3, Mode::Interval, Some(q3.m())).unwrap();
        assert_eq!(r.feasible_set(), vec![3, 4, 5, 6]);

        let k24 = complete_bipartite(2, 4);
        let r = solve(&k24, Mode::Interval, Some(k24.m())).unwrap();
        assert_eq!(r.feasible_set(), vec![4, 5]);
        assert_eq!((r.min_colors(), r.max_colors()), (Some(4), Some(5)));
    }

    #[test]
    fn even_cycle_cyclic_spectrum_has_gap_below_order() {
        // For C_6 only 2,3,4,6 are cyclically feasible: a 5-coloring would
        // need a closed 6-step walk on the 5-cycle of colors covering all
        // of them, which cannot exist.
        let g = cycle(6);
        let r = solve(&g, Mode::Cyclic, Some(6)).unwrap();
        assert_eq!(r.feasible_set(), vec![2, 3, 4, 6]);
        assert_eq!((r.min_colors(), r.max_colors()), (Some(2), Some(6)));
    }

    #[test]
    fn oracle_agreement_on_small_instances() {
        let graphs = [
            cycle(3),
            cycle(4),
            cycle(5),
            complete_bipartite(2, 2),
            complete_bipartite(1, 3),
            MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap(),
        ];
        for g in &graphs {
            for mode in [Mode::Interval, Mode::Cyclic] {
                for t in 1..=g.m() {
                    let fast = if t < g.max_degree() {
                        false
                    } else {
                        decide(g, t, mode, None).unwrap().is_some()
                    };
                    let slow = oracle_enumerate(g, t, mode).unwrap();
                    assert_eq!(fast, slow, "mode {:?} t {} on {:?}", mode, t, g.edges());
                }
            }
        }
    }

    #[test]
    fn oracle_trivial_cases() {
        let k2 = MultiGraph::new(2, vec![(0, 1)]).unwrap();
        assert!(oracle_enumerate(&k2, 1, Mode::Interval).unwrap());
        let par = MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(!oracle_enumerate(&par, 1, Mode::Interval).unwrap());
        let big = hypercube(3);
        assert!(matches!(
            oracle_enumerate(&big, 3, Mode::Interval),
            Err(SolveError::OracleTooLarge(12))
        ));
    }

    #[test]
    fn rejects_bad_inputs() {
        let disconnected = MultiGraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            solve(&disconnected, Mode::Interval, None),
            Err(SolveError::Disconnected)
        ));
        let isolated = MultiGraph::new(3, vec![(0, 1)]).unwrap();
        assert!(matches!(
            solve(&isolated, Mode::Interval, None),
            Err(SolveError::IsolatedVertex(2))
        ));
    }

    #[test]
    fn csv_row_format() {
        let g = complete_bipartite(2, 2);
        let r = solve(&g, Mode::Interval, Some(4)).unwrap();
        assert_eq!(
            result_csv_row("k22", &g, &r),
            "k22,interval,2,4,2,3,2;3,colorable"
        );
    }

    #[test]
    fn reflection_maps_interval_to_interval() {
        let g = hypercube(2);
        for t in 2..=3 {
            let c = exists_interval_coloring(&g, t).unwrap().unwrap();
            let reflected: Vec<usize> = c.colors().iter().map(|&x| t + 1 - x).collect();
            let rc = EdgeColoring::new(t, reflected).unwrap();
            assert!(verify_interval(&g, &rc).is_ok());
        }
    }
}
