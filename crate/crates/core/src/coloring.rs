//! Edge colorings, vertex spectra, and the verification predicates that
//! define interval and cyclic interval colorings.
//!
//! A coloring carries its palette size `t` explicitly: the "no color class
//! is empty" condition is relative to a declared `t`, and transforms need
//! `t` even while a color is momentarily unused mid-construction.

use std::fmt::Write as _;

use thiserror::Error;

use crate::multigraph::MultiGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("edge {edge} has color {color} outside 1..={t}")]
    ColorOutOfRange { edge: usize, color: usize, t: usize },
    #[error("expected {expected} edge colors, got {got}")]
    WrongEdgeCount { expected: usize, got: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("certificate edge {edge} endpoints do not match the graph")]
    EndpointMismatch { edge: usize },
    #[error("certificate parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Why a coloring fails one of the verification predicates.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("edges {e1} and {e2} share vertex {vertex} and color")]
    NotProper { vertex: usize, e1: usize, e2: usize },
    #[error("vertex {0} has no incident edges")]
    EmptySpectrum(usize),
    #[error("spectrum of vertex {0} is not an interval")]
    NotInterval(usize),
    #[error("spectrum of vertex {0} is neither an interval nor cyclically an interval")]
    NotCyclicInterval(usize),
    #[error("color {0} is unused")]
    EmptyColorClass(usize),
}

/// A total assignment of colors `1..=t` to the edges of a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    t: usize,
    colors: Vec<usize>,
}

impl EdgeColoring {
    pub fn new(t: usize, colors: Vec<usize>) -> Result<Self, ColoringError> {
        for (edge, &color) in colors.iter().enumerate() {
            if color < 1 || color > t {
                return Err(ColoringError::ColorOutOfRange { edge, color, t });
            }
        }
        Ok(EdgeColoring { t, colors })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn color(&self, edge: usize) -> usize {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// The spectrum is a set of consecutive integers.
    Interval,
    /// Not an interval, but its complement in `1..=t` is a nonempty one
    /// (the spectrum wraps around `t -> 1`).
    CyclicOnly,
    Neither,
}

/// Spectrum of one vertex under a coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub vertex: usize,
    /// Sorted colors incident to the vertex.
    pub colors: Vec<usize>,
    /// `(min, max)` of the spectrum; `None` for an isolated vertex.
    pub bounds: Option<(usize, usize)>,
    pub classification: Classification,
}

fn check_pairing(g: &MultiGraph, c: &EdgeColoring) {
    assert_eq!(
        g.m(),
        c.len(),
        "coloring has {} colors but graph has {} edges",
        c.len(),
        g.m()
    );
}

fn classify_sorted(colors: &[usize], t: usize) -> Classification {
    if colors.is_empty() {
        return Classification::Neither;
    }
    let (lo, hi) = (colors[0], colors[colors.len() - 1]);
    if hi - lo + 1 == colors.len() {
        return Classification::Interval;
    }
    // Complement of the spectrum within 1..=t.
    let mut comp_lo = 0;
    let mut comp_hi = 0;
    let mut comp_len = 0;
    let mut it = colors.iter().peekable();
    for color in 1..=t {
        if it.peek() == Some(&&color) {
            it.next();
        } else {
            if comp_len == 0 {
                comp_lo = color;
            }
            comp_hi = color;
            comp_len += 1;
        }
    }
    if comp_len > 0 && comp_hi - comp_lo + 1 == comp_len {
        Classification::CyclicOnly
    } else {
        Classification::Neither
    }
}

/// Spectrum of vertex `v`: exact color set, bounds and classification.
pub fn spectrum(
    g: &MultiGraph,
    c: &EdgeColoring,
    v: usize,
) -> Result<SpectrumEntry, ColoringError> {
    check_pairing(g, c);
    if v >= g.n() {
        return Err(ColoringError::VertexOutOfRange(v));
    }
    let mut colors: Vec<usize> = g.incident(v).iter().map(|&(e, _)| c.color(e)).collect();
    colors.sort_unstable();
    colors.dedup();
    let bounds = colors.first().map(|&lo| (lo, *colors.last().unwrap()));
    let classification = classify_sorted(&colors, c.t());
    Ok(SpectrumEntry {
        vertex: v,
        colors,
        bounds,
        classification,
    })
}

/// All spectra, in vertex order.
pub fn spectra(g: &MultiGraph, c: &EdgeColoring) -> Vec<SpectrumEntry> {
    (0..g.n()).map(|v| spectrum(g, c, v).unwrap()).collect()
}

/// True iff no two edges sharing a vertex have equal colors.
pub fn is_proper(g: &MultiGraph, c: &EdgeColoring) -> bool {
    properness_witness(g, c).is_none()
}

fn properness_witness(g: &MultiGraph, c: &EdgeColoring) -> Option<Violation> {
    check_pairing(g, c);
    let mut last_edge = vec![usize::MAX; c.t() + 1];
    for v in 0..g.n() {
        for &(e, _) in g.incident(v) {
            let color = c.color(e);
            let prev = last_edge[color];
            if prev != usize::MAX {
                return Some(Violation::NotProper {
                    vertex: v,
                    e1: prev.min(e),
                    e2: prev.max(e),
                });
            }
            last_edge[color] = e;
        }
        for &(e, _) in g.incident(v) {
            last_edge[c.color(e)] = usize::MAX;
        }
    }
    None
}

fn verify(g: &MultiGraph, c: &EdgeColoring, cyclic: bool) -> Result<(), Violation> {
    check_pairing(g, c);
    if let Some(w) = properness_witness(g, c) {
        return Err(w);
    }
    for v in 0..g.n() {
        let entry = spectrum(g, c, v).expect("vertex in range");
        if entry.colors.is_empty() {
            return Err(Violation::EmptySpectrum(v));
        }
        match (entry.classification, cyclic) {
            (Classification::Interval, _) => {}
            (Classification::CyclicOnly, true) => {}
            (Classification::CyclicOnly, false) => return Err(Violation::NotInterval(v)),
            (Classification::Neither, false) => return Err(Violation::NotInterval(v)),
            (Classification::Neither, true) => return Err(Violation::NotCyclicInterval(v)),
        }
    }
    let mut used = vec![false; c.t() + 1];
    for &color in c.colors() {
        used[color] = true;
    }
    for color in 1..=c.t() {
        if !used[color] {
            return Err(Violation::EmptyColorClass(color));
        }
    }
    Ok(())
}

/// Verdict for the interval condition: proper, every spectrum an interval,
/// every color used. The error carries the first violated condition.
pub fn verify_interval(g: &MultiGraph, c: &EdgeColoring) -> Result<(), Violation> {
    verify(g, c, false)
}

/// Verdict for the cyclic interval condition: proper, every spectrum an
/// interval or cyclically an interval, every color used.
pub fn verify_cyclic_interval(g: &MultiGraph, c: &EdgeColoring) -> Result<(), Violation> {
    verify(g, c, true)
}

/// Vertices whose spectrum wraps around `t -> 1`, each with its smallest
/// gap color `c_u` (`1 < c_u < t`, `c_u` missing at the vertex).
///
/// Requires a valid cyclic interval coloring.
pub fn cyclic_vertices(
    g: &MultiGraph,
    c: &EdgeColoring,
) -> Result<Vec<(usize, usize)>, Violation> {
    verify_cyclic_interval(g, c)?;
    let mut out = Vec::new();
    for v in 0..g.n() {
        let entry = spectrum(g, c, v).expect("vertex in range");
        if entry.classification == Classification::CyclicOnly {
            let gap = (1..=c.t())
                .find(|color| !entry.colors.contains(color))
                .expect("a cyclic-only spectrum has a gap");
            debug_assert!(gap > 1 && gap < c.t());
            out.push((v, gap));
        }
    }
    Ok(out)
}

/// Colors `i` such that both `i - 1` (cyclically, so `t` precedes `1`) and
/// `i` appear at `v`. For a cyclic interval coloring these are the colors
/// whose removal would split the vertex.
pub fn split_colors(g: &MultiGraph, c: &EdgeColoring, v: usize) -> Vec<usize> {
    let t = c.t();
    let mut present = vec![false; t + 1];
    for &(e, _) in g.incident(v) {
        present[c.color(e)] = true;
    }
    (1..=t)
        .filter(|&i| {
            let prev = if i == 1 { t } else { i - 1 };
            present[i] && present[prev]
        })
        .collect()
}

/// Certificate text format: `t m`, then `edge-id u v color` per edge in
/// id order.
pub fn certificate_to_text(g: &MultiGraph, c: &EdgeColoring) -> String {
    check_pairing(g, c);
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", c.t(), c.len());
    for e in 0..c.len() {
        let (u, v) = g.endpoints(e);
        let _ = writeln!(out, "{} {} {} {}", e, u, v, c.color(e));
    }
    out
}

/// Parse a certificate and bind it to `g`, checking ids and endpoints.
pub fn certificate_from_text(g: &MultiGraph, text: &str) -> Result<EdgeColoring, ColoringError> {
    let parse = |line: usize, msg: &str| ColoringError::Parse {
        line,
        msg: msg.to_string(),
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.is_empty());
    let (lno, header) = lines.next().ok_or_else(|| parse(1, "empty certificate"))?;
    let mut it = header.split_whitespace();
    let t: usize = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse(lno, "expected `t m`"))?;
    let m: usize = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse(lno, "expected `t m`"))?;
    if m != g.m() {
        return Err(ColoringError::WrongEdgeCount {
            expected: g.m(),
            got: m,
        });
    }
    let mut colors = vec![0usize; m];
    let mut next_id = 0usize;
    for (lno, line) in lines {
        let fields: Vec<usize> = line
            .split_whitespace()
            .map(|s| s.parse().map_err(|_| parse(lno, "expected four integers")))
            .collect::<Result<_, _>>()?;
        let [id, u, v, color] = fields[..] else {
            return Err(parse(lno, "expected `edge-id u v color`"));
        };
        if id != next_id {
            return Err(parse(lno, &format!("expected edge id {}", next_id)));
        }
        if id >= m {
            return Err(parse(lno, "edge id out of range"));
        }
        let (gu, gv) = g.endpoints(id);
        if (u, v) != (gu, gv) && (v, u) != (gu, gv) {
            return Err(ColoringError::EndpointMismatch { edge: id });
        }
        colors[id] = color;
        next_id += 1;
    }
    if next_id != m {
        return Err(parse(0, &format!("expected {} edges, found {}", m, next_id)));
    }
    EdgeColoring::new(t, colors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> MultiGraph {
        MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    fn coloring(t: usize, colors: &[usize]) -> EdgeColoring {
        EdgeColoring::new(t, colors.to_vec()).unwrap()
    }

    #[test]
    fn spectrum_classifications() {
        // Triangle colored 1,2,3: vertex 0 meets edges 0 (color 1) and
        // 2 (color 3), so it sees {1,3} with complement {2}.
        let g = cycle(3);
        let c = coloring(3, &[1, 2, 3]);
        let e = spectrum(&g, &c, 0).unwrap();
        assert_eq!(e.colors, vec![1, 3]);
        assert_eq!(e.classification, Classification::CyclicOnly);

        // Middle vertex of a path with colors {1,2}.
        let p = MultiGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let c = coloring(2, &[1, 2]);
        let e = spectrum(&p, &c, 1).unwrap();
        assert_eq!(e.classification, Classification::Interval);
        assert_eq!(e.bounds, Some((1, 2)));

        // {1,3} with t = 4: complement {2,4} is not an interval.
        let c = coloring(4, &[1, 3]);
        let e = spectrum(&p, &c, 1).unwrap();
        assert_eq!(e.classification, Classification::Neither);
    }

    #[test]
    fn spectrum_vertex_out_of_range() {
        let g = cycle(3);
        let c = coloring(3, &[1, 2, 3]);
        assert_eq!(
            spectrum(&g, &c, 7),
            Err(ColoringError::VertexOutOfRange(7))
        );
    }

    #[test]
    fn properness() {
        let k2 = MultiGraph::new(2, vec![(0, 1)]).unwrap();
        assert!(is_proper(&k2, &coloring(5, &[3])));
        let par = MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(!is_proper(&par, &coloring(2, &[1, 1])));
        assert!(is_proper(&cycle(4), &coloring(2, &[1, 2, 1, 2])));
    }

    #[test]
    fn interval_verdicts() {
        let g = cycle(4);
        assert_eq!(verify_interval(&g, &coloring(2, &[1, 2, 1, 2])), Ok(()));
        assert_eq!(
            verify_interval(&g, &coloring(3, &[1, 2, 1, 2])),
            Err(Violation::EmptyColorClass(3))
        );
        let par = MultiGraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(matches!(
            verify_interval(&par, &coloring(2, &[1, 1])),
            Err(Violation::NotProper { vertex: 0, .. })
        ));
    }

    #[test]
    fn cyclic_verdicts() {
        let g = cycle(3);
        assert_eq!(verify_cyclic_interval(&g, &coloring(3, &[1, 2, 3])), Ok(()));
        assert_eq!(verify_interval(&g, &coloring(3, &[1, 2, 3])), Err(Violation::NotInterval(0)));
        let g4 = cycle(4);
        assert_eq!(
            verify_cyclic_interval(&g4, &coloring(4, &[1, 2, 3, 4])),
            Ok(())
        );
    }

    #[test]
    fn interval_implies_cyclic_on_samples() {
        let g = cycle(4);
        for colors in [[1, 2, 1, 2], [2, 1, 2, 1]] {
            let c = coloring(2, &colors);
            if verify_interval(&g, &c).is_ok() {
                assert_eq!(verify_cyclic_interval(&g, &c), Ok(()));
            }
        }
    }

    #[test]
    fn cyclic_vertex_extraction() {
        let g = cycle(3);
        let c = coloring(3, &[1, 2, 3]);
        assert_eq!(cyclic_vertices(&g, &c), Ok(vec![(0, 2)]));

        let g4 = cycle(4);
        let interval = coloring(2, &[1, 2, 1, 2]);
        assert_eq!(cyclic_vertices(&g4, &interval), Ok(vec![]));

        let wrap = coloring(4, &[1, 2, 3, 4]);
        assert_eq!(cyclic_vertices(&g4, &wrap), Ok(vec![(0, 2)]));

        let bad = coloring(4, &[1, 3, 1, 3]);
        assert!(cyclic_vertices(&g4, &bad).is_err());
    }

    #[test]
    fn split_color_examples() {
        // Star with center 0 seeing {1,2,3}, t = 5.
        let star = MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = coloring(5, &[1, 2, 3]);
        assert_eq!(split_colors(&star, &c, 0), vec![2, 3]);
        // Leaf: degree 1.
        assert_eq!(split_colors(&star, &c, 1), Vec::<usize>::new());
        // Wrap pair {t, 1}.
        let p = MultiGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let c = coloring(5, &[5, 1]);
        assert_eq!(split_colors(&p, &c, 1), vec![1]);
    }

    #[test]
    fn certificate_round_trip() {
        let g = cycle(4);
        let c = coloring(2, &[1, 2, 1, 2]);
        let text = certificate_to_text(&g, &c);
        assert_eq!(text, "2 4\n0 0 1 1\n1 1 2 2\n2 2 3 1\n3 3 0 2\n");
        let back = certificate_from_text(&g, &text).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn certificate_rejects_mismatches() {
        let g = cycle(4);
        assert!(certificate_from_text(&g, "").is_err());
        assert!(certificate_from_text(&g, "2 3\n").is_err());
        let wrong_endpoint = "2 4\n0 0 2 1\n1 1 2 2\n2 2 3 1\n3 3 0 2\n";
        assert_eq!(
            certificate_from_text(&g, wrong_endpoint),
            Err(ColoringError::EndpointMismatch { edge: 0 })
        );
    }
}
