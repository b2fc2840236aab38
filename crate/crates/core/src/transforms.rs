//! The constructive manipulations behind the bound proofs, each as a
//! checked, certificate-preserving operation: rotating a cyclic coloring,
//! choosing the boundary color that splits fewest vertices, splitting the
//! wrapped vertices to turn a cyclic coloring into an interval one,
//! doubling a graph into a bipartite host with two extra colors, deleting
//! a full color class, and identifying non-adjacent vertices.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::coloring::{self, verify_cyclic_interval, verify_interval, EdgeColoring, Violation};
use crate::multigraph::MultiGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransformError {
    #[error("not a valid cyclic interval coloring: {0}")]
    NotCyclicInterval(Violation),
    #[error("not a valid interval coloring: {0}")]
    NotInterval(Violation),
    #[error("boundary color {0} outside 1..={1}")]
    BadBoundary(usize, usize),
    #[error("graph is not simple")]
    NotSimple,
    #[error("color {color} does not appear at vertex {vertex}")]
    MissingColor { color: usize, vertex: usize },
    #[error("vertices {0} and {1} are adjacent; identification would create a loop")]
    AdjacentVertices(usize, usize),
    #[error("cannot identify a vertex with itself")]
    SameVertex,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("internal: transform output failed verification: {0}")]
    Internal(Violation),
}

/// Result of splitting the wrapped vertices of a cyclic coloring.
#[derive(Debug, Clone)]
pub struct SplitOutcome {
    /// The split graph on `n + |U|` vertices and the original `m` edges.
    pub graph: MultiGraph,
    /// A valid interval t-coloring of the split graph (the input coloring
    /// rotated so the boundary sits at color 1, colors otherwise kept).
    pub coloring: EdgeColoring,
    /// Each split vertex of the input mapped to its `(low, high)` halves.
    pub split_map: BTreeMap<usize, (usize, usize)>,
    /// The boundary color, in the palette of the *input* coloring.
    pub boundary_color: usize,
}

/// Rotate colors by `k` modulo `t`. Validity of cyclic interval colorings
/// is invariant under rotation.
pub fn rotate_cyclic(
    g: &MultiGraph,
    c: &EdgeColoring,
    k: i64,
) -> Result<EdgeColoring, TransformError> {
    verify_cyclic_interval(g, c).map_err(TransformError::NotCyclicInterval)?;
    Ok(rotate_unchecked(c, k))
}

fn rotate_unchecked(c: &EdgeColoring, k: i64) -> EdgeColoring {
    let t = c.t();
    let shift = k.rem_euclid(t as i64) as usize;
    let colors = c
        .colors()
        .iter()
        .map(|&x| (x - 1 + shift) % t + 1)
        .collect();
    EdgeColoring::new(t, colors).expect("rotation stays in range")
}

/// The boundary color whose split set is smallest, with that set.
///
/// A color `b` splits `v` when both `b-1` (cyclically) and `b` appear at
/// `v` and the spectrum is not the full palette; splitting a full-spectrum
/// vertex is neither possible nor needed, since its spectrum is already an
/// interval. The pigeonhole over the remaining vertices guarantees
/// `|U| <= floor((2m - n) / t)`. Ties go to the smallest color.
pub fn best_boundary(
    g: &MultiGraph,
    c: &EdgeColoring,
) -> Result<(usize, Vec<usize>), TransformError> {
    verify_cyclic_interval(g, c).map_err(TransformError::NotCyclicInterval)?;
    let t = c.t();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for b in 1..=t {
        let set = split_set(g, c, b);
        if best.as_ref().is_none_or(|(_, s)| set.len() < s.len()) {
            best = Some((b, set));
        }
    }
    Ok(best.expect("palette is nonempty"))
}

fn split_set(g: &MultiGraph, c: &EdgeColoring, b: usize) -> Vec<usize> {
    (0..g.n())
        .filter(|&v| {
            g.incident(v).len() < c.t() && coloring::split_colors(g, c, v).contains(&b)
        })
        .collect()
}

/// Split every vertex the boundary color wraps, producing an interval
/// t-coloring on `n + |U|` vertices.
///
/// The coloring is first rotated by `t - b + 1` so the boundary sits at
/// color 1; each wrapped vertex `u` then has a gap color `c_u`
/// (`1 < c_u < t`), its edges with colors below `c_u` move to the low
/// half, those above to the high half, and all colors are preserved.
pub fn split_graph(
    g: &MultiGraph,
    c: &EdgeColoring,
    boundary: usize,
) -> Result<SplitOutcome, TransformError> {
    verify_cyclic_interval(g, c).map_err(TransformError::NotCyclicInterval)?;
    let t = c.t();
    if boundary < 1 || boundary > t {
        return Err(TransformError::BadBoundary(boundary, t));
    }
    let rotated = rotate_unchecked(c, t as i64 - boundary as i64 + 1);
    let split: Vec<usize> = split_set(g, &rotated, 1);
    let n = g.n();

    // Gap color per split vertex: smallest color missing from its
    // spectrum. The spectrum wraps, so the gap is strictly inside 1..t.
    let mut gap = vec![0usize; n];
    for &u in &split {
        let mut present = vec![false; t + 1];
        for &(e, _) in g.incident(u) {
            present[rotated.color(e)] = true;
        }
        gap[u] = (1..=t).find(|&x| !present[x]).expect("split vertex has a gap");
    }

    // New vertex ids: walk old ids in order, split vertices yield a low
    // and a high half.
    let mut id_of = vec![usize::MAX; n];
    let mut split_map = BTreeMap::new();
    let mut next = 0;
    for v in 0..n {
        if split.contains(&v) {
            split_map.insert(v, (next, next + 1));
            next += 2;
        } else {
            id_of[v] = next;
            next += 1;
        }
    }
    let place = |v: usize, color: usize| -> usize {
        match split_map.get(&v) {
            Some(&(low, high)) => {
                if color < gap[v] {
                    low
                } else {
                    high
                }
            }
            None => id_of[v],
        }
    };
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| (place(u, rotated.color(e)), place(v, rotated.color(e))))
        .collect();
    let graph = MultiGraph::new(next, edges).expect("splitting cannot create loops");
    verify_interval(&graph, &rotated).map_err(TransformError::Internal)?;
    Ok(SplitOutcome {
        graph,
        coloring: rotated,
        split_map,
        boundary_color: boundary,
    })
}

/// Double a simple interval-colored graph into a bipartite host: for each
/// edge `v_i v_j` the host gets `u_i w_j` and `u_j w_i` one color higher,
/// each diagonal `u_i w_i` gets the color above the top of `v_i`'s
/// spectrum, and one diagonal whose spectrum starts at 2 (smallest index)
/// is recolored to 1. The result is a valid interval (t+2)-coloring on
/// `2n` vertices.
pub fn double_bipartite(
    g: &MultiGraph,
    c: &EdgeColoring,
) -> Result<(MultiGraph, EdgeColoring), TransformError> {
    if !g.is_simple() {
        return Err(TransformError::NotSimple);
    }
    verify_interval(g, c).map_err(TransformError::NotInterval)?;
    let n = g.n();
    let m = g.m();
    let mut edges = Vec::with_capacity(2 * m + n);
    let mut colors = Vec::with_capacity(2 * m + n);
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        edges.push((i, n + j));
        colors.push(c.color(e) + 1);
        edges.push((j, n + i));
        colors.push(c.color(e) + 1);
    }
    let mut recolor = None;
    for i in 0..n {
        let spectrum = coloring::spectrum(g, c, i).expect("vertex in range");
        let (lo, hi) = spectrum.bounds.expect("interval coloring has no isolated vertices");
        edges.push((i, n + i));
        colors.push(hi + 2);
        if recolor.is_none() && lo == 1 {
            recolor = Some(2 * m + i);
        }
    }
    let idx = recolor.expect("color 1 is used somewhere, so some spectrum starts at 1");
    colors[idx] = 1;
    let graph = MultiGraph::new(2 * n, edges).expect("doubling is loopless");
    let coloring = EdgeColoring::new(c.t() + 2, colors).expect("colors in range");
    verify_interval(&graph, &coloring).map_err(TransformError::Internal)?;
    Ok((graph, coloring))
}

/// Delete the color class of `color`, which must meet every vertex (a
/// perfect matching), shift higher colors down by one and drop vertices
/// left isolated. The result is a valid interval (t-1)-coloring.
pub fn drop_full_color(
    g: &MultiGraph,
    c: &EdgeColoring,
    color: usize,
) -> Result<(MultiGraph, EdgeColoring), TransformError> {
    verify_interval(g, c).map_err(TransformError::NotInterval)?;
    for v in 0..g.n() {
        if !g.incident(v).iter().any(|&(e, _)| c.color(e) == color) {
            return Err(TransformError::MissingColor { color, vertex: v });
        }
    }
    let kept: Vec<usize> = (0..g.m()).filter(|&e| c.color(e) != color).collect();
    let mut deg = vec![0usize; g.n()];
    for &e in &kept {
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut id_of = vec![usize::MAX; g.n()];
    let mut next = 0;
    for v in 0..g.n() {
        if deg[v] > 0 {
            id_of[v] = next;
            next += 1;
        }
    }
    let edges = kept
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            (id_of[u], id_of[v])
        })
        .collect();
    let colors = kept
        .iter()
        .map(|&e| {
            let x = c.color(e);
            if x > color {
                x - 1
            } else {
                x
            }
        })
        .collect();
    let graph = MultiGraph::with_flags(next, edges, g.flags()).expect("subgraph is loopless");
    let coloring = EdgeColoring::new(c.t() - 1, colors).expect("colors in range");
    verify_interval(&graph, &coloring).map_err(TransformError::Internal)?;
    Ok((graph, coloring))
}

/// Merge two distinct non-adjacent vertices; the merged vertex inherits
/// every edge of both and ids stay dense.
pub fn identify_vertices(
    g: &MultiGraph,
    u: usize,
    v: usize,
) -> Result<MultiGraph, TransformError> {
    if u >= g.n() {
        return Err(TransformError::VertexOutOfRange(u));
    }
    if v >= g.n() {
        return Err(TransformError::VertexOutOfRange(v));
    }
    if u == v {
        return Err(TransformError::SameVertex);
    }
    if g.incident(u).iter().any(|&(_, w)| w == v) {
        return Err(TransformError::AdjacentVertices(u, v));
    }
    let target = u.min(v);
    let removed = u.max(v);
    let map = |w: usize| -> usize {
        if w == removed {
            target
        } else if w > removed {
            w - 1
        } else {
            w
        }
    };
    let edges = g.edges().iter().map(|&(a, b)| (map(a), map(b))).collect();
    MultiGraph::new(g.n() - 1, edges).map_err(|_| TransformError::AdjacentVertices(u, v))
}
