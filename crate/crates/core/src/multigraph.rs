//! Loopless multigraph model and the structural invariants that bound
//! applicability tests depend on.
//!
//! Vertices are `0..n`, edge ids are dense `0..m` in insertion order, and
//! parallel edges are distinguished by id. Geometry (planarity /
//! outerplanarity) is never computed: it is accepted as an asserted input
//! flag and only consulted by bounds that require it.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// User-asserted geometry flags. Planarity is not tested; the flags gate
/// the bounds that require them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GeomFlags {
    pub planar: bool,
    pub outerplanar: bool,
}

/// A finite loopless multigraph. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    endpoints: Vec<(usize, usize)>,
    /// Per vertex: (edge id, other endpoint), in edge-id order.
    adj: Vec<Vec<(usize, usize)>>,
    flags: GeomFlags,
}

/// Exact structural summary of a multigraph.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub average_degree: f64,
    pub connected: bool,
    pub biconnected: bool,
    pub bipartite: bool,
    pub triangle_free: bool,
    pub even_multigraph: bool,
    pub odd_multigraph: bool,
    pub eulerian: bool,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        Self::with_flags(n, edges, GeomFlags::default())
    }

    pub fn with_flags(
        n: usize,
        edges: Vec<(usize, usize)>,
        flags: GeomFlags,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push((id, v));
            adj[v].push((id, u));
        }
        Ok(MultiGraph {
            n,
            endpoints: edges,
            adj,
            flags,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.endpoints.len()
    }

    pub fn flags(&self) -> GeomFlags {
        self.flags
    }

    /// Endpoints of edge `e` as stored (construction order).
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.endpoints[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.endpoints
    }

    /// Incident edges of `v` as `(edge id, other endpoint)` pairs.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Degree of `v`; parallel edges each count.
    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        Ok(self.adj[v].len())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// True when no two edges share the same endpoint pair.
    pub fn is_simple(&self) -> bool {
        let mut seen = HashMap::new();
        for &(u, v) in &self.endpoints {
            let key = (u.min(v), u.max(v));
            if seen.insert(key, ()).is_some() {
                return false;
            }
        }
        true
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].iter().any(|&(_, w)| w == v)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &(_, w) in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    fn connected_avoiding(&self, skip: usize) -> bool {
        let start = match (0..self.n).find(|&v| v != skip) {
            Some(s) => s,
            None => return true,
        };
        let mut seen = vec![false; self.n];
        seen[skip] = true;
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &(_, w) in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n - 1
    }

    fn is_bipartite(&self) -> bool {
        let mut color = vec![2u8; self.n];
        for s in 0..self.n {
            if color[s] != 2 {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(_, w) in &self.adj[u] {
                    if color[w] == 2 {
                        color[w] = 1 - color[u];
                        stack.push(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn is_triangle_free(&self) -> bool {
        // Parallel edges never create triangles; three distinct mutually
        // adjacent vertices do.
        for &(u, v) in &self.endpoints {
            for w in 0..self.n {
                if w != u && w != v && self.adjacent(u, w) && self.adjacent(v, w) {
                    return false;
                }
            }
        }
        true
    }

    pub fn stats(&self) -> GraphStats {
        let n = self.n;
        let m = self.m();
        let max_degree = self.max_degree();
        let min_degree = self.min_degree();
        let average_degree = if n == 0 { 0.0 } else { 2.0 * m as f64 / n as f64 };
        let connected = self.is_connected();
        let biconnected =
            connected && n >= 3 && (0..n).all(|v| self.connected_avoiding(v));
        let even_multigraph = self.adj.iter().all(|a| a.len() % 2 == 0);
        let odd_multigraph = self.adj.iter().all(|a| a.len() % 2 == 1);
        GraphStats {
            n,
            m,
            max_degree,
            min_degree,
            average_degree,
            connected,
            biconnected,
            bipartite: self.is_bipartite(),
            triangle_free: self.is_triangle_free(),
            even_multigraph,
            odd_multigraph,
            eulerian: connected && even_multigraph,
        }
    }

    /// Length of a longest cycle; 0 for acyclic graphs. A pair of parallel
    /// edges is a cycle of length 2.
    pub fn circumference(&self) -> usize {
        let mut best = 0;
        let mut visited = vec![false; self.n];
        for start in 0..self.n {
            visited[start] = true;
            for &(eid, w) in &self.adj[start] {
                if w > start {
                    visited[w] = true;
                    self.circ_dfs(start, w, eid, 1, &mut visited, &mut best);
                    visited[w] = false;
                }
            }
            visited[start] = false;
        }
        best
    }

    fn circ_dfs(
        &self,
        start: usize,
        cur: usize,
        first_edge: usize,
        len: usize,
        visited: &mut Vec<bool>,
        best: &mut usize,
    ) {
        for &(eid, w) in &self.adj[cur] {
            if w == start {
                if len > 1 || eid != first_edge {
                    *best = (*best).max(len + 1);
                }
            } else if w > start && !visited[w] {
                visited[w] = true;
                self.circ_dfs(start, w, first_edge, len + 1, visited, best);
                visited[w] = false;
            }
        }
    }

    /// Maximum eccentricity over all vertex pairs; errors on disconnected
    /// input.
    pub fn diameter(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut diam = 0;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(_, w) in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            diam = diam.max(*dist.iter().max().unwrap_or(&0));
        }
        Ok(diam)
    }

    /// Size of a maximum matching. Parallel edges contribute a single
    /// candidate pair. Bipartite graphs use augmenting paths; other graphs
    /// an exhaustive subset recursion, which is exact at desk scale.
    pub fn max_matching_size(&self) -> usize {
        let mut simple_adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.endpoints {
            if !simple_adj[u].contains(&v) {
                simple_adj[u].push(v);
                simple_adj[v].push(u);
            }
        }
        if self.is_bipartite() {
            return bipartite_matching(self.n, &simple_adj);
        }
        assert!(
            self.n <= 24,
            "exact matching on non-bipartite graphs is limited to 24 vertices"
        );
        let masks: Vec<u32> = simple_adj
            .iter()
            .map(|nb| nb.iter().fold(0u32, |acc, &w| acc | (1 << w)))
            .collect();
        let mut memo = HashMap::new();
        matching_rec(&masks, (1u32 << self.n) - 1, &mut memo)
    }

    /// Least `t` admitting a proper edge coloring, by exact feasibility
    /// search upward from the maximum degree.
    pub fn chromatic_index(&self) -> usize {
        assert!(self.m() >= 1, "chromatic index needs at least one edge");
        let order = self.dfs_edge_order();
        let mut t = self.max_degree();
        loop {
            if self.proper_colorable(t, &order) {
                return t;
            }
            t += 1;
        }
    }

    fn proper_colorable(&self, t: usize, order: &[usize]) -> bool {
        if t > 63 {
            // Greedy always succeeds with 2*Delta - 1 colors, so the search
            // never has to go this far.
            return true;
        }
        let mut vmask = vec![0u64; self.n];
        self.proper_rec(t, order, 0, 0, &mut vmask)
    }

    fn proper_rec(
        &self,
        t: usize,
        order: &[usize],
        idx: usize,
        max_used: usize,
        vmask: &mut Vec<u64>,
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let (u, v) = self.endpoints[order[idx]];
        // Colors are interchangeable here, so never branch more than one
        // step beyond the largest color used so far.
        let cap = t.min(max_used + 1);
        for c in 1..=cap {
            let bit = 1u64 << (c - 1);
            if (vmask[u] | vmask[v]) & bit != 0 {
                continue;
            }
            vmask[u] |= bit;
            vmask[v] |= bit;
            if self.proper_rec(t, order, idx + 1, max_used.max(c), vmask) {
                return true;
            }
            vmask[u] &= !bit;
            vmask[v] &= !bit;
        }
        false
    }

    /// Edges in depth-first order, so that each edge past the first of its
    /// component touches an already visited vertex.
    pub(crate) fn dfs_edge_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.m());
        let mut edge_done = vec![false; self.m()];
        let mut visited = vec![false; self.n];
        for s in 0..self.n {
            if !visited[s] {
                visited[s] = true;
                self.dfs_edges(s, &mut visited, &mut edge_done, &mut order);
            }
        }
        order
    }

    fn dfs_edges(
        &self,
        u: usize,
        visited: &mut Vec<bool>,
        edge_done: &mut Vec<bool>,
        order: &mut Vec<usize>,
    ) {
        for &(eid, w) in &self.adj[u] {
            if !edge_done[eid] {
                edge_done[eid] = true;
                order.push(eid);
                if !visited[w] {
                    visited[w] = true;
                    self.dfs_edges(w, visited, edge_done, order);
                }
            }
        }
    }

    /// Text format: `n m`, an optional `#flags:` line, then one `u v` line
    /// per edge in id order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.m());
        let mut flag_names = Vec::new();
        if self.flags.planar {
            flag_names.push("planar");
        }
        if self.flags.outerplanar {
            flag_names.push("outerplanar");
        }
        if !flag_names.is_empty() {
            let _ = writeln!(out, "#flags: {}", flag_names.join(","));
        }
        for &(u, v) in &self.endpoints {
            let _ = writeln!(out, "{} {}", u, v);
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, GraphError> {
        let parse = |line: usize, msg: &str| GraphError::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end()))
            .filter(|(_, l)| !l.is_empty());
        let (lno, header) = lines.next().ok_or_else(|| parse(1, "empty input"))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse(lno, "expected `n m`"))?;
        let m: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse(lno, "expected `n m`"))?;
        if it.next().is_some() {
            return Err(parse(lno, "trailing tokens after `n m`"));
        }
        let mut flags = GeomFlags::default();
        let mut edges = Vec::with_capacity(m);
        let mut pending: Option<(usize, &str)> = None;
        if let Some((lno, line)) = lines.next() {
            if let Some(rest) = line.strip_prefix("#flags:") {
                for name in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    match name {
                        "planar" => flags.planar = true,
                        "outerplanar" => flags.outerplanar = true,
                        other => {
                            return Err(parse(lno, &format!("unknown flag `{}`", other)))
                        }
                    }
                }
            } else {
                pending = Some((lno, line));
            }
        }
        let mut handle = |lno: usize, line: &str| -> Result<(), GraphError> {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| parse(lno, "expected `u v`"))?;
            let v: usize = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| parse(lno, "expected `u v`"))?;
            if it.next().is_some() {
                return Err(parse(lno, "trailing tokens after `u v`"));
            }
            edges.push((u, v));
            Ok(())
        };
        if let Some((lno, line)) = pending {
            handle(lno, line)?;
        }
        for (lno, line) in lines {
            handle(lno, line)?;
        }
        if edges.len() != m {
            return Err(parse(
                0,
                &format!("expected {} edges, found {}", m, edges.len()),
            ));
        }
        Self::with_flags(n, edges, flags)
    }
}

fn bipartite_matching(n: usize, adj: &[Vec<usize>]) -> usize {
    // Kuhn's augmenting path algorithm over one side of the bipartition.
    let mut side = vec![2u8; n];
    for s in 0..n {
        if side[s] != 2 {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if side[w] == 2 {
                    side[w] = 1 - side[u];
                    stack.push(w);
                }
            }
        }
    }
    let mut matched = vec![usize::MAX; n];
    let mut size = 0;
    for u in 0..n {
        if side[u] != 0 {
            continue;
        }
        let mut seen = vec![false; n];
        if try_augment(u, adj, &mut matched, &mut seen) {
            size += 1;
        }
    }
    size
}

fn try_augment(u: usize, adj: &[Vec<usize>], matched: &mut Vec<usize>, seen: &mut Vec<bool>) -> bool {
    for &w in &adj[u] {
        if seen[w] {
            continue;
        }
        seen[w] = true;
        if matched[w] == usize::MAX || try_augment(matched[w], adj, matched, seen) {
            matched[w] = u;
            return true;
        }
    }
    false
}

fn matching_rec(masks: &[u32], avail: u32, memo: &mut HashMap<u32, usize>) -> usize {
    if avail == 0 {
        return 0;
    }
    if let Some(&r) = memo.get(&avail) {
        return r;
    }
    let v = avail.trailing_zeros() as usize;
    let without = avail & !(1 << v);
    let mut best = matching_rec(masks, without, memo);
    let mut cand = masks[v] & without;
    while cand != 0 {
        let u = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        best = best.max(1 + matching_rec(masks, without & !(1 << u), memo));
    }
    memo.insert(avail, best);
    best
}
