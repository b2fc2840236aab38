//! Explicit graphs and colorings with known spectra: solver ground truth
//! and sharpness witnesses.

use thiserror::Error;

use crate::coloring::EdgeColoring;
use crate::multigraph::MultiGraph;
use crate::solver::Mode;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("parameter {name} = {got} below the minimum {min}")]
    ParameterTooSmall {
        name: &'static str,
        got: usize,
        min: usize,
    },
}

/// What is known about the feasible t-set of a constructed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumClaim {
    pub mode: Mode,
    /// Claimed minimum feasible t, when the source states one.
    pub min: Option<usize>,
    /// Claimed maximum feasible t (`W` or `W_c`).
    pub max: usize,
    pub note: String,
}

#[derive(Debug, Clone)]
pub struct ConstructionOutput {
    pub graph: MultiGraph,
    pub coloring: Option<EdgeColoring>,
    pub claim: Option<SpectrumClaim>,
}

/// The ladder-like multigraph on vertices `u_1..u_n, v_1..v_n` with
/// parallel rungs, together with its explicit interval
/// `(1 + n(r-1))`-coloring. It is 2-connected with maximum degree `r` and
/// attains the half-order upper bound with equality.
///
/// Vertex numbering: `u_i = i-1`, `v_i = n+i-1`.
pub fn build_gnr(n: usize, r: usize) -> Result<ConstructionOutput, ConstructError> {
    for (name, got) in [("n", n), ("r", r)] {
        if got < 2 {
            return Err(ConstructError::ParameterTooSmall { name, got, min: 2 });
        }
    }
    let u = |i: usize| i - 1;
    let v = |i: usize| n + i - 1;
    let mut edges = Vec::new();
    let mut colors = Vec::new();
    // End rungs carry r-1 parallel edges, interior rungs r-2, and each
    // rung's bundle gets a block of consecutive colors; the path edges
    // u_j u_{j+1}, v_j v_{j+1} get the single color between blocks.
    for c in 1..=r - 1 {
        edges.push((u(1), v(1)));
        colors.push(c);
    }
    for i in 2..n {
        for c in (i - 1) * (r - 1) + 2..=i * (r - 1) {
            edges.push((u(i), v(i)));
            colors.push(c);
        }
    }
    for c in (n - 1) * (r - 1) + 2..=n * (r - 1) + 1 {
        edges.push((u(n), v(n)));
        colors.push(c);
    }
    for j in 1..n {
        edges.push((u(j), u(j + 1)));
        colors.push(j * (r - 1) + 1);
        edges.push((v(j), v(j + 1)));
        colors.push(j * (r - 1) + 1);
    }
    let t = 1 + n * (r - 1);
    let graph = MultiGraph::new(2 * n, edges).expect("construction is loopless");
    let coloring = EdgeColoring::new(t, colors).expect("colors fit the palette");
    Ok(ConstructionOutput {
        graph,
        coloring: Some(coloring),
        claim: Some(SpectrumClaim {
            mode: Mode::Interval,
            min: None,
            max: t,
            note: format!("W = 1 + n(r-1) = {} for the ladder multigraph", t),
        }),
    })
}

/// The cycle `C_n` with colors `1..n` in cyclic order: a valid cyclic
/// interval n-coloring, witnessing `W_c(C_n) = n`.
pub fn build_cycle_cyclic(n: usize) -> Result<ConstructionOutput, ConstructError> {
    if n < 3 {
        return Err(ConstructError::ParameterTooSmall {
            name: "n",
            got: n,
            min: 3,
        });
    }
    let graph = MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
        .expect("cycle is loopless");
    let coloring = EdgeColoring::new(n, (1..=n).collect()).expect("colors fit");
    Ok(ConstructionOutput {
        graph,
        coloring: Some(coloring),
        claim: Some(SpectrumClaim {
            mode: Mode::Cyclic,
            min: None,
            max: n,
            note: format!("W_c(C_{}) = {}", n, n),
        }),
    })
}

/// `K_{a,b}`, graph only; the interval spectrum is exactly
/// `[a+b-gcd(a,b), a+b-1]`, left as a claim for the solver to certify.
pub fn build_complete_bipartite(a: usize, b: usize) -> ConstructionOutput {
    assert!(a >= 1 && b >= 1, "parts must be nonempty");
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    let graph = MultiGraph::new(a + b, edges).expect("bipartite graph is loopless");
    let lo = a + b - gcd(a, b);
    let hi = a + b - 1;
    ConstructionOutput {
        graph,
        coloring: None,
        claim: Some(SpectrumClaim {
            mode: Mode::Interval,
            min: Some(lo),
            max: hi,
            note: format!("K_{{{},{}}} interval spectrum is exactly [{}, {}]", a, b, lo, hi),
        }),
    }
}

/// The hypercube `Q_n`, graph only; the interval spectrum is exactly
/// `[n, n(n+1)/2]`, left as a claim for the solver to certify.
pub fn build_hypercube(n: usize) -> ConstructionOutput {
    assert!(n >= 1, "dimension must be positive");
    let size = 1usize << n;
    let mut edges = Vec::new();
    for x in 0..size {
        for k in 0..n {
            if x & (1 << k) == 0 {
                edges.push((x, x | (1 << k)));
            }
        }
    }
    let graph = MultiGraph::new(size, edges).expect("hypercube is loopless");
    ConstructionOutput {
        graph,
        coloring: None,
        claim: Some(SpectrumClaim {
            mode: Mode::Interval,
            min: Some(n),
            max: n * (n + 1) / 2,
            note: format!("Q_{} interval spectrum is exactly [{}, {}]", n, n, n * (n + 1) / 2),
        }),
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
