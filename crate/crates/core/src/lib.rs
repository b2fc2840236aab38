//! Exact computation for interval and cyclic interval edge colorings of
//! loopless multigraphs: verification, exhaustive solvers for the minimum
//! and maximum color counts (`w`, `W`, `w_c`, `W_c`), the constructive
//! transforms that turn cyclic colorings into interval ones, extremal
//! constructions, and a bound catalog that is checked against exact solver
//! results on corpora of small graphs.

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod graph6;
pub mod harness;
pub mod multigraph;
pub mod solver;
pub mod transforms;

pub use coloring::EdgeColoring;
pub use multigraph::{GraphStats, MultiGraph};
pub use solver::{Mode, SolveResult, Verdict};
