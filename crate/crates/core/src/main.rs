use std::error::Error;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use icol::coloring::{self, EdgeColoring};
use icol::constructions::{self, ConstructionOutput};
use icol::harness::{self, ScanConfig, ScanMode, ScanSource};
use icol::multigraph::MultiGraph;
use icol::solver::{self, Mode};
use icol::transforms;
use icol::{bounds, graph6};

#[derive(Parser)]
#[command(name = "icol", about = "Exact interval and cyclic interval edge coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    Interval,
    Cyclic,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Mode {
        match m {
            CliMode::Interval => Mode::Interval,
            CliMode::Cyclic => Mode::Cyclic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CliScanMode {
    Interval,
    Cyclic,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the feasible t-set with certificates.
    Solve {
        #[arg(long, value_enum)]
        mode: CliMode,
        /// Largest t to test (clamped to m); defaults to the best
        /// applicable theorem bound.
        #[arg(long)]
        tmax: Option<usize>,
        /// Directory for one certificate file per feasible t.
        #[arg(long)]
        certs_dir: Option<PathBuf>,
        /// Graph id for the CSV row; defaults to the file stem.
        #[arg(long)]
        id: Option<String>,
        /// Graph in the text format.
        graph: PathBuf,
    },
    /// Verify a certificate against a graph.
    Verify {
        #[arg(long, value_enum)]
        mode: CliMode,
        graph: PathBuf,
        cert: PathBuf,
    },
    /// Evaluate every bound in the catalog.
    Bounds {
        #[arg(long)]
        id: Option<String>,
        /// Parameters (a, b) for the sparse cyclic bound.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        sparse: Option<Vec<f64>>,
        graph: PathBuf,
    },
    /// Emit a named construction.
    Construct {
        #[command(subcommand)]
        which: ConstructCommand,
    },
    /// Apply a constructive transform.
    Transform {
        #[command(subcommand)]
        which: TransformCommand,
    },
    /// Solve, bound and cross-check a whole corpus of small graphs.
    Scan {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        triangle_free: bool,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum)]
        mode: CliScanMode,
        /// Read graphs from a graph6 file instead of the builtin
        /// generator.
        #[arg(long)]
        graph6: Option<PathBuf>,
        /// Per-graph time budget in seconds.
        #[arg(long)]
        budget_secs: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct ConstructOut {
    /// Write the graph here instead of stdout.
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Write the certificate here, when the construction carries one.
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Ladder multigraph attaining the half-order bound.
    Gnr {
        n: usize,
        r: usize,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// Cycle with its cyclic interval n-coloring.
    Cycle {
        n: usize,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// Complete bipartite graph with its claimed interval spectrum.
    Kab {
        a: usize,
        b: usize,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// Hypercube with its claimed interval spectrum.
    Cube {
        n: usize,
        #[command(flatten)]
        out: ConstructOut,
    },
}

#[derive(Subcommand)]
enum TransformCommand {
    /// Rotate a cyclic interval coloring by k.
    Rotate {
        graph: PathBuf,
        cert: PathBuf,
        k: i64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Split wrapped vertices into an interval coloring.
    Split {
        graph: PathBuf,
        cert: PathBuf,
        /// Boundary color; defaults to the one splitting fewest vertices.
        #[arg(long)]
        boundary: Option<usize>,
        #[arg(long)]
        out_graph: Option<PathBuf>,
        #[arg(long)]
        out_cert: Option<PathBuf>,
    },
    /// Double into a bipartite host with two more colors.
    Double {
        graph: PathBuf,
        cert: PathBuf,
        #[arg(long)]
        out_graph: Option<PathBuf>,
        #[arg(long)]
        out_cert: Option<PathBuf>,
    },
    /// Remove a color class that meets every vertex.
    Dropcolor {
        graph: PathBuf,
        cert: PathBuf,
        color: usize,
        #[arg(long)]
        out_graph: Option<PathBuf>,
        #[arg(long)]
        out_cert: Option<PathBuf>,
    },
    /// Identify two non-adjacent vertices.
    Identify {
        graph: PathBuf,
        u: usize,
        v: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

fn read_graph(path: &PathBuf) -> Result<MultiGraph, Box<dyn Error>> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "g6") {
        let first = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or("empty graph6 file")?;
        return Ok(graph6::decode(first)?);
    }
    Ok(MultiGraph::from_text(&text)?)
}

fn read_cert(g: &MultiGraph, path: &PathBuf) -> Result<EdgeColoring, Box<dyn Error>> {
    let text = std::fs::read_to_string(path)?;
    Ok(coloring::certificate_from_text(g, &text)?)
}

fn emit(path: &Option<PathBuf>, contents: &str) -> Result<(), Box<dyn Error>> {
    match path {
        Some(p) => std::fs::write(p, contents)?,
        None => print!("{}", contents),
    }
    Ok(())
}

fn emit_construction(
    out: &ConstructOut,
    built: &ConstructionOutput,
) -> Result<(), Box<dyn Error>> {
    emit(&out.out, &built.graph.to_text())?;
    if let Some(c) = &built.coloring {
        match &out.cert {
            Some(p) => std::fs::write(p, coloring::certificate_to_text(&built.graph, c))?,
            None => eprintln!("note: construction carries a certificate; pass --cert to save it"),
        }
    }
    if let Some(claim) = &built.claim {
        eprintln!("claim: {}", claim.note);
    }
    Ok(())
}

fn run() -> Result<(), Box<dyn Error>> {
    match Cli::parse().command {
        Command::Solve {
            mode,
            tmax,
            certs_dir,
            id,
            graph,
        } => {
            let g = read_graph(&graph)?;
            let result = solver::solve(&g, mode.into(), tmax)?;
            let id = id.unwrap_or_else(|| {
                graph
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "graph".to_string())
            });
            if let Some(dir) = certs_dir {
                std::fs::create_dir_all(&dir)?;
                for (t, cert) in &result.feasible {
                    let path = dir.join(format!("{}-{}-t{}.cert", id, result.mode, t));
                    std::fs::write(path, coloring::certificate_to_text(&g, cert))?;
                }
            }
            println!("{}", solver::result_csv_row(&id, &g, &result));
        }
        Command::Verify { mode, graph, cert } => {
            let g = read_graph(&graph)?;
            let c = read_cert(&g, &cert)?;
            let verdict = match Mode::from(mode) {
                Mode::Interval => coloring::verify_interval(&g, &c),
                Mode::Cyclic => coloring::verify_cyclic_interval(&g, &c),
            };
            match verdict {
                Ok(()) => println!("valid"),
                Err(v) => {
                    println!("invalid: {}", v);
                    std::process::exit(1);
                }
            }
        }
        Command::Bounds { id, sparse, graph } => {
            let g = read_graph(&graph)?;
            let stats = g.stats();
            let params = sparse.map(|v| (v[0], v[1]));
            let report = bounds::evaluate_bounds_with(&g, &stats, params);
            let id = id.unwrap_or_else(|| {
                graph
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "graph".to_string())
            });
            println!("{}", bounds::BoundsReport::CSV_HEADER);
            print!("{}", report.csv_rows(&id));
        }
        Command::Construct { which } => match which {
            ConstructCommand::Gnr { n, r, out } => {
                emit_construction(&out, &constructions::build_gnr(n, r)?)?
            }
            ConstructCommand::Cycle { n, out } => {
                emit_construction(&out, &constructions::build_cycle_cyclic(n)?)?
            }
            ConstructCommand::Kab { a, b, out } => {
                if a < 1 || b < 1 {
                    return Err("both parts must be nonempty".into());
                }
                emit_construction(&out, &constructions::build_complete_bipartite(a, b))?
            }
            ConstructCommand::Cube { n, out } => {
                if n < 1 {
                    return Err("dimension must be positive".into());
                }
                emit_construction(&out, &constructions::build_hypercube(n))?
            }
        },
        Command::Transform { which } => match which {
            TransformCommand::Rotate { graph, cert, k, out } => {
                let g = read_graph(&graph)?;
                let c = read_cert(&g, &cert)?;
                let rotated = transforms::rotate_cyclic(&g, &c, k)?;
                emit(&out, &coloring::certificate_to_text(&g, &rotated))?;
            }
            TransformCommand::Split {
                graph,
                cert,
                boundary,
                out_graph,
                out_cert,
            } => {
                let g = read_graph(&graph)?;
                let c = read_cert(&g, &cert)?;
                let boundary = match boundary {
                    Some(b) => b,
                    None => transforms::best_boundary(&g, &c)?.0,
                };
                let outcome = transforms::split_graph(&g, &c, boundary)?;
                eprintln!(
                    "boundary {}; split {} vertices",
                    outcome.boundary_color,
                    outcome.split_map.len()
                );
                emit(&out_graph, &outcome.graph.to_text())?;
                emit(
                    &out_cert,
                    &coloring::certificate_to_text(&outcome.graph, &outcome.coloring),
                )?;
            }
            TransformCommand::Double {
                graph,
                cert,
                out_graph,
                out_cert,
            } => {
                let g = read_graph(&graph)?;
                let c = read_cert(&g, &cert)?;
                let (h, beta) = transforms::double_bipartite(&g, &c)?;
                emit(&out_graph, &h.to_text())?;
                emit(&out_cert, &coloring::certificate_to_text(&h, &beta))?;
            }
            TransformCommand::Dropcolor {
                graph,
                cert,
                color,
                out_graph,
                out_cert,
            } => {
                let g = read_graph(&graph)?;
                let c = read_cert(&g, &cert)?;
                let (h, beta) = transforms::drop_full_color(&g, &c, color)?;
                emit(&out_graph, &h.to_text())?;
                emit(&out_cert, &coloring::certificate_to_text(&h, &beta))?;
            }
            TransformCommand::Identify { graph, u, v, out } => {
                let g = read_graph(&graph)?;
                let h = transforms::identify_vertices(&g, u, v)?;
                emit(&out, &h.to_text())?;
            }
        },
        Command::Scan {
            max_n,
            triangle_free,
            max_degree,
            mode,
            graph6,
            budget_secs,
            out,
        } => {
            let config = ScanConfig {
                max_vertices: max_n,
                max_degree,
                triangle_free_only: triangle_free,
                mode: match mode {
                    CliScanMode::Interval => ScanMode::Interval,
                    CliScanMode::Cyclic => ScanMode::Cyclic,
                    CliScanMode::Both => ScanMode::Both,
                },
                source: match graph6 {
                    Some(path) => ScanSource::Graph6File(path),
                    None => ScanSource::Builtin,
                },
                out_path: Some(out.clone()),
                budget: budget_secs.map(Duration::from_secs),
            };
            let report = harness::scan(&config)?;
            let s = &report.summary;
            println!(
                "scanned {} graphs, {} rows -> {}",
                s.graphs,
                s.rows,
                out.display()
            );
            println!(
                "violations: {}; conjecture violations: {}; tight rows: {}; max Wc - n: {}",
                s.violations,
                s.conjecture_violations,
                s.tight_rows,
                s.max_wc_minus_n
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "-".to_string())
            );
        }
    }
    Ok(())
}
