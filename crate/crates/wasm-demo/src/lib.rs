//! Browser bindings for the coloring toolkit: build a construction and
//! inspect its coloring, solve a small graph for both spectra with the
//! bound catalog alongside, and watch a cyclic coloring split into an
//! interval one. All results come back as JSON for the page to render.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use icol::coloring::{self, Classification, EdgeColoring};
use icol::constructions;
use icol::multigraph::MultiGraph;
use icol::solver::{self, Mode};
use icol::transforms;
use icol::bounds;

const MAX_DEMO_VERTICES: usize = 12;
const MAX_DEMO_EDGES: usize = 16;

fn js(e: String) -> JsValue {
    JsValue::from_str(&e)
}

fn graph_json(g: &MultiGraph, c: Option<&EdgeColoring>) -> Value {
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| {
            json!({
                "u": u,
                "v": v,
                "color": c.map(|c| c.color(e)),
            })
        })
        .collect();
    let spectra: Vec<Value> = match c {
        Some(c) => (0..g.n())
            .map(|v| {
                let entry = coloring::spectrum(g, c, v).expect("vertex in range");
                json!({
                    "v": v,
                    "colors": entry.colors,
                    "class": match entry.classification {
                        Classification::Interval => "interval",
                        Classification::CyclicOnly => "cyclic",
                        Classification::Neither => "neither",
                    },
                })
            })
            .collect(),
        None => Vec::new(),
    };
    json!({
        "n": g.n(),
        "m": g.m(),
        "t": c.map(|c| c.t()),
        "edges": edges,
        "spectra": spectra,
    })
}

/// Build one of the named constructions and return it with its coloring
/// (when it carries one) and the claimed spectrum.
#[wasm_bindgen]
pub fn construct(kind: &str, p1: usize, p2: usize) -> Result<String, JsValue> {
    construct_impl(kind, p1, p2).map_err(js)
}

fn construct_impl(kind: &str, p1: usize, p2: usize) -> Result<String, String> {
    let built = match kind {
        "gnr" => constructions::build_gnr(p1, p2).map_err(|e| e.to_string())?,
        "cycle" => constructions::build_cycle_cyclic(p1).map_err(|e| e.to_string())?,
        "kab" => {
            if p1 < 1 || p2 < 1 {
                return Err("both parts must be nonempty".to_string());
            }
            constructions::build_complete_bipartite(p1, p2)
        }
        "cube" => {
            if !(1..=3).contains(&p1) {
                return Err("dimension must be between 1 and 3".to_string());
            }
            constructions::build_hypercube(p1)
        }
        other => return Err(format!("unknown construction `{other}`")),
    };
    let valid = built.coloring.as_ref().map(|c| {
        if coloring::verify_interval(&built.graph, c).is_ok() {
            "interval"
        } else if coloring::verify_cyclic_interval(&built.graph, c).is_ok() {
            "cyclic"
        } else {
            "invalid"
        }
    });
    let mut out = graph_json(&built.graph, built.coloring.as_ref());
    out["valid"] = json!(valid);
    out["claim"] = json!(built.claim.as_ref().map(|c| c.note.clone()));
    out["text"] = json!(built.graph.to_text());
    Ok(out.to_string())
}

/// Parse a graph in the text format, compute both exact spectra (cutoff m)
/// with one certificate per feasible t, and evaluate the bound catalog.
#[wasm_bindgen]
pub fn analyze(graph_text: &str) -> Result<String, JsValue> {
    analyze_impl(graph_text).map_err(js)
}

fn analyze_impl(graph_text: &str) -> Result<String, String> {
    let g = MultiGraph::from_text(graph_text).map_err(|e| e.to_string())?;
    if g.n() > MAX_DEMO_VERTICES || g.m() > MAX_DEMO_EDGES {
        return Err(format!(
            "demo is capped at {MAX_DEMO_VERTICES} vertices / {MAX_DEMO_EDGES} edges"
        ));
    }
    let stats = g.stats();
    let mut modes = serde_json::Map::new();
    for mode in [Mode::Interval, Mode::Cyclic] {
        let value = match solver::solve(&g, mode, Some(g.m())) {
            Ok(result) => {
                let certs: serde_json::Map<String, Value> = result
                    .feasible
                    .iter()
                    .map(|(t, c)| (t.to_string(), json!(c.colors())))
                    .collect();
                json!({
                    "feasible": result.feasible_set(),
                    "verdict": result.verdict.to_string(),
                    "certificates": certs,
                })
            }
            Err(e) => json!({ "error": e.to_string() }),
        };
        modes.insert(mode.to_string(), value);
    }
    let report = bounds::evaluate_bounds(&g, &stats);
    let bound_rows: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "name": e.name,
                "kind": e.kind.to_string(),
                "applicable": e.applicable,
                "value": e.value,
                "reason": e.reason,
            })
        })
        .collect();
    Ok(json!({
        "graph": graph_json(&g, None),
        "stats": {
            "n": stats.n,
            "m": stats.m,
            "maxDegree": stats.max_degree,
            "minDegree": stats.min_degree,
            "averageDegree": stats.average_degree,
            "connected": stats.connected,
            "biconnected": stats.biconnected,
            "bipartite": stats.bipartite,
            "triangleFree": stats.triangle_free,
            "eulerian": stats.eulerian,
        },
        "modes": modes,
        "bounds": bound_rows,
    })
    .to_string())
}

/// Build the cyclic n-coloring of C_n and split its wrapped vertex at the
/// best boundary, returning both sides of the transformation.
#[wasm_bindgen]
pub fn split_demo(n: usize) -> Result<String, JsValue> {
    split_demo_impl(n).map_err(js)
}

fn split_demo_impl(n: usize) -> Result<String, String> {
    if !(3..=MAX_DEMO_VERTICES).contains(&n) {
        return Err(format!("n must be between 3 and {MAX_DEMO_VERTICES}"));
    }
    let built = constructions::build_cycle_cyclic(n).map_err(|e| e.to_string())?;
    let coloring = built.coloring.expect("cycle construction is colored");
    let (boundary, split) =
        transforms::best_boundary(&built.graph, &coloring).map_err(|e| e.to_string())?;
    let outcome = transforms::split_graph(&built.graph, &coloring, boundary)
        .map_err(|e| e.to_string())?;
    let split_pairs: Vec<Value> = outcome
        .split_map
        .iter()
        .map(|(v, (low, high))| json!({ "vertex": v, "low": low, "high": high }))
        .collect();
    Ok(json!({
        "before": graph_json(&built.graph, Some(&coloring)),
        "after": graph_json(&outcome.graph, Some(&outcome.coloring)),
        "boundary": boundary,
        "split": split,
        "splitPairs": split_pairs,
    })
    .to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construct_reports_valid_colorings() {
        let out: serde_json::Value =
            serde_json::from_str(&construct_impl("gnr", 3, 3).unwrap()).unwrap();
        assert_eq!(out["valid"], "interval");
        assert_eq!(out["t"], 7);
        assert_eq!(out["n"], 6);

        let out: serde_json::Value =
            serde_json::from_str(&construct_impl("cycle", 5, 0).unwrap()).unwrap();
        assert_eq!(out["valid"], "cyclic");
        assert!(construct_impl("nope", 1, 1).is_err());
    }

    #[test]
    fn analyze_small_graph() {
        let out: serde_json::Value =
            serde_json::from_str(&analyze_impl("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap()).unwrap();
        assert_eq!(out["modes"]["interval"]["feasible"], json!([2, 3]));
        assert_eq!(out["modes"]["cyclic"]["feasible"], json!([2, 3, 4]));
        assert!(out["bounds"].as_array().unwrap().len() > 10);
        assert!(analyze_impl("not a graph").is_err());
    }

    #[test]
    fn split_demo_halves_a_vertex() {
        let out: serde_json::Value = serde_json::from_str(&split_demo_impl(6).unwrap()).unwrap();
        assert_eq!(out["before"]["n"], 6);
        assert_eq!(out["after"]["n"], 7);
        assert_eq!(out["splitPairs"].as_array().unwrap().len(), 1);
    }
}
