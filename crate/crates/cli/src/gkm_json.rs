//! JSON form of GKM graphs.
//!
//! ```json
//! {"rank": 1, "valence": 1,
//!  "vertices": [{"id": "a", "moment": ["0"]}, {"id": "b", "moment": ["1/2"]}],
//!  "edges": [{"v": 0, "w": 1, "weight": [1]}]}
//! ```
//!
//! Edge endpoints are vertex indices.

use serde::{Deserialize, Serialize};
use symloc::gkm::{GkmEdge, GkmGraph, GkmVertex};

use crate::json::JsonRational;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    rank: usize,
    valence: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Vertex {
    id: String,
    moment: Vec<JsonRational>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Edge {
    v: usize,
    w: usize,
    weight: Vec<i64>,
}

pub fn parse_gkm(text: &str) -> Result<GkmGraph, String> {
    let doc: Document = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let vertices = doc
        .vertices
        .into_iter()
        .map(|v| GkmVertex { id: v.id, moment: v.moment.into_iter().map(|m| m.0).collect() })
        .collect();
    let edges = doc.edges.into_iter().map(|e| GkmEdge { v: e.v, w: e.w, weight: e.weight }).collect();
    GkmGraph::new(doc.rank, doc.valence, vertices, edges).map_err(|e| e.to_string())
}

pub fn gkm_to_json(g: &GkmGraph) -> String {
    let doc = Document {
        rank: g.rank(),
        valence: g.valence(),
        vertices: g
            .vertices()
            .iter()
            .map(|v| Vertex { id: v.id.clone(), moment: v.moment.iter().cloned().map(JsonRational).collect() })
            .collect(),
        edges: g.edges().iter().map(|e| Edge { v: e.v, w: e.w, weight: e.weight.clone() }).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("document is serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use symloc::gkm::cp_graph;

    #[test]
    fn cp_graphs_round_trip() {
        for n in 1..=5 {
            let g = cp_graph(n);
            assert_eq!(parse_gkm(&gkm_to_json(&g)).unwrap(), g);
        }
    }

    #[test]
    fn graph_errors_surface() {
        let not_primitive = r#"{"rank": 1, "valence": 1,
            "vertices": [{"id": "a", "moment": [0]}, {"id": "b", "moment": [2]}],
            "edges": [{"v": 0, "w": 1, "weight": [2]}]}"#;
        assert!(parse_gkm(not_primitive).unwrap_err().contains("not primitive"));
        let dangling = r#"{"rank": 1, "valence": 1,
            "vertices": [{"id": "a", "moment": [0]}],
            "edges": [{"v": 0, "w": 3, "weight": [1]}]}"#;
        assert!(parse_gkm(dangling).unwrap_err().contains("out of range"));
    }
}
