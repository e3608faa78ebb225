//! Text formats for graphs.
//!
//! Edge-list format: first line "N E", then E lines "u v w" with 1-based
//! vertex ids; a missing weight means 1. LF line endings, UTF-8.

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{Edge, Graph};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty edge-list input".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .ok_or_else(|| Error::Parse("missing vertex count".into()))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex count in header: {header:?}")))?;
    let e: usize = parts
        .next()
        .ok_or_else(|| Error::Parse("missing edge count".into()))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad edge count in header: {header:?}")))?;

    let mut edges = Vec::with_capacity(e);
    for line in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let (u, v, w) = match fields.as_slice() {
            [u, v] => (u, v, None),
            [u, v, w] => (u, v, Some(*w)),
            _ => return Err(Error::Parse(format!("bad edge line: {line:?}"))),
        };
        let u: usize = u
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex id: {u:?}")))?;
        let v: usize = v
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex id: {v:?}")))?;
        let w: f64 = match w {
            Some(s) => s
                .parse()
                .map_err(|_| Error::Parse(format!("bad weight: {s:?}")))?,
            None => 1.0,
        };
        edges.push(Edge::weighted(u, v, w));
    }
    if edges.len() != e {
        return Err(Error::Parse(format!(
            "header declares {e} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.num_vertices(), g.num_edges());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.w));
    }
    out
}

/// Undirected DOT output; every vertex appears as a node statement so
/// isolated vertices survive the round trip.
pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 1..=g.num_vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for e in g.edges() {
        if e.w == 1.0 {
            out.push_str(&format!("  {} -- {};\n", e.u, e.v));
        } else {
            out.push_str(&format!("  {} -- {} [weight={}];\n", e.u, e.v, e.w));
        }
    }
    out.push_str("}\n");
    out
}

/// JSON object {n, edges, family, params}; params carries the generator
/// arguments when the graph came from a family spec.
pub fn write_json(g: &Graph, spec: Option<&FamilySpec>) -> Result<String> {
    let edges: Vec<(usize, usize, f64)> = g.edges().iter().map(|e| (e.u, e.v, e.w)).collect();
    let mut obj = serde_json::json!({
        "n": g.num_vertices(),
        "edges": edges,
    });
    if let Some(spec) = spec {
        let mut spec_value = serde_json::to_value(spec)
            .map_err(|e| Error::Parse(format!("serialize family spec: {e}")))?;
        let family = spec.name();
        if let Some(map) = spec_value.as_object_mut() {
            map.remove("family");
        }
        obj["family"] = serde_json::Value::String(family.to_string());
        obj["params"] = spec_value;
    }
    serde_json::to_string_pretty(&obj).map_err(|e| Error::Parse(format!("serialize graph: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn edge_list_round_trip() {
        let g = families::dumbbell(4, 3).unwrap();
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back, g);
        assert!(text.starts_with("9 14\n"));
    }

    #[test]
    fn edge_list_default_weight() {
        let g = parse_edge_list("2 1\n1 2\n").unwrap();
        assert_eq!(g.edges()[0].w, 1.0);
    }

    #[test]
    fn edge_list_parse_errors() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2\n").is_err());
        assert!(parse_edge_list("2 2\n1 2\n").is_err());
        assert!(parse_edge_list("2 1\n1 x\n").is_err());
    }

    #[test]
    fn dot_counts_nodes() {
        let g = families::tree_chain(7, 3).unwrap();
        let dot = write_dot(&g);
        let nodes = dot
            .lines()
            .filter(|l| l.trim_end().ends_with(";") && !l.contains("--"))
            .count();
        assert_eq!(nodes, 21);
    }

    #[test]
    fn json_embeds_provenance() {
        let spec = FamilySpec::Dumbbell { n: 4, m: 3 };
        let g = spec.build().unwrap();
        let json = write_json(&g, Some(&spec)).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["family"], "dumbbell");
        assert_eq!(value["params"]["n"], 4);
        assert_eq!(value["n"], 9);
    }
}
