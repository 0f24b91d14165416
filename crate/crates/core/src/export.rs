//! DOT, JSON and CSV renderings. All output is deterministic.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::char0::LrEdgeKind;
use crate::error::{Error, Result};
use crate::graph::{CertifiedGraph, DistanceMatrix};
use crate::planner::PathPlan;
use crate::weights::DominantWeight;

fn label(w: &DominantWeight) -> String {
    format!("({w})")
}

pub fn graph_dot(graph: &CertifiedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "digraph certified {{").unwrap();
    writeln!(
        out,
        "  label=\"certified subgraph, SL_{}({}), {} vertices\";",
        graph.n,
        graph.p,
        graph.len()
    )
    .unwrap();
    for (i, v) in graph.vertices.iter().enumerate() {
        writeln!(out, "  v{i} [label=\"{}\"];", label(v)).unwrap();
    }
    for (from, mv, to) in graph.edges() {
        writeln!(out, "  v{from} -> v{to} [label=\"{mv}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

/// A plan as a chain of numbered edges. Repeated weights share one node.
pub fn plan_dot(plan: &PathPlan) -> String {
    let mut ids: BTreeMap<&DominantWeight, usize> = BTreeMap::new();
    let mut order = Vec::new();
    for w in &plan.waypoints {
        if !ids.contains_key(w) {
            ids.insert(w, order.len());
            order.push(w);
        }
    }
    let mut out = String::new();
    writeln!(out, "digraph plan {{").unwrap();
    writeln!(
        out,
        "  label=\"SL_{}({}): {} -> {}, length {}\";",
        plan.n,
        plan.p,
        label(&plan.source),
        label(&plan.target),
        plan.length
    )
    .unwrap();
    for (i, w) in order.iter().enumerate() {
        writeln!(out, "  w{i} [label=\"{}\"];", label(w)).unwrap();
    }
    for (step, (mv, pair)) in plan.moves.iter().zip(plan.waypoints.windows(2)).enumerate() {
        writeln!(
            out,
            "  w{} -> w{} [label=\"{}: {mv}\"];",
            ids[&pair[0]],
            ids[&pair[1]],
            step + 1
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Local neighbourhood of the characteristic-zero graph, edges labelled a/b(i)/c.
pub fn char0_dot(edges: &[(DominantWeight, LrEdgeKind, DominantWeight)]) -> String {
    let mut ids: BTreeMap<&DominantWeight, usize> = BTreeMap::new();
    for (a, _, b) in edges {
        for w in [a, b] {
            let next = ids.len();
            ids.entry(w).or_insert(next);
        }
    }
    let mut out = String::from("digraph char0 {\n");
    let mut nodes: Vec<_> = ids.iter().collect();
    nodes.sort_by_key(|(_, &i)| i);
    for (w, i) in nodes {
        writeln!(out, "  u{i} [label=\"{}\"];", label(w)).unwrap();
    }
    for (a, kind, b) in edges {
        writeln!(out, "  u{} -> u{} [label=\"{kind}\"];", ids[a], ids[b]).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn graph_json(graph: &CertifiedGraph) -> String {
    serde_json::to_string_pretty(graph).expect("graph serializes")
}

/// Parses a graph and checks it against a fresh build for the same `(n, p)`.
pub fn graph_from_json(text: &str) -> Result<CertifiedGraph> {
    let graph: CertifiedGraph =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let rebuilt = CertifiedGraph::build(graph.n, graph.p, graph.vertices.len() as u64)?;
    if rebuilt != graph {
        return Err(Error::Parse(format!(
            "graph does not match the certified graph for n = {}, p = {}",
            graph.n, graph.p
        )));
    }
    Ok(graph)
}

pub fn plan_json(plan: &PathPlan) -> String {
    serde_json::to_string_pretty(plan).expect("plan serializes")
}

/// Distance matrix as CSV: a header of weight labels, then one row per source.
/// Unreachable entries are left empty.
pub fn distance_csv(graph: &CertifiedGraph, matrix: &DistanceMatrix) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Parse(e.to_string());
    let mut header = vec!["source".to_string()];
    header.extend(graph.vertices.iter().map(label));
    writer.write_record(&header).map_err(csv_err)?;
    for (v, row) in graph.vertices.iter().zip(matrix) {
        let mut record = vec![label(v)];
        record.extend(
            row.iter()
                .map(|d| d.map(|x| x.to_string()).unwrap_or_default()),
        );
        writer.write_record(&record).map_err(csv_err)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_certified_graph;
    use crate::planner::plan_path;

    #[test]
    fn empty_plan_dot_has_single_node() {
        let zero = DominantWeight::zero(3);
        let plan = plan_path(&zero, &zero, 3).unwrap();
        let dot = plan_dot(&plan);
        assert!(dot.contains("w0 [label=\"(0,0)\"]"));
        assert_eq!(dot.matches(" -> w").count(), 0);
    }

    #[test]
    fn small_graph_dot() {
        let dot = graph_dot(&build_certified_graph(2, 2).unwrap());
        assert_eq!(dot.matches("[label=\"(").count(), 2);
        assert_eq!(dot.matches(" -> ").count(), 3);
        assert!(dot.contains("v1 -> v1 [label=\"add_first\"]"));
    }

    #[test]
    fn graph_json_round_trip() {
        let g = build_certified_graph(3, 3).unwrap();
        let back = graph_from_json(&graph_json(&g)).unwrap();
        assert_eq!(back, g);
        let mut tampered: serde_json::Value = serde_json::from_str(&graph_json(&g)).unwrap();
        tampered["adjacency"][0][0]["to"] = serde_json::json!(5);
        assert!(graph_from_json(&tampered.to_string()).is_err());
    }

    #[test]
    fn csv_layout() {
        let g = build_certified_graph(2, 3).unwrap();
        let csv = distance_csv(&g, &g.distance_matrix(false)).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "source,(0),(1),(2)");
        assert_eq!(lines[1], "(0),0,1,2");
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn char0_dot_labels() {
        let edges = crate::char0::char0_neighborhood(&DominantWeight::new(vec![1, 1]).unwrap(), 1);
        let dot = char0_dot(&edges);
        for kind in ["\"a\"", "\"b(1)\"", "\"c\""] {
            assert!(dot.contains(kind), "{dot}");
        }
    }
}
