//! Self-checks for one `(n, p)`, used by the `verify` command.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::char0::{canonical_path_char0, char0_distance, lr_neighbors};
use crate::conormal::{block_form, conormal_indices};
use crate::error::Result;
use crate::graph::{diameter_of, CertifiedGraph};
use crate::moves::certify_via_conormal;
use crate::planner::plan_path;
use crate::weights::{diameter_bound, DominantWeight};

/// Above this many vertices the planner is checked only on pairs touching
/// `0` or `St_p`.
pub const ALL_PAIRS_PLANNER_LIMIT: usize = 1024;
/// Characteristic-zero search is skipped for larger bounds.
pub const CHAR0_BOUND_LIMIT: u64 = 40;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name,
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub n: usize,
    pub p: u64,
    pub bound: u64,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn table(&self) -> String {
        let mut out = format!(
            "verification for SL_{}({}), bound (p-1)(n^2-n)/2 = {}\n\
             (distances are measured in the certified subgraph)\n",
            self.n, self.p, self.bound
        );
        for c in &self.checks {
            out.push_str(&format!(
                "[{}] {:<24} {}\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            ));
        }
        out.push_str(&format!(
            "{} ({} ms)\n",
            if self.passed() {
                "all checks passed"
            } else {
                "verification FAILED"
            },
            self.elapsed_ms
        ));
        out
    }
}

pub fn verify_instance(n: usize, p: u64, budget: u64, parallel: bool) -> Result<Report> {
    let started = Instant::now();
    let bound = diameter_bound(n, p);
    let graph = CertifiedGraph::build(n, p, budget)?;
    let zero = DominantWeight::zero(n);
    let st = DominantWeight::steinberg(n, p);
    let mut checks = Vec::new();

    let matrix = graph.distance_matrix(parallel);
    let connected = matrix.iter().flatten().all(Option::is_some);
    checks.push(Check::new(
        "strongly connected",
        connected,
        format!("{} vertices, {} edges", graph.len(), graph.edge_count()),
    ));
    match diameter_of(&graph, &matrix) {
        Ok(d) => {
            checks.push(Check::new(
                "diameter",
                d.value as u64 == bound,
                format!("{} (expected {bound})", d.value),
            ));
            checks.push(Check::new(
                "extremal pair",
                d.source == zero && d.target == st,
                format!("witness ({}) -> ({})", d.source, d.target),
            ));
        }
        Err(e) => checks.push(Check::new("diameter", false, e.to_string())),
    }
    let zero_to_st = matrix[0][graph.len() - 1];
    checks.push(Check::new(
        "d(0, St_p)",
        zero_to_st == Some(bound as u32),
        zero_to_st.map_or("unreachable".into(), |d| d.to_string()),
    ));

    checks.push(check_planner(&graph, &matrix, bound));
    checks.push(check_structure(&graph));
    checks.push(check_char0(n, p, bound));
    if (n, p) == (5, 2) {
        let golden: Vec<String> = canonical_path_char0(5, 2)
            .iter()
            .map(|w| w.to_string())
            .collect();
        let expected = [
            "0,0,0,0", "1,0,0,0", "0,1,0,0", "0,0,1,0", "0,0,0,1", "1,0,0,1", "0,1,0,1", "0,0,1,1",
            "1,0,1,1", "0,1,1,1", "1,1,1,1",
        ];
        checks.push(Check::new(
            "golden canonical path",
            golden == expected,
            format!("{} vertices", golden.len()),
        ));
    }

    Ok(Report {
        n,
        p,
        bound,
        checks,
        elapsed_ms: started.elapsed().as_millis(),
    })
}

fn check_planner(graph: &CertifiedGraph, matrix: &[Vec<Option<u32>>], bound: u64) -> Check {
    let count = graph.len();
    let last = count - 1;
    let all_pairs = count <= ALL_PAIRS_PLANNER_LIMIT;
    let pairs: Box<dyn Iterator<Item = (usize, usize)>> = if all_pairs {
        Box::new((0..count).flat_map(move |s| (0..count).map(move |t| (s, t))))
    } else {
        Box::new((0..count).flat_map(move |v| [(0, v), (last, v), (v, 0), (v, last)]))
    };
    let mut checked = 0usize;
    for (s, t) in pairs {
        checked += 1;
        let plan = match plan_path(&graph.vertices[s], &graph.vertices[t], graph.p) {
            Ok(plan) => plan,
            Err(e) => return Check::new("planner soundness", false, e.to_string()),
        };
        let bfs = matrix[s][t].map(|d| d as usize);
        let tight = (s, t) != (0, last) || Some(plan.length) == bfs;
        if plan.length as u64 > bound || bfs.is_none_or(|d| plan.length < d) || !tight {
            return Check::new(
                "planner soundness",
                false,
                format!(
                    "({}) -> ({}): plan {} vs bfs {bfs:?}",
                    graph.vertices[s], graph.vertices[t], plan.length
                ),
            );
        }
    }
    Check::new(
        "planner soundness",
        true,
        format!(
            "{checked} pairs{}",
            if all_pairs {
                " (all)"
            } else {
                " (touching 0 or St_p)"
            }
        ),
    )
}

fn check_structure(graph: &CertifiedGraph) -> Check {
    let p = graph.p;
    let n = graph.n;
    for (i, v) in graph.vertices.iter().enumerate() {
        let label = v.to_partition();
        let conormal = conormal_indices(&label, p);
        if !conormal.contains(&1) {
            return Check::new(
                "structural invariants",
                false,
                format!("1 not conormal at {v}"),
            );
        }
        if !v.is_zero() && !conormal.contains(&(1 + block_form(&label)[0].1)) {
            return Check::new(
                "structural invariants",
                false,
                format!("1+a_1 not conormal at {v}"),
            );
        }
        for e in &graph.adjacency[i] {
            let head = &graph.vertices[e.to];
            if head.f_value() > v.f_value() + 1 {
                return Check::new(
                    "structural invariants",
                    false,
                    format!("f rises by > 1 on {v} -> {head}"),
                );
            }
            if !matches!(certify_via_conormal(v, e.mv, p), Ok(true)) {
                return Check::new(
                    "structural invariants",
                    false,
                    format!("{} at {v} not certified", e.mv),
                );
            }
        }
        for (kind, next) in lr_neighbors(v) {
            if next.f_value() - v.f_value() != kind.f_delta(n) {
                return Check::new(
                    "structural invariants",
                    false,
                    format!("LR edge {kind} at {v}"),
                );
            }
        }
    }
    Check::new(
        "structural invariants",
        true,
        "conormal rows, certificates, f-law on every edge",
    )
}

fn check_char0(n: usize, p: u64, bound: u64) -> Check {
    if bound > CHAR0_BOUND_LIMIT {
        return Check::new(
            "char-0 distance",
            true,
            format!("skipped (bound {bound} > {CHAR0_BOUND_LIMIT})"),
        );
    }
    let started = Instant::now();
    let result = char0_distance(
        &DominantWeight::zero(n),
        &DominantWeight::steinberg(n, p),
        bound + 1,
    );
    let elapsed = started.elapsed();
    match result {
        Ok(Some(d)) => Check::new(
            "char-0 distance",
            d == bound && elapsed < Duration::from_secs(10),
            format!("{d} in {elapsed:?}"),
        ),
        Ok(None) => Check::new("char-0 distance", false, "exceeded budget"),
        Err(e) => Check::new("char-0 distance", false, e.to_string()),
    }
}
