//! The certified subgraph of the modular McKay graph for fixed `(n, p)`:
//! every `p`-restricted weight, with an edge for each certified move.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moves::{certified_moves, Move};
use crate::weights::DominantWeight;

pub const DEFAULT_VERTEX_BUDGET: u64 = 1_000_000;

fn vertex_count(n: usize, p: u64, budget: u64) -> Result<usize> {
    if n < 2 || p < 2 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2 and p >= 2, got n = {n}, p = {p}"
        )));
    }
    let count = (p as u128).checked_pow(n as u32 - 1).unwrap_or(u128::MAX);
    if count > budget as u128 {
        return Err(Error::BudgetExceeded { count, budget });
    }
    Ok(count as usize)
}

fn decode(mut index: usize, n: usize, p: u64) -> DominantWeight {
    let mut entries = vec![0i64; n - 1];
    for slot in entries.iter_mut().rev() {
        *slot = (index % p as usize) as i64;
        index /= p as usize;
    }
    DominantWeight::new(entries).expect("digits are nonnegative")
}

/// All `p^(n-1)` restricted weights in lexicographic order.
pub fn enumerate_p_restricted(n: usize, p: u64, budget: u64) -> Result<Vec<DominantWeight>> {
    let count = vertex_count(n, p, budget)?;
    Ok((0..count).map(|i| decode(i, n, p)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    #[serde(rename = "move")]
    pub mv: Move,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedGraph {
    pub n: usize,
    pub p: u64,
    pub vertices: Vec<DominantWeight>,
    pub adjacency: Vec<Vec<Edge>>,
}

/// Longest shortest path and the ordered pair attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diameter {
    pub value: u32,
    pub source: DominantWeight,
    pub target: DominantWeight,
}

pub type DistanceMatrix = Vec<Vec<Option<u32>>>;

impl CertifiedGraph {
    pub fn build(n: usize, p: u64, budget: u64) -> Result<Self> {
        let vertices = enumerate_p_restricted(n, p, budget)?;
        let mut graph = Self {
            n,
            p,
            adjacency: Vec::with_capacity(vertices.len()),
            vertices: Vec::new(),
        };
        for v in &vertices {
            let edges = certified_moves(v, p)?
                .into_iter()
                .map(|(mv, head)| Edge {
                    mv,
                    to: graph.index_in(&head),
                })
                .collect();
            graph.adjacency.push(edges);
        }
        graph.vertices = vertices;
        Ok(graph)
    }

    fn index_in(&self, w: &DominantWeight) -> usize {
        w.entries()
            .iter()
            .fold(0usize, |acc, &m| acc * self.p as usize + m as usize)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    pub fn index_of(&self, w: &DominantWeight) -> Option<usize> {
        (w.n() == self.n && w.is_p_restricted(self.p)).then(|| self.index_in(w))
    }

    /// Iterates over `(tail, move, head)` index triples.
    pub fn edges(&self) -> impl Iterator<Item = (usize, Move, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(from, out)| out.iter().map(move |e| (from, e.mv, e.to)))
    }

    /// Directed BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.len()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for e in &self.adjacency[v] {
                if dist[e.to].is_none() {
                    dist[e.to] = Some(d + 1);
                    queue.push_back(e.to);
                }
            }
        }
        dist
    }

    /// One BFS per source. The parallel variant returns the same matrix.
    pub fn distance_matrix(&self, parallel: bool) -> DistanceMatrix {
        if parallel {
            (0..self.len())
                .into_par_iter()
                .map(|s| self.bfs_distances(s))
                .collect()
        } else {
            (0..self.len()).map(|s| self.bfs_distances(s)).collect()
        }
    }

    /// Ties on distance go to the pair with the largest rise in `f`, then to
    /// the lexicographically first pair, so `(0, St_p)` is reported whenever
    /// it attains the maximum.
    pub fn diameter(&self, parallel: bool) -> Result<Diameter> {
        let matrix = self.distance_matrix(parallel);
        diameter_of(self, &matrix)
    }
}

pub fn diameter_of(graph: &CertifiedGraph, matrix: &DistanceMatrix) -> Result<Diameter> {
    let f: Vec<i64> = graph.vertices.iter().map(DominantWeight::f_value).collect();
    let mut best: Option<(u32, i64, usize, usize)> = None;
    for (s, row) in matrix.iter().enumerate() {
        for (t, d) in row.iter().enumerate() {
            let d = d.ok_or_else(|| Error::Unreachable {
                from: graph.vertices[s].to_string(),
                to: graph.vertices[t].to_string(),
            })?;
            let rise = f[t] - f[s];
            let better = match best {
                None => true,
                Some((bd, brise, _, _)) => d > bd || (d == bd && rise > brise),
            };
            if better {
                best = Some((d, rise, s, t));
            }
        }
    }
    let (value, _, s, t) = best.expect("graph has at least one vertex");
    Ok(Diameter {
        value,
        source: graph.vertices[s].clone(),
        target: graph.vertices[t].clone(),
    })
}

pub fn build_certified_graph(n: usize, p: u64) -> Result<CertifiedGraph> {
    CertifiedGraph::build(n, p, DEFAULT_VERTEX_BUDGET)
}

pub fn bfs_distances(graph: &CertifiedGraph, source: &DominantWeight) -> Result<Vec<Option<u32>>> {
    let index = graph.index_of(source).ok_or_else(|| Error::NotRestricted {
        weight: source.to_string(),
        p: graph.p,
    })?;
    Ok(graph.bfs_distances(index))
}

pub fn subgraph_diameter(graph: &CertifiedGraph) -> Result<Diameter> {
    graph.diameter(false)
}
