//! The characteristic-zero McKay graph of `SL_n(C)` with respect to the
//! natural module. It is infinite, so only local neighbourhoods, the canonical
//! `0 -> St_p` path and budgeted distance queries are offered.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::DominantWeight;

/// Which Littlewood-Richardson option produced a neighbour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LrEdgeKind {
    /// `m_1 + 1`.
    A,
    /// `m_i - 1, m_{i+1} + 1` for `1 <= i <= n-2`.
    B { i: usize },
    /// `m_{n-1} - 1`.
    C,
}

impl LrEdgeKind {
    /// Change of `f` along an edge of this kind.
    pub fn f_delta(self, n: usize) -> i64 {
        match self {
            LrEdgeKind::A | LrEdgeKind::B { .. } => 1,
            LrEdgeKind::C => -(n as i64 - 1),
        }
    }
}

impl fmt::Display for LrEdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LrEdgeKind::A => f.write_str("a"),
            LrEdgeKind::B { i } => write!(f, "b({i})"),
            LrEdgeKind::C => f.write_str("c"),
        }
    }
}

/// Dominant weights `mu` with `W(mu)` a composition factor of `W(lambda) (x) V_n`,
/// in the order a, b(1), ..., b(n-2), c.
pub fn lr_neighbors(lambda: &DominantWeight) -> Vec<(LrEdgeKind, DominantWeight)> {
    let len = lambda.entries().len();
    let mut out = Vec::with_capacity(len + 1);

    let mut a = lambda.clone();
    *a.entry_mut(1) += 1;
    out.push((LrEdgeKind::A, a));

    for i in 1..len {
        if lambda.at(i) > 0 {
            let mut b = lambda.clone();
            *b.entry_mut(i) -= 1;
            *b.entry_mut(i + 1) += 1;
            out.push((LrEdgeKind::B { i }, b));
        }
    }

    if lambda.at(len) > 0 {
        let mut c = lambda.clone();
        *c.entry_mut(len) -= 1;
        out.push((LrEdgeKind::C, c));
    }
    out
}

/// The explicit path from `0` to `St_p` of length `(p-1)(n^2-n)/2`.
///
/// Stage `j` (for `j = 1..n-1`) repeats `p-1` times: one a-move, then b-moves
/// carrying the new 1 from position 1 to position `n-j`.
pub fn canonical_path_char0(n: usize, p: u64) -> Vec<DominantWeight> {
    assert!(n >= 2 && p >= 2);
    let mut current = DominantWeight::zero(n);
    let mut path = vec![current.clone()];
    for stage in 1..n {
        for _ in 0..p - 1 {
            *current.entry_mut(1) += 1;
            path.push(current.clone());
            for i in 1..n - stage {
                *current.entry_mut(i) -= 1;
                *current.entry_mut(i + 1) += 1;
                path.push(current.clone());
            }
        }
    }
    path
}

/// Exact directed distance from `src` to `tgt`, or `None` if it exceeds `budget`.
///
/// Iterative deepening A* with `h = max(0, f(tgt) - f(current))`, admissible
/// because no edge raises `f` by more than one.
pub fn char0_distance(
    src: &DominantWeight,
    tgt: &DominantWeight,
    budget: u64,
) -> Result<Option<u64>> {
    if src.n() != tgt.n() {
        return Err(Error::RankMismatch {
            expected: src.n(),
            found: tgt.n(),
        });
    }
    let target_f = tgt.f_value();
    let h = |w: &DominantWeight| (target_f - w.f_value()).max(0) as u64;

    let mut bound = h(src);
    while bound <= budget {
        let mut search = Deepening {
            target: tgt,
            heuristic: &h,
            bound,
            best_g: HashMap::new(),
            next_bound: u64::MAX,
        };
        if search.visit(src, 0) {
            return Ok(Some(bound));
        }
        if search.next_bound == u64::MAX {
            // Nothing left beyond the bound; cannot happen in a connected graph.
            return Ok(None);
        }
        bound = search.next_bound;
    }
    Ok(None)
}

struct Deepening<'a, H> {
    target: &'a DominantWeight,
    heuristic: &'a H,
    bound: u64,
    best_g: HashMap<DominantWeight, u64>,
    next_bound: u64,
}

impl<H: Fn(&DominantWeight) -> u64> Deepening<'_, H> {
    fn visit(&mut self, node: &DominantWeight, g: u64) -> bool {
        let estimate = g + (self.heuristic)(node);
        if estimate > self.bound {
            self.next_bound = self.next_bound.min(estimate);
            return false;
        }
        if node == self.target {
            return true;
        }
        match self.best_g.get(node) {
            Some(&seen) if seen <= g => return false,
            _ => {
                self.best_g.insert(node.clone(), g);
            }
        }
        lr_neighbors(node)
            .into_iter()
            .any(|(_, next)| self.visit(&next, g + 1))
    }
}

/// All LR edges within `radius` steps of `center`, sorted for stable output.
pub fn char0_neighborhood(
    center: &DominantWeight,
    radius: usize,
) -> Vec<(DominantWeight, LrEdgeKind, DominantWeight)> {
    let mut depth: HashMap<DominantWeight, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut edges = BTreeSet::new();
    depth.insert(center.clone(), 0);
    queue.push_back(center.clone());
    while let Some(w) = queue.pop_front() {
        let d = depth[&w];
        if d == radius {
            continue;
        }
        for (kind, next) in lr_neighbors(&w) {
            edges.insert((w.clone(), kind, next.clone()));
            if !depth.contains_key(&next) {
                depth.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    edges.into_iter().collect()
}
