//! Explicit paths between any two `p`-restricted weights using only certified
//! moves, each of length at most `(p-1)(n^2-n)/2`.
//!
//! Every path is routed through a waypoint `M(mu)` on the canonical
//! `0 -> St_p` path and is then filled in to `mu`. The construction is
//! replayed through [`validate_move`] before it is returned; any mismatch is
//! reported as [`Error::InvariantViolation`] instead of being patched.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::char0::canonical_path_char0;
use crate::error::{Error, Result};
use crate::moves::{validate_move, Move};
use crate::weights::{diameter_bound, DominantWeight};

/// Vertex set of the canonical `0 -> St_p` path.
#[derive(Debug)]
pub struct CanonicalSet {
    path: Vec<DominantWeight>,
    members: HashSet<DominantWeight>,
}

impl CanonicalSet {
    fn build(n: usize, p: u64) -> Self {
        let path = canonical_path_char0(n, p);
        let members = path.iter().cloned().collect();
        Self { path, members }
    }

    pub fn contains(&self, w: &DominantWeight) -> bool {
        self.members.contains(w)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in path order.
    pub fn path(&self) -> &[DominantWeight] {
        &self.path
    }
}

type CanonicalCache = RwLock<HashMap<(usize, u64), Arc<CanonicalSet>>>;

/// Memoized per `(n, p)`. Concurrent first calls may both build the set; the
/// first one published wins and both results are identical.
pub fn canonical_set(n: usize, p: u64) -> Arc<CanonicalSet> {
    static CACHE: OnceLock<CanonicalCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(set) = cache.read().unwrap().get(&(n, p)) {
        return Arc::clone(set);
    }
    let built = Arc::new(CanonicalSet::build(n, p));
    let mut guard = cache.write().unwrap();
    Arc::clone(guard.entry((n, p)).or_insert(built))
}

/// `l_mu`: 0 for `St_p`, `n` for the zero weight, otherwise the last position
/// whose entry is below `p-1`.
pub fn ell(mu: &DominantWeight, p: u64) -> usize {
    let top = p as i64 - 1;
    if mu.entries().iter().all(|&m| m == top) {
        0
    } else if mu.is_zero() {
        mu.n()
    } else {
        mu.entries().iter().rposition(|&m| m < top).unwrap() + 1
    }
}

/// Membership in the canonical set with every entry before `l_mu` zero.
pub fn in_m_tilde(mu: &DominantWeight, p: u64) -> bool {
    let l = ell(mu, p);
    canonical_set(mu.n(), p).contains(mu) && (1..l).all(|x| mu.at(x) == 0)
}

/// `s_mu`: 0 on the tilde set, otherwise the last nonzero position before `l_mu`.
pub fn s_mu(mu: &DominantWeight, p: u64) -> Result<usize> {
    if in_m_tilde(mu, p) {
        return Ok(0);
    }
    let l = ell(mu, p);
    (1..l).rev().find(|&x| mu.at(x) > 0).ok_or_else(|| {
        Error::InvariantViolation(format!(
            "{mu} has no nonzero entry before position {l} but is not on the canonical path"
        ))
    })
}

/// The canonical waypoint `M(mu)`: `mu` itself on the canonical path, otherwise
/// `(0,..,0,1,0,..,0,mu_l,p-1,..,p-1)` with the 1 at `s_mu` and `mu_l` at `l_mu`.
pub fn capital_m_of(mu: &DominantWeight, p: u64) -> Result<DominantWeight> {
    let set = canonical_set(mu.n(), p);
    if set.contains(mu) {
        return Ok(mu.clone());
    }
    let (l, s) = (ell(mu, p), s_mu(mu, p)?);
    let entries = (1..mu.n())
        .map(|x| match x {
            _ if x == s => 1,
            _ if x == l => mu.at(l),
            _ if x > l => p as i64 - 1,
            _ => 0,
        })
        .collect();
    let m = DominantWeight::new(entries)?;
    if !set.contains(&m) {
        return Err(Error::InvariantViolation(format!(
            "waypoint {m} for {mu} is not on the canonical path"
        )));
    }
    Ok(m)
}

/// The number of `AddFirst` steps taken before clearing: the element of
/// `{0, ..., p-2}` congruent to `residue - sum_{i <= upto} lambda_i` mod `p-1`.
pub fn lambda_zero(lambda: &DominantWeight, upto: usize, residue: i64, p: u64) -> i64 {
    assert!(p >= 2, "p must be at least 2");
    let sum: i64 = lambda.entries()[..upto.min(lambda.n() - 1)].iter().sum();
    (residue - sum).rem_euclid(p as i64 - 1)
}

/// `(mu_s - 1) * s + sum_{i < s} i * mu_i` with `s = s_mu`, or 0 on the canonical path.
pub fn path_from_m_len(mu: &DominantWeight, p: u64) -> Result<usize> {
    if canonical_set(mu.n(), p).contains(mu) {
        return Ok(0);
    }
    let s = s_mu(mu, p)?;
    let tail: i64 = (1..s).map(|i| i as i64 * mu.at(i)).sum();
    Ok(((mu.at(s) - 1) * s as i64 + tail) as usize)
}

/// Moves from `M(mu)` to `mu`: fill position `s_mu`, then each earlier
/// position from the back, one carried 1 at a time.
pub fn path_from_m(mu: &DominantWeight, p: u64) -> Result<Vec<Move>> {
    let start = capital_m_of(mu, p)?;
    if &start == mu {
        return Ok(Vec::new());
    }
    let s = s_mu(mu, p)?;
    let mut walk = Walker::new(start, p);
    for _ in 1..mu.at(s) {
        walk.carry_to(s)?;
    }
    for i in (1..s).rev() {
        for _ in 0..mu.at(i) {
            walk.carry_to(i)?;
        }
    }
    walk.expect_at(mu, "filling from the canonical waypoint")?;
    Ok(walk.moves)
}

/// A validated sequence of certified moves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathPlan {
    pub n: usize,
    pub p: u64,
    pub source: DominantWeight,
    pub target: DominantWeight,
    pub moves: Vec<Move>,
    pub waypoints: Vec<DominantWeight>,
    pub length: usize,
}

impl PathPlan {
    /// Replays `moves` from `source`.
    pub fn from_moves(source: DominantWeight, moves: Vec<Move>, p: u64) -> Result<Self> {
        let mut waypoints = Vec::with_capacity(moves.len() + 1);
        waypoints.push(source.clone());
        for mv in &moves {
            let next = mv.apply(waypoints.last().unwrap(), p)?;
            waypoints.push(next);
        }
        Ok(Self {
            n: source.n(),
            p,
            target: waypoints.last().unwrap().clone(),
            source,
            length: moves.len(),
            moves,
            waypoints,
        })
    }

    /// Checks every step through [`validate_move`] and the waypoint bookkeeping.
    pub fn validate(&self) -> Result<()> {
        if self.waypoints.len() != self.moves.len() + 1 || self.length != self.moves.len() {
            return Err(Error::InvariantViolation(
                "plan length and waypoint count disagree".into(),
            ));
        }
        if self.waypoints.first() != Some(&self.source)
            || self.waypoints.last() != Some(&self.target)
        {
            return Err(Error::InvariantViolation(
                "plan waypoints do not span source to target".into(),
            ));
        }
        for (mv, pair) in self.moves.iter().zip(self.waypoints.windows(2)) {
            let applied = mv.apply(&pair[0], self.p)?;
            if applied != pair[1] {
                return Err(Error::InvariantViolation(format!(
                    "{mv} at {} gives {applied}, plan says {}",
                    pair[0], pair[1]
                )));
            }
            validate_move(&pair[0], &pair[1], self.p)?;
        }
        Ok(())
    }
}

/// Which branch of the construction produced a plan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanCase {
    Identical,
    /// `l_lambda > l_mu`, including every plan starting at zero.
    Descending,
    /// `l_lambda <= l_mu` and `mu_{l_mu} != 0`.
    AscendingNonzero,
    /// `l_lambda <= l_mu`, `mu_{l_mu} = 0` and `l_mu >= n-1` (target zero included).
    AscendingViaZero,
    /// `l_lambda <= l_mu`, `mu_{l_mu} = 0` and `l_mu < n-1`.
    AscendingShift,
}

/// Step accounting for a plan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanBreakdown {
    pub case: PlanCase,
    pub lambda_zero: i64,
    /// `lambda_0` plus the moves spent emptying the positions before the pivot.
    pub clearing_steps: usize,
    /// Steps from `lambda` to `M(mu)`.
    pub to_waypoint_steps: usize,
    /// Steps from `M(mu)` to `mu`.
    pub from_waypoint_steps: usize,
}

pub fn plan_path(lambda: &DominantWeight, mu: &DominantWeight, p: u64) -> Result<PathPlan> {
    plan_path_detailed(lambda, mu, p).map(|(plan, _)| plan)
}

pub fn plan_path_detailed(
    lambda: &DominantWeight,
    mu: &DominantWeight,
    p: u64,
) -> Result<(PathPlan, PlanBreakdown)> {
    let n = lambda.n();
    if mu.n() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: mu.n(),
        });
    }
    for w in [lambda, mu] {
        if !w.is_p_restricted(p) {
            return Err(Error::NotRestricted {
                weight: w.to_string(),
                p,
            });
        }
    }

    let mut walk = Walker::new(lambda.clone(), p);
    let mut breakdown = PlanBreakdown {
        case: PlanCase::Identical,
        lambda_zero: 0,
        clearing_steps: 0,
        to_waypoint_steps: 0,
        from_waypoint_steps: 0,
    };
    if lambda != mu {
        let (l_lambda, l_mu) = (ell(lambda, p), ell(mu, p));
        let s = s_mu(mu, p)?;
        if l_lambda > l_mu {
            descend(&mut walk, &mut breakdown, l_lambda, mu, l_mu)?;
        } else {
            ascend(&mut walk, &mut breakdown, mu, l_mu)?;
        }
        if s >= 1 {
            walk.carry_to(s)?;
        }
        walk.expect_at(&capital_m_of(mu, p)?, "reaching the canonical waypoint")?;
        breakdown.to_waypoint_steps = walk.moves.len();

        let tail = path_from_m(mu, p)?;
        breakdown.from_waypoint_steps = tail.len();
        for mv in tail {
            walk.step(mv)?;
        }
    }

    let plan = PathPlan::from_moves(lambda.clone(), walk.moves, p)?;
    plan.validate()?;
    if &plan.target != mu {
        return Err(Error::InvariantViolation(format!(
            "plan from {lambda} ends at {} instead of {mu}",
            plan.target
        )));
    }
    let bound = diameter_bound(n, p) as usize;
    if plan.length > bound {
        return Err(Error::InvariantViolation(format!(
            "plan from {lambda} to {mu} has length {} > {bound}",
            plan.length
        )));
    }
    Ok((plan, breakdown))
}

/// `l_lambda > l_mu`: push everything before `l_lambda` into position
/// `l_lambda` (leaving 0 or `p-1` there), fill positions after `l_mu` with
/// `p-1` from the back, then load `mu_{l_mu}` at `l_mu`.
fn descend(
    walk: &mut Walker,
    breakdown: &mut PlanBreakdown,
    l_lambda: usize,
    mu: &DominantWeight,
    l_mu: usize,
) -> Result<()> {
    let n = mu.n();
    let top = walk.p as i64 - 1;
    breakdown.case = PlanCase::Descending;

    let pivot = l_lambda.min(n - 1);
    let l0 = lambda_zero(&walk.current, pivot, 0, walk.p);
    breakdown.lambda_zero = l0;
    for _ in 0..l0 {
        walk.step(Move::AddFirst)?;
    }
    walk.clear_before(pivot)?;
    breakdown.clearing_steps = walk.moves.len();
    let left = walk.current.at(pivot);
    if left != 0 && left != top {
        return Err(Error::InvariantViolation(format!(
            "clearing left {left} at position {pivot}, expected 0 or {top}"
        )));
    }

    // The last position below p-1 is always preceded by zeros here, so a
    // carried 1 lands on it without wrapping.
    while let Some(q) = (l_mu + 1..n).rev().find(|&x| walk.current.at(x) < top) {
        walk.carry_to(q)?;
    }
    if l_mu >= 1 {
        for _ in 0..mu.at(l_mu) {
            walk.carry_to(l_mu)?;
        }
    }
    Ok(())
}

/// `l_lambda <= l_mu`: choose `lambda_0` so clearing into the pivot leaves the
/// right residue there, then adjust the pivot to `mu_{l_mu}`.
fn ascend(
    walk: &mut Walker,
    breakdown: &mut PlanBreakdown,
    mu: &DominantWeight,
    l_mu: usize,
) -> Result<()> {
    let n = mu.n();
    let top = walk.p as i64 - 1;
    let pivot = l_mu.min(n - 1);
    let target_value = if l_mu == n { 0 } else { mu.at(l_mu) };
    let (case, residue) = if target_value != 0 {
        (PlanCase::AscendingNonzero, target_value)
    } else if pivot == n - 1 {
        (PlanCase::AscendingViaZero, 1)
    } else {
        (PlanCase::AscendingShift, 0)
    };
    breakdown.case = case;

    let l0 = lambda_zero(&walk.current, pivot, residue, walk.p);
    breakdown.lambda_zero = l0;
    for _ in 0..l0 {
        walk.step(Move::AddFirst)?;
    }
    walk.clear_before(pivot)?;
    breakdown.clearing_steps = walk.moves.len();
    let at_pivot = walk.current.at(pivot);

    match case {
        PlanCase::AscendingNonzero => {
            if at_pivot != target_value {
                return Err(Error::InvariantViolation(format!(
                    "clearing left {at_pivot} at position {pivot}, expected {target_value}"
                )));
            }
        }
        PlanCase::AscendingViaZero => {
            if at_pivot != 1 {
                return Err(Error::InvariantViolation(format!(
                    "clearing left {at_pivot} at position {pivot}, expected 1"
                )));
            }
            walk.step(Move::ClearLast)?;
        }
        PlanCase::AscendingShift => {
            // When lambda already has zeros up to the pivot, clearing leaves 0
            // there and nothing needs shifting. Otherwise the pivot holds p-1
            // and shifting it into the next position (also p-1) wraps that
            // entry back to p-1 after p-1 moves.
            if at_pivot == top {
                for _ in 0..top {
                    walk.step(Move::ClearForward { s: pivot })?;
                }
            } else if at_pivot != 0 {
                return Err(Error::InvariantViolation(format!(
                    "clearing left {at_pivot} at position {pivot}, expected 0 or {top}"
                )));
            }
        }
        _ => unreachable!(),
    }
    Ok(())
}

struct Walker {
    p: u64,
    current: DominantWeight,
    moves: Vec<Move>,
}

impl Walker {
    fn new(start: DominantWeight, p: u64) -> Self {
        Self {
            p,
            current: start,
            moves: Vec::new(),
        }
    }

    fn step(&mut self, mv: Move) -> Result<()> {
        self.current = mv.apply(&self.current, self.p).map_err(|e| {
            Error::InvariantViolation(format!("{mv} failed at {}: {e}", self.current))
        })?;
        self.moves.push(mv);
        Ok(())
    }

    /// Adds 1 to the first entry and moves it along to `pos`; every entry
    /// before `pos` must be zero.
    fn carry_to(&mut self, pos: usize) -> Result<()> {
        if (1..pos).any(|x| self.current.at(x) != 0) {
            return Err(Error::InvariantViolation(format!(
                "cannot carry a 1 to position {pos} of {}",
                self.current
            )));
        }
        self.step(Move::AddFirst)?;
        for s in 1..pos {
            self.step(Move::ClearForward { s })?;
        }
        Ok(())
    }

    /// Clears the first nonzero entry forward until everything before `pos` is zero.
    fn clear_before(&mut self, pos: usize) -> Result<()> {
        while let Some(s) = self.current.first_nonzero().filter(|&s| s < pos) {
            self.step(Move::ClearForward { s })?;
        }
        Ok(())
    }

    fn expect_at(&self, expected: &DominantWeight, stage: &str) -> Result<()> {
        if &self.current != expected {
            return Err(Error::InvariantViolation(format!(
                "{stage}: reached {}, expected {expected}",
                self.current
            )));
        }
        Ok(())
    }
}
