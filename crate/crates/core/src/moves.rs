//! The three kinds of edge of the modular McKay graph of `SL_n(p)` that are
//! known to exist, and their cross-check against conormal indices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::conormal::{block_form, conormal_indices};
use crate::error::{Error, Result};
use crate::weights::{p_adic_decompose, partition_to_weight, DominantWeight};

/// A certified edge out of a `p`-restricted weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Move {
    /// Add 1 to the first entry, wrapping `p-1` back to 1.
    AddFirst,
    /// Move a 1 from the first nonzero entry `s < n-1` to position `s+1`.
    ClearForward { s: usize },
    /// Remove a 1 from position `n-1` when it is the only nonzero entry.
    ClearLast,
}

impl Move {
    pub fn name(&self) -> &'static str {
        match self {
            Move::AddFirst => "add_first",
            Move::ClearForward { .. } => "clear_forward",
            Move::ClearLast => "clear_last",
        }
    }

    pub fn apply(&self, lambda: &DominantWeight, p: u64) -> Result<DominantWeight> {
        match *self {
            Move::AddFirst => move_add_first(lambda, p),
            Move::ClearForward { s } => {
                let mu = move_clear_forward(lambda, p)?;
                if lambda.first_nonzero() != Some(s) {
                    return Err(not_applicable(self, lambda));
                }
                Ok(mu)
            }
            Move::ClearLast => {
                require_restricted(lambda, p)?;
                move_clear_last(lambda)
            }
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::ClearForward { s } => write!(f, "clear_forward(s={s})"),
            other => f.write_str(other.name()),
        }
    }
}

/// The element of `{1, ..., p-1}` congruent to `value` mod `p-1`, for `value >= 1`.
pub fn wrap_nonzero(value: i64, p: u64) -> i64 {
    debug_assert!(value >= 1);
    (value - 1).rem_euclid(p as i64 - 1) + 1
}

fn not_applicable(mv: &Move, lambda: &DominantWeight) -> Error {
    Error::NotApplicable {
        kind: mv.name(),
        weight: lambda.to_string(),
    }
}

fn require_restricted(lambda: &DominantWeight, p: u64) -> Result<()> {
    assert!(p >= 2, "p must be at least 2");
    if lambda.is_p_restricted(p) {
        Ok(())
    } else {
        Err(Error::NotRestricted {
            weight: lambda.to_string(),
            p,
        })
    }
}

pub fn move_add_first(lambda: &DominantWeight, p: u64) -> Result<DominantWeight> {
    require_restricted(lambda, p)?;
    let mut mu = lambda.clone();
    *mu.entry_mut(1) = wrap_nonzero(lambda.at(1) + 1, p);
    Ok(mu)
}

pub fn move_clear_forward(lambda: &DominantWeight, p: u64) -> Result<DominantWeight> {
    require_restricted(lambda, p)?;
    let n = lambda.n();
    match lambda.first_nonzero() {
        Some(s) if s < n - 1 => {
            let mut mu = lambda.clone();
            *mu.entry_mut(s) -= 1;
            *mu.entry_mut(s + 1) = wrap_nonzero(lambda.at(s + 1) + 1, p);
            Ok(mu)
        }
        _ => Err(not_applicable(&Move::ClearForward { s: 0 }, lambda)),
    }
}

pub fn move_clear_last(lambda: &DominantWeight) -> Result<DominantWeight> {
    let n = lambda.n();
    if lambda.first_nonzero() != Some(n - 1) {
        return Err(not_applicable(&Move::ClearLast, lambda));
    }
    let mut mu = lambda.clone();
    *mu.entry_mut(n - 1) -= 1;
    Ok(mu)
}

/// The one or two certified edges out of `lambda`: always `AddFirst`, plus
/// exactly one clearing move when `lambda` is nonzero.
pub fn certified_moves(lambda: &DominantWeight, p: u64) -> Result<Vec<(Move, DominantWeight)>> {
    let mut out = vec![(Move::AddFirst, move_add_first(lambda, p)?)];
    let n = lambda.n();
    match lambda.first_nonzero() {
        None => {}
        Some(s) if s < n - 1 => {
            out.push((Move::ClearForward { s }, move_clear_forward(lambda, p)?))
        }
        Some(_) => out.push((Move::ClearLast, move_clear_last(lambda)?)),
    }
    Ok(out)
}

/// The move realising `lambda -> mu`, if it is one of the certified edges.
pub fn validate_move(lambda: &DominantWeight, mu: &DominantWeight, p: u64) -> Result<Move> {
    if lambda.n() != mu.n() {
        return Err(Error::RankMismatch {
            expected: lambda.n(),
            found: mu.n(),
        });
    }
    require_restricted(mu, p)?;
    certified_moves(lambda, p)?
        .into_iter()
        .find(|(_, target)| target == mu)
        .map(|(mv, _)| mv)
        .ok_or_else(|| Error::NoSuchEdge {
            from: lambda.to_string(),
            to: mu.to_string(),
            p,
        })
}

/// Re-derives a certified move from the conormal-index machinery.
///
/// The row used is 1 for `AddFirst` and `1 + a_1` for the clearing moves. The
/// row must be conormal, and the restricted weight `mu'` of `lambda~ + e_row`
/// must either equal the move's target or, after splitting into base-`p`
/// digits, have digits summing to the target (the highest weight of the
/// tensor product of the digit modules once Frobenius twists are dropped on
/// `SL_n(p)`).
pub fn certify_via_conormal(lambda: &DominantWeight, mv: Move, p: u64) -> Result<bool> {
    let mu = mv.apply(lambda, p)?;
    let label = lambda.to_partition();
    let row = match mv {
        Move::AddFirst => 1,
        Move::ClearForward { .. } | Move::ClearLast => 1 + block_form(&label)[0].1,
    };
    if !conormal_indices(&label, p).contains(&row) {
        return Ok(false);
    }
    let mut parts = label.parts().to_vec();
    parts[row - 1] += 1;
    let mu_prime = partition_to_weight(&parts)?;
    if mu_prime.is_p_restricted(p) {
        return Ok(mu_prime == mu);
    }
    let digits = p_adic_decompose(&mu_prime, p);
    let mut untwisted = vec![0i64; lambda.n() - 1];
    for digit in &digits {
        for (acc, &m) in untwisted.iter_mut().zip(digit.entries()) {
            *acc += m;
        }
    }
    Ok(digits.len() > 1 && untwisted.as_slice() == mu.entries())
}
