//! Addable, removable and conormal indices of a partition label, and the
//! tensor children they certify for `GL_n` in characteristic `p`.
//!
//! Indices are 1-based throughout, matching row numbers of the diagram.

use serde::{Deserialize, Serialize};

use crate::weights::{is_weakly_decreasing, partition_to_weight, DominantWeight, PartitionLabel};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexSets {
    pub addable: Vec<usize>,
    pub removable: Vec<usize>,
    pub conormal: Vec<usize>,
}

impl IndexSets {
    pub fn of(label: &PartitionLabel, p: u64) -> Self {
        Self {
            addable: addable_indices(label),
            removable: removable_indices(label),
            conormal: conormal_indices(label, p),
        }
    }
}

/// Rows `i` such that `label + e_i` is weakly decreasing. Row `n` counts,
/// which only makes sense for `GL_n`.
pub fn addable_indices(label: &PartitionLabel) -> Vec<usize> {
    let parts = label.parts();
    (1..=parts.len())
        .filter(|&i| i == 1 || parts[i - 2] > parts[i - 1])
        .collect()
}

/// Rows `i` such that `label - e_i` is still a partition.
pub fn removable_indices(label: &PartitionLabel) -> Vec<usize> {
    let parts = label.parts();
    (1..=parts.len())
        .filter(|&i| parts[i - 1] > 0 && parts.get(i).is_none_or(|&next| next < parts[i - 1]))
        .collect()
}

fn residue(x: i64, p: u64) -> i64 {
    x.rem_euclid(p as i64)
}

/// The sets `R_i` (removable rows above `i` with matching residue) and `A_i`
/// (addable rows above `i` with matching residue) for an addable row `i`.
pub fn residue_sets(label: &PartitionLabel, i: usize, p: u64) -> (Vec<usize>, Vec<usize>) {
    let target = residue(label.part(i) + 1 - i as i64, p);
    let removable: Vec<usize> = removable_indices(label)
        .into_iter()
        .filter(|&k| k < i && residue(label.part(k) - k as i64, p) == target)
        .collect();
    let addable: Vec<usize> = addable_indices(label)
        .into_iter()
        .filter(|&k| k < i && residue(label.part(k) + 1 - k as i64, p) == target)
        .collect();
    (removable, addable)
}

/// Whether some injection `g: removable -> addable` has `g(k) > k` for all `k`.
///
/// Each `k` may use any element above it, and those candidate sets are nested,
/// so matching the largest `k` first to the smallest free element above it
/// succeeds whenever any injection exists.
pub fn injection_exists(removable: &[usize], addable: &[usize]) -> bool {
    let mut free: Vec<usize> = addable.to_vec();
    free.sort_unstable();
    let mut ks: Vec<usize> = removable.to_vec();
    ks.sort_unstable_by(|a, b| b.cmp(a));
    for k in ks {
        match free.iter().position(|&a| a > k) {
            Some(pos) => {
                free.remove(pos);
            }
            None => return false,
        }
    }
    true
}

/// Addable rows that are conormal for `label` in characteristic `p`.
pub fn conormal_indices(label: &PartitionLabel, p: u64) -> Vec<usize> {
    assert!(p >= 2, "p must be at least 2");
    addable_indices(label)
        .into_iter()
        .filter(|&i| {
            let (removable, addable) = residue_sets(label, i, p);
            injection_exists(&removable, &addable)
        })
        .collect()
}

/// For each conormal row `i`, the `SL_n` weight of `label + e_i`. Adding to row
/// `n` shifts every part down by the new last part.
pub fn bk_children(label: &PartitionLabel, p: u64) -> Vec<(usize, DominantWeight)> {
    conormal_indices(label, p)
        .into_iter()
        .map(|i| {
            let mut parts = label.parts().to_vec();
            parts[i - 1] += 1;
            debug_assert!(is_weakly_decreasing(&parts));
            let weight =
                partition_to_weight(&parts).expect("addable row keeps the partition valid");
            (i, weight)
        })
        .collect()
}

/// Run-length encoding `(value, multiplicity)`; the first multiplicity is `a_1`.
pub fn block_form(label: &PartitionLabel) -> Vec<(i64, usize)> {
    let mut blocks: Vec<(i64, usize)> = Vec::new();
    for &part in label.parts() {
        match blocks.last_mut() {
            Some((value, count)) if *value == part => *count += 1,
            _ => blocks.push((part, 1)),
        }
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(xs: &[i64]) -> PartitionLabel {
        PartitionLabel::new(xs.to_vec()).unwrap()
    }

    fn w(xs: &[i64]) -> DominantWeight {
        DominantWeight::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn addable_examples() {
        assert_eq!(addable_indices(&lab(&[0, 0, 0])), vec![1]);
        assert_eq!(addable_indices(&lab(&[2, 1, 0])), vec![1, 2, 3]);
        assert_eq!(addable_indices(&lab(&[2, 2, 0])), vec![1, 3]);
    }

    #[test]
    fn removable_examples() {
        assert!(removable_indices(&lab(&[0, 0, 0, 0])).is_empty());
        assert_eq!(removable_indices(&lab(&[2, 2, 0])), vec![2]);
        assert_eq!(removable_indices(&lab(&[3, 1, 0])), vec![1, 2]);
    }

    #[test]
    fn conormal_examples() {
        for p in [2, 3, 5, 7] {
            assert_eq!(conormal_indices(&lab(&[0, 0, 0, 0]), p), vec![1]);
        }
        assert_eq!(conormal_indices(&lab(&[1, 0]), 2), vec![1, 2]);
        assert_eq!(conormal_indices(&lab(&[2, 0]), 2), vec![1]);
        let (r, a) = residue_sets(&lab(&[2, 0]), 2, 2);
        assert_eq!((r, a), (vec![1], vec![]));
    }

    #[test]
    fn greedy_injection_cases() {
        assert!(injection_exists(&[], &[]));
        assert!(injection_exists(&[1], &[2]));
        assert!(!injection_exists(&[2], &[1]));
        assert!(injection_exists(&[1, 2], &[3, 4]));
        assert!(!injection_exists(&[1, 3], &[2, 3]));
        assert!(injection_exists(&[1, 3], &[2, 4]));
    }

    #[test]
    fn children_examples() {
        assert_eq!(bk_children(&lab(&[0, 0, 0]), 3), vec![(1, w(&[1, 0]))]);
        assert_eq!(
            bk_children(&lab(&[2, 1, 0]), 2),
            vec![(1, w(&[2, 1])), (2, w(&[0, 2])), (3, w(&[1, 0]))]
        );
        assert_eq!(bk_children(&lab(&[2, 0]), 2), vec![(1, w(&[3]))]);
    }

    #[test]
    fn block_form_examples() {
        assert_eq!(block_form(&lab(&[2, 2, 0])), vec![(2, 2), (0, 1)]);
        assert_eq!(block_form(&lab(&[0, 0, 0])), vec![(0, 3)]);
        assert_eq!(block_form(&lab(&[4, 2, 0])), vec![(4, 1), (2, 1), (0, 1)]);
    }
}
