//! Brute-force oracles shared by the property tests and the acceptance suite.

use std::collections::BTreeSet;

use mckay_core::LrEdgeKind;

/// Add one box to each row of the diagram where that leaves a partition, and
/// read the `SL_n` weight off the new diagram.
pub fn box_adding_oracle(m: &[i64]) -> BTreeSet<(LrEdgeKind, Vec<i64>)> {
    let n = m.len() + 1;
    let mut parts = vec![0i64; n];
    for i in (0..n - 1).rev() {
        parts[i] = parts[i + 1] + m[i];
    }
    let mut out = BTreeSet::new();
    for row in 0..n {
        if row > 0 && parts[row - 1] == parts[row] {
            continue;
        }
        let mut grown = parts.clone();
        grown[row] += 1;
        let last = grown[n - 1];
        let shifted: Vec<i64> = grown.iter().map(|x| x - last).collect();
        let weight: Vec<i64> = (0..n - 1).map(|i| shifted[i] - shifted[i + 1]).collect();
        let kind = match row {
            0 => LrEdgeKind::A,
            r if r == n - 1 => LrEdgeKind::C,
            r => LrEdgeKind::B { i: r },
        };
        out.insert((kind, weight));
    }
    out
}

/// Every injection `g` with `g(k) > k`, searched by backtracking.
pub fn injection_oracle(removable: &[usize], addable: &[usize]) -> bool {
    fn go(rest: &[usize], addable: &[usize], used: &mut Vec<bool>) -> bool {
        let Some((&k, tail)) = rest.split_first() else {
            return true;
        };
        for (j, &a) in addable.iter().enumerate() {
            if !used[j] && a > k {
                used[j] = true;
                if go(tail, addable, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    go(removable, addable, &mut vec![false; addable.len()])
}
