//! Implementations checked against independent brute-force oracles.

use std::collections::BTreeSet;

use mckay_core::conormal::{injection_exists, residue_sets};
use mckay_core::weights::{cartan_apply, scaled_root_coeffs_of};
use mckay_core::{
    addable_indices, char0_distance, conormal_indices, is_subdominant, lr_neighbors,
    p_adic_decompose, partition_to_weight, removable_indices, DominantWeight, PartitionLabel,
};
use proptest::prelude::*;

mod common;

use common::{box_adding_oracle, injection_oracle};

fn weight_strategy(max_n: usize, max_entry: i64) -> impl Strategy<Value = DominantWeight> {
    (2..=max_n)
        .prop_flat_map(move |n| prop::collection::vec(0..=max_entry, n - 1))
        .prop_map(|v| DominantWeight::new(v).unwrap())
}

fn partition_strategy(max_n: usize, max_part: i64) -> impl Strategy<Value = PartitionLabel> {
    (2..=max_n)
        .prop_flat_map(move |n| prop::collection::vec(0..=max_part, n - 1))
        .prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            v.push(0);
            PartitionLabel::new(v).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn lr_neighbors_match_box_adding(w in weight_strategy(8, 6)) {
        let got: BTreeSet<_> = lr_neighbors(&w)
            .into_iter()
            .map(|(k, m)| (k, m.into_entries()))
            .collect();
        prop_assert_eq!(got, box_adding_oracle(w.entries()));
    }

    #[test]
    fn lr_edges_change_f_by_kind(w in weight_strategy(8, 6)) {
        for (kind, next) in lr_neighbors(&w) {
            prop_assert_eq!(next.f_value() - w.f_value(), kind.f_delta(w.n()));
        }
    }

    #[test]
    fn greedy_injection_matches_exhaustive(
        label in partition_strategy(6, 12),
        p in prop::sample::select(vec![2u64, 3, 5]),
    ) {
        for i in addable_indices(&label) {
            let (r, a) = residue_sets(&label, i, p);
            prop_assert_eq!(injection_exists(&r, &a), injection_oracle(&r, &a));
        }
    }

    #[test]
    fn conormal_rows_are_addable_and_include_first(
        label in partition_strategy(8, 12),
        p in prop::sample::select(vec![2u64, 3, 5, 7]),
    ) {
        let addable = addable_indices(&label);
        let conormal = conormal_indices(&label, p);
        prop_assert!(conormal.contains(&1));
        prop_assert!(conormal.iter().all(|i| addable.contains(i)));
    }

    #[test]
    fn index_sets_match_definitions(label in partition_strategy(7, 9)) {
        let parts = label.parts();
        let is_partition = |v: &[i64]| v.windows(2).all(|w| w[0] >= w[1]) && v.iter().all(|&x| x >= 0);
        for i in 1..=parts.len() {
            let mut plus = parts.to_vec();
            plus[i - 1] += 1;
            prop_assert_eq!(addable_indices(&label).contains(&i), is_partition(&plus));
            let mut minus = parts.to_vec();
            minus[i - 1] -= 1;
            prop_assert_eq!(removable_indices(&label).contains(&i), is_partition(&minus));
        }
    }

    #[test]
    fn p_adic_digits_reconstruct(w in weight_strategy(8, 5000), p in 2u64..12) {
        let digits = p_adic_decompose(&w, p);
        let mut total = vec![0i64; w.n() - 1];
        let mut scale = 1i64;
        for d in &digits {
            prop_assert!(d.is_p_restricted(p));
            for (acc, &x) in total.iter_mut().zip(d.entries()) {
                *acc += scale * x;
            }
            scale *= p as i64;
        }
        prop_assert_eq!(total.as_slice(), w.entries());
        prop_assert!(digits.last().is_none_or(|d| !d.is_zero()));
    }

    #[test]
    fn partition_round_trip(w in weight_strategy(10, 20), shift in 0i64..5) {
        let label = w.to_partition();
        prop_assert_eq!(label.to_weight(), w.clone());
        let shifted: Vec<i64> = label.parts().iter().map(|x| x + shift).collect();
        prop_assert_eq!(partition_to_weight(&shifted).unwrap(), w);
    }

    #[test]
    fn cartan_recovers_weight(w in weight_strategy(20, 30)) {
        let scaled = w.to_scaled_root_coeffs();
        prop_assert_eq!(scaled.to_weight_entries(), w.entries().to_vec());
        let n = w.n() as i64;
        let back: Vec<i64> = cartan_apply(scaled.scaled()).iter().map(|x| x / n).collect();
        prop_assert_eq!(back.as_slice(), w.entries());
        prop_assert_eq!(*scaled.scaled().last().unwrap(), w.f_value());
    }

    #[test]
    fn f_is_additive((a, b) in (2usize..10).prop_flat_map(|n| (
        prop::collection::vec(0i64..20, n - 1),
        prop::collection::vec(0i64..20, n - 1),
    ))) {
        let sum: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let (a, b, sum) = (
            DominantWeight::new(a).unwrap(),
            DominantWeight::new(b).unwrap(),
            DominantWeight::new(sum).unwrap(),
        );
        prop_assert_eq!(sum.f_value(), a.f_value() + b.f_value());
    }

    #[test]
    fn sum_identity_on_root_lattice(
        (nu, c) in (2usize..10).prop_flat_map(|n| (
            prop::collection::vec(0i64..10, n - 1),
            prop::collection::vec(-6i64..6, n - 1),
        ))
    ) {
        // lambda - nu = C c, so c are the root coefficients of the difference.
        let diff = cartan_apply(&c);
        let lambda: Vec<i64> = nu.iter().zip(&diff).map(|(a, b)| a + b).collect();
        let s = |v: &[i64]| v.iter().sum::<i64>();
        prop_assert_eq!(s(&lambda) - s(&nu), c[0] + c[c.len() - 1]);
        let n = nu.len() as i64 + 1;
        let scaled: Vec<i64> = scaled_root_coeffs_of(&diff);
        prop_assert_eq!(scaled, c.iter().map(|x| x * n).collect::<Vec<_>>());
    }

    #[test]
    fn char0_distance_dominates_f(w in weight_strategy(4, 2)) {
        let zero = DominantWeight::zero(w.n());
        let d = char0_distance(&zero, &w, 12).unwrap();
        if let Some(d) = d {
            prop_assert!(d as i64 >= w.f_value());
        }
    }
}

#[test]
fn subdominance_is_a_partial_order_compatible_with_f_and_s() {
    for n in 2..=4 {
        let weights: Vec<DominantWeight> = (0..4i64.pow(n as u32 - 1))
            .map(|mut i| {
                let mut v = vec![0; n - 1];
                for slot in v.iter_mut() {
                    *slot = i % 4;
                    i /= 4;
                }
                DominantWeight::new(v).unwrap()
            })
            .collect();
        let le = |a: &DominantWeight, b: &DominantWeight| is_subdominant(a, b).unwrap();
        for a in &weights {
            assert!(le(a, a));
            for b in &weights {
                if le(a, b) {
                    assert!(a.f_value() <= b.f_value());
                    assert!(a.s_sum() <= b.s_sum());
                    if le(b, a) {
                        assert_eq!(a, b);
                    }
                    for c in &weights {
                        if le(b, c) {
                            assert!(le(a, c));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn char0_line_graph_matches_bfs() {
    // For n = 2 the graph is the half-line 0 - 1 - 2 - ... with moves +1 and -1.
    for a in 0..8i64 {
        for b in 0..8i64 {
            let d = char0_distance(
                &DominantWeight::new(vec![a]).unwrap(),
                &DominantWeight::new(vec![b]).unwrap(),
                20,
            )
            .unwrap();
            assert_eq!(d, Some(a.abs_diff(b)));
        }
    }
}
