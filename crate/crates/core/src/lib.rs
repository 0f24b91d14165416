//! Combinatorics of the modular McKay graph of `SL_n(p)` with respect to its
//! natural module.
//!
//! Vertices are `p`-restricted dominant weights. The crate provides the
//! weight arithmetic ([`weights`]), the characteristic-zero graph ([`char0`]),
//! conormal indices of partitions ([`conormal`]), the certified edge moves
//! ([`moves`]), explicit short paths ([`planner`]) and the finite certified
//! subgraph with its distances ([`graph`]).

pub mod char0;
pub mod conormal;
pub mod error;
pub mod export;
pub mod graph;
pub mod moves;
pub mod planner;
pub mod verify;
pub mod weights;

pub use char0::{canonical_path_char0, char0_distance, lr_neighbors, LrEdgeKind};
pub use conormal::{
    addable_indices, bk_children, block_form, conormal_indices, removable_indices, IndexSets,
};
pub use error::{Error, Result};
pub use graph::{
    bfs_distances, build_certified_graph, enumerate_p_restricted, subgraph_diameter,
    CertifiedGraph, Diameter,
};
pub use moves::{
    certified_moves, certify_via_conormal, move_add_first, move_clear_forward, move_clear_last,
    validate_move, Move,
};
pub use planner::{
    canonical_set, capital_m_of, ell, lambda_zero, path_from_m, plan_path, s_mu, PathPlan,
};
pub use weights::{
    diameter_bound, is_subdominant, p_adic_decompose, partition_to_weight, steinberg_weight,
    weight_to_partition, DominantWeight, PartitionLabel, ScaledRootCoefficients,
};

/// Trial-division primality test, enough for command-line parameters.
pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

#[cfg(test)]
mod tests {
    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&p| super::is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
