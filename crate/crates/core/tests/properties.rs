//! Property-based invariants for the matrix bijection.

use proptest::prelude::*;

use schmidt_partitions::phi::{phi_forward, phi_inverse, IntMatrix};
use schmidt_partitions::types::schmidt_weight;

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=4usize, 1..=4usize).prop_flat_map(|(k, t)| {
        prop::collection::vec(prop::collection::vec(-20..=20i64, t), k)
    })
}

proptest! {
    #[test]
    fn round_trip_matrix(entries in matrix_strategy()) {
        let a = IntMatrix::new(entries).unwrap();
        let lam = phi_forward(&a);
        prop_assert_eq!(phi_inverse(&lam, a.rows()).unwrap(), a);
    }

    #[test]
    fn round_trip_sequence(k in 1..=4usize, t in 1..=4usize, seed in prop::collection::vec(-20..=20i64, 16)) {
        let s = &seed[..k * t];
        let a = phi_inverse(s, k).unwrap();
        prop_assert_eq!(phi_forward(&a), s);
    }

    #[test]
    fn weight_transport(entries in matrix_strategy()) {
        let a = IntMatrix::new(entries).unwrap();
        let lam = phi_forward(&a);
        prop_assert_eq!(schmidt_weight(&lam, a.rows()), a.entry_sum());
    }
}
