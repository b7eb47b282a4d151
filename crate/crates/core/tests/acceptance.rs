//! Acceptance gate: ten exact criteria, each a separate test printing one
//! pass line (run with `--nocapture` to see them). Every check is integer
//! combinatorics with tolerance zero.

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use schmidt_partitions::diamonds::{diamond_to_tuple, tuple_to_diamond, Diamond};
use schmidt_partitions::enumerate::{
    count, diamonds_any, enumerate, ktuples, overpartitions, partitions, qbar_sequences,
    verify_bijection, Family, FamilySpec, TheoremId,
};
use schmidt_partitions::overlays::{over_strict_tuple_to_schmidt, schmidt_over_to_strict_tuple};
use schmidt_partitions::phi::{classify_matrix, classify_sequence, phi_forward, phi_inverse, IntMatrix};
use schmidt_partitions::qseries::{bivariate_over_gf, diamond_gf, overpartition_gf, pochhammer};
use schmidt_partitions::types::{
    schmidt_weight, Overpartition, Partition, StrictOverpartition, TupleMember,
};

fn pass(n: usize, what: &str) {
    println!("PASS criterion {n}: {what}");
}

#[test]
fn criterion_01_phi_worked_example() {
    let a = IntMatrix::new(vec![
        vec![5, 5, 4, 3],
        vec![7, 4, 1, 0],
        vec![-5, -9, 0, 1],
    ])
    .unwrap();
    let lam = phi_forward(&a);
    assert_eq!(lam, vec![7, 7, 4, 0, -1, -4, 5, 4, 3, 4, 1, 1]);
    assert_eq!(phi_inverse(&lam, 3).unwrap(), a);
    pass(1, "matrix bijection worked example, both directions");
}

#[test]
fn criterion_02_phi_random_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5c41_d7);
    for _ in 0..10_000 {
        let k = rng.gen_range(1..=5usize);
        let t = rng.gen_range(1..=5usize);
        let entries: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..t).map(|_| rng.gen_range(-9..=9i64)).collect())
            .collect();
        let a = IntMatrix::new(entries).unwrap();
        let lam = phi_forward(&a);
        assert_eq!(phi_inverse(&lam, k).unwrap(), a);

        // the other direction: any integer sequence of length kt is hit
        let s: Vec<i64> = (0..k * t).map(|_| rng.gen_range(-9..=9i64)).collect();
        let b = phi_inverse(&s, k).unwrap();
        assert_eq!(phi_forward(&b), s);
    }
    pass(2, "10,000 random round trips, entries in [-9,9], k,t <= 5");
}

#[test]
fn criterion_03_classification_exhaustive() {
    let mut checked = 0u64;
    for k in 1..=3usize {
        for t in 1..=3usize {
            let cells = k * t;
            let total = 4u64.pow(cells as u32);
            for code in 0..total {
                let mut c = code;
                let mut entries = vec![vec![0i64; t]; k];
                for i in 0..k {
                    for j in 0..t {
                        entries[i][j] = (c % 4) as i64;
                        c /= 4;
                    }
                }
                let a = IntMatrix::new(entries).unwrap();
                let mc = classify_matrix(&a).unwrap();
                let sc = classify_sequence(&phi_forward(&a));
                assert_eq!(
                    mc.weak_rows, sc.weakly_decreasing,
                    "weak iff failed for {:?}",
                    a.entries()
                );
                assert_eq!(
                    mc.strict_rows_with_zero_tail, sc.strictly_decreasing_mod_zero_tail,
                    "strict iff failed for {:?}",
                    a.entries()
                );
                checked += 1;
            }
        }
    }
    pass(3, &format!("both iff-classifications on {checked} matrices"));
}

#[test]
fn criterion_04_strict_tuple_theorem() {
    for k in [2, 3] {
        let report = verify_bijection(TheoremId::PQ, 15, k);
        assert!(report.all_ok(), "{}", report.render_text());
    }
    pass(4, "strict tuples <-> Schmidt sequences, n <= 15, k in {2,3}");
}

#[test]
fn criterion_05_unrestricted_tuple_theorem() {
    for k in [2, 3] {
        let report = verify_bijection(TheoremId::FG, 12, k);
        assert!(report.all_ok(), "{}", report.render_text());
    }
    for n in 1..=12 {
        let lhs = count(
            &FamilySpec::new(Family::UnrestrictedSchmidtAny, n).with_k(2),
        )
        .unwrap();
        let rhs = count(&FamilySpec::new(Family::Ktuple, n).with_k(2)).unwrap();
        assert_eq!(lhs, rhs, "n = {n}");
    }
    pass(5, "unrestricted tuples <-> sequences, n <= 12, plus the k = 2 corollary");
}

#[test]
fn criterion_06_diamond_theorem() {
    for k in [1, 2] {
        let report = verify_bijection(TheoremId::HD, 6, k);
        assert!(report.all_ok(), "{}", report.render_text());
    }

    // the weight-73 worked example, both directions
    let tuple = vec![
        TupleMember::Partition(Partition::new(vec![5, 2]).unwrap()),
        TupleMember::Overpartition(
            Overpartition::new(vec![7, 4, 4, 2], vec![false, false, true, false]).unwrap(),
        ),
        TupleMember::Partition(Partition::new(vec![11, 3, 2, 1]).unwrap()),
        TupleMember::Overpartition(
            Overpartition::new(vec![6, 5, 3], vec![true, false, true]).unwrap(),
        ),
        TupleMember::Partition(Partition::new(vec![8, 8, 2]).unwrap()),
    ];
    let expected = vec![
        37, 34, 31, 22, 23, 22, 20, 20, 19, 17, 11, 9, 11, 5, 8, 3, 3, 1, 0, 0, 0,
    ];
    let d = tuple_to_diamond(&tuple, 2).unwrap();
    assert_eq!(d.entries(), expected.as_slice());
    assert_eq!((d.weight(), d.t(), d.nonzero_count()), (73, 4, 18));
    let back = Diamond::new(expected, 2).unwrap();
    assert_eq!(diamond_to_tuple(&back).unwrap(), tuple);
    pass(6, "diamond bijection, n <= 6, k in {1,2}, plus the weight-73 example");
}

#[test]
fn criterion_07_diamond_generating_function() {
    let gf1 = diamond_gf(1, 10).unwrap();
    for n in 0..=10 {
        assert_eq!(
            gf1.coeff(n).to_i64().unwrap(),
            diamonds_any(n as i64, 1).len() as i64,
            "k = 1, n = {n}"
        );
    }
    assert_eq!(gf1.coeff(1).to_i64().unwrap(), 4);
    assert_eq!(diamonds_any(1, 1).len(), 4);

    let gf2 = diamond_gf(2, 8).unwrap();
    for n in 0..=8 {
        assert_eq!(
            gf2.coeff(n).to_i64().unwrap(),
            diamonds_any(n as i64, 2).len() as i64,
            "k = 2, n = {n}"
        );
    }
    pass(7, "diamond generating function vs enumeration, k = 1 n <= 10, k = 2 n <= 8");
}

#[test]
fn criterion_08_original_theorem_and_durfee_refinement() {
    for n in 1..=30 {
        let schmidt = count(&FamilySpec::new(Family::SchmidtAny, n).with_k(2)).unwrap();
        let parts = count(&FamilySpec::new(Family::Partitions, n)).unwrap();
        assert_eq!(schmidt, parts, "n = {n}");
    }
    let report = verify_bijection(TheoremId::Durfee, 20, 2);
    assert!(report.all_ok(), "{}", report.render_text());
    pass(8, "Schmidt count = partition count, n <= 30, with Durfee refinement to n <= 20");
}

#[test]
fn criterion_09_overpartition_theorems() {
    for k in [2, 3] {
        let report = verify_bijection(TheoremId::PbarQbar, 10, k);
        assert!(report.all_ok(), "{}", report.render_text());
        let report = verify_bijection(TheoremId::FbarGbar, 10, k);
        assert!(report.all_ok(), "{}", report.render_text());
    }

    // the weight-79, 6-overline worked example
    let so = |parts: &[i64], marks: &[bool]| {
        StrictOverpartition::new(parts.to_vec(), marks.to_vec()).unwrap()
    };
    let members = vec![
        so(&[9, 6, 4, 2, 1], &[false, false, true, false, false]),
        so(&[13, 8, 7, 3, 1], &[true, false, true, false, true]),
        so(&[11, 7, 5, 2], &[false, true, false, true]),
    ];
    let s = over_strict_tuple_to_schmidt(&members, 3, 5, 2).unwrap();
    assert_eq!(s.parts(), &[33, 30, 25, 21, 19, 18, 16, 14, 10, 7, 6, 4, 2, 1]);
    assert_eq!(
        s.marks(),
        [
            false, true, false, false, false, true, true, true, false, false, false, true,
            false, true
        ]
        .as_slice()
    );
    assert_eq!(s.mark_count(), 6);
    assert_eq!(schmidt_weight(s.parts(), 3), 79);
    let (back, t, r) = schmidt_over_to_strict_tuple(&s, 3).unwrap();
    assert_eq!((back, t, r), (members, 5, 2));

    let report = verify_bijection(TheoremId::OverDurfee, 12, 2);
    assert!(report.all_ok(), "{}", report.render_text());
    pass(9, "overpartition bijections, n <= 10, k in {2,3}, with the weight-79 example and the Durfee corollary to n <= 12");
}

#[test]
fn criterion_10_series_oracles() {
    let order = 25;
    let partition_gf = pochhammer(1, 1, order).invert().unwrap();
    let bipartition_gf = partition_gf.pow(2);
    let over_gf = overpartition_gf(order).unwrap();
    for n in 0..=order {
        assert_eq!(
            partition_gf.coeff(n).to_i64().unwrap(),
            partitions(n as i64).len() as i64,
            "partitions, n = {n}"
        );
        assert_eq!(
            bipartition_gf.coeff(n).to_i64().unwrap(),
            ktuples(n as i64, 2).len() as i64,
            "bipartitions, n = {n}"
        );
        assert_eq!(
            over_gf.coeff(n).to_i64().unwrap(),
            overpartitions(n as i64).len() as i64,
            "overpartitions, n = {n}"
        );
    }

    // bivariate table vs Schmidt 2-overpartitions with s overlines
    let t = bivariate_over_gf(10);
    for n in 1..=10usize {
        for s in 0..=n {
            let mut sequences = 0usize;
            for tt in 1..=n {
                for r in 1..=2usize {
                    sequences += qbar_sequences(n as i64, 2, tt, r, s).len();
                }
            }
            assert_eq!(
                t[n][s].to_i64().unwrap(),
                sequences as i64,
                "n = {n}, s = {s}"
            );
        }
    }
    pass(10, "generating-function coefficients vs enumeration to n <= 25, bivariate table to n <= 10");
}

#[test]
fn staircase_split_by_enumeration() {
    // the third-member length split (t vs < t) corresponds to the r = 3 vs
    // r = 2 cells of the k = 3 theorem; checked by sweeping every cell
    let report = verify_bijection(TheoremId::Staircase, 10, 3);
    assert!(report.all_ok(), "{}", report.render_text());
}

#[test]
fn json_schemas_round_trip() {
    // --json output uses the documented schemas; spot-check both directions
    let spec = FamilySpec::new(Family::D, 3).with_k(1).with_t(1).with_r(3);
    for v in enumerate(&spec).unwrap() {
        let d: Diamond = serde_json::from_value(v.clone()).unwrap();
        assert_eq!(json!(d), v);
    }
}
