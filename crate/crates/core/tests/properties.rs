//! Randomized invariants on the exact linear algebra kernel, checked against
//! the independent cofactor oracle from `common`.

mod common;

use common::cofactor_det;
use proptest::prelude::*;

use totpos::exactmat::{rat, ExactMatrix, Rat};
use totpos::tpkit::{check_tp, CheckMethod};

fn small_rat() -> impl Strategy<Value = Rat> + Clone {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn nonneg_rat() -> impl Strategy<Value = Rat> + Clone {
    (0i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn pos_rat() -> impl Strategy<Value = Rat> + Clone {
    (1i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn matrix(n: usize, entry: impl Strategy<Value = Rat> + Clone) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(prop::collection::vec(entry, n), n)
        .prop_map(|rows| ExactMatrix::from_rat_rows(rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bareiss_matches_cofactor_oracle(m in matrix(4, small_rat())) {
        prop_assert_eq!(m.det().unwrap(), cofactor_det(&m));
    }

    #[test]
    fn det_is_transpose_invariant(m in matrix(4, small_rat())) {
        prop_assert_eq!(m.det().unwrap(), m.transpose().det().unwrap());
    }

    #[test]
    fn det_is_multiplicative(a in matrix(3, small_rat()), b in matrix(3, small_rat())) {
        let prod = a.mat_mul(&b).unwrap();
        prop_assert_eq!(prod.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn tp_verdict_survives_positive_scaling(
        m in matrix(4, nonneg_rat()),
        left in prop::collection::vec(pos_rat(), 4),
        right in prop::collection::vec(pos_rat(), 4),
    ) {
        let base = check_tp(&m, CheckMethod::Brute, 4).unwrap();
        let scaled_m = m.diag_scale(&left, &right).unwrap();
        let scaled = check_tp(&scaled_m, CheckMethod::Brute, 4).unwrap();
        prop_assert_eq!(base.status, scaled.status);
        match (base.witness, scaled.witness) {
            (None, None) => {}
            (Some(a), Some(b)) => prop_assert_eq!(a.spec, b.spec),
            _ => prop_assert!(false, "witness presence changed under scaling"),
        }
    }

    #[test]
    fn neville_agrees_with_brute_on_nonneg(m in matrix(4, nonneg_rat())) {
        let brute = check_tp(&m, CheckMethod::Brute, 4).unwrap();
        let neville = check_tp(&m, CheckMethod::Neville, 4).unwrap();
        prop_assert_eq!(brute.status, neville.status);
    }
}
