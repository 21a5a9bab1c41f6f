use std::collections::BTreeSet;

use indexcode_core::{
    cyclic_index, length_lower_bound, lift_code, lift_problem, GF2Matrix, GF2Vector,
    IndexCodingProblem, LiftSpec, LinearIndexCode,
};
use proptest::prelude::*;

fn subset(k: usize, mask: u64) -> BTreeSet<usize> {
    (1..k).filter(|a| mask >> (a - 1) & 1 == 1).collect()
}

fn problem() -> impl Strategy<Value = IndexCodingProblem> {
    (2usize..=10).prop_flat_map(|k| {
        prop::collection::vec(any::<u64>(), k).prop_map(move |masks| {
            IndexCodingProblem::per_receiver(k, masks.iter().map(|&m| subset(k, m))).unwrap()
        })
    })
}

fn uniform_problem() -> impl Strategy<Value = IndexCodingProblem> {
    (2usize..=12, any::<u64>())
        .prop_map(|(k, mask)| IndexCodingProblem::uniform(k, subset(k, mask)).unwrap())
}

fn problem_and_code() -> impl Strategy<Value = (IndexCodingProblem, LinearIndexCode)> {
    problem().prop_flat_map(|p| {
        let k = p.k();
        let supports = prop::collection::vec(prop::collection::btree_set(1..=k, 1..=k), 1..=k);
        (
            Just(p),
            supports.prop_map(move |s| LinearIndexCode::new(k, s).unwrap()),
        )
    })
}

fn matrix(max: usize) -> impl Strategy<Value = GF2Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), c), r).prop_map(move |rows| {
            GF2Matrix::from_rows(c, rows.iter().map(|b| GF2Vector::from_bits(b)).collect()).unwrap()
        })
    })
}

fn lift(p: &IndexCodingProblem, m: usize) -> IndexCodingProblem {
    lift_problem(p, LiftSpec::new(m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rank_of_transpose(m in matrix(64)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert!(m.rank() <= m.rows().min(m.cols()));
    }

    #[test]
    fn span_membership_agrees_with_rank(m in matrix(64), bits in prop::collection::vec(any::<bool>(), 64)) {
        let v = GF2Vector::from_bits(&bits[..m.rows()]);
        let grown = m.augment_column(&v).unwrap();
        prop_assert_eq!(m.in_span(&v).unwrap(), grown.rank() == m.rank());
    }

    #[test]
    fn column_combinations_stay_in_span(m in matrix(40), pick in any::<u64>()) {
        let mut v = GF2Vector::zeros(m.rows());
        for c in (0..m.cols()).filter(|c| pick >> c & 1 == 1) {
            v.xor_assign(&m.column(c));
        }
        prop_assert!(m.in_span(&v).unwrap());
        prop_assert_eq!(m.augment_column(&v).unwrap().rank(), m.rank());
    }

    #[test]
    fn problem_json_round_trip(p in problem()) {
        prop_assert_eq!(IndexCodingProblem::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn code_json_round_trip((_p, c) in problem_and_code()) {
        prop_assert_eq!(LinearIndexCode::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn receivers_never_know_their_demand(p in problem()) {
        for k in 1..=p.k() {
            let known = p.antidote_indices(k).unwrap();
            prop_assert!(!known.contains(&k));
            prop_assert_eq!(known.len(), p.offsets(k).len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn lift_preserves_length((p, c) in problem_and_code(), m in 1usize..=6) {
        let lifted = lift_code(&p, &c, LiftSpec::new(m).unwrap()).unwrap();
        prop_assert_eq!(lifted.length(), c.length());
        prop_assert_eq!(lifted.k(), m * p.k());
    }

    #[test]
    fn lift_composes((p, c) in problem_and_code(), m in 1usize..=3, n in 1usize..=3) {
        let inner = lift(&p, n);
        prop_assert_eq!(lift(&inner, m), lift(&p, m * n));
        let spec = |x| LiftSpec::new(x).unwrap();
        let twice = lift_code(&inner, &lift_code(&p, &c, spec(n)).unwrap(), spec(m)).unwrap();
        prop_assert_eq!(twice, lift_code(&p, &c, spec(m * n)).unwrap());
    }

    #[test]
    fn lift_keeps_lower_bound(p in problem(), m in 1usize..=4) {
        prop_assert_eq!(length_lower_bound(&lift(&p, m)), length_lower_bound(&p));
    }

    #[test]
    fn lifted_antidotes_are_symmetric(p in problem(), m in 1usize..=4) {
        let lifted = lift(&p, m);
        let (k_base, total) = (p.k(), lifted.k());
        for k in 1..=k_base {
            let mut expected = lifted.antidote_indices(k).unwrap();
            expected.insert(k);
            for j in 0..m {
                let other = cyclic_index(total, k + j * k_base);
                let mut want = expected.clone();
                want.remove(&other);
                prop_assert_eq!(lifted.antidote_indices(other).unwrap(), want);
            }
        }
    }

    #[test]
    fn uniform_patterns_stay_uniform_under_lift(p in uniform_problem(), m in 1usize..=3) {
        prop_assert!(lift(&p, m).is_uniform());
    }
}
