use kostant_core::lattice::{deform, in_positive_cone, is_regular};
use kostant_core::reference::kostant_partition_bruteforce;
use kostant_core::rep::RayPolynomial;
use kostant_core::residue::{
    iterated_residue, iterated_residue_substituted, kernel_exponents, kostant_partition_identity_term,
    kostant_signed_sum, special_permutations,
};
use kostant_core::{kostant_partition, BigInt, BigRational, Permutation, RationalVector, SignRule};
use proptest::prelude::*;

fn zero_sum(rank: usize, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-bound..=bound, rank).prop_map(|mut v| {
        let s: i64 = v.iter().sum();
        v.push(-s);
        v
    })
}

fn cone_vector(max_rank: usize, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    (2..=max_rank).prop_flat_map(move |r| zero_sum(r, bound)).prop_filter("in cone", |a| {
        in_positive_cone(&RationalVector::from_integers(a).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matches_enumeration(a in cone_vector(4, 4)) {
        let v = RationalVector::from_integers(&a).unwrap();
        prop_assert_eq!(kostant_partition(&v).unwrap(), kostant_partition_bruteforce(&v).unwrap());
    }

    #[test]
    fn nonnegative_prefix_uses_identity_only(
        head in (2usize..=4).prop_flat_map(|r| prop::collection::vec(0i64..8, r))
    ) {
        let mut a = head.clone();
        a.push(-head.iter().sum::<i64>());
        let v = RationalVector::from_integers(&a).unwrap();
        let regularized = if is_regular(&v) { v.clone() } else { deform(&v).unwrap() };
        prop_assert_eq!(special_permutations(&regularized), vec![Permutation::identity(head.len())]);
        prop_assert_eq!(kostant_partition(&v).unwrap(), kostant_partition_identity_term(&v).unwrap());
    }

    #[test]
    fn regular_vectors_need_no_deformation(a in cone_vector(4, 7)) {
        let v = RationalVector::from_integers(&a).unwrap();
        prop_assume!(is_regular(&v));
        let mut plain = special_permutations(&v);
        let mut deformed = special_permutations(&deform(&v).unwrap());
        plain.sort();
        deformed.sort();
        prop_assert_eq!(plain, deformed);
    }

    #[test]
    fn both_residue_forms_agree(a in zero_sum(3, 5), index in 0usize..6) {
        let w = &Permutation::all(3)[index];
        let e = kernel_exponents(&a.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        prop_assert_eq!(iterated_residue(w, &e), iterated_residue_substituted(w, &e));
    }
}

#[test]
fn inversion_rule_is_rejected_by_enumeration() {
    // A witness for which the two candidate sign rules differ.
    let mut witness = None;
    'search: for a in -3i64..=3 {
        for b in -3i64..=3 {
            for c in -3i64..=3 {
                let v = RationalVector::from_integers(&[a, b, c, -a - b - c]).unwrap();
                if !in_positive_cone(&v) {
                    continue;
                }
                if kostant_signed_sum(&v, SignRule::Inversions).unwrap()
                    != kostant_signed_sum(&v, SignRule::Descents).unwrap()
                {
                    witness = Some(v);
                    break 'search;
                }
            }
        }
    }
    let v = witness.expect("rules differ somewhere at rank 3");
    let truth = kostant_partition_bruteforce(&v).unwrap().to_bigint();
    assert_eq!(kostant_signed_sum(&v, SignRule::Descents).unwrap(), truth);
    assert_ne!(kostant_signed_sum(&v, SignRule::Inversions).unwrap(), truth);
}

#[test]
fn polynomial_along_regular_rays() {
    // Regular directions in the interior of the cone.
    let directions: [&[i64]; 3] = [&[2, 1, -3], &[3, 2, -1, -4], &[6, -1, 4, -2, -7]];
    for d in directions {
        let d = RationalVector::from_integers(d).unwrap();
        assert!(is_regular(&d) && in_positive_cone(&d));
        let r = d.rank();
        let degree = r * (r - 1) / 2;
        let values: Vec<BigRational> = (1..=degree + 3)
            .map(|n| {
                let point = d.scale(&BigRational::from_integer(n.into()));
                BigRational::from_integer(kostant_partition(&point).unwrap().to_bigint())
            })
            .collect();
        let fit = RayPolynomial::interpolate(&BigInt::from(1), &values[..=degree]);
        for (i, v) in values.iter().enumerate() {
            assert_eq!(&fit.eval(&BigInt::from(i + 1)), v, "direction {d}, N = {}", i + 1);
        }
        assert!(fit.degree() <= degree);
    }
}

#[test]
fn huge_exponents_are_cheap() {
    let n = BigInt::from(10u64.pow(12));
    let a = RationalVector::from_big_integers(&[n.clone(), BigInt::from(0), -n.clone()]).unwrap();
    // Partitions of n(e_1 − e_3): x·(e_1−e_2) + x·(e_2−e_3) + (n−x)·(e_1−e_3), 0 ≤ x ≤ n.
    assert_eq!(kostant_partition(&a).unwrap().to_bigint(), n + 1);
}
