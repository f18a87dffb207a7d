use euler_partitions::bijections;
use euler_partitions::partition::{self, PartKind, PartitionClass};
use euler_partitions::qseries::{pochhammer, Count, Monomial, SeriesBuilder, TruncatedSeries};
use euler_partitions::{Partition, RootedPartition};
use proptest::prelude::*;

fn any_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..15, 0..12).prop_map(Partition::from_unsorted)
}

fn odd_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..12, 0..12).prop_map(|v| Partition::from_unsorted(v.into_iter().map(|x| 2 * x + 1).collect()))
}

fn distinct_partition() -> impl Strategy<Value = Partition> {
    prop::collection::btree_set(1u32..40, 0..10).prop_map(|s| Partition::from_unsorted(s.into_iter().collect()))
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in any_partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.rank(), -p.rank());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn sylvester_round_trip(lam in odd_partition()) {
        let mu = bijections::sylvester(&lam).unwrap();
        prop_assert!(mu.has_distinct_parts());
        prop_assert_eq!(mu.weight(), lam.weight());
        prop_assert_eq!(bijections::sylvester_inv(&mu).unwrap(), lam);
    }

    #[test]
    fn sylvester_inverse_round_trip(mu in distinct_partition()) {
        let lam = bijections::sylvester_inv(&mu).unwrap();
        prop_assert!(lam.has_odd_parts());
        prop_assert_eq!(bijections::sylvester(&lam).unwrap(), mu);
    }

    #[test]
    fn iterated_dyson_round_trip(lam in odd_partition()) {
        let mu = bijections::iterated_dyson(&lam).unwrap();
        prop_assert!(mu.has_distinct_parts());
        prop_assert_eq!(mu.weight(), lam.weight());
        prop_assert_eq!(bijections::iterated_dyson_inv(&mu).unwrap(), lam);
    }

    #[test]
    fn dyson_round_trip(lam in any_partition(), r in -3i64..6) {
        // ψ_r is defined on rank ≤ r + 1 whenever the target weight is not negative
        prop_assume!(lam.rank() <= r + 1 && lam.weight() as i64 + r >= 0);
        let mu = bijections::dyson(&lam, r).unwrap();
        prop_assert_eq!(mu.weight() as i64, lam.weight() as i64 + r);
        prop_assert!(mu.rank() >= r - 1);
        prop_assert_eq!(bijections::dyson_inv(&mu, r).unwrap(), lam);
    }

    #[test]
    fn designation_round_trip(p in any_partition(), pick in 0usize..12) {
        prop_assume!(!p.is_empty());
        let index = pick % p.len() + 1;
        let rp = bijections::designate(&p, index).unwrap();
        prop_assert_eq!(bijections::undesignate(&rp), (p, index));
    }

    #[test]
    fn partition_text_round_trip(p in any_partition()) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn reciprocal_inverts(coeffs in prop::collection::vec(-5i64..5, 1..15)) {
        let mut coeffs = coeffs;
        coeffs[0] = 1;
        let order = coeffs.len() - 1;
        let s = TruncatedSeries::from_integers(coeffs, order);
        prop_assert_eq!(s.mul(&s.reciprocal().unwrap()).unwrap(), TruncatedSeries::one(order));
    }
}

#[test]
fn designation_counts_length_sums() {
    // Rooted partitions of n correspond to (partition, part index) pairs.
    for n in 0..=15 {
        let by_length: usize = partition::partitions(n, PartKind::Any).map(|p| p.len()).sum();
        assert_eq!(partition::count(n, PartitionClass::RootedAll) as usize, by_length, "n = {n}");
    }
}

#[test]
fn rooted_enumeration_is_sorted_and_unique() {
    for n in 0..=12 {
        let all: Vec<RootedPartition> = partition::rooted_partitions(n, PartitionClass::RootedAll).collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted, "n = {n}");
    }
}

#[test]
fn euler_product_matches_reciprocal() {
    let lhs = pochhammer(Monomial::neg_q_pow(1), 1, Count::Infinite, 50).unwrap();
    let rhs = pochhammer(Monomial::q_pow(1), 2, Count::Infinite, 50).unwrap().reciprocal().unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(lhs, SeriesBuilder::DistinctProduct.build(50).unwrap());
}

#[test]
fn distinct_counts_match_independent_recurrence() {
    // q(n) via the recurrence on the largest allowed part, independent of the iterator.
    fn q(n: usize, max: usize, memo: &mut Vec<Vec<Option<u64>>>) -> u64 {
        if n == 0 {
            return 1;
        }
        if max == 0 {
            return 0;
        }
        if let Some(v) = memo[n][max] {
            return v;
        }
        let mut v = q(n, max - 1, memo);
        if max <= n {
            v += q(n - max, max - 1, memo);
        }
        memo[n][max] = Some(v);
        v
    }
    let mut memo = vec![vec![None; 41]; 41];
    for n in 0..=40 {
        assert_eq!(partition::count(n as u64, PartitionClass::Distinct), q(n, n, &mut memo), "n = {n}");
    }
}
