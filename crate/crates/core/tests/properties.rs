use kmeasure::bijection::{offset_vector, phi, psi, select_forward, SelectionStrategy};
use kmeasure::counting::{enumerate_partitions, order_bound};
use kmeasure::statistics::{
    contains_km_polygon, durfee_polygon_order, durfee_side, k_measure, k_measure_oracle,
    km_polygon_shape, Gap,
};
use kmeasure::{PartIndexSet, Partition};
use proptest::prelude::*;

fn gap(k: u64) -> Gap {
    Gap::new(k).unwrap()
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1i64..=40, 0..14).prop_map(|v| Partition::new(v).unwrap())
}

proptest! {
    #[test]
    fn canonicalization_is_idempotent(p in arb_partition()) {
        let again = Partition::new(p.parts().iter().map(|&v| v as i64)).unwrap();
        prop_assert_eq!(&again, &p);
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn replace_preserves_length_and_shifts_weight(
        p in arb_partition(),
        picks in prop::collection::vec(any::<bool>(), 14),
        values in prop::collection::vec(1i64..=50, 14),
    ) {
        let idx: Vec<usize> = (0..p.len()).filter(|&i| picks[i]).collect();
        let s = PartIndexSet::new(idx.clone()).unwrap();
        let new: Vec<i64> = idx.iter().map(|&i| values[i]).collect();
        let old: u64 = p.subsequence_values(&s).unwrap().iter().sum();
        let q = p.replace_parts(&s, &new).unwrap();
        prop_assert_eq!(q.len(), p.len());
        prop_assert_eq!(q.weight() + old, p.weight() + new.iter().sum::<i64>() as u64);
    }

    #[test]
    fn measure_is_monotone_in_k(p in arb_partition()) {
        prop_assert_eq!(k_measure(&p, gap(1)), p.distinct_values());
        for k in 1..8 {
            prop_assert!(k_measure(&p, gap(k + 1)) <= k_measure(&p, gap(k)));
            prop_assert_eq!(k_measure(&p, gap(k)), k_measure_oracle(&p, gap(k)));
        }
    }

    #[test]
    fn phi_lands_in_d_for_every_strategy(p in arb_partition(), k in 1u64..=6) {
        let k = gap(k);
        for m in 0..=k_measure(&p, k) {
            for s in SelectionStrategy::ALL {
                let image = phi(&p, k, m, s).unwrap();
                prop_assert!(contains_km_polygon(&image, k, m));
                prop_assert_eq!(image.weight(), p.weight());
                prop_assert_eq!(image.len(), p.len());
                let sel = select_forward(&p, k, m, s).unwrap();
                let vals = p.subsequence_values(&sel).unwrap();
                prop_assert!(vals.windows(2).all(|w| w[0] >= w[1] + k.get()));
            }
        }
    }

    #[test]
    fn psi_lands_in_c_when_offsets_are_linear(p in arb_partition(), k in 1u64..=6) {
        let k = gap(k);
        for m in 0..=durfee_polygon_order(&p, k) {
            for s in SelectionStrategy::ALL {
                let pre = psi(&p, k, m, s).unwrap();
                prop_assert_eq!(pre.weight(), p.weight());
                prop_assert_eq!(pre.len(), p.len());
                if k.get() % 2 == 0 || m % 2 == 1 {
                    prop_assert!(k_measure(&pre, k) >= m);
                }
            }
        }
    }
}

#[test]
fn offsets_zero_sum_and_antisymmetric() {
    for k in 1..=10 {
        for m in 0..=20usize {
            let d = offset_vector(gap(k), m).deltas;
            assert_eq!(d.iter().sum::<i64>(), 0);
            assert!((0..m).all(|j| d[j] == -d[m - 1 - j]));
        }
    }
}

#[test]
fn exhaustive_statistics_invariants() {
    for n in 0..=30u64 {
        for p in enumerate_partitions(n) {
            assert_eq!(Partition::from_parts(p.parts().to_vec()).unwrap(), p);
            for k in 1..=5 {
                let k = gap(k);
                assert_eq!(k_measure(&p, k), k_measure_oracle(&p, k), "{p} k={k}");
                for m in 0..=n as usize {
                    let threshold = contains_km_polygon(&p, k, m);
                    assert_eq!(threshold, km_polygon_shape(k, m).fits_in(&p), "{p} k={k} m={m}");
                    if contains_km_polygon(&p, k, m + 1) {
                        assert!(threshold, "containment not monotone: {p} k={k} m={m}");
                    }
                }
                assert!(durfee_polygon_order(&p, k) <= order_bound(n, k));
            }
        }
    }
    for n in 0..=40u64 {
        for p in enumerate_partitions(n) {
            assert_eq!(durfee_polygon_order(&p, gap(2)), durfee_side(&p));
        }
    }
}
