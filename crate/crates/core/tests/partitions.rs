mod common;

use std::collections::BTreeSet;

use cobcat::{enumerate_set_partitions, enumerate_weighted_partitions, stack_partitions, SetPartition, SizeLimit};
use common::*;
use proptest::prelude::*;

#[test]
fn counts_match_bell_triangle() {
    for k in 0..=8 {
        for n in 0..=k {
            let all = enumerate_set_partitions(n, k - n, SizeLimit::default()).unwrap();
            assert_eq!(all.len() as u64, bell(k), "n={n}, m={}", k - n);
        }
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for (n, m) in [(0, 0), (1, 2), (2, 2), (3, 2), (0, 6)] {
        let k = n + m;
        let labels = labels(n, m);
        let brute: BTreeSet<SetPartition> = brute_partitions(k)
            .into_iter()
            .map(|p| SetPartition::new(n, m, p.into_iter().map(|b| b.into_iter().map(|i| labels[i]).collect()).collect()).unwrap())
            .collect();
        let ours = enumerate_set_partitions(n, m, SizeLimit::default()).unwrap();
        let set: BTreeSet<SetPartition> = ours.iter().cloned().collect();
        assert_eq!(set.len(), ours.len(), "duplicates for ({n},{m})");
        assert_eq!(set, brute);
    }
}

#[test]
fn weighted_count_formula() {
    for (n, m, k) in [(0, 3, 2), (2, 1, 3), (1, 1, 1), (2, 2, 2)] {
        let bases = enumerate_set_partitions(n, m, SizeLimit::default()).unwrap();
        let expected: u64 = bases.iter().map(|p| (k as u64).pow(p.num_blocks() as u32)).sum();
        let all = enumerate_weighted_partitions(n, m, k, SizeLimit::default()).unwrap();
        assert_eq!(all.len() as u64, expected);
        assert!(all.iter().all(|w| w.is_below(k)));
        assert!(all.windows(2).all(|w| w[0] != w[1]));
    }
}

#[test]
fn configurable_limit() {
    assert!(enumerate_set_partitions(2, 2, SizeLimit(3)).is_err());
    assert!(enumerate_weighted_partitions(2, 2, 2, SizeLimit(4)).is_ok());
}

/// Every triple of partitions with all four interface sizes at most 3.
#[test]
fn stacking_is_associative_exhaustively() {
    let lim = SizeLimit::default();
    let parts = |a: usize, b: usize| enumerate_set_partitions(a, b, lim).unwrap();
    let mut checked = 0u64;
    for n in 0..=3 {
        for m in 0..=3 {
            for l in 0..=3 {
                for k in 0..=3 {
                    let (xs, ys, zs) = (parts(n, m), parts(m, l), parts(l, k));
                    for x in &xs {
                        let xy: Vec<_> = ys.iter().map(|y| stack_partitions(x, y).unwrap().0).collect();
                        for (y, xy) in ys.iter().zip(&xy) {
                            for z in &zs {
                                let left = stack_partitions(xy, z).unwrap().0;
                                let yz = stack_partitions(y, z).unwrap().0;
                                let right = stack_partitions(x, &yz).unwrap().0;
                                assert_eq!(left, right);
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    assert_eq!(checked, 17_786_152);
}

#[test]
fn glued_circles_total_interface() {
    let mut r = rng(7);
    for _ in 0..500 {
        let (n, m, l) = (r_usize(&mut r), r_usize(&mut r), r_usize(&mut r));
        let a = random_partition(&mut r, n, m);
        let b = random_partition(&mut r, m, l);
        let (c, report) = stack_partitions(&a, &b).unwrap();
        assert_eq!(report.total_glued(), m);
        assert_eq!(report.num_surviving, c.num_blocks());
        let used_lower: usize = report.classes.iter().map(|c| c.lower_blocks.len()).sum();
        let used_upper: usize = report.classes.iter().map(|c| c.upper_blocks.len()).sum();
        assert_eq!((used_lower, used_upper), (a.num_blocks(), b.num_blocks()));
    }
}

fn r_usize(r: &mut TestRng) -> usize {
    use rand::Rng;
    r.gen_range(0..=4)
}

proptest! {
    #[test]
    fn canonicalization_is_order_independent(seed in any::<u64>(), n in 0usize..4, m in 0usize..4) {
        let mut r = rng(seed);
        let p = random_partition(&mut r, n, m);
        let mut blocks: Vec<_> = p.blocks().to_vec();
        blocks.reverse();
        for b in &mut blocks {
            b.reverse();
        }
        let again = SetPartition::new(n, m, blocks).unwrap();
        prop_assert_eq!(&again, &p);
        prop_assert_eq!(SetPartition::new(n, m, again.blocks().to_vec()).unwrap(), again);
    }
}
