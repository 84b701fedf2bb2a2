mod common;

use common::{random_tree, rng, uniform_dataset};
use proptest::prelude::*;

proptest! {
    #[test]
    fn induced_partition_is_a_partition(seed in any::<u64>(), leaves in 1usize..8, d in 1usize..4, n in 1usize..40) {
        let mut r = rng(seed);
        let tree = random_tree(&mut r, leaves, d);
        let ds = uniform_dataset(&mut r, n, d);
        let p = tree.induced_partition(&ds).unwrap();
        prop_assert_eq!(p.len(), leaves);
        let mut seen = vec![0; n];
        for c in p.clusters() {
            for &i in c {
                seen[i] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&s| s == 1));
        prop_assert_eq!(tree.num_leaves(), tree.num_internal() + 1);
    }

    #[test]
    fn leaf_boxes_match_routing(seed in any::<u64>(), leaves in 1usize..8, d in 1usize..4) {
        let mut r = rng(seed);
        let tree = random_tree(&mut r, leaves, d);
        let ds = uniform_dataset(&mut r, 60, d);
        let boxes = tree.leaf_boxes(d).unwrap();
        let p = tree.induced_partition(&ds).unwrap();
        for (id, cluster) in p.clusters().iter().enumerate() {
            let inside: Vec<usize> = (0..ds.len()).filter(|&i| boxes[id].contains(ds.point(i))).collect();
            prop_assert_eq!(&inside, cluster);
        }
    }
}
