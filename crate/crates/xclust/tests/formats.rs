use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use xclust::core::{AxisCut, Dataset, Node, ThresholdTree};
use xclust::{csv_io, graph_io, tree_json};
use xclust::core::reductions::{generate_graph, GraphFamily};

fn random_tree(rng: &mut StdRng, leaves: usize, d: usize) -> ThresholdTree {
    fn grow(rng: &mut StdRng, leaves: usize, d: usize) -> Node {
        if leaves == 1 {
            return Node::Leaf(0);
        }
        let left = rng.gen_range(1..leaves);
        Node::split(
            AxisCut::new(rng.gen_range(0..d), rng.gen::<f64>()),
            grow(rng, left, d),
            grow(rng, leaves - left, d),
        )
    }
    ThresholdTree::with_dfs_ids(grow(rng, leaves, d))
}

proptest! {
    #[test]
    fn tree_json_round_trip_routes_identically(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let tree = random_tree(&mut rng, 5, 3);
        let back = tree_json::from_str(&tree_json::to_string(&tree)).unwrap();
        prop_assert_eq!(&back, &tree);
        for _ in 0..100 {
            let x: Vec<f64> = (0..3).map(|_| rng.gen()).collect();
            prop_assert_eq!(back.route(&x).unwrap(), tree.route(&x).unwrap());
        }
    }

    #[test]
    fn csv_round_trip_is_exact(rows in proptest::collection::vec(proptest::collection::vec(-1e12..1e12f64, 3), 1..20)) {
        let ds = Dataset::new(rows).unwrap();
        let text = csv_io::dataset_to_string(&ds);
        prop_assert_eq!(csv_io::read_dataset(text.as_bytes(), false).unwrap(), ds);
    }

    #[test]
    fn graph_text_round_trip(seed in 0u64..500, edges in 1usize..12) {
        let family = GraphFamily::RandomTriangleFree { vertices: 12, edges, max_degree: 3 };
        let g = generate_graph(family, seed).unwrap();
        prop_assert_eq!(graph_io::parse_graph(&graph_io::format_graph(&g)).unwrap(), g);
    }
}

#[test]
fn header_round_trip() {
    let ds = csv_io::read_dataset("a,b\n0.25,1\n".as_bytes(), true).unwrap();
    assert_eq!(csv_io::dataset_to_string(&ds), "a,b\n0.25,1\n");
}
