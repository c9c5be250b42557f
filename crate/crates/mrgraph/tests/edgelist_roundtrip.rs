#[path = "../../core/tests/common/mod.rs"]
mod common;

use mrgraph::{load_graph, parse_edge_list, write_edge_list};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn edges(g: &mrgraph_core::Graph) -> Vec<(String, String, String)> {
    g.edges()
        .iter()
        .map(|e| {
            (
                g.vertex_name(e.tail).to_string(),
                g.label_name(e.label).to_string(),
                g.vertex_name(e.head).to_string(),
            )
        })
        .collect()
}

fn vertices(g: &mrgraph_core::Graph) -> Vec<String> {
    g.vertices().map(|v| g.vertex_name(v).to_string()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn write_then_parse_preserves_graph(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, 8, 0.15);
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(edges(&back), edges(&g));
        prop_assert_eq!(vertices(&back), vertices(&g));
        prop_assert_eq!(write_edge_list(&back), text);
    }

    #[test]
    fn load_from_disk_matches_parse(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, 6, 0.2);
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("g.tsv");
        std::fs::write(&file, write_edge_list(&g)).unwrap();
        let loaded = load_graph(&file).unwrap();
        prop_assert_eq!(edges(&loaded), edges(&g));
    }
}
