#![no_main]

use libfuzzer_sys::fuzz_target;
use sqsum_core::graph::{parse_edge_list, write_edge_list};

fuzz_target!(|text: &str| {
    if let Ok(g) = parse_edge_list(text) {
        assert!(g.is_consistent());
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
});
