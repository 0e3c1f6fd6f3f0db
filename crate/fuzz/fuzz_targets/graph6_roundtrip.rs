#![no_main]

use libfuzzer_sys::fuzz_target;
use sqsum_core::graph::{encode_graph6, parse_graph6};
use sqsum_core::Graph;

// First byte picks the order, the rest are upper-triangle bits.
fuzz_target!(|data: &[u8]| {
    let Some((&order, bits)) = data.split_first() else {
        return;
    };
    let n = order as usize % 96;
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if bits.get(bit / 8).is_some_and(|b| b >> (bit % 8) & 1 == 1) {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    let g = Graph::from_edge_list(n, &edges).unwrap();
    let encoded = encode_graph6(&g).unwrap();
    let decoded = parse_graph6(&encoded).unwrap();
    assert_eq!(decoded, g);
    assert_eq!(decoded.m(), edges.len());
});
