#![no_main]

use libfuzzer_sys::fuzz_target;
use sqsum_core::graph::{encode_graph6, parse_graph6};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_graph6(text) {
        assert!(g.is_consistent());
        let encoded = encode_graph6(&g).unwrap();
        assert_eq!(parse_graph6(&encoded).unwrap(), g);
    }
});
