#![no_main]

use libfuzzer_sys::fuzz_target;
use sqsum_core::graph::{generate, GeneratorSpec};

fuzz_target!(|text: &str| {
    let Ok(spec) = text.parse::<GeneratorSpec>() else {
        return;
    };
    let shown = spec.to_string();
    assert_eq!(shown.parse::<GeneratorSpec>().unwrap(), spec, "{shown}");
    // keep generation cheap; huge orders are valid but slow
    if spec.vertex_count().is_some_and(|n| n <= 256) {
        if let Ok(g) = generate(&spec) {
            assert!(g.is_consistent());
            assert_eq!(Some(g.n()), spec.vertex_count());
        }
    }
});
