#![no_main]

use libfuzzer_sys::fuzz_target;
use sqsum_cli::corpus::{load_single, parse_graph6_lines};

fuzz_target!(|text: &str| {
    if let Ok(entries) = parse_graph6_lines(text) {
        assert!(entries.len() <= text.lines().count());
    }
    let mut stdin = text.as_bytes();
    let _ = load_single("-", &mut stdin);
});
