#![no_main]

use libfuzzer_sys::fuzz_target;
use sqsum_core::bounds::{corollary_class, CorollaryTag};

fuzz_target!(|text: &str| {
    if let Ok(tag) = text.parse::<CorollaryTag>() {
        assert_eq!(tag.to_string().parse::<CorollaryTag>().unwrap(), tag);
        let class = corollary_class(tag).unwrap();
        assert!(class.edge_threshold as f64 >= class.raw_threshold);
    }
});
