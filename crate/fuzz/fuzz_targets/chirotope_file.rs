#![no_main]

use std::io::Cursor;

use libfuzzer_sys::fuzz_target;
use matroid_cells::{sweep_reader, SubsetOrder};

// Drive the real file path end to end: line classification, parsing, and the
// full pipeline on every line that parses. The aggregate invariants must
// hold for arbitrary input bytes.
fuzz_target!(|data: &[u8]| {
    let summary = sweep_reader(Cursor::new(data), 6, 3, SubsetOrder::Lex, 1)
        .expect("in-memory sweeps cannot fail");
    let processed: u64 = summary.histogram.values().sum();
    assert_eq!(processed, summary.total_classes);
    match summary.max_count {
        Some(max) => {
            assert_eq!(Some(&max), summary.histogram.keys().next_back());
            assert!(!summary.argmax_lines.is_empty());
            assert_eq!(max % 2, 0);
        }
        None => {
            assert!(summary.histogram.is_empty());
            assert!(summary.argmax_lines.is_empty());
        }
    }
    assert_eq!(summary.bound, 2); // 2·C_2(6)
    if !summary.violations.is_empty() {
        // arbitrary sign arrays need not be chirotopes, so counts above the
        // bound are possible here; they must be reflected in the maximum
        assert!(summary.max_count.unwrap() > summary.bound);
        assert!(summary.violations.windows(2).all(|w| w[0] < w[1]));
    }
});
