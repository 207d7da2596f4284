#![no_main]

use libfuzzer_sys::fuzz_target;
use matroid_cells::{Chirotope, SubsetOrder};

// First two bytes pick (n, r), the third picks the order, the rest is the
// sign text. Parsing must never panic, and whatever parses must survive a
// serialize → parse roundtrip under the same parameters.
fuzz_target!(|data: &[u8]| {
    if data.len() < 3 {
        return;
    }
    let n = data[0] % 12 + 1;
    let r = data[1] % n + 1;
    let order = if data[2] & 1 == 0 {
        SubsetOrder::Lex
    } else {
        SubsetOrder::Colex
    };
    let Ok(text) = std::str::from_utf8(&data[3..]) else {
        return;
    };
    if let Ok(chi) = Chirotope::parse(text, n, r, order) {
        let reparsed = Chirotope::parse(&chi.serialize(), n, r, order)
            .expect("serialized chirotope must reparse");
        assert_eq!(reparsed, chi);
    }
});
