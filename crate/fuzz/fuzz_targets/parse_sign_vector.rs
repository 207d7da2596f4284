#![no_main]

use libfuzzer_sys::fuzz_target;
use matroid_cells::SignVector;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(v) = SignVector::parse(text) {
        let printed = v.to_string();
        let reparsed = SignVector::parse(&printed).expect("display output must parse");
        assert_eq!(reparsed, v);
        assert_eq!(v.negated().negated(), v);
        for e in 1..=v.n() {
            if v.sign(e) != 0 {
                assert_eq!(v.flip(e).unwrap().flip(e).unwrap(), v);
            } else {
                assert!(v.flip(e).is_err());
            }
        }
        let sep = v.separation(&v.negated()).unwrap();
        assert_eq!(sep, v.support());
    }
});
