#![no_main]

use libfuzzer_sys::fuzz_target;
use matroid_cells::sweep::Checkpoint;

fuzz_target!(|data: &[u8]| {
    if let Ok(cp) = Checkpoint::from_json(data) {
        // anything accepted must re-serialize to a fixpoint
        let json = cp.to_json();
        let reloaded = Checkpoint::from_json(json.as_bytes())
            .expect("serialized checkpoint must reload");
        assert_eq!(reloaded.to_json(), json);
    }
});
