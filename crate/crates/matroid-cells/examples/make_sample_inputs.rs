//! Regenerates the sample chirotope files under `data/`.
//!
//! Usage: `cargo run -p matroid-cells --example make_sample_inputs -- data/`
//!
//! The output is deterministic (fixed seed), so the checked-in files can be
//! reproduced at any time.

use std::fs;
use std::path::Path;

use matroid_cells::{oracle, Chirotope, ElementSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_subset<R: Rng>(n: u8, rng: &mut R) -> ElementSet {
    ElementSet::from_mask(rng.random_range(0..(1u64 << n)))
}

fn sample_file(n: u8, r: u8, data_lines: usize, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alternating = Chirotope::alternating(n, r).unwrap();
    let realizable: Vec<Chirotope> = (0..6)
        .map(|_| {
            oracle::random_configuration(n, r, 9, &mut rng)
                .unwrap()
                .chirotope()
        })
        .collect();
    let mut out = format!(
        "# sample chirotopes, rank {r} on {n} elements, lex subset order\n\
         # line 2 is the alternating class; the rest are its reorientations\n\
         # and reoriented realizable classes\n"
    );
    for i in 0..data_lines {
        let chi = if i == 0 {
            alternating.clone()
        } else if i % 2 == 0 {
            alternating.reorient(random_subset(n, &mut rng)).unwrap()
        } else {
            let pick = rng.random_range(0..realizable.len());
            realizable[pick]
                .reorient(random_subset(n, &mut rng))
                .unwrap()
        };
        out.push_str(&chi.serialize());
        out.push('\n');
    }
    out
}

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "data".into());
    let dir = Path::new(&dir);
    fs::create_dir_all(dir).unwrap();

    let alternating = Chirotope::alternating(8, 5).unwrap();
    fs::write(
        dir.join("alternating-r5n8.chi"),
        format!("# the alternating chirotope of rank 5 on 8 elements\n{}\n", alternating.serialize()),
    )
    .unwrap();
    fs::write(dir.join("sample-r5n8.chi"), sample_file(8, 5, 60, 58)).unwrap();
    fs::write(dir.join("sample-r3n6.chi"), sample_file(6, 3, 30, 36)).unwrap();
    println!("wrote sample inputs to {}", dir.display());
}
