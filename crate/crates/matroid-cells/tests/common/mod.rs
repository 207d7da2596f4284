//! Shared helpers for the integration suites: deterministic random inputs
//! and mixed chirotope fixture files.

use matroid_cells::{oracle, Chirotope, ElementSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_subset<R: Rng>(n: u8, rng: &mut R) -> ElementSet {
    ElementSet::from_mask(rng.random_range(0..(1u64 << n)))
}

pub fn random_permutation<R: Rng>(n: u8, rng: &mut R) -> Vec<u8> {
    let mut perm: Vec<u8> = (1..=n).collect();
    for i in (1..perm.len()).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    perm
}

/// A chirotope database fixture with `data_lines` entries: the alternating
/// chirotope first, then a deterministic mix of its reorientations and
/// relabelings and of reoriented realizable chirotopes, with comment and
/// blank lines sprinkled in.
#[allow(dead_code)]
pub fn mixed_fixture(n: u8, r: u8, data_lines: usize, seed: u64) -> String {
    let mut rng = rng(seed);
    let alternating = Chirotope::alternating(n, r).unwrap();
    let realizable: Vec<Chirotope> = (0..8)
        .map(|_| {
            oracle::random_configuration(n, r, 9, &mut rng)
                .unwrap()
                .chirotope()
        })
        .collect();
    let mut out = String::from("# mixed fixture: alternating, reoriented, relabeled, realizable\n");
    for i in 0..data_lines {
        if i % 41 == 17 {
            out.push_str("# section marker\n");
        }
        if i % 67 == 33 {
            out.push('\n');
        }
        let chi = if i == 0 {
            alternating.clone()
        } else {
            match i % 3 {
                0 => alternating.reorient(random_subset(n, &mut rng)).unwrap(),
                1 => {
                    let pick = rng.random_range(0..realizable.len());
                    realizable[pick]
                        .reorient(random_subset(n, &mut rng))
                        .unwrap()
                }
                _ => alternating
                    .relabel(&random_permutation(n, &mut rng))
                    .unwrap()
                    .reorient(random_subset(n, &mut rng))
                    .unwrap(),
            }
        };
        out.push_str(&chi.serialize());
        out.push('\n');
    }
    out
}
