//! Uniform chirotopes: a ±1 sign per sorted r-subset of {1..n}.
//!
//! This is the input representation for the whole pipeline. Parsing accepts
//! any ±1 array of the right length; whether it satisfies the chirotope
//! axioms is a separate question answered by [`crate::oracle`]'s circuit
//! validator, since database inputs arrive pre-validated and revalidating
//! millions of lines is optional.

use std::fmt;

use crate::error::{Error, Result};
use crate::sign_vector::{ground_mask, ElementSet};
use crate::subset::{SubsetIndex, SubsetOrder};

/// Basis orientation of a uniform rank-r oriented matroid on n elements.
/// Entry `i` of `signs` is the sign of the sorted basis `unrank(i)` under
/// the stored subset order. Uniformity means no entry is ever zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Chirotope {
    n: u8,
    r: u8,
    order: SubsetOrder,
    signs: Vec<i8>,
}

impl Chirotope {
    pub fn new(n: u8, r: u8, order: SubsetOrder, signs: Vec<i8>) -> Result<Self> {
        if r < 1 || n < r {
            return Err(Error::Parameter(format!("need n >= r >= 1, got n={n}, r={r}")));
        }
        let idx = SubsetIndex::new(n, r, order)?;
        if signs.len() as u64 != idx.count() {
            return Err(Error::Format(format!(
                "expected C({n},{r}) = {} signs, got {}",
                idx.count(),
                signs.len()
            )));
        }
        for (i, &s) in signs.iter().enumerate() {
            if s == 0 {
                return Err(Error::NonUniformInput(i));
            }
            if s != 1 && s != -1 {
                return Err(Error::Format(format!("sign value {s} at entry {i}")));
            }
        }
        Ok(Self { n, r, order, signs })
    }

    /// The chirotope with every sorted basis positive: the alternating
    /// oriented matroid of rank r on n elements (the cyclic arrangement).
    pub fn alternating(n: u8, r: u8) -> Result<Self> {
        if r < 1 || n < r {
            return Err(Error::Parameter(format!("need n >= r >= 1, got n={n}, r={r}")));
        }
        let idx = SubsetIndex::new(n, r, SubsetOrder::Lex)?;
        Ok(Self {
            n,
            r,
            order: SubsetOrder::Lex,
            signs: vec![1; idx.count() as usize],
        })
    }

    /// Parse a chirotope line: exactly C(n,r) characters from `{+,-}` after
    /// stripping ASCII whitespace. A `0` is rejected explicitly since the
    /// pipeline assumes uniformity.
    pub fn parse(text: &str, n: u8, r: u8, order: SubsetOrder) -> Result<Self> {
        if r < 1 || n < r {
            return Err(Error::Parameter(format!("need n >= r >= 1, got n={n}, r={r}")));
        }
        let expected = SubsetIndex::new(n, r, order)?.count();
        let mut signs = Vec::with_capacity(expected as usize);
        for c in text.chars() {
            if c.is_ascii_whitespace() {
                continue;
            }
            match c {
                '+' => signs.push(1),
                '-' => signs.push(-1),
                '0' => return Err(Error::NonUniformInput(signs.len())),
                other => {
                    return Err(Error::Format(format!(
                        "unexpected character '{other}' at sign {}",
                        signs.len() + 1
                    )))
                }
            }
        }
        if signs.len() as u64 != expected {
            return Err(Error::Format(format!(
                "expected C({n},{r}) = {expected} signs, got {}",
                signs.len()
            )));
        }
        Ok(Self { n, r, order, signs })
    }

    /// Inverse of [`Chirotope::parse`] under the same (n, r, order).
    pub fn serialize(&self) -> String {
        self.signs
            .iter()
            .map(|&s| if s > 0 { '+' } else { '-' })
            .collect()
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn order(&self) -> SubsetOrder {
        self.order
    }

    /// Indexing scheme for the sorted bases.
    pub fn basis_index(&self) -> SubsetIndex {
        SubsetIndex::new(self.n, self.r, self.order).expect("validated at construction")
    }

    /// Sign of a sorted basis given as a strictly increasing r-subset.
    pub fn sign(&self, basis: &[u8]) -> Result<i8> {
        let rank = self.basis_index().rank(basis)?;
        Ok(self.signs[rank as usize])
    }

    pub(crate) fn sign_at_rank(&self, rank: u64) -> i8 {
        self.signs[rank as usize]
    }

    /// Reorientation on an element set R: every basis sign picks up a factor
    /// (−1)^|B ∩ R|. Matches reorienting the circuits on R.
    pub fn reorient(&self, set: ElementSet) -> Result<Self> {
        if set.mask() & !ground_mask(self.n) != 0 {
            return Err(Error::InvalidElement {
                element: set.iter().find(|&e| e > self.n).unwrap_or(64),
                n: self.n,
            });
        }
        let idx = self.basis_index();
        let mut signs = self.signs.clone();
        for (rank, sign) in signs.iter_mut().enumerate() {
            let basis = idx.unrank(rank as u64).expect("rank in range");
            let flips = basis.iter().filter(|&&e| set.contains(e)).count();
            if flips % 2 == 1 {
                *sign = -*sign;
            }
        }
        Ok(Self {
            n: self.n,
            r: self.r,
            order: self.order,
            signs,
        })
    }

    /// Relabel the ground set by a permutation (`perm[i-1]` is the new label
    /// of element i). Each basis sign is multiplied by the sign of the
    /// permutation restricted to that basis.
    pub fn relabel(&self, perm: &[u8]) -> Result<Self> {
        if perm.len() != self.n as usize {
            return Err(Error::Parameter(format!(
                "permutation has {} entries, expected {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p < 1 || p > self.n || seen & (1 << (p - 1)) != 0 {
                return Err(Error::Parameter(format!(
                    "not a permutation of 1..={}: entry {p}",
                    self.n
                )));
            }
            seen |= 1 << (p - 1);
        }
        let idx = self.basis_index();
        let mut signs = vec![0i8; self.signs.len()];
        for (rank, &sign) in self.signs.iter().enumerate() {
            let basis = idx.unrank(rank as u64).expect("rank in range");
            let image: Vec<u8> = basis.iter().map(|&e| perm[e as usize - 1]).collect();
            let mut inversions = 0u32;
            for i in 0..image.len() {
                for j in i + 1..image.len() {
                    if image[i] > image[j] {
                        inversions += 1;
                    }
                }
            }
            let mut sorted = image;
            sorted.sort_unstable();
            let new_rank = idx.rank(&sorted).expect("image is a valid subset");
            signs[new_rank as usize] = if inversions % 2 == 0 { sign } else { -sign };
        }
        Ok(Self {
            n: self.n,
            r: self.r,
            order: self.order,
            signs,
        })
    }
}

impl fmt::Display for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl fmt::Debug for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Chirotope(n={}, r={}, {}, {})",
            self.n,
            self.r,
            self.order,
            self.serialize()
        )
    }
}

/// Strip a raw chirotope-file line down to its payload. Returns `None` for
/// blank lines and `#` comments.
pub fn chirotope_file_payload(line: &str) -> Option<&str> {
    let trimmed = line.trim();
    if trimmed.is_empty() || trimmed.starts_with('#') {
        None
    } else {
        Some(trimmed)
    }
}
