//! Rank/unrank indexing of sorted k-subsets of {1..n}.
//!
//! Chirotope entries and circuit supports are addressed by subset rank, so
//! the bijection here fixes the meaning of every sign string in the file
//! formats. Two enumeration orders are supported because external chirotope
//! databases do not all agree on one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};

/// Enumeration order for sorted subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum SubsetOrder {
    /// Lexicographic on the sorted tuple: (1,2,3) < (1,2,4) < (1,3,4) < ...
    #[default]
    Lex,
    /// Colexicographic: compare the largest differing element first.
    Colex,
}

impl fmt::Display for SubsetOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubsetOrder::Lex => write!(f, "lex"),
            SubsetOrder::Colex => write!(f, "colex"),
        }
    }
}

impl FromStr for SubsetOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(SubsetOrder::Lex),
            "colex" => Ok(SubsetOrder::Colex),
            other => Err(Error::Parameter(format!(
                "unknown subset order '{other}' (expected 'lex' or 'colex')"
            ))),
        }
    }
}

/// Indexing scheme for the C(n,k) sorted k-subsets of {1..n}.
///
/// `rank` and `unrank` are mutually inverse bijections onto 0..C(n,k).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetIndex {
    n: u8,
    k: u8,
    order: SubsetOrder,
}

impl SubsetIndex {
    pub fn new(n: u8, k: u8, order: SubsetOrder) -> Result<Self> {
        if n > 64 {
            return Err(Error::GroundSetTooLarge(n as usize));
        }
        if k > n {
            return Err(Error::Parameter(format!("subset size {k} exceeds n={n}")));
        }
        Ok(Self { n, k, order })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn order(&self) -> SubsetOrder {
        self.order
    }

    /// Number of indexed subsets, C(n,k). Always fits in u64 for n ≤ 64.
    pub fn count(&self) -> u64 {
        binomial(self.n as u64, self.k as i64).expect("C(n,k) fits u64 for n <= 64")
    }

    /// Rank of a sorted subset under this order.
    pub fn rank(&self, subset: &[u8]) -> Result<u64> {
        self.validate(subset)?;
        Ok(match self.order {
            SubsetOrder::Lex => self.rank_lex(subset),
            SubsetOrder::Colex => self.rank_colex(subset),
        })
    }

    /// Sorted subset at `index` under this order.
    pub fn unrank(&self, index: u64) -> Result<Vec<u8>> {
        if index >= self.count() {
            return Err(Error::IndexOutOfRange {
                index,
                count: self.count(),
            });
        }
        Ok(match self.order {
            SubsetOrder::Lex => self.unrank_lex(index),
            SubsetOrder::Colex => self.unrank_colex(index),
        })
    }

    fn validate(&self, subset: &[u8]) -> Result<()> {
        if subset.len() != self.k as usize {
            return Err(Error::MalformedSubset(format!(
                "expected {} elements, got {}",
                self.k,
                subset.len()
            )));
        }
        let mut prev = 0u8;
        for &e in subset {
            if e <= prev {
                return Err(Error::MalformedSubset(format!(
                    "not strictly increasing at element {e}"
                )));
            }
            if e > self.n {
                return Err(Error::MalformedSubset(format!(
                    "element {e} outside 1..={}",
                    self.n
                )));
            }
            prev = e;
        }
        Ok(())
    }

    fn rank_lex(&self, subset: &[u8]) -> u64 {
        let k = self.k as usize;
        let mut rank = 0u64;
        let mut prev = 0u8;
        for (pos, &s) in subset.iter().enumerate() {
            for v in prev + 1..s {
                rank += binomial((self.n - v) as u64, (k - pos - 1) as i64)
                    .expect("in-range binomial");
            }
            prev = s;
        }
        rank
    }

    fn unrank_lex(&self, mut index: u64) -> Vec<u8> {
        let k = self.k as usize;
        let mut out = Vec::with_capacity(k);
        let mut v = 1u8;
        for pos in 0..k {
            loop {
                let skipped = binomial((self.n - v) as u64, (k - pos - 1) as i64)
                    .expect("in-range binomial");
                if skipped <= index {
                    index -= skipped;
                    v += 1;
                } else {
                    out.push(v);
                    v += 1;
                    break;
                }
            }
        }
        out
    }

    fn rank_colex(&self, subset: &[u8]) -> u64 {
        subset
            .iter()
            .enumerate()
            .map(|(i, &s)| {
                binomial((s - 1) as u64, (i + 1) as i64).expect("in-range binomial")
            })
            .sum()
    }

    fn unrank_colex(&self, mut index: u64) -> Vec<u8> {
        let k = self.k as usize;
        let mut out = vec![0u8; k];
        for i in (1..=k).rev() {
            // largest c with C(c-1, i) <= remaining index
            let mut chosen = i as u8;
            for cand in (i as u8..=self.n).rev() {
                if binomial((cand - 1) as u64, i as i64).expect("in-range binomial") <= index {
                    chosen = cand;
                    break;
                }
            }
            out[i - 1] = chosen;
            index -= binomial((chosen - 1) as u64, i as i64).expect("in-range binomial");
        }
        out
    }
}
