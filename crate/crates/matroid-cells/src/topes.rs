//! Topes and complete cells.
//!
//! A full-support sign vector T is a tope iff S(T,X) and S(T,−X) are both
//! non-empty for every circuit X; a tope is a complete cell iff every
//! single-element flip of it is again a tope. The enumeration scans the
//! 2^{n−1} candidates with element 1 fixed positive and adds negations,
//! which is sound because topes come in ± pairs.

use std::collections::HashSet;

use crate::circuits::CircuitSet;
use crate::error::{Error, Result};
use crate::sign_vector::{ground_mask, ElementSet, SignVector};

/// Condition check for a single candidate: T separates every circuit from
/// both itself and its negation. Negated circuits need no separate pass
/// since swapping X for −X swaps the two separation sets.
pub fn is_tope(t: &SignVector, circuits: &CircuitSet) -> Result<bool> {
    if t.n() != circuits.n() {
        return Err(Error::DimensionMismatch(t.n(), circuits.n()));
    }
    if !t.is_full_support() {
        return Err(Error::Precondition(format!(
            "tope candidate must have full support, got {t}"
        )));
    }
    let pos = t.positive().mask();
    let neg = t.negative().mask();
    Ok(circuits.reps().iter().all(|x| {
        let xp = x.positive().mask();
        let xn = x.negative().mask();
        let opposite = (pos & xn) | (neg & xp);
        let agree = (pos & xp) | (neg & xn);
        opposite != 0 && agree != 0
    }))
}

/// The set of all topes of a uniform oriented matroid, with O(1) membership.
///
/// Full-support vectors are keyed by their positive bitmask alone. The key
/// list is kept sorted so iteration order is deterministic.
#[derive(Clone, Debug)]
pub struct TopeSet {
    n: u8,
    keys: HashSet<u64>,
    ordered: Vec<u64>,
}

impl TopeSet {
    /// Scan all 2^{n−1} candidates with element 1 positive. The cost is
    /// 2^{n−1}·|reps| word operations, so this is for small ground sets
    /// (the intended workloads have n ≤ 9).
    pub fn enumerate(circuits: &CircuitSet) -> TopeSet {
        let n = circuits.n();
        let full = ground_mask(n);
        let masks: Vec<(u64, u64)> = circuits
            .reps()
            .iter()
            .map(|x| (x.positive().mask(), x.negative().mask()))
            .collect();
        let mut ordered = Vec::new();
        let candidates = if n == 0 { 0 } else { 1u64 << (n - 1) };
        for m in 0..candidates {
            let pos = (m << 1) | 1;
            let neg = full & !pos;
            let admitted = masks.iter().all(|&(xp, xn)| {
                let opposite = (pos & xn) | (neg & xp);
                let agree = (pos & xp) | (neg & xn);
                opposite != 0 && agree != 0
            });
            if admitted {
                ordered.push(pos);
                ordered.push(neg);
            }
        }
        ordered.sort_unstable();
        let keys = ordered.iter().copied().collect();
        TopeSet { n, keys, ordered }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.ordered.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordered.is_empty()
    }

    pub fn contains(&self, t: &SignVector) -> bool {
        t.n() == self.n && t.is_full_support() && self.keys.contains(&t.positive().mask())
    }

    /// Topes in increasing key order.
    pub fn iter(&self) -> impl Iterator<Item = SignVector> + '_ {
        let full = ground_mask(self.n);
        self.ordered.iter().map(move |&pos| {
            SignVector::new(
                self.n,
                ElementSet::from_mask(pos),
                ElementSet::from_mask(full & !pos),
            )
            .expect("keys are valid full-support vectors")
        })
    }

    /// True iff flipping any single element of `t` lands on another tope.
    /// `t` itself must be a member.
    pub fn is_complete_cell(&self, t: &SignVector) -> Result<bool> {
        if !self.contains(t) {
            return Err(Error::Precondition(format!("{t} is not a tope")));
        }
        Ok(self.all_flips_inside(t.positive().mask()))
    }

    /// The complete-cell topes, in increasing key order. Detection costs n
    /// hash lookups per tope instead of re-running the circuit checks.
    pub fn complete_cells(&self) -> Vec<SignVector> {
        let full = ground_mask(self.n);
        self.ordered
            .iter()
            .filter(|&&pos| self.all_flips_inside(pos))
            .map(|&pos| {
                SignVector::new(
                    self.n,
                    ElementSet::from_mask(pos),
                    ElementSet::from_mask(full & !pos),
                )
                .expect("keys are valid full-support vectors")
            })
            .collect()
    }

    /// Number of complete-cell topes (the signed-tope statistic).
    pub fn complete_cell_count(&self) -> u64 {
        self.ordered
            .iter()
            .filter(|&&pos| self.all_flips_inside(pos))
            .count() as u64
    }

    fn all_flips_inside(&self, pos: u64) -> bool {
        (0..self.n).all(|i| self.keys.contains(&(pos ^ (1u64 << i))))
    }
}
