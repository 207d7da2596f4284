//! Signed circuits of a uniform chirotope.
//!
//! In the uniform rank-r case every (r+1)-subset of the ground set supports
//! exactly one circuit up to global sign. The signs along a support
//! {b_1 < … < b_{r+1}} follow from consecutive basis signs:
//!
//!   X_{b_{i+1}} = −X_{b_i} · χ(support − b_i) · χ(support − b_{i+1})
//!
//! We fix the global sign by making the smallest support element positive,
//! which keeps outputs deterministic and set-comparable; the negations are
//! implicit.

use std::fmt;

use crate::chirotope::Chirotope;
use crate::error::{Error, Result};
use crate::sign_vector::SignVector;
use crate::subset::{SubsetIndex, SubsetOrder};

/// All signed circuits of a uniform chirotope: one canonical representative
/// per ± pair, indexed by the rank of its (r+1)-element support. The full
/// collection is `reps ∪ −reps`.
#[derive(Clone, PartialEq, Eq)]
pub struct CircuitSet {
    n: u8,
    r: u8,
    order: SubsetOrder,
    reps: Vec<SignVector>,
}

impl CircuitSet {
    /// Walk every (r+1)-subset and chain the basis signs along it. For
    /// n ≤ r there are no circuits and the set comes back empty.
    pub fn from_chirotope(chi: &Chirotope) -> Self {
        let (n, r, order) = (chi.n(), chi.r(), chi.order());
        if n <= r {
            return Self {
                n,
                r,
                order,
                reps: Vec::new(),
            };
        }
        let supports = SubsetIndex::new(n, r + 1, order).expect("n <= 64, r+1 <= n");
        let bases = chi.basis_index();
        let mut reps = Vec::with_capacity(supports.count() as usize);
        let mut basis_buf = Vec::with_capacity(r as usize);
        for j in 0..supports.count() {
            let support = supports.unrank(j).expect("rank in range");
            // χ(support − b_i) for each i, reused by consecutive steps
            let chi_minus: Vec<i8> = (0..support.len())
                .map(|i| {
                    basis_buf.clear();
                    basis_buf.extend(support.iter().enumerate().filter_map(|(t, &e)| {
                        (t != i).then_some(e)
                    }));
                    let rank = bases.rank(&basis_buf).expect("valid basis");
                    chi.sign_at_rank(rank)
                })
                .collect();
            let mut signs = vec![0i8; support.len()];
            signs[0] = 1;
            for i in 0..r as usize {
                signs[i + 1] = -signs[i] * chi_minus[i] * chi_minus[i + 1];
            }
            let mut pos = 0u64;
            let mut neg = 0u64;
            for (i, &e) in support.iter().enumerate() {
                if signs[i] > 0 {
                    pos |= 1 << (e - 1);
                } else {
                    neg |= 1 << (e - 1);
                }
            }
            reps.push(
                SignVector::new(
                    n,
                    crate::sign_vector::ElementSet::from_mask(pos),
                    crate::sign_vector::ElementSet::from_mask(neg),
                )
                .expect("disjoint by construction"),
            );
        }
        Self { n, r, order, reps }
    }

    /// Assemble a circuit set from pre-computed canonical representatives.
    /// Validates the structural invariants: one rep per (r+1)-subset in
    /// rank order, each with its smallest support element positive.
    pub fn from_reps(n: u8, r: u8, order: SubsetOrder, reps: Vec<SignVector>) -> Result<Self> {
        let supports = SubsetIndex::new(n, r.checked_add(1).ok_or(Error::Overflow)?, order)?;
        if reps.len() as u64 != supports.count() {
            return Err(Error::Parameter(format!(
                "expected C({n},{}) = {} representatives, got {}",
                r + 1,
                supports.count(),
                reps.len()
            )));
        }
        for (j, rep) in reps.iter().enumerate() {
            if rep.n() != n {
                return Err(Error::DimensionMismatch(rep.n(), n));
            }
            let support = supports.unrank(j as u64)?;
            let expected: crate::sign_vector::ElementSet = support.iter().copied().collect();
            if rep.support() != expected {
                return Err(Error::MalformedSubset(format!(
                    "representative {j} has support {} instead of {expected}",
                    rep.support()
                )));
            }
            if rep.sign(support[0]) != 1 {
                return Err(Error::MalformedSubset(format!(
                    "representative {j} is not canonical: element {} is not positive",
                    support[0]
                )));
            }
        }
        Ok(Self { n, r, order, reps })
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

    /// Canonical representatives in support-rank order.
    pub fn reps(&self) -> &[SignVector] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Representatives followed by their negations: the full circuit
    /// collection of size 2·C(n,r+1).
    pub fn iter_signed(&self) -> impl Iterator<Item = SignVector> + '_ {
        self.reps
            .iter()
            .copied()
            .chain(self.reps.iter().map(|x| x.negated()))
    }

    /// True iff some circuit has empty negative part, i.e. the matroid is
    /// not acyclic. Checks representatives and their negations.
    pub fn has_positive_circuit(&self) -> bool {
        self.reps
            .iter()
            .any(|x| x.negative().is_empty() || x.positive().is_empty())
    }
}

impl fmt::Display for CircuitSet {
    /// Debug dump: one canonical circuit per line in textual sign form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rep in &self.reps {
            writeln!(f, "{rep}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CircuitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CircuitSet(n={}, r={}, {} reps)",
            self.n,
            self.r,
            self.reps.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign_vector::ElementSet;

    fn alternating_circuits(n: u8, r: u8) -> CircuitSet {
        CircuitSet::from_chirotope(&Chirotope::alternating(n, r).unwrap())
    }

    #[test]
    fn alternating_4_3_single_circuit() {
        let cs = alternating_circuits(4, 3);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs.reps()[0], SignVector::parse("+-+-").unwrap());
    }

    #[test]
    fn alternating_3_2() {
        let cs = alternating_circuits(3, 2);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs.reps()[0], SignVector::parse("+-+").unwrap());
    }

    #[test]
    fn alternating_signs_alternate() {
        for r in 1..=5u8 {
            for n in r + 1..=9 {
                let cs = alternating_circuits(n, r);
                assert_eq!(cs.len() as u64, crate::combinatorics::binomial(n as u64, (r + 1) as i64).unwrap());
                for rep in cs.reps() {
                    let support: Vec<u8> = rep.support().iter().collect();
                    for (i, &e) in support.iter().enumerate() {
                        let expect = if i % 2 == 0 { 1 } else { -1 };
                        assert_eq!(rep.sign(e), expect, "n={n}, r={r}, support {support:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn chain_relation_holds_for_all_consecutive_pairs() {
        // the defining relation must hold for every i, not just the ones used
        // to seed the chain, and for reoriented chirotopes too
        let base = Chirotope::alternating(6, 3).unwrap();
        let reorientations = [
            ElementSet::EMPTY,
            ElementSet::singleton(2),
            [1u8, 4, 5].into_iter().collect::<ElementSet>(),
            [2u8, 3, 6].into_iter().collect::<ElementSet>(),
        ];
        for set in reorientations {
            let chi = base.reorient(set).unwrap();
            let cs = CircuitSet::from_chirotope(&chi);
            for rep in cs.reps() {
                let support: Vec<u8> = rep.support().iter().collect();
                for i in 0..support.len() - 1 {
                    let minus = |skip: usize| -> Vec<u8> {
                        support
                            .iter()
                            .enumerate()
                            .filter_map(|(t, &e)| (t != skip).then_some(e))
                            .collect()
                    };
                    let lhs = chi.sign(&minus(i)).unwrap();
                    let rhs = -rep.sign(support[i])
                        * rep.sign(support[i + 1])
                        * chi.sign(&minus(i + 1)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn topes_orthogonal_to_every_circuit() {
        // the orthogonality relation that actually characterizes the
        // pipeline: T ⊥ X for all circuits X, checked through the public
        // orthogonality predicate rather than the tope scan's mask path.
        // (Two circuits need not be orthogonal to each other: in the
        // alternating rank-2 matroid on 4 elements, (+,-,+,0) and (0,+,-,+)
        // oppose on {2,3} and agree nowhere.)
        let x = SignVector::parse("+-+0").unwrap();
        let y = SignVector::parse("0+-+").unwrap();
        assert!(!x.orthogonal(&y).unwrap());
        for (n, r) in [(5u8, 2u8), (6, 3), (7, 4), (9, 5)] {
            let cs = alternating_circuits(n, r);
            let topes = crate::topes::TopeSet::enumerate(&cs);
            for t in topes.iter() {
                for x in cs.iter_signed() {
                    assert!(t.orthogonal(&x).unwrap(), "n={n}, r={r}, T={t}, X={x}");
                }
            }
        }
    }

    #[test]
    fn acyclicity_detection() {
        for r in 1..=5u8 {
            for n in r + 1..=9 {
                assert!(!alternating_circuits(n, r).has_positive_circuit());
            }
        }
        let chi = Chirotope::alternating(4, 3).unwrap();
        let re = chi
            .reorient([2u8, 4].into_iter().collect::<ElementSet>())
            .unwrap();
        let cs = CircuitSet::from_chirotope(&re);
        assert!(cs.has_positive_circuit());
        assert_eq!(cs.reps()[0], SignVector::parse("++++").unwrap());
    }

    #[test]
    fn no_circuits_when_n_equals_r() {
        let cs = CircuitSet::from_chirotope(&Chirotope::alternating(4, 4).unwrap());
        assert!(cs.is_empty());
        assert!(!cs.has_positive_circuit());
    }

    #[test]
    fn from_reps_validation() {
        let cs = alternating_circuits(5, 3);
        let rebuilt =
            CircuitSet::from_reps(5, 3, SubsetOrder::Lex, cs.reps().to_vec()).unwrap();
        assert_eq!(rebuilt, cs);

        // non-canonical representative rejected
        let mut bad = cs.reps().to_vec();
        bad[0] = bad[0].negated();
        assert!(CircuitSet::from_reps(5, 3, SubsetOrder::Lex, bad).is_err());

        // wrong support rejected
        let mut wrong = cs.reps().to_vec();
        wrong.swap(0, 1);
        assert!(CircuitSet::from_reps(5, 3, SubsetOrder::Lex, wrong).is_err());

        // wrong count rejected
        assert!(CircuitSet::from_reps(5, 3, SubsetOrder::Lex, cs.reps()[1..].to_vec()).is_err());
    }
}
