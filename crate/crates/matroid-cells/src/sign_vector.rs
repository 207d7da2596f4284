//! Sign vectors over a ground set {1..n} and the element-set arithmetic on
//! them: separation, orthogonality, negation, single-element flips.
//!
//! A sign vector is stored as two bitmasks (positive and negative elements),
//! so every operation below is a handful of word instructions. Ground sets
//! are capped at 64 elements.

use std::fmt;

use crate::error::{Error, Result};

/// 1-based ground-set label.
pub type Element = u8;

pub(crate) fn ground_mask(n: u8) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bit(e: Element) -> u64 {
    1u64 << (e - 1)
}

/// A subset of ground-set elements, as a bitmask keyed by 1-based labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_mask(mask: u64) -> Self {
        ElementSet(mask)
    }

    pub fn singleton(e: Element) -> Self {
        ElementSet(bit(e))
    }

    pub fn mask(&self) -> u64 {
        self.0
    }

    pub fn contains(&self, e: Element) -> bool {
        e >= 1 && e <= 64 && self.0 & bit(e) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> u32 {
        self.0.count_ones()
    }

    /// Elements in increasing label order.
    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        (1..=64u8).filter(|&e| self.0 & bit(e) != 0)
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let mut mask = 0u64;
        for e in iter {
            assert!((1..=64).contains(&e), "element label {e} outside 1..=64");
            mask |= bit(e);
        }
        ElementSet(mask)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for e in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// A {+,−,0} vector on ground set {1..n}: a disjoint pair of element sets.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignVector {
    n: u8,
    pos: u64,
    neg: u64,
}

impl SignVector {
    pub fn new(n: u8, positive: ElementSet, negative: ElementSet) -> Result<Self> {
        if n > 64 {
            return Err(Error::GroundSetTooLarge(n as usize));
        }
        let (pos, neg) = (positive.mask(), negative.mask());
        if pos & neg != 0 {
            return Err(Error::MalformedSubset(
                "positive and negative parts overlap".into(),
            ));
        }
        if (pos | neg) & !ground_mask(n) != 0 {
            return Err(Error::MalformedSubset(format!(
                "support extends beyond ground set 1..={n}"
            )));
        }
        Ok(Self { n, pos, neg })
    }

    /// The all-zero vector.
    pub fn zero(n: u8) -> Result<Self> {
        Self::new(n, ElementSet::EMPTY, ElementSet::EMPTY)
    }

    /// Build from explicit per-element signs in {-1, 0, +1}.
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        if signs.len() > 64 {
            return Err(Error::GroundSetTooLarge(signs.len()));
        }
        let mut pos = 0u64;
        let mut neg = 0u64;
        for (i, &s) in signs.iter().enumerate() {
            match s {
                1 => pos |= 1 << i,
                -1 => neg |= 1 << i,
                0 => {}
                other => {
                    return Err(Error::Format(format!("sign value {other} at entry {i}")))
                }
            }
        }
        Ok(Self {
            n: signs.len() as u8,
            pos,
            neg,
        })
    }

    /// Parse the textual form: one of `+`, `-`, `0` per element.
    pub fn parse(text: &str) -> Result<Self> {
        if text.len() > 64 {
            return Err(Error::GroundSetTooLarge(text.len()));
        }
        let mut pos = 0u64;
        let mut neg = 0u64;
        let mut n = 0u8;
        for (i, c) in text.chars().enumerate() {
            match c {
                '+' => pos |= 1 << i,
                '-' => neg |= 1 << i,
                '0' => {}
                other => {
                    return Err(Error::Format(format!(
                        "unexpected character '{other}' at position {}",
                        i + 1
                    )))
                }
            }
            n += 1;
        }
        Ok(Self { n, pos, neg })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn positive(&self) -> ElementSet {
        ElementSet(self.pos)
    }

    pub fn negative(&self) -> ElementSet {
        ElementSet(self.neg)
    }

    pub fn support(&self) -> ElementSet {
        ElementSet(self.pos | self.neg)
    }

    pub fn is_full_support(&self) -> bool {
        (self.pos | self.neg) == ground_mask(self.n)
    }

    /// Sign of element `e` as −1, 0, or +1. Panics if `e` is outside 1..=n.
    pub fn sign(&self, e: Element) -> i8 {
        assert!(e >= 1 && e <= self.n, "element {e} outside 1..={}", self.n);
        if self.pos & bit(e) != 0 {
            1
        } else if self.neg & bit(e) != 0 {
            -1
        } else {
            0
        }
    }

    pub fn negated(&self) -> Self {
        Self {
            n: self.n,
            pos: self.neg,
            neg: self.pos,
        }
    }

    /// Negate the sign of a single element, which must be in the support.
    pub fn flip(&self, e: Element) -> Result<Self> {
        if e < 1 || e > self.n || (self.pos | self.neg) & bit(e) == 0 {
            return Err(Error::InvalidElement {
                element: e,
                n: self.n,
            });
        }
        let b = bit(e);
        Ok(Self {
            n: self.n,
            pos: self.pos ^ b,
            neg: self.neg ^ b,
        })
    }

    /// Negate the signs of every element of `set` (elements outside the
    /// support stay zero).
    pub fn reorient(&self, set: ElementSet) -> Result<Self> {
        if set.mask() & !ground_mask(self.n) != 0 {
            return Err(Error::InvalidElement {
                element: set
                    .iter()
                    .find(|&e| e > self.n)
                    .unwrap_or(64),
                n: self.n,
            });
        }
        let m = set.mask();
        Ok(Self {
            n: self.n,
            pos: (self.pos & !m) | (self.neg & m),
            neg: (self.neg & !m) | (self.pos & m),
        })
    }

    /// Separation set S(X,Y): elements where the two vectors carry opposite
    /// nonzero signs.
    pub fn separation(&self, other: &SignVector) -> Result<ElementSet> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(ElementSet(
            (self.pos & other.neg) | (self.neg & other.pos),
        ))
    }

    /// X ⊥ Y: S(X,Y) and S(X,−Y) are both empty or both non-empty.
    pub fn orthogonal(&self, other: &SignVector) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let opposite = (self.pos & other.neg) | (self.neg & other.pos);
        let agree = (self.pos & other.pos) | (self.neg & other.neg);
        Ok((opposite == 0) == (agree == 0))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in 1..=self.n {
            let c = match self.sign(e) {
                1 => '+',
                -1 => '-',
                _ => '0',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sv(text: &str) -> SignVector {
        SignVector::parse(text).unwrap()
    }

    fn set(elems: &[Element]) -> ElementSet {
        elems.iter().copied().collect()
    }

    #[test]
    fn separation_examples() {
        assert_eq!(sv("+++").separation(&sv("+-+")).unwrap(), set(&[2]));
        assert_eq!(sv("+-+").separation(&sv("+-+")).unwrap(), ElementSet::EMPTY);
        let x = sv("+-+");
        assert_eq!(x.separation(&x.negated()).unwrap(), set(&[1, 2, 3]));
    }

    #[test]
    fn orthogonality_examples() {
        assert!(sv("+++").orthogonal(&sv("+-+")).unwrap());
        assert!(!sv("+-+0").orthogonal(&sv("00++")).unwrap());
        assert!(sv("+00").orthogonal(&sv("0+0")).unwrap());
    }

    #[test]
    fn flip_examples() {
        assert_eq!(sv("+++").flip(2).unwrap(), sv("+-+"));
        assert_eq!(sv("+-").flip(1).unwrap(), sv("--"));
        assert!(sv("+0+").flip(2).is_err());
        assert!(sv("+0+").flip(4).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        assert!(sv("++").separation(&sv("+++")).is_err());
        assert!(sv("++").orthogonal(&sv("+++")).is_err());
    }

    #[test]
    fn reorient_moves_signs() {
        assert_eq!(sv("+-+0").reorient(set(&[1, 2])).unwrap(), sv("-++0"));
        assert!(sv("+-").reorient(set(&[3])).is_err());
    }

    #[test]
    fn parse_display_roundtrip() {
        for text in ["+-0", "", "+", "0000", "+-+-"] {
            assert_eq!(sv(text).to_string(), text);
        }
        assert!(SignVector::parse("+x").is_err());
    }

    /// All {+,−,0} vectors on n elements.
    fn all_vectors(n: u8) -> Vec<SignVector> {
        let mut out = vec![SignVector::zero(n).unwrap()];
        for e in 1..=n {
            let mut next = Vec::with_capacity(out.len() * 3);
            for v in &out {
                next.push(*v);
                let mut p = *v;
                p.pos |= bit(e);
                next.push(p);
                let mut m = *v;
                m.neg |= bit(e);
                next.push(m);
            }
            out = next;
        }
        out
    }

    #[test]
    fn separation_symmetries_exhaustive() {
        for n in 0..=4u8 {
            let vs = all_vectors(n);
            for x in &vs {
                for y in &vs {
                    let s_xy = x.separation(y).unwrap();
                    assert_eq!(s_xy, y.separation(x).unwrap());
                    assert_eq!(
                        x.separation(&y.negated()).unwrap(),
                        x.negated().separation(y).unwrap()
                    );
                    let o = x.orthogonal(y).unwrap();
                    assert_eq!(o, y.orthogonal(x).unwrap());
                    assert_eq!(o, x.negated().orthogonal(y).unwrap());
                }
            }
        }
    }

    #[test]
    fn full_support_detection() {
        assert!(sv("+-+-").is_full_support());
        assert!(!sv("+0+-").is_full_support());
        assert!(SignVector::zero(0).unwrap().is_full_support());
    }

    proptest! {
        #[test]
        fn flip_is_involution(seed in proptest::collection::vec(-1i8..=1, 1..20)) {
            let v = SignVector::from_signs(&seed).unwrap();
            for e in 1..=v.n() {
                if v.sign(e) != 0 {
                    prop_assert_eq!(v.flip(e).unwrap().flip(e).unwrap(), v);
                }
            }
        }

        #[test]
        fn reorient_is_involution(
            seed in proptest::collection::vec(-1i8..=1, 1..20),
            mask: u64,
        ) {
            let v = SignVector::from_signs(&seed).unwrap();
            let r = ElementSet::from_mask(mask & ground_mask(v.n()));
            prop_assert_eq!(v.reorient(r).unwrap().reorient(r).unwrap(), v);
        }
    }
}
