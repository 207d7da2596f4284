//! Independent verifiers: realizable chirotopes from exact determinant
//! signs, circuits from exact linear dependences, and the circuit-axiom
//! checker. These deliberately avoid the basis-chaining route used by
//! [`crate::circuits`] so the two paths can check each other.
//!
//! All arithmetic is exact big-integer arithmetic. Floating-point sign
//! computations are banned here: a single wrong sign silently corrupts
//! every downstream count.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::chirotope::Chirotope;
use crate::circuits::CircuitSet;
use crate::error::{Error, Result};
use crate::sign_vector::{Element, ElementSet, SignVector};
use crate::subset::{SubsetIndex, SubsetOrder};

/// n integer points spanning rank r, in general position: every r-subset of
/// the rows is linearly independent (checked at construction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    n: u8,
    r: u8,
    coords: Vec<Vec<i64>>,
}

impl PointConfiguration {
    pub fn new(coords: Vec<Vec<i64>>) -> Result<Self> {
        let n = coords.len();
        if n == 0 || n > 64 {
            return Err(Error::Parameter(format!(
                "configuration needs 1..=64 points, got {n}"
            )));
        }
        let r = coords[0].len();
        if r == 0 || r > n {
            return Err(Error::Parameter(format!(
                "ambient dimension must be in 1..=n, got r={r} with n={n}"
            )));
        }
        if coords.iter().any(|row| row.len() != r) {
            return Err(Error::Parameter("rows of mixed dimension".into()));
        }
        let pc = Self {
            n: n as u8,
            r: r as u8,
            coords,
        };
        // general position: no r-subset may be singular
        let bases = SubsetIndex::new(pc.n, pc.r, SubsetOrder::Lex)?;
        for rank in 0..bases.count() {
            let subset = bases.unrank(rank)?;
            if pc.minor_det(&subset).is_zero() {
                return Err(Error::Degenerate(format!(
                    "points {subset:?} are linearly dependent"
                )));
            }
        }
        Ok(pc)
    }

    /// Points (1, t, t², …, t^{r−1}) for strictly increasing integer
    /// parameters: the homogeneous moment curve. Its chirotope is the
    /// alternating one because the basis determinants are Vandermonde.
    pub fn moment_curve(n: u8, r: u8, params: &[i64]) -> Result<Self> {
        if params.len() != n as usize || n < r || r < 1 {
            return Err(Error::Parameter(format!(
                "need {n} parameters and n >= r >= 1 (r={r})"
            )));
        }
        if params.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parameter(
                "moment-curve parameters must be strictly increasing".into(),
            ));
        }
        let coords = params
            .iter()
            .map(|&t| {
                let mut row = Vec::with_capacity(r as usize);
                let mut power = 1i128;
                for _ in 0..r {
                    row.push(i64::try_from(power).map_err(|_| Error::Overflow)?);
                    power = power.checked_mul(t as i128).ok_or(Error::Overflow)?;
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coords)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn coords(&self) -> &[Vec<i64>] {
        &self.coords
    }

    /// Scale one point by a positive integer factor. Keeps general position
    /// and every circuit sign.
    pub fn scale_point(&self, point: Element, factor: i64) -> Result<Self> {
        if point < 1 || point > self.n {
            return Err(Error::InvalidElement {
                element: point,
                n: self.n,
            });
        }
        if factor <= 0 {
            return Err(Error::Parameter("scale factor must be positive".into()));
        }
        let mut coords = self.coords.clone();
        for entry in &mut coords[point as usize - 1] {
            *entry = entry.checked_mul(factor).ok_or(Error::Overflow)?;
        }
        Ok(Self {
            n: self.n,
            r: self.r,
            coords,
        })
    }

    /// Determinant of the rows indexed by a sorted subset (1-based labels).
    fn minor_det(&self, rows: &[u8]) -> BigInt {
        let m: Vec<&[i64]> = rows
            .iter()
            .map(|&e| self.coords[e as usize - 1].as_slice())
            .collect();
        det_exact(&m)
    }

    /// χ(B) = sign det(v_{b_1}, …, v_{b_r}) over all sorted bases, computed
    /// exactly. General position guarantees no zero shows up.
    pub fn chirotope(&self) -> Chirotope {
        let bases = SubsetIndex::new(self.n, self.r, SubsetOrder::Lex).expect("validated");
        let signs: Vec<i8> = (0..bases.count())
            .map(|rank| {
                let subset = bases.unrank(rank).expect("rank in range");
                let d = self.minor_det(&subset);
                if d.is_positive() {
                    1
                } else {
                    -1
                }
            })
            .collect();
        Chirotope::new(self.n, self.r, SubsetOrder::Lex, signs)
            .expect("general position yields a uniform sign array")
    }

    /// Circuits from exact linear dependences: on each (r+1)-subset the
    /// kernel of the point matrix is spanned by λ_i = (−1)^i · det(minor i),
    /// canonicalized so the smallest support element is positive.
    pub fn circuits(&self) -> Result<CircuitSet> {
        if self.n <= self.r {
            return CircuitSet::from_reps(self.n, self.r, SubsetOrder::Lex, Vec::new());
        }
        let supports = SubsetIndex::new(self.n, self.r + 1, SubsetOrder::Lex)?;
        let mut reps = Vec::with_capacity(supports.count() as usize);
        for j in 0..supports.count() {
            let support = supports.unrank(j)?;
            let mut signs = Vec::with_capacity(support.len());
            for i in 0..support.len() {
                let minor: Vec<u8> = support
                    .iter()
                    .enumerate()
                    .filter_map(|(t, &e)| (t != i).then_some(e))
                    .collect();
                let d = self.minor_det(&minor);
                if d.is_zero() {
                    return Err(Error::Degenerate(format!(
                        "points {minor:?} are linearly dependent"
                    )));
                }
                let lambda = if i % 2 == 0 { d } else { -d };
                signs.push(if lambda.is_positive() { 1i8 } else { -1i8 });
            }
            if signs[0] < 0 {
                for s in &mut signs {
                    *s = -*s;
                }
            }
            let mut pos = ElementSet::EMPTY.mask();
            let mut neg = ElementSet::EMPTY.mask();
            for (i, &e) in support.iter().enumerate() {
                if signs[i] > 0 {
                    pos |= 1 << (e - 1);
                } else {
                    neg |= 1 << (e - 1);
                }
            }
            reps.push(SignVector::new(
                self.n,
                ElementSet::from_mask(pos),
                ElementSet::from_mask(neg),
            )?);
        }
        CircuitSet::from_reps(self.n, self.r, SubsetOrder::Lex, reps)
    }
}

/// Exact integer determinant by fraction-free (Bareiss) elimination.
fn det_exact(rows: &[&[i64]]) -> BigInt {
    let m = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == m));
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..m {
        if a[k][k].is_zero() {
            match (k + 1..m).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact division in Bareiss elimination
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[m - 1][m - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Draw an integer configuration with coordinates in [−bound, bound],
/// rejecting degenerate draws until one is in general position.
pub fn random_configuration<R: Rng + ?Sized>(
    n: u8,
    r: u8,
    bound: i64,
    rng: &mut R,
) -> Result<PointConfiguration> {
    if bound < 1 {
        return Err(Error::Parameter("coordinate bound must be >= 1".into()));
    }
    if r < 1 || n < r || n > 64 {
        return Err(Error::Parameter(format!("need 64 >= n >= r >= 1, got n={n}, r={r}")));
    }
    for _ in 0..10_000 {
        let coords: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..r).map(|_| rng.random_range(-bound..=bound)).collect())
            .collect();
        match PointConfiguration::new(coords) {
            Ok(pc) => return Ok(pc),
            Err(Error::Degenerate(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Degenerate(format!(
        "no general-position configuration found for n={n}, r={r}, bound={bound}"
    )))
}

/// One concrete way a circuit collection fails the oriented-matroid axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    EmptySupport {
        index: usize,
    },
    MissingNegation {
        index: usize,
    },
    Incomparable {
        first: usize,
        second: usize,
    },
    EliminationFails {
        first: usize,
        second: usize,
        element: Element,
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::EmptySupport { index } => {
                write!(f, "circuit {index} has empty support")
            }
            AxiomViolation::MissingNegation { index } => {
                write!(f, "negation of circuit {index} is missing")
            }
            AxiomViolation::Incomparable { first, second } => write!(
                f,
                "circuits {first} and {second} have nested supports but are not ± equal"
            ),
            AxiomViolation::EliminationFails {
                first,
                second,
                element,
            } => write!(
                f,
                "no eliminant for circuits {first}, {second} at element {element}"
            ),
        }
    }
}

/// Outcome of the axiom check; empty means all four axioms hold.
#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[AxiomViolation] {
        &self.violations
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "all circuit axioms hold")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// Check the four circuit axioms on the materialized collection
/// reps ∪ −reps: no empty support, closure under negation, support
/// incomparability, and weak elimination (for X ≠ −Y and e ∈ X⁺ ∩ Y⁻ there
/// is a circuit Z avoiding e with Z⁺ ⊆ X⁺ ∪ Y⁺ and Z⁻ ⊆ X⁻ ∪ Y⁻).
pub fn validate_circuit_axioms(cs: &CircuitSet) -> AxiomReport {
    let members: Vec<SignVector> = cs.iter_signed().collect();
    let count = members.len();
    let half = cs.len();
    let negation_of = |i: usize| (i + half) % count.max(1);
    let mut report = AxiomReport::default();

    let key = |x: &SignVector| (x.positive().mask(), x.negative().mask());
    let keys: std::collections::HashSet<(u64, u64)> = members.iter().map(key).collect();

    for (i, x) in members.iter().enumerate() {
        if x.support().is_empty() {
            report.violations.push(AxiomViolation::EmptySupport { index: i });
        }
        if !keys.contains(&key(&x.negated())) {
            report
                .violations
                .push(AxiomViolation::MissingNegation { index: i });
        }
    }

    for (i, x) in members.iter().enumerate() {
        for (j, y) in members.iter().enumerate() {
            if i == j {
                continue;
            }
            let (xs, ys) = (x.support().mask(), y.support().mask());
            if xs & !ys == 0 && *x != *y && *x != y.negated() {
                report
                    .violations
                    .push(AxiomViolation::Incomparable { first: i, second: j });
            }
        }
    }

    // weak elimination; the pair (X,Y) and (−Y,−X) pose the same instances,
    // so only one of each orbit is scanned
    for i in 0..count {
        for j in 0..count {
            if j == negation_of(i) {
                continue;
            }
            if (negation_of(j), negation_of(i)) < (i, j) {
                continue;
            }
            let x = &members[i];
            let y = &members[j];
            let conflicts = x.positive().mask() & y.negative().mask();
            if conflicts == 0 {
                continue;
            }
            let pos_union = x.positive().mask() | y.positive().mask();
            let neg_union = x.negative().mask() | y.negative().mask();
            let mut covered = 0u64;
            for z in &members {
                let zp = z.positive().mask();
                let zn = z.negative().mask();
                if zp & !pos_union == 0 && zn & !neg_union == 0 {
                    covered |= conflicts & !(zp | zn);
                    if covered == conflicts {
                        break;
                    }
                }
            }
            let missing = conflicts & !covered;
            if missing != 0 {
                for element in ElementSet::from_mask(missing).iter() {
                    report.violations.push(AxiomViolation::EliminationFails {
                        first: i,
                        second: j,
                        element,
                    });
                }
            }
        }
    }

    report
}
