//! Closed-form reference counts: binomials, the exact complete-cell count of
//! the cyclic arrangement, and the conjectured general bound.

use crate::error::{Error, Result};

/// Binomial coefficient C(n, k) with the vanishing convention: `k < 0` or
/// `k > n` gives 0. The vanishing cases carry real weight here — the
/// cyclic-cell formula relies on its leading binomials dying once n > 2d.
pub fn binomial(n: u64, k: i64) -> Result<u64> {
    if k < 0 || k as u64 > n {
        return Ok(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc
            .checked_mul((n - k + i) as u128)
            .ok_or(Error::Overflow)?;
        // exact: acc is C(n-k+i, i) after this step
        acc /= i as u128;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow)
}

/// Parameters of an arrangement bound: `d` is the projective dimension
/// (rank − 1) and `n` the number of pseudohyperplanes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundParams {
    d: u32,
    n: u32,
}

impl BoundParams {
    /// Requires n ≥ d+1 ≥ 2.
    pub fn new(d: u32, n: u32) -> Result<Self> {
        if d < 1 || n < d + 1 {
            return Err(Error::Parameter(format!(
                "need n >= d+1 >= 2, got d={d}, n={n}"
            )));
        }
        Ok(Self { d, n })
    }

    pub fn dimension(&self) -> u32 {
        self.d
    }

    pub fn elements(&self) -> u32 {
        self.n
    }
}

/// Exact number of complete cells of the cyclic arrangement of `n`
/// pseudohyperplanes in projective `d`-space:
///
/// C_d(n) = C(d, n−d) + C(d−1, n−d−1) + Σ_{i=0}^{d−2} C(n−1, i)
///
/// This counts projective cells; the corresponding signed-tope count is
/// twice this value.
pub fn cyclic_complete_cells(p: BoundParams) -> Result<u64> {
    let d = p.d as u64;
    let n = p.n as u64;
    let mut total = binomial(d, n as i64 - d as i64)?;
    total = total
        .checked_add(binomial(d - 1, n as i64 - d as i64 - 1)?)
        .ok_or(Error::Overflow)?;
    total = total
        .checked_add(tail_sum(d, n)?)
        .ok_or(Error::Overflow)?;
    Ok(total)
}

/// The conjectured maximum, Σ_{i=0}^{d−2} C(n−1, i). Coincides with
/// `cyclic_complete_cells` once n ≥ 2d+1.
pub fn roudneff_bound(p: BoundParams) -> Result<u64> {
    tail_sum(p.d as u64, p.n as u64)
}

fn tail_sum(d: u64, n: u64) -> Result<u64> {
    let mut sum = 0u64;
    for i in 0..d.saturating_sub(1) {
        sum = sum
            .checked_add(binomial(n - 1, i as i64)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(sum)
}
