use std::cmp::Ordering;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{invalid, Result};

/// Parameters shared by the constructions. `k` drives every cluster
/// threshold `n^{r/k}`; `d → r` is the distance contract, `s` the clustering
/// distance and `f` the fault budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpannerParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub r: usize,
    pub s: usize,
    pub f: usize,
}

impl SpannerParams {
    /// Defaults to the classic `1 → 2k−1` contract with `s = k` and no faults.
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            k,
            d: 1,
            r: (2 * k).saturating_sub(1),
            s: k,
            f: 0,
        }
    }

    pub fn with_contract(mut self, d: usize, r: usize) -> Self {
        self.d = d;
        self.r = r;
        self
    }

    pub fn with_s(mut self, s: usize) -> Self {
        self.s = s;
        self
    }

    pub fn with_faults(mut self, f: usize) -> Self {
        self.f = f;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.k < 1 {
            return Err(invalid("k must be at least 1"));
        }
        if self.r < self.d {
            return Err(invalid(format!("r = {} must be at least d = {}", self.r, self.d)));
        }
        Ok(())
    }

    /// `R`: `(k+1)/2` for odd `k`, `k/2` for even `k`.
    pub fn half_radius(&self) -> usize {
        self.k.div_ceil(2)
    }

    /// `I_odd`.
    pub fn odd(&self) -> usize {
        self.k % 2
    }
}

/// Compares `a^p` with `b^q` exactly.
pub fn pow_cmp(a: u64, p: u32, b: u64, q: u32) -> Ordering {
    match ((a as u128).checked_pow(p), (b as u128).checked_pow(q)) {
        (Some(x), Some(y)) => x.cmp(&y),
        _ => BigUint::from(a).pow(p).cmp(&BigUint::from(b).pow(q)),
    }
}

/// `size ≥ n^{r/k}`, evaluated as `size^k ≥ n^r`.
pub fn meets_ball_threshold(size: usize, n: usize, r: usize, k: usize) -> bool {
    pow_cmp(size as u64, k as u32, n as u64, r as u32) != Ordering::Less
}

/// `count > 0.1·n^{e/k}`, evaluated as `(10·count)^k > n^e`.
pub fn exceeds_tenth_threshold(count: usize, n: usize, e: usize, k: usize) -> bool {
    pow_cmp(10 * count as u64, k as u32, n as u64, e as u32) == Ordering::Greater
}
