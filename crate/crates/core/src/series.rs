//! Exact `r`-matching counts of paths.
//!
//! With `s(n)` the count for the `n`-vertex path and `s(0) = 1`:
//! `s(n) = n` for `1 <= n <= r`, and `s(n) = s(n-1) + s(n-r-1)` beyond,
//! splitting on whether an end edge is used.

use alloc::vec::Vec;

use crate::count::BigCount;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSeries {
    r: u32,
    values: Vec<BigCount>,
}

/// `s_r(P_n)` for `n = 0..=n_max`.
pub fn path_count_series(r: u32, n_max: usize) -> Result<PathSeries> {
    let mut series = PathSeries::new(r)?;
    series.extend_to(n_max);
    Ok(series)
}

impl PathSeries {
    /// A series holding only `s(0) = 1`.
    pub fn new(r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidRadius { r, min: 1 });
        }
        Ok(PathSeries {
            r,
            values: alloc::vec![BigCount::from(1u32)],
        })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Largest `n` currently stored.
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[BigCount] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&BigCount> {
        self.values.get(n)
    }

    /// `s_r(P_n)`, extending the table if needed.
    pub fn value(&mut self, n: usize) -> &BigCount {
        self.extend_to(n);
        &self.values[n]
    }

    pub fn extend_to(&mut self, n_max: usize) {
        let r = self.r as usize;
        self.values.reserve(n_max.saturating_sub(self.n_max()));
        while self.values.len() <= n_max {
            let n = self.values.len();
            let next = if n <= r {
                BigCount::from(n)
            } else {
                &self.values[n - 1] + &self.values[n - r - 1]
            };
            self.values.push(next);
        }
    }
}

/// Checks `s(2n) = s(n-r) s(n) + sum_{i=0..=r} s(n-2r+i) s(n-i)` exactly,
/// splitting `P_{2n}` on which (if any) of its `r + 1` middle edges is used.
pub fn verify_doubling(r: u32, n: usize) -> Result<bool> {
    if r == 0 {
        return Err(Error::InvalidRadius { r, min: 1 });
    }
    let r_us = r as usize;
    if n < 2 * r_us {
        return Err(Error::ParameterOutOfRange {
            name: "n",
            value: n as u64,
            min: 2 * r as u64,
        });
    }
    let series = path_count_series(r, 2 * n)?;
    let s = series.values();
    let mut rhs = &s[n - r_us] * &s[n];
    for i in 0..=r_us {
        rhs += &s[n - 2 * r_us + i] * &s[n - i];
    }
    Ok(s[2 * n] == rhs)
}
