//! Growth rates, bounds and the constants table.
//!
//! - `beta_r`: the root in `(1, 2)` of `x^(r+1) - x^r - 1`, the per-vertex
//!   growth of path counts.
//! - `s`: the positive root of `(s+1) ln(s+1) = s + r/2`, with
//!   `alpha_r = exp(1/(s+1))`.
//! - upper bound `(s+1) (e^(1/r) alpha_r)^(n-1)` on the count of any
//!   `n`-vertex tree, lower bound `(e^(-6/r^2) alpha_r)^(n-1)` achieved by a
//!   subdivided star.
//!
//! Everything that can overflow is evaluated in the log domain.

use alloc::vec::Vec;
use core::cmp::Ordering;

use libm::{ceil, exp, expm1, fabs, floor, log, pow};
use num_bigint::BigUint;
use num_traits::{FromPrimitive, ToPrimitive};

use crate::count::BigCount;
use crate::series::PathSeries;
use crate::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-13;

/// Above this `r` the characteristic polynomial is only evaluated as
/// `r ln x + ln(x - 1)`.
const DIRECT_EVAL_MAX_R: u32 = 60;

fn check_radius(r: u32, min: u32) -> Result<()> {
    if r < min {
        Err(Error::InvalidRadius { r, min })
    } else {
        Ok(())
    }
}

/// `r ln x + ln(x - 1)` for `x = e^ln_x > 1`; positive iff
/// `x^(r+1) - x^r - 1 > 0`.
pub fn char_poly_log_margin(r: u32, ln_x: f64) -> f64 {
    r as f64 * ln_x + log(expm1(ln_x))
}

/// Sign of `x^(r+1) - x^r - 1` for `x > 1`.
pub fn char_poly_sign(r: u32, x: f64) -> Ordering {
    let value = if r > DIRECT_EVAL_MAX_R {
        char_poly_log_margin(r, log(x))
    } else {
        pow(x, r as f64) * (x - 1.0) - 1.0
    };
    value.partial_cmp(&0.0).unwrap_or(Ordering::Less)
}

/// The dominant root of `x^(r+1) - x^r - 1`: bisection on `[1, 2]` down to
/// width `tol`, then two Newton steps kept inside the final bracket.
pub fn beta(r: u32, tol: f64) -> Result<f64> {
    check_radius(r, 1)?;
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        match char_poly_sign(r, mid) {
            Ordering::Greater => hi = mid,
            Ordering::Less => lo = mid,
            Ordering::Equal => return Ok(mid),
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..2 {
        // Newton on g(x) = r ln x + ln(x - 1)
        let g = r as f64 * log(x) + log(x - 1.0);
        let dg = r as f64 / x + 1.0 / (x - 1.0);
        let next = x - g / dg;
        if next > lo && next < hi {
            x = next;
        }
    }
    Ok(x)
}

/// Positive root of `(s+1) ln(s+1) - s - r/2`, by bisection on `[0, r]`.
pub fn solve_s(r: u32, tol: f64) -> Result<f64> {
    check_radius(r, 2)?;
    let half_r = r as f64 / 2.0;
    let g = |s: f64| (s + 1.0) * log(s + 1.0) - s - half_r;
    let (mut lo, mut hi) = (0.0f64, r as f64);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let s = 0.5 * (lo + hi);
    let next = s - g(s) / log(s + 1.0);
    Ok(if next >= lo && next <= hi { next } else { s })
}

/// `alpha_r = exp(1/(s+1))`.
pub fn alpha(r: u32) -> Result<f64> {
    let s = solve_s(r, DEFAULT_TOL)?;
    Ok(exp(1.0 / (s + 1.0)))
}

/// The other expression for `alpha_r`: `(s+1)^(1/(r/2+s))`.
pub fn alpha_power_form(r: u32) -> Result<f64> {
    let s = solve_s(r, DEFAULT_TOL)?;
    Ok(pow(s + 1.0, 1.0 / (r as f64 / 2.0 + s)))
}

/// Natural log of a positive big integer, keeping the top 64 bits.
pub fn ln_big(value: &BigUint) -> f64 {
    let bits = value.bits();
    if bits <= 1000 {
        return log(value.to_f64().unwrap_or(f64::INFINITY));
    }
    let shift = bits - 64;
    let top = (value >> shift).to_f64().expect("64-bit value fits in f64");
    log(top) + shift as f64 * core::f64::consts::LN_2
}

/// Exact comparison of a big integer with a float.
pub fn cmp_big_f64(value: &BigUint, x: f64) -> Ordering {
    if x.is_nan() {
        return Ordering::Less;
    }
    if x < 0.0 {
        return Ordering::Greater;
    }
    if x.is_infinite() {
        return Ordering::Less;
    }
    let whole = floor(x);
    let whole_big = BigUint::from_f64(whole).expect("finite non-negative");
    match value.cmp(&whole_big) {
        Ordering::Equal if x > whole => Ordering::Less,
        other => other,
    }
}

/// Which closed form for the path constant matches the empirical limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormMatch {
    /// `beta^(2r) / (beta^r + r + 1)`
    Paper,
    /// `beta^(2r+1) / (beta^r + r + 1)`
    Alt,
    Both,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthConstant {
    pub r: u32,
    pub n_probe: usize,
    pub beta: f64,
    /// `s_r(P_n) / beta^(n-1)` at `n = n_probe`.
    pub empirical: f64,
    /// `beta^(2r) / (beta^r + r + 1)`.
    pub closed_paper: f64,
    /// `beta^(2r+1) / (beta^r + r + 1)`.
    pub closed_alt: f64,
}

impl GrowthConstant {
    pub fn matching_form(&self, tol: f64) -> ClosedFormMatch {
        let paper = fabs(self.closed_paper - self.empirical) <= tol;
        let alt = fabs(self.closed_alt - self.empirical) <= tol;
        match (paper, alt) {
            (true, true) => ClosedFormMatch::Both,
            (true, false) => ClosedFormMatch::Paper,
            (false, true) => ClosedFormMatch::Alt,
            (false, false) => ClosedFormMatch::Neither,
        }
    }
}

/// `s_r(P_n) / beta^(n-1)` evaluated as `exp(ln s - (n-1) ln beta)`.
pub fn empirical_ratio(count: &BigCount, n: usize, beta: f64) -> f64 {
    exp(ln_big(count) - (n as f64 - 1.0) * log(beta))
}

/// The sequence of ratios `s_r(P_n) / beta^(n-1)` for `n = 1..=n_max`.
pub fn ratio_sequence(r: u32, n_max: usize) -> Result<Vec<f64>> {
    let b = beta(r, DEFAULT_TOL)?;
    let mut series = PathSeries::new(r)?;
    series.extend_to(n_max);
    Ok((1..=n_max)
        .map(|n| empirical_ratio(&series.values()[n], n, b))
        .collect())
}

pub fn growth_constant(r: u32, n_probe: usize) -> Result<GrowthConstant> {
    growth_constant_with_tol(r, n_probe, DEFAULT_TOL)
}

pub fn growth_constant_with_tol(r: u32, n_probe: usize, tol: f64) -> Result<GrowthConstant> {
    if n_probe < 50 {
        return Err(Error::ParameterOutOfRange {
            name: "n_probe",
            value: n_probe as u64,
            min: 50,
        });
    }
    let b = beta(r, tol)?;
    let mut series = PathSeries::new(r)?;
    let empirical = empirical_ratio(series.value(n_probe), n_probe, b);
    let ln_b = log(b);
    let ln_denominator = log(exp(r as f64 * ln_b) + r as f64 + 1.0);
    Ok(GrowthConstant {
        r,
        n_probe,
        beta: b,
        empirical,
        closed_paper: exp(2.0 * r as f64 * ln_b - ln_denominator),
        closed_alt: exp((2.0 * r as f64 + 1.0) * ln_b - ln_denominator),
    })
}

/// Probe length used for table rows: long enough for the subdominant roots
/// to have died out at double precision.
pub fn default_probe(r: u32) -> usize {
    300 + 100 * r as usize
}

/// Natural log of `(s+1) (e^(1/r) alpha_r)^(n-1)`.
pub fn ln_upper_bound(r: u32, n: usize) -> Result<f64> {
    let s = solve_s(r, DEFAULT_TOL)?;
    Ok(log(s + 1.0) + (n as f64 - 1.0) * (1.0 / r as f64 + 1.0 / (s + 1.0)))
}

pub fn upper_bound(r: u32, n: usize) -> Result<f64> {
    Ok(exp(ln_upper_bound(r, n)?))
}

/// Natural log of `(e^(-6/r^2) alpha_r)^(n-1)`.
pub fn ln_lower_bound(r: u32, n: usize) -> Result<f64> {
    let s = solve_s(r, DEFAULT_TOL)?;
    let rf = r as f64;
    Ok((n as f64 - 1.0) * (1.0 / (s + 1.0) - 6.0 / (rf * rf)))
}

pub fn lower_bound(r: u32, n: usize) -> Result<f64> {
    Ok(exp(ln_lower_bound(r, n)?))
}

fn half_up(r: u32) -> usize {
    (r as usize).div_ceil(2)
}

/// `(a - ceil(r/2) + 1)^(1/a)`: per-edge growth of a long spider whose legs
/// have `a` edges.
pub fn leg_growth(r: u32, a: usize) -> f64 {
    let per_leg = (a + 1).saturating_sub(half_up(r)) as f64;
    pow(per_leg, 1.0 / a as f64)
}

/// The leg length `a >= ceil(r/2)` maximising [`leg_growth`]; ties go to the
/// smaller `a`.
pub fn best_leg_length(r: u32) -> Result<usize> {
    check_radius(r, 2)?;
    let first = half_up(r);
    let mut best = (first, leg_growth(r, first));
    for a in first + 1..=first + 2 * r as usize + 16 {
        let g = leg_growth(r, a);
        if g > best.1 {
            best = (a, g);
        }
    }
    Ok(best.0)
}

/// Leg length of the lower-bound construction, `ceil(r/2 + s + 1/2)`.
pub fn construction_leg_length(r: u32) -> Result<usize> {
    let s = solve_s(r, DEFAULT_TOL)?;
    Ok(ceil(r as f64 / 2.0 + s + 0.5) as usize)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstantsRecord {
    pub r: u32,
    pub s: f64,
    pub alpha: f64,
    pub beta: f64,
    pub best_a: usize,
    pub spider_growth: f64,
    pub c_empirical: f64,
    pub c_paper: f64,
    pub c_alt: f64,
}

pub fn table_row(r: u32) -> Result<ConstantsRecord> {
    table_row_with_tol(r, DEFAULT_TOL)
}

pub fn table_row_with_tol(r: u32, tol: f64) -> Result<ConstantsRecord> {
    check_radius(r, 2)?;
    let s = solve_s(r, tol)?;
    let best_a = best_leg_length(r)?;
    let growth = growth_constant_with_tol(r, default_probe(r), tol)?;
    Ok(ConstantsRecord {
        r,
        s,
        alpha: exp(1.0 / (s + 1.0)),
        beta: growth.beta,
        best_a,
        spider_growth: leg_growth(r, best_a),
        c_empirical: growth.empirical,
        c_paper: growth.closed_paper,
        c_alt: growth.closed_alt,
    })
}

pub fn table(r_min: u32, r_max: u32) -> Result<Vec<ConstantsRecord>> {
    check_radius(r_min, 2)?;
    if r_max < r_min {
        return Err(Error::ParameterOutOfRange {
            name: "r_max",
            value: r_max as u64,
            min: r_min as u64,
        });
    }
    (r_min..=r_max).map(table_row).collect()
}

/// Truncates a non-negative value to `places` decimals. Values within 1e-9
/// of the next boundary (decimal literals stored just below it) round up.
pub fn truncate_decimals(x: f64, places: i32) -> f64 {
    let scale = pow(10.0, places as f64);
    floor(x * scale + 1e-9) / scale
}
