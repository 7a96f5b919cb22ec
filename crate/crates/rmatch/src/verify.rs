//! Invariant suites run by `rmatch verify` and the acceptance harness.
//!
//! Each check function covers one property at a fixed desk scale and
//! returns a single [`Check`]; suites group them.

use std::cmp::Ordering;

use rmatch_core::asymptotics::{
    beta, char_poly_log_margin, cmp_big_f64, construction_leg_length, growth_constant, lower_bound,
    ratio_sequence, table_row, truncate_decimals, upper_bound, ClosedFormMatch, DEFAULT_TOL,
};
use rmatch_core::extremal::{spider_vs_path, SearchReport, OPEN_RADII};
use rmatch_core::series::{path_count_series, verify_doubling};
use rmatch_core::{brute_force_count, count_r_matchings, enumerate_trees, BigCount, CanonicalCode, Result, Tree};

use crate::report::{Check, VerifyReport, FORM_TOL};
use crate::search::{par_probe, par_search_extremal};

pub const SUITES: [&str; 7] = [
    "oracle",
    "observation-1-1",
    "theorem-3-3",
    "doubling",
    "table",
    "bounds",
    "growth-constant",
];

/// Number of free trees on `n` vertices, `n = 0..=16`.
pub const FREE_TREE_COUNTS: [u64; 17] = [
    1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
];

/// Published constants, truncated to 4 decimals: `(r, s, alpha, beta, a, growth)`.
pub const REFERENCE_TABLE: [(u32, f64, f64, f64, usize, f64); 10] = [
    (2, 1.7182, 1.4446, 1.4655, 3, 1.4422),
    (3, 2.1809, 1.3693, 1.3802, 5, 1.3195),
    (4, 2.5911, 1.3210, 1.3247, 5, 1.3195),
    (5, 2.9673, 1.2866, 1.2851, 6, 1.2599),
    (6, 3.3191, 1.2605, 1.2554, 6, 1.2599),
    (7, 3.6523, 1.2397, 1.2320, 8, 1.2228),
    (8, 3.9706, 1.2228, 1.2131, 8, 1.2228),
    (9, 4.2766, 1.2086, 1.1974, 10, 1.1962),
    (10, 4.5723, 1.1965, 1.1842, 10, 1.1962),
    (11, 4.8592, 1.1861, 1.1729, 11, 1.1769),
];

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn failed(name: &str, err: rmatch_core::Error) -> Check {
    check(name, false, format!("error: {err}"))
}

fn wrap(name: &str, body: impl FnOnce() -> Result<(bool, String)>) -> Check {
    match body() {
        Ok((passed, detail)) => check(name, passed, detail),
        Err(e) => failed(name, e),
    }
}

/// DP against the subset oracle on every tree with `n <= 10`, `r = 1..=8`.
pub fn oracle() -> Check {
    wrap("dp-equals-brute-force", || {
        let mut cases = 0u64;
        for n in 1..=10 {
            for t in enumerate_trees(n)? {
                for r in 1..=8 {
                    if count_r_matchings(&t, r)? != brute_force_count(&t, r)? {
                        return Ok((false, format!("mismatch at n = {n}, r = {r}: {}", CanonicalCode::of(&t))));
                    }
                    cases += 1;
                }
            }
        }
        Ok((true, format!("{cases} (tree, r) pairs, n <= 10, r <= 8")))
    })
}

fn small_diameter_codes(n: usize, r: u32) -> Result<Vec<CanonicalCode>> {
    let mut codes: Vec<CanonicalCode> = enumerate_trees(n)?
        .filter(|t| t.diameter() <= r as usize + 1)
        .map(|t| CanonicalCode::of(&t))
        .collect();
    codes.sort();
    Ok(codes)
}

/// Minimum over all trees is `n`, attained exactly by diameter `<= r + 1`.
pub fn minimum_is_order(threads: usize) -> Check {
    wrap("minimum-equals-n", || {
        let mut scans = 0;
        for r in 1..=6u32 {
            for n in 1..=12 {
                let rep = par_search_extremal(r, n, 18, threads)?;
                if rep.min_count != BigCount::from(n) {
                    return Ok((false, format!("r = {r}, n = {n}: min {}", rep.min_count)));
                }
                if rep.argmin_codes != small_diameter_codes(n, r)? {
                    return Ok((false, format!("r = {r}, n = {n}: argmin differs from diameter <= r+1 class")));
                }
                scans += 1;
            }
        }
        Ok((true, format!("{scans} exhaustive scans, n <= 12, r <= 6")))
    })
}

/// For `r = 2` the path is the unique maximiser, except the ties at `n <= 4`.
pub fn paths_maximise_induced(threads: usize) -> Check {
    wrap("paths-maximise-r2", || {
        let mut examined = 0;
        for n in 2..=16 {
            let rep = par_search_extremal(2, n, 18, threads)?;
            let expected: Vec<CanonicalCode> = if n <= 4 {
                let mut all: Vec<_> = enumerate_trees(n)?.map(|t| CanonicalCode::of(&t)).collect();
                all.sort();
                all
            } else {
                vec![CanonicalCode::of(&Tree::path(n)?)]
            };
            if !rep.path_is_max || rep.argmax_codes != expected {
                return Ok((false, format!("n = {n}: argmax {:?}", rep.argmax_codes)));
            }
            examined += rep.trees_examined;
        }
        Ok((true, format!("{examined} trees, 2 <= n <= 16")))
    })
}

/// Reference values truncated to 4 decimals for `r = 2..=11`.
pub fn table_rows() -> Vec<Check> {
    REFERENCE_TABLE
        .iter()
        .map(|&(r, s, alpha, beta, a, growth)| {
            wrap(&format!("table-row-r{r}"), || {
                let row = table_row(r)?;
                let t = |x| truncate_decimals(x, 4);
                let same = |x: f64, y: f64| (t(x) - y).abs() < 1e-9;
                let ok = same(row.s, s)
                    && same(row.alpha, alpha)
                    && same(row.beta, beta)
                    && row.best_a == a
                    && same(row.spider_growth, growth);
                Ok((
                    ok,
                    format!(
                        "s {:.4} alpha {:.4} beta {:.4} a {} growth {:.4}",
                        t(row.s),
                        t(row.alpha),
                        t(row.beta),
                        row.best_a,
                        t(row.spider_growth)
                    ),
                ))
            })
        })
        .collect()
}

/// The even-length path identity for `r <= 10`, `2r <= n <= 100`.
pub fn doubling() -> Check {
    wrap("doubling-identity", || {
        let mut cases = 0;
        for r in 1..=10u32 {
            for n in 2 * r as usize..=100 {
                if !verify_doubling(r, n)? {
                    return Ok((false, format!("fails at r = {r}, n = {n}")));
                }
                cases += 1;
            }
        }
        Ok((true, format!("{cases} cases, r <= 10, 2r <= n <= 100")))
    })
}

/// Ratio `s_2(P_n) / beta^(n-1)` settles, and which closed form it matches.
pub fn path_constant() -> Check {
    wrap("path-constant-r2", || {
        let ratios = ratio_sequence(2, 300)?;
        let delta = (ratios[299] - ratios[298]).abs();
        let g = growth_constant(2, 300)?;
        let form = g.matching_form(FORM_TOL);
        let ok = delta < 1e-8 && (truncate_decimals(g.empirical, 4) - 1.3134).abs() < 1e-9 && form == ClosedFormMatch::Alt;
        Ok((
            ok,
            format!(
                "limit {:.10} (delta {delta:.1e} at n = 300); beta^(2r+1)/(beta^r+r+1) = {:.10}, beta^(2r)/(beta^r+r+1) = {:.10}; matching form: {form:?}",
                g.empirical, g.closed_alt, g.closed_paper
            ),
        ))
    })
}

/// `(r / ln r)^(1/r) < beta_r < ((1 + 1/sqrt(ln r)) r / ln r)^(1/r)`, in logs.
pub fn beta_window() -> Vec<Check> {
    [100u32, 1000]
        .into_iter()
        .map(|r| {
            wrap(&format!("beta-window-r{r}"), || {
                let rf = r as f64;
                let ln_core = rf.ln() - rf.ln().ln();
                let ln_lo = ln_core / rf;
                let ln_hi = ((1.0 + 1.0 / rf.ln().sqrt()).ln() + ln_core) / rf;
                let ln_b = beta(r, DEFAULT_TOL)?.ln();
                // the root is bracketed by sign changes of the polynomial as well
                let bracketed = char_poly_log_margin(r, ln_lo) < 0.0 && char_poly_log_margin(r, ln_hi) > 0.0;
                Ok((
                    ln_lo < ln_b && ln_b < ln_hi && bracketed,
                    format!("{:.7} < {:.7} < {:.7}", ln_lo.exp(), ln_b.exp(), ln_hi.exp()),
                ))
            })
        })
        .collect()
}

/// Every tree count with `r = 2..=8`, `n <= 14` sits under the upper bound.
pub fn upper_bound_holds() -> Check {
    wrap("upper-bound", || {
        let mut counted = 0;
        for n in 1..=14 {
            let trees: Vec<Tree> = enumerate_trees(n)?.collect();
            for r in 2..=8u32 {
                let ub = upper_bound(r, n)?.next_up();
                for t in &trees {
                    let c = count_r_matchings(t, r)?;
                    if cmp_big_f64(&c, ub) == Ordering::Greater {
                        return Ok((false, format!("r = {r}, n = {n}: {c} > {ub}")));
                    }
                    counted += 1;
                }
            }
        }
        Ok((true, format!("{counted} counts, r = 2..=8, n <= 14")))
    })
}

/// The long-leg spider construction reaches the lower bound.
pub fn lower_bound_construction() -> Check {
    wrap("lower-bound-spiders", || {
        let mut detail = Vec::new();
        for r in [20u32, 40, 60] {
            let a = construction_leg_length(r)?;
            for b in [2, 5, 10] {
                let c = count_r_matchings(&Tree::spider(a, b)?, r)?;
                let lb = lower_bound(r, a * b + 1)?;
                if cmp_big_f64(&c, lb) == Ordering::Less {
                    return Ok((false, format!("r = {r}, a = {a}, b = {b}: {c} < {lb}")));
                }
            }
            detail.push(format!("r = {r}: a = {a}"));
        }
        Ok((true, detail.join(", ")))
    })
}

/// At `r = 6`, spiders with legs of 6 edges eventually beat the path.
pub fn spider_witness() -> Check {
    wrap("spider-beats-path-r6", || {
        Ok(match spider_vs_path(6, 6, 300)? {
            Some(b) => (true, format!("witness b = {b}, n = {}", 6 * b + 1)),
            None => (false, "no witness up to b = 300".into()),
        })
    })
}

/// Completeness and count correctness of a probe report list.
pub fn probe_report_checks(r: u32, n_max: usize, reports: &[SearchReport]) -> Result<(bool, String)> {
    if reports.len() != n_max {
        return Ok((false, format!("{} reports for n <= {n_max}", reports.len())));
    }
    let series = path_count_series(r, n_max)?;
    for (i, rep) in reports.iter().enumerate() {
        let n = i + 1;
        let complete = rep.n == n
            && rep.r == r
            && rep.trees_examined == FREE_TREE_COUNTS[n]
            && !rep.argmax_codes.is_empty()
            && !rep.argmin_codes.is_empty()
            && rep.min_count >= BigCount::from(n)
            && rep.path_count <= rep.max_count
            && Some(&rep.path_count) == series.get(n);
        if !complete {
            return Ok((false, format!("incomplete report at n = {n}")));
        }
        let recounts = [(&rep.argmax_codes, &rep.max_count), (&rep.argmin_codes, &rep.min_count)];
        for (codes, expected) in recounts {
            for code in codes {
                let c = brute_force_count(&code.to_tree(), r)?;
                if &c != expected {
                    return Ok((false, format!("n = {n}: {code} recounts to {c}, reported {expected}")));
                }
            }
        }
    }
    let beaten: Vec<usize> = reports.iter().filter(|s| !s.path_is_max).map(|s| s.n).collect();
    Ok((
        true,
        if beaten.is_empty() {
            format!("path maximal for all n <= {n_max}")
        } else {
            format!("path beaten at n = {beaten:?}")
        },
    ))
}

/// Evidence reports for the open radii, `n <= 14`.
pub fn open_radius_probe(threads: usize) -> Vec<Check> {
    OPEN_RADII
        .iter()
        .map(|&r| {
            wrap(&format!("probe-r{r}"), || {
                let reports = par_probe(r, 14, 18, threads)?;
                probe_report_checks(r, 14, &reports)
            })
        })
        .collect()
}

pub fn run_suite(name: &str, threads: usize) -> Option<VerifyReport> {
    let checks = match name {
        "oracle" => vec![oracle()],
        "observation-1-1" => vec![minimum_is_order(threads)],
        "theorem-3-3" => vec![paths_maximise_induced(threads)],
        "doubling" => vec![doubling()],
        "table" => table_rows(),
        "bounds" => vec![upper_bound_holds(), lower_bound_construction(), spider_witness()],
        "growth-constant" => {
            let mut v = vec![path_constant()];
            v.extend(beta_window());
            v
        }
        _ => return None,
    };
    Some(VerifyReport::new(name, checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suites_pass() {
        for name in ["doubling", "table", "growth-constant"] {
            let rep = run_suite(name, 2).unwrap();
            assert!(rep.passed, "{rep:?}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", 1).is_none());
    }

    #[test]
    fn probe_checks_catch_gaps() {
        let reports = par_probe(3, 6, 18, 1).unwrap();
        assert!(probe_report_checks(3, 6, &reports).unwrap().0);
        assert!(!probe_report_checks(3, 7, &reports).unwrap().0);
        let mut bad = reports.clone();
        bad[5].max_count += 1u32;
        assert!(!probe_report_checks(3, 6, &bad).unwrap().0);
    }

    #[test]
    fn free_tree_counts_match_enumeration() {
        for (n, &expected) in FREE_TREE_COUNTS.iter().enumerate().take(13).skip(1) {
            assert_eq!(enumerate_trees(n).unwrap().count() as u64, expected);
        }
    }
}
