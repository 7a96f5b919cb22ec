//! Counting `r`-matchings.
//!
//! [`count_r_matchings`] is a subtree dynamic program. For each vertex `v`
//! it keeps a [`DpProfile`]: entry `d < r` counts edge sets of the processed
//! part whose nearest selected endpoint is exactly `d` away from `v`, entry
//! `r` counts those with no selected edge or none closer than `r`. Any path
//! between edges in different child subtrees runs through `v`, so the
//! pairwise distance constraint only needs these saturated distances.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::tree::Tree;
use crate::{Error, Result};

/// Exact, arbitrary-precision matching count.
pub type BigCount = BigUint;

/// Largest tree accepted by [`brute_force_count`] (`2^(n-1)` subsets).
pub const BRUTE_FORCE_MAX_N: usize = 26;

/// Counts indexed by saturated distance state `0..=r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpProfile {
    counts: Vec<BigCount>,
}

impl DpProfile {
    /// A lone vertex: one empty configuration, nothing selected.
    pub fn singleton(r: u32) -> Self {
        let mut counts = vec![BigCount::zero(); r as usize + 1];
        counts[r as usize] = BigCount::one();
        DpProfile { counts }
    }

    pub fn r(&self) -> u32 {
        (self.counts.len() - 1) as u32
    }

    pub fn counts(&self) -> &[BigCount] {
        &self.counts
    }

    pub fn total(&self) -> BigCount {
        self.counts.iter().sum()
    }

    /// Attaches a processed child subtree through the edge `(v, child)`,
    /// covering both "edge not selected" and "edge selected".
    ///
    /// Seen from `v`, a child in state `d` sits at `D = min(d + 1, r)`.
    /// Without the connecting edge the merge is feasible iff `a + D >= r` and
    /// lands in `min(a, D)`; this is summed with suffix sums, `O(r)` per
    /// merge. With the edge both sides must be in state `r`, landing in 0.
    pub fn absorb_child(&mut self, child: &DpProfile) {
        let r = self.counts.len() - 1;
        debug_assert_eq!(child.counts.len(), r + 1);
        let acc = &self.counts;

        // shifted[k] for k in 1..=r; index 0 unused
        let mut shifted = vec![BigCount::zero(); r + 1];
        for (d, c) in child.counts.iter().enumerate() {
            shifted[(d + 1).min(r)] += c;
        }
        let shifted_suffix = suffix_sums(&shifted);
        let acc_suffix = suffix_sums(acc);

        let mut next = vec![BigCount::zero(); r + 1];
        for (t, slot) in next.iter_mut().enumerate() {
            // a = t, D >= max(t, r - t)
            let lo = t.max(r - t);
            if !acc[t].is_zero() && lo <= r {
                *slot += &acc[t] * &shifted_suffix[lo];
            }
            // D = t (t >= 1), a > t, a >= r - t
            if t >= 1 && !shifted[t].is_zero() {
                let lo = (t + 1).max(r - t);
                if lo <= r {
                    *slot += &shifted[t] * &acc_suffix[lo];
                }
            }
        }
        next[0] += &acc[r] * &child.counts[r];
        self.counts = next;
    }
}

fn suffix_sums(values: &[BigCount]) -> Vec<BigCount> {
    let mut out = vec![BigCount::zero(); values.len() + 1];
    for i in (0..values.len()).rev() {
        out[i] = &out[i + 1] + &values[i];
    }
    out
}

fn check_radius(r: u32) -> Result<()> {
    if r == 0 {
        Err(Error::InvalidRadius { r, min: 1 })
    } else {
        Ok(())
    }
}

/// Number of edge sets (the empty set included) whose edges are pairwise at
/// distance at least `r`.
pub fn count_r_matchings(tree: &Tree, r: u32) -> Result<BigCount> {
    let count = count_rooted(tree, r, 0)?;
    #[cfg(feature = "reroot-check")]
    {
        let n = tree.n() as u64;
        let root = (n.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407) >> 33)
            % n;
        let again = count_rooted(tree, r, root as usize)?;
        assert_eq!(count, again, "root 0 and root {root} disagree");
    }
    Ok(count)
}

/// The root profile of the dynamic program with an explicit root. The total
/// does not depend on the root.
pub fn root_profile(tree: &Tree, r: u32, root: usize) -> Result<DpProfile> {
    check_radius(r)?;
    let n = tree.n();
    if root >= n {
        return Err(Error::InvalidVertex { vertex: root, n });
    }

    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in tree.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }

    let mut profiles: Vec<Option<DpProfile>> = vec![None; n];
    for &v in order.iter().rev() {
        let mut profile = DpProfile::singleton(r);
        for &w in tree.neighbors(v) {
            if parent[w] == v && w != v {
                let child = profiles[w].take().expect("children finish first");
                profile.absorb_child(&child);
            }
        }
        profiles[v] = Some(profile);
    }
    Ok(profiles[root].take().expect("root finishes last"))
}

pub fn count_rooted(tree: &Tree, r: u32, root: usize) -> Result<BigCount> {
    Ok(root_profile(tree, r, root)?.total())
}

/// Counts `r`-matchings by scanning all `2^(n-1)` edge subsets. Test oracle.
pub fn brute_force_count(tree: &Tree, r: u32) -> Result<BigCount> {
    check_radius(r)?;
    let n = tree.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::TooLargeForBruteForce {
            n,
            max: BRUTE_FORCE_MAX_N,
        });
    }
    let m = tree.edge_count();
    let dist = tree.distance_matrix();
    let edges = tree.edges();
    let mut conflicts = vec![0u32; m];
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            let gap = dist[a][c].min(dist[a][d]).min(dist[b][c]).min(dist[b][d]);
            if gap < r as usize {
                conflicts[i] |= 1 << j;
            }
        }
    }

    let mut count: u64 = 0;
    for subset in 0u32..(1u32 << m) {
        let mut rest = subset;
        let mut ok = true;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if conflicts[i] & subset != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            count += 1;
        }
    }
    Ok(BigCount::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigCount {
        BigCount::from(x)
    }

    #[test]
    fn examples() {
        let p5 = Tree::path(5).unwrap();
        assert_eq!(count_r_matchings(&p5, 2).unwrap(), big(6));
        let k19 = Tree::star(10).unwrap();
        assert_eq!(count_r_matchings(&k19, 5).unwrap(), big(10));
        let p7 = Tree::spider(3, 2).unwrap();
        assert_eq!(count_r_matchings(&p7, 2).unwrap(), big(13));
        for r in 1..6 {
            assert_eq!(count_r_matchings(&Tree::path(1).unwrap(), r).unwrap(), big(1));
        }
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_count(&Tree::path(4).unwrap(), 2).unwrap(), big(4));
        assert_eq!(
            brute_force_count(&Tree::spider(3, 3).unwrap(), 2).unwrap(),
            big(39)
        );
        assert_eq!(brute_force_count(&Tree::star(4).unwrap(), 1).unwrap(), big(4));
    }

    #[test]
    fn zero_radius_rejected() {
        let t = Tree::path(3).unwrap();
        assert_eq!(
            count_r_matchings(&t, 0),
            Err(Error::InvalidRadius { r: 0, min: 1 })
        );
        assert!(brute_force_count(&t, 0).is_err());
    }

    #[test]
    fn brute_force_size_guard() {
        let t = Tree::path(27).unwrap();
        assert_eq!(
            brute_force_count(&t, 2),
            Err(Error::TooLargeForBruteForce { n: 27, max: 26 })
        );
    }

    #[test]
    fn r1_paths_are_fibonacci() {
        let mut fib = (1u64, 2u64);
        for n in 1..40 {
            let count = count_r_matchings(&Tree::path(n).unwrap(), 1).unwrap();
            assert_eq!(count, big(fib.0), "n = {n}");
            fib = (fib.1, fib.0 + fib.1);
        }
    }

    #[test]
    fn profile_sums_to_count() {
        let t = Tree::spider(3, 3).unwrap();
        let profile = root_profile(&t, 2, 0).unwrap();
        assert_eq!(profile.r(), 2);
        assert_eq!(profile.total(), big(39));
        // selecting a centre edge puts the root in state 0: three ways, each
        // forcing the other legs to avoid their middle edge (2 * 2 options)
        assert_eq!(profile.counts()[0], big(12));
    }

    #[test]
    fn every_root_agrees() {
        let t = Tree::new(8, &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6), (6, 7)]).unwrap();
        for r in 1..6 {
            let expected = brute_force_count(&t, r).unwrap();
            for root in 0..t.n() {
                assert_eq!(count_rooted(&t, r, root).unwrap(), expected);
            }
        }
    }

    #[test]
    fn large_tree_is_fast_enough() {
        let t = Tree::path(2000).unwrap();
        let c = count_r_matchings(&t, 50).unwrap();
        assert!(c.bits() > 10);
    }
}
