//! Extremal questions over all trees of a given order.
//!
//! [`search_extremal`] scans one representative per isomorphism class and
//! records the largest and smallest `r`-matching counts together with every
//! class attaining them. Partial scans are combined with
//! [`SearchAccumulator::merge`], which is associative and commutative, so a
//! caller may split the enumeration and reduce in any order.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::asymptotics::ln_big;
use crate::canon::CanonicalCode;
use crate::count::{count_r_matchings, BigCount};
use crate::enumerate::{enumerate_trees_with_limit, DEFAULT_LIMIT};
use crate::tree::Tree;
use crate::{Error, NotApplicable, Result};

/// Radii for which it is open whether paths maximise the count.
pub const OPEN_RADII: [u32; 5] = [3, 4, 5, 7, 9];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub n: usize,
    pub r: u32,
    pub max_count: BigCount,
    pub min_count: BigCount,
    /// Sorted ascending.
    pub argmax_codes: Vec<CanonicalCode>,
    /// Sorted ascending.
    pub argmin_codes: Vec<CanonicalCode>,
    pub path_count: BigCount,
    pub path_is_max: bool,
    pub trees_examined: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Extreme {
    count: BigCount,
    codes: BTreeSet<CanonicalCode>,
}

impl Extreme {
    fn absorb(slot: &mut Option<Extreme>, other: Extreme, prefer_larger: bool) {
        match slot {
            None => *slot = Some(other),
            Some(cur) => {
                if cur.count == other.count {
                    cur.codes.extend(other.codes);
                } else if (other.count > cur.count) == prefer_larger {
                    *cur = other;
                }
            }
        }
    }
}

/// Running max/min over a set of trees of one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchAccumulator {
    r: u32,
    n: usize,
    max: Option<Extreme>,
    min: Option<Extreme>,
    trees_examined: u64,
}

impl SearchAccumulator {
    pub fn new(r: u32, n: usize) -> Self {
        SearchAccumulator {
            r,
            n,
            max: None,
            min: None,
            trees_examined: 0,
        }
    }

    pub fn observe(&mut self, tree: &Tree) -> Result<()> {
        debug_assert_eq!(tree.n(), self.n);
        let count = count_r_matchings(tree, self.r)?;
        self.observe_counted(CanonicalCode::of(tree), count);
        Ok(())
    }

    pub fn observe_counted(&mut self, code: CanonicalCode, count: BigCount) {
        let single = |count: BigCount| Extreme {
            count,
            codes: BTreeSet::from([code.clone()]),
        };
        Extreme::absorb(&mut self.max, single(count.clone()), true);
        Extreme::absorb(&mut self.min, single(count), false);
        self.trees_examined += 1;
    }

    pub fn merge(mut self, other: SearchAccumulator) -> SearchAccumulator {
        debug_assert_eq!((self.r, self.n), (other.r, other.n));
        if let Some(m) = other.max {
            Extreme::absorb(&mut self.max, m, true);
        }
        if let Some(m) = other.min {
            Extreme::absorb(&mut self.min, m, false);
        }
        self.trees_examined += other.trees_examined;
        self
    }

    pub fn trees_examined(&self) -> u64 {
        self.trees_examined
    }

    /// Closes the scan; `None` if nothing was observed.
    pub fn finish(self) -> Result<Option<SearchReport>> {
        let (Some(max), Some(min)) = (self.max, self.min) else {
            return Ok(None);
        };
        let path_count = count_r_matchings(&Tree::path(self.n)?, self.r)?;
        Ok(Some(SearchReport {
            n: self.n,
            r: self.r,
            path_is_max: path_count == max.count,
            max_count: max.count,
            min_count: min.count,
            argmax_codes: max.codes.into_iter().collect(),
            argmin_codes: min.codes.into_iter().collect(),
            path_count,
            trees_examined: self.trees_examined,
        }))
    }
}

/// Exact max and min of the `r`-matching count over all `n`-vertex trees.
pub fn search_extremal(r: u32, n: usize) -> Result<SearchReport> {
    search_extremal_with_limit(r, n, DEFAULT_LIMIT)
}

pub fn search_extremal_with_limit(r: u32, n: usize, limit: usize) -> Result<SearchReport> {
    if r == 0 {
        return Err(Error::InvalidRadius { r, min: 1 });
    }
    let mut acc = SearchAccumulator::new(r, n);
    for tree in enumerate_trees_with_limit(n, limit)? {
        acc.observe(&tree)?;
    }
    Ok(acc.finish()?.expect("at least one tree per order"))
}

/// Evidence for the open radii: one report per `n = 1..=n_max`.
pub fn probe_problem_4_4(r: u32, n_max: usize) -> Result<Vec<SearchReport>> {
    check_open_radius(r)?;
    (1..=n_max).map(|n| search_extremal(r, n)).collect()
}

pub fn check_open_radius(r: u32) -> Result<()> {
    if OPEN_RADII.contains(&r) {
        Ok(())
    } else {
        Err(Error::InvalidProbeRadius { r })
    }
}

/// Smallest `b <= b_max` for which the spider with `b` legs of `a` edges has
/// strictly more `r`-matchings than the path on the same number of vertices.
pub fn spider_vs_path(r: u32, a: usize, b_max: usize) -> Result<Option<usize>> {
    for b in 1..=b_max {
        let spider = Tree::spider(a, b)?;
        let path = Tree::path(spider.n())?;
        if count_r_matchings(&spider, r)? > count_r_matchings(&path, r)? {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

/// `s_r(T_{a,b})^(1/(ab))`, the per-edge growth of a finite spider.
pub fn spider_growth_estimate(r: u32, a: usize, b: usize) -> Result<f64> {
    let spider = Tree::spider(a, b)?;
    let count = count_r_matchings(&spider, r)?;
    Ok(libm::exp(ln_big(&count) / (a * b) as f64))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformOutcome {
    pub input_code: CanonicalCode,
    pub output_code: CanonicalCode,
    pub input_count: BigCount,
    pub output_count: BigCount,
    /// The input has exactly three leaves and `n >= r + 3`, so the count
    /// must strictly increase.
    pub strict: bool,
    pub output: Tree,
}

/// Vertices of the smallest subtree containing every vertex of degree at
/// least 3. Empty for paths.
pub fn branching_core(tree: &Tree) -> Vec<bool> {
    let n = tree.n();
    let mut inside: Vec<bool> = (0..n).map(|v| tree.degree(v) >= 3).collect();
    if !inside.iter().any(|&b| b) {
        return inside;
    }
    // peel leaves that are not branch vertices
    inside.iter_mut().for_each(|b| *b = true);
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !inside[v] || tree.degree(v) >= 3 {
            continue;
        }
        inside[v] = false;
        for &w in tree.neighbors(v) {
            if inside[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    inside
}

/// A maximal path hanging off a branch vertex, listed outward.
#[derive(Debug, Clone, PartialEq, Eq)]
struct AttachedPath {
    vertices: Vec<usize>,
}

impl AttachedPath {
    fn len(&self) -> usize {
        self.vertices.len()
    }

    fn first(&self) -> usize {
        self.vertices[0]
    }

    fn last(&self) -> usize {
        *self.vertices.last().expect("non-empty")
    }
}

fn attached_paths(tree: &Tree, core: &[bool], v: usize) -> Vec<AttachedPath> {
    let mut paths = Vec::new();
    for &start in tree.neighbors(v) {
        if core[start] {
            continue;
        }
        let mut vertices = vec![start];
        let (mut prev, mut cur) = (v, start);
        while let Some(&next) = tree.neighbors(cur).iter().find(|&&w| w != prev) {
            vertices.push(next);
            prev = cur;
            cur = next;
        }
        paths.push(AttachedPath { vertices });
    }
    paths
}

/// Leaf-reduction transform: at a leaf `v` of the branching core, take the
/// two shortest paths hanging off `v`, detach the shorter one from `v` and
/// reattach it at the far end of the other. Every `r`-matching survives the
/// rewiring when the two paths have at most `r + 1` vertices together.
///
/// Declined when the input is a path, when some path hanging off `v` has at
/// least `r + 1` vertices, or when every pair of them has more than `r + 1`
/// vertices. Leaves of the core are tried in increasing label order.
pub fn transform_leaf_reduction(tree: &Tree, r: u32) -> Result<TransformOutcome> {
    if r == 0 {
        return Err(Error::InvalidRadius { r, min: 1 });
    }
    if tree.is_path() {
        return Err(Error::NotApplicable(NotApplicable::Path));
    }
    let core = branching_core(tree);
    let core_degree = |v: usize| tree.neighbors(v).iter().filter(|&&w| core[w]).count();
    let r_us = r as usize;

    let mut first_reason = None;
    for v in (0..tree.n()).filter(|&v| core[v] && core_degree(v) <= 1) {
        let mut paths = attached_paths(tree, &core, v);
        paths.sort_by_key(|p| (p.len(), p.first()));
        let longest = paths.iter().map(AttachedPath::len).max().unwrap_or(0);
        let reason = if longest > r_us {
            Some(NotApplicable::LongAttachedPath)
        } else if paths.len() < 2 || paths[0].len() + paths[1].len() > r_us + 1 {
            Some(NotApplicable::PairsTooLong)
        } else {
            None
        };
        if let Some(reason) = reason {
            first_reason.get_or_insert(reason);
            continue;
        }

        // keep the longer of the two shortest in place; equal lengths keep
        // the lower-labelled one
        let (a, b) = (&paths[0], &paths[1]);
        let (kept, moved) = if a.len() > b.len() || (a.len() == b.len() && a.first() < b.first()) {
            (a, b)
        } else {
            (b, a)
        };
        let detach = (v.min(moved.first()), v.max(moved.first()));
        let edges: Vec<(usize, usize)> = tree
            .edges()
            .iter()
            .map(|&(x, y)| {
                if (x.min(y), x.max(y)) == detach {
                    (kept.last(), moved.first())
                } else {
                    (x, y)
                }
            })
            .collect();
        let output = Tree::new(tree.n(), &edges)?;
        let leaves = tree.leaves().count();
        return Ok(TransformOutcome {
            input_code: CanonicalCode::of(tree),
            output_code: CanonicalCode::of(&output),
            input_count: count_r_matchings(tree, r)?,
            output_count: count_r_matchings(&output, r)?,
            strict: leaves == 3 && tree.n() >= r_us + 3,
            output,
        });
    }
    Err(Error::NotApplicable(
        first_reason.unwrap_or(NotApplicable::PairsTooLong),
    ))
}
