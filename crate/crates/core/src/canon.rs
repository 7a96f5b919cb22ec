//! Canonical codes for free trees.
//!
//! A tree is rooted at its centre (or at each of its two centres), each
//! rooted tree is written as a preorder level sequence with children ordered
//! by decreasing code, and the lexicographically larger of the candidates is
//! kept. Two trees have equal codes iff they are isomorphic.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    pub fn of(tree: &Tree) -> Self {
        centers(tree)
            .into_iter()
            .map(|root| rooted_code(tree, root))
            .max()
            .map(CanonicalCode)
            .expect("every tree has a centre")
    }

    /// The preorder depth sequence, root at depth 0.
    pub fn levels(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Rebuilds a tree whose vertex `i` is the `i`-th entry of the sequence.
    pub fn to_tree(&self) -> Tree {
        tree_from_levels(&self.0)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, level) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{level}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseCodeError(pub String);

impl fmt::Display for ParseCodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid canonical code: {}", self.0)
    }
}

impl FromStr for CanonicalCode {
    type Err = ParseCodeError;

    /// Parses a comma-separated level sequence and re-canonicalises it, so
    /// any valid level sequence of the tree is accepted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let levels = s
            .split(',')
            .map(|tok| tok.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ParseCodeError(s.into()))?;
        let valid = levels.first() == Some(&0)
            && levels[1..].iter().all(|&l| l >= 1)
            && levels.windows(2).all(|w| w[1] <= w[0] + 1);
        if !valid {
            return Err(ParseCodeError(s.into()));
        }
        Ok(CanonicalCode::of(&tree_from_levels(&levels)))
    }
}

/// Vertex `i` gets depth `levels[i]`; its parent is the latest earlier vertex
/// one level up.
pub(crate) fn tree_from_levels(levels: &[u32]) -> Tree {
    let mut parents = Vec::with_capacity(levels.len().saturating_sub(1));
    let mut last_at_level: Vec<usize> = Vec::new();
    for (i, &level) in levels.iter().enumerate() {
        let level = level as usize;
        if i > 0 {
            parents.push(last_at_level[level - 1]);
        }
        last_at_level.truncate(level);
        last_at_level.push(i);
    }
    Tree::from_parents(&parents)
}

/// One or two central vertices (midpoints of a longest path).
pub fn centers(tree: &Tree) -> Vec<usize> {
    let from_zero = tree.distances_from(0);
    let u = argmax(&from_zero);
    let from_u = tree.distances_from(u);
    let v = argmax(&from_u);
    let diameter = from_u[v];

    // walk back from v towards u
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = *tree
            .neighbors(cur)
            .iter()
            .find(|&&w| from_u[w] + 1 == from_u[cur])
            .expect("BFS predecessor");
        path.push(cur);
    }
    if diameter.is_multiple_of(2) {
        vec![path[diameter / 2]]
    } else {
        vec![path[diameter / 2], path[diameter / 2 + 1]]
    }
}

fn argmax(values: &[usize]) -> usize {
    let mut best = 0;
    for (i, &x) in values.iter().enumerate() {
        if x > values[best] {
            best = i;
        }
    }
    best
}

fn rooted_code(tree: &Tree, root: usize) -> Vec<u32> {
    let n = tree.n();
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

    let mut codes: Vec<Option<Vec<u32>>> = vec![None; n];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u32>> = tree
            .neighbors(v)
            .iter()
            .filter(|&&w| parent[w] == v)
            .map(|&w| codes[w].take().expect("child processed first"))
            .collect();
        children.sort_unstable_by(|a, b| b.cmp(a));
        let mut code = Vec::with_capacity(1 + children.iter().map(Vec::len).sum::<usize>());
        code.push(0);
        for child in children {
            code.extend(child.into_iter().map(|l| l + 1));
        }
        codes[v] = Some(code);
    }
    codes[root].take().expect("root processed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_star_codes() {
        let p5 = CanonicalCode::of(&Tree::path(5).unwrap());
        assert_eq!(p5.levels(), &[0, 1, 2, 1, 2]);
        let k14 = CanonicalCode::of(&Tree::star(5).unwrap());
        assert_eq!(k14.levels(), &[0, 1, 1, 1, 1]);
        assert_eq!(alloc::format!("{p5}"), "0,1,2,1,2");
    }

    #[test]
    fn relabelling_does_not_change_code() {
        let a = Tree::new(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)]).unwrap();
        let b = Tree::new(6, &[(5, 3), (3, 0), (0, 2), (3, 1), (1, 4)]).unwrap();
        assert_eq!(CanonicalCode::of(&a), CanonicalCode::of(&b));
    }

    #[test]
    fn bicentral_trees() {
        let p6 = CanonicalCode::of(&Tree::path(6).unwrap());
        assert_eq!(p6.n(), 6);
        assert_eq!(CanonicalCode::of(&p6.to_tree()), p6);
        assert_eq!(centers(&Tree::path(6).unwrap()).len(), 2);
        assert_eq!(centers(&Tree::path(1).unwrap()), vec![0]);
        assert_eq!(centers(&Tree::path(2).unwrap()).len(), 2);
    }

    #[test]
    fn parse_roundtrip() {
        let code = CanonicalCode::of(&Tree::spider(3, 3).unwrap());
        let text = alloc::format!("{code}");
        assert_eq!(text.parse::<CanonicalCode>().unwrap(), code);
        // non-canonical but valid level sequence of P4
        let p4: CanonicalCode = "0,1,2,3".parse().unwrap();
        assert_eq!(p4, CanonicalCode::of(&Tree::path(4).unwrap()));
        assert!("1,2".parse::<CanonicalCode>().is_err());
        assert!("0,2".parse::<CanonicalCode>().is_err());
        assert!("0,x".parse::<CanonicalCode>().is_err());
    }
}
