//! Validated trees over the vertex set `0..n`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Position of an edge in [`Tree::edges`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

/// An immutable tree on the vertices `0..n`.
///
/// Edges keep the order they were given in; [`EdgeId`] indexes into that
/// order. Every constructor validates connectivity and acyclicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree from `n` and an edge list, rejecting anything that is
    /// not a tree on exactly `0..n`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTree);
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::LabelOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if adjacency[u].contains(&v) {
                return Err(Error::DuplicateEdge { u, v });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        if edges.len() > n - 1 {
            return Err(Error::EdgeCount {
                expected: n - 1,
                found: edges.len(),
            });
        }

        let mut dsu = DisjointSets::new(n);
        for &(u, v) in edges {
            if !dsu.union(u, v) {
                return Err(Error::Cycle { u, v });
            }
        }
        let components = n - edges.len();
        if components > 1 {
            return Err(Error::Disconnected { components });
        }

        Ok(Tree {
            edges: edges.to_vec(),
            adjacency,
        })
    }

    /// Builds a tree from a parent array: `parents[i]` is the parent of
    /// vertex `i + 1` and must be smaller than `i + 1`.
    pub(crate) fn from_parents(parents: &[usize]) -> Tree {
        let n = parents.len() + 1;
        let mut adjacency = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(n - 1);
        for (i, &p) in parents.iter().enumerate() {
            let child = i + 1;
            debug_assert!(p < child);
            edges.push((p, child));
            adjacency[p].push(child);
            adjacency[child].push(p);
        }
        Tree { edges, adjacency }
    }

    /// The path `0 - 1 - ... - (n-1)`; edge `i` is `(i, i+1)`.
    pub fn path(n: usize) -> Result<Tree> {
        check_min("n", n as u64, 1)?;
        Ok(Self::from_parents(&(0..n - 1).collect::<Vec<_>>()))
    }

    /// The star `K_{1,n-1}` centred at vertex 0; edge `i` is `(0, i+1)`.
    pub fn star(n: usize) -> Result<Tree> {
        check_min("n", n as u64, 1)?;
        Ok(Self::from_parents(&vec![0; n - 1]))
    }

    /// The subdivided star with `legs` legs of `leg_len` edges each, centred
    /// at vertex 0. Leg `j` occupies vertices `1 + j*leg_len ..= (j+1)*leg_len`
    /// in order outward from the centre, and edges are listed leg by leg.
    pub fn spider(leg_len: usize, legs: usize) -> Result<Tree> {
        check_min("a", leg_len as u64, 1)?;
        check_min("b", legs as u64, 1)?;
        Self::spider_with_legs(&vec![leg_len; legs])
    }

    /// A spider with arbitrary leg lengths (all at least 1), same layout as
    /// [`Tree::spider`].
    pub fn spider_with_legs(leg_lens: &[usize]) -> Result<Tree> {
        let mut parents = Vec::new();
        for &len in leg_lens {
            check_min("leg length", len as u64, 1)?;
            let mut prev = 0;
            for _ in 0..len {
                parents.push(prev);
                prev = parents.len();
            }
        }
        Ok(Self::from_parents(&parents))
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<(usize, usize)> {
        self.edges.get(e.0).copied().ok_or(Error::InvalidEdge {
            index: e.0,
            edges: self.edges.len(),
        })
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(|&v| self.degree(v) == 1)
    }

    pub fn is_path(&self) -> bool {
        self.adjacency.iter().all(|nb| nb.len() <= 2)
    }

    /// BFS distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs vertex distances, `n` BFS runs.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n()).map(|v| self.distances_from(v)).collect()
    }

    /// Edge distance: the minimum vertex distance between an endpoint of `e`
    /// and an endpoint of `f`. Incident edges are at distance 0.
    pub fn edge_distance(&self, e: EdgeId, f: EdgeId) -> Result<usize> {
        let (a, b) = self.edge(e)?;
        let (c, d) = self.edge(f)?;
        let from_a = self.distances_from(a);
        let from_b = self.distances_from(b);
        Ok(from_a[c].min(from_a[d]).min(from_b[c]).min(from_b[d]))
    }

    /// Number of edges on a longest path.
    pub fn diameter(&self) -> usize {
        let (far, _) = self.farthest_from(0);
        self.farthest_from(far).1
    }

    fn farthest_from(&self, source: usize) -> (usize, usize) {
        let dist = self.distances_from(source);
        let mut best = (source, 0);
        for (v, &d) in dist.iter().enumerate() {
            if d > best.1 {
                best = (v, d);
            }
        }
        best
    }
}

fn check_min(name: &'static str, value: u64, min: u64) -> Result<()> {
    if value < min {
        Err(Error::ParameterOutOfRange { name, value, min })
    } else {
        Ok(())
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let t = Tree::new(1, &[]).unwrap();
        assert_eq!(t.n(), 1);
        assert_eq!(t.diameter(), 0);
        assert_eq!(t, Tree::path(1).unwrap());
    }

    #[test]
    fn path_from_edges() {
        let t = Tree::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(t, Tree::path(4).unwrap());
        assert!(t.is_path());
    }

    #[test]
    fn rejects_extra_edge() {
        let err = Tree::new(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap_err();
        assert_eq!(
            err,
            Error::EdgeCount {
                expected: 3,
                found: 4
            }
        );
    }

    #[test]
    fn named_errors() {
        assert_eq!(Tree::new(0, &[]), Err(Error::EmptyTree));
        assert_eq!(
            Tree::new(3, &[(0, 1), (1, 3)]),
            Err(Error::LabelOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Tree::new(3, &[(0, 1), (1, 1)]),
            Err(Error::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            Tree::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 1, v: 0 })
        );
        assert_eq!(
            Tree::new(4, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::Cycle { u: 2, v: 0 })
        );
        assert_eq!(
            Tree::new(4, &[(0, 1), (2, 3)]),
            Err(Error::Disconnected { components: 2 })
        );
    }

    #[test]
    fn spider_shapes() {
        let s = Tree::spider(3, 3).unwrap();
        assert_eq!(s.n(), 10);
        assert_eq!(s.degree(0), 3);
        assert_eq!(s.diameter(), 6);

        let k13 = Tree::spider(1, 3).unwrap();
        assert_eq!(k13, Tree::star(4).unwrap());

        assert_eq!(Tree::spider(4, 3).unwrap().diameter(), 8);
        assert_eq!(Tree::spider(5, 1).unwrap(), Tree::path(6).unwrap());
        assert!(Tree::spider(0, 2).is_err());
        assert!(Tree::spider(2, 0).is_err());
    }

    #[test]
    fn diameters() {
        for n in 1..12 {
            assert_eq!(Tree::path(n).unwrap().diameter(), n - 1);
        }
        assert_eq!(Tree::star(6).unwrap().diameter(), 2);
    }

    #[test]
    fn edge_distances_on_paths() {
        let p4 = Tree::path(4).unwrap();
        assert_eq!(p4.edge_distance(EdgeId(0), EdgeId(1)), Ok(0));
        assert_eq!(p4.edge_distance(EdgeId(0), EdgeId(2)), Ok(1));
        let p7 = Tree::path(7).unwrap();
        assert_eq!(p7.edge_distance(EdgeId(0), EdgeId(5)), Ok(4));
        assert_eq!(
            p4.edge_distance(EdgeId(0), EdgeId(3)),
            Err(Error::InvalidEdge { index: 3, edges: 3 })
        );
    }
}
