use std::collections::BTreeSet;

use proptest::prelude::*;
use rmatch_core::{enumerate_trees, CanonicalCode, EdgeId, Tree};

/// Decodes a Prüfer sequence over `0..n` into an edge list.
fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Every labelled tree on `n >= 2` vertices.
fn all_labelled_trees(n: usize) -> impl Iterator<Item = Tree> {
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total).map(move |mut idx| {
        let mut seq = Vec::with_capacity(len);
        for _ in 0..len {
            seq.push(idx % n);
            idx /= n;
        }
        Tree::new(n, &prufer_edges(&seq, n)).unwrap()
    })
}

fn edge_set(t: &Tree, perm: &[usize]) -> BTreeSet<(usize, usize)> {
    t.edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn brute_isomorphic(a: &Tree, b: &Tree, perms: &[Vec<usize>]) -> bool {
    let target = edge_set(b, &(0..b.n()).collect::<Vec<_>>());
    perms.iter().any(|p| edge_set(a, p) == target)
}

#[test]
fn class_counts_match_prufer_oracle() {
    for n in 2..=9 {
        let codes: BTreeSet<CanonicalCode> = all_labelled_trees(n).map(|t| CanonicalCode::of(&t)).collect();
        let enumerated: Vec<CanonicalCode> = enumerate_trees(n).unwrap().map(|t| CanonicalCode::of(&t)).collect();
        let distinct: BTreeSet<_> = enumerated.iter().cloned().collect();
        assert_eq!(distinct.len(), enumerated.len(), "duplicate class at n = {n}");
        assert_eq!(distinct, codes, "n = {n}");
    }
}

#[test]
fn codes_agree_with_brute_force_isomorphism() {
    for n in 2..=7 {
        let perms = permutations(n);
        let trees: Vec<Tree> = all_labelled_trees(n).step_by(7).take(60).collect();
        for a in &trees {
            for b in &trees {
                assert_eq!(
                    CanonicalCode::of(a) == CanonicalCode::of(b),
                    brute_isomorphic(a, b, &perms),
                    "{a:?} vs {b:?}"
                );
            }
        }
    }
}

#[test]
fn edge_distance_symmetric_with_triangle_slack() {
    for n in 2..=8 {
        for t in enumerate_trees(n).unwrap() {
            let m = t.edge_count();
            let mut d = vec![vec![0; m]; m];
            for e in 0..m {
                for f in 0..m {
                    d[e][f] = t.edge_distance(EdgeId(e), EdgeId(f)).unwrap();
                }
            }
            for e in 0..m {
                for f in 0..m {
                    assert_eq!(d[e][f], d[f][e]);
                    for g in 0..m {
                        assert!(d[e][g] <= d[e][f] + d[f][g] + 2);
                    }
                }
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let a: Vec<Tree> = enumerate_trees(11).unwrap().collect();
    let b: Vec<Tree> = enumerate_trees(11).unwrap().collect();
    assert_eq!(a, b);
}

proptest! {
    #[test]
    fn spider_special_cases(a in 1usize..12, b in 1usize..12) {
        let one_leg = Tree::spider(a, 1).unwrap();
        prop_assert_eq!(CanonicalCode::of(&one_leg), CanonicalCode::of(&Tree::path(a + 1).unwrap()));
        let unit_legs = Tree::spider(1, b).unwrap();
        prop_assert_eq!(CanonicalCode::of(&unit_legs), CanonicalCode::of(&Tree::star(b + 1).unwrap()));
        let s = Tree::spider(a, b).unwrap();
        prop_assert_eq!(s.n(), a * b + 1);
        prop_assert_eq!(s.diameter(), if b >= 2 { 2 * a } else { a });
    }

    #[test]
    fn code_survives_relabelling(seq in proptest::collection::vec(0usize..12, 10), shift in 0usize..12) {
        let n = 12;
        let t = Tree::new(n, &prufer_edges(&seq, n)).unwrap();
        let perm: Vec<usize> = (0..n).map(|v| (v * 5 + shift) % n).collect();
        let relabelled: Vec<(usize, usize)> = t.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let u = Tree::new(n, &relabelled).unwrap();
        prop_assert_eq!(CanonicalCode::of(&t), CanonicalCode::of(&u));
        prop_assert_eq!(t.diameter(), u.diameter());
        let code = CanonicalCode::of(&t);
        prop_assert_eq!(CanonicalCode::of(&code.to_tree()), code);
    }
}
