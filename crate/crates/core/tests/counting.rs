use proptest::prelude::*;
use rmatch_core::count::count_rooted;
use rmatch_core::series::path_count_series;
use rmatch_core::{brute_force_count, count_r_matchings, enumerate_trees, BigCount, Tree};

fn prufer_tree(seq: &[usize], n: usize) -> Tree {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::new(n, &edges).unwrap()
}

/// Removes one leaf and relabels the remaining vertices densely.
fn without_vertex(t: &Tree, leaf: usize) -> Tree {
    let relabel = |v: usize| if v > leaf { v - 1 } else { v };
    let edges: Vec<_> = t
        .edges()
        .iter()
        .filter(|&&(u, v)| u != leaf && v != leaf)
        .map(|&(u, v)| (relabel(u), relabel(v)))
        .collect();
    Tree::new(t.n() - 1, &edges).unwrap()
}

#[test]
fn dp_matches_brute_force_on_all_small_trees() {
    for n in 1..=10 {
        for t in enumerate_trees(n).unwrap() {
            for r in 1..=8 {
                assert_eq!(
                    count_r_matchings(&t, r).unwrap(),
                    brute_force_count(&t, r).unwrap(),
                    "n = {n}, r = {r}, {t:?}"
                );
            }
        }
    }
}

#[test]
fn floor_and_equality_case() {
    for n in 1..=12 {
        for t in enumerate_trees(n).unwrap() {
            for r in 1..=6u32 {
                let c = count_r_matchings(&t, r).unwrap();
                assert!(c >= BigCount::from(n));
                assert_eq!(
                    c == BigCount::from(n),
                    t.diameter() <= r as usize + 1,
                    "n = {n}, r = {r}"
                );
            }
        }
    }
}

#[test]
fn antitone_in_r() {
    for n in 2..=11 {
        for t in enumerate_trees(n).unwrap() {
            let counts: Vec<BigCount> = (1..=10).map(|r| count_r_matchings(&t, r).unwrap()).collect();
            assert!(counts.windows(2).all(|w| w[1] <= w[0]));
        }
    }
}

#[test]
fn removing_a_leaf_never_increases() {
    for n in 3..=10 {
        for t in enumerate_trees(n).unwrap() {
            for leaf in t.leaves().collect::<Vec<_>>() {
                let smaller = without_vertex(&t, leaf);
                for r in 1..=5 {
                    assert!(count_r_matchings(&smaller, r).unwrap() <= count_r_matchings(&t, r).unwrap());
                }
            }
        }
    }
}

#[test]
fn paths_follow_the_recurrence() {
    for r in 1..=12u32 {
        let series = path_count_series(r, 200).unwrap();
        for n in 1..=200 {
            let t = Tree::path(n).unwrap();
            assert_eq!(&count_r_matchings(&t, r).unwrap(), series.get(n).unwrap(), "r = {r}, n = {n}");
        }
    }
}

#[test]
fn path_series_cross_checked_by_brute_force() {
    for r in 1..=6u32 {
        let series = path_count_series(r, 18).unwrap();
        for n in 1..=18 {
            let t = Tree::path(n).unwrap();
            assert_eq!(&brute_force_count(&t, r).unwrap(), series.get(n).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn random_trees_match_oracle(seq in proptest::collection::vec(0usize..16, 14), r in 1u32..9) {
        let t = prufer_tree(&seq, 16);
        prop_assert_eq!(count_r_matchings(&t, r).unwrap(), brute_force_count(&t, r).unwrap());
    }

    #[test]
    fn root_choice_is_irrelevant(seq in proptest::collection::vec(0usize..30, 28), r in 1u32..12, root in 0usize..30) {
        let t = prufer_tree(&seq, 30);
        prop_assert_eq!(count_rooted(&t, r, root).unwrap(), count_r_matchings(&t, r).unwrap());
    }

    #[test]
    fn edge_order_is_irrelevant(seq in proptest::collection::vec(0usize..20, 18), r in 1u32..8, rot in 0usize..19) {
        let t = prufer_tree(&seq, 20);
        let mut edges = t.edges().to_vec();
        edges.rotate_left(rot);
        let edges: Vec<_> = edges.into_iter().map(|(u, v)| (v, u)).collect();
        let u = Tree::new(20, &edges).unwrap();
        prop_assert_eq!(count_r_matchings(&t, r).unwrap(), count_r_matchings(&u, r).unwrap());
    }
}
