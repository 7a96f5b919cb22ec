//! Enumeration of free trees, one per isomorphism class.
//!
//! Trees are produced as level sequences of centre-rooted trees in the order
//! of Wright, Richmond, Odlyzko and McKay: start from the path rooted at its
//! centre, step through rooted level sequences in decreasing order, and jump
//! over runs of sequences that are not the canonical rooting of a free tree.

use alloc::vec::Vec;

use crate::canon::tree_from_levels;
use crate::tree::Tree;
use crate::{Error, Result};

/// Largest `n` accepted by [`enumerate_trees`].
pub const DEFAULT_LIMIT: usize = 18;

/// Free trees on `n` vertices, `1 <= n <= DEFAULT_LIMIT`.
pub fn enumerate_trees(n: usize) -> Result<FreeTrees> {
    enumerate_trees_with_limit(n, DEFAULT_LIMIT)
}

pub fn enumerate_trees_with_limit(n: usize, limit: usize) -> Result<FreeTrees> {
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    if n > limit {
        return Err(Error::EnumerationLimit { n, limit });
    }
    Ok(FreeTrees {
        sequences: LevelSequences::new(n),
    })
}

/// Resume point of a [`LevelSequences`] stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    n: usize,
    state: State,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum State {
    Small(bool),
    Layout(Option<Vec<u32>>),
}

/// Level sequences of free trees on `n` vertices, in generation order.
#[derive(Debug, Clone)]
pub struct LevelSequences {
    n: usize,
    state: State,
}

impl LevelSequences {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let state = if n <= 2 {
            State::Small(false)
        } else {
            let mut layout: Vec<u32> = (0..=(n / 2) as u32).collect();
            layout.extend(1..n.div_ceil(2) as u32);
            State::Layout(Some(layout))
        };
        LevelSequences { n, state }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint {
            n: self.n,
            state: self.state.clone(),
        }
    }

    /// Continues from a checkpoint; the resumed stream yields exactly what
    /// the original would have yielded after the checkpoint was taken.
    pub fn resume(checkpoint: Checkpoint) -> Self {
        LevelSequences {
            n: checkpoint.n,
            state: checkpoint.state,
        }
    }

    /// Every `parts`-th sequence starting from index `part`. The `parts`
    /// streams for `part in 0..parts` are disjoint and cover the whole
    /// enumeration.
    pub fn partition(self, part: usize, parts: usize) -> impl Iterator<Item = Vec<u32>> {
        assert!(parts > 0 && part < parts);
        self.skip(part).step_by(parts)
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        match &mut self.state {
            State::Small(done) => {
                if *done {
                    return None;
                }
                *done = true;
                Some((0..self.n as u32).map(|i| i.min(1)).collect())
            }
            State::Layout(slot) => {
                let layout = slot.take()?;
                let tree = next_free(layout);
                *slot = next_rooted(&tree, None);
                Some(tree)
            }
        }
    }
}

/// [`LevelSequences`] materialised as [`Tree`]s.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    sequences: LevelSequences,
}

impl FreeTrees {
    pub fn into_level_sequences(self) -> LevelSequences {
        self.sequences
    }

    pub fn checkpoint(&self) -> Checkpoint {
        self.sequences.checkpoint()
    }

    pub fn resume(checkpoint: Checkpoint) -> Self {
        FreeTrees {
            sequences: LevelSequences::resume(checkpoint),
        }
    }

    /// Disjoint sub-stream; see [`LevelSequences::partition`].
    pub fn partition(self, part: usize, parts: usize) -> impl Iterator<Item = Tree> {
        self.sequences
            .partition(part, parts)
            .map(|levels| tree_from_levels(&levels))
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        self.sequences.next().map(|levels| tree_from_levels(&levels))
    }
}

/// Next rooted level sequence in decreasing order, modifying from position
/// `p` (default: the last entry above level 1).
fn next_rooted(layout: &[u32], p: Option<usize>) -> Option<Vec<u32>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    let mut next = layout.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Splits off the first subtree of the root: returns its sequence (rebased to
/// depth 0) and the sequence of what remains.
fn split(layout: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let m = layout
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &l)| l == 1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let mut rest = Vec::with_capacity(layout.len() - m + 1);
    rest.push(0);
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

/// Returns `candidate` if it is the canonical centre rooting of a free tree,
/// otherwise the next sequence that is.
fn next_free(candidate: Vec<u32>) -> Vec<u32> {
    let (left, rest) = split(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
            valid = false;
        }
    if valid {
        return candidate;
    }

    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p)).expect("jump target exists");
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        let suffix = (height + 1) as usize;
        for (slot, level) in next[len - suffix..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    next
}
