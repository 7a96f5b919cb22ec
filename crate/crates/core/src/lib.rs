//! Exact counting of distance-`r` matchings in trees.
//!
//! An `r`-matching of a tree is a set of edges in which every pair of edges is
//! at distance at least `r`, where the distance between two edges is the
//! shortest vertex distance between an endpoint of one and an endpoint of the
//! other (incident edges are at distance 0). The empty set always counts.
//!
//! The crate is `no_std` and only needs `alloc`:
//!
//! - [`tree`]: validated trees, named families, distances.
//! - [`canon`]: canonical codes for free trees.
//! - [`enumerate`]: one representative per isomorphism class of `n`-vertex trees.
//! - [`count`]: subtree dynamic program and a brute-force oracle.
//! - [`series`]: exact path counts from the linear recurrence.
//! - [`asymptotics`]: growth rates, bounds and the constants table.
//! - [`extremal`]: exhaustive extremal search, spider comparisons and the
//!   leaf-reduction transform.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod asymptotics;
pub mod canon;
pub mod count;
mod error;
pub mod enumerate;
pub mod extremal;
pub mod series;
pub mod tree;

pub use canon::CanonicalCode;
pub use count::{brute_force_count, count_r_matchings, BigCount};
pub use enumerate::{enumerate_trees, FreeTrees};
pub use error::{Error, NotApplicable, Result};
pub use series::PathSeries;
pub use tree::{EdgeId, Tree};
