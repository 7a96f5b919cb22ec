use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a tree needs at least one vertex")]
    EmptyTree,
    #[error("vertex {vertex} is out of range for a tree on {n} vertices")]
    LabelOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("expected {expected} edges (n - 1), found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("edge ({u}, {v}) closes a cycle")]
    Cycle { u: usize, v: usize },
    #[error("input is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("edge index {index} is out of range ({edges} edges)")]
    InvalidEdge { index: usize, edges: usize },
    #[error("vertex {vertex} is out of range ({n} vertices)")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("r must be ≥ {min}, got {r}")]
    InvalidRadius { r: u32, min: u32 },
    #[error("{name} must be ≥ {min}, got {value}")]
    ParameterOutOfRange {
        name: &'static str,
        value: u64,
        min: u64,
    },
    #[error("tree has {n} vertices; brute force supports at most {max}")]
    TooLargeForBruteForce { n: usize, max: usize },
    #[error("n = {n} exceeds the enumeration limit {limit}")]
    EnumerationLimit { n: usize, limit: usize },
    #[error("r = {r} is not one of the open cases 3, 4, 5, 7, 9")]
    InvalidProbeRadius { r: u32 },
    #[error("transform not applicable: {0}")]
    NotApplicable(NotApplicable),
}

/// Why the leaf-reduction transform declined a tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum NotApplicable {
    #[error("the tree is a path")]
    Path,
    #[error("an attached path has at least r + 1 vertices")]
    LongAttachedPath,
    #[error("every pair of attached paths has more than r + 1 vertices in total")]
    PairsTooLong,
}
