//! Data-parallel extremal search.
//!
//! The level-sequence stream is cut into fixed-size chunks; each chunk is
//! scanned on the rayon pool into a [`SearchAccumulator`] and the partial
//! results are merged with the associative reducer, so the report does not
//! depend on thread count or scheduling.

use rayon::prelude::*;
use rmatch_core::enumerate::enumerate_trees_with_limit;
use rmatch_core::extremal::{check_open_radius, SearchAccumulator, SearchReport};
use rmatch_core::{Error, Result, Tree};

const CHUNK: usize = 256;

/// Number of worker threads: explicit request, else `RMATCH_THREADS`, else
/// all available cores.
pub fn resolve_threads(requested: Option<usize>) -> usize {
    requested
        .or_else(|| {
            std::env::var("RMATCH_THREADS")
                .ok()
                .and_then(|v| v.trim().parse().ok())
        })
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn scan_chunk(r: u32, n: usize, chunk: &[Tree]) -> Result<SearchAccumulator> {
    let mut acc = SearchAccumulator::new(r, n);
    for tree in chunk {
        acc.observe(tree)?;
    }
    Ok(acc)
}

pub fn par_search_extremal(r: u32, n: usize, limit: usize, threads: usize) -> Result<SearchReport> {
    if r == 0 {
        return Err(Error::InvalidRadius { r, min: 1 });
    }
    let threads = threads.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    let mut trees = enumerate_trees_with_limit(n, limit)?;
    let mut total = SearchAccumulator::new(r, n);
    loop {
        let batch: Vec<Tree> = trees.by_ref().take(CHUNK * threads).collect();
        if batch.is_empty() {
            break;
        }
        let part = pool.install(|| {
            batch
                .par_chunks(CHUNK)
                .map(|chunk| scan_chunk(r, n, chunk))
                .try_reduce(|| SearchAccumulator::new(r, n), |a, b| Ok(a.merge(b)))
        })?;
        total = total.merge(part);
    }
    Ok(total.finish()?.expect("at least one tree per order"))
}

pub fn par_probe(r: u32, n_max: usize, limit: usize, threads: usize) -> Result<Vec<SearchReport>> {
    check_open_radius(r)?;
    (1..=n_max)
        .map(|n| par_search_extremal(r, n, limit, threads))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rmatch_core::extremal::search_extremal;

    #[test]
    fn parallel_matches_sequential() {
        for (r, n) in [(2, 9), (3, 10), (1, 6), (4, 1), (2, 2)] {
            let seq = search_extremal(r, n).unwrap();
            for threads in [1, 3] {
                assert_eq!(par_search_extremal(r, n, 18, threads).unwrap(), seq);
            }
        }
    }

    #[test]
    fn explicit_thread_count_wins() {
        assert_eq!(resolve_threads(Some(3)), 3);
        assert!(resolve_threads(None) >= 1);
    }

    #[test]
    fn limits_propagate() {
        assert_eq!(
            par_search_extremal(2, 19, 18, 2).unwrap_err(),
            Error::EnumerationLimit { n: 19, limit: 18 }
        );
        assert!(par_probe(6, 3, 18, 1).is_err());
    }
}
