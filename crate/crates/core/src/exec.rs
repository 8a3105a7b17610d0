//! Data-parallel sweep helpers.
//!
//! Corpus sweeps (oracle cross-checks, poset enumeration, randomized
//! reduction audits) fan out over independent items with no shared state.
//! With the `parallel` feature they run on rayon; without it they fall back
//! to plain sequential iteration. Results are collected in input order, so
//! report bytes do not depend on the execution mode.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `items`, preserving order.
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_seq(items, f)
    }
}

/// Sequential reference path, always available (benchmarked against `map`).
pub fn map_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_matches_seq() {
        let xs: Vec<u64> = (0..100).collect();
        let f = |x: &u64| x * x + 1;
        assert_eq!(map(&xs, f), map_seq(&xs, f));
    }
}
