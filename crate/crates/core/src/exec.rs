//! Execution-mode switch for the data-parallel drivers.
//!
//! Batch work (enumeration filters, verification corpora, blow-up schedules)
//! is expressed as an order-preserving map over a slice. With the `parallel`
//! feature the map can fan out over the rayon pool; the sequential path is
//! always available and is what the feature-less build uses. Results keep
//! input order, so reports are deterministic in either mode.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a batch driver should evaluate its candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Mode {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Mode::Parallel
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Mode::Sequential
    }
}

/// Order-preserving map over `items`.
pub fn map<T, U, F>(mode: Mode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match mode {
        Mode::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Mode::Parallel => items.par_iter().map(f).collect(),
    }
}

/// Order-preserving filter-map over `items`.
pub fn filter_map<T, U, F>(mode: Mode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Option<U> + Sync + Send,
{
    match mode {
        Mode::Sequential => items.iter().filter_map(f).collect(),
        #[cfg(feature = "parallel")]
        Mode::Parallel => items.par_iter().filter_map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let xs: Vec<u32> = (0..1000).collect();
        let seq = map(Mode::Sequential, &xs, |x| x * 2);
        assert_eq!(seq, xs.iter().map(|x| x * 2).collect::<Vec<_>>());
        #[cfg(feature = "parallel")]
        {
            let par = map(Mode::Parallel, &xs, |x| x * 2);
            assert_eq!(par, seq);
        }
    }
}
