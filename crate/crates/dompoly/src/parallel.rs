//! Multi-threaded subset sweeps and an order-preserving parallel map.
//!
//! The subset range `0..2^n` is cut into one contiguous chunk per worker.
//! Workers fill private integer histograms which are summed afterwards, so
//! the result does not depend on the number of threads.

use std::num::NonZeroUsize;
use std::ops::Range;
use std::thread;

use dompoly_core::count::{
    buckets_to_poly, dominating_histogram, histogram_to_poly, neighborhood_buckets, subset_count,
    CountError, Counter, Limits, Method,
};
use dompoly_core::{DomPoly, Graph, HARD_MAX_N};

/// Below this order a single thread finishes before workers would start.
const MIN_PARALLEL_N: usize = 14;

pub fn available_threads() -> usize {
    thread::available_parallelism().map_or(1, NonZeroUsize::get)
}

/// Equal contiguous pieces of `0..total`.
pub fn split_range(total: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = parts.max(1) as u64;
    (0..parts)
        .map(|i| total * i / parts..total * (i + 1) / parts)
        .filter(|r| !r.is_empty())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threaded {
    pub limits: Limits,
    pub threads: usize,
}

impl Threaded {
    pub fn new(limits: Limits, threads: usize) -> Threaded {
        Threaded {
            limits,
            threads: threads.max(1),
        }
    }

    fn sweep<T, F>(&self, g: &Graph, zero: [T; HARD_MAX_N + 1], part: F) -> [T; HARD_MAX_N + 1]
    where
        T: Copy + Send + std::ops::AddAssign,
        F: Fn(&Graph, Range<u64>) -> [T; HARD_MAX_N + 1] + Sync,
    {
        let total = subset_count(g.n());
        if self.threads == 1 || g.n() < MIN_PARALLEL_N {
            return part(g, 0..total);
        }
        let ranges = split_range(total, self.threads);
        let partials: Vec<[T; HARD_MAX_N + 1]> = thread::scope(|s| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|r| {
                    let part = &part;
                    s.spawn(move || part(g, r))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("counting worker panicked"))
                .collect()
        });
        let mut acc = zero;
        for p in partials {
            for (a, b) in acc.iter_mut().zip(p) {
                *a += b;
            }
        }
        acc
    }
}

impl Counter for Threaded {
    fn limits(&self) -> Limits {
        self.limits
    }

    fn count(&self, g: &Graph, method: Method) -> Result<DomPoly, CountError> {
        self.limits.check(g.n())?;
        match method {
            Method::Bruteforce => {
                let hist = self.sweep(g, [0u64; HARD_MAX_N + 1], dominating_histogram);
                Ok(histogram_to_poly(&hist))
            }
            Method::InclusionExclusion => {
                let buckets = self.sweep(g, [0i64; HARD_MAX_N + 1], neighborhood_buckets);
                buckets_to_poly(g.n(), &buckets)
            }
        }
    }
}

/// Applies `f` to every item on up to `threads` workers; output order
/// matches input order.
pub fn par_map<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    if threads <= 1 || items.len() < 2 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| {
                let f = &f;
                s.spawn(move || c.iter().map(f).collect::<Vec<R>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}
