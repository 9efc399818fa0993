//! Exact counting of dominating sets by size.
//!
//! Two subset sweeps that share nothing beyond the graph type:
//!
//! * direct enumeration: a subset `D` is counted when `N[D] = V`;
//! * inclusion-exclusion: `d(G, i) = sum_T (-1)^|T| C(n - |N[T]|, i)`.
//!
//! Both sweeps are exposed over arbitrary ranges of the subset index space
//! `0..2^n` so a caller can split the range across workers and add up the
//! partial histograms. Integer order of masks is the iteration order.
//!
//! Paths and cycles additionally have a linear-size dynamic program.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{CoeffStats, Graph, VertexSet};
use crate::poly::DomPoly;
use crate::{DEFAULT_MAX_N, HARD_MAX_N};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("graph has {n} vertices; subset enumeration is capped at {max}")]
    TooLarge { n: usize, max: usize },
    #[error("domination number of the graph with no vertices is undefined")]
    EmptyGraph,
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("a path needs at least 1 vertex")]
    PathTooShort,
    #[error("dynamic program size {n} above the limit of {max}")]
    DpTooLarge { n: usize, max: usize },
    #[error("inclusion-exclusion produced a negative coefficient at degree {0}")]
    NegativeCoefficient(usize),
}

/// Size limits for the exponential and quadratic backends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest order accepted by the subset sweeps (at most 32).
    pub max_n: usize,
    /// Largest path or cycle handled by the dynamic program.
    pub max_dp_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: DEFAULT_MAX_N,
            max_dp_n: 10_000,
        }
    }
}

impl Limits {
    pub fn with_max_n(max_n: usize) -> Limits {
        Limits {
            max_n: max_n.min(HARD_MAX_N),
            ..Limits::default()
        }
    }

    pub fn check(&self, n: usize) -> Result<(), CountError> {
        if n > self.max_n {
            Err(CountError::TooLarge { n, max: self.max_n })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Bruteforce,
    InclusionExclusion,
}

/// Something that can run a subset sweep on a graph.
///
/// [`Limits`] itself is the single-threaded implementation.
pub trait Counter {
    fn limits(&self) -> Limits;
    fn count(&self, g: &Graph, method: Method) -> Result<DomPoly, CountError>;
}

impl Counter for Limits {
    fn limits(&self) -> Limits {
        *self
    }

    fn count(&self, g: &Graph, method: Method) -> Result<DomPoly, CountError> {
        match method {
            Method::Bruteforce => count_bruteforce(g, self),
            Method::InclusionExclusion => count_inclusion_exclusion(g, self),
        }
    }
}

/// Number of subsets of an `n`-set.
pub fn subset_count(n: usize) -> u64 {
    1u64 << n
}

/// Closed neighbourhood unions for every subset of the low and the high
/// half of the vertex set, so `N[S]` is one OR of two table entries.
struct SplitTables {
    low_bits: u32,
    low: Vec<u32>,
    high: Vec<u32>,
}

impl SplitTables {
    fn new(g: &Graph) -> SplitTables {
        let n = g.n();
        let low_bits = n.div_ceil(2);
        let nbhd = g.closed_neighborhoods();
        let build = |offset: usize, bits: usize| {
            let mut table = vec![0u32; 1 << bits];
            for mask in 1usize..1 << bits {
                let v = mask.trailing_zeros() as usize;
                table[mask] = table[mask & (mask - 1)] | nbhd[offset + v].0;
            }
            table
        };
        SplitTables {
            low_bits: low_bits as u32,
            low: build(0, low_bits),
            high: build(low_bits, n - low_bits),
        }
    }

    /// Calls `f(high_union, high_size, low_range)` for each high-half block
    /// overlapping `masks`, in increasing mask order.
    fn for_each_block(&self, masks: Range<u64>, mut f: impl FnMut(u32, usize, Range<usize>)) {
        let shift = self.low_bits;
        let mut mask = masks.start;
        while mask < masks.end {
            let hi = mask >> shift;
            let block_start = hi << shift;
            let block_end = ((hi + 1) << shift).min(masks.end);
            let lo = (mask - block_start) as usize..(block_end - block_start) as usize;
            f(self.high[hi as usize], hi.count_ones() as usize, lo);
            mask = block_end;
        }
    }
}

/// Histogram of dominating subsets by size over the masks in `masks`.
pub fn dominating_histogram(g: &Graph, masks: Range<u64>) -> [u64; HARD_MAX_N + 1] {
    let full = g.vertices().0;
    let tables = SplitTables::new(g);
    let mut hist = [0u64; HARD_MAX_N + 1];
    tables.for_each_block(masks, |high, high_size, lows| {
        for lo in lows {
            if tables.low[lo] | high == full {
                hist[high_size + lo.count_ones() as usize] += 1;
            }
        }
    });
    hist
}

pub fn histogram_to_poly(hist: &[u64]) -> DomPoly {
    DomPoly::from_u64s(hist)
}

/// Signed subset counts `sum (-1)^|T|` bucketed by `|N[T]|`.
pub fn neighborhood_buckets(g: &Graph, masks: Range<u64>) -> [i64; HARD_MAX_N + 1] {
    let tables = SplitTables::new(g);
    let mut buckets = [0i64; HARD_MAX_N + 1];
    tables.for_each_block(masks, |high, high_size, lows| {
        for lo in lows {
            let covered = (tables.low[lo] | high).count_ones() as usize;
            if (high_size + lo.count_ones() as usize).is_multiple_of(2) {
                buckets[covered] += 1;
            } else {
                buckets[covered] -= 1;
            }
        }
    });
    buckets
}

/// Combines neighbourhood buckets into `d(G, i)` with one pass of binomials.
pub fn buckets_to_poly(n: usize, buckets: &[i64]) -> Result<DomPoly, CountError> {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (covered, &weight) in buckets.iter().enumerate().take(n + 1) {
        if weight == 0 {
            continue;
        }
        let weight = BigInt::from(weight);
        for (i, c) in DomPoly::binomial_power(n - covered)
            .coeffs()
            .iter()
            .enumerate()
        {
            coeffs[i] += &weight * BigInt::from(c.clone());
        }
    }
    let coeffs = coeffs
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.to_biguint().ok_or(CountError::NegativeCoefficient(i)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DomPoly::from_coeffs(coeffs))
}

/// Direct enumeration over all `2^n` subsets.
pub fn count_bruteforce(g: &Graph, limits: &Limits) -> Result<DomPoly, CountError> {
    limits.check(g.n())?;
    let hist = dominating_histogram(g, 0..subset_count(g.n()));
    Ok(histogram_to_poly(&hist))
}

/// Inclusion-exclusion over closed neighbourhoods.
pub fn count_inclusion_exclusion(g: &Graph, limits: &Limits) -> Result<DomPoly, CountError> {
    limits.check(g.n())?;
    let buckets = neighborhood_buckets(g, 0..subset_count(g.n()));
    buckets_to_poly(g.n(), &buckets)
}

/// Domination number and the smallest-mask minimum dominating set.
///
/// Sizes are tried in increasing order and, within a size, subsets in
/// increasing mask order, so the witness is reproducible.
pub fn gamma(g: &Graph) -> Result<(usize, VertexSet), CountError> {
    let n = g.n();
    if n == 0 {
        return Err(CountError::EmptyGraph);
    }
    let nbhd = g.closed_neighborhoods();
    let full = g.vertices().0;
    for k in 1..=n {
        let mut mask: u64 = (1 << k) - 1;
        while mask < 1 << n {
            let covered = VertexSet(mask as u32)
                .iter()
                .fold(0u32, |acc, v| acc | nbhd[v].0);
            if covered == full {
                return Ok((k, VertexSet(mask as u32)));
            }
            // next k-subset in increasing order
            let low = mask & mask.wrapping_neg();
            let ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
        }
    }
    unreachable!("the whole vertex set dominates")
}

/// Degree statistics plus the domination number (0 for the empty graph).
pub fn coeff_stats(g: &Graph) -> CoeffStats {
    let gamma = gamma(g).map(|(k, _)| k).unwrap_or(0);
    g.stats_with_gamma(gamma)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathOrCycle {
    Path,
    Cycle,
}

/// Per-vertex state of the scan: the last vertex is in the set, out of the
/// set but already dominated, or out of the set and still waiting for its
/// successor.
#[derive(Clone)]
struct DpState {
    taken: Vec<BigUint>,
    covered: Vec<BigUint>,
    waiting: Vec<BigUint>,
}

impl DpState {
    fn new(len: usize) -> DpState {
        DpState {
            taken: vec![BigUint::zero(); len],
            covered: vec![BigUint::zero(); len],
            waiting: vec![BigUint::zero(); len],
        }
    }

    fn step(&self) -> DpState {
        let len = self.taken.len();
        let mut next = DpState::new(len);
        for i in 0..len - 1 {
            next.taken[i + 1] = &self.taken[i] + &self.covered[i] + &self.waiting[i];
        }
        next.covered.clone_from(&self.taken);
        next.waiting.clone_from(&self.covered);
        next
    }
}

fn sum_states(states: &[&Vec<BigUint>]) -> DomPoly {
    let len = states[0].len();
    DomPoly::from_coeffs(
        (0..len)
            .map(|i| states.iter().map(|s| &s[i]).sum())
            .collect(),
    )
}

/// Domination polynomial of `P_n` or `C_n` by a three-state scan.
pub fn count_path_cycle_dp(
    kind: PathOrCycle,
    n: usize,
    limits: &Limits,
) -> Result<DomPoly, CountError> {
    match kind {
        PathOrCycle::Path if n == 0 => return Err(CountError::PathTooShort),
        PathOrCycle::Cycle if n < 3 => return Err(CountError::CycleTooShort(n)),
        _ => {}
    }
    if n > limits.max_dp_n {
        return Err(CountError::DpTooLarge {
            n,
            max: limits.max_dp_n,
        });
    }
    let len = n + 1;
    let run = |mut s: DpState| {
        for _ in 1..n {
            s = s.step();
        }
        s
    };

    match kind {
        PathOrCycle::Path => {
            let mut start = DpState::new(len);
            start.taken[1] = BigUint::one();
            start.waiting[0] = BigUint::one();
            let end = run(start);
            Ok(sum_states(&[&end.taken, &end.covered]))
        }
        PathOrCycle::Cycle => {
            // first vertex taken: the last vertex may still be waiting
            let mut first_taken = DpState::new(len);
            first_taken.taken[1] = BigUint::one();
            let a = run(first_taken);

            // first vertex out, dominated by the last vertex
            let mut by_last = DpState::new(len);
            by_last.covered[0] = BigUint::one();
            let b = run(by_last);

            // first vertex out, last vertex out, so the second must be taken
            let mut by_second = DpState::new(len);
            by_second.waiting[0] = BigUint::one();
            let c = run(by_second);

            Ok(sum_states(&[
                &a.taken, &a.covered, &a.waiting, &b.taken, &c.covered,
            ]))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u64]) -> DomPoly {
        DomPoly::from_u64s(c)
    }

    /// Checks every subset with the graph's own domination predicate.
    fn naive(g: &Graph) -> DomPoly {
        let mut hist = vec![0u64; g.n() + 1];
        for mask in 0..1u64 << g.n() {
            let s = VertexSet(mask as u32);
            if g.is_dominating(s) {
                hist[s.len()] += 1;
            }
        }
        DomPoly::from_u64s(&hist)
    }

    #[test]
    fn bruteforce_known_values() {
        let l = Limits::default();
        assert_eq!(
            count_bruteforce(&Graph::path(4).unwrap(), &l).unwrap(),
            p(&[0, 0, 4, 4, 1])
        );
        assert_eq!(
            count_bruteforce(&Graph::empty(3).unwrap(), &l).unwrap(),
            DomPoly::monomial(3)
        );
        assert_eq!(
            count_bruteforce(&Graph::cycle(4).unwrap(), &l).unwrap(),
            p(&[0, 0, 6, 4, 1])
        );
        assert_eq!(
            count_bruteforce(&Graph::empty(0).unwrap(), &l).unwrap(),
            DomPoly::one()
        );
    }

    #[test]
    fn inclusion_exclusion_known_values() {
        let l = Limits::default();
        assert_eq!(
            count_inclusion_exclusion(&Graph::empty(1).unwrap(), &l).unwrap(),
            DomPoly::monomial(1)
        );
        assert_eq!(
            count_inclusion_exclusion(&Graph::path(4).unwrap(), &l).unwrap(),
            p(&[0, 0, 4, 4, 1])
        );
        assert_eq!(
            count_inclusion_exclusion(&Graph::empty(0).unwrap(), &l).unwrap(),
            DomPoly::one()
        );
    }

    #[test]
    fn cap_is_enforced() {
        let l = Limits::with_max_n(5);
        let g = Graph::path(6).unwrap();
        assert_eq!(
            count_bruteforce(&g, &l),
            Err(CountError::TooLarge { n: 6, max: 5 })
        );
        assert_eq!(
            count_inclusion_exclusion(&g, &l),
            Err(CountError::TooLarge { n: 6, max: 5 })
        );
    }

    #[test]
    fn sweeps_match_naive_on_small_graphs() {
        let l = Limits::default();
        let graphs = [
            Graph::wheel(7).unwrap(),
            Graph::complete_bipartite(3, 4).unwrap(),
            Graph::path(3)
                .unwrap()
                .corona(&Graph::cycle(3).unwrap())
                .unwrap(),
            Graph::star(6).unwrap(),
        ];
        for g in &graphs {
            let expected = naive(g);
            assert_eq!(count_bruteforce(g, &l).unwrap(), expected);
            assert_eq!(count_inclusion_exclusion(g, &l).unwrap(), expected);
        }
    }

    #[test]
    fn partial_ranges_add_up() {
        let g = Graph::cycle(9).unwrap();
        let total = dominating_histogram(&g, 0..512);
        let mut split = [0u64; HARD_MAX_N + 1];
        for r in [0..3, 3..100, 100..101, 101..512] {
            for (a, b) in split.iter_mut().zip(dominating_histogram(&g, r)) {
                *a += b;
            }
        }
        assert_eq!(split, total);

        let total = neighborhood_buckets(&g, 0..512);
        let mut split = [0i64; HARD_MAX_N + 1];
        for r in [0..77, 77..300, 300..512] {
            for (a, b) in split.iter_mut().zip(neighborhood_buckets(&g, r)) {
                *a += b;
            }
        }
        assert_eq!(split, total);
    }

    #[test]
    fn gamma_and_witness() {
        assert_eq!(gamma(&Graph::complete(4).unwrap()).unwrap().0, 1);
        let (k, w) = gamma(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(k, 2);
        // {0, 2} is the smallest mask among the four minimum sets
        assert_eq!(w.iter().collect::<Vec<_>>(), [0, 2]);
        assert_eq!(gamma(&Graph::empty(5).unwrap()).unwrap().0, 5);
        assert_eq!(
            gamma(&Graph::empty(0).unwrap()),
            Err(CountError::EmptyGraph)
        );
        let g = Graph::cycle(5).unwrap().corona_k1().unwrap();
        assert_eq!(gamma(&g).unwrap().0, 5);
    }

    #[test]
    fn coeff_stats_of_p4() {
        let st = coeff_stats(&Graph::path(4).unwrap());
        assert_eq!(
            st,
            CoeffStats {
                n: 4,
                r: 0,
                t: 2,
                s: 0,
                universal: 0,
                gamma: 2
            }
        );
    }

    #[test]
    fn dp_known_values() {
        let l = Limits::default();
        assert_eq!(
            count_path_cycle_dp(PathOrCycle::Path, 4, &l).unwrap(),
            p(&[0, 0, 4, 4, 1])
        );
        assert_eq!(
            count_path_cycle_dp(PathOrCycle::Cycle, 3, &l).unwrap(),
            p(&[0, 3, 3, 1])
        );
        assert_eq!(
            count_path_cycle_dp(PathOrCycle::Cycle, 4, &l).unwrap(),
            p(&[0, 0, 6, 4, 1])
        );
        assert_eq!(
            count_path_cycle_dp(PathOrCycle::Path, 1, &l).unwrap(),
            DomPoly::monomial(1)
        );
        assert_eq!(
            count_path_cycle_dp(PathOrCycle::Cycle, 2, &l),
            Err(CountError::CycleTooShort(2))
        );
        assert_eq!(
            count_path_cycle_dp(PathOrCycle::Path, 0, &l),
            Err(CountError::PathTooShort)
        );
        assert!(matches!(
            count_path_cycle_dp(PathOrCycle::Path, 10_001, &l),
            Err(CountError::DpTooLarge { .. })
        ));
    }

    #[test]
    fn dp_matches_enumeration() {
        let l = Limits::default();
        for n in 1..=14 {
            let g = Graph::path(n).unwrap();
            assert_eq!(
                count_path_cycle_dp(PathOrCycle::Path, n, &l).unwrap(),
                count_bruteforce(&g, &l).unwrap(),
                "P{n}"
            );
        }
        for n in 3..=14 {
            let g = Graph::cycle(n).unwrap();
            assert_eq!(
                count_path_cycle_dp(PathOrCycle::Cycle, n, &l).unwrap(),
                count_bruteforce(&g, &l).unwrap(),
                "C{n}"
            );
        }
    }

    #[test]
    fn dp_handles_long_paths() {
        let l = Limits::default();
        let p = count_path_cycle_dp(PathOrCycle::Path, 300, &l).unwrap();
        assert_eq!(p.degree(), Some(300));
        assert_eq!(p.min_degree(), Some(100));
        // d(P_n, n-1) = n - r = n for connected graphs
        assert_eq!(p.coeff(299), BigUint::from(300u32));
    }
}
