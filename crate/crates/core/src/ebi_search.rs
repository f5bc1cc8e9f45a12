//! Exhaustive enumeration of edge-friendly labelings.
//!
//! A labeling and its complement have the same index, so it suffices to
//! visit the labelings with exactly `⌈q/2⌉` 1-edges. These are enumerated as
//! `⌈q/2⌉`-subsets of the edge indices in colexicographic order. For
//! `q <= 64` a subset is a `u64` mask and colex order is increasing integer
//! order, which makes the space rankable: any contiguous range of ranks can
//! be unranked and scanned independently, so work is split into ranges and
//! merged deterministically no matter how many workers run.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::{EdgeLabeling, LabelCounts};

/// Default cap on visited labelings; covers crown(6) at C(30, 15).
pub const DEFAULT_BUDGET: u64 = 200_000_000;

/// Ranges per worker; more ranges than workers evens out the load.
const RANGES_PER_JOB: u64 = 8;

/// How often workers publish progress.
const PROGRESS_STRIDE: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph has no edges, so it has no edge-friendly labeling to enumerate")]
    NoEdges,
    #[error("failed to start {jobs} worker threads: {message}")]
    ThreadPool { jobs: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of labelings to visit.
    pub budget: u64,
    /// Worker count; 1 scans the whole space as a single range.
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            jobs: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_jobs(jobs: usize) -> Self {
        Self {
            jobs,
            ..Self::default()
        }
    }
}

/// Number of visited labelings, readable from another thread while a
/// search runs.
#[derive(Debug, Default)]
pub struct Progress(AtomicU64);

impl Progress {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn visited(&self) -> u64 {
        self.0.load(Ordering::Relaxed)
    }

    fn add(&self, n: u64) {
        self.0.fetch_add(n, Ordering::Relaxed);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub p: usize,
    pub q: usize,
    pub regularity: Option<usize>,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        Self {
            p: g.vertex_count(),
            q: g.edge_count(),
            regularity: g.regularity(),
        }
    }
}

/// The index set of a graph with one witness per index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EbiReport {
    pub graph: GraphSummary,
    /// Sorted achieved indices.
    pub index_set: Vec<usize>,
    /// First labeling in enumeration order attaining each index.
    pub witnesses: BTreeMap<usize, EdgeLabeling>,
    /// Visited labelings per index.
    pub histogram: BTreeMap<usize, u64>,
    pub enumerated: u64,
    /// Size of the enumerated space, C(q, ⌈q/2⌉).
    pub space: u128,
    /// False when the budget cut the enumeration short.
    pub complete: bool,
}

impl EbiReport {
    pub fn max_index(&self) -> Option<(usize, &EdgeLabeling)> {
        self.witnesses.iter().next_back().map(|(&k, l)| (k, l))
    }

    pub fn to_json(&self) -> EbiReportJson {
        EbiReportJson {
            graph: self.graph,
            index_set: self.index_set.clone(),
            histogram: self.histogram.clone(),
            witnesses: self
                .witnesses
                .iter()
                .map(|(&index, l)| WitnessJson {
                    index,
                    labels: l.bit_string(),
                    counts: l.counts(),
                })
                .collect(),
            enumerated: self.enumerated,
            space: self.space.to_string(),
            complete: self.complete,
        }
    }
}

/// Serialized form of [`EbiReport`].
#[derive(Debug, Clone, Serialize)]
pub struct EbiReportJson {
    pub graph: GraphSummary,
    pub index_set: Vec<usize>,
    pub histogram: BTreeMap<usize, u64>,
    pub witnesses: Vec<WitnessJson>,
    pub enumerated: u64,
    /// Decimal string; may exceed 64 bits.
    pub space: String,
    pub complete: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub index: usize,
    pub labels: String,
    pub counts: LabelCounts,
}

/// Outcome of a search for a strongly edge-balanced labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrongBalance {
    Found(EdgeLabeling),
    /// The whole space was searched without success.
    Absent,
    /// The budget ran out first.
    Inconclusive {
        examined: u64,
    },
}

impl StrongBalance {
    pub fn found(&self) -> Option<&EdgeLabeling> {
        match self {
            StrongBalance::Found(l) => Some(l),
            _ => None,
        }
    }
}

/// Binomial coefficients up to `C(128, k)` fit in `u128`.
fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Pascal table `C(n, k)` for `n <= 64`, saturated into `u64`.
struct Binomials(Vec<[u64; 65]>);

impl Binomials {
    fn new() -> Self {
        let mut rows = vec![[0u64; 65]; 65];
        for n in 0..=64 {
            rows[n][0] = 1;
            for k in 1..=n {
                rows[n][k] = rows[n - 1][k - 1].saturating_add(rows[n - 1][k]);
            }
        }
        Self(rows)
    }

    fn get(&self, n: usize, k: usize) -> u64 {
        if k > n {
            0
        } else {
            self.0[n][k]
        }
    }

    /// The `rank`-th `k`-subset of `0..64` in colex order, as a mask.
    fn unrank(&self, mut rank: u64, k: usize) -> u64 {
        let mut mask = 0u64;
        for i in (1..=k).rev() {
            // Largest c with C(c, i) <= rank; c >= i - 1 since C(i-1, i) = 0.
            let mut c = i - 1;
            while c < 64 && self.get(c + 1, i) <= rank {
                c += 1;
            }
            rank -= self.get(c, i);
            mask |= 1 << c;
        }
        mask
    }
}

/// Next mask with the same popcount, in increasing order.
fn next_same_popcount(x: u64) -> u64 {
    let lowest = x & x.wrapping_neg();
    let ripple = x.wrapping_add(lowest);
    let ones = ((x ^ ripple) >> 2) / lowest;
    ripple | ones
}

/// Per-vertex incident-edge masks for fast induced-label counting.
struct MaskEvaluator {
    incident: Vec<u64>,
    degree: Vec<u32>,
}

impl MaskEvaluator {
    fn new(g: &Graph) -> Self {
        let incident = (0..g.vertex_count())
            .map(|v| g.incident_edges(v).iter().fold(0u64, |m, &e| m | 1 << e))
            .collect();
        let degree = (0..g.vertex_count())
            .map(|v| g.incident_edges(v).len() as u32)
            .collect();
        Self { incident, degree }
    }

    /// `(v0, v1)` for the labeling whose 1-edges are `mask`.
    #[inline]
    fn vertex_counts(&self, mask: u64) -> (usize, usize) {
        let mut v0 = 0;
        let mut v1 = 0;
        for (&inc, &deg) in self.incident.iter().zip(&self.degree) {
            let twice_ones = 2 * (mask & inc).count_ones();
            if twice_ones > deg {
                v1 += 1;
            } else if twice_ones < deg {
                v0 += 1;
            }
        }
        (v0, v1)
    }
}

/// Accumulated results over one or more rank ranges.
#[derive(Debug, Clone)]
struct Partial {
    histogram: Vec<u64>,
    /// `(rank, mask)` of the first witness per index.
    witnesses: Vec<Option<(u64, u64)>>,
    enumerated: u64,
}

impl Partial {
    fn new(vertex_count: usize) -> Self {
        Self {
            histogram: vec![0; vertex_count + 1],
            witnesses: vec![None; vertex_count + 1],
            enumerated: 0,
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        for (h, o) in self.histogram.iter_mut().zip(other.histogram) {
            *h += o;
        }
        for (w, o) in self.witnesses.iter_mut().zip(other.witnesses) {
            *w = match (*w, o) {
                (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
                (a, b) => a.or(b),
            };
        }
        self.enumerated += other.enumerated;
        self
    }
}

fn scan_range(
    eval: &MaskEvaluator,
    binomials: &Binomials,
    k: usize,
    start: u64,
    end: u64,
    progress: Option<&Progress>,
) -> Partial {
    let mut partial = Partial::new(eval.incident.len());
    let mut mask = binomials.unrank(start, k);
    let mut pending = 0;
    for rank in start..end {
        let (v0, v1) = eval.vertex_counts(mask);
        let index = v0.abs_diff(v1);
        partial.histogram[index] += 1;
        if partial.witnesses[index].is_none() {
            partial.witnesses[index] = Some((rank, mask));
        }
        pending += 1;
        if pending == PROGRESS_STRIDE {
            if let Some(p) = progress {
                p.add(pending);
            }
            pending = 0;
        }
        if rank + 1 < end {
            mask = next_same_popcount(mask);
        }
    }
    if let Some(p) = progress {
        p.add(pending);
    }
    partial.enumerated = end - start;
    partial
}

/// Splits `0..limit` into contiguous ranges for `jobs` workers.
fn ranges(limit: u64, jobs: usize) -> Vec<(u64, u64)> {
    let pieces = (jobs as u64 * RANGES_PER_JOB).clamp(1, limit.max(1));
    let step = limit.div_ceil(pieces);
    (0..pieces)
        .map(|i| (i * step, ((i + 1) * step).min(limit)))
        .filter(|(a, b)| a < b)
        .collect()
}

fn run_parallel<T, F>(jobs: usize, work: F) -> Result<T, SearchError>
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| SearchError::ThreadPool {
            jobs,
            message: e.to_string(),
        })?;
    Ok(pool.install(work))
}

/// Colex iterator over `k`-subsets of `0..n`, as sorted index vectors.
#[derive(Debug, Clone)]
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.current.as_mut()?;
        let result = current.clone();
        let k = current.len();
        // Lowest position that can move up without colliding.
        let movable = (0..k).find(|&i| {
            let ceiling = if i + 1 < k { current[i + 1] } else { self.n };
            current[i] + 1 < ceiling
        });
        match movable {
            Some(i) => {
                current[i] += 1;
                for (j, slot) in current[..i].iter_mut().enumerate() {
                    *slot = j;
                }
            }
            None => self.current = None,
        }
        Some(result)
    }
}

/// Stream of every labeling with exactly `⌈q/2⌉` 1-edges, in colex order of
/// the 1-edge sets.
pub struct EdgeFriendlyLabelings {
    graph: Arc<Graph>,
    combinations: Combinations,
}

impl Iterator for EdgeFriendlyLabelings {
    type Item = EdgeLabeling;

    fn next(&mut self) -> Option<EdgeLabeling> {
        let ones = self.combinations.next()?;
        Some(
            EdgeLabeling::from_one_edges(Arc::clone(&self.graph), ones)
                .expect("combination indices are edges"),
        )
    }
}

/// Every labeling with `⌈q/2⌉` 1-edges. Together with complements these are
/// all edge-friendly labelings. Empty (with a warning) when `q = 0`.
pub fn enumerate_edge_friendly(graph: Arc<Graph>) -> EdgeFriendlyLabelings {
    let q = graph.edge_count();
    if q == 0 {
        log::warn!("graph has no edges; there are no edge-friendly labelings to enumerate");
    }
    let combinations = if q == 0 {
        Combinations {
            n: 0,
            current: None,
        }
    } else {
        Combinations::new(q, q.div_ceil(2))
    };
    EdgeFriendlyLabelings {
        graph,
        combinations,
    }
}

/// Number of labelings [`enumerate_edge_friendly`] yields.
pub fn edge_friendly_space(q: usize) -> u128 {
    if q == 0 {
        0
    } else {
        binomial(q, q.div_ceil(2))
    }
}

pub fn compute_ebi(graph: &Arc<Graph>, config: SearchConfig) -> Result<EbiReport, SearchError> {
    compute_ebi_with_progress(graph, config, None)
}

/// [`compute_ebi`] publishing the visited count to `progress`.
pub fn compute_ebi_with_progress(
    graph: &Arc<Graph>,
    config: SearchConfig,
    progress: Option<&Progress>,
) -> Result<EbiReport, SearchError> {
    let q = graph.edge_count();
    if q == 0 {
        return Err(SearchError::NoEdges);
    }
    let space = edge_friendly_space(q);
    let limit = space.min(config.budget as u128) as u64;
    let complete = limit as u128 == space;
    let k = q.div_ceil(2);

    let partial = if q <= 64 {
        let eval = MaskEvaluator::new(graph);
        let binomials = Binomials::new();
        if config.jobs <= 1 {
            scan_range(&eval, &binomials, k, 0, limit, progress)
        } else {
            let pieces = ranges(limit, config.jobs);
            run_parallel(config.jobs, || {
                pieces
                    .par_iter()
                    .map(|&(a, b)| scan_range(&eval, &binomials, k, a, b, progress))
                    .reduce(|| Partial::new(graph.vertex_count()), Partial::merge)
            })?
        }
    } else {
        scan_wide(graph, limit, progress)
    };

    let mut histogram = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for (index, (&count, witness)) in partial.histogram.iter().zip(&partial.witnesses).enumerate() {
        if count > 0 {
            histogram.insert(index, count);
            let (_, mask) = witness.expect("every visited index has a witness");
            witnesses.insert(index, mask);
        }
    }
    let witnesses = if q <= 64 {
        witnesses
            .into_iter()
            .map(|(i, mask)| (i, EdgeLabeling::from_mask(Arc::clone(graph), mask)))
            .collect()
    } else {
        wide_witnesses(graph, &witnesses)
    };
    Ok(EbiReport {
        graph: GraphSummary::of(graph),
        index_set: histogram.keys().copied().collect(),
        witnesses,
        histogram,
        enumerated: partial.enumerated,
        space,
        complete,
    })
}

/// Fallback for `q > 64`: walks the labeling stream directly. The witness
/// slot records the rank, which is resolved back to a labeling afterwards.
fn scan_wide(graph: &Arc<Graph>, limit: u64, progress: Option<&Progress>) -> Partial {
    let mut partial = Partial::new(graph.vertex_count());
    for (rank, labeling) in (0..limit).zip(enumerate_edge_friendly(Arc::clone(graph))) {
        let index = labeling.index();
        partial.histogram[index] += 1;
        partial.witnesses[index].get_or_insert((rank, rank));
    }
    partial.enumerated = limit;
    if let Some(p) = progress {
        p.add(limit);
    }
    partial
}

fn wide_witnesses(
    graph: &Arc<Graph>,
    ranks: &BTreeMap<usize, u64>,
) -> BTreeMap<usize, EdgeLabeling> {
    let wanted: BTreeMap<u64, usize> = ranks.iter().map(|(&i, &r)| (r, i)).collect();
    let last = wanted.keys().next_back().copied().unwrap_or(0);
    (0..=last)
        .zip(enumerate_edge_friendly(Arc::clone(graph)))
        .filter_map(|(rank, l)| wanted.get(&rank).map(|&i| (i, l)))
        .collect()
}

/// The largest index with its witness.
pub fn max_index_search(
    graph: &Arc<Graph>,
    config: SearchConfig,
) -> Result<(usize, EdgeLabeling, bool), SearchError> {
    let report = compute_ebi(graph, config)?;
    let (index, witness) = report.max_index().expect("a nonempty graph has labelings");
    Ok((index, witness.clone(), report.complete))
}

/// First labeling in enumeration order with `e0 = e1` and `v0 = v1`.
pub fn find_strongly_edge_balanced(graph: &Arc<Graph>, config: SearchConfig) -> StrongBalance {
    let q = graph.edge_count();
    if q == 0 {
        // No edges, every vertex unlabeled: trivially balanced.
        return StrongBalance::Found(EdgeLabeling::all_zero(Arc::clone(graph)));
    }
    if q % 2 == 1 {
        return StrongBalance::Absent;
    }
    let space = edge_friendly_space(q);
    let limit = space.min(config.budget as u128) as u64;
    let exhausted = limit as u128 == space;

    let found = if q <= 64 {
        let eval = MaskEvaluator::new(graph);
        let binomials = Binomials::new();
        let k = q / 2;
        let first_in = |start: u64, end: u64, best: &AtomicU64| {
            let mut mask = binomials.unrank(start, k);
            for rank in start..end {
                if rank & 0xfff == 0 && best.load(Ordering::Relaxed) < start {
                    return None;
                }
                let (v0, v1) = eval.vertex_counts(mask);
                if v0 == v1 {
                    best.fetch_min(rank, Ordering::Relaxed);
                    return Some(mask);
                }
                if rank + 1 < end {
                    mask = next_same_popcount(mask);
                }
            }
            None
        };
        let best = AtomicU64::new(u64::MAX);
        let mask = if config.jobs <= 1 {
            first_in(0, limit, &best)
        } else {
            let pieces = ranges(limit, config.jobs);
            run_parallel(config.jobs, || {
                pieces
                    .par_iter()
                    .map(|&(a, b)| first_in(a, b, &best))
                    .find_first(Option::is_some)
                    .flatten()
            })
            .unwrap_or_else(|_| first_in(0, limit, &best))
        };
        mask.map(|m| EdgeLabeling::from_mask(Arc::clone(graph), m))
    } else {
        enumerate_edge_friendly(Arc::clone(graph))
            .take(limit as usize)
            .find(EdgeLabeling::is_strongly_edge_balanced)
    };

    match found {
        Some(l) => StrongBalance::Found(l),
        None if exhausted => StrongBalance::Absent,
        None => StrongBalance::Inconclusive { examined: limit },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, crown_graph, cycle_graph};

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(20, 10), 184_756);
        assert_eq!(binomial(30, 15), 155_117_520);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn unrank_matches_gosper_walk() {
        let b = Binomials::new();
        for (n, k) in [(6, 3), (7, 1), (9, 5), (10, 10)] {
            let total = b.get(n, k);
            let mut mask = (1u64 << k) - 1;
            for rank in 0..total {
                assert_eq!(b.unrank(rank, k), mask, "n={n} k={k} rank={rank}");
                assert!(mask < 1 << n);
                if rank + 1 < total {
                    mask = next_same_popcount(mask);
                }
            }
        }
    }

    #[test]
    fn combination_stream_matches_masks() {
        let b = Binomials::new();
        for (rank, combo) in Combinations::new(8, 3).enumerate() {
            let mask = combo.iter().fold(0u64, |m, &i| m | 1 << i);
            assert_eq!(mask, b.unrank(rank as u64, 3));
        }
        assert_eq!(Combinations::new(8, 3).count(), 56);
        assert_eq!(Combinations::new(4, 0).count(), 1);
    }

    #[test]
    fn high_masks_do_not_overflow() {
        let b = Binomials::new();
        let last = b.unrank(b.get(64, 32) - 1, 32);
        assert_eq!(last, u64::MAX << 32);
    }

    #[test]
    fn stream_counts() {
        let count = |g| enumerate_edge_friendly(Arc::new(g)).count();
        assert_eq!(count(complete_graph(3)), 3);
        assert_eq!(count(crown_graph(4)), 924);
        assert_eq!(count(Graph::empty(3)), 0);
    }

    #[test]
    fn stream_is_edge_friendly_and_distinct() {
        let labelings: Vec<_> = enumerate_edge_friendly(Arc::new(cycle_graph(5))).collect();
        assert_eq!(labelings.len(), 10);
        let distinct: std::collections::HashSet<_> =
            labelings.iter().map(EdgeLabeling::bit_string).collect();
        assert_eq!(distinct.len(), 10);
        assert!(labelings.iter().all(|l| l.counts().e1 == 3));
    }

    #[test]
    fn crown_reports() {
        let small = compute_ebi(&Arc::new(crown_graph(3)), SearchConfig::default()).unwrap();
        assert_eq!(small.index_set, vec![0]);
        assert_eq!(small.enumerated, 20);
        assert!(small.complete);

        let four = compute_ebi(&Arc::new(crown_graph(4)), SearchConfig::default()).unwrap();
        assert_eq!(four.index_set, vec![0, 2, 4]);
        assert_eq!(four.histogram.values().sum::<u64>(), 924);
        for (&k, w) in &four.witnesses {
            assert_eq!(w.index(), k);
            assert!(w.is_edge_friendly());
        }
    }

    #[test]
    fn no_edges_is_an_error() {
        assert_eq!(
            compute_ebi(&Arc::new(Graph::empty(3)), SearchConfig::default()),
            Err(SearchError::NoEdges)
        );
    }

    #[test]
    fn budget_truncates() {
        let config = SearchConfig {
            budget: 100,
            jobs: 1,
        };
        let report = compute_ebi(&Arc::new(crown_graph(4)), config).unwrap();
        assert!(!report.complete);
        assert_eq!(report.enumerated, 100);
        assert_eq!(report.space, 924);
    }

    #[test]
    fn parallel_merge_is_deterministic() {
        let g = Arc::new(crown_graph(4));
        let single = compute_ebi(&g, SearchConfig::default()).unwrap();
        for jobs in [2, 3, 5] {
            assert_eq!(
                compute_ebi(&g, SearchConfig::with_jobs(jobs)).unwrap(),
                single
            );
        }
        let truncated = SearchConfig {
            budget: 500,
            jobs: 3,
        };
        let single_truncated = SearchConfig {
            budget: 500,
            jobs: 1,
        };
        assert_eq!(
            compute_ebi(&g, truncated).unwrap(),
            compute_ebi(&g, single_truncated).unwrap()
        );
    }

    #[test]
    fn ranges_cover_exactly() {
        for (limit, jobs) in [(0, 4), (1, 4), (7, 2), (924, 3), (1000, 1)] {
            let r = ranges(limit, jobs);
            let mut expected = 0;
            for &(a, b) in &r {
                assert_eq!(a, expected);
                assert!(b > a);
                expected = b;
            }
            assert_eq!(expected, limit);
        }
    }

    #[test]
    fn max_index_k4() {
        let (max, witness, complete) =
            max_index_search(&Arc::new(complete_graph(4)), SearchConfig::default()).unwrap();
        assert_eq!(max, 2);
        assert_eq!(witness.index(), 2);
        assert!(complete);
    }

    #[test]
    fn strongly_balanced_examples() {
        let c4 = find_strongly_edge_balanced(&Arc::new(cycle_graph(4)), SearchConfig::default());
        let found = c4.found().expect("C_4 is strongly edge-balanced");
        assert!(found.is_strongly_edge_balanced());

        assert_eq!(
            find_strongly_edge_balanced(&Arc::new(complete_graph(3)), SearchConfig::default()),
            StrongBalance::Absent
        );

        let tight = SearchConfig { budget: 1, jobs: 1 };
        // The first labeling of K_4 is the star at vertex 0: one 1-vertex, three 0-vertices.
        assert_eq!(
            find_strongly_edge_balanced(&Arc::new(complete_graph(4)), tight),
            StrongBalance::Inconclusive { examined: 1 }
        );
    }

    #[test]
    fn strongly_balanced_parallel_matches_single() {
        let g = Arc::new(crown_graph(4));
        let single = find_strongly_edge_balanced(&g, SearchConfig::default());
        for jobs in [2, 4] {
            assert_eq!(
                find_strongly_edge_balanced(&g, SearchConfig::with_jobs(jobs)),
                single
            );
        }
    }

    #[test]
    fn json_shape() {
        let report = compute_ebi(&Arc::new(crown_graph(3)), SearchConfig::default()).unwrap();
        let json = serde_json::to_value(report.to_json()).unwrap();
        assert_eq!(json["index_set"], serde_json::json!([0]));
        assert_eq!(json["graph"]["q"], 6);
        assert_eq!(json["histogram"]["0"], 20);
        assert_eq!(json["witnesses"][0]["labels"].as_str().unwrap().len(), 6);
    }
}
