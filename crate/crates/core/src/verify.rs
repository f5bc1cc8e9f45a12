//! Verification battery: replays the crown constructions and checks the
//! bounds, parity facts and product identities against exhaustive search
//! or seeded random samples. Each scope returns a [`VerifyReport`] with one
//! entry per check.

use std::ops::RangeInclusive;
use std::sync::Arc;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::crown_construct::{all_witnesses, ebi_formula, switch_schedule};
use crate::ebi_search::{compute_ebi, find_strongly_edge_balanced, SearchConfig, StrongBalance};
use crate::graph::{
    complete_bipartite, complete_graph, crown_graph, cycle_graph, hypercube, path_graph, Graph,
};
use crate::labeling::EdgeLabeling;
use crate::products::ProductKind;
use crate::theory::{all_degrees_odd, lemma3_bound, lemma3_bound_for, theorem3_conditions};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_140_915;

/// Largest product size searched for a strongly edge-balanced labeling.
pub const THEOREM3_MAX_EDGES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub scope: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn new(scope: &str, checks: Vec<Check>) -> Self {
        Self {
            scope: scope.to_string(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Random graph on `p` vertices, each pair joined with probability 1/2.
pub fn random_graph<R: Rng>(p: usize, rng: &mut R) -> Graph {
    let edges: Vec<_> = (0..p)
        .flat_map(|u| (u + 1..p).map(move |v| (u, v)))
        .filter(|_| rng.random_bool(0.5))
        .collect();
    Graph::new(p, edges).expect("generated pairs are simple")
}

/// Uniformly random edge-friendly labeling; for odd `q` the number of
/// 1-edges is `⌊q/2⌋` or `⌈q/2⌉` with equal probability.
pub fn random_edge_friendly<R: Rng>(graph: &Arc<Graph>, rng: &mut R) -> EdgeLabeling {
    let q = graph.edge_count();
    let ones = if q % 2 == 1 && rng.random_bool(0.5) {
        q / 2 + 1
    } else {
        q / 2
    };
    EdgeLabeling::from_one_edges(Arc::clone(graph), sample(rng, q, ones))
        .expect("sampled indices are edges")
}

/// Constructive witnesses and schedule replays for every `n` in the range.
pub fn crown_range(range: RangeInclusive<usize>) -> VerifyReport {
    let mut checks = Vec::new();
    for n in range {
        let formula = match ebi_formula(n) {
            Ok(f) => f,
            Err(e) => {
                checks.push(Check::new(
                    format!("crown({n}) formula"),
                    false,
                    e.to_string(),
                ));
                continue;
            }
        };
        match all_witnesses(n) {
            Ok(witnesses) => {
                let bad: Vec<_> = witnesses
                    .iter()
                    .filter(|(k, l)| l.index() != *k || !l.is_edge_friendly())
                    .map(|(k, _)| *k)
                    .collect();
                let indices: Vec<_> = witnesses.iter().map(|(k, _)| *k).collect();
                checks.push(Check::new(
                    format!("crown({n}) witnesses"),
                    bad.is_empty() && indices == formula,
                    if bad.is_empty() {
                        format!("indices {indices:?} all witnessed")
                    } else {
                        format!("witnesses failing for indices {bad:?}")
                    },
                ));
            }
            Err(e) => checks.push(Check::new(
                format!("crown({n}) witnesses"),
                false,
                e.to_string(),
            )),
        }
        if n == 3 || n == 5 {
            continue;
        }
        let replay = switch_schedule(n).and_then(|s| {
            let trajectory = s.trajectory()?;
            Ok((s.start_index(), s.step_delta(), trajectory))
        });
        match replay {
            Ok((start, delta, trajectory)) => {
                let expected: Vec<_> = (0..trajectory.len()).map(|t| start - t * delta).collect();
                let ok = trajectory == expected && trajectory.last() == Some(&0);
                checks.push(Check::new(
                    format!("crown({n}) schedule"),
                    ok,
                    format!(
                        "{} steps, delta {delta}, start {start}",
                        trajectory.len() - 1
                    ),
                ));
            }
            Err(e) => checks.push(Check::new(
                format!("crown({n}) schedule"),
                false,
                e.to_string(),
            )),
        }
        if n % 2 == 0 {
            let bound = lemma3_bound_for(&crown_graph(n)).ok().flatten();
            let max = *formula.last().expect("nonempty");
            checks.push(Check::new(
                format!("crown({n}) meets regular bound"),
                bound.is_some_and(|b| b.is_integral() && b.floor() == max),
                format!("max {max}, bound {bound:?}"),
            ));
        }
    }
    VerifyReport::new("crown-range", checks)
}

/// Wagner graph: the 8-cycle plus its four long diagonals.
fn wagner_graph() -> Graph {
    let edges = (0..8)
        .map(|i| (i, (i + 1) % 8))
        .chain((0..4).map(|i| (i, i + 4)));
    Graph::new(8, edges).expect("simple")
}

fn disjoint_k4s() -> Graph {
    let k4 = complete_graph(4);
    let edges = k4
        .edges()
        .iter()
        .flat_map(|&(u, v)| [(u, v), (u + 4, v + 4)])
        .collect::<Vec<_>>();
    Graph::new(8, edges).expect("simple")
}

/// Odd-regular graphs checked exhaustively against the regular bound.
pub fn lemma3_corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("crown:4", crown_graph(4)),
        ("complete:4", complete_graph(4)),
        ("bipartite:3,3", complete_bipartite(3, 3)),
        ("cube", hypercube(3)),
        ("wagner", wagner_graph()),
        ("2K4", disjoint_k4s()),
        ("complete:6", complete_graph(6)),
    ]
}

/// Exhaustive maximum index of each corpus graph against the bound.
pub fn lemma3(config: SearchConfig) -> VerifyReport {
    let mut checks = Vec::new();
    for (name, g) in lemma3_corpus() {
        let r = g.regularity().expect("corpus graphs are regular");
        let bound = lemma3_bound(g.vertex_count(), r)
            .expect("corpus graphs exist")
            .expect("corpus regularities are odd");
        let graph = Arc::new(g);
        let check = match compute_ebi(&graph, config) {
            Ok(report) if report.complete => {
                let (max, _) = report.max_index().expect("edges exist");
                Check::new(
                    format!("{name} max index within bound"),
                    bound.admits(max),
                    format!(
                        "max {max}, bound {}/{} (floor {})",
                        bound.numerator,
                        bound.denominator,
                        bound.floor()
                    ),
                )
            }
            Ok(report) => Check::new(
                format!("{name} max index within bound"),
                false,
                format!("budget exhausted after {} labelings", report.enumerated),
            ),
            Err(e) => Check::new(
                format!("{name} max index within bound"),
                false,
                e.to_string(),
            ),
        };
        checks.push(check);
    }
    VerifyReport::new("lemma3", checks)
}

/// Samples random edge-friendly labelings of a graph whose degrees are all
/// odd; each must leave no vertex unlabeled and have an even index.
pub fn lemma5(name: &str, graph: &Arc<Graph>, samples: usize, seed: u64) -> VerifyReport {
    let mut checks = Vec::new();
    if !all_degrees_odd(graph) {
        checks.push(Check::new(
            format!("{name} has only odd degrees"),
            false,
            "some vertex has even degree",
        ));
        return VerifyReport::new("lemma5", checks);
    }
    if graph.edge_count() == 0 {
        return VerifyReport::new("lemma5", checks);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for i in 0..samples {
        let l = random_edge_friendly(graph, &mut rng);
        let c = l.counts();
        if c.unlabeled != 0 || c.index % 2 != 0 {
            failures.push(format!("sample {i}: {} -> {c:?}", l.bit_string()));
        }
    }
    checks.push(Check::new(
        format!("{name} sampled indices even, none unlabeled"),
        failures.is_empty(),
        if failures.is_empty() {
            format!("{samples} samples, seed {seed}")
        } else {
            failures.join("; ")
        },
    ));
    VerifyReport::new("lemma5", checks)
}

/// Product sizes of random graph pairs against the closed forms.
pub fn prop2(trials: usize, max_p: usize, seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = Vec::new();
    for trial in 0..trials {
        let g = random_graph(rng.random_range(1..=max_p.max(1)), &mut rng);
        let h = random_graph(rng.random_range(1..=max_p.max(1)), &mut rng);
        for kind in ProductKind::ALL {
            let product = kind.build(&g, &h);
            let expected = kind.expected_edge_count(&g, &h);
            if product.edge_count() != expected
                || product.vertex_count() != g.vertex_count() * h.vertex_count()
            {
                mismatches.push(format!(
                    "trial {trial} {}: q = {} expected {expected}",
                    kind.name(),
                    product.edge_count()
                ));
            }
        }
    }
    let check = Check::new(
        "product sizes match closed forms",
        mismatches.is_empty(),
        if mismatches.is_empty() {
            format!("{trials} pairs, p <= {max_p}, seed {seed}")
        } else {
            mismatches.join("; ")
        },
    );
    VerifyReport::new("prop2", vec![check])
}

/// Connected graphs of even size, each of which must admit a strongly
/// edge-balanced labeling.
pub fn even_size_corpus() -> Vec<(String, Graph)> {
    let mut corpus: Vec<(String, Graph)> = Vec::new();
    for n in [4, 6, 8, 10, 12, 14, 16] {
        corpus.push((format!("cycle:{n}"), cycle_graph(n)));
    }
    for n in [3, 5, 7, 9, 11, 13, 15, 17] {
        corpus.push((format!("path:{n}"), path_graph(n)));
    }
    corpus.push(("complete:4".into(), complete_graph(4)));
    corpus.push(("bipartite:2,4".into(), complete_bipartite(2, 4)));
    corpus.push(("crown:3".into(), crown_graph(3)));
    corpus
}

/// Small connected factors for the product checks.
pub fn factor_corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("complete:1", complete_graph(1)),
        ("complete:2", complete_graph(2)),
        ("path:3", path_graph(3)),
        ("complete:3", complete_graph(3)),
        ("path:4", path_graph(4)),
        ("cycle:4", cycle_graph(4)),
        ("bipartite:1,3", complete_bipartite(1, 3)),
    ]
}

fn describe(outcome: &StrongBalance) -> &'static str {
    match outcome {
        StrongBalance::Found(_) => "found",
        StrongBalance::Absent => "absent",
        StrongBalance::Inconclusive { .. } => "inconclusive",
    }
}

/// Strong-balance existence on the even-size corpus and the parity
/// conditions on products of the factor corpus.
pub fn theorem3(config: SearchConfig) -> VerifyReport {
    let mut checks = Vec::new();
    for (name, g) in even_size_corpus() {
        debug_assert!(g.is_connected() && g.edge_count() % 2 == 0);
        let outcome = find_strongly_edge_balanced(&Arc::new(g), config);
        let ok = outcome
            .found()
            .is_some_and(|l| l.is_strongly_edge_balanced() && l.is_edge_friendly());
        checks.push(Check::new(
            format!("{name} strongly edge-balanced"),
            ok,
            describe(&outcome),
        ));
    }

    let factors = factor_corpus();
    for (gname, g) in &factors {
        for (hname, h) in &factors {
            let parity = theorem3_conditions(g, h);
            let mut outcomes = Vec::new();
            for kind in [ProductKind::Cartesian, ProductKind::Lexicographic] {
                let product = kind.build(g, h);
                if product.edge_count() > THEOREM3_MAX_EDGES {
                    outcomes.push(None);
                    continue;
                }
                let outcome = find_strongly_edge_balanced(&Arc::new(product), config);
                if outcome.found().is_some() {
                    checks.push(Check::new(
                        format!("{} {gname} {hname}: parity condition holds", kind.name()),
                        parity.any_holds,
                        format!("{parity:?}"),
                    ));
                }
                outcomes.push(Some(outcome));
            }
            if let [Some(cart), Some(lex)] = outcomes.as_slice() {
                let conclusive =
                    |o: &StrongBalance| !matches!(o, StrongBalance::Inconclusive { .. });
                if conclusive(cart) && conclusive(lex) {
                    checks.push(Check::new(
                        format!("cartesian/lex {gname} {hname} agree"),
                        cart.found().is_some() == lex.found().is_some(),
                        format!("cartesian {}, lex {}", describe(cart), describe(lex)),
                    ));
                }
            }

            let direct = ProductKind::Direct.build(g, h);
            if direct.edge_count() <= THEOREM3_MAX_EDGES {
                let outcome = find_strongly_edge_balanced(&Arc::new(direct), config);
                checks.push(Check::new(
                    format!("direct {gname} {hname} strongly edge-balanced"),
                    outcome.found().is_some(),
                    describe(&outcome),
                ));
            }
        }
    }
    VerifyReport::new("theorem3", checks)
}
