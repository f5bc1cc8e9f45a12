//! Extremal edge-friendly labelings of the crown graph K_n × K_2 and the
//! switch schedules that walk the index from its maximum down to zero.
//!
//! Vertices follow [`crown_graph`]: `a_i = i`, `b_j = n + j`. The dense
//! vertices are `u = a_0`, `v = b_0` (plus `u' = a_1`, `v' = b_1` for odd
//! `n`); the remaining vertices are `u_i`, `v_i` with `u_i ≁ v_i`, indexed
//! cyclically from 1.
//!
//! Small orders where the window construction does not fit (`n = 3` and
//! `n = 5`) are covered by fixed witness tables.

use std::sync::Arc;

use thiserror::Error;

use crate::graph::{crown_graph, Graph};
use crate::labeling::{EdgeLabeling, LabelingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("n = {n} is outside the domain of this construction: {requirement}")]
    OutOfDomain { n: usize, requirement: &'static str },
    #[error("{index} is not in the edge-balanced index set of K_{n} x K_2")]
    IndexNotAttained { n: usize, index: usize },
    #[error("switch step {step} of {total} ({zero_edge:?} <-> {one_edge:?}) failed: {source}")]
    StepFailed {
        step: usize,
        total: usize,
        zero_edge: (usize, usize),
        one_edge: (usize, usize),
        #[source]
        source: LabelingError,
    },
    #[error(
        "switch step {step} of {total} produced index {found}, expected {expected} \
         (labels {labels})"
    )]
    UnexpectedIndex {
        step: usize,
        total: usize,
        expected: usize,
        found: usize,
        labels: String,
    },
    #[error("switch step {step} of {total} broke edge-friendliness")]
    NotEdgeFriendly { step: usize, total: usize },
}

/// One exchange: a 0-edge that becomes 1 and a 1-edge that becomes 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SwitchPair {
    pub zero_edge: usize,
    pub one_edge: usize,
}

/// An extremal labeling plus an ordered list of switches. After `t` steps
/// the index is `start_index - t * step_delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchSchedule {
    start: EdgeLabeling,
    steps: Vec<SwitchPair>,
    step_delta: usize,
}

impl SwitchSchedule {
    pub fn graph(&self) -> &Arc<Graph> {
        self.start.graph()
    }

    pub fn start(&self) -> &EdgeLabeling {
        &self.start
    }

    pub fn steps(&self) -> &[SwitchPair] {
        &self.steps
    }

    pub fn step_delta(&self) -> usize {
        self.step_delta
    }

    pub fn start_index(&self) -> usize {
        self.start.index()
    }

    /// Labeling after the first `t` steps, each step validated.
    pub fn apply_prefix(&self, t: usize) -> Result<EdgeLabeling, ConstructError> {
        let mut states = self.replay_steps(t.min(self.steps.len()))?;
        Ok(states.pop().expect("replay yields the start state"))
    }

    /// All `steps().len() + 1` states, starting with the start labeling.
    ///
    /// Every swap precondition, edge-friendliness and the expected index
    /// after each step are checked; the first violation aborts the replay.
    pub fn replay(&self) -> Result<Vec<EdgeLabeling>, ConstructError> {
        self.replay_steps(self.steps.len())
    }

    /// Index after each prefix, start included.
    pub fn trajectory(&self) -> Result<Vec<usize>, ConstructError> {
        Ok(self.replay()?.iter().map(EdgeLabeling::index).collect())
    }

    fn replay_steps(&self, count: usize) -> Result<Vec<EdgeLabeling>, ConstructError> {
        let graph = self.graph();
        let total = self.steps.len();
        let start_index = self.start_index();
        let mut states = Vec::with_capacity(count + 1);
        states.push(self.start.clone());
        for (i, pair) in self.steps[..count].iter().enumerate() {
            let step = i + 1;
            let current = states.last().expect("nonempty");
            let next = current
                .swap_pair(pair.zero_edge, pair.one_edge)
                .map_err(|source| ConstructError::StepFailed {
                    step,
                    total,
                    zero_edge: graph.edge(pair.zero_edge),
                    one_edge: graph.edge(pair.one_edge),
                    source,
                })?;
            if !next.is_edge_friendly() {
                return Err(ConstructError::NotEdgeFriendly { step, total });
            }
            let expected = start_index.saturating_sub(step * self.step_delta);
            let found = next.index();
            if found != expected {
                return Err(ConstructError::UnexpectedIndex {
                    step,
                    total,
                    expected,
                    found,
                    labels: next.bit_string(),
                });
            }
            states.push(next);
        }
        Ok(states)
    }
}

/// Cyclic successor: advances `i` by `k` positions within `1..=len`.
fn nxt(i: usize, k: usize, len: usize) -> usize {
    (i - 1 + k) % len + 1
}

/// Vertex naming shared by both parity cases.
struct Crown {
    n: usize,
    graph: Arc<Graph>,
    /// `u_i = a_{i + offset}`, `v_i = b_{i + offset}`.
    offset: usize,
}

impl Crown {
    fn new(n: usize, offset: usize) -> Self {
        Self {
            n,
            graph: Arc::new(crown_graph(n)),
            offset,
        }
    }

    fn a(&self, i: usize) -> usize {
        i
    }

    fn b(&self, j: usize) -> usize {
        self.n + j
    }

    fn u(&self, i: usize) -> usize {
        self.a(i + self.offset)
    }

    fn v(&self, i: usize) -> usize {
        self.b(i + self.offset)
    }

    fn edge(&self, x: usize, y: usize) -> usize {
        self.graph
            .edge_index(x, y)
            .unwrap_or_else(|| panic!("({x}, {y}) is not a crown edge"))
    }

    fn pair(&self, zero: (usize, usize), one: (usize, usize)) -> SwitchPair {
        SwitchPair {
            zero_edge: self.edge(zero.0, zero.1),
            one_edge: self.edge(one.0, one.1),
        }
    }

    /// Each `u_i` gets 1-edges to the `window` cyclically next `v`'s.
    fn window_edges(&self, cycle_len: usize, window: usize) -> Vec<usize> {
        (1..=cycle_len)
            .flat_map(|i| (1..=window).map(move |k| (i, nxt(i, k, cycle_len))))
            .map(|(i, j)| self.edge(self.u(i), self.v(j)))
            .collect()
    }
}

fn require_even(n: usize) -> Result<(), ConstructError> {
    if n.is_multiple_of(2) && n >= 4 {
        Ok(())
    } else {
        Err(ConstructError::OutOfDomain {
            n,
            requirement: "n must be even and at least 4",
        })
    }
}

fn require_odd(n: usize) -> Result<(), ConstructError> {
    if n % 2 == 1 && n >= 7 {
        Ok(())
    } else {
        Err(ConstructError::OutOfDomain {
            n,
            requirement: "n must be odd and at least 7",
        })
    }
}

/// Maximum-index labeling for even `n`: index `2n - 4`, with `u = a_0` and
/// `v = b_0` labeled 0 and every other vertex labeled 1.
pub fn max_labeling_even(n: usize) -> Result<EdgeLabeling, ConstructError> {
    require_even(n)?;
    let crown = Crown::new(n, 0);
    let ones = crown.window_edges(n - 1, n / 2);
    Ok(EdgeLabeling::from_one_edges(Arc::clone(&crown.graph), ones).expect("valid edge indices"))
}

/// Maximum-index labeling for odd `n >= 7`: index `2n - 8`, with the four
/// dense vertices labeled 0 and the rest labeled 1.
pub fn max_labeling_odd(n: usize) -> Result<EdgeLabeling, ConstructError> {
    require_odd(n)?;
    Ok(odd_start(&Crown::new(n, 1)))
}

fn odd_start(crown: &Crown) -> EdgeLabeling {
    let n = crown.n;
    let mut ones = crown.window_edges(n - 2, n.div_ceil(2));
    // (u', v) is a 1-edge, (u, v') stays 0.
    ones.push(crown.edge(crown.a(1), crown.b(0)));
    EdgeLabeling::from_one_edges(Arc::clone(&crown.graph), ones).expect("valid edge indices")
}

/// `n - 2` switches, each lowering the index by 2.
///
/// First `((u, v_{j+1}), (v_{j+1}, u_j))` for `j = 1..(n-2)/2`, turning
/// `u_j` to 0; then `((v, u_j), (u_j, v_{j+2}))` for the same `j`, turning
/// `v_{j+2}` to 0.
pub fn switch_schedule_even(n: usize) -> Result<SwitchSchedule, ConstructError> {
    let start = max_labeling_even(n)?;
    let crown = Crown::new(n, 0);
    let (u, v) = (crown.a(0), crown.b(0));
    let half = (n - 2) / 2;
    let mut steps = Vec::with_capacity(n - 2);
    for j in 1..=half {
        let w = crown.v(j + 1);
        steps.push(crown.pair((u, w), (w, crown.u(j))));
    }
    for j in 1..=half {
        let x = crown.u(j);
        steps.push(crown.pair((v, x), (x, crown.v(j + 2))));
    }
    Ok(SwitchSchedule {
        start,
        steps,
        step_delta: 2,
    })
}

/// `2n - 8` switches, each lowering the index by 1.
///
/// Every step moves one 1-edge of a sparse vertex onto a dense vertex of the
/// same part, so that sparse vertex becomes unlabeled while its partner keeps
/// its 1-degree. The dense vertices `u` and `v'` start with no 1-edges and
/// can take `(n-3)/2` before they tie; `u'` and `v` already carry `(u', v)`
/// and take `(n-5)/2`.
///
/// Part A: `((d, v_{j+1}), (v_{j+1}, u_j))` for `j = 1..=n-4`, with
/// `d = u` while `j <= (n-3)/2` and `d = u'` after.
/// Part B: `((d, u_m), (u_m, v_j))` for `j = 1..=n-4` where `v_j` is the
/// second window neighbor of `u_m`, with `d = v` while `j <= (n-5)/2` and
/// `d = v'` after.
pub fn switch_schedule_odd(n: usize) -> Result<SwitchSchedule, ConstructError> {
    require_odd(n)?;
    let crown = Crown::new(n, 1);
    let start = odd_start(&crown);
    let (u, u_prime, v, v_prime) = (crown.a(0), crown.a(1), crown.b(0), crown.b(1));
    let cycle_len = n - 2;
    let mut steps = Vec::with_capacity(2 * n - 8);
    for j in 1..=n - 4 {
        let dense = if j <= (n - 3) / 2 { u } else { u_prime };
        let w = crown.v(j + 1);
        steps.push(crown.pair((dense, w), (w, crown.u(j))));
    }
    for j in 1..=n - 4 {
        let dense = if j <= (n - 5) / 2 { v } else { v_prime };
        // nxt(m, 2) = j
        let m = (j + cycle_len - 3) % cycle_len + 1;
        let x = crown.u(m);
        steps.push(crown.pair((dense, x), (x, crown.v(j))));
    }
    Ok(SwitchSchedule {
        start,
        steps,
        step_delta: 1,
    })
}

/// Schedule for either parity (`n` even `>= 4` or odd `>= 7`).
pub fn switch_schedule(n: usize) -> Result<SwitchSchedule, ConstructError> {
    if n.is_multiple_of(2) {
        switch_schedule_even(n)
    } else {
        switch_schedule_odd(n)
    }
}

/// The index set of K_n × K_2 in closed form, ascending.
pub fn ebi_formula(n: usize) -> Result<Vec<usize>, ConstructError> {
    match n {
        0..=2 => Err(ConstructError::OutOfDomain {
            n,
            requirement: "n must be at least 3",
        }),
        3 => Ok(vec![0]),
        _ if n.is_multiple_of(2) => Ok((0..=2 * n - 4).step_by(2).collect()),
        _ => Ok((0..=2 * n - 8).collect()),
    }
}

/// 1-edges `(i, j)` meaning `(a_i, b_j)`, with the index each attains.
const CROWN_3_WITNESSES: &[(usize, &[(usize, usize)])] = &[(0, &[(0, 1), (0, 2), (1, 0)])];

const CROWN_5_WITNESSES: &[(usize, &[(usize, usize)])] = &[
    (
        0,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 0),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 0),
            (2, 1),
        ],
    ),
    (
        1,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 0),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 0),
            (3, 0),
        ],
    ),
    (
        2,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 0),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (4, 3),
        ],
    ),
];

fn table_witness(n: usize, table: &[(usize, &[(usize, usize)])], index: usize) -> EdgeLabeling {
    let (_, ones) = table
        .iter()
        .find(|(k, _)| *k == index)
        .expect("index validated against the formula");
    let graph = Arc::new(crown_graph(n));
    EdgeLabeling::from_one_pairs(graph, ones.iter().map(|&(i, j)| (i, n + j)))
        .expect("table entries are crown edges")
}

/// A witness labeling of K_n × K_2 with index exactly `index`.
pub fn labeling_for_index(n: usize, index: usize) -> Result<EdgeLabeling, ConstructError> {
    let attained = ebi_formula(n)?;
    if !attained.contains(&index) {
        return Err(ConstructError::IndexNotAttained { n, index });
    }
    match n {
        3 => Ok(table_witness(n, CROWN_3_WITNESSES, index)),
        5 => Ok(table_witness(n, CROWN_5_WITNESSES, index)),
        _ => {
            let schedule = switch_schedule(n)?;
            let t = (schedule.start_index() - index) / schedule.step_delta();
            schedule.apply_prefix(t)
        }
    }
}

/// One witness per index, ascending by index.
pub fn all_witnesses(n: usize) -> Result<Vec<(usize, EdgeLabeling)>, ConstructError> {
    let attained = ebi_formula(n)?;
    match n {
        3 | 5 => attained
            .into_iter()
            .map(|k| labeling_for_index(n, k).map(|l| (k, l)))
            .collect(),
        _ => {
            let mut states = switch_schedule(n)?.replay()?;
            states.reverse();
            Ok(states.into_iter().map(|l| (l.index(), l)).collect())
        }
    }
}
