//! Binary edge labelings and the partial vertex labeling they induce.
//!
//! A vertex takes the majority label of its incident edges and stays
//! unlabeled on a tie. Labelings are values: every operation that changes
//! labels returns a new [`EdgeLabeling`].

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{significant_lines, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("expected {expected} edge labels, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge index {index} out of range for a graph with {edge_count} edges")]
    EdgeOutOfRange { index: usize, edge_count: usize },
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error(
        "swap precondition violated: edge {e_zero} {e_zero_edge:?} carries {zero_label}, \
         edge {e_one} {e_one_edge:?} carries {one_label} (expected 0 and 1)"
    )]
    SwapPrecondition {
        e_zero: usize,
        e_zero_edge: (usize, usize),
        zero_label: u8,
        e_one: usize,
        e_one_edge: (usize, usize),
        one_label: u8,
    },
    #[error("line {line}: label line must contain only '0' and '1', got {text:?}")]
    BadLabelLine { line: usize, text: String },
    #[error("missing label line")]
    MissingLabels,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Induced label of a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexLabel {
    Zero,
    One,
    Unlabeled,
}

impl VertexLabel {
    /// Majority rule on the two i-degrees.
    pub fn from_degrees(zero_degree: usize, one_degree: usize) -> Self {
        use std::cmp::Ordering::*;
        match zero_degree.cmp(&one_degree) {
            Greater => VertexLabel::Zero,
            Less => VertexLabel::One,
            Equal => VertexLabel::Unlabeled,
        }
    }
}

/// The induced partial vertex labeling, one entry per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialVertexLabeling(Vec<VertexLabel>);

impl PartialVertexLabeling {
    pub fn values(&self) -> &[VertexLabel] {
        &self.0
    }

    pub fn get(&self, v: usize) -> VertexLabel {
        self.0[v]
    }

    pub fn count(&self, label: VertexLabel) -> usize {
        self.0.iter().filter(|&&l| l == label).count()
    }
}

/// Edge and vertex label counts of one labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LabelCounts {
    pub e0: usize,
    pub e1: usize,
    pub v0: usize,
    pub v1: usize,
    pub unlabeled: usize,
    pub index: usize,
}

/// A 0/1 label on every edge of a fixed graph, by canonical edge index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    graph: Arc<Graph>,
    labels: Vec<bool>,
}

impl fmt::Debug for EdgeLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EdgeLabeling")
            .field("p", &self.graph.vertex_count())
            .field("q", &self.graph.edge_count())
            .field("labels", &self.bit_string())
            .finish()
    }
}

impl EdgeLabeling {
    pub fn new(graph: Arc<Graph>, labels: Vec<bool>) -> Result<Self, LabelingError> {
        if labels.len() != graph.edge_count() {
            return Err(LabelingError::LengthMismatch {
                expected: graph.edge_count(),
                found: labels.len(),
            });
        }
        Ok(Self { graph, labels })
    }

    pub fn all_zero(graph: Arc<Graph>) -> Self {
        let labels = vec![false; graph.edge_count()];
        Self { graph, labels }
    }

    /// Labeling whose 1-edges are exactly the given edge indices.
    pub fn from_one_edges<I>(graph: Arc<Graph>, ones: I) -> Result<Self, LabelingError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut labeling = Self::all_zero(graph);
        let edge_count = labeling.labels.len();
        for index in ones {
            *labeling
                .labels
                .get_mut(index)
                .ok_or(LabelingError::EdgeOutOfRange { index, edge_count })? = true;
        }
        Ok(labeling)
    }

    /// Labeling whose 1-edges are exactly the given vertex pairs.
    pub fn from_one_pairs<I>(graph: Arc<Graph>, ones: I) -> Result<Self, LabelingError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let indices = ones
            .into_iter()
            .map(|(u, v)| {
                graph
                    .edge_index(u, v)
                    .ok_or(LabelingError::NotAnEdge { u, v })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_one_edges(graph, indices)
    }

    /// Bit `i` of `mask` is the label of edge `i`. Requires `q <= 64`.
    pub(crate) fn from_mask(graph: Arc<Graph>, mask: u64) -> Self {
        debug_assert!(graph.edge_count() <= 64);
        let labels = (0..graph.edge_count())
            .map(|i| mask >> i & 1 == 1)
            .collect();
        Self { graph, labels }
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn label(&self, edge: usize) -> bool {
        self.labels[edge]
    }

    pub fn labels(&self) -> &[bool] {
        &self.labels
    }

    /// Indices of the 1-edges, ascending.
    pub fn one_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.labels
            .iter()
            .enumerate()
            .filter_map(|(i, &one)| one.then_some(i))
    }

    /// Labels as a string of `q` characters in canonical edge order.
    pub fn bit_string(&self) -> String {
        self.labels
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }

    pub fn from_bit_string(graph: Arc<Graph>, bits: &str) -> Result<Self, LabelingError> {
        let labels = parse_bits(bits).ok_or_else(|| LabelingError::BadLabelLine {
            line: 1,
            text: bits.to_string(),
        })?;
        Self::new(graph, labels)
    }

    /// Number of 1-edges incident to `v`.
    pub fn one_degree(&self, v: usize) -> usize {
        self.graph
            .incident_edges(v)
            .iter()
            .filter(|&&e| self.labels[e])
            .count()
    }

    pub fn is_edge_friendly(&self) -> bool {
        let e1 = self.labels.iter().filter(|&&b| b).count();
        let e0 = self.labels.len() - e1;
        e0.abs_diff(e1) <= 1
    }

    pub fn induced_vertex_labeling(&self) -> PartialVertexLabeling {
        PartialVertexLabeling(
            (0..self.graph.vertex_count())
                .map(|v| {
                    let one = self.one_degree(v);
                    VertexLabel::from_degrees(self.graph.incident_edges(v).len() - one, one)
                })
                .collect(),
        )
    }

    pub fn counts(&self) -> LabelCounts {
        let e1 = self.labels.iter().filter(|&&b| b).count();
        let induced = self.induced_vertex_labeling();
        let v0 = induced.count(VertexLabel::Zero);
        let v1 = induced.count(VertexLabel::One);
        LabelCounts {
            e0: self.labels.len() - e1,
            e1,
            v0,
            v1,
            unlabeled: self.graph.vertex_count() - v0 - v1,
            index: v0.abs_diff(v1),
        }
    }

    /// |v(0) - v(1)|.
    pub fn index(&self) -> usize {
        self.counts().index
    }

    pub fn is_strongly_edge_balanced(&self) -> bool {
        let c = self.counts();
        c.e0 == c.e1 && c.v0 == c.v1
    }

    /// Exchanges the labels of a 0-edge and a 1-edge.
    pub fn swap_pair(&self, e_zero: usize, e_one: usize) -> Result<Self, LabelingError> {
        let edge_count = self.labels.len();
        for index in [e_zero, e_one] {
            if index >= edge_count {
                return Err(LabelingError::EdgeOutOfRange { index, edge_count });
            }
        }
        if self.labels[e_zero] || !self.labels[e_one] {
            return Err(LabelingError::SwapPrecondition {
                e_zero,
                e_zero_edge: self.graph.edge(e_zero),
                zero_label: self.labels[e_zero] as u8,
                e_one,
                e_one_edge: self.graph.edge(e_one),
                one_label: self.labels[e_one] as u8,
            });
        }
        let mut swapped = self.clone();
        swapped.labels[e_zero] = true;
        swapped.labels[e_one] = false;
        Ok(swapped)
    }

    /// Every label flipped.
    pub fn complement(&self) -> Self {
        Self {
            graph: Arc::clone(&self.graph),
            labels: self.labels.iter().map(|&b| !b).collect(),
        }
    }

    /// Labeling text format: the graph's edge list followed by one line of
    /// `q` label characters.
    pub fn to_text(&self) -> String {
        let mut out = self.graph.to_edge_list();
        out.push_str(&self.bit_string());
        out.push('\n');
        out
    }

    pub fn from_text(text: &str) -> Result<Self, LabelingError> {
        let lines: Vec<_> = significant_lines(text).collect();
        let label_line = match lines.as_slice() {
            [] => return Err(GraphError::MissingVertexCount.into()),
            [_, .., last] if last.1.split_whitespace().count() == 1 => Some(*last),
            _ => None,
        };
        let graph_text = match label_line {
            Some((line, _)) => text.lines().take(line - 1).collect::<Vec<_>>().join("\n"),
            None => text.to_string(),
        };
        let graph = Arc::new(Graph::from_edge_list(&graph_text)?);
        match label_line {
            Some((line, content)) => {
                let labels = parse_bits(content).ok_or_else(|| LabelingError::BadLabelLine {
                    line,
                    text: content.to_string(),
                })?;
                Self::new(graph, labels)
            }
            None if graph.edge_count() == 0 => Ok(Self::all_zero(graph)),
            None => Err(LabelingError::MissingLabels),
        }
    }
}

fn parse_bits(bits: &str) -> Option<Vec<bool>> {
    bits.chars()
        .map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })
        .collect()
}
