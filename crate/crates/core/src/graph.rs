//! Finite simple undirected graphs with a canonical edge indexing.
//!
//! Vertices are dense indices `0..p`. Edges are stored as `(u, v)` with
//! `u < v`, sorted lexicographically, so every edge has a stable index
//! `0..q` that edge labelings refer to.

use std::fmt::Write as _;

use thiserror::Error;

/// Errors raised while building or parsing a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<GraphError>,
    },
    #[error("line {line}: malformed entry {text:?}")]
    Malformed { line: usize, text: String },
    #[error("missing vertex count line")]
    MissingVertexCount,
}

/// A finite simple undirected graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Endpoint order does not
    /// matter; loops, duplicates and out-of-range endpoints are rejected.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut normalized = Vec::new();
        for (a, b) in edges {
            for vertex in [a, b] {
                if vertex >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge {
                u: w[0].0,
                v: w[0].1,
            });
        }
        Ok(Self::from_sorted(vertex_count, normalized))
    }

    /// Edgeless graph on `vertex_count` vertices.
    pub fn empty(vertex_count: usize) -> Self {
        Self::from_sorted(vertex_count, Vec::new())
    }

    /// Builds from edges already normalized to `u < v`; sorts and dedups.
    /// Used by generators whose edge sets are correct by construction.
    pub(crate) fn from_generated(vertex_count: usize, mut edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < vertex_count));
        edges.sort_unstable();
        edges.dedup();
        Self::from_sorted(vertex_count, edges)
    }

    fn from_sorted(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut incident = vec![Vec::new(); vertex_count];
        for (index, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push(v);
            adjacency[v].push(u);
            incident[u].push(index);
            incident[v].push(index);
        }
        for neighbors in &mut adjacency {
            neighbors.sort_unstable();
        }
        Self {
            vertex_count,
            edges,
            adjacency,
            incident,
        }
    }

    /// Number of vertices, p(G).
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of edges, q(G).
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list, sorted, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Canonical index of the edge joining `a` and `b`, in either order.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Canonical indices of the edges incident to `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.adjacency
            .get(v)
            .map(Vec::len)
            .ok_or(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    /// The common degree `r` if every vertex has degree `r`.
    ///
    /// The graph on zero vertices is reported as not regular.
    pub fn regularity(&self) -> Option<usize> {
        let mut degrees = self.degrees();
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertex_count
    }

    /// Parses the edge-list text format: the first significant line holds
    /// the vertex count, every further nonempty line holds `u v`. Text after
    /// `#` is ignored.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = significant_lines(text);
        let (count_line, count_text) = lines.next().ok_or(GraphError::MissingVertexCount)?;
        let vertex_count = parse_vertex_count(count_line, count_text)?;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (line, content) in lines {
            let (a, b) = parse_edge_line(line, content)?;
            let at_line = |source| GraphError::AtLine {
                line,
                source: Box::new(source),
            };
            for vertex in [a, b] {
                if vertex >= vertex_count {
                    return Err(at_line(GraphError::VertexOutOfRange {
                        vertex,
                        vertex_count,
                    }));
                }
            }
            if a == b {
                return Err(at_line(GraphError::SelfLoop { vertex: a }));
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(at_line(GraphError::DuplicateEdge { u: key.0, v: key.1 }));
            }
            edges.push(key);
        }
        Ok(Self::from_generated(vertex_count, edges))
    }

    /// Writes the edge-list text format in canonical edge order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.vertex_count).unwrap();
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

/// Yields `(1-based line number, trimmed content)` for lines that are not
/// blank once comments are stripped.
pub(crate) fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("").trim();
        (!content.is_empty()).then_some((i + 1, content))
    })
}

pub(crate) fn parse_vertex_count(line: usize, content: &str) -> Result<usize, GraphError> {
    content.parse().map_err(|_| GraphError::Malformed {
        line,
        text: content.to_string(),
    })
}

pub(crate) fn parse_edge_line(line: usize, content: &str) -> Result<(usize, usize), GraphError> {
    let malformed = || GraphError::Malformed {
        line,
        text: content.to_string(),
    };
    let mut tokens = content.split_whitespace();
    let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
        return Err(malformed());
    };
    Ok((
        a.parse().map_err(|_| malformed())?,
        b.parse().map_err(|_| malformed())?,
    ))
}

/// K_n.
pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_generated(n, edges)
}

/// K_{m,n} with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let edges = (0..m)
        .flat_map(|u| (m..m + n).map(move |v| (u, v)))
        .collect();
    Graph::from_generated(m + n, edges)
}

/// K_n × K_2: part A is `a_i = i`, part B is `b_j = n + j`, and `a_i ~ b_j`
/// exactly when `i != j`.
pub fn crown_graph(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j)))
        .collect();
    Graph::from_generated(2 * n, edges)
}

/// Path on `n` vertices.
pub fn path_graph(n: usize) -> Graph {
    let edges = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_generated(n, edges)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::from_generated(n, edges)
}

/// The `d`-dimensional hypercube Q_d on `2^d` vertices.
pub fn hypercube(d: u32) -> Graph {
    let p = 1usize << d;
    let edges = (0..p)
        .flat_map(|u| (0..d).map(move |bit| (u, u ^ (1 << bit))))
        .filter(|&(u, v)| u < v)
        .collect();
    Graph::from_generated(p, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_sizes() {
        assert_eq!(
            (
                complete_graph(1).vertex_count(),
                complete_graph(1).edge_count()
            ),
            (1, 0)
        );
        assert_eq!(complete_graph(3).edge_count(), 3);
        assert_eq!(complete_graph(5).edge_count(), 10);
        assert_eq!(complete_graph(5).regularity(), Some(4));
    }

    #[test]
    fn complete_bipartite_shapes() {
        let single = complete_bipartite(1, 1);
        assert_eq!(single.edges(), &[(0, 1)]);

        let k33 = complete_bipartite(3, 3);
        assert_eq!(k33.edge_count(), 9);
        assert_eq!(k33.regularity(), Some(3));

        let k24 = complete_bipartite(2, 4);
        assert_eq!(k24.edge_count(), 8);
        assert_eq!(k24.degrees().collect::<Vec<_>>(), vec![4, 4, 2, 2, 2, 2]);
        assert_eq!(k24.regularity(), None);
        assert!(!k24.has_edge(0, 1));
        assert!(!k24.has_edge(2, 3));
    }

    #[test]
    fn crown_graph_shapes() {
        let c3 = crown_graph(3);
        assert_eq!(c3.edge_count(), 6);
        assert_eq!(c3.regularity(), Some(2));
        assert!(c3.is_connected(), "crown(3) is the 6-cycle");

        let c4 = crown_graph(4);
        assert_eq!(c4.edge_count(), 12);
        assert_eq!(c4.vertex_count(), 8);
        for v in 0..8 {
            assert_eq!(c4.degree(v).unwrap(), 3);
        }
        assert!(!c4.has_edge(1, 5));
        assert!(c4.has_edge(1, 6));
    }

    #[test]
    fn degree_out_of_range() {
        assert_eq!(
            crown_graph(4).degree(8),
            Err(GraphError::VertexOutOfRange {
                vertex: 8,
                vertex_count: 8
            })
        );
    }

    #[test]
    fn new_normalizes_and_rejects() {
        let g = Graph::new(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.edge_index(2, 1), Some(1));
        assert_eq!(
            Graph::new(2, [(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn edge_list_parses_path() {
        let g = Graph::from_edge_list("3\n0 1\n1 2\n").unwrap();
        assert_eq!(g, path_graph(3));
    }

    #[test]
    fn edge_list_comments_and_blank_lines() {
        let text = "# a triangle\n3   # vertices\n\n0 1\n  1 2 \n2 0 # closing edge\n";
        assert_eq!(Graph::from_edge_list(text).unwrap(), complete_graph(3));
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let err = Graph::from_edge_list("2\n0 0\n").unwrap_err();
        assert_eq!(
            err,
            GraphError::AtLine {
                line: 2,
                source: Box::new(GraphError::SelfLoop { vertex: 0 })
            }
        );

        let err = Graph::from_edge_list("3\n0 1\n\n1 0\n").unwrap_err();
        assert!(matches!(err, GraphError::AtLine { line: 4, .. }), "{err}");

        let err = Graph::from_edge_list("3\n0 5\n").unwrap_err();
        assert!(matches!(err, GraphError::AtLine { line: 2, .. }), "{err}");

        let err = Graph::from_edge_list("3\n0 1 2\n").unwrap_err();
        assert!(matches!(err, GraphError::Malformed { line: 2, .. }));

        let err = Graph::from_edge_list("x\n").unwrap_err();
        assert!(matches!(err, GraphError::Malformed { line: 1, .. }));

        assert_eq!(
            Graph::from_edge_list("# nothing\n"),
            Err(GraphError::MissingVertexCount)
        );
    }

    #[test]
    fn edge_list_round_trip_crown() {
        let g = crown_graph(3);
        let text = g.to_edge_list();
        assert!(text.starts_with("6\n0 4\n0 5\n"));
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn handshake_for_generators() {
        for g in [
            complete_graph(6),
            complete_bipartite(2, 5),
            crown_graph(5),
            path_graph(4),
            cycle_graph(7),
            hypercube(3),
            Graph::empty(4),
        ] {
            assert_eq!(g.degrees().sum::<usize>(), 2 * g.edge_count());
        }
    }

    #[test]
    fn hypercube_is_cubic() {
        let q3 = hypercube(3);
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert_eq!(q3.regularity(), Some(3));
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(crown_graph(6).edges(), crown_graph(6).edges());
    }
}
