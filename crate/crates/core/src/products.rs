//! Lexicographic, direct and Cartesian products.
//!
//! Product vertex `(u, v)` with `u` in the left factor and `v` in the right
//! factor is numbered `u * p(right) + v`.

use crate::graph::Graph;

/// Which of the three products to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Lexicographic,
    Direct,
    Cartesian,
}

impl ProductKind {
    pub const ALL: [ProductKind; 3] = [
        ProductKind::Lexicographic,
        ProductKind::Direct,
        ProductKind::Cartesian,
    ];

    pub fn build(self, left: &Graph, right: &Graph) -> Graph {
        match self {
            ProductKind::Lexicographic => lexicographic_product(left, right),
            ProductKind::Direct => direct_product(left, right),
            ProductKind::Cartesian => cartesian_product(left, right),
        }
    }

    /// Edge count predicted from the factor sizes alone.
    pub fn expected_edge_count(self, left: &Graph, right: &Graph) -> usize {
        let (p1, q1) = (left.vertex_count(), left.edge_count());
        let (p2, q2) = (right.vertex_count(), right.edge_count());
        match self {
            ProductKind::Lexicographic => p2 * p2 * q1 + p1 * q2,
            ProductKind::Direct => 2 * q1 * q2,
            ProductKind::Cartesian => p2 * q1 + p1 * q2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Lexicographic => "lex",
            ProductKind::Direct => "direct",
            ProductKind::Cartesian => "cartesian",
        }
    }
}

fn pair_edge(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// G₁[G₂]: `(u1,v1) ~ (u2,v2)` iff `u1 ~ u2`, or `u1 = u2` and `v1 ~ v2`.
pub fn lexicographic_product(left: &Graph, right: &Graph) -> Graph {
    let p2 = right.vertex_count();
    let mut edges = Vec::with_capacity(ProductKind::Lexicographic.expected_edge_count(left, right));
    for &(u1, u2) in left.edges() {
        for v1 in 0..p2 {
            for v2 in 0..p2 {
                edges.push(pair_edge(u1 * p2 + v1, u2 * p2 + v2));
            }
        }
    }
    for u in 0..left.vertex_count() {
        for &(v1, v2) in right.edges() {
            edges.push((u * p2 + v1, u * p2 + v2));
        }
    }
    Graph::from_generated(left.vertex_count() * p2, edges)
}

/// G₁ × G₂: `(u1,v1) ~ (u2,v2)` iff `u1 ~ u2` and `v1 ~ v2`.
pub fn direct_product(left: &Graph, right: &Graph) -> Graph {
    let p2 = right.vertex_count();
    let mut edges = Vec::with_capacity(ProductKind::Direct.expected_edge_count(left, right));
    for &(u1, u2) in left.edges() {
        for &(v1, v2) in right.edges() {
            edges.push(pair_edge(u1 * p2 + v1, u2 * p2 + v2));
            edges.push(pair_edge(u1 * p2 + v2, u2 * p2 + v1));
        }
    }
    Graph::from_generated(left.vertex_count() * p2, edges)
}

/// G₁ □ G₂: `(u1,v1) ~ (u2,v2)` iff `v1 = v2` and `u1 ~ u2`, or `u1 = u2`
/// and `v1 ~ v2`.
pub fn cartesian_product(left: &Graph, right: &Graph) -> Graph {
    let p2 = right.vertex_count();
    let mut edges = Vec::with_capacity(ProductKind::Cartesian.expected_edge_count(left, right));
    for &(u1, u2) in left.edges() {
        for v in 0..p2 {
            edges.push((u1 * p2 + v, u2 * p2 + v));
        }
    }
    for u in 0..left.vertex_count() {
        for &(v1, v2) in right.edges() {
            edges.push((u * p2 + v1, u * p2 + v2));
        }
    }
    Graph::from_generated(left.vertex_count() * p2, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, crown_graph, cycle_graph, path_graph};

    /// Adjacency straight from the product definitions, pair by pair.
    fn brute_force(kind: ProductKind, g: &Graph, h: &Graph) -> Graph {
        let p2 = h.vertex_count();
        let p = g.vertex_count() * p2;
        let mut edges = Vec::new();
        for x in 0..p {
            for y in x + 1..p {
                let (u1, v1) = (x / p2, x % p2);
                let (u2, v2) = (y / p2, y % p2);
                let adjacent = match kind {
                    ProductKind::Lexicographic => {
                        g.has_edge(u1, u2) || (u1 == u2 && h.has_edge(v1, v2))
                    }
                    ProductKind::Direct => g.has_edge(u1, u2) && h.has_edge(v1, v2),
                    ProductKind::Cartesian => {
                        (v1 == v2 && g.has_edge(u1, u2)) || (u1 == u2 && h.has_edge(v1, v2))
                    }
                };
                if adjacent {
                    edges.push((x, y));
                }
            }
        }
        Graph::new(p, edges).unwrap()
    }

    #[test]
    fn lexicographic_examples() {
        let k3k2 = lexicographic_product(&complete_graph(3), &complete_graph(2));
        assert_eq!(k3k2.edge_count(), 15);

        let c5 = cycle_graph(5);
        let with_k1 = lexicographic_product(&c5, &complete_graph(1));
        assert_eq!(with_k1, c5);

        let k2k2 = lexicographic_product(&complete_graph(2), &complete_graph(2));
        assert_eq!(k2k2, complete_graph(4));
    }

    #[test]
    fn direct_examples() {
        let k3k2 = direct_product(&complete_graph(3), &complete_graph(2));
        assert_eq!(k3k2.edge_count(), 6);
        let none = direct_product(&complete_graph(4), &Graph::empty(3));
        assert_eq!(none.edge_count(), 0);
        assert_eq!(none.vertex_count(), 12);
    }

    #[test]
    fn crown_is_direct_product_under_vertex_relabeling() {
        // Product numbering is i*2+s; crown numbering is s*n+i.
        for n in 2..=7 {
            let product = direct_product(&complete_graph(n), &complete_graph(2));
            let relabeled = Graph::new(
                2 * n,
                product
                    .edges()
                    .iter()
                    .map(|&(x, y)| ((x % 2) * n + x / 2, (y % 2) * n + y / 2)),
            )
            .unwrap();
            assert_eq!(relabeled, crown_graph(n), "n = {n}");
        }
    }

    #[test]
    fn cartesian_examples() {
        let prism = cartesian_product(&complete_graph(3), &complete_graph(2));
        assert_eq!(prism.edge_count(), 9);
        assert_eq!(prism.regularity(), Some(3));

        let square = cartesian_product(&complete_graph(2), &complete_graph(2));
        assert_eq!(square.edge_count(), 4);
        assert_eq!(square.regularity(), Some(2));
        assert!(square.is_connected());

        let grid = cartesian_product(&path_graph(3), &path_graph(3));
        assert_eq!(grid.edge_count(), 12);
    }

    #[test]
    fn products_match_definitions() {
        let factors = [
            complete_graph(3),
            path_graph(4),
            cycle_graph(4),
            Graph::new(4, [(0, 1)]).unwrap(),
            Graph::empty(2),
        ];
        for g in &factors {
            for h in &factors {
                for kind in ProductKind::ALL {
                    let built = kind.build(g, h);
                    assert_eq!(built, brute_force(kind, g, h), "{kind:?}");
                    assert_eq!(built.edge_count(), kind.expected_edge_count(g, h));
                }
            }
        }
    }

    #[test]
    fn direct_product_swaps_factors() {
        let g = path_graph(3);
        let h = cycle_graph(4);
        let gh = direct_product(&g, &h);
        let hg = direct_product(&h, &g);
        let (pg, ph) = (g.vertex_count(), h.vertex_count());
        let swap = |x: usize| (x % ph) * pg + x / ph;
        let mapped = Graph::new(
            gh.vertex_count(),
            gh.edges().iter().map(|&(x, y)| (swap(x), swap(y))),
        )
        .unwrap();
        assert_eq!(mapped, hg);
    }
}
