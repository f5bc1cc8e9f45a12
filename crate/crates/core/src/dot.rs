//! Graphviz rendering of a labeling.
//!
//! Only 1-edges are drawn; 0-edges are emitted invisible so the layout
//! still sees them. Vertices labeled 1 are black, 0 grey, unlabeled hollow.

use std::fmt::Write as _;

use crate::labeling::{EdgeLabeling, VertexLabel};

/// Renders `labeling`, naming vertex `v` with `name(v)`.
pub fn labeling_to_dot(
    labeling: &EdgeLabeling,
    title: &str,
    name: impl Fn(usize) -> String,
) -> String {
    let graph = labeling.graph();
    let induced = labeling.induced_vertex_labeling();
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(title)).unwrap();
    writeln!(out, "  label={};", quote(title)).unwrap();
    writeln!(out, "  node [shape=circle, width=0.3, fixedsize=true];").unwrap();
    for v in 0..graph.vertex_count() {
        let style = match induced.get(v) {
            VertexLabel::One => "style=filled, fillcolor=black, fontcolor=white",
            VertexLabel::Zero => "style=filled, fillcolor=gray60",
            VertexLabel::Unlabeled => "style=solid",
        };
        writeln!(out, "  {v} [label={}, {style}];", quote(&name(v))).unwrap();
    }
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        if labeling.label(e) {
            writeln!(out, "  {u} -- {v};").unwrap();
        } else {
            writeln!(out, "  {u} -- {v} [style=invis];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Vertex names `a0..a{n-1}`, `b0..b{n-1}` for the crown graph on `2n`
/// vertices.
pub fn crown_vertex_name(n: usize) -> impl Fn(usize) -> String {
    move |v| {
        if v < n {
            format!("a{v}")
        } else {
            format!("b{}", v - n)
        }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
