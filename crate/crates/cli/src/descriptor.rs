//! Textual graph descriptors.
//!
//! ```text
//! complete:N | bipartite:M,N | crown:N | path:N | cycle:N | cube:D | empty:N
//! file:PATH
//! product:{lex|direct|cartesian}:SPEC:SPEC
//! ```
//!
//! Descriptors are `:`-separated tokens parsed left to right, so products
//! nest: `product:direct:complete:5:complete:2`. Inside a descriptor a file
//! path is one token and cannot contain `:`.

use std::path::Path;

use ebi_core::graph::{
    complete_bipartite, complete_graph, crown_graph, cycle_graph, hypercube, path_graph, Graph,
    GraphError,
};
use ebi_core::products::ProductKind;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DescriptorError {
    #[error("graph descriptor {descriptor:?}, token {position} ({token:?}): {reason}")]
    BadToken {
        descriptor: String,
        position: usize,
        token: String,
        reason: String,
    },
    #[error("graph descriptor {descriptor:?}: unexpected trailing tokens starting at {position}")]
    Trailing { descriptor: String, position: usize },
    #[error("graph descriptor {descriptor:?} ended early; expected {expected}")]
    Truncated {
        descriptor: String,
        expected: &'static str,
    },
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parsing {path}: {source}")]
    File {
        path: String,
        #[source]
        source: GraphError,
    },
}

struct Tokens<'a> {
    descriptor: &'a str,
    tokens: Vec<&'a str>,
    next: usize,
}

impl<'a> Tokens<'a> {
    fn take(&mut self, expected: &'static str) -> Result<(usize, &'a str), DescriptorError> {
        let position = self.next;
        let token =
            self.tokens
                .get(position)
                .copied()
                .ok_or_else(|| DescriptorError::Truncated {
                    descriptor: self.descriptor.to_string(),
                    expected,
                })?;
        self.next += 1;
        Ok((position, token))
    }

    fn bad(&self, position: usize, reason: impl Into<String>) -> DescriptorError {
        DescriptorError::BadToken {
            descriptor: self.descriptor.to_string(),
            position,
            token: self.tokens[position].to_string(),
            reason: reason.into(),
        }
    }

    fn number(&mut self, what: &'static str, min: usize) -> Result<usize, DescriptorError> {
        let (position, token) = self.take(what)?;
        let value: usize = token
            .parse()
            .map_err(|_| self.bad(position, format!("expected {what}")))?;
        if value < min {
            return Err(self.bad(position, format!("{what} must be at least {min}")));
        }
        Ok(value)
    }
}

/// Parses a descriptor into a graph.
pub fn parse(descriptor: &str) -> Result<Graph, DescriptorError> {
    let mut tokens = Tokens {
        descriptor,
        tokens: descriptor.split(':').collect(),
        next: 0,
    };
    let graph = parse_one(&mut tokens)?;
    if tokens.next < tokens.tokens.len() {
        return Err(DescriptorError::Trailing {
            descriptor: descriptor.to_string(),
            position: tokens.next,
        });
    }
    Ok(graph)
}

fn parse_one(tokens: &mut Tokens<'_>) -> Result<Graph, DescriptorError> {
    let (position, family) = tokens.take("a graph family")?;
    match family {
        "complete" => Ok(complete_graph(tokens.number("vertex count", 1)?)),
        "crown" => Ok(crown_graph(tokens.number("crown order", 2)?)),
        "path" => Ok(path_graph(tokens.number("vertex count", 1)?)),
        "cycle" => Ok(cycle_graph(tokens.number("cycle length", 3)?)),
        "empty" => Ok(Graph::empty(tokens.number("vertex count", 0)?)),
        "cube" => {
            let d = tokens.number("dimension", 0)?;
            if d > 16 {
                return Err(tokens.bad(tokens.next - 1, "dimension must be at most 16"));
            }
            Ok(hypercube(d as u32))
        }
        "bipartite" => {
            let (position, token) = tokens.take("part sizes M,N")?;
            let parts: Option<Vec<usize>> = token.split(',').map(|s| s.parse().ok()).collect();
            match parts.as_deref() {
                Some(&[m, n]) if m >= 1 && n >= 1 => Ok(complete_bipartite(m, n)),
                _ => Err(tokens.bad(position, "expected two positive part sizes M,N")),
            }
        }
        "file" => {
            let (_, path) = tokens.take("a file path")?;
            load_file(Path::new(path))
        }
        "product" => {
            let (position, kind) = tokens.take("a product kind")?;
            let kind = match kind {
                "lex" => ProductKind::Lexicographic,
                "direct" => ProductKind::Direct,
                "cartesian" => ProductKind::Cartesian,
                _ => return Err(tokens.bad(position, "expected lex, direct or cartesian")),
            };
            let left = parse_one(tokens)?;
            let right = parse_one(tokens)?;
            Ok(kind.build(&left, &right))
        }
        _ => Err(tokens.bad(position, "unknown graph family")),
    }
}

fn load_file(path: &Path) -> Result<Graph, DescriptorError> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| DescriptorError::Io {
        path: display.clone(),
        source,
    })?;
    Graph::from_edge_list(&text).map_err(|source| DescriptorError::File {
        path: display,
        source,
    })
}
