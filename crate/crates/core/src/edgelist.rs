//! Plain-text edge lists.
//!
//! One edge per line as two whitespace-separated labels. Blank lines and
//! lines starting with `#` are ignored. A single-token line declares an
//! isolated vertex and is only accepted as the sole content line, which is
//! how the one-vertex graph is written.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected two vertex labels, found {tokens} tokens")]
    BadLine { line: usize, tokens: usize },
    #[error("line {line}: a lone vertex is only allowed as the sole line")]
    LoneVertex { line: usize },
    #[error("no edges or vertices in input")]
    Empty,
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error(transparent)]
    Structure(GraphError),
}

/// Parses edge-list text into a [`Graph`].
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut pairs: Vec<(&str, &str)> = Vec::new();
    let mut lines: Vec<usize> = Vec::new();
    let mut lone: Option<(usize, &str)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens.as_slice() {
            [a, b] => {
                if let Some((l, _)) = lone {
                    return Err(ParseError::LoneVertex { line: l });
                }
                pairs.push((a, b));
                lines.push(line);
            }
            [v] => {
                if lone.is_some() || !pairs.is_empty() {
                    return Err(ParseError::LoneVertex { line });
                }
                lone = Some((line, v));
            }
            _ => {
                return Err(ParseError::BadLine {
                    line,
                    tokens: tokens.len(),
                })
            }
        }
    }
    if let Some((_, v)) = lone {
        return Ok(Graph::single_vertex(v));
    }
    if pairs.is_empty() {
        return Err(ParseError::Empty);
    }
    // Pinpoint local errors by line before building.
    let mut seen = std::collections::HashSet::new();
    for (&(a, b), &line) in pairs.iter().zip(&lines) {
        if a == b {
            return Err(ParseError::Graph {
                line,
                source: GraphError::SelfLoop(a.to_string()),
            });
        }
        let key = if a < b { (a, b) } else { (b, a) };
        if !seen.insert(key) {
            return Err(ParseError::Graph {
                line,
                source: GraphError::DuplicateEdge(a.to_string(), b.to_string()),
            });
        }
    }
    Graph::from_edge_list(&pairs).map_err(ParseError::Structure)
}
