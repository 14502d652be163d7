//! Edge-list text format and DOT export.
//!
//! Edge-list format: first non-comment line holds the vertex count `n`,
//! each following line one edge `u v` (0-indexed). `#` starts a comment,
//! blank lines are ignored. `parse_edge_list` and `write_edge_list` are
//! mutually inverse on every valid graph.

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::vertex_set::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected vertex count")]
    MissingOrder { line: usize },
    #[error("line {line}: invalid vertex count {text:?}")]
    InvalidOrder { line: usize, text: String },
    #[error("line {line}: expected `u v`, got {text:?}")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: invalid vertex {text:?}")]
    InvalidVertex { line: usize, text: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match order {
            None => {
                order = Some(content.parse().map_err(|_| ParseError::InvalidOrder {
                    line,
                    text: content.to_string(),
                })?);
            }
            Some(_) => {
                let fields: Vec<&str> = content.split_whitespace().collect();
                if fields.len() != 2 {
                    return Err(ParseError::MalformedEdge { line, text: content.to_string() });
                }
                let mut ends = [0usize; 2];
                for (slot, f) in ends.iter_mut().zip(&fields) {
                    *slot = f.parse().map_err(|_| ParseError::InvalidVertex {
                        line,
                        text: (*f).to_string(),
                    })?;
                }
                edges.push((ends[0], ends[1], line));
            }
        }
    }
    let order = order.ok_or(ParseError::MissingOrder { line: last_line.max(1) })?;

    // Validate each edge against the offending line before the final build.
    let mut seen = vec![VertexSet::new(order); order];
    let mut acc: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
    for (u, v, line) in edges {
        let bad = |source| ParseError::Graph { line, source };
        if u >= order {
            return Err(bad(GraphError::VertexOutOfRange { vertex: u, order }));
        }
        if v >= order {
            return Err(bad(GraphError::VertexOutOfRange { vertex: v, order }));
        }
        if u == v {
            return Err(bad(GraphError::SelfLoop(u)));
        }
        if seen[u].contains(v) {
            return Err(bad(GraphError::DuplicateEdge(u, v)));
        }
        seen[u].insert(v);
        seen[v].insert(u);
        acc.push((u, v));
    }
    Graph::from_edges(order, &acc).map_err(|source| ParseError::Graph { line: 1, source })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// DOT export. Vertices in `highlight` get `style=filled` (the black seeds
/// of the figures); labeled graphs print their coordinate tags.
pub fn to_dot(g: &Graph, highlight: Option<&VertexSet>) -> String {
    if let Some(h) = highlight {
        assert_eq!(h.width(), g.order(), "highlight width mismatch");
    }
    let mut out = String::from("graph g {\n");
    for v in g.vertices() {
        let mut attrs: Vec<String> = Vec::new();
        if let Some((a, b)) = g.label(v) {
            attrs.push(format!("label=\"({a},{b})\""));
        }
        if highlight.is_some_and(|h| h.contains(v)) {
            attrs.push("style=filled".to_string());
        }
        if attrs.is_empty() {
            out.push_str(&format!("  {v};\n"));
        } else {
            out.push_str(&format!("  {v} [{}];\n", attrs.join(", ")));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};

    #[test]
    fn round_trip_p3() {
        let g = path(3).unwrap();
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.order(), g.order());
        for v in g.vertices() {
            assert_eq!(back.neighbors(v), g.neighbors(v));
        }
    }

    #[test]
    fn out_of_range_vertex_reports_line() {
        let err = parse_edge_list("3\n0 1\n1 5\n").unwrap_err();
        match err {
            ParseError::Graph { line, source } => {
                assert_eq!(line, 3);
                assert_eq!(source, GraphError::VertexOutOfRange { vertex: 5, order: 3 });
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let g = parse_edge_list("# a triangle\n3\n\n0 1 # first\n1 2\n2 0\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn duplicate_edge_rejected() {
        let err = parse_edge_list("3\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(err, ParseError::Graph { line: 3, .. }));
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(parse_edge_list(""), Err(ParseError::MissingOrder { .. })));
        assert!(matches!(
            parse_edge_list("x\n"),
            Err(ParseError::InvalidOrder { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 1 2\n"),
            Err(ParseError::MalformedEdge { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 x\n"),
            Err(ParseError::InvalidVertex { line: 2, .. })
        ));
    }

    #[test]
    fn dot_marks_exactly_the_highlighted() {
        let g = cycle(4).unwrap();
        let hl = VertexSet::from_indices(4, [0, 2]);
        let dot = to_dot(&g, Some(&hl));
        assert_eq!(dot.matches("style=filled").count(), 2);
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert!(dot.starts_with("graph g {"));
    }
}
