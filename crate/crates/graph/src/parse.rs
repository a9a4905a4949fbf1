//! Text formats. Vertex ids are 1-based in text and 0-based in memory.
//!
//! Edge list: the first non-comment line is `n m`, followed by `m` lines
//! `u v`. Permutation: one line with the bottom position of each vertex.
//! Lines whose first non-blank character is `#` are comments; blank lines are
//! skipped in both formats.

use crate::{Graph, PermutationDiagram};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based physical line number.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        (!line.is_empty() && !line.starts_with('#')).then_some((i + 1, line))
    })
}

fn numbers(line_no: usize, line: &str) -> Result<Vec<usize>, ParseError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| ParseError::at(line_no, format!("expected a non-negative integer, found `{tok}`")))
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| ParseError::at(text.lines().count().max(1), "missing `n m` header"))?;
    let (n, m) = match numbers(header_no, header)?.as_slice() {
        &[n, m] => (n, m),
        _ => return Err(ParseError::at(header_no, "header must be `n m`")),
    };
    let mut edges = Vec::with_capacity(m);
    let mut last_no = header_no;
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(ParseError::at(line_no, format!("more than the declared {m} edges")));
        }
        let (u, v) = match numbers(line_no, line)?.as_slice() {
            &[u, v] => (u, v),
            _ => return Err(ParseError::at(line_no, "edge line must be `u v`")),
        };
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(ParseError::at(line_no, format!("vertex {w} out of range 1..={n}")));
            }
        }
        if u == v {
            return Err(ParseError::at(line_no, format!("self-loop at vertex {u}")));
        }
        edges.push((u - 1, v - 1));
        last_no = line_no;
    }
    if edges.len() != m {
        return Err(ParseError::at(
            last_no,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated above"))
}

pub fn parse_permutation(text: &str) -> Result<PermutationDiagram, ParseError> {
    let mut lines = content_lines(text);
    let (line_no, line) = lines
        .next()
        .ok_or_else(|| ParseError::at(text.lines().count().max(1), "missing permutation line"))?;
    if let Some((extra, _)) = lines.next() {
        return Err(ParseError::at(extra, "permutation must be a single line"));
    }
    let bottom = numbers(line_no, line)?;
    PermutationDiagram::new(bottom).map_err(|e| ParseError::at(line_no, e.to_string()))
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

pub fn format_permutation(d: &PermutationDiagram) -> String {
    let tokens: Vec<String> = d.bottom_positions().iter().map(usize::to_string).collect();
    format!("{}\n", tokens.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_on_three() {
        let g = parse_edge_list("3 2\n1 2\n2 3").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn self_loop_names_line() {
        let e = parse_edge_list("2 1\n1 1").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("self-loop"));
    }

    #[test]
    fn comments_and_duplicates() {
        let g = parse_edge_list("# header next\n3 3\n1 2\n# mid\n2 1\n2 3\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edge_count_mismatch() {
        assert_eq!(parse_edge_list("3 2\n1 2\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("3 1\n1 2\n2 3\n").unwrap_err().line, 3);
    }

    #[test]
    fn range_and_garbage() {
        assert_eq!(parse_edge_list("3 1\n1 4\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("3 1\n1 x\n").unwrap_err().line, 2);
        assert_eq!(parse_edge_list("3\n").unwrap_err().line, 1);
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn permutation_roundtrip() {
        let d = parse_permutation("3 1 4 5 2\n").unwrap();
        assert_eq!(d.bottom_positions(), &[3, 1, 4, 5, 2]);
        assert_eq!(format_permutation(&d), "3 1 4 5 2\n");
        assert!(parse_permutation("1 1 2").is_err());
        assert!(parse_permutation("1 2\n2 1").is_err());
    }

    #[test]
    fn edge_list_roundtrip() {
        let text = "5 4\n1 2\n1 5\n3 5\n4 5\n";
        assert_eq!(format_edge_list(&parse_edge_list(text).unwrap()), text);
    }
}
