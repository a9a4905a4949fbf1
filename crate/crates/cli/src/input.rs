use crate::CliError;
use p3c_convexity::VertexSet;
use p3c_graph::{parse_edge_list, parse_permutation, Graph, PermutationDiagram};
use p3c_oracle::{OracleConfig, DEFAULT_ORACLE_MAX};
use std::io::Read;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// A single line that is a permutation of 1..=n, otherwise an edge list.
    Auto,
    Edges,
    Perm,
}

/// A parsed input graph, with its diagram when given as a permutation.
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub diagram: Option<PermutationDiagram>,
}

pub fn load(path: &str, format: Format) -> Result<Instance, CliError> {
    let (name, text) = if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
        ("stdin".to_string(), text)
    } else {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}")))?;
        (path.to_string(), text)
    };
    let parsed = parse_text(&text, format).map_err(|e| CliError::Parse(format!("{name}: {e}")))?;
    Ok(Instance { name, ..parsed })
}

pub fn parse_text(text: &str, format: Format) -> Result<Instance, p3c_graph::ParseError> {
    let as_diagram = |d: PermutationDiagram| Instance {
        name: String::new(),
        graph: d.to_graph(),
        diagram: Some(d),
    };
    match format {
        Format::Perm => parse_permutation(text).map(as_diagram),
        Format::Edges => parse_edge_list(text).map(|graph| Instance {
            name: String::new(),
            graph,
            diagram: None,
        }),
        Format::Auto => match parse_permutation(text) {
            Ok(d) => Ok(as_diagram(d)),
            Err(_) => parse_text(text, Format::Edges),
        },
    }
}

/// Parses `"1,2,5"` (1-based) into a set of 0-based ids within `0..n`.
pub fn parse_set(spec: &str, n: usize) -> Result<VertexSet, CliError> {
    let mut out = Vec::new();
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = token
            .parse()
            .map_err(|_| CliError::BadSet(format!("`{token}` is not a vertex id")))?;
        if v == 0 || v > n {
            return Err(CliError::BadSet(format!("vertex {v} out of range 1..={n}")));
        }
        out.push(v - 1);
    }
    if out.is_empty() {
        return Err(CliError::BadSet("the set is empty".into()));
    }
    Ok(VertexSet::from_vec(out))
}

/// Oracle bound, overridden by `P3C_ORACLE_MAX`.
pub fn oracle_config() -> Result<OracleConfig, CliError> {
    let max_vertices = match std::env::var("P3C_ORACLE_MAX") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("P3C_ORACLE_MAX must be a number, got `{v}`")))?,
        Err(_) => DEFAULT_ORACLE_MAX,
    };
    Ok(OracleConfig { max_vertices })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_detects_both_formats() {
        assert!(parse_text("3 1 4 5 2\n", Format::Auto).unwrap().diagram.is_some());
        let edges = parse_text("3 2\n1 2\n2 3\n", Format::Auto).unwrap();
        assert!(edges.diagram.is_none());
        assert_eq!(edges.graph.edge_count(), 2);
        // "3 0" is not a permutation, so it is an edgeless graph
        assert_eq!(parse_text("3 0\n", Format::Auto).unwrap().graph.n(), 3);
        assert!(parse_text("3 1\n", Format::Perm).is_err());
    }

    #[test]
    fn sets_are_one_based() {
        assert_eq!(parse_set("1, 3,3", 3).unwrap().as_slice(), &[0, 2]);
        assert!(matches!(parse_set("0", 3), Err(CliError::BadSet(_))));
        assert!(matches!(parse_set("4", 3), Err(CliError::BadSet(_))));
        assert!(matches!(parse_set("x", 3), Err(CliError::BadSet(_))));
        assert!(matches!(parse_set("", 3), Err(CliError::BadSet(_))));
    }
}
