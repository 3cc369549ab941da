//! Parsers and writers for graph and complex formats.

mod cc_text;
mod graph6;
mod lists;

use std::path::Path;

use thiserror::Error;

pub use cc_text::{
    parse_cc_document, parse_cc_text, write_cc_document, write_cc_text, CcDocument, CcTextError,
};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use lists::{parse_edge_list, parse_hyperedge_list, write_edge_list, ListError};

use crate::graph::Graph;

/// Upper bound on vertex ids accepted by the text parsers.
pub const MAX_VERTICES: usize = 1 << 24;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {source}")]
    Line { line: usize, source: Graph6Error },
}

/// Parses newline-separated graph6 records. Blank lines are skipped.
pub fn parse_graph6_lines(bytes: &[u8]) -> Result<Vec<Graph>, FamilyError> {
    let mut out = Vec::new();
    for (i, line) in bytes.split(|&b| b == b'\n').enumerate() {
        let line = line.strip_suffix(b"\r").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|source| FamilyError::Line {
            line: i + 1,
            source,
        })?;
        out.push(g);
    }
    Ok(out)
}

/// Loads a family file of graph6 records.
pub fn load_sr_family(path: impl AsRef<Path>) -> Result<Vec<Graph>, FamilyError> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|source| FamilyError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph6_lines(&bytes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines() {
        assert!(parse_graph6_lines(b"").unwrap().is_empty());
        assert_eq!(parse_graph6_lines(b"A_\n@\r\n\n?").unwrap().len(), 3);
        match parse_graph6_lines(b"A_\n@\nA \n") {
            Err(FamilyError::Line { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }
}
