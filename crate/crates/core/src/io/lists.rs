//! Plain-text edge lists and hyperedge lists.
//!
//! One edge (two ids) or hyperedge (two or more ids) per line, separated by
//! whitespace. `#` starts a comment. A line with a single id declares an
//! isolated vertex. The vertex count is one more than the largest id.

use thiserror::Error;

use crate::graph::{Graph, GraphError, Hypergraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ListError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

type Rows = Vec<(usize, Vec<usize>)>;

fn rows(bytes: &[u8]) -> Result<(usize, Rows), ListError> {
    let text = std::str::from_utf8(bytes).map_err(|e| ListError::Syntax {
        line: 1 + bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count(),
        msg: "invalid UTF-8".into(),
    })?;
    let mut n = 0;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let ids = line
            .split_whitespace()
            .map(|t| match t.parse::<usize>() {
                Ok(v) if v < super::MAX_VERTICES => Ok(v),
                Ok(v) => Err(format!("vertex id {v} exceeds {}", super::MAX_VERTICES)),
                Err(e) => Err(format!("{t:?}: {e}")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(|msg| ListError::Syntax { line: i + 1, msg })?;
        if let Some(&m) = ids.iter().max() {
            n = n.max(m + 1);
        }
        if ids.len() > 1 {
            out.push((i + 1, ids));
        }
    }
    Ok((n, out))
}

pub fn parse_edge_list(bytes: &[u8]) -> Result<Graph, ListError> {
    let (n, rows) = rows(bytes)?;
    let mut edges = Vec::with_capacity(rows.len());
    for (line, ids) in &rows {
        if ids.len() != 2 {
            return Err(ListError::Syntax {
                line: *line,
                msg: format!("expected two vertex ids, found {}", ids.len()),
            });
        }
        edges.push((ids[0], ids[1]));
    }
    Graph::new(n, edges.iter().copied()).map_err(|source| {
        // Report the first offending line.
        let line = (1..=edges.len())
            .find(|&k| Graph::new(n, edges[..k].iter().copied()).is_err())
            .map(|k| rows[k - 1].0)
            .unwrap_or(0);
        ListError::Graph { line, source }
    })
}

pub fn parse_hyperedge_list(bytes: &[u8]) -> Result<Hypergraph, ListError> {
    let (n, rows) = rows(bytes)?;
    Hypergraph::new(n, rows.iter().map(|(_, e)| e.clone())).map_err(|source| {
        let line = (1..=rows.len())
            .find(|&k| Hypergraph::new(n, rows[..k].iter().map(|(_, e)| e.clone())).is_err())
            .map(|k| rows[k - 1].0)
            .unwrap_or(0);
        ListError::Graph { line, source }
    })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.num_vertices() {
        if g.degree(v) == 0 {
            out.push_str(&format!("{v}\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
