//! Loading structures from disk and lifting them to complexes.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use ccwl_core::graph::{Graph, Hypergraph};
use ccwl_core::io::{
    parse_cc_document, parse_edge_list, parse_graph6_lines, parse_hyperedge_list, CcDocument,
};
use ccwl_core::lifting::{clique_lift, hypergraph_lift, ring_lift, HyperLiftMode};
use ccwl_core::CombinatorialComplex;
use clap::ValueEnum;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Cc,
    Edges,
    Hyper,
}

impl Format {
    /// `.g6`, `.json`/`.cc`, `.edges`/`.el`, `.hyper`/`.hg`.
    pub fn from_extension(path: &Path) -> Option<Format> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        match ext.as_str() {
            "g6" | "graph6" => Some(Format::Graph6),
            "json" | "cc" => Some(Format::Cc),
            "edges" | "el" | "txt" => Some(Format::Edges),
            "hyper" | "hg" => Some(Format::Hyper),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Structure {
    Graph(Graph),
    Hypergraph(Hypergraph),
    Complex(CcDocument),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LiftMethod {
    /// Ring lift for graphs, size-ranked lift for hypergraphs, none for complexes.
    Auto,
    None,
    Clique,
    Ring,
    HyperFlat,
    HyperRanked,
}

#[derive(Clone, Copy, Debug)]
pub struct LiftParams {
    pub method: LiftMethod,
    pub max_ring: usize,
    pub max_dim: usize,
}

impl LiftParams {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.max_ring < 3 {
            return Err(CliError::Usage(format!(
                "--max-ring must be at least 3, got {}",
                self.max_ring
            )));
        }
        if self.max_dim < 1 {
            return Err(CliError::Usage("--max-dim must be at least 1".into()));
        }
        Ok(())
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn input_error(path: &Path, msg: impl ToString) -> CliError {
    CliError::Input {
        path: path.display().to_string(),
        msg: msg.to_string(),
    }
}

pub fn resolve_format(path: &Path, forced: Option<Format>) -> Result<Format, CliError> {
    forced
        .or_else(|| Format::from_extension(path))
        .ok_or_else(|| {
            CliError::Usage(format!(
                "cannot infer the format of {}; pass --format",
                path.display()
            ))
        })
}

/// Every structure in the file; graph6 files may hold many graphs.
pub fn load_all(path: &Path, forced: Option<Format>) -> Result<Vec<Structure>, CliError> {
    let format = resolve_format(path, forced)?;
    let bytes = read(path)?;
    Ok(match format {
        Format::Graph6 => parse_graph6_lines(&bytes)
            .map_err(|e| input_error(path, e))?
            .into_iter()
            .map(Structure::Graph)
            .collect(),
        Format::Cc => vec![Structure::Complex(
            parse_cc_document(&bytes).map_err(|e| input_error(path, e))?,
        )],
        Format::Edges => vec![Structure::Graph(
            parse_edge_list(&bytes).map_err(|e| input_error(path, e))?,
        )],
        Format::Hyper => vec![Structure::Hypergraph(
            parse_hyperedge_list(&bytes).map_err(|e| input_error(path, e))?,
        )],
    })
}

/// A file that must hold exactly one structure.
pub fn load_one(path: &Path, forced: Option<Format>) -> Result<Structure, CliError> {
    let mut all = load_all(path, forced)?;
    if all.len() != 1 {
        return Err(input_error(
            path,
            format!("expected a single structure, found {}", all.len()),
        ));
    }
    Ok(all.remove(0))
}

/// Expands directories to their sorted `.g6` files.
pub fn family_files(paths: &[PathBuf]) -> Result<Vec<PathBuf>, CliError> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let entries = std::fs::read_dir(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?;
            let mut files: Vec<PathBuf> = entries
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| Format::from_extension(f) == Some(Format::Graph6))
                .collect();
            files.sort();
            out.extend(files);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// Lifted complex plus seed labels when the input carried them.
pub struct Lifted {
    pub complex: CombinatorialComplex,
    pub labels: Option<BTreeMap<usize, i64>>,
    /// Whether the ring length bound affected the lift.
    pub ring: bool,
}

pub fn lift(s: &Structure, p: &LiftParams) -> Result<Lifted, CliError> {
    let incompatible = |what: &str| {
        Err(CliError::Usage(format!(
            "lift {:?} does not apply to {what} input",
            p.method
        )))
    };
    let plain = |complex| Lifted {
        complex,
        labels: None,
        ring: false,
    };
    Ok(match (s, p.method) {
        (Structure::Graph(g), LiftMethod::Auto | LiftMethod::Ring) => Lifted {
            complex: ring_lift(g, p.max_ring),
            labels: None,
            ring: true,
        },
        (Structure::Graph(g), LiftMethod::Clique) => plain(clique_lift(g, p.max_dim)),
        (Structure::Graph(g), LiftMethod::None) => plain(clique_lift(g, 1)),
        (Structure::Graph(_), _) => return incompatible("graph"),
        (Structure::Hypergraph(h), LiftMethod::Auto | LiftMethod::HyperRanked) => {
            plain(hypergraph_lift(h, HyperLiftMode::SizeRanked))
        }
        (Structure::Hypergraph(h), LiftMethod::HyperFlat) => {
            plain(hypergraph_lift(h, HyperLiftMode::Flat))
        }
        (Structure::Hypergraph(_), _) => return incompatible("hypergraph"),
        (Structure::Complex(d), LiftMethod::Auto | LiftMethod::None) => Lifted {
            complex: d.complex.clone(),
            labels: d.labels.clone(),
            ring: false,
        },
        (Structure::Complex(_), _) => return incompatible("complex"),
    })
}
