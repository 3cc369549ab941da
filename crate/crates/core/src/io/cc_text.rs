//! The `cc-v1` JSON complex format.
//!
//! ```text
//! {
//!   "format": "cc-v1",
//!   "num_vertices": 3,
//!   "cells": [
//!     {"v": [0], "rank": 0},
//!     {"v": [0, 1], "rank": 1}
//!   ],
//!   "labels": {"0": 4, "0,1": 7}
//! }
//! ```
//!
//! Omitted singletons are implied. `labels` is keyed by comma-joined vertex
//! lists. `"strict": false` disables strict validation.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::complex::{build_complex, CombinatorialComplex, ComplexError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CcTextError {
    #[error("schema error: {0}")]
    SchemaError(String),
    #[error("validation error: {0}")]
    ValidationError(#[from] ComplexError),
}

/// A parsed document: the complex and optional per-cell labels keyed by cell index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcDocument {
    pub complex: CombinatorialComplex,
    pub labels: Option<BTreeMap<usize, i64>>,
}

fn schema<T>(msg: impl Into<String>) -> Result<T, CcTextError> {
    Err(CcTextError::SchemaError(msg.into()))
}

fn as_index(v: &Value, what: &str) -> Result<usize, CcTextError> {
    match v.as_u64() {
        Some(x) if x < super::MAX_VERTICES as u64 => Ok(x as usize),
        _ => schema(format!(
            "{what} must be a non-negative integer below {}, got {v}",
            super::MAX_VERTICES
        )),
    }
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str], ctx: &str) -> Result<(), CcTextError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => schema(format!("unexpected key {k:?} in {ctx}")),
        None => Ok(()),
    }
}

pub fn parse_cc_document(bytes: &[u8]) -> Result<CcDocument, CcTextError> {
    let root: Value =
        serde_json::from_slice(bytes).or_else(|e| schema(format!("invalid JSON: {e}")))?;
    let Some(obj) = root.as_object() else {
        return schema("document must be an object");
    };
    check_keys(
        obj,
        &["format", "num_vertices", "cells", "labels", "strict"],
        "document",
    )?;
    if obj.get("format").and_then(Value::as_str) != Some("cc-v1") {
        return schema("format must be \"cc-v1\"");
    }
    let n = as_index(
        obj.get("num_vertices").unwrap_or(&Value::Null),
        "num_vertices",
    )?;
    let strict = match obj.get("strict") {
        None => true,
        Some(Value::Bool(b)) => *b,
        Some(_) => return schema("strict must be a boolean"),
    };
    let Some(cells) = obj.get("cells").and_then(Value::as_array) else {
        return schema("cells must be an array");
    };
    let mut list = Vec::with_capacity(cells.len());
    for (i, c) in cells.iter().enumerate() {
        let Some(c) = c.as_object() else {
            return schema(format!("cell {i} must be an object"));
        };
        check_keys(c, &["v", "rank"], "cell")?;
        let Some(vs) = c.get("v").and_then(Value::as_array) else {
            return schema(format!("cell {i}: v must be an array"));
        };
        let vs = vs
            .iter()
            .map(|x| as_index(x, "vertex id"))
            .collect::<Result<Vec<_>, _>>()?;
        if vs.windows(2).any(|w| w[0] >= w[1]) {
            return schema(format!("cell {i}: vertex ids must be strictly increasing"));
        }
        let rank = as_index(c.get("rank").unwrap_or(&Value::Null), "rank")?;
        list.push((vs, rank));
    }
    let complex = build_complex(n, list, strict)?;
    let labels = match obj.get("labels") {
        None => None,
        Some(Value::Object(m)) => {
            let mut out = BTreeMap::new();
            for (key, val) in m {
                let vs = key
                    .split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .or_else(|_| schema(format!("bad label key {key:?}")))?;
                let Some(cell) = complex.find_cell(&vs) else {
                    return schema(format!("label key {key:?} names no cell"));
                };
                let Some(l) = val.as_i64() else {
                    return schema(format!("label for {key:?} must be an integer"));
                };
                out.insert(cell, l);
            }
            Some(out)
        }
        Some(_) => return schema("labels must be an object"),
    };
    Ok(CcDocument { complex, labels })
}

pub fn parse_cc_text(bytes: &[u8]) -> Result<CombinatorialComplex, CcTextError> {
    parse_cc_document(bytes).map(|d| d.complex)
}

fn join(vs: &[usize], sep: &str) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// Canonical form: cells sorted by (rank, vertex list), one per line.
pub fn write_cc_document(
    cc: &CombinatorialComplex,
    labels: Option<&BTreeMap<usize, i64>>,
) -> String {
    let mut out = String::new();
    out.push_str("{\n  \"format\": \"cc-v1\",\n");
    let _ = writeln!(out, "  \"num_vertices\": {},", cc.num_vertices());
    if !cc.is_strict() {
        out.push_str("  \"strict\": false,\n");
    }
    let mut cells: Vec<usize> = (0..cc.num_cells()).collect();
    cells.sort_by(|&a, &b| cc.cell(a).cmp(cc.cell(b)));
    if cells.is_empty() {
        out.push_str("  \"cells\": []");
    } else {
        out.push_str("  \"cells\": [\n");
        for (k, &c) in cells.iter().enumerate() {
            let cell = cc.cell(c);
            let _ = write!(
                out,
                "    {{\"v\": [{}], \"rank\": {}}}",
                join(&cell.vertices, ", "),
                cell.rank
            );
            out.push_str(if k + 1 < cells.len() { ",\n" } else { "\n" });
        }
        out.push_str("  ]");
    }
    if let Some(labels) = labels {
        let entries: Vec<(usize, i64)> = cells
            .iter()
            .filter_map(|&c| labels.get(&c).map(|&l| (c, l)))
            .collect();
        if entries.is_empty() {
            out.push_str(",\n  \"labels\": {}");
        } else {
            out.push_str(",\n  \"labels\": {\n");
            for (k, (c, l)) in entries.iter().enumerate() {
                let _ = write!(out, "    \"{}\": {}", join(&cc.cell(*c).vertices, ","), l);
                out.push_str(if k + 1 < entries.len() { ",\n" } else { "\n" });
            }
            out.push_str("  }");
        }
    }
    out.push_str("\n}\n");
    out
}

pub fn write_cc_text(cc: &CombinatorialComplex) -> String {
    write_cc_document(cc, None)
}
