use serde_json::{json, Value};

use super::{histogram, ColorHistogram, RefinementTrace};
use crate::complex::{CombinatorialComplex, Side};

fn hist_json(h: &ColorHistogram) -> Value {
    Value::Array(
        h.counts
            .iter()
            .map(|(&(rank, color), &count)| json!([rank, color, count]))
            .collect(),
    )
}

/// JSON view of a trace:
/// `{iterations, class_counts, stable_at, dictionary_size, histograms}`.
///
/// `histograms` maps a side name (`"a"`/`"b"` for joint runs, `"all"`
/// otherwise) to one `[[rank, color, count], ...]` list per iteration.
pub fn trace_json(
    cc: &CombinatorialComplex,
    trace: &RefinementTrace,
    origin: Option<&[Side]>,
) -> Value {
    let per_side = |keep: &dyn Fn(usize) -> bool| -> Value {
        Value::Array(
            trace
                .colorings
                .iter()
                .map(|col| hist_json(&histogram(cc, col, keep)))
                .collect(),
        )
    };
    let histograms = match origin {
        Some(o) => json!({
            "a": per_side(&|c| o[c] == Side::A),
            "b": per_side(&|c| o[c] == Side::B),
        }),
        None => json!({ "all": per_side(&|_| true) }),
    };
    json!({
        "iterations": trace.colorings.len(),
        "class_counts": trace.class_counts(),
        "stable_at": trace.stable_at,
        "dictionary_size": trace.dictionary_size,
        "histograms": histograms,
    })
}
