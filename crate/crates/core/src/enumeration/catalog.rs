//! Catalog files: one canonical graph6 string per line, sorted.

use thiserror::Error;

use super::canon::canonical_form;
use crate::graph::Graph;
use crate::graph6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct CatalogError {
    pub line: usize,
    pub message: String,
}

/// Sorted, deduplicated canonical graph6 lines.
pub fn write_catalog(graphs: &[Graph]) -> String {
    let mut lines: Vec<String> = graphs.iter().map(|g| canonical_form(g).as_str().to_string()).collect();
    lines.sort_unstable();
    lines.dedup();
    let mut out = lines.join("\n");
    if !out.is_empty() {
        out.push('\n');
    }
    out
}

/// Parses one graph6 string per line, skipping blank lines and `#` comments.
pub fn read_graph_lines(text: &str) -> Result<Vec<Graph>, CatalogError> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(line, l)| graph6::decode(l).map_err(|e| CatalogError { line, message: e.to_string() }))
        .collect()
}
