//! Matrix file formats.
//!
//! Text format: first line is the dimension `n`, followed by `n` lines of
//! `n` whitespace-separated decimal reals. Lines past the matrix body are
//! ignored, so output that appends eigenvalue annotations still re-parses.
//! JSON format: `{"dim": n, "rows": [[...], ...]}`. Either way the matrix
//! is symmetrized on load.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;

#[derive(Deserialize)]
struct MatrixJson {
    dim: usize,
    rows: Vec<Vec<f64>>,
}

/// Parses either format, deciding by the first non-whitespace byte.
pub fn parse_matrix(text: &str) -> Result<SymMatrix> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

pub fn read_matrix(path: &Path) -> Result<SymMatrix> {
    let text = std::fs::read_to_string(path)?;
    parse_matrix(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn parse_json(text: &str) -> Result<SymMatrix> {
    let parsed: MatrixJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad matrix JSON: {e}")))?;
    if parsed.dim == 0 {
        return Err(Error::Parse("dim must be at least 1".into()));
    }
    if parsed.rows.len() != parsed.dim || parsed.rows.iter().any(|r| r.len() != parsed.dim) {
        return Err(Error::Parse(format!(
            "rows must form a {0}×{0} grid",
            parsed.dim
        )));
    }
    Ok(SymMatrix::from_rows(&parsed.rows))
}

fn parse_text(text: &str) -> Result<SymMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let dim: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("first line must be the dimension, got {header:?}")))?;
    if dim == 0 {
        return Err(Error::Parse("dim must be at least 1".into()));
    }
    let mut rows = Vec::with_capacity(dim);
    for i in 0..dim {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {dim} rows, found {i}")))?;
        let row: Vec<f64> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<f64>()
                    .map_err(|_| Error::Parse(format!("bad number {tok:?} in row {}", i + 1)))
            })
            .collect::<Result<_>>()?;
        if row.len() != dim {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {dim}",
                i + 1,
                row.len()
            )));
        }
        rows.push(row);
    }
    Ok(SymMatrix::from_rows(&rows))
}

/// Renders in the text format with 17 significant digits, enough for every
/// f64 to round-trip exactly.
pub fn format_matrix(m: &SymMatrix) -> String {
    let mut out = format!("{}\n", m.dim());
    for row in m.to_rows() {
        let line: Vec<String> = row.iter().map(|v| format_f64(*v)).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// 17-significant-digit scientific notation.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}
