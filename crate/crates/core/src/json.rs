//! JSON wire format for matrices.
//!
//! An R-matrix file is an object `{"dim": d, "entries": [...]}` whose
//! entries array holds the `d^4` scalars of the `d^2 x d^2` matrix in
//! row-major order, each rendered as `p/q`, `p/q+r/s*i` or `p/q-r/s*i`
//! (whitespace-free, integers without the `/1`). A phase-matrix file for
//! diagonal-type construction uses the same object with `d^2` entries.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rmatrix::RMatrix;
use crate::scalar;

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    dim: usize,
    entries: Vec<String>,
}

fn parse_entries(entries: &[String], rows: usize, cols: usize) -> Result<Matrix> {
    let parsed = entries
        .iter()
        .map(|s| scalar::parse(s))
        .collect::<Result<Vec<_>>>()?;
    Matrix::new(rows, cols, parsed)
}

/// Serializes a validated R-matrix.
pub fn rmatrix_to_json(r: &RMatrix) -> String {
    let file = MatrixFile {
        dim: r.dim(),
        entries: r.matrix().entries().iter().map(scalar::render).collect(),
    };
    serde_json::to_string_pretty(&file).expect("serializable struct")
}

/// Parses and validates an R-matrix file.
pub fn rmatrix_from_json(text: &str) -> Result<RMatrix> {
    let file: MatrixFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad matrix JSON: {e}")))?;
    if file.dim == 0 {
        return Err(Error::Parse("dim must be positive".into()));
    }
    let d2 = file.dim * file.dim;
    if file.entries.len() != d2 * d2 {
        return Err(Error::Parse(format!(
            "R-matrix of dimension {} needs {} entries, got {}",
            file.dim,
            d2 * d2,
            file.entries.len()
        )));
    }
    let mat = parse_entries(&file.entries, d2, d2)?;
    RMatrix::validate(file.dim, mat)
}

/// Serializes a plain `d x d` phase matrix.
pub fn phases_to_json(phases: &Matrix) -> String {
    let file = MatrixFile {
        dim: phases.rows(),
        entries: phases.entries().iter().map(scalar::render).collect(),
    };
    serde_json::to_string_pretty(&file).expect("serializable struct")
}

/// Parses a `d x d` phase matrix file (no R-matrix validation).
pub fn phases_from_json(text: &str) -> Result<Matrix> {
    let file: MatrixFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad matrix JSON: {e}")))?;
    if file.dim == 0 {
        return Err(Error::Parse("dim must be positive".into()));
    }
    if file.entries.len() != file.dim * file.dim {
        return Err(Error::Parse(format!(
            "phase matrix of dimension {} needs {} entries, got {}",
            file.dim,
            file.dim * file.dim,
            file.entries.len()
        )));
    }
    parse_entries(&file.entries, file.dim, file.dim)
}
