//! File formats.
//!
//! Matrices are objects `{"dim": n, "entries": [[[re, im], ...], ...]}`,
//! probability vectors are `{"probs": [...]}` and Kraus sets are
//! `{"kraus": [matrix, ...]}`. Extra fields are ignored on input, so any
//! document written by a command can be fed to the inverse command.
//!
//! Numbers are written with 17 significant digits, which round-trips every
//! double exactly.

use qprob_core::{ComplexMatrix, C64};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ProbsFile {
    pub probs: Vec<f64>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct KrausFile {
    pub kraus: Vec<MatrixFile>,
}

impl MatrixFile {
    pub fn into_matrix(self) -> Result<ComplexMatrix, CliError> {
        let n = self.dim;
        if n == 0 || self.entries.len() != n || self.entries.iter().any(|row| row.len() != n) {
            return Err(CliError::Malformed(format!("entries do not form a {n}x{n} array")));
        }
        let data = self.entries.into_iter().flatten().map(|[re, im]| C64::new(re, im)).collect();
        ComplexMatrix::new(n, n, data).map_err(CliError::malformed)
    }
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix, CliError> {
    serde_json::from_str::<MatrixFile>(text).map_err(CliError::malformed)?.into_matrix()
}

pub fn parse_probs(text: &str) -> Result<Vec<f64>, CliError> {
    let file: ProbsFile = serde_json::from_str(text).map_err(CliError::malformed)?;
    match file.probs.len() {
        3 | 15 => Ok(file.probs),
        n => Err(CliError::Malformed(format!("expected 3 or 15 probabilities, found {n}"))),
    }
}

pub fn parse_kraus(text: &str) -> Result<Vec<ComplexMatrix>, CliError> {
    let file: KrausFile = serde_json::from_str(text).map_err(CliError::malformed)?;
    if file.kraus.is_empty() {
        return Err(CliError::Malformed("empty Kraus set".into()));
    }
    file.kraus.into_iter().map(MatrixFile::into_matrix).collect()
}

/// `{:.16e}`, with negative zero printed as zero.
pub fn number(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

pub fn array(values: &[f64]) -> String {
    let items: Vec<String> = values.iter().map(|&x| number(x)).collect();
    format!("[{}]", items.join(", "))
}

pub fn string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Pretty object with one field per line; values must already be JSON.
pub fn object(fields: &[(&str, String)]) -> String {
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("  {}: {v}", string(k))).collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}

pub fn matrix_fields(m: &ComplexMatrix) -> Vec<(&'static str, String)> {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let cells: Vec<String> = m.row(r).iter().map(|z| format!("[{}, {}]", number(z.re), number(z.im))).collect();
            format!("    [{}]", cells.join(", "))
        })
        .collect();
    vec![("dim", m.rows().to_string()), ("entries", format!("[\n{}\n  ]", rows.join(",\n")))]
}

pub fn render_matrix(m: &ComplexMatrix) -> String {
    object(&matrix_fields(m))
}
