//! Delimiter-separated input.
//!
//! Cells are separated by commas when a line contains one and by whitespace
//! otherwise. The first data line is treated as a header when any of its
//! cells is not a number. Lines starting with `#` are skipped. Complex cells
//! are written `a+bi` or `a-bi` (spaces around the sign are allowed in
//! comma-separated files); `bi`, `i` and plain reals are accepted too.

use std::path::Path;

use gruss_core::measure::SampledFunction;
use gruss_core::{Field, Scalar};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct Columns {
    pub names: Option<Vec<String>>,
    pub columns: Vec<SampledFunction>,
}

impl Columns {
    pub fn rows(&self) -> usize {
        self.columns.first().map_or(0, |c| c.len())
    }
}

/// Parses one cell; `None` on syntax errors. Non-finite values parse so the
/// caller can report them by position.
pub fn parse_scalar(cell: &str) -> Option<Scalar> {
    let s: String = cell.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix(['i', 'j']) else {
        return s.parse::<f64>().ok().map(|re| Scalar::new(re, 0.0));
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().ok()?,
    };
    Some(Scalar::new(re.parse::<f64>().ok()?, im))
}

fn split_cells(line: &str) -> Vec<&str> {
    if line.contains(',') {
        line.split(',').map(str::trim).collect()
    } else {
        line.split_whitespace().collect()
    }
}

pub fn ingest(path: &Path, field: Field) -> Result<Columns, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_table(&text, &path.display().to_string(), field)
}

pub fn parse_table(text: &str, path: &str, field: Field) -> Result<Columns, CliError> {
    let err = |row: usize, column: usize, message: String| CliError::Input {
        path: path.to_string(),
        row,
        column,
        message,
    };

    let mut names = None;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut width = None;
    for (lineno, line) in text.lines().enumerate() {
        let row = lineno + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let cells = split_cells(trimmed);
        if rows.is_empty() && names.is_none() && cells.iter().any(|c| parse_scalar(c).is_none()) {
            names = Some(cells.iter().map(|c| c.to_string()).collect::<Vec<_>>());
            width = Some(cells.len());
            continue;
        }
        match width {
            Some(w) if w != cells.len() => {
                return Err(err(
                    row,
                    cells.len().min(w) + 1,
                    format!("expected {w} cells, found {}", cells.len()),
                ))
            }
            _ => width = Some(cells.len()),
        }
        let mut values = Vec::with_capacity(cells.len());
        for (k, cell) in cells.iter().enumerate() {
            let column = k + 1;
            let v = parse_scalar(cell)
                .ok_or_else(|| err(row, column, format!("cannot parse `{cell}`")))?;
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(err(row, column, format!("non-finite value `{cell}`")));
            }
            if field == Field::Real && v.im != 0.0 {
                return Err(err(
                    row,
                    column,
                    format!("complex value `{cell}` in real field"),
                ));
            }
            values.push(v);
        }
        rows.push(values);
    }
    if rows.is_empty() {
        return Err(err(1, 1, "no data rows".into()));
    }
    let width = width.unwrap_or(0);
    let columns = (0..width)
        .map(|k| SampledFunction::new(rows.iter().map(|r| r[k]).collect()).map_err(CliError::from))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Columns { names, columns })
}

/// Reads a whitespace/comma separated list of positive weights.
pub fn read_weights(path: &Path) -> Result<Vec<f64>, CliError> {
    let table = ingest(path, Field::Real)?;
    let mut out = Vec::new();
    for r in 0..table.rows() {
        for col in &table.columns {
            out.push(col.values()[r].re);
        }
    }
    Ok(out)
}
