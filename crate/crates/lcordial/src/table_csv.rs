//! `n,m,J` CSV for survey tables.
//!
//! Rows follow the table order, `(m, n)` ascending, with LF endings. Tables
//! carrying prime sets get a fourth `primes` column holding the
//! space-separated members of `𝕁(n, m)`.

use std::io::{Read, Write};

use lcordial_core::survey::{SurveyCell, SurveyTable};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CsvError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("unexpected header {0:?}")]
    Header(Vec<String>),
    #[error("line {line}: {msg}")]
    Row { line: u64, msg: String },
}

pub const HEADER: [&str; 3] = ["n", "m", "J"];
pub const SETS_COLUMN: &str = "primes";

pub fn emit_csv<W: Write>(table: &SurveyTable, sink: W) -> Result<(), CsvError> {
    let with_sets = table.cells().iter().any(|c| c.j_set.is_some());
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    if with_sets {
        w.write_record(HEADER.iter().chain([&SETS_COLUMN]))?;
    } else {
        w.write_record(HEADER)?;
    }
    for c in table.cells() {
        let (n, m, j) = (c.n.to_string(), c.m.to_string(), c.j.to_string());
        if with_sets {
            let primes = c
                .j_set
                .as_deref()
                .unwrap_or_default()
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            w.write_record([n, m, j, primes])?;
        } else {
            w.write_record([n, m, j])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn csv_string(table: &SurveyTable) -> String {
    let mut buf = Vec::new();
    emit_csv(table, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("csv output is ASCII")
}

/// Reads a table written by [`emit_csv`]. The `n` range and bound list are
/// recovered from the rows.
pub fn parse_csv<R: Read>(source: R) -> Result<SurveyTable, CsvError> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(source);
    let header: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
    let with_sets = match header.len() {
        3 if header == HEADER => false,
        4 if header[..3] == HEADER && header[3] == SETS_COLUMN => true,
        _ => return Err(CsvError::Header(header)),
    };
    let mut cells = Vec::new();
    for record in r.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        let field = |i: usize| -> Result<u64, CsvError> {
            record[i].parse().map_err(|e| CsvError::Row {
                line,
                msg: format!("column {}: {e}", header[i]),
            })
        };
        let (n, m, j) = (field(0)?, field(1)?, field(2)? as usize);
        let j_set = if with_sets {
            let primes = record[3]
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<Vec<u64>, _>>()
                .map_err(|e| CsvError::Row {
                    line,
                    msg: format!("column primes: {e}"),
                })?;
            if primes.len() != j {
                return Err(CsvError::Row {
                    line,
                    msg: format!("J = {j} but {} primes listed", primes.len()),
                });
            }
            Some(primes)
        } else {
            None
        };
        cells.push(SurveyCell { n, m, j, j_set });
    }
    let n_min = cells.iter().map(|c| c.n).min().unwrap_or(0);
    let n_max = cells.iter().map(|c| c.n).max().unwrap_or(0);
    let m_values = cells.iter().map(|c| c.m).collect();
    Ok(SurveyTable::from_cells(n_min, n_max, m_values, cells))
}
