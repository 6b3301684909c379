//! Plain-text cache for exact counting tables (format v1).
//!
//! Layout, with LF line endings throughout:
//!
//! ```text
//! # kind=distinct n_max=9 format=v1
//! 0 1
//! 1 0
//! ...
//! 9 1
//! ```
//!
//! Counts are full decimal integers with no separators. Loading validates the
//! header, every index, every digit string, and the line count; any violation
//! is reported with its line number rather than risking a wrong table.

use num_bigint::BigUint;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;
use thiserror::Error;

use crate::counts::{PartitionKind, PartitionTable};

#[derive(Debug, Error)]
pub enum CacheError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
}

fn parse_err(path: &Path, line: usize, message: impl Into<String>) -> CacheError {
    CacheError::Parse {
        path: path.display().to_string(),
        line,
        message: message.into(),
    }
}

/// Write a table atomically: the final file appears only after a complete
/// temporary file has been renamed over the target path.
pub fn save_table(table: &PartitionTable, path: &Path) -> Result<(), CacheError> {
    let tmp_path = path.with_extension("tmp~");
    {
        let file = fs::File::create(&tmp_path)?;
        let mut out = BufWriter::new(file);
        writeln!(
            out,
            "# kind={} n_max={} format=v1",
            table.kind().label(),
            table.n_max()
        )?;
        for (n, count) in table.counts().iter().enumerate() {
            writeln!(out, "{n} {count}")?;
        }
        out.flush()?;
    }
    fs::rename(&tmp_path, path)?;
    Ok(())
}

/// Read a table back, rejecting malformed files with the offending line.
pub fn load_table(path: &Path) -> Result<PartitionTable, CacheError> {
    let file = fs::File::open(path)?;
    let mut lines = BufReader::new(file).lines();

    let header = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, "empty file"))??;
    let fields: Vec<&str> = header.split(' ').collect();
    if fields.len() != 4 || fields[0] != "#" {
        return Err(parse_err(path, 1, "malformed header"));
    }
    let kind_label = fields[1]
        .strip_prefix("kind=")
        .ok_or_else(|| parse_err(path, 1, "missing kind field"))?;
    let kind = PartitionKind::from_label(kind_label)
        .ok_or_else(|| parse_err(path, 1, format!("unknown kind {kind_label:?}")))?;
    let n_max: usize = fields[2]
        .strip_prefix("n_max=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| parse_err(path, 1, "bad n_max field"))?;
    if fields[3] != "format=v1" {
        return Err(parse_err(path, 1, format!("unsupported format {:?}", fields[3])));
    }

    let mut counts = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let line_no = n + 2;
        let line = lines
            .next()
            .ok_or_else(|| parse_err(path, line_no, "unexpected end of file"))??;
        let (index_str, count_str) = line
            .split_once(' ')
            .ok_or_else(|| parse_err(path, line_no, "expected '<n> <count>'"))?;
        let index: usize = index_str
            .parse()
            .map_err(|_| parse_err(path, line_no, format!("bad index {index_str:?}")))?;
        if index != n {
            return Err(parse_err(
                path,
                line_no,
                format!("index {index} out of order, expected {n}"),
            ));
        }
        if count_str.is_empty() || count_str.contains(' ') {
            return Err(parse_err(path, line_no, "expected a single decimal count"));
        }
        let count = BigUint::from_str(count_str)
            .map_err(|_| parse_err(path, line_no, format!("bad count {count_str:?}")))?;
        counts.push(count);
    }
    if let Some(extra) = lines.next() {
        let _ = extra?;
        return Err(parse_err(path, n_max + 3, "trailing data after table"));
    }
    Ok(PartitionTable::from_parts(kind, counts))
}
