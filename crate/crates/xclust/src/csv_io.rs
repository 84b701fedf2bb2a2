//! Dataset CSV reading and writing.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use xclust_core::Dataset;

use crate::{Error, Result};

/// Reads a dataset from a CSV file. With `has_header` the first row is taken
/// as feature names.
pub fn load_dataset(path: impl AsRef<Path>, has_header: bool) -> Result<Dataset> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_dataset(file, has_header)
}

pub fn read_dataset(reader: impl Read, has_header: bool) -> Result<Dataset> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(reader);
    let mut names = None;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width = None;
    for record in rdr.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        match width {
            None => width = Some(record.len()),
            Some(w) if w != record.len() => {
                return Err(Error::RaggedRow {
                    line,
                    expected: w,
                    found: record.len(),
                })
            }
            _ => {}
        }
        if has_header && names.is_none() {
            names = Some(record.iter().map(|s| s.trim().to_string()).collect::<Vec<_>>());
            continue;
        }
        let row = record
            .iter()
            .enumerate()
            .map(|(field, raw)| {
                let v: f64 = raw.trim().parse().map_err(|_| Error::NonNumeric {
                    line,
                    field: field + 1,
                    value: raw.to_string(),
                })?;
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(Error::NonFinite { line })
                }
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::EmptyFile);
    }
    let ds = Dataset::new(rows)?;
    Ok(match names {
        Some(n) => ds.with_feature_names(n)?,
        None => ds,
    })
}

/// Writes one LF-terminated row per point using shortest round-trip decimals,
/// preceded by the feature names when present.
pub fn write_dataset(ds: &Dataset, mut out: impl Write) -> std::io::Result<()> {
    if let Some(names) = ds.feature_names() {
        writeln!(out, "{}", names.join(","))?;
    }
    for p in ds.points() {
        let row: Vec<String> = p.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(())
}

pub fn dataset_to_string(ds: &Dataset) -> String {
    let mut buf = Vec::new();
    write_dataset(ds, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}
