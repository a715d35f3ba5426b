//! CSV/JSON emission. One header row, `.` decimal separator, blank cells
//! for undefined entries (JSON: null). Rows are written in grid order and
//! the formatting is deterministic, so identical configs produce
//! byte-identical files.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use crate::args::OutputFormat;
use crate::fmt::fmt_g15;

pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Option<f64>>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Option<f64>>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: OutputFormat, w: &mut dyn Write) -> io::Result<()> {
        match format {
            OutputFormat::Csv => self.write_csv(w),
            OutputFormat::Json => self.write_json(w),
        }
    }

    fn write_csv(&self, w: &mut dyn Write) -> io::Result<()> {
        writeln!(w, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| c.map(fmt_g15).unwrap_or_default())
                .collect();
            writeln!(w, "{}", cells.join(","))?;
        }
        Ok(())
    }

    fn write_json(&self, w: &mut dyn Write) -> io::Result<()> {
        let records: Vec<serde_json::Map<String, serde_json::Value>> = self
            .rows
            .iter()
            .map(|row| {
                self.columns
                    .iter()
                    .zip(row)
                    .map(|(col, cell)| {
                        let value = match cell {
                            // numbers pass through the same 15-digit rounding
                            // as the CSV cells
                            Some(v) => serde_json::json!(crate::fmt::rounded15(*v)),
                            None => serde_json::Value::Null,
                        };
                        ((*col).to_string(), value)
                    })
                    .collect()
            })
            .collect();
        serde_json::to_writer_pretty(&mut *w, &records)?;
        writeln!(w)?;
        Ok(())
    }

    /// Writes to the given path, or stdout when none.
    pub fn emit(&self, format: OutputFormat, out: Option<&Path>) -> io::Result<()> {
        match out {
            Some(path) => {
                let mut f = File::create(path)?;
                self.write(format, &mut f)
            }
            None => {
                let stdout = io::stdout();
                let mut lock = stdout.lock();
                self.write(format, &mut lock)
            }
        }
    }
}

/// Inserts a `_N<k>` suffix before the extension for per-N output files.
pub fn path_with_n_suffix(path: &Path, n: usize) -> std::path::PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    let ext = path.extension().and_then(|s| s.to_str());
    let name = match ext {
        Some(e) => format!("{stem}_N{n}.{e}"),
        None => format!("{stem}_N{n}"),
    };
    path.with_file_name(name)
}
