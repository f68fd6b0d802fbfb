//! CSV artifacts with `#` provenance lines ahead of the column header.

use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

pub const TOOL: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Provenance written above every table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub command: String,
    pub scenario_sha256: String,
    pub seed: u64,
}

/// Rows are kept as strings so that formatting happens once, here.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Shortest representation that round-trips.
pub fn num(x: f64) -> String {
    format!("{x}")
}

pub fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

pub fn render(prov: &Provenance, table: &Table) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    writeln!(out, "# tool: {TOOL}").unwrap();
    writeln!(out, "# command: {}", prov.command).unwrap();
    writeln!(out, "# scenario_sha256: {}", prov.scenario_sha256).unwrap();
    writeln!(out, "# seed: {}", prov.seed).unwrap();
    let mut w = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| CliError::Validation(format!("csv: {e}"));
    w.write_record(&table.columns).map_err(csv_err)?;
    for row in &table.rows {
        w.write_record(row).map_err(csv_err)?;
    }
    w.into_inner().map_err(|e| CliError::Validation(format!("csv: {e}")))
}

/// Where tables go: a directory of `<name>.csv` files, or stdout.
#[derive(Debug, Clone)]
pub enum Sink {
    Stdout,
    Dir(PathBuf),
}

impl Sink {
    pub fn new(out: Option<&Path>) -> Result<Self> {
        match out {
            None => Ok(Sink::Stdout),
            Some(dir) => {
                std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
                let meta = std::fs::metadata(dir).map_err(|e| CliError::io(dir, e))?;
                if !meta.is_dir() || meta.permissions().readonly() {
                    return Err(CliError::Validation(format!(
                        "{}: output directory is not writable",
                        dir.display()
                    )));
                }
                Ok(Sink::Dir(dir.to_path_buf()))
            }
        }
    }

    pub fn write(&self, name: &str, prov: &Provenance, table: &Table) -> Result<()> {
        let bytes = render(prov, table)?;
        match self {
            Sink::Stdout => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(&bytes).map_err(|e| CliError::io("<stdout>", e))
            }
            Sink::Dir(dir) => {
                let path = dir.join(format!("{name}.csv"));
                log::info!("writing {}", path.display());
                std::fs::write(&path, bytes).map_err(|e| CliError::io(&path, e))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_precedes_columns() {
        let prov = Provenance { command: "enumerate".into(), scenario_sha256: "ab".into(), seed: 7 };
        let mut t = Table::new(&["x", "y"]);
        t.push(vec![num(0.1), num(2.0)]);
        let text = String::from_utf8(render(&prov, &t).unwrap()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], format!("# tool: {TOOL}"));
        assert_eq!(lines[3], "# seed: 7");
        assert_eq!(lines[4], "x,y");
        assert_eq!(lines[5], "0.1,2");
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
