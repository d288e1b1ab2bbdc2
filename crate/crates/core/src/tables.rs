//! Plain text persistence for value tables.
//!
//! A table file holds f(1), f(2), ..., f(N) as ASCII decimals, one per line,
//! each line ended by a single LF. There is no header, and an empty file is
//! the table with N = 0. Reading checks a few known values of the function
//! so that a file written for one function is not silently loaded as another.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::arithfun::{TableFn, ValueTable};
use crate::error::{Error, Result};

/// A table file on disk and the number of values it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrnFile {
    pub path: PathBuf,
    pub count: u64,
}

/// Known values (n, f(n)) checked whenever a table reaches n.
pub fn anchors(func: TableFn) -> [(u64, u64); 3] {
    match func {
        TableFn::Eta => [(6, 3), (12, 4), (16, 6)],
        TableFn::Sigma0 => [(6, 4), (12, 6), (16, 5)],
        TableFn::Sigma1 => [(6, 12), (12, 28), (16, 31)],
        TableFn::Sigma2 => [(6, 50), (12, 210), (16, 341)],
        TableFn::S => [(6, 6), (12, 16), (16, 15)],
        TableFn::Phi => [(6, 2), (12, 4), (16, 8)],
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io { path: path.to_path_buf(), source }
}

/// Writes `t` to `path`, replacing any existing file.
pub fn write_table(t: &ValueTable, path: impl AsRef<Path>) -> Result<PrnFile> {
    let path = path.as_ref();
    let file = File::create(path).map_err(io_err(path))?;
    let mut w = BufWriter::new(file);
    for v in t.values() {
        writeln!(w, "{v}").map_err(io_err(path))?;
    }
    w.flush().map_err(io_err(path))?;
    Ok(PrnFile { path: path.to_path_buf(), count: t.len() })
}

/// Reads a table of `func` from `path`.
///
/// Every line must be a plain decimal, so a CR, a sign, spaces or a blank
/// line are parse errors carrying the 1-based line number. A final line
/// without its LF is accepted.
pub fn read_table(path: impl AsRef<Path>, func: TableFn) -> Result<ValueTable> {
    let path = path.as_ref();
    let file = File::open(path).map_err(io_err(path))?;
    let values = parse_lines(BufReader::new(file), path)?;
    let t = ValueTable::from_values(func, values);
    check_anchors(&t)?;
    Ok(t)
}

fn parse_lines(mut r: impl BufRead, path: &Path) -> Result<Vec<u64>> {
    let mut values = Vec::new();
    let mut line = String::new();
    let mut no = 0;
    loop {
        line.clear();
        if r.read_line(&mut line).map_err(io_err(path))? == 0 {
            return Ok(values);
        }
        no += 1;
        let text = line.strip_suffix('\n').unwrap_or(&line);
        if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse { line: no, msg: format!("expected a decimal, found {text:?}") });
        }
        let v = text
            .parse()
            .map_err(|e| Error::Parse { line: no, msg: format!("{text}: {e}") })?;
        values.push(v);
    }
}

/// Fails with a corruption error when a known value of the function
/// within the table's range is wrong.
pub fn check_anchors(t: &ValueTable) -> Result<()> {
    for (n, want) in anchors(t.func()) {
        if let Some(got) = t.get(n) {
            if got != want {
                return Err(Error::Corrupt(format!(
                    "{}({n}) is {got} in the table, expected {want}",
                    t.func()
                )));
            }
        }
    }
    Ok(())
}
