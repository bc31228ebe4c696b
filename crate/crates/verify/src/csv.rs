//! Minimal CSV output: a version comment, a header row, then records.

use std::io::{self, Write};

/// Writes the version comment and the header row.
pub fn write_header<W: Write>(out: &mut W, columns: &[&str]) -> io::Result<()> {
    writeln!(out, "# {} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION"))?;
    writeln!(out, "{}", columns.join(","))
}

/// Writes one record; fields are expected to be free of commas and quotes.
pub fn write_record<W: Write>(out: &mut W, fields: &[String]) -> io::Result<()> {
    writeln!(out, "{}", fields.join(","))
}

/// A float with 17 significant digits.
pub fn float(v: f64) -> String {
    format!("{v:.16e}")
}
