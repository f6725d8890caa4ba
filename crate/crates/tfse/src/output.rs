//! Tables, their CSV/JSON text, and atomic file output.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use num_complex::Complex64;
use tfse_core::grid::SpaceTimeField;

use crate::config::Format;

/// A rectangular table of reals with named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    /// `t,x,re,im,abs2`, t-major.
    pub fn from_field(f: &SpaceTimeField) -> Table {
        let rows = f.iter().map(|(t, x, v)| vec![t, x, v.re, v.im, v.norm_sqr()]).collect();
        Table { columns: vec!["t", "x", "re", "im", "abs2"], rows }
    }

    /// `t,k,re,im` from t-major values.
    pub fn from_kernel(t: &[f64], k: &[f64], values: &[Complex64]) -> Table {
        let rows = t
            .iter()
            .flat_map(|&t| k.iter().map(move |&k| (t, k)))
            .zip(values)
            .map(|((t, k), v)| vec![t, k, v.re, v.im])
            .collect();
        Table { columns: vec!["t", "k", "re", "im"], rows }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            for (i, &v) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&number(v));
            }
            out.push('\n');
        }
        out
    }

    fn json(&self) -> String {
        let cols: Vec<String> = self.columns.iter().map(|c| format!("\"{c}\"")).collect();
        let mut out = format!("{{\"columns\":[{}],\"rows\":[", cols.join(","));
        for (r, row) in self.rows.iter().enumerate() {
            out.push_str(if r == 0 { "\n[" } else { ",\n[" });
            for (i, &v) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&json_number(v));
            }
            out.push(']');
        }
        out.push_str("\n]}\n");
        out
    }
}

/// 17 significant digits, locale-free.
pub fn number(v: f64) -> String {
    let mut s = String::new();
    let _ = write!(s, "{v:.16e}");
    s
}

fn json_number(v: f64) -> String {
    if v.is_finite() {
        number(v)
    } else {
        "null".into()
    }
}

/// Writes `text` to `path` through a temporary file in the same directory,
/// so readers never observe a partial file.
pub fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
