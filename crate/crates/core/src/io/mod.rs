//! Matrix and report files (JSON), complex literals, and SVG figures.
//!
//! Every float written by this module uses 17 significant digits in
//! scientific notation, which round-trips any `f64` exactly.

mod literal;
mod report;
mod svg;

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

pub use literal::{parse_complex, parse_complex_list};
pub use report::{BoundaryFile, BoundaryRecord, KProbe, KReport, MatrixMeta, PolygonRecord, ProbeFile, ReportFile};
pub use svg::{emit_svg, render_svg};

/// On-disk matrix layout: `{"n": n, "entries": [[[re, im], ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixFile {
    pub fn from_matrix(a: &ComplexMatrix) -> Result<Self> {
        let n = a.square_dim()?;
        let entries = (0..n)
            .map(|i| a.row(i).iter().map(|z| [z.re, z.im]).collect())
            .collect();
        Ok(Self { n, entries })
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        if self.n == 0 {
            return Err(Error::ShapeError("n must be positive".into()));
        }
        if self.entries.len() != self.n {
            return Err(Error::ShapeError(format!(
                "expected {} rows, found {}",
                self.n,
                self.entries.len()
            )));
        }
        if let Some((i, row)) = self.entries.iter().enumerate().find(|(_, r)| r.len() != self.n) {
            return Err(Error::ShapeError(format!(
                "row {} has {} entries, expected {}",
                i + 1,
                row.len(),
                self.n
            )));
        }
        let data = self
            .entries
            .iter()
            .flatten()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        ComplexMatrix::new(self.n, self.n, data)
    }
}

fn parse_error(err: serde_json::Error) -> Error {
    Error::Parse { line: err.line(), column: err.column(), message: err.to_string() }
}

pub fn parse_matrix_str(text: &str) -> Result<ComplexMatrix> {
    let file: MatrixFile = serde_json::from_str(text).map_err(parse_error)?;
    file.to_matrix()
}

pub fn parse_matrix_reader<R: Read>(mut reader: R) -> Result<ComplexMatrix> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    parse_matrix_str(&text)
}

pub fn parse_matrix(path: impl AsRef<Path>) -> Result<ComplexMatrix> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_matrix_str(&text)
}

/// JSON formatter that indents like `PrettyFormatter` but writes floats as
/// `{:.16e}`.
pub struct Sci17Formatter<'a> {
    pretty: PrettyFormatter<'a>,
}

impl Default for Sci17Formatter<'_> {
    fn default() -> Self {
        Self { pretty: PrettyFormatter::new() }
    }
}

impl Formatter for Sci17Formatter<'_> {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }

    fn begin_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.begin_array(writer)
    }

    fn end_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_array(writer)
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.pretty.begin_array_value(writer, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_array_value(writer)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.begin_object(writer)
    }

    fn end_object<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_object(writer)
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.pretty.begin_object_key(writer, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.begin_object_value(writer)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.pretty.end_object_value(writer)
    }
}

/// Serializes `value` as indented JSON with 17-digit floats and a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sci17Formatter::default());
    value
        .serialize(&mut ser)
        .map_err(|e| Error::Io(format!("serialization failed: {e}")))?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}

/// Canonical matrix document (field order `n`, `entries`).
pub fn matrix_to_json(a: &ComplexMatrix) -> Result<String> {
    to_json_string(&MatrixFile::from_matrix(a)?)
}

pub fn write_matrix(a: &ComplexMatrix, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, matrix_to_json(a)?)?;
    Ok(())
}

/// SHA-256 (hex) of the canonical JSON form of `a`.
pub fn matrix_digest(a: &ComplexMatrix) -> Result<String> {
    let json = matrix_to_json(a)?;
    Ok(hex::encode(Sha256::digest(json.as_bytes())))
}
