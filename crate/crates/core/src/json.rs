//! Deterministic JSON output.
//!
//! Floats are written in scientific notation with 17 significant digits, so
//! every value round-trips exactly and identical runs give identical bytes.

use crate::error::Result;
use crate::geometry::{BoundaryChain, BoundaryPiece};
use crate::solver::{CheegerResult, Contact};
use serde::{Deserialize, Serialize};
use serde_json::ser::{CompactFormatter, Formatter};
use std::io;

#[derive(Debug, Clone, Copy, Default)]
pub struct Float17;

impl Formatter for Float17 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{:.16e}", value + 0.0)
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }

    fn write_i64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: i64) -> io::Result<()> {
        CompactFormatter.write_i64(writer, value)
    }
}

/// Serializes `value` on one line, followed by a newline.
pub fn to_string<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Float17);
    value.serialize(&mut ser)?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json writes UTF-8"))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheegerSetJson {
    pub area: f64,
    pub perimeter: f64,
    pub boundary: Vec<BoundaryPiece>,
}

/// Result of a solve as written by the command-line tool.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultJson {
    pub s: f64,
    pub h: f64,
    pub area_omega: f64,
    pub cheeger: CheegerSetJson,
    pub contacts: Vec<Contact>,
}

impl ResultJson {
    pub fn new(r: &CheegerResult) -> Self {
        ResultJson {
            s: r.s,
            h: r.h,
            area_omega: r.area_omega,
            cheeger: CheegerSetJson {
                area: r.cheeger_set.area(),
                perimeter: r.cheeger_set.perimeter(),
                boundary: r.cheeger_set.pieces().to_vec(),
            },
            contacts: r.contacts.clone(),
        }
    }

    /// The Cheeger set boundary, re-validated.
    pub fn cheeger_chain(&self) -> Result<BoundaryChain> {
        BoundaryChain::new(self.cheeger.boundary.clone())
    }
}

/// Grid oracle comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleJson {
    pub h_exact: f64,
    pub h_oracle: f64,
    pub rel_err: f64,
    pub n: usize,
}
