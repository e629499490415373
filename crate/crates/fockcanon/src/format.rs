//! JSON, CSV and plain-table renderings.
//!
//! Matrix JSON:
//!
//! ```text
//! {"e": int|"inf", "charge": [int], "n": int, "rows": [string], "cols": [string],
//!  "entries": [{"row": int, "col": int, "poly": {"min_deg": int, "coeffs": [int]}}]}
//! ```
//!
//! Only nonzero entries are listed, ordered by column then row. Coefficients
//! are written as plain JSON integers of any size.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use fockcanon_core::{
    Characteristic, Charge, DecompositionMatrix, FockContext, LaurentPoly, Multipartition,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!(
                "unknown format {s:?} (expected table, json or csv)"
            )),
        }
    }
}

/// `e` as it appears in documents: an integer, or the string `"inf"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum EField {
    Finite(u32),
    Infinite(String),
}

// Untagged derive buffers numbers in a way that breaks under
// `arbitrary_precision`, so go through `Value`.
impl<'de> Deserialize<'de> for EField {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => n
                .as_u64()
                .and_then(|v| u32::try_from(v).ok())
                .map(EField::Finite)
                .ok_or_else(|| D::Error::custom(format!("bad e: {n}"))),
            serde_json::Value::String(s) => Ok(EField::Infinite(s)),
            other => Err(D::Error::custom(format!("bad e: {other}"))),
        }
    }
}

impl From<Characteristic> for EField {
    fn from(e: Characteristic) -> Self {
        match e {
            Characteristic::Finite(v) => EField::Finite(v),
            Characteristic::Infinite => EField::Infinite("inf".into()),
        }
    }
}

impl TryFrom<&EField> for Characteristic {
    type Error = CliError;

    fn try_from(e: &EField) -> Result<Self, CliError> {
        Ok(match e {
            EField::Finite(v) => Characteristic::finite(*v)?,
            EField::Infinite(s) if s == "inf" => Characteristic::Infinite,
            EField::Infinite(s) => return Err(CliError::Format(format!("bad e: {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub min_deg: i64,
    pub coeffs: Vec<Number>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub row: usize,
    pub col: usize,
    pub poly: PolyDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub e: EField,
    pub charge: Vec<i64>,
    pub n: u32,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<EntryDoc>,
}

pub fn poly_doc(p: &LaurentPoly) -> PolyDoc {
    let (min_deg, coeffs) = p.raw();
    let coeffs = coeffs
        .iter()
        .map(|c| Number::from_str(&c.to_string()).expect("integers are valid JSON numbers"))
        .collect();
    PolyDoc { min_deg, coeffs }
}

pub fn poly_from_doc(doc: &PolyDoc) -> Result<LaurentPoly, CliError> {
    let coeffs = doc
        .coeffs
        .iter()
        .map(|c| {
            BigInt::from_str(&c.to_string())
                .map_err(|_| CliError::Format(format!("coefficient {c} is not an integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LaurentPoly::from_coeffs(doc.min_deg, coeffs))
}

pub fn matrix_doc(d: &DecompositionMatrix) -> MatrixDoc {
    let mut entries: Vec<EntryDoc> = d
        .entries()
        .iter()
        .map(|(&(row, col), p)| EntryDoc {
            row,
            col,
            poly: poly_doc(p),
        })
        .collect();
    entries.sort_by_key(|en| (en.col, en.row));
    MatrixDoc {
        e: d.ctx().e().into(),
        charge: d.ctx().charge().kappas().to_vec(),
        n: d.n(),
        rows: d.rows().iter().map(ToString::to_string).collect(),
        cols: d.cols().iter().map(ToString::to_string).collect(),
        entries,
    }
}

fn parse_labels(labels: &[String]) -> Result<Vec<Multipartition>, CliError> {
    labels
        .iter()
        .map(|s| s.parse().map_err(CliError::from))
        .collect()
}

pub fn matrix_from_doc(doc: &MatrixDoc) -> Result<DecompositionMatrix, CliError> {
    let ctx = FockContext::new((&doc.e).try_into()?, Charge::new(doc.charge.clone())?);
    let mut entries = BTreeMap::new();
    for en in &doc.entries {
        let p = poly_from_doc(&en.poly)?;
        if entries.insert((en.row, en.col), p).is_some() {
            return Err(CliError::Format(format!(
                "duplicate entry ({}, {})",
                en.row, en.col
            )));
        }
    }
    Ok(DecompositionMatrix::from_parts(
        ctx,
        doc.n,
        parse_labels(&doc.rows)?,
        parse_labels(&doc.cols)?,
        entries,
    )?)
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Writes records through the `csv` crate so labels containing commas are
/// quoted.
pub fn to_csv<I, R>(records: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for rec in records {
        w.write_record(rec)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Format(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv input was utf-8"))
}

/// One CSV line per nonzero entry: `row_label,col_label,poly_string`.
pub fn matrix_csv(d: &DecompositionMatrix) -> Result<String, CliError> {
    let doc = matrix_doc(d);
    to_csv(doc.entries.iter().map(|en| {
        let p = &d.entries()[&(en.row, en.col)];
        [
            doc.rows[en.row].clone(),
            doc.cols[en.col].clone(),
            p.to_string(),
        ]
    }))
}

/// Aligns cells into columns separated by two spaces. The first row is the
/// header.
pub fn grid(cells: &[Vec<String>]) -> String {
    let width = cells.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0; width];
    for row in cells {
        for (k, cell) in row.iter().enumerate() {
            widths[k] = widths[k].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in cells {
        let mut line = String::new();
        for (k, cell) in row.iter().enumerate() {
            if k > 0 {
                line.push_str("  ");
            }
            let pad = widths[k] - cell.chars().count();
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', pad));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// The whole matrix as a grid, zeros shown as `.`.
pub fn matrix_table(d: &DecompositionMatrix) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "e={} charge={} n={}",
        d.ctx().e(),
        d.ctx().charge(),
        d.n()
    );
    let mut cells = Vec::with_capacity(d.rows().len() + 1);
    let mut header = vec![String::new()];
    header.extend(d.cols().iter().map(ToString::to_string));
    cells.push(header);
    for (r, lam) in d.rows().iter().enumerate() {
        let mut row = vec![lam.to_string()];
        for c in 0..d.cols().len() {
            row.push(
                d.entries()
                    .get(&(r, c))
                    .map_or_else(|| ".".into(), ToString::to_string),
            );
        }
        cells.push(row);
    }
    out.push_str(&grid(&cells));
    out
}
