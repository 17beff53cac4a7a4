//! Table files and emitters.
//!
//! The native cache format is line-oriented text:
//!
//! ```text
//! #gstirling-table 1
//! #region -2:2:1
//! #method recurrence
//! #created 1760000000
//! -2,0,1/2
//! -2,1,-3/4
//! ...
//! ```
//!
//! Rows are `n,k,p/q` in degree-major order. Parsing then printing reproduces
//! the input byte for byte.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::stirling::{Method, Region, StirlingTable};

pub const NATIVE_MAGIC: &str = "#gstirling-table";
pub const NATIVE_VERSION: u32 = 1;

/// A persisted [`StirlingTable`] with its header.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableFile {
    pub version: u32,
    /// Seconds since the Unix epoch.
    pub created: u64,
    pub table: StirlingTable,
}

impl TableFile {
    pub fn new(table: StirlingTable, created: u64) -> Self {
        TableFile { version: NATIVE_VERSION, created, table }
    }

    pub fn to_native(&self) -> String {
        let t = &self.table;
        let mut out = String::new();
        writeln!(out, "{NATIVE_MAGIC} {}", self.version).unwrap();
        writeln!(out, "#region {}", t.region()).unwrap();
        writeln!(out, "#method {}", t.method()).unwrap();
        writeln!(out, "#created {}", self.created).unwrap();
        for (n, k, v) in t.iter() {
            writeln!(out, "{n},{k},{v}").unwrap();
        }
        out
    }

    pub fn from_native(text: &str) -> Result<Self> {
        let err = |line: usize, reason: &str| Error::TableFormat { line, reason: reason.to_string() };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let mut header = |key: &str| -> Result<String> {
            let (no, line) = lines.next().ok_or_else(|| err(0, "truncated header"))?;
            line.strip_prefix(key)
                .and_then(|rest| rest.strip_prefix(' '))
                .map(str::to_string)
                .ok_or_else(|| err(no, &format!("expected {key}")))
        };
        let version: u32 = header(NATIVE_MAGIC)?.parse().map_err(|_| err(1, "bad version"))?;
        if version != NATIVE_VERSION {
            return Err(err(1, &format!("unsupported version {version}")));
        }
        let region: Region = header("#region")?.parse().map_err(|e: Error| err(2, &e.to_string()))?;
        let method: Method = header("#method")?.parse().map_err(|e: Error| err(3, &e.to_string()))?;
        let created: u64 = header("#created")?.parse().map_err(|_| err(4, "bad timestamp"))?;

        let mut cells: Vec<Option<Rational>> = vec![None; region.cell_count()];
        for (no, line) in lines {
            let mut fields = line.splitn(3, ',');
            let (Some(n), Some(k), Some(v)) = (fields.next(), fields.next(), fields.next()) else {
                return Err(err(no, "expected n,k,value"));
            };
            let n: i64 = n.parse().map_err(|_| err(no, "bad degree"))?;
            let k: usize = k.parse().map_err(|_| err(no, "bad order"))?;
            let v: Rational = v.parse().map_err(|_| err(no, "bad rational"))?;
            if !region.contains(n, k) {
                return Err(err(no, "cell outside declared region"));
            }
            let slot = &mut cells[(n - region.n_min) as usize * (region.k_max + 1) + k];
            if slot.replace(v).is_some() {
                return Err(err(no, "duplicate cell"));
            }
        }
        let cells = cells
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| err(0, "missing cells"))?;
        Ok(TableFile { version, created, table: StirlingTable::from_cells(region, method, cells)? })
    }
}

pub fn to_csv(table: &StirlingTable) -> String {
    let mut out = String::from("n,k,value\n");
    for (n, k, v) in table.iter() {
        writeln!(out, "{n},{k},{v}").unwrap();
    }
    out
}

#[derive(Serialize, Deserialize)]
struct JsonCell {
    n: i64,
    k: usize,
    value: Rational,
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    format: String,
    version: u32,
    region: Region,
    method: Method,
    created: u64,
    cells: Vec<JsonCell>,
}

pub fn to_json(file: &TableFile) -> String {
    let t = &file.table;
    let doc = JsonTable {
        format: "gstirling-table".into(),
        version: file.version,
        region: t.region(),
        method: t.method(),
        created: file.created,
        cells: t.iter().map(|(n, k, v)| JsonCell { n, k, value: v.clone() }).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("table serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<TableFile> {
    let doc: JsonTable =
        serde_json::from_str(text).map_err(|e| Error::TableFormat { line: e.line(), reason: e.to_string() })?;
    let region = doc.region;
    let mut cells: Vec<Option<Rational>> = vec![None; region.cell_count()];
    for c in doc.cells {
        if !region.contains(c.n, c.k) {
            return Err(Error::TableFormat { line: 0, reason: format!("cell ({},{}) outside region", c.n, c.k) });
        }
        cells[(c.n - region.n_min) as usize * (region.k_max + 1) + c.k] = Some(c.value);
    }
    let cells = cells
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::TableFormat { line: 0, reason: "missing cells".into() })?;
    Ok(TableFile { version: doc.version, created: doc.created, table: StirlingTable::from_cells(region, doc.method, cells)? })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LatexOptions {
    /// Group digits of numbers with five or more digits by commas (`12,019`).
    pub group_digits: bool,
    /// Label the degree-6 column `-6`, as in the historical printing of this table.
    pub legacy_minus_six: bool,
}

fn group(digits: &str, on: bool) -> String {
    if !on || digits.len() < 5 {
        return digits.to_string();
    }
    let mut out = String::with_capacity(digits.len() + digits.len() / 3);
    for (i, ch) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(ch);
    }
    out
}

/// A cell as it is typeset: sign outside the fraction, math mode only when needed.
pub fn latex_cell(v: &Rational, group_digits: bool) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let num = group(&v.numer().magnitude().to_string(), group_digits);
    let sign = if v.is_negative() { "-" } else { "" };
    if v.is_integer() {
        if v.is_negative() {
            format!("$-{num}$")
        } else {
            num
        }
    } else {
        let den = group(&v.denom().to_string(), group_digits);
        format!("${sign}\\frac{{{num}}}{{{den}}}$")
    }
}

/// Orders down the rows, degrees across the columns, negative degrees fenced
/// off from the rest.
pub fn to_latex(table: &StirlingTable, opts: LatexOptions) -> String {
    let region = table.region();
    let degrees: Vec<i64> = region.degrees().collect();
    let negatives = degrees.iter().filter(|&&n| n < 0).count();
    let others = degrees.len() - negatives;
    let mut spec = String::from("c|");
    spec.push_str(&"r".repeat(negatives));
    if negatives > 0 && others > 0 {
        spec.push('|');
    }
    spec.push_str(&"r".repeat(others));

    let label = |n: i64| -> String {
        let shown = if opts.legacy_minus_six && n == 6 { -6 } else { n };
        if shown < 0 {
            format!("${shown}$")
        } else {
            shown.to_string()
        }
    };

    let mut out = String::new();
    writeln!(out, "\\begin{{tabular}}{{{spec}}}").unwrap();
    let head: Vec<String> = degrees.iter().map(|&n| label(n)).collect();
    writeln!(out, "$k \\backslash n$ & {} \\\\", head.join(" & ")).unwrap();
    writeln!(out, "\\hline").unwrap();
    for k in 0..=region.k_max {
        let row: Vec<String> = degrees
            .iter()
            .map(|&n| latex_cell(table.get(n, k).expect("inside"), opts.group_digits))
            .collect();
        writeln!(out, "{k} & {} \\\\", row.join(" & ")).unwrap();
    }
    writeln!(out, "\\end{{tabular}}").unwrap();
    out
}
