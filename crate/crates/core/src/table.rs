//! Order tables, report rendering and CSV / JSON export.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::central::CentralSeriesProfile;
use crate::closure::{close_pairs, close_raw, PAIRS_MAX_M, RAW_MAX_M};
use crate::container::Decomposition;
use crate::group::MAX_MODULUS;
use crate::modular::{orbit_profile, OrbitProfile};
use crate::orders::{order_report, IsoStatus, OrderReport};
use crate::{Error, GroupParams, Result, Side};

/// Largest `m` verified against the pair oracle by default.
pub const DEFAULT_PAIRS_LIMIT: u64 = 512;

pub const CSV_COLUMNS: [&str; 9] = [
    "m",
    "p_order",
    "lambda_order",
    "t_right",
    "t_left",
    "per_minus2",
    "per_plus2",
    "iso_gupta",
    "verified",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyLevel {
    None,
    Pairs,
    Raw,
}

impl VerifyLevel {
    /// Pairs up to [`DEFAULT_PAIRS_LIMIT`], nothing above.
    pub fn default_for(m: u64) -> Self {
        if m <= DEFAULT_PAIRS_LIMIT {
            VerifyLevel::Pairs
        } else {
            VerifyLevel::None
        }
    }
}

impl FromStr for VerifyLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(VerifyLevel::None),
            "pairs" => Ok(VerifyLevel::Pairs),
            "raw" => Ok(VerifyLevel::Raw),
            _ => Err(Error::Parameter(format!("unknown verify level {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verified {
    FormulaOnly,
    PairsVerified,
    RawVerified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(Error::Parameter(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub m: u64,
    pub p_order: u64,
    pub lambda_order: u64,
    pub t_right: u64,
    pub t_left: u64,
    pub per_minus2: u64,
    pub per_plus2: u64,
    pub iso_gupta: bool,
    pub verified: Verified,
}

impl TableRow {
    pub fn order(&self, side: Side) -> u64 {
        match side {
            Side::Right => self.p_order,
            Side::Left => self.lambda_order,
        }
    }
}

fn row_from_report(report: &OrderReport, verified: Verified) -> TableRow {
    let m = report.m;
    TableRow {
        m,
        p_order: report.p_order,
        lambda_order: report.lambda_order,
        t_right: report.t_right,
        t_left: report.t_left,
        per_minus2: orbit_profile(-2, m).period,
        per_plus2: orbit_profile(2, m).period,
        iso_gupta: report.iso == IsoStatus::Isomorphic,
        verified,
    }
}

/// Check both orders in `report` against an oracle.
fn verify_report(report: &OrderReport, level: VerifyLevel, g: &GroupParams) -> Result<Verified> {
    let verified = match level {
        VerifyLevel::None => return Ok(Verified::FormulaOnly),
        // raw tables fall back to pairs above their bound
        VerifyLevel::Raw if g.m() <= RAW_MAX_M => Verified::RawVerified,
        _ => Verified::PairsVerified,
    };
    for side in Side::BOTH {
        let summary = match verified {
            Verified::RawVerified => close_raw(side, g)?,
            _ => close_pairs(side, g)?,
        };
        let formula = match side {
            Side::Right => report.p_order,
            Side::Left => report.lambda_order,
        };
        if summary.size as u64 != formula {
            return Err(Error::Consistency(format!(
                "m = {}, side = {side}: formula {formula}, oracle {}",
                g.m(),
                summary.size
            )));
        }
    }
    Ok(verified)
}

/// One row. `level = None` selects [`VerifyLevel::default_for`].
pub fn table_row(m: u64, level: Option<VerifyLevel>) -> Result<TableRow> {
    let g = GroupParams::new(m)?;
    let report = order_report(&g)?;
    let verified = verify_report(&report, level.unwrap_or(VerifyLevel::default_for(m)), &g)?;
    Ok(row_from_report(&report, verified))
}

/// Rows for `from..=to` in ascending `m`, computed in parallel.
pub fn build_table(from: u64, to: u64, level: Option<VerifyLevel>) -> Result<Vec<TableRow>> {
    if from < 3 || from > to || to > MAX_MODULUS {
        return Err(Error::Parameter(format!(
            "need 3 <= from <= to <= {MAX_MODULUS} (got from = {from}, to = {to})"
        )));
    }
    if level.is_some_and(|l| l != VerifyLevel::None) && to > PAIRS_MAX_M {
        return Err(Error::Resource(format!(
            "oracle verification limited to m <= {PAIRS_MAX_M} (got to = {to})"
        )));
    }
    (from..=to)
        .into_par_iter()
        .map(|m| table_row(m, level))
        .collect()
}

/// Provenance attached by `--meta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableMeta {
    pub generator: String,
    pub version: String,
    pub from: u64,
    pub to: u64,
    pub verify: String,
    pub columns: Vec<String>,
}

impl TableMeta {
    pub fn new(from: u64, to: u64, level: Option<VerifyLevel>) -> Self {
        TableMeta {
            generator: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            from,
            to,
            verify: match level {
                None => format!("default (pairs for m <= {DEFAULT_PAIRS_LIMIT}, none above)"),
                Some(VerifyLevel::None) => "none".into(),
                Some(VerifyLevel::Pairs) => "pairs".into(),
                Some(VerifyLevel::Raw) => format!("raw (pairs above m = {RAW_MAX_M})"),
            },
            columns: CSV_COLUMNS.iter().map(|c| c.to_string()).collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TableDocument {
    meta: TableMeta,
    rows: Vec<TableRow>,
}

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::Resource(format!("i/o: {e}"))
}

/// CSV with a header row; `meta` lines precede it as `#` comments.
pub fn write_csv<W: Write>(rows: &[TableRow], meta: Option<&TableMeta>, mut out: W) -> Result<()> {
    if let Some(meta) = meta {
        writeln!(out, "# generator: {} {}", meta.generator, meta.version).map_err(io_error)?;
        writeln!(out, "# range: {}..={}", meta.from, meta.to).map_err(io_error)?;
        writeln!(out, "# verify: {}", meta.verify).map_err(io_error)?;
    }
    let mut writer = csv::Writer::from_writer(out);
    if rows.is_empty() {
        writer.write_record(CSV_COLUMNS).map_err(io_error)?;
    }
    for row in rows {
        writer.serialize(row).map_err(io_error)?;
    }
    writer.flush().map_err(io_error)
}

pub fn parse_csv<R: Read>(input: R) -> Result<Vec<TableRow>> {
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(input)
        .deserialize()
        .map(|r| r.map_err(|e| Error::Parameter(format!("csv: {e}"))))
        .collect()
}

/// A JSON array of rows, or `{"meta": ..., "rows": [...]}` with `meta`.
pub fn write_json<W: Write>(rows: &[TableRow], meta: Option<&TableMeta>, mut out: W) -> Result<()> {
    match meta {
        None => serde_json::to_writer_pretty(&mut out, rows),
        Some(meta) => serde_json::to_writer_pretty(
            &mut out,
            &TableDocument {
                meta: meta.clone(),
                rows: rows.to_vec(),
            },
        ),
    }
    .map_err(io_error)?;
    writeln!(out).map_err(io_error)
}

/// Accepts both shapes produced by [`write_json`].
pub fn parse_json<R: Read>(input: R) -> Result<Vec<TableRow>> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Shape {
        Rows(Vec<TableRow>),
        Document(TableDocument),
    }
    let shape: Shape =
        serde_json::from_reader(input).map_err(|e| Error::Parameter(format!("json: {e}")))?;
    Ok(match shape {
        Shape::Rows(rows) => rows,
        Shape::Document(doc) => doc.rows,
    })
}

pub fn render_table_text(rows: &[TableRow]) -> String {
    let mut s = format!(
        "{:>6} {:>10} {:>10} {:>7} {:>7} {:>5} {:>5} {:>5}  {}\n",
        "m", "|P|", "|Λ|", "t_right", "t_left", "per-2", "per2", "iso", "verified"
    );
    for r in rows {
        let verified = match r.verified {
            Verified::FormulaOnly => "formula_only",
            Verified::PairsVerified => "pairs_verified",
            Verified::RawVerified => "raw_verified",
        };
        let _ = writeln!(
            s,
            "{:>6} {:>10} {:>10} {:>7} {:>7} {:>5} {:>5} {:>5}  {verified}",
            r.m, r.p_order, r.lambda_order, r.t_right, r.t_left, r.per_minus2, r.per_plus2, r.iso_gupta
        );
    }
    s
}

pub fn render_order_text(report: &OrderReport, sides: &[Side]) -> String {
    let mut s = format!("m = {}\n", report.m);
    for &side in sides {
        let (order, t) = match side {
            Side::Right => (report.p_order, report.t_right),
            Side::Left => (report.lambda_order, report.t_left),
        };
        let _ = writeln!(s, "|{}(D_{})| = {order}  (t = {t})", side.symbol(), report.m);
    }
    let _ = writeln!(
        s,
        "formula: {:?}, cross-checked by {:?}",
        report.formula_used, report.cross_check
    );
    if report.oracle_only {
        let _ = writeln!(s, "note: central-series formula not established here; values confirmed by oracle");
    }
    let _ = writeln!(s, "P ≅ Λ by odd-prime criterion: {:?}", report.iso);
    s
}

pub fn render_decomposition_text(d: &Decomposition) -> String {
    let mut s = format!(
        "{}(D_{}) = union of {} containers (t = {})\n",
        d.side.symbol(),
        d.m,
        d.parts.len(),
        d.t
    );
    let mut total = 0;
    for part in &d.parts {
        total += part.cardinality;
        let _ = writeln!(
            s,
            "{:<14} u = {:<4} size {:<8} running total {total}",
            part.container.to_string(),
            part.exponent,
            part.cardinality
        );
    }
    let _ = writeln!(s, "total {total}");
    s
}

pub fn render_central_series_text(m: u64, profile: &CentralSeriesProfile) -> String {
    let mut s = format!("upper central series of D_{m}\n");
    for (u, order) in profile.orders.iter().enumerate() {
        let _ = writeln!(s, "|Z_{u}| = {order}");
    }
    let _ = writeln!(
        s,
        "stabilizes at u = {}; nilpotent: {}",
        profile.stabilization_index, profile.nilpotent
    );
    s
}

pub fn render_orbit_text(profile: &OrbitProfile) -> String {
    let order = profile
        .order
        .map_or_else(|| "none".to_string(), |o| o.to_string());
    format!(
        "x = {} mod {}: index {}, period {}, order {order}\n",
        profile.x, profile.m, profile.index, profile.period
    )
}
