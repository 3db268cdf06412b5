use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::de::{self, SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

use super::{quantize, render_value, RoundingPolicy};
use crate::error::{Error, Result};
use crate::metrics::MetricsRow;
use crate::ratio::{golden_ratio, porte_harmonie, Format};
use crate::series::{step_ratio, Provenance, SizeRow, SizeTable};

const CSV_COLUMNS: [&str; 6] = ["no", "point", "width_cm", "f_cm", "p_cm", "m_cm"];
const CSV_METRIC_COLUMNS: [&str; 6] = [
    "c_f_cm", "c_p_cm", "c_m_cm", "s_f_cm2", "s_p_cm2", "s_m_cm2",
];
const DISPLAY_COLUMNS: [&str; 6] = ["No", "Point", "Width (cm)", "F (cm)", "P (cm)", "M (cm)"];
const DISPLAY_METRIC_COLUMNS: [&str; 6] = [
    "C_F (cm)",
    "C_P (cm)",
    "C_M (cm)",
    "S_F (cm²)",
    "S_P (cm²)",
    "S_M (cm²)",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableFormat {
    Csv,
    Json,
    Markdown,
    /// Right-aligned plain text for terminals.
    Text,
}

impl TableFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            TableFormat::Csv => "csv",
            TableFormat::Json => "json",
            TableFormat::Markdown => "markdown",
            TableFormat::Text => "table",
        }
    }

    /// Whether the format is meant for programs rather than people.
    pub fn is_machine(self) -> bool {
        matches!(self, TableFormat::Csv | TableFormat::Json)
    }
}

impl fmt::Display for TableFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "markdown" | "md" => Ok(TableFormat::Markdown),
            "table" | "text" => Ok(TableFormat::Text),
            other => Err(format!("unknown table format `{other}`")),
        }
    }
}

/// Writes `table`, optionally followed by metric columns, to `sink`.
///
/// Output is a pure function of the arguments. Columns follow the order
/// No, Point, Width, F, P, M, then circumferences and areas.
pub fn export_table<W: Write>(
    table: &SizeTable,
    metrics: Option<&[MetricsRow]>,
    format: TableFormat,
    policy: RoundingPolicy,
    mut sink: W,
) -> Result<()> {
    if let Some(m) = metrics {
        if m.len() != table.len() {
            return Err(Error::Argument(format!(
                "{} metrics rows for a {}-row table",
                m.len(),
                table.len()
            )));
        }
    }
    match format {
        TableFormat::Json => write_json(table, metrics, policy, &mut sink)?,
        TableFormat::Csv => {
            let header = header(&CSV_COLUMNS, &CSV_METRIC_COLUMNS, metrics.is_some());
            writeln!(sink, "{}", header.join(","))?;
            for cells in cell_rows(table, metrics, policy) {
                writeln!(sink, "{}", cells.join(","))?;
            }
        }
        TableFormat::Markdown => {
            let header = header(&DISPLAY_COLUMNS, &DISPLAY_METRIC_COLUMNS, metrics.is_some());
            writeln!(sink, "| {} |", header.join(" | "))?;
            let rule: Vec<&str> = header.iter().map(|_| "---:").collect();
            writeln!(sink, "|{}|", rule.join("|"))?;
            for cells in cell_rows(table, metrics, policy) {
                writeln!(sink, "| {} |", cells.join(" | "))?;
            }
        }
        TableFormat::Text => {
            let header = header(&DISPLAY_COLUMNS, &DISPLAY_METRIC_COLUMNS, metrics.is_some());
            let mut lines = vec![header.iter().map(|h| h.to_string()).collect::<Vec<_>>()];
            lines.extend(cell_rows(table, metrics, policy));
            write_aligned(&lines, &mut sink)?;
        }
    }
    sink.flush()?;
    Ok(())
}

fn header<'a>(base: &[&'a str], extra: &[&'a str], with_metrics: bool) -> Vec<&'a str> {
    let mut h = base.to_vec();
    if with_metrics {
        h.extend_from_slice(extra);
    }
    h
}

fn cell_rows(
    table: &SizeTable,
    metrics: Option<&[MetricsRow]>,
    policy: RoundingPolicy,
) -> Vec<Vec<String>> {
    table
        .rows()
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let mut cells = vec![
                r.index.to_string(),
                r.point.map(|p| p.to_string()).unwrap_or_default(),
            ];
            cells.extend(
                [r.width_cm, r.height_f_cm, r.height_p_cm, r.height_m_cm]
                    .into_iter()
                    .map(|x| render_value(x, policy)),
            );
            if let Some(m) = metrics {
                cells.extend(
                    metric_values(&m[k])
                        .into_iter()
                        .map(|x| render_value(x, policy)),
                );
            }
            cells
        })
        .collect()
}

fn metric_values(m: &MetricsRow) -> [f64; 6] {
    let c = |f| m.circumference_cm[f];
    let s = |f| m.area_cm2[f];
    [
        c(Format::Figure),
        c(Format::Paysage),
        c(Format::Marine),
        s(Format::Figure),
        s(Format::Paysage),
        s(Format::Marine),
    ]
}

/// Right-aligns every column, two spaces apart.
pub(crate) fn write_aligned<W: Write>(lines: &[Vec<String>], sink: &mut W) -> Result<()> {
    let columns = lines.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            lines
                .iter()
                .filter_map(|l| l.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for line in lines {
        let cells: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        writeln!(sink, "{}", cells.join("  "))?;
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct JsonConstants {
    golden_ratio: f64,
    porte_harmonie: f64,
    step_ratio: f64,
}

#[derive(Serialize, Deserialize)]
struct JsonRow {
    no: u32,
    point: Option<u32>,
    width_cm: PositiveCm,
    f_cm: PositiveCm,
    p_cm: PositiveCm,
    m_cm: PositiveCm,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c_f_cm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c_p_cm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c_m_cm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    s_f_cm2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    s_p_cm2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    s_m_cm2: Option<f64>,
}

#[derive(Serialize, Deserialize)]
struct JsonDocument {
    base_width_cm: PositiveCm,
    provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    constants: Option<JsonConstants>,
    rows: JsonRows,
}

/// A length that deserializes only when finite and positive, so that
/// serde_json reports the offending line.
#[derive(Clone, Copy, Serialize)]
#[serde(transparent)]
struct PositiveCm(f64);

impl<'de> Deserialize<'de> for PositiveCm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let x = f64::deserialize(d)?;
        if x.is_finite() && x > 0.0 {
            Ok(PositiveCm(x))
        } else {
            Err(de::Error::custom(format!(
                "dimension must be positive, got {x}"
            )))
        }
    }
}

/// Rows numbered 1, 2, 3, … in order.
#[derive(Serialize)]
#[serde(transparent)]
struct JsonRows(Vec<JsonRow>);

impl<'de> Deserialize<'de> for JsonRows {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct RowsVisitor;

        impl<'de> Visitor<'de> for RowsVisitor {
            type Value = JsonRows;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of rows")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<JsonRows, A::Error> {
                let mut rows = Vec::new();
                while let Some(row) = seq.next_element::<JsonRow>()? {
                    let expected = rows.len() as u32 + 1;
                    if row.no != expected {
                        return Err(de::Error::custom(format!(
                            "row number {} out of sequence, expected {expected}",
                            row.no
                        )));
                    }
                    rows.push(row);
                }
                Ok(JsonRows(rows))
            }
        }

        d.deserialize_seq(RowsVisitor)
    }
}

fn write_json<W: Write>(
    table: &SizeTable,
    metrics: Option<&[MetricsRow]>,
    policy: RoundingPolicy,
    sink: &mut W,
) -> Result<()> {
    let full = |x: f64| quantize(x, RoundingPolicy::Full);
    let q = |x: f64| quantize(x, policy);
    let rows = table
        .rows()
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let m = metrics.map(|m| metric_values(&m[k]).map(q));
            let pick = |i: usize| m.map(|v| v[i]);
            JsonRow {
                no: r.index,
                point: r.point,
                width_cm: PositiveCm(q(r.width_cm)),
                f_cm: PositiveCm(q(r.height_f_cm)),
                p_cm: PositiveCm(q(r.height_p_cm)),
                m_cm: PositiveCm(q(r.height_m_cm)),
                c_f_cm: pick(0),
                c_p_cm: pick(1),
                c_m_cm: pick(2),
                s_f_cm2: pick(3),
                s_p_cm2: pick(4),
                s_m_cm2: pick(5),
            }
        })
        .collect();
    let doc = JsonDocument {
        base_width_cm: PositiveCm(full(table.base_width_cm())),
        provenance: table.documented_provenance(),
        constants: Some(JsonConstants {
            golden_ratio: full(golden_ratio()),
            porte_harmonie: full(porte_harmonie()),
            step_ratio: full(step_ratio()),
        }),
        rows: JsonRows(rows),
    };
    serde_json::to_writer_pretty(&mut *sink, &doc).map_err(|e| Error::Io(e.into()))?;
    writeln!(sink)?;
    Ok(())
}

/// Reads a table written by [`export_table`] in CSV or JSON.
///
/// The result has provenance `Imported`; a JSON document's declared
/// provenance is kept as the table's source.
pub fn import_table(bytes: &[u8], format: TableFormat) -> Result<SizeTable> {
    match format {
        TableFormat::Csv => import_csv(bytes),
        TableFormat::Json => import_json(bytes),
        other => Err(Error::Argument(format!("cannot import from {other}"))),
    }
}

fn import_json(bytes: &[u8]) -> Result<SizeTable> {
    let doc: JsonDocument =
        serde_json::from_slice(bytes).map_err(|e| Error::parse(e.line() as u64, e.to_string()))?;
    let rows = doc
        .rows
        .0
        .into_iter()
        .map(|r| SizeRow {
            index: r.no,
            point: r.point,
            width_cm: r.width_cm.0,
            height_f_cm: r.f_cm.0,
            height_p_cm: r.p_cm.0,
            height_m_cm: r.m_cm.0,
        })
        .collect::<Vec<_>>();
    if rows.is_empty() {
        return Err(Error::parse(1, "document has no rows"));
    }
    Ok(
        SizeTable::new(doc.base_width_cm.0, rows, Provenance::Imported)?
            .with_source(Some(doc.provenance)),
    )
}

fn import_csv(bytes: &[u8]) -> Result<SizeTable> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(bytes);
    let headers = reader.headers().map_err(|e| csv_error(&e))?.clone();
    let mut positions = [0usize; 6];
    for (slot, name) in positions.iter_mut().zip(CSV_COLUMNS) {
        *slot = headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| Error::parse(1, format!("missing column `{name}`")))?;
    }

    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| csv_error(&e))?;
        let line = record.position().map_or(0, |p| p.line());
        let field = |i: usize| record.get(positions[i]).unwrap_or("").trim();
        let no: u32 = field(0)
            .parse()
            .map_err(|_| Error::parse(line, format!("bad row number `{}`", field(0))))?;
        let expected = rows.len() as u32 + 1;
        if no != expected {
            return Err(Error::parse(
                line,
                format!("row number {no} out of sequence, expected {expected}"),
            ));
        }
        let point = match field(1) {
            "" => None,
            s => Some(
                s.parse::<u32>()
                    .map_err(|_| Error::parse(line, format!("bad point `{s}`")))?,
            ),
        };
        let mut dims = [0.0; 4];
        for (k, d) in dims.iter_mut().enumerate() {
            let raw = field(k + 2);
            let name = CSV_COLUMNS[k + 2];
            let x: f64 = raw
                .parse()
                .map_err(|_| Error::parse(line, format!("bad number `{raw}` in `{name}`")))?;
            if !(x.is_finite() && x > 0.0) {
                return Err(Error::parse(
                    line,
                    format!("`{name}` must be positive, got {raw}"),
                ));
            }
            *d = x;
        }
        rows.push(SizeRow {
            index: no,
            point,
            width_cm: dims[0],
            height_f_cm: dims[1],
            height_p_cm: dims[2],
            height_m_cm: dims[3],
        });
    }
    let base = rows
        .first()
        .map(|r| r.width_cm)
        .ok_or_else(|| Error::parse(1, "no data rows"))?;
    SizeTable::new(base, rows, Provenance::Imported)
}

fn csv_error(e: &csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line());
    Error::parse(line, e.to_string())
}
