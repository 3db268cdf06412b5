//! Size tables of the exact-ratio system.
//!
//! Widths form a geometric progression `W(i) = w·(φ/√2)^(i−1)`; each height
//! follows from its width and the format target. With this step the heights
//! interlock across formats so that `F(i) = P(i+1) = M(i+2)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratio::{golden_ratio, porte_harmonie, Format};

/// Largest table [`generate`] will build.
pub const MAX_ROWS: u32 = 1000;

/// Ratio between consecutive widths, φ/√2 ≈ 1.1441.
pub fn step_ratio() -> f64 {
    golden_ratio() / porte_harmonie()
}

/// Ratio between consecutive areas, φ²/2 ≈ 1.3090.
pub fn area_step_ratio() -> f64 {
    let phi = golden_ratio();
    phi * phi / 2.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Generated,
    Legacy,
    Imported,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Generated => "generated",
            Provenance::Legacy => "legacy",
            Provenance::Imported => "imported",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Provenance {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "generated" => Ok(Provenance::Generated),
            "legacy" => Ok(Provenance::Legacy),
            "imported" => Ok(Provenance::Imported),
            other => Err(format!("unknown provenance `{other}`")),
        }
    }
}

/// One canvas size: the shared width and the height of each format, in cm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SizeRow {
    /// 1-based position in the table.
    pub index: u32,
    pub point: Option<u32>,
    pub width_cm: f64,
    pub height_f_cm: f64,
    pub height_p_cm: f64,
    pub height_m_cm: f64,
}

impl SizeRow {
    pub fn height(&self, format: Format) -> f64 {
        match format {
            Format::Figure => self.height_f_cm,
            Format::Paysage => self.height_p_cm,
            Format::Marine => self.height_m_cm,
        }
    }

    /// Width divided by the height of `format`.
    pub fn ratio(&self, format: Format) -> f64 {
        self.width_cm / self.height(format)
    }

    fn dimensions(&self) -> [(&'static str, f64); 4] {
        [
            ("width", self.width_cm),
            ("F height", self.height_f_cm),
            ("P height", self.height_p_cm),
            ("M height", self.height_m_cm),
        ]
    }
}

/// An ordered, validated list of sizes.
///
/// Rows are indexed `1..=n` without gaps and every dimension is finite and
/// positive.
#[derive(Debug, Clone, PartialEq)]
pub struct SizeTable {
    base_width_cm: f64,
    rows: Vec<SizeRow>,
    provenance: Provenance,
    source: Option<Provenance>,
}

impl SizeTable {
    pub fn new(base_width_cm: f64, rows: Vec<SizeRow>, provenance: Provenance) -> Result<Self> {
        if !(base_width_cm.is_finite() && base_width_cm > 0.0) {
            return Err(Error::domain(
                "base_width_cm",
                base_width_cm,
                "must be finite and positive",
            ));
        }
        if rows.is_empty() {
            return Err(Error::Argument(
                "a size table needs at least one row".into(),
            ));
        }
        for (expected, row) in (1u32..).zip(&rows) {
            if row.index != expected {
                return Err(Error::Data {
                    index: row.index,
                    message: format!("expected index {expected}"),
                });
            }
            for (name, value) in row.dimensions() {
                if !(value.is_finite() && value > 0.0) {
                    return Err(Error::Data {
                        index: row.index,
                        message: format!("{name} must be finite and positive, got {value}"),
                    });
                }
            }
        }
        Ok(SizeTable {
            base_width_cm,
            rows,
            provenance,
            source: None,
        })
    }

    /// Records the provenance stated by the document a table was read from.
    pub(crate) fn with_source(mut self, source: Option<Provenance>) -> Self {
        self.source = source;
        self
    }

    pub fn base_width_cm(&self) -> f64 {
        self.base_width_cm
    }

    pub fn rows(&self) -> &[SizeRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Provenance declared by the imported document, if any.
    pub fn source(&self) -> Option<Provenance> {
        self.source
    }

    /// Provenance to write when the table is serialized: the declared source
    /// of an imported table, otherwise its own provenance.
    pub fn documented_provenance(&self) -> Provenance {
        self.source.unwrap_or(self.provenance)
    }

    /// Row with 1-based `index`.
    pub fn row(&self, index: u32) -> Option<&SizeRow> {
        index.checked_sub(1).and_then(|i| self.rows.get(i as usize))
    }

    /// The first `n` rows (all of them if `n` exceeds the length).
    pub fn truncated(&self, n: usize) -> Result<SizeTable> {
        if n == 0 {
            return Err(Error::Argument(
                "cannot truncate a table to zero rows".into(),
            ));
        }
        let mut out = self.clone();
        out.rows.truncate(n);
        Ok(out)
    }

    /// Every dimension multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<SizeTable> {
        if !(factor.is_finite() && factor > 0.0) {
            return Err(Error::domain(
                "factor",
                factor,
                "must be finite and positive",
            ));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| SizeRow {
                width_cm: r.width_cm * factor,
                height_f_cm: r.height_f_cm * factor,
                height_p_cm: r.height_p_cm * factor,
                height_m_cm: r.height_m_cm * factor,
                ..*r
            })
            .collect();
        Ok(
            SizeTable::new(self.base_width_cm * factor, rows, self.provenance)?
                .with_source(self.source),
        )
    }
}

fn check_width(w: f64) -> Result<()> {
    if w.is_finite() && w > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(
            "w",
            w,
            "base width must be finite and positive",
        ))
    }
}

/// `W(i) = w·(φ/√2)^(i−1)`.
pub fn width_closed_form(i: u32, w: f64) -> Result<f64> {
    if i < 1 {
        return Err(Error::domain("i", f64::from(i), "size index starts at 1"));
    }
    check_width(w)?;
    let width = w * step_ratio().powf(f64::from(i - 1));
    if !width.is_finite() {
        return Err(Error::domain("i", f64::from(i), "width overflows"));
    }
    Ok(width)
}

/// `[W(1), …, W(n)]` by repeated multiplication with φ/√2, starting at `w`.
pub fn width_recurrence(n: u32, w: f64) -> Result<Vec<f64>> {
    if n < 1 {
        return Err(Error::domain("n", f64::from(n), "need at least one size"));
    }
    check_width(w)?;
    let step = step_ratio();
    let widths: Vec<f64> = std::iter::successors(Some(w), |prev| Some(prev * step))
        .take(n as usize)
        .collect();
    if widths.last().is_some_and(|x| !x.is_finite()) {
        return Err(Error::domain("n", f64::from(n), "width overflows"));
    }
    Ok(widths)
}

/// Height of `format` for a canvas of the given width.
pub fn height_for(format: Format, width: f64) -> Result<f64> {
    if !(width.is_finite() && width > 0.0) {
        return Err(Error::domain("width", width, "must be finite and positive"));
    }
    let phi = golden_ratio();
    Ok(match format {
        Format::Figure => width * phi / 2.0,
        Format::Paysage => width / porte_harmonie(),
        Format::Marine => width / phi,
    })
}

/// Builds the `n`-row exact-ratio table starting at width `w`.
///
/// `labels`, when given, are attached to rows `1..=labels.len()` in order and
/// never enter the computation.
pub fn generate(w: f64, n: u32, labels: Option<&[u32]>) -> Result<SizeTable> {
    check_width(w)?;
    if !(1..=MAX_ROWS).contains(&n) {
        return Err(Error::domain(
            "n",
            f64::from(n),
            "row count must be in 1..=1000",
        ));
    }
    let labels = labels.unwrap_or(&[]);
    if labels.len() > n as usize {
        return Err(Error::Argument(format!(
            "{} point labels given for {n} rows",
            labels.len()
        )));
    }
    let rows = (1..=n)
        .map(|i| {
            let width = width_closed_form(i, w)?;
            Ok(SizeRow {
                index: i,
                point: labels.get(i as usize - 1).copied(),
                width_cm: width,
                height_f_cm: height_for(Format::Figure, width)?,
                height_p_cm: height_for(Format::Paysage, width)?,
                height_m_cm: height_for(Format::Marine, width)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SizeTable::new(w, rows, Provenance::Generated)
}
