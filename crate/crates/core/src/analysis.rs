//! Deviation of size tables from the format ratios and from the
//! optimal-use-of-material rule.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratio::{golden_ratio, porte_harmonie, target_for, Format};
use crate::render::PlotSeries;
use crate::series::{generate, SizeRow, SizeTable};
use crate::standards::{french_table, lookup_point, new_point_labels, NewPointLabels};

// Closeness tolerances, relative to the target, calibrated by sweeping the
// legacy table's deviations (see tests/calibration.rs). Each format has its
// own window and the windows do not overlap:
//   figure  [0.01349, 0.01570)  largest named F3..F150, first excluded F20
//   paysage [0.01434, 0.02344)  largest named P8,       first excluded P10
//   marine  [0.01792, 0.03006)  largest named M50,      first excluded M10
pub const LEGACY_TOLERANCE_FIGURE: f64 = 0.015;
pub const LEGACY_TOLERANCE_PAYSAGE: f64 = 0.02;
pub const LEGACY_TOLERANCE_MARINE: f64 = 0.02;

// Old width over new height, relative to the target, reduces to
// W_old/W_new for every format, so one value serves all three. The sweep
// puts the 12th smallest deviation (point 25) at 0.02332 and the 13th
// (point 40) at 0.03488.
pub const MIXED_TOLERANCE: f64 = 0.03;

/// Calibrated closeness tolerance for the legacy table.
pub fn legacy_tolerance(format: Format) -> f64 {
    match format {
        Format::Figure => LEGACY_TOLERANCE_FIGURE,
        Format::Paysage => LEGACY_TOLERANCE_PAYSAGE,
        Format::Marine => LEGACY_TOLERANCE_MARINE,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportKind {
    /// Width over height within one table.
    Direct,
    /// Legacy width over generated height at the same point.
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioEntry {
    pub index: u32,
    pub point: Option<u32>,
    pub ratio: f64,
    pub target: f64,
    /// `|ratio − target| / target`
    pub relative_deviation: f64,
    pub close: bool,
}

/// Ratios of one format against its target.
///
/// An entry is close when its relative deviation is strictly below the
/// tolerance, so a zero tolerance marks nothing as close.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioReport {
    pub format: Format,
    pub kind: ReportKind,
    pub target: f64,
    pub tolerance: f64,
    pub entries: Vec<RatioEntry>,
    pub close_count: usize,
}

pub type MixedRatioReport = RatioReport;

impl RatioReport {
    fn build(
        format: Format,
        kind: ReportKind,
        tolerance: f64,
        raw: Vec<(u32, Option<u32>, f64)>,
    ) -> Self {
        let target = target_for(format);
        let entries: Vec<RatioEntry> = raw
            .into_iter()
            .map(|(index, point, ratio)| {
                let relative_deviation = (ratio - target).abs() / target;
                RatioEntry {
                    index,
                    point,
                    ratio,
                    target,
                    relative_deviation,
                    close: relative_deviation < tolerance,
                }
            })
            .collect();
        let close_count = entries.iter().filter(|e| e.close).count();
        RatioReport {
            format,
            kind,
            target,
            tolerance,
            entries,
            close_count,
        }
    }

    /// Close entries named like `F12`, or `F#24` for unlabelled rows.
    pub fn close_labels(&self) -> Vec<String> {
        self.entries
            .iter()
            .filter(|e| e.close)
            .map(|e| entry_label(self.format, e))
            .collect()
    }

    pub fn max_deviation(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.relative_deviation)
            .fold(0.0, f64::max)
    }
}

pub fn entry_label(format: Format, entry: &RatioEntry) -> String {
    match entry.point {
        Some(p) => format!("{}{p}", format.letter()),
        None => format!("{}#{}", format.letter(), entry.index),
    }
}

fn check_tolerance(tolerance: f64) -> Result<()> {
    if tolerance.is_nan() || tolerance < 0.0 {
        Err(Error::domain(
            "tolerance",
            tolerance,
            "must be non-negative",
        ))
    } else {
        Ok(())
    }
}

fn checked_height(row: &SizeRow, format: Format) -> Result<f64> {
    let h = row.height(format);
    if h.is_finite() && h > 0.0 {
        Ok(h)
    } else {
        Err(Error::Data {
            index: row.index,
            message: format!("{} height must be positive, got {h}", format.letter()),
        })
    }
}

/// Width-to-height ratio of every row against the target of `format`.
pub fn ratio_report(table: &SizeTable, format: Format, tolerance: f64) -> Result<RatioReport> {
    check_tolerance(tolerance)?;
    let raw = table
        .rows()
        .iter()
        .map(|r| Ok((r.index, r.point, r.width_cm / checked_height(r, format)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RatioReport::build(
        format,
        ReportKind::Direct,
        tolerance,
        raw,
    ))
}

/// Which equality of `F(i) = P(i+1) = M(i+2)` failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RuleLeg {
    /// `F(i) = P(i+1)`
    FigurePaysage,
    /// `F(i) = M(i+2)`
    FigureMarine,
}

impl fmt::Display for RuleLeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleLeg::FigurePaysage => "F(i)=P(i+1)",
            RuleLeg::FigureMarine => "F(i)=M(i+2)",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RuleViolation {
    /// `i`, the row whose F height is the reference.
    pub index: u32,
    pub point: Option<u32>,
    pub leg: RuleLeg,
    pub expected_cm: f64,
    pub found_cm: f64,
    pub difference_cm: f64,
}

/// Every leg of the optimal-use rule whose heights differ by more than
/// `tolerance_cm`. Tables shorter than three rows never violate it.
pub fn check_optimal_rule(table: &SizeTable, tolerance_cm: f64) -> Result<Vec<RuleViolation>> {
    check_tolerance(tolerance_cm)?;
    let mut out = Vec::new();
    for w in table.rows().windows(3) {
        let expected = w[0].height_f_cm;
        for (leg, found) in [
            (RuleLeg::FigurePaysage, w[1].height_p_cm),
            (RuleLeg::FigureMarine, w[2].height_m_cm),
        ] {
            let difference = (found - expected).abs();
            if difference > tolerance_cm {
                out.push(RuleViolation {
                    index: w[0].index,
                    point: w[0].point,
                    leg,
                    expected_cm: expected,
                    found_cm: found,
                    difference_cm: difference,
                });
            }
        }
    }
    Ok(out)
}

/// Ratio of the `legacy` width to the `generated` height at each label that
/// both tables carry, in label order.
pub fn mixed_ratio_report(
    legacy: &SizeTable,
    generated: &SizeTable,
    labels: &NewPointLabels,
    format: Format,
    tolerance: f64,
) -> Result<MixedRatioReport> {
    check_tolerance(tolerance)?;
    let mut raw = Vec::new();
    for point in labels.iter() {
        let (Some(old), Some(new)) = (
            lookup_point(legacy, point)?,
            lookup_point(generated, point)?,
        ) else {
            continue;
        };
        raw.push((
            new.index,
            Some(point),
            old.width_cm / checked_height(new, format)?,
        ));
    }
    if raw.is_empty() {
        return Err(Error::Argument("the tables share no point labels".into()));
    }
    Ok(RatioReport::build(
        format,
        ReportKind::Mixed,
        tolerance,
        raw,
    ))
}

/// Ratio points of a report plus its target as a horizontal line.
#[derive(Debug, Clone, PartialEq)]
pub struct DeviationSeries {
    pub data: PlotSeries,
    pub reference: PlotSeries,
}

/// x is the point label (row index when unlabelled), y the ratio.
pub fn deviation_series(report: &RatioReport) -> Result<DeviationSeries> {
    if report.entries.is_empty() {
        return Err(Error::Argument("empty report".into()));
    }
    let kind = match report.kind {
        ReportKind::Direct => "width/height",
        ReportKind::Mixed => "old width/new height",
    };
    let points: Vec<(f64, f64)> = report
        .entries
        .iter()
        .map(|e| (f64::from(e.point.unwrap_or(e.index)), e.ratio))
        .collect();
    let data = PlotSeries::new(format!("{} {kind}", report.format.letter()), points);
    let (x0, x1) = data.x_range().expect("non-empty series");
    let reference = PlotSeries::horizontal(
        format!(
            "{} target {}",
            report.format.letter(),
            target_name(report.format)
        ),
        report.target,
        x0,
        x1,
    );
    Ok(DeviationSeries { data, reference })
}

fn target_name(format: Format) -> &'static str {
    match format {
        Format::Figure => "2/phi",
        Format::Paysage => "sqrt(2)",
        Format::Marine => "phi",
    }
}

/// The new 25-size system from an 18 cm base, labelled with its points.
pub fn new_standard_table() -> SizeTable {
    generate(18.0, 25, Some(new_point_labels().as_slice())).expect("fixed arguments are valid")
}

/// Data sets behind the three ratio and size charts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// Legacy width-to-height ratios against point, with target lines.
    RatiosLegacy,
    /// Heights against widths for both tables, with `y = a·x` lines.
    HeightsVsWidths,
    /// New/new and old/new ratios at the shared points, with target lines.
    RatiosMixed,
}

pub fn figure_series(figure: Figure) -> Result<Vec<PlotSeries>> {
    let legacy = french_table();
    let new = new_standard_table();
    let labels = new_point_labels();
    let mut data = Vec::new();
    let mut lines = Vec::new();
    match figure {
        Figure::RatiosLegacy => {
            for f in Format::ALL {
                let s = deviation_series(&ratio_report(&legacy, f, legacy_tolerance(f))?)?;
                data.push(s.data);
                lines.push(s.reference);
            }
        }
        Figure::HeightsVsWidths => {
            let phi = golden_ratio();
            let slopes = [phi / 2.0, 1.0 / porte_harmonie(), 1.0 / phi];
            let mut x_max: f64 = 0.0;
            for (name, table) in [("new", &new), ("legacy", &legacy)] {
                for f in Format::ALL {
                    let points: Vec<(f64, f64)> = table
                        .rows()
                        .iter()
                        .map(|r| (r.width_cm, r.height(f)))
                        .collect();
                    x_max = points.iter().map(|p| p.0).fold(x_max, f64::max);
                    data.push(PlotSeries::new(
                        format!("{} height vs width ({name})", f.letter()),
                        points,
                    ));
                }
            }
            for (f, a) in Format::ALL.into_iter().zip(slopes) {
                lines.push(PlotSeries::through_origin(
                    format!("{} y = {}x", f.letter(), format_slope(a)),
                    a,
                    0.0,
                    x_max,
                ));
            }
        }
        Figure::RatiosMixed => {
            for f in Format::ALL {
                let s = deviation_series(&mixed_ratio_report(
                    &new,
                    &new,
                    &labels,
                    f,
                    MIXED_TOLERANCE,
                )?)?;
                let mut series = s.data;
                series.label = format!("{} new width/new height", f.letter());
                data.push(series);
                lines.push(s.reference);
            }
            for f in Format::ALL {
                let s = deviation_series(&mixed_ratio_report(
                    &legacy,
                    &new,
                    &labels,
                    f,
                    MIXED_TOLERANCE,
                )?)?;
                data.push(s.data);
            }
        }
    }
    data.extend(lines);
    Ok(data)
}

fn format_slope(a: f64) -> String {
    crate::render::format_significant(a, 6)
}
