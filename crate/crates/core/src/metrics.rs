//! Circumference and area of each format.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratio::{Format, PerFormat};
use crate::series::{area_step_ratio, step_ratio, Provenance, SizeRow, SizeTable};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricsRow {
    pub index: u32,
    pub point: Option<u32>,
    pub circumference_cm: PerFormat<f64>,
    pub area_cm2: PerFormat<f64>,
}

/// `2·(W + H)` for the height of `format`.
pub fn circumference(row: &SizeRow, format: Format) -> f64 {
    2.0 * (row.width_cm + row.height(format))
}

/// `W·H` for the height of `format`.
pub fn area(row: &SizeRow, format: Format) -> f64 {
    row.width_cm * row.height(format)
}

pub fn metrics_row(row: &SizeRow) -> MetricsRow {
    MetricsRow {
        index: row.index,
        point: row.point,
        circumference_cm: PerFormat::from_fn(|f| circumference(row, f)),
        area_cm2: PerFormat::from_fn(|f| area(row, f)),
    }
}

/// One [`MetricsRow`] per table row, from the unrounded dimensions.
pub fn metrics_table(table: &SizeTable) -> Vec<MetricsRow> {
    table.rows().iter().map(metrics_row).collect()
}

/// Largest relative error between direct metrics and the scaling laws
/// `C(i) = (φ/√2)^(i−1)·C(1)` and `S(i) = (φ²/2)^(i−1)·S(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalingReport {
    pub circumference: PerFormat<f64>,
    pub area: PerFormat<f64>,
}

impl ScalingReport {
    pub fn max_relative_error(&self) -> f64 {
        self.circumference
            .iter()
            .chain(self.area.iter())
            .map(|(_, e)| *e)
            .fold(0.0, f64::max)
    }
}

pub fn scaled_metric_check(table: &SizeTable) -> Result<ScalingReport> {
    if table.provenance() != Provenance::Generated {
        return Err(Error::Precondition(format!(
            "scaling laws hold only for generated tables, got a {} table",
            table.provenance()
        )));
    }
    let rows = metrics_table(table);
    let first = rows[0];
    let (c_step, s_step) = (step_ratio(), area_step_ratio());
    let mut report = ScalingReport {
        circumference: PerFormat::default(),
        area: PerFormat::default(),
    };
    for (k, m) in rows.iter().enumerate() {
        let k = k as f64;
        for f in Format::ALL {
            let c = first.circumference_cm[f] * c_step.powf(k);
            let s = first.area_cm2[f] * s_step.powf(k);
            let ec = ((m.circumference_cm[f] - c) / c).abs();
            let es = ((m.area_cm2[f] - s) / s).abs();
            report.circumference[f] = report.circumference[f].max(ec);
            report.area[f] = report.area[f].max(es);
        }
    }
    Ok(report)
}

/// Smallest and largest consecutive-row ratio.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Spread {
    pub min: f64,
    pub max: f64,
}

impl Spread {
    pub fn width(&self) -> f64 {
        self.max - self.min
    }
}

/// Range of `C(i+1)/C(i)` and `S(i+1)/S(i)` over a table of any provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StepSpread {
    pub circumference: PerFormat<Spread>,
    pub area: PerFormat<Spread>,
}

/// Consecutive-size ratios of the metrics. Needs at least two rows.
pub fn step_spread(table: &SizeTable) -> Result<StepSpread> {
    if table.len() < 2 {
        return Err(Error::Argument(
            "need at least two rows for step ratios".into(),
        ));
    }
    let rows = metrics_table(table);
    let spread = |value: &dyn Fn(&MetricsRow) -> f64| {
        rows.windows(2).map(|w| value(&w[1]) / value(&w[0])).fold(
            Spread {
                min: f64::INFINITY,
                max: f64::NEG_INFINITY,
            },
            |s, r| Spread {
                min: s.min.min(r),
                max: s.max.max(r),
            },
        )
    };
    Ok(StepSpread {
        circumference: PerFormat::from_fn(|f| spread(&|m| m.circumference_cm[f])),
        area: PerFormat::from_fn(|f| spread(&|m| m.area_cm2[f])),
    })
}
