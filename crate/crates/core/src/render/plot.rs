use std::io::Write;

use super::{format_significant, FULL_PRECISION_DIGITS};
use crate::error::{Error, Result};

/// A labelled polyline of `(x, y)` points.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotSeries {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

impl PlotSeries {
    pub fn new(label: impl Into<String>, points: Vec<(f64, f64)>) -> Self {
        PlotSeries {
            label: label.into(),
            points,
        }
    }

    /// Two-point horizontal line `y = level` spanning `x0..=x1`.
    pub fn horizontal(label: impl Into<String>, level: f64, x0: f64, x1: f64) -> Self {
        Self::new(label, vec![(x0, level), (x1, level)])
    }

    /// Two-point line `y = slope·x` spanning `x0..=x1`.
    pub fn through_origin(label: impl Into<String>, slope: f64, x0: f64, x1: f64) -> Self {
        Self::new(label, vec![(x0, slope * x0), (x1, slope * x1)])
    }

    pub fn x_range(&self) -> Option<(f64, f64)> {
        let mut xs = self.points.iter().map(|p| p.0);
        let first = xs.next()?;
        Some(xs.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }
}

/// Writes gnuplot-style data: for each series a `# label` comment, one
/// `x y` line per point, and a blank line between series.
pub fn emit_plot_data<W: Write>(series: &[PlotSeries], mut sink: W) -> Result<()> {
    if series.is_empty() || series.iter().any(|s| s.points.is_empty()) {
        return Err(Error::Argument("nothing to plot".into()));
    }
    for (k, s) in series.iter().enumerate() {
        if k > 0 {
            writeln!(sink)?;
        }
        writeln!(sink, "# {}", s.label)?;
        for (x, y) in &s.points {
            writeln!(
                sink,
                "{} {}",
                format_significant(*x, FULL_PRECISION_DIGITS),
                format_significant(*y, FULL_PRECISION_DIGITS)
            )?;
        }
    }
    sink.flush()?;
    Ok(())
}
