//! Display rounding, table serialization and plot data.

mod plot;
mod table_io;

use std::fmt;
use std::str::FromStr;

pub use plot::{emit_plot_data, PlotSeries};
pub(crate) use table_io::write_aligned;
pub use table_io::{export_table, import_table, TableFormat};

/// Significant digits written for unrounded values.
pub const FULL_PRECISION_DIGITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RoundingPolicy {
    /// Nearest millimeter, halves away from zero.
    NearestMm,
    /// Smallest millimeter not below the value.
    CeilMm,
    /// No rounding.
    Full,
}

impl RoundingPolicy {
    pub fn as_str(self) -> &'static str {
        match self {
            RoundingPolicy::NearestMm => "nearest-mm",
            RoundingPolicy::CeilMm => "ceil-mm",
            RoundingPolicy::Full => "none",
        }
    }
}

impl fmt::Display for RoundingPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RoundingPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "nearest-mm" => Ok(RoundingPolicy::NearestMm),
            "ceil-mm" => Ok(RoundingPolicy::CeilMm),
            "none" => Ok(RoundingPolicy::Full),
            other => Err(format!("unknown rounding policy `{other}`")),
        }
    }
}

/// Rounds a length in cm to the millimeter grid according to `policy`.
pub fn round_dimension(x: f64, policy: RoundingPolicy) -> f64 {
    let tenths = x * 10.0;
    match policy {
        RoundingPolicy::Full => x,
        // f64::round breaks ties away from zero.
        RoundingPolicy::NearestMm => tenths.round() / 10.0,
        RoundingPolicy::CeilMm => {
            // k/10·10 can land a hair above k; snap before taking the ceiling.
            let nearest = tenths.round();
            if (tenths - nearest).abs() <= 1e-9 * nearest.abs().max(1.0) {
                nearest / 10.0
            } else {
                tenths.ceil() / 10.0
            }
        }
    }
}

/// Positional decimal rendering of `x` with `digits` significant digits,
/// trailing zeros trimmed down to one fractional digit.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:.1}");
    }
    let sci = format!("{:.*e}", digits.saturating_sub(1), x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let (int_part, frac_part) = if exp < 0 {
        let zeros = "0".repeat((-exp - 1) as usize);
        ("0".to_string(), format!("{zeros}{digits}"))
    } else {
        let point = exp as usize + 1;
        if point >= digits.len() {
            (
                format!("{digits}{}", "0".repeat(point - digits.len())),
                String::new(),
            )
        } else {
            (digits[..point].to_string(), digits[point..].to_string())
        }
    };
    let frac = frac_part.trim_end_matches('0');
    let frac = if frac.is_empty() { "0" } else { frac };
    format!("{sign}{int_part}.{frac}")
}

/// Text for one dimension under `policy`.
pub fn render_value(x: f64, policy: RoundingPolicy) -> String {
    match policy {
        RoundingPolicy::Full => format_significant(x, FULL_PRECISION_DIGITS),
        _ => format!("{:.1}", round_dimension(x, policy)),
    }
}

/// The number [`render_value`] writes, read back.
pub(crate) fn quantize(x: f64, policy: RoundingPolicy) -> f64 {
    render_value(x, policy)
        .parse()
        .expect("rendered values parse as f64")
}
