//! Canvas and stretcher size systems whose width-to-height ratios are exactly
//! 2/φ (figure), √2 (paysage) and φ (marine), and whose heights obey the
//! optimal-use-of-material rule `F(i) = P(i+1) = M(i+2)`.
//!
//! The crate also embeds the legacy French standard (with its Japanese
//! extension) and measures how far it strays from those ratios.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod metrics;
pub mod ratio;
pub mod render;
pub mod series;
pub mod standards;

pub use error::{Error, Result};
pub use ratio::{Format, PerFormat, RatioTargets};
pub use series::{Provenance, SizeRow, SizeTable};
