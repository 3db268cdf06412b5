//! Irrational constants and the per-format width-to-height targets.

use std::fmt;
use std::ops::{Index, IndexMut};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// φ = (1 + √5) / 2.
pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// Φ = (√5 − 1) / 2 = 1/φ.
pub fn golden_conjugate() -> f64 {
    (5f64.sqrt() - 1.0) / 2.0
}

/// The porte d'harmonie number, √2.
pub fn porte_harmonie() -> f64 {
    2f64.sqrt()
}

/// δ_S = 1 + √2.
pub fn silver_ratio() -> f64 {
    1.0 + 2f64.sqrt()
}

/// Canvas format. The declaration order is the offset order of the
/// optimal-use rule: P is F shifted by one size, M by two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Figure,
    Paysage,
    Marine,
}

impl Format {
    pub const ALL: [Format; 3] = [Format::Figure, Format::Paysage, Format::Marine];

    /// Offset of this format in `F(i) = P(i+1) = M(i+2)`.
    pub fn rule_offset(self) -> u32 {
        match self {
            Format::Figure => 0,
            Format::Paysage => 1,
            Format::Marine => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Format::Figure => 'F',
            Format::Paysage => 'P',
            Format::Marine => 'M',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Format::Figure => "figure",
            Format::Paysage => "paysage",
            Format::Marine => "marine",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "f" | "figure" => Ok(Format::Figure),
            "p" | "paysage" | "landscape" => Ok(Format::Paysage),
            "m" | "marine" => Ok(Format::Marine),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

/// One value per format.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PerFormat<T> {
    pub figure: T,
    pub paysage: T,
    pub marine: T,
}

impl<T> PerFormat<T> {
    pub fn from_fn(mut f: impl FnMut(Format) -> T) -> Self {
        PerFormat {
            figure: f(Format::Figure),
            paysage: f(Format::Paysage),
            marine: f(Format::Marine),
        }
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> PerFormat<U> {
        PerFormat {
            figure: f(&self.figure),
            paysage: f(&self.paysage),
            marine: f(&self.marine),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Format, &T)> {
        Format::ALL.into_iter().map(move |k| (k, &self[k]))
    }
}

impl<T> Index<Format> for PerFormat<T> {
    type Output = T;

    fn index(&self, format: Format) -> &T {
        match format {
            Format::Figure => &self.figure,
            Format::Paysage => &self.paysage,
            Format::Marine => &self.marine,
        }
    }
}

impl<T> IndexMut<Format> for PerFormat<T> {
    fn index_mut(&mut self, format: Format) -> &mut T {
        match format {
            Format::Figure => &mut self.figure,
            Format::Paysage => &mut self.paysage,
            Format::Marine => &mut self.marine,
        }
    }
}

/// Width-to-height targets of the three formats.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioTargets {
    /// 2/φ
    pub figure_ratio: f64,
    /// √2
    pub paysage_ratio: f64,
    /// φ
    pub marine_ratio: f64,
}

impl RatioTargets {
    pub fn new() -> Self {
        let phi = golden_ratio();
        RatioTargets {
            figure_ratio: 2.0 / phi,
            paysage_ratio: porte_harmonie(),
            marine_ratio: phi,
        }
    }

    pub fn get(&self, format: Format) -> f64 {
        match format {
            Format::Figure => self.figure_ratio,
            Format::Paysage => self.paysage_ratio,
            Format::Marine => self.marine_ratio,
        }
    }
}

impl Default for RatioTargets {
    fn default() -> Self {
        Self::new()
    }
}

/// Target width-to-height ratio of `format`.
pub fn target_for(format: Format) -> f64 {
    RatioTargets::new().get(format)
}
