//! The legacy French canvas standard (points 0 to 120) with its Japanese
//! extension (points 130 to 500), and the point labels of the new system.

use crate::error::{Error, Result};
use crate::series::{Provenance, SizeRow, SizeTable};

/// Point, width, F, P, M in whole centimeters, as printed.
///
/// Point 120 repeats the heights of point 100: there was no larger size to
/// share stretcher bars with.
const FRENCH: [(u32, u32, u32, u32, u32); 25] = [
    (0, 18, 14, 12, 10),
    (1, 22, 16, 14, 12),
    (2, 24, 19, 16, 14),
    (3, 27, 22, 19, 16),
    (4, 33, 24, 22, 19),
    (5, 35, 27, 24, 22),
    (6, 41, 33, 27, 24),
    (8, 46, 38, 33, 27),
    (10, 55, 46, 38, 33),
    (12, 61, 50, 46, 38),
    (15, 65, 54, 50, 46),
    (20, 73, 60, 54, 50),
    (25, 81, 65, 60, 54),
    (30, 92, 73, 65, 60),
    (40, 100, 81, 73, 65),
    (50, 116, 89, 81, 73),
    (60, 130, 97, 89, 81),
    (80, 146, 114, 97, 89),
    (100, 162, 130, 114, 97),
    (120, 195, 130, 114, 97),
    (130, 195, 162, 130, 114),
    (150, 228, 182, 162, 146),
    (200, 260, 195, 182, 162),
    (300, 292, 219, 197, 182),
    (500, 334, 250, 219, 197),
];

/// Points of the new system for rows 1..=23. Rows 24 and 25 carry none;
/// points 20 and 120 have no counterpart among the new widths.
const NEW_POINTS: [u32; 23] = [
    0, 1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 25, 30, 40, 50, 60, 80, 100, 130, 150, 200, 300, 500,
];

/// The 25-row legacy table.
pub fn french_table() -> SizeTable {
    let rows = (1u32..)
        .zip(FRENCH)
        .map(|(index, (point, w, f, p, m))| SizeRow {
            index,
            point: Some(point),
            width_cm: f64::from(w),
            height_f_cm: f64::from(f),
            height_p_cm: f64::from(p),
            height_m_cm: f64::from(m),
        })
        .collect();
    SizeTable::new(f64::from(FRENCH[0].1), rows, Provenance::Legacy)
        .expect("embedded legacy table is well formed")
}

/// Ordered point labels for the first 23 rows of the new system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NewPointLabels(&'static [u32]);

impl NewPointLabels {
    pub fn as_slice(&self) -> &'static [u32] {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, point: u32) -> bool {
        self.0.contains(&point)
    }

    /// Label attached to 1-based row `index`.
    pub fn get(&self, index: usize) -> Option<u32> {
        index.checked_sub(1).and_then(|i| self.0.get(i)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }
}

pub fn new_point_labels() -> NewPointLabels {
    NewPointLabels(&NEW_POINTS)
}

/// The row labelled `point`, if any.
///
/// Fails when more than one row carries the label.
pub fn lookup_point(table: &SizeTable, point: u32) -> Result<Option<&SizeRow>> {
    let mut hits = table.rows().iter().filter(|r| r.point == Some(point));
    let first = hits.next();
    if let Some(dup) = hits.next() {
        return Err(Error::Integrity(format!(
            "point {point} labels rows {} and {}",
            first.map_or(0, |r| r.index),
            dup.index
        )));
    }
    Ok(first)
}
