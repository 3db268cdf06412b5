#![allow(dead_code)]

pub mod golden;

use std::collections::BTreeSet;

pub fn rel_err(actual: f64, expected: f64) -> f64 {
    ((actual - expected) / expected).abs()
}

/// φ and √2 evaluated independently of the library.
pub fn phi() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// Target width/height per format F, P, M.
pub fn targets() -> [f64; 3] {
    [2.0 / phi(), 2f64.sqrt(), phi()]
}

/// Leg names used by the brute-force rule scan.
pub const LEG_FP: &str = "F(i)=P(i+1)";
pub const LEG_FM: &str = "F(i)=M(i+2)";

/// Scans every `(i, i+1, i+2)` triple of the printed legacy table in integer
/// arithmetic and returns the failing `(i, leg)` pairs.
pub fn brute_force_legacy_violations() -> BTreeSet<(u32, &'static str)> {
    let t = &golden::LEGACY;
    let mut out = BTreeSet::new();
    for i in 0..t.len().saturating_sub(2) {
        let (f, p, m) = (t[i].3, t[i + 1].4, t[i + 2].5);
        if f != p {
            out.insert((t[i].0, LEG_FP));
        }
        if f != m {
            out.insert((t[i].0, LEG_FM));
        }
    }
    out
}

/// Legacy ratio deviations per format computed from the printed integers:
/// `(point, |W/H − t| / t)`.
pub fn legacy_deviations(format: usize) -> Vec<(u32, f64)> {
    let t = targets()[format];
    golden::LEGACY
        .iter()
        .map(|r| {
            let h = [r.3, r.4, r.5][format] as f64;
            (r.1, ((r.2 as f64 / h) - t).abs() / t)
        })
        .collect()
}

/// Old width over new height at each shared point, `(point, deviation)`,
/// using the legacy integers and an independent evaluation of the new
/// widths.
pub fn mixed_deviations(format: usize) -> Vec<(u32, f64)> {
    let step = phi() / 2f64.sqrt();
    let t = targets()[format];
    golden::NEW_FULL
        .iter()
        .filter_map(|&(no, point, ..)| {
            let point = point?;
            let old = golden::LEGACY.iter().find(|r| r.1 == point)?;
            let new_width = 18.0 * step.powi(no as i32 - 1);
            let new_height = new_width / t;
            Some((point, ((old.2 as f64 / new_height) - t).abs() / t))
        })
        .collect()
}

pub const FIG1_NAMED: [&[u32]; 3] = [
    &[3, 6, 12, 25, 40, 100, 150],
    &[3, 8, 30, 50, 100, 150, 200],
    &[5, 12, 50, 60, 80, 200, 300],
];
