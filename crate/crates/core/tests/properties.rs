mod common;

use proptest::prelude::*;

use canvas_core::analysis::{check_optimal_rule, ratio_report};
use canvas_core::ratio::{target_for, Format};
use canvas_core::render::{
    export_table, import_table, round_dimension, RoundingPolicy, TableFormat,
};
use canvas_core::series::{generate, step_ratio, width_closed_form, width_recurrence};
use canvas_core::standards::french_table;

use common::rel_err;

fn format() -> impl Strategy<Value = Format> {
    prop::sample::select(Format::ALL.to_vec())
}

fn machine_format() -> impl Strategy<Value = TableFormat> {
    prop::sample::select(vec![TableFormat::Csv, TableFormat::Json])
}

fn policy() -> impl Strategy<Value = RoundingPolicy> {
    prop::sample::select(vec![
        RoundingPolicy::NearestMm,
        RoundingPolicy::CeilMm,
        RoundingPolicy::Full,
    ])
}

proptest! {
    #[test]
    fn closed_form_matches_recurrence(w in 0.1f64..1000.0, n in 1u32..120) {
        let rec = width_recurrence(n, w).unwrap();
        prop_assert_eq!(rec.len(), n as usize);
        for (i, r) in (1..).zip(&rec) {
            prop_assert!(rel_err(*r, width_closed_form(i, w).unwrap()) <= 1e-12);
        }
    }

    #[test]
    fn generation_is_scale_equivariant(w in 0.1f64..500.0, c in 0.01f64..100.0, n in 1u32..60) {
        let a = generate(w, n, None).unwrap();
        let b = generate(c * w, n, None).unwrap();
        for (x, y) in a.rows().iter().zip(b.rows()) {
            prop_assert!(rel_err(y.width_cm, c * x.width_cm) <= 1e-12);
            for f in Format::ALL {
                prop_assert!(rel_err(y.height(f), c * x.height(f)) <= 1e-12);
            }
        }
    }

    #[test]
    fn generated_ratios_are_constant(w in 0.1f64..500.0, n in 2u32..60) {
        let t = generate(w, n, None).unwrap();
        for row in t.rows() {
            for f in Format::ALL {
                prop_assert!(rel_err(row.ratio(f), target_for(f)) <= 1e-12);
            }
        }
        for pair in t.rows().windows(2) {
            prop_assert!(rel_err(pair[1].width_cm / pair[0].width_cm, step_ratio()) <= 1e-12);
        }
    }

    #[test]
    fn generated_tables_satisfy_the_rule(w in 0.1f64..500.0, n in 3u32..60) {
        let t = generate(w, n, None).unwrap();
        for v in check_optimal_rule(&t, 0.0).unwrap() {
            prop_assert!(v.difference_cm / v.expected_cm <= 1e-12, "{:?}", v);
        }
    }

    #[test]
    fn rule_check_commutes_with_scaling(c in 0.1f64..10.0, tol in 0.0f64..20.0) {
        let legacy = french_table();
        // Legacy differences are whole centimetres; stay off those boundaries.
        prop_assume!((tol - tol.round()).abs() > 1e-6);
        let scaled = legacy.scaled(c).unwrap();
        let a: Vec<_> = check_optimal_rule(&legacy, tol).unwrap().into_iter().map(|v| (v.index, v.leg)).collect();
        let b: Vec<_> = check_optimal_rule(&scaled, tol * c).unwrap().into_iter().map(|v| (v.index, v.leg)).collect();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn close_count_is_monotone(f in format(), t1 in 0.0f64..0.5, dt in 0.0f64..0.5) {
        let legacy = french_table();
        let a = ratio_report(&legacy, f, t1).unwrap().close_count;
        let b = ratio_report(&legacy, f, t1 + dt).unwrap().close_count;
        prop_assert!(a <= b);
    }

    #[test]
    fn rounding_is_idempotent(x in 0.0f64..10000.0, p in policy()) {
        let once = round_dimension(x, p);
        prop_assert_eq!(round_dimension(once, p), once);
    }

    #[test]
    fn nearest_mm_stays_within_half_a_millimetre(x in 0.0f64..10000.0) {
        prop_assert!((round_dimension(x, RoundingPolicy::NearestMm) - x).abs() <= 0.05 + 1e-9);
    }

    #[test]
    fn export_round_trips(w in 0.5f64..200.0, n in 1u32..40, fmt in machine_format(), p in policy()) {
        let t = generate(w, n, None).unwrap();
        let mut first = Vec::new();
        export_table(&t, None, fmt, p, &mut first).unwrap();
        let back = import_table(&first, fmt).unwrap();
        let mut second = Vec::new();
        export_table(&back, None, fmt, p, &mut second).unwrap();
        prop_assert_eq!(first, second);
    }
}
