//! Command-line front end.
//!
//! Exit statuses: 0 on success, 1 when output cannot be written, 2 for
//! invalid usage.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{
    check_optimal_rule, entry_label, figure_series, legacy_tolerance, mixed_ratio_report,
    ratio_report, Figure, RatioReport, RuleViolation, MIXED_TOLERANCE,
};
use crate::error::Error;
use crate::metrics::metrics_table;
use crate::ratio::Format;
use crate::render::{
    emit_plot_data, export_table, format_significant, RoundingPolicy, TableFormat,
};
use crate::series::{generate, SizeTable};
use crate::standards::{french_table, new_point_labels};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Base width that the new-standard point labels were assigned for.
const LABELLED_BASE_WIDTH: f64 = 18.0;

#[derive(Debug, Parser)]
#[command(
    name = "canvas-sizes",
    version,
    about = "Canvas and stretcher sizes in golden and porte d'harmonie ratios"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Size table of the new system.
    Generate,
    /// The legacy French standard with its Japanese extension.
    Legacy,
    /// Circumferences and areas of the new system.
    Metrics,
    /// Ratio deviations and optimal-use rule violations of the legacy table.
    Analyze,
    /// Legacy widths over new heights at the shared points.
    Compare,
    /// Plot data for one of the charts.
    Plot {
        #[arg(value_enum)]
        figure: FigureArg,
    },
}

#[derive(Debug, Args)]
pub struct Options {
    /// Width of the smallest size, in cm.
    #[arg(long, global = true, default_value_t = 18.0, value_parser = positive_f64)]
    pub base_width: f64,

    /// Number of sizes, 1 to 1000.
    #[arg(long, global = true, default_value_t = 25, value_parser = clap::value_parser!(u32).range(1..=1000))]
    pub count: u32,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub output_format: OutputFormat,

    /// Defaults to nearest-mm for table and markdown, none for csv and json.
    #[arg(long, global = true, value_enum)]
    pub rounding: Option<RoundingArg>,

    /// Relative closeness tolerance. Defaults: analyze uses F 0.015,
    /// P 0.02, M 0.02; compare uses 0.03.
    #[arg(long, global = true, value_parser = non_negative_f64)]
    pub tolerance: Option<f64>,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output_path: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Markdown,
    Table,
}

impl From<OutputFormat> for TableFormat {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Csv => TableFormat::Csv,
            OutputFormat::Json => TableFormat::Json,
            OutputFormat::Markdown => TableFormat::Markdown,
            OutputFormat::Table => TableFormat::Text,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RoundingArg {
    NearestMm,
    CeilMm,
    None,
}

impl From<RoundingArg> for RoundingPolicy {
    fn from(r: RoundingArg) -> Self {
        match r {
            RoundingArg::NearestMm => RoundingPolicy::NearestMm,
            RoundingArg::CeilMm => RoundingPolicy::CeilMm,
            RoundingArg::None => RoundingPolicy::Full,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureArg {
    RatiosLegacy,
    HeightsVsWidths,
    RatiosMixed,
}

impl From<FigureArg> for Figure {
    fn from(f: FigureArg) -> Self {
        match f {
            FigureArg::RatiosLegacy => Figure::RatiosLegacy,
            FigureArg::HeightsVsWidths => Figure::HeightsVsWidths,
            FigureArg::RatiosMixed => Figure::RatiosMixed,
        }
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x > 0.0 => Ok(x),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

fn non_negative_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x >= 0.0 => Ok(x),
        _ => Err(format!("`{s}` is not a non-negative number")),
    }
}

impl Options {
    fn table_format(&self) -> TableFormat {
        self.output_format.into()
    }

    fn rounding(&self) -> RoundingPolicy {
        match self.rounding {
            Some(r) => r.into(),
            None if self.table_format().is_machine() => RoundingPolicy::Full,
            None => RoundingPolicy::NearestMm,
        }
    }

    fn new_table(&self) -> Result<SizeTable, Error> {
        let labels = new_point_labels();
        let labels = (self.base_width == LABELLED_BASE_WIDTH)
            .then(|| &labels.as_slice()[..labels.len().min(self.count as usize)]);
        generate(self.base_width, self.count, labels)
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };

    let mut out = Vec::new();
    if let Err(e) = execute(&cli, &mut out) {
        let _ = writeln!(stderr, "error: {e}");
        return match e {
            Error::Io(_) => EXIT_IO,
            _ => EXIT_USAGE,
        };
    }

    let written = match &cli.options.output_path {
        Some(path) => {
            File::create(path).and_then(|mut f| f.write_all(&out).and_then(|_| f.flush()))
        }
        None => stdout.write_all(&out).and_then(|_| stdout.flush()),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_IO
        }
    }
}

fn execute(cli: &Cli, out: &mut Vec<u8>) -> Result<(), Error> {
    let opts = &cli.options;
    match &cli.command {
        Command::Generate => export_table(
            &opts.new_table()?,
            None,
            opts.table_format(),
            opts.rounding(),
            out,
        ),
        Command::Legacy => export_table(
            &french_table(),
            None,
            opts.table_format(),
            opts.rounding(),
            out,
        ),
        Command::Metrics => {
            let table = opts.new_table()?;
            let metrics = metrics_table(&table);
            export_table(
                &table,
                Some(&metrics),
                opts.table_format(),
                opts.rounding(),
                out,
            )
        }
        Command::Analyze => {
            let legacy = french_table();
            let reports = Format::ALL
                .into_iter()
                .map(|f| {
                    ratio_report(
                        &legacy,
                        f,
                        opts.tolerance.unwrap_or_else(|| legacy_tolerance(f)),
                    )
                })
                .collect::<Result<Vec<_>, _>>()?;
            let violations = check_optimal_rule(&legacy, 0.0)?;
            write_reports(&reports, Some(&violations), opts.table_format(), out)
        }
        Command::Compare => {
            let legacy = french_table();
            let new = opts.new_table()?;
            let labels = new_point_labels();
            let tolerance = opts.tolerance.unwrap_or(MIXED_TOLERANCE);
            let reports = Format::ALL
                .into_iter()
                .map(|f| mixed_ratio_report(&legacy, &new, &labels, f, tolerance))
                .collect::<Result<Vec<_>, _>>()?;
            write_reports(&reports, None, opts.table_format(), out)
        }
        Command::Plot { figure } => emit_plot_data(&figure_series((*figure).into())?, out),
    }
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    reports: &'a [RatioReport],
    #[serde(skip_serializing_if = "Option::is_none")]
    rule_violations: Option<&'a [RuleViolation]>,
}

fn write_reports(
    reports: &[RatioReport],
    violations: Option<&[RuleViolation]>,
    format: TableFormat,
    out: &mut Vec<u8>,
) -> Result<(), Error> {
    let full = |x: f64| format_significant(x, 12);
    let point = |p: Option<u32>| p.map(|p| p.to_string()).unwrap_or_default();
    match format {
        TableFormat::Json => {
            let doc = ReportDocument {
                reports,
                rule_violations: violations,
            };
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        TableFormat::Csv => {
            writeln!(out, "format,no,point,ratio,target,relative_deviation,close")?;
            for r in reports {
                for e in &r.entries {
                    writeln!(
                        out,
                        "{},{},{},{},{},{},{}",
                        r.format,
                        e.index,
                        point(e.point),
                        full(e.ratio),
                        full(e.target),
                        full(e.relative_deviation),
                        e.close
                    )?;
                }
            }
            if let Some(violations) = violations {
                writeln!(out)?;
                writeln!(out, "i,point,leg,expected_cm,found_cm,difference_cm")?;
                for v in violations {
                    writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        v.index,
                        point(v.point),
                        v.leg,
                        full(v.expected_cm),
                        full(v.found_cm),
                        full(v.difference_cm)
                    )?;
                }
            }
        }
        TableFormat::Markdown | TableFormat::Text => {
            let markdown = format == TableFormat::Markdown;
            for (k, r) in reports.iter().enumerate() {
                if k > 0 {
                    writeln!(out)?;
                }
                let summary = format!(
                    "{}: target {:.6}, tolerance {}, close {} of {}: {}",
                    r.format,
                    r.target,
                    r.tolerance,
                    r.close_count,
                    r.entries.len(),
                    r.close_labels().join(" ")
                );
                let mut lines = vec![["No", "Point", "Ratio", "Target", "Deviation", "Close"]
                    .map(String::from)
                    .to_vec()];
                for e in &r.entries {
                    lines.push(vec![
                        e.index.to_string(),
                        point(e.point),
                        format!("{:.4}", e.ratio),
                        format!("{:.4}", e.target),
                        format!("{:.4}", e.relative_deviation),
                        if e.close {
                            entry_label(r.format, e)
                        } else {
                            String::new()
                        },
                    ]);
                }
                write_section(out, markdown, &summary, &lines)?;
            }
            if let Some(violations) = violations {
                writeln!(out)?;
                let summary = format!(
                    "optimal-use rule F(i) = P(i+1) = M(i+2): {} violations",
                    violations.len()
                );
                let mut lines = vec![[
                    "i",
                    "Point",
                    "Leg",
                    "Expected (cm)",
                    "Found (cm)",
                    "Difference (cm)",
                ]
                .map(String::from)
                .to_vec()];
                for v in violations {
                    lines.push(vec![
                        v.index.to_string(),
                        point(v.point),
                        v.leg.to_string(),
                        format!("{:.1}", v.expected_cm),
                        format!("{:.1}", v.found_cm),
                        format!("{:.1}", v.difference_cm),
                    ]);
                }
                write_section(out, markdown, &summary, &lines)?;
            }
        }
    }
    Ok(())
}

fn write_section(
    out: &mut Vec<u8>,
    markdown: bool,
    summary: &str,
    lines: &[Vec<String>],
) -> Result<(), Error> {
    if markdown {
        writeln!(out, "### {summary}")?;
        writeln!(out)?;
        writeln!(out, "| {} |", lines[0].join(" | "))?;
        writeln!(out, "|{}|", vec!["---:"; lines[0].len()].join("|"))?;
        for l in &lines[1..] {
            writeln!(out, "| {} |", l.join(" | "))?;
        }
        Ok(())
    } else {
        writeln!(out, "{summary}")?;
        crate::render::write_aligned(lines, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("canvas-sizes").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn help_lists_the_calibrated_defaults() {
        let (code, out, _) = run_str(&["analyze", "--help"]);
        assert_eq!(code, 0);
        for t in [
            crate::analysis::LEGACY_TOLERANCE_FIGURE,
            crate::analysis::LEGACY_TOLERANCE_PAYSAGE,
            crate::analysis::LEGACY_TOLERANCE_MARINE,
            MIXED_TOLERANCE,
        ] {
            assert!(out.contains(&t.to_string()), "{t} missing from help");
        }
    }

    #[test]
    fn rounding_defaults_follow_the_format() {
        let (_, table, _) = run_str(&["generate", "--count", "1"]);
        assert!(table.lines().nth(1).unwrap().ends_with("11.1"));
        let (_, csv, _) = run_str(&["generate", "--count", "1", "--output-format", "csv"]);
        assert_eq!(
            csv.lines().nth(1),
            Some("1,0,18.0,14.5623058987,12.7279220614,11.1246117975")
        );
    }

    #[test]
    fn labels_only_for_the_standard_base() {
        let (_, csv, _) = run_str(&[
            "generate",
            "--base-width",
            "20",
            "--count",
            "2",
            "--output-format",
            "csv",
        ]);
        assert!(csv.lines().nth(1).unwrap().starts_with("1,,20.0,"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["generate", "--count", "0"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["generate", "--base-width", "-3"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["analyze", "--tolerance", "-1"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["plot", "sunflowers"]).0, EXIT_USAGE);
        assert_eq!(run_str(&[]).0, EXIT_USAGE);
        let (code, _, err) = run_str(&["generate", "--count", "1001"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--count"));
    }

    #[test]
    fn unwritable_output_path_is_an_io_failure() {
        let (code, _, err) = run_str(&["legacy", "--output-path", "/nonexistent-dir/x/legacy.csv"]);
        assert_eq!(code, EXIT_IO);
        assert!(err.starts_with("error:"));
    }
}
