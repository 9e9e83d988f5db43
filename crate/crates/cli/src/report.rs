//! Output formatting: TSV for diff-friendly pipelines and a structured JSON
//! variant carrying the same fields.
//!
//! Every row identifies its class by both the rank ID and the canonical
//! code, so results stay comparable if class ordering ever changes. Output
//! is byte-deterministic for fixed input and configuration; wall-clock
//! timing goes to stderr only.

use motifcensus_core::canon::ClassTable;
use motifcensus_core::hist::MotifHistogram;
use motifcensus_core::nullmodel::EnsembleStats;
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Tsv,
    Structured,
}

#[derive(Debug, Serialize)]
pub struct HistRow {
    pub class: u16,
    /// Canonical adjacency code, hex.
    pub code: String,
    /// Adjacency matrix rows joined by ';', e.g. "010;001;100".
    pub matrix: String,
    pub count: u64,
}

#[derive(Debug, Serialize)]
pub struct CountReport {
    pub k: u8,
    pub directed: bool,
    pub n: u32,
    pub m: u64,
    pub total: u64,
    pub rows: Vec<HistRow>,
}

fn matrix_string(classes: &ClassTable, class: u16) -> String {
    classes.code(class).matrix_rows().join(";")
}

/// Nonzero histogram rows sorted by count descending, then class ID.
pub fn hist_rows(hist: &MotifHistogram, classes: &ClassTable) -> Vec<HistRow> {
    let mut rows: Vec<HistRow> = hist
        .iter_nonzero()
        .map(|(class, count)| HistRow {
            class,
            code: format!("{:x}", classes.code_bits(class)),
            matrix: matrix_string(classes, class),
            count,
        })
        .collect();
    rows.sort_by(|a, b| b.count.cmp(&a.count).then(a.class.cmp(&b.class)));
    rows
}

pub fn render_count(report: &CountReport, format: Format) -> String {
    match format {
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "# k={}\tmode={}\tn={}\tm={}\ttotal={}",
                report.k,
                if report.directed { "directed" } else { "undirected" },
                report.n,
                report.m,
                report.total
            );
            let _ = writeln!(out, "class\tcode\tmatrix\tcount");
            for r in &report.rows {
                let _ = writeln!(out, "{}\t{}\t{}\t{}", r.class, r.code, r.matrix, r.count);
            }
            out
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassRow {
    pub class: u16,
    pub code: String,
    pub k: u8,
    pub divisor: u32,
    pub matrix: String,
}

pub fn render_classes(classes: &ClassTable, format: Format) -> String {
    let rows: Vec<ClassRow> = (0..classes.len() as u16)
        .map(|class| ClassRow {
            class,
            code: format!("{:x}", classes.code_bits(class)),
            k: classes.k,
            divisor: classes.divisor(class),
            matrix: matrix_string(classes, class),
        })
        .collect();
    match format {
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut out = String::new();
            let _ = writeln!(out, "class\tcode\tk\tdivisor\tmatrix");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    r.class, r.code, r.k, r.divisor, r.matrix
                );
            }
            out
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SignificanceRow {
    pub class: u16,
    pub code: String,
    pub matrix: String,
    pub count: u64,
    pub mean: f64,
    pub stddev: f64,
    /// Formatted z; "inf"/"-inf" when the ensemble stddev is zero but the
    /// real count differs from the mean.
    pub z: String,
    pub p: f64,
}

#[derive(Debug, Serialize)]
pub struct SignificanceReport {
    pub k: u8,
    pub directed: bool,
    pub n: u32,
    pub m: u64,
    pub seed: u64,
    pub ensemble: u32,
    pub rows: Vec<SignificanceRow>,
}

pub fn significance_rows(stats: &EnsembleStats, classes: &ClassTable) -> Vec<SignificanceRow> {
    stats
        .rows
        .iter()
        .map(|r| SignificanceRow {
            class: r.class,
            code: format!("{:x}", classes.code_bits(r.class)),
            matrix: matrix_string(classes, r.class),
            count: r.real,
            mean: r.mean,
            stddev: r.stddev,
            z: if r.z_infinite {
                if r.z > 0.0 { "inf".to_string() } else { "-inf".to_string() }
            } else {
                format!("{:.4}", r.z)
            },
            p: r.p,
        })
        .collect()
}

pub fn render_significance(report: &SignificanceReport, format: Format) -> String {
    match format {
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "# k={}\tmode={}\tn={}\tm={}\tseed={}\tensemble={}",
                report.k,
                if report.directed { "directed" } else { "undirected" },
                report.n,
                report.m,
                report.seed,
                report.ensemble
            );
            let _ = writeln!(out, "class\tcode\tmatrix\tcount\tmean\tstddev\tz\tp");
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{:.4}\t{:.4}\t{}\t{:.4}",
                    r.class, r.code, r.matrix, r.count, r.mean, r.stddev, r.z, r.p
                );
            }
            out
        }
    }
}
