//! Plain-text reports and sweep CSV.

use std::fmt::Write;

use crate::analogy::{EvalReport, TopKRow};
use crate::nounmod::{ClassMetrics, MacroAverage};
use crate::sweep::SweepRow;

pub const SWEEP_CSV_HEADER: &str = "threshold,precision,recall,f,guesses,skipped,doubles";

fn pct(x: f64) -> String {
    format!("{:.1}%", x * 100.0)
}

/// Sweep rows as CSV with full-precision floats.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = format!("{SWEEP_CSV_HEADER}\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.threshold, r.precision, r.recall, r.f, r.guesses, r.skipped, r.doubles
        )
        .unwrap();
    }
    out
}

pub fn format_eval_report(r: &EvalReport, threshold: f64) -> String {
    let share = |n: u64| pct(crate::metrics::ratio(n, r.total));
    let mut out = String::new();
    writeln!(out, "threshold  {threshold}").unwrap();
    writeln!(out, "{:<10} {:>9} {:>8}", "", "Number", "Percent").unwrap();
    writeln!(out, "{:<10} {:>9} {:>8}", "Correct", r.correct, share(r.correct)).unwrap();
    writeln!(out, "{:<10} {:>9} {:>8}", "Incorrect", r.incorrect, share(r.incorrect)).unwrap();
    writeln!(out, "{:<10} {:>9} {:>8}", "Skipped", r.skipped, share(r.skipped)).unwrap();
    writeln!(out, "{:<10} {:>9} {:>8}", "Total", r.total, share(r.total)).unwrap();
    writeln!(
        out,
        "{:<10} {:>9} {:>8}",
        "Precision",
        format!("{} / {}", r.correct, r.guesses_made),
        pct(r.precision)
    )
    .unwrap();
    writeln!(
        out,
        "{:<10} {:>9} {:>8}",
        "Recall",
        format!("{} / {}", r.correct, r.total),
        pct(r.recall)
    )
    .unwrap();
    writeln!(out, "{:<10} {:>9} {:>8}", "F", "", pct(r.f)).unwrap();
    writeln!(out, "zero-stem skips  {}", r.zero_stem).unwrap();
    writeln!(out, "double guesses   {}", r.doubles).unwrap();
    writeln!(out, "raw score        {}", r.raw_score()).unwrap();
    out
}

pub fn format_top_k(rows: &[TopKRow]) -> String {
    let mut out = format!(
        "{:>6} {:>9} {:>9} {:>12} {:>12}\n",
        "Rank", "Matches", "Matches%", "Cumulative", "Cumulative%"
    );
    for r in rows {
        writeln!(
            out,
            "{:>6} {:>9} {:>9} {:>12} {:>12}",
            r.rank,
            r.matches,
            pct(r.matches_fraction),
            r.cumulative,
            pct(r.cumulative_fraction)
        )
        .unwrap();
    }
    out
}

pub fn format_class_table(metrics: &[ClassMetrics], average: &MacroAverage) -> String {
    let mut out = format!(
        "{:<12} {:>6} {:>8} {:>10} {:>8} {:>8}\n",
        "Class", "Size", "Percent", "Precision", "Recall", "F"
    );
    for m in metrics {
        writeln!(
            out,
            "{:<12} {:>6} {:>8} {:>10} {:>8} {:>8}",
            m.class,
            m.size,
            pct(m.fraction),
            pct(m.precision),
            pct(m.recall),
            pct(m.f)
        )
        .unwrap();
    }
    writeln!(
        out,
        "{:<12} {:>6} {:>8} {:>10} {:>8} {:>8}",
        "Average",
        format!("{:.1}", average.size),
        pct(average.fraction),
        pct(average.precision),
        pct(average.recall),
        pct(average.f)
    )
    .unwrap();
    out
}
