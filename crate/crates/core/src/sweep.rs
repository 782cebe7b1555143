//! Threshold sweeps over the margin.

use std::fmt;
use std::str::FromStr;

use crate::analogy::{solve, ScoredQuestion};
use crate::nounmod::{loocv, macroaverage, Labeled};
use crate::tiebreak::TieBreak;

/// Inclusive grid `lo, lo + step, ..., hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepGrid {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl SweepGrid {
    /// The analogy default, -0.11..=0.11 by 0.01.
    pub const ANALOGY: SweepGrid = SweepGrid { lo: -0.11, hi: 0.11, step: 0.01 };
    /// The noun-modifier default, -0.03..=0.03 by 0.01.
    pub const NOUN_MODIFIER: SweepGrid = SweepGrid { lo: -0.03, hi: 0.03, step: 0.01 };

    pub fn new(lo: f64, hi: f64, step: f64) -> Result<Self, String> {
        if step.is_nan() || step <= 0.0 || !lo.is_finite() || !hi.is_finite() || hi < lo {
            return Err(format!("invalid sweep {lo}:{hi}:{step}"));
        }
        Ok(SweepGrid { lo, hi, step })
    }

    /// Grid points, rounded to 12 decimals to keep `lo + i * step` tidy.
    pub fn thresholds(&self) -> Vec<f64> {
        let n = ((self.hi - self.lo) / self.step + 1e-9).floor() as usize;
        (0..=n)
            .map(|i| {
                let t = self.lo + i as f64 * self.step;
                let t = (t * 1e12).round() / 1e12;
                if t == 0.0 { 0.0 } else { t }
            })
            .collect()
    }
}

impl fmt::Display for SweepGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.step)
    }
}

impl FromStr for SweepGrid {
    type Err = String;

    /// `lo:hi:step`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, step] = parts[..] else {
            return Err(format!("sweep {s:?} is not lo:hi:step"));
        };
        let num = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("sweep {s:?}: {e}"));
        SweepGrid::new(num(lo)?, num(hi)?, num(step)?)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub threshold: f64,
    pub precision: f64,
    pub recall: f64,
    pub f: f64,
    pub guesses: u64,
    pub skipped: u64,
    pub doubles: u64,
}

pub fn sat_sweep(questions: &[ScoredQuestion], grid: &SweepGrid, tie_break: TieBreak) -> Vec<SweepRow> {
    grid.thresholds()
        .into_iter()
        .map(|t| {
            let r = solve(questions, t, tie_break);
            SweepRow {
                threshold: t,
                precision: r.precision,
                recall: r.recall,
                f: r.f,
                guesses: r.guesses_made,
                skipped: r.skipped,
                doubles: r.doubles,
            }
        })
        .collect()
}

/// Macroaveraged precision / recall / F across `n_classes` at each threshold.
pub fn nounmod_sweep(
    items: &[Labeled<'_>],
    labels: &[&str],
    grid: &SweepGrid,
    tie_break: TieBreak,
) -> Vec<SweepRow> {
    grid.thresholds()
        .into_iter()
        .map(|t| {
            let run = loocv(items, labels.len(), t, tie_break);
            let avg = macroaverage(&run.class_metrics(labels));
            SweepRow {
                threshold: t,
                precision: avg.precision,
                recall: avg.recall,
                f: avg.f,
                guesses: run.guesses_made(),
                skipped: run.abstained(),
                doubles: run.doubles(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grids() {
        let sat = SweepGrid::ANALOGY.thresholds();
        assert_eq!(sat.len(), 23);
        assert_eq!(sat[0], -0.11);
        assert_eq!(sat[11], 0.0);
        assert_eq!(sat[22], 0.11);
        let nm = SweepGrid::NOUN_MODIFIER.thresholds();
        assert_eq!(nm, [-0.03, -0.02, -0.01, 0.0, 0.01, 0.02, 0.03]);
    }

    #[test]
    fn parse_grid() {
        let g: SweepGrid = "-0.03:0.03:0.01".parse().unwrap();
        assert_eq!(g.thresholds().len(), 7);
        assert!("1:0:0.1".parse::<SweepGrid>().is_err());
        assert!("0:1:0".parse::<SweepGrid>().is_err());
        assert!("0:1".parse::<SweepGrid>().is_err());
    }

    #[test]
    fn sat_sweep_rows_are_nested() {
        let qs = vec![
            ScoredQuestion { cosines: vec![0.3, 0.35, 0.1], answer: 0, stem_is_zero: false },
            ScoredQuestion { cosines: vec![0.9, 0.2, 0.1], answer: 0, stem_is_zero: false },
            ScoredQuestion { cosines: vec![0.0, 0.0, 0.0], answer: 2, stem_is_zero: true },
        ];
        let rows = sat_sweep(&qs, &SweepGrid::ANALOGY, TieBreak::First);
        assert_eq!(rows[0].guesses, 3);
        assert_eq!(rows[0].doubles, 1);
        assert_eq!(rows[11].guesses, 2);
        assert_eq!(rows[22].skipped, 2);
        for w in rows.windows(2) {
            assert!(w[1].recall <= w[0].recall);
            assert!(w[1].guesses <= w[0].guesses);
            assert!(w[1].skipped >= w[0].skipped);
        }
    }
}
