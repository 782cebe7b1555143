//! Tie-breaking among exactly equal scores.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// How exact score ties are resolved.
///
/// `Seeded` draws a uniform order among tied items from a generator seeded
/// with `seed ^ ordinal`, where the ordinal identifies the question or fold,
/// so a run is reproducible and independent of evaluation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    Seeded(u64),
    /// Lowest index wins.
    First,
}

impl Default for TieBreak {
    fn default() -> Self {
        TieBreak::Seeded(0)
    }
}

impl TieBreak {
    fn rng(&self, ordinal: u64) -> Option<ChaCha8Rng> {
        match *self {
            TieBreak::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed ^ ordinal)),
            TieBreak::First => None,
        }
    }

    /// Indices of `scores` from highest to lowest score.
    pub fn rank_desc(&self, scores: &[f64], ordinal: u64) -> Vec<usize> {
        let mut order: Vec<usize> = (0..scores.len()).collect();
        if let Some(mut rng) = self.rng(ordinal) {
            order.shuffle(&mut rng);
        }
        // Stable: tied items keep the (possibly shuffled) order.
        order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]));
        order
    }
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TieBreak::Seeded(seed) => write!(f, "seeded({seed})"),
            TieBreak::First => f.write_str("first"),
        }
    }
}

/// Parses the `--tie-break` flag value; `random` needs a seed from elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreakKind {
    #[default]
    Random,
    First,
}

impl TieBreakKind {
    pub fn with_seed(self, seed: u64) -> TieBreak {
        match self {
            TieBreakKind::Random => TieBreak::Seeded(seed),
            TieBreakKind::First => TieBreak::First,
        }
    }
}

impl FromStr for TieBreakKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "random" => Ok(TieBreakKind::Random),
            "first" => Ok(TieBreakKind::First),
            other => Err(format!("unknown tie-break {other:?} (expected random|first)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn untied_scores_ignore_seed() {
        let scores = [0.1, 0.9, 0.5, 0.7];
        for seed in 0..20 {
            assert_eq!(TieBreak::Seeded(seed).rank_desc(&scores, 3), [1, 3, 2, 0]);
        }
        assert_eq!(TieBreak::First.rank_desc(&scores, 0), [1, 3, 2, 0]);
    }

    #[test]
    fn first_mode_prefers_lower_index() {
        assert_eq!(TieBreak::First.rank_desc(&[0.5, 0.5, 0.2], 0), [0, 1, 2]);
    }

    #[test]
    fn seeded_ties_vary_and_repeat() {
        let scores = [0.5, 0.5];
        let winners: Vec<usize> = (0..64)
            .map(|s| TieBreak::Seeded(s).rank_desc(&scores, 0)[0])
            .collect();
        assert!(winners.contains(&0) && winners.contains(&1));
        for s in 0..64 {
            assert_eq!(TieBreak::Seeded(s).rank_desc(&scores, 0)[0], winners[s as usize]);
        }
    }
}
