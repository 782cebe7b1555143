//! Nearest-neighbour classification of noun-modifier relations.
//!
//! Labels are dense class indices (see [`crate::taxonomy::Granularity`]).
//! Every item is classified against all the others (leave-one-out); the
//! margin variant looks at the two nearest neighbours and may abstain or
//! return both of their classes.

use rayon::prelude::*;

use crate::metrics::Confusion;
use crate::relation::{cosine, WordPair};
use crate::tiebreak::TieBreak;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledNounModifier {
    pub modifier: String,
    pub head: String,
    /// Class abbreviation.
    pub label: String,
}

impl LabeledNounModifier {
    /// The pair with the modifier first.
    pub fn pair(&self) -> WordPair {
        WordPair::new(&self.modifier, &self.head).expect("validated on construction")
    }
}

/// A training or test item: class index plus relation vector values.
pub type Labeled<'a> = (usize, &'a [f64]);

fn ranked_neighbours(train: &[Labeled<'_>], probe: &[f64], tie_break: TieBreak, ordinal: u64) -> (Vec<usize>, Vec<f64>) {
    let cosines: Vec<f64> = train
        .iter()
        .map(|(_, v)| cosine(v, probe).expect("vectors share a length"))
        .collect();
    (tie_break.rank_desc(&cosines, ordinal), cosines)
}

/// Class of the training item with the largest cosine.
pub fn classify_1nn(train: &[Labeled<'_>], probe: &[f64], tie_break: TieBreak, ordinal: u64) -> usize {
    assert!(!train.is_empty(), "empty training set");
    let (order, _) = ranked_neighbours(train, probe, tie_break, ordinal);
    train[order[0]].0
}

/// Two-neighbour margin rule. Returns zero, one or two class indices.
///
/// A single training item has no second neighbour and is simply returned.
pub fn classify_margin(
    train: &[Labeled<'_>],
    probe: &[f64],
    threshold: f64,
    tie_break: TieBreak,
    ordinal: u64,
) -> Vec<usize> {
    assert!(!train.is_empty(), "empty training set");
    let (order, cosines) = ranked_neighbours(train, probe, tie_break, ordinal);
    if order.len() == 1 {
        return vec![train[order[0]].0];
    }
    let (first, second) = (order[0], order[1]);
    let (c1, c2) = (train[first].0, train[second].0);
    if c1 == c2 {
        return vec![c1];
    }
    let margin = cosines[first] - cosines[second];
    if threshold > margin {
        Vec::new()
    } else if threshold < -margin {
        vec![c1, c2]
    } else {
        vec![c1]
    }
}

/// Outcome of a leave-one-out run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoocvResult {
    /// Per item, the guessed classes.
    pub guesses: Vec<Vec<usize>>,
    pub per_class: Vec<Confusion>,
    /// Items per true class.
    pub support: Vec<u64>,
    /// `confusion[true][guessed]`, one count per guessed class.
    pub confusion: Vec<Vec<u64>>,
    /// Abstentions per true class.
    pub abstentions: Vec<u64>,
}

impl LoocvResult {
    pub fn n_items(&self) -> usize {
        self.guesses.len()
    }

    pub fn guesses_made(&self) -> u64 {
        self.guesses.iter().map(|g| g.len() as u64).sum()
    }

    pub fn abstained(&self) -> u64 {
        self.abstentions.iter().sum()
    }

    pub fn doubles(&self) -> u64 {
        self.guesses.iter().filter(|g| g.len() == 2).count() as u64
    }

    /// Items whose guesses include the true class.
    pub fn correct(&self) -> u64 {
        self.per_class.iter().map(|c| c.tp).sum()
    }

    pub fn class_metrics(&self, labels: &[&str]) -> Vec<ClassMetrics> {
        assert_eq!(labels.len(), self.per_class.len());
        let total = self.n_items() as u64;
        labels
            .iter()
            .zip(&self.per_class)
            .zip(&self.support)
            .map(|((name, c), &size)| ClassMetrics {
                class: name.to_string(),
                size,
                fraction: crate::metrics::ratio(size, total),
                precision: c.precision(),
                recall: c.recall(),
                f: c.f(),
            })
            .collect()
    }
}

/// Leave-one-out cross-validation with the margin rule (threshold 0 is
/// plain nearest neighbour). Fold `i` uses tie ordinal `i`.
pub fn loocv(items: &[Labeled<'_>], n_classes: usize, threshold: f64, tie_break: TieBreak) -> LoocvResult {
    assert!(items.len() >= 2, "leave-one-out needs two items");
    assert!(items.iter().all(|(c, _)| *c < n_classes), "label out of range");

    let guesses: Vec<Vec<usize>> = (0..items.len())
        .into_par_iter()
        .map(|i| {
            let train: Vec<Labeled<'_>> = items
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, item)| *item)
                .collect();
            debug_assert_eq!(train.len(), items.len() - 1);
            classify_margin(&train, items[i].1, threshold, tie_break, i as u64)
        })
        .collect();

    let mut per_class = vec![Confusion::default(); n_classes];
    let mut support = vec![0; n_classes];
    let mut confusion = vec![vec![0; n_classes]; n_classes];
    let mut abstentions = vec![0; n_classes];
    for ((truth, _), guess) in items.iter().zip(&guesses) {
        let truth = *truth;
        support[truth] += 1;
        if guess.is_empty() {
            abstentions[truth] += 1;
        }
        if guess.contains(&truth) {
            per_class[truth].tp += 1;
        } else {
            per_class[truth].fn_ += 1;
        }
        for &g in guess {
            confusion[truth][g] += 1;
            if g != truth {
                per_class[g].fp += 1;
            }
        }
    }
    LoocvResult {
        guesses,
        per_class,
        support,
        confusion,
        abstentions,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassMetrics {
    pub class: String,
    pub size: u64,
    /// `size` over the dataset size.
    pub fraction: f64,
    pub precision: f64,
    pub recall: f64,
    pub f: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MacroAverage {
    pub size: f64,
    pub fraction: f64,
    pub precision: f64,
    pub recall: f64,
    /// Mean of per-class F, not F of the mean precision and recall.
    pub f: f64,
}

/// Unweighted means over classes, zero-support classes included.
pub fn macroaverage(per_class: &[ClassMetrics]) -> MacroAverage {
    let n = per_class.len() as f64;
    let mean = |f: fn(&ClassMetrics) -> f64| {
        if per_class.is_empty() {
            0.0
        } else {
            per_class.iter().map(f).sum::<f64>() / n
        }
    };
    MacroAverage {
        size: mean(|c| c.size as f64),
        fraction: mean(|c| c.fraction),
        precision: mean(|c| c.precision),
        recall: mean(|c| c.recall),
        f: mean(|c| c.f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::f_measure;

    #[test]
    fn identical_probe_takes_its_label() {
        let a = [1.0, 0.0, 0.0];
        let b = [0.0, 1.0, 0.0];
        let train = [(3, &a[..]), (7, &b[..])];
        assert_eq!(classify_1nn(&train, &[0.0, 2.0, 0.0], TieBreak::default(), 0), 7);
    }

    #[test]
    fn orthogonal_probe_is_a_seeded_tie() {
        let a = [1.0, 0.0, 0.0];
        let b = [0.0, 1.0, 0.0];
        let train = [(0, &a[..]), (1, &b[..])];
        let probe = [0.0, 0.0, 1.0];
        let picks: Vec<usize> = (0..40)
            .map(|s| classify_1nn(&train, &probe, TieBreak::Seeded(s), 0))
            .collect();
        assert!(picks.contains(&0) && picks.contains(&1));
        assert_eq!(classify_1nn(&train, &probe, TieBreak::First, 0), 0);
    }

    /// Neighbour cosines 0.9 and 0.85 against probe (1, 0).
    fn two_neighbours(c1: usize, c2: usize) -> Vec<(usize, Vec<f64>)> {
        let v = |c: f64| vec![c, (1.0 - c * c).sqrt()];
        vec![(c1, v(0.9)), (c2, v(0.85)), (9, v(0.1))]
    }

    fn margin_guess(train: &[(usize, Vec<f64>)], t: f64) -> Vec<usize> {
        let refs: Vec<Labeled<'_>> = train.iter().map(|(c, v)| (*c, v.as_slice())).collect();
        classify_margin(&refs, &[1.0, 0.0], t, TieBreak::First, 0)
    }

    #[test]
    fn margin_rule_branches() {
        let train = two_neighbours(0, 1);
        assert_eq!(margin_guess(&train, 0.02), [0]);
        assert_eq!(margin_guess(&train, 0.1), Vec::<usize>::new());
        assert_eq!(margin_guess(&train, -0.1), [0, 1]);
        assert_eq!(margin_guess(&train, 0.0), [0]);
    }

    #[test]
    fn same_class_neighbours_ignore_threshold() {
        let train = two_neighbours(0, 0);
        for t in [-0.5, 0.0, 0.5] {
            assert_eq!(margin_guess(&train, t), [0]);
        }
    }

    #[test]
    fn two_items_misclassify_each_other() {
        let a = [1.0, 0.0];
        let b = [0.0, 1.0];
        let r = loocv(&[(0, &a[..]), (1, &b[..])], 2, 0.0, TieBreak::default());
        assert_eq!(r.guesses, [vec![1], vec![0]]);
        assert_eq!(r.per_class[0], Confusion { tp: 0, fp: 1, fn_: 1 });
        assert_eq!(r.per_class[1].recall(), 0.0);
    }

    #[test]
    fn one_guess_per_item_at_zero_threshold() {
        let vs: Vec<Vec<f64>> = (0..12).map(|i| vec![1.0 + i as f64, (i % 4) as f64, (i % 3) as f64]).collect();
        let items: Vec<Labeled<'_>> = vs.iter().enumerate().map(|(i, v)| (i % 3, v.as_slice())).collect();
        let r = loocv(&items, 3, 0.0, TieBreak::default());
        assert!(r.guesses.iter().all(|g| g.len() == 1));
        let tp_fn: u64 = r.per_class.iter().map(|c| c.tp + c.fn_).sum();
        assert_eq!(tp_fn, 12);
        assert_eq!(r.support, [4, 4, 4]);
    }

    #[test]
    fn macroaverage_is_unweighted_mean() {
        let m = |p: f64, r: f64| ClassMetrics {
            class: String::new(),
            size: 1,
            fraction: 0.5,
            precision: p,
            recall: r,
            f: f_measure(p, r),
        };
        let avg = macroaverage(&[m(0.5, 0.5), m(0.0, 0.0)]);
        assert_eq!(avg.precision, 0.25);
        assert_eq!(avg.f, 0.25);
        let same = macroaverage(&[m(0.3, 0.6), m(0.3, 0.6)]);
        assert!((same.f - f_measure(0.3, 0.6)).abs() < 1e-15);
    }

    #[test]
    fn causality_row_f() {
        assert!((f_measure(0.212, 0.244) * 100.0 - 22.7).abs() < 0.05);
    }
}
