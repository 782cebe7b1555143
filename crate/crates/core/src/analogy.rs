//! Multiple-choice analogy solving.
//!
//! The stem pair's relation vector is compared with each choice's by cosine.
//! The margin (best cosine minus second best) is thresholded: a threshold
//! above the margin skips the question, one below the negated margin makes
//! two guesses, anything in between guesses the best choice alone.

use crate::metrics::{f_measure, ratio};
use crate::relation::{cosine, RelationVector, WordPair};
use crate::tiebreak::TieBreak;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalogyQuestion {
    pub stem: WordPair,
    pub choices: Vec<WordPair>,
    /// Index into `choices`.
    pub answer: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuestionError {
    #[error("a question needs at least 2 choices, found {0}")]
    TooFewChoices(usize),
    #[error("answer index {answer} out of range for {choices} choices")]
    AnswerOutOfRange { answer: usize, choices: usize },
}

impl AnalogyQuestion {
    pub fn new(stem: WordPair, choices: Vec<WordPair>, answer: usize) -> Result<Self, QuestionError> {
        if choices.len() < 2 {
            return Err(QuestionError::TooFewChoices(choices.len()));
        }
        if answer >= choices.len() {
            return Err(QuestionError::AnswerOutOfRange {
                answer,
                choices: choices.len(),
            });
        }
        Ok(AnalogyQuestion {
            stem,
            choices,
            answer,
        })
    }

    /// The stem followed by the choices.
    pub fn pairs(&self) -> impl Iterator<Item = &WordPair> {
        std::iter::once(&self.stem).chain(&self.choices)
    }
}

/// Cosine of the stem vector with each choice vector, in choice order.
pub fn score_choices(stem: &RelationVector, choices: &[RelationVector]) -> Vec<f64> {
    choices
        .iter()
        .map(|c| cosine(&stem.values, &c.values).expect("relation vectors share a length"))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct GuessOutcome {
    /// Guessed choice indices by descending cosine; empty when skipped.
    pub guesses: Vec<usize>,
    pub margin: f64,
    pub skipped_zero_stem: bool,
}

impl GuessOutcome {
    pub fn is_skip(&self) -> bool {
        self.guesses.is_empty()
    }
}

/// Applies the margin policy to one question's cosines.
///
/// `ordinal` identifies the question for seeded tie-breaking.
pub fn decide(
    cosines: &[f64],
    threshold: f64,
    stem_is_zero: bool,
    tie_break: TieBreak,
    ordinal: u64,
) -> GuessOutcome {
    assert!(cosines.len() >= 2, "decide needs at least two choices");
    if stem_is_zero {
        return GuessOutcome {
            guesses: Vec::new(),
            margin: 0.0,
            skipped_zero_stem: true,
        };
    }
    let order = tie_break.rank_desc(cosines, ordinal);
    let (best, second) = (order[0], order[1]);
    let margin = cosines[best] - cosines[second];
    let guesses = if threshold > margin {
        Vec::new()
    } else if threshold < -margin {
        vec![best, second]
    } else {
        vec![best]
    };
    GuessOutcome {
        guesses,
        margin,
        skipped_zero_stem: false,
    }
}

/// Precision / recall / F plus the counts behind them.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub total: u64,
    /// Questions whose answer is among the guesses.
    pub correct: u64,
    /// Answered questions whose answer is not among the guesses.
    pub incorrect: u64,
    /// Questions with no guess, including zero-stem skips.
    pub skipped: u64,
    pub zero_stem: u64,
    pub guesses_made: u64,
    /// Questions answered with two guesses.
    pub doubles: u64,
    pub precision: f64,
    pub recall: f64,
    pub f: f64,
}

impl EvalReport {
    /// Report from bare counts; recall is relative to `total`.
    pub fn from_counts(correct: u64, guesses_made: u64, total: u64) -> Self {
        let precision = ratio(correct, guesses_made);
        let recall = ratio(correct, total);
        EvalReport {
            total,
            correct,
            incorrect: 0,
            skipped: 0,
            zero_stem: 0,
            guesses_made,
            doubles: 0,
            precision,
            recall,
            f: f_measure(precision, recall),
        }
    }

    pub fn raw_score(&self) -> f64 {
        raw_sat_score(self.correct, self.incorrect)
    }
}

/// Scores outcomes against answer indices (one per question).
pub fn evaluate(answers: &[usize], outcomes: &[GuessOutcome]) -> EvalReport {
    assert_eq!(answers.len(), outcomes.len(), "one outcome per question");
    let (mut correct, mut incorrect, mut skipped, mut zero_stem, mut guesses, mut doubles) =
        (0, 0, 0, 0, 0, 0);
    for (&answer, outcome) in answers.iter().zip(outcomes) {
        guesses += outcome.guesses.len() as u64;
        if outcome.skipped_zero_stem {
            zero_stem += 1;
        }
        match outcome.guesses.len() {
            0 => skipped += 1,
            2 => doubles += 1,
            _ => {}
        }
        if outcome.guesses.contains(&answer) {
            correct += 1;
        } else if !outcome.guesses.is_empty() {
            incorrect += 1;
        }
    }
    let mut report = EvalReport::from_counts(correct, guesses, answers.len() as u64);
    report.incorrect = incorrect;
    report.skipped = skipped;
    report.zero_stem = zero_stem;
    report.doubles = doubles;
    report
}

/// Correct minus a quarter point per incorrect answer; skips score nothing.
pub fn raw_sat_score(correct: u64, incorrect: u64) -> f64 {
    correct as f64 - incorrect as f64 / 4.0
}

/// A question reduced to what the margin policy needs.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoredQuestion {
    pub cosines: Vec<f64>,
    pub answer: usize,
    pub stem_is_zero: bool,
}

impl ScoredQuestion {
    pub fn new(stem: &RelationVector, choices: &[RelationVector], answer: usize) -> Self {
        ScoredQuestion {
            cosines: score_choices(stem, choices),
            answer,
            stem_is_zero: stem.is_zero(),
        }
    }
}

/// Outcomes for every question at one threshold. Question `i` uses tie
/// ordinal `i`.
pub fn decide_all(questions: &[ScoredQuestion], threshold: f64, tie_break: TieBreak) -> Vec<GuessOutcome> {
    questions
        .iter()
        .enumerate()
        .map(|(i, q)| decide(&q.cosines, threshold, q.stem_is_zero, tie_break, i as u64))
        .collect()
}

/// Evaluates all questions at one threshold.
pub fn solve(questions: &[ScoredQuestion], threshold: f64, tie_break: TieBreak) -> EvalReport {
    let answers: Vec<usize> = questions.iter().map(|q| q.answer).collect();
    evaluate(&answers, &decide_all(questions, threshold, tie_break))
}

/// Pool indices by descending cosine with `stem`; ties go to the lower index.
pub fn rank_pool(stem: &RelationVector, pool: &[RelationVector]) -> Vec<usize> {
    TieBreak::First.rank_desc(&score_choices(stem, pool), 0)
}

/// 1-based rank of `target` in a ranking.
pub fn rank_of(ranking: &[usize], target: usize) -> Option<usize> {
    ranking.iter().position(|&i| i == target).map(|p| p + 1)
}

/// Ranks, for each stem, its own correct pair among the correct pairs of all
/// questions. `stems[i]` and `answers[i]` belong to the same question;
/// callers drop zero-stem questions beforehand.
pub fn pool_ranks(stems: &[RelationVector], answers: &[RelationVector]) -> Vec<usize> {
    assert_eq!(stems.len(), answers.len());
    stems
        .iter()
        .enumerate()
        .map(|(i, stem)| rank_of(&rank_pool(stem, answers), i).expect("pool contains the answer"))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct TopKRow {
    pub rank: usize,
    pub matches: usize,
    pub matches_fraction: f64,
    pub cumulative: usize,
    pub cumulative_fraction: f64,
}

/// Per-rank and cumulative counts of correct pairs ranked `1..=k_max`.
pub fn cumulative_top_k(ranks: &[usize], k_max: usize) -> Vec<TopKRow> {
    let total = ranks.len() as u64;
    let mut cumulative = 0;
    (1..=k_max)
        .map(|k| {
            let matches = ranks.iter().filter(|&&r| r == k).count();
            cumulative += matches;
            TopKRow {
                rank: k,
                matches,
                matches_fraction: ratio(matches as u64, total),
                cumulative,
                cumulative_fraction: ratio(cumulative as u64, total),
            }
        })
        .collect()
}
