//! Synthetic inputs for the benchmarks.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use relsim_core::{Document, HitMode, JoiningTermTable, PhraseQuery, PositionalIndex, TieBreak, WordPair};

const SYLLABLES: [&str; 12] = ["ka", "lo", "mi", "ter", "san", "dor", "vel", "qu", "is", "ran", "to", "ple"];
const FUNCTION_WORDS: [&str; 12] = ["the", "of", "in", "and", "to", "with", "is", "for", "on", "not", "from", "at"];

/// Roughly `bytes` of Zipf-ish text split into documents of about `doc_words` words.
pub fn corpus(seed: u64, bytes: usize, doc_words: usize) -> Vec<Document> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vocab: Vec<String> = (0..20_000)
        .map(|_| {
            (0..rng.random_range(1..=4))
                .map(|_| *SYLLABLES.choose(&mut rng).unwrap())
                .collect()
        })
        .collect();
    let mut docs = Vec::new();
    let mut written = 0;
    while written < bytes {
        let mut text = String::new();
        for _ in 0..doc_words {
            let w = if rng.random_bool(0.3) {
                FUNCTION_WORDS.choose(&mut rng).unwrap()
            } else {
                let u: f64 = rng.random_range(0.0001..1.0);
                vocab[((1.0 / u) as usize).min(vocab.len()) - 1].as_str()
            };
            text.push_str(w);
            text.push(' ');
        }
        written += text.len();
        docs.push(Document::from_text(docs.len() as u32, &text));
    }
    docs
}

/// A pair of frequent content words from [`corpus`]'s vocabulary.
pub fn frequent_pair(index: &PositionalIndex) -> WordPair {
    let mut terms: Vec<(&str, usize)> = index
        .vocabulary()
        .filter(|t| !FUNCTION_WORDS.contains(t) && t.len() >= 4)
        .map(|t| (t, index.postings(t).map_or(0, |p| p.len())))
        .collect();
    terms.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(b.0)));
    WordPair::new(terms[0].0, terms[1].0).expect("valid pair")
}

/// `n` random unit-ish vectors with `classes` labels, for nearest-neighbour work.
pub fn labelled_vectors(seed: u64, n: usize, dim: usize, classes: usize) -> Vec<(usize, Vec<f64>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let v = (0..dim).map(|_| rng.random_range(0.0..5.0f64)).collect();
            (rng.random_range(0..classes), v)
        })
        .collect()
}
