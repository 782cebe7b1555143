mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use relsim_core::index::{build_index, Document, HitMode};
use relsim_core::query::parse_phrase;

fn index_of(corpus: &[Vec<String>]) -> relsim_core::PositionalIndex {
    build_index(corpus.iter().enumerate().map(|(i, t)| Document::new(i as u32, t.clone()))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn counts_match_sliding_window(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let corpus = common::random_corpus(&mut rng);
        let index = index_of(&corpus);
        let max_len = corpus.iter().map(Vec::len).max().unwrap_or(0) as u64;
        for _ in 0..5 {
            let q = common::random_query(&mut rng);
            let parsed = parse_phrase(&q).unwrap();
            let d = index.count_hits(&parsed, HitMode::Document).count;
            let o = index.count_hits(&parsed, HitMode::Occurrence).count;
            prop_assert_eq!((d, o), common::naive_count(&corpus, &q), "{}", q);
            prop_assert!(d <= o);
            prop_assert!(d <= corpus.len() as u64);
            prop_assert!(o <= corpus.len() as u64 * max_len);
        }
    }

    #[test]
    fn postings_match_exhaustive_scan(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let corpus = common::random_corpus(&mut rng);
        let index = index_of(&corpus);
        for term in common::TOY_VOCAB {
            let mut expected = Vec::new();
            for (d, doc) in corpus.iter().enumerate() {
                for (p, t) in doc.iter().enumerate() {
                    if t == term {
                        expected.push((d as u32, p as u32));
                    }
                }
            }
            match index.postings(term) {
                Some(got) => prop_assert_eq!(got, expected),
                None => prop_assert!(expected.is_empty()),
            }
        }
    }

    #[test]
    fn rebuilding_gives_identical_counts(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let corpus = common::random_corpus(&mut rng);
        let (a, b) = (index_of(&corpus), index_of(&corpus));
        prop_assert_eq!(&a, &b);
        for _ in 0..5 {
            let q = parse_phrase(&common::random_query(&mut rng)).unwrap();
            prop_assert_eq!(a.count_hits(&q, HitMode::Document), b.count_hits(&q, HitMode::Document));
        }
    }
}

#[test]
fn shared_token_across_documents() {
    let index = build_index([
        Document::from_text(0, "olive oil is pressed"),
        Document::from_text(1, "crude oil"),
    ])
    .unwrap();
    let docs: Vec<u32> = index.postings("oil").unwrap().iter().map(|p| p.0).collect();
    assert_eq!(docs, [0, 1]);
}

#[test]
fn index_file_round_trip_keeps_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let corpus = common::random_corpus(&mut rng);
    let index = index_of(&corpus);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("idx.bin");
    index.save(&path).unwrap();
    let back = relsim_core::PositionalIndex::load(&path).unwrap();
    assert_eq!(back, index);
    assert_eq!(back.fingerprint(), index.fingerprint());
}
