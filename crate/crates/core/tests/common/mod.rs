#![allow(clippy::type_complexity)]
//! Test-only oracles. Nothing here calls into the matching, stemming,
//! counting or classification code under test.

#![allow(dead_code)]

use rand::seq::IndexedRandom;
use rand::Rng;

/// Does `token` equal `prefix` + (0..=5 chars) + `suffix`? Checked by
/// trying every gap length explicitly.
pub fn naive_wildcard(prefix: &str, suffix: &str, token: &str) -> bool {
    let t: Vec<char> = token.chars().collect();
    let p: Vec<char> = prefix.chars().collect();
    let s: Vec<char> = suffix.chars().collect();
    (0..=5).any(|gap| {
        t.len() == p.len() + gap + s.len()
            && t[..p.len()] == p[..]
            && t[p.len() + gap..] == s[..]
    })
}

fn naive_unit(unit: &str, token: &str) -> bool {
    if unit == "*" {
        return true;
    }
    match unit.find('*') {
        Some(i) => naive_wildcard(&unit[..i], &unit[i + 1..], token),
        None => unit == token,
    }
}

/// Sliding-window scan of every document. Returns (documents with a match,
/// total matching start positions).
pub fn naive_count(docs: &[Vec<String>], query: &str) -> (u64, u64) {
    let units: Vec<&str> = query.split_whitespace().collect();
    let mut doc_hits = 0;
    let mut occurrences = 0;
    for doc in docs {
        let mut here = 0;
        if doc.len() >= units.len() {
            for start in 0..=doc.len() - units.len() {
                if units.iter().enumerate().all(|(k, u)| naive_unit(u, &doc[start + k])) {
                    here += 1;
                }
            }
        }
        occurrences += here;
        if here > 0 {
            doc_hits += 1;
        }
    }
    (doc_hits, occurrences)
}

/// Length-band truncation for plain lowercase ASCII words.
pub fn naive_stem(word: &str) -> String {
    let n = word.len();
    if n > 10 {
        format!("{}*", &word[..n - 4])
    } else if n > 8 {
        format!("{}*", &word[..n - 3])
    } else if n > 2 {
        format!("{word}*")
    } else {
        word.to_string()
    }
}

pub const TERMS: [&str; 64] = [
    " ", " * not ", " * very ", " after ", " and not ", " are ", " at ", " at the ",
    " become* ", " but not ", " contain* ", " for ", " for example ", " for the ", " from ",
    " from the ", " get* ", " give* ", " go ", " goes ", " has ", " have ", " in ", " in the ",
    " instead of ", " into ", " is ", " is * ", " is the ", " lack* ", " like ", " like * ",
    " like the ", " make* ", " need* ", " not ", " not the ", " of ", " of the ", " on ",
    " onto ", " or ", " rather than ", " such as ", " than ", " that ", " the ", " their ",
    " then ", " this ", " to ", " to the ", " turn* ", " use* ", " when ", " which ", " will ",
    " with ", " with the ", " within ", " without ", " yet ", "s ", "s * ",
];

/// 128 queries for a single-word pair, each joined phrase re-spaced.
pub fn naive_queries(x: &str, y: &str) -> Vec<String> {
    let (sx, sy) = (naive_stem(x), naive_stem(y));
    let respace = |s: String| s.split_whitespace().collect::<Vec<_>>().join(" ");
    let mut out = Vec::new();
    for t in TERMS {
        let term = t.trim();
        out.push(respace(format!("{sx} {term} {sy}")));
        out.push(respace(format!("{sy} {term} {sx}")));
    }
    out
}

pub fn naive_cosine(a: &[f64], b: &[f64]) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na: f64 = a.iter().map(|x| x * x).sum();
    let nb: f64 = b.iter().map(|x| x * x).sum();
    if na == 0.0 || nb == 0.0 {
        0.0
    } else {
        (dot / (na.sqrt() * nb.sqrt())).clamp(-1.0, 1.0)
    }
}

/// Exhaustive leave-one-out with lowest-index tie-breaking. Returns
/// `(tp, fp, fn)` per class and `confusion[true][guessed]`.
pub fn brute_loocv(
    labels: &[usize],
    vectors: &[Vec<f64>],
    n_classes: usize,
    threshold: f64,
) -> (Vec<(u64, u64, u64)>, Vec<Vec<u64>>) {
    let n = labels.len();
    let mut counts = vec![(0u64, 0u64, 0u64); n_classes];
    let mut confusion = vec![vec![0u64; n_classes]; n_classes];
    for i in 0..n {
        // best and second best by strict improvement in ascending index
        let mut best: Option<(usize, f64)> = None;
        let mut second: Option<(usize, f64)> = None;
        for j in 0..n {
            if j == i {
                continue;
            }
            let c = naive_cosine(&vectors[i], &vectors[j]);
            match best {
                None => best = Some((j, c)),
                Some((_, bc)) if c > bc => {
                    second = best;
                    best = Some((j, c));
                }
                _ => match second {
                    None => second = Some((j, c)),
                    Some((_, sc)) if c > sc => second = Some((j, c)),
                    _ => {}
                },
            }
        }
        let (b, bc) = best.unwrap();
        let guesses: Vec<usize> = match second {
            None => vec![labels[b]],
            Some((s, _)) if labels[s] == labels[b] => vec![labels[b]],
            Some((s, sc)) => {
                let m = bc - sc;
                if threshold > m {
                    vec![]
                } else if threshold < -m {
                    vec![labels[b], labels[s]]
                } else {
                    vec![labels[b]]
                }
            }
        };
        let truth = labels[i];
        if guesses.contains(&truth) {
            counts[truth].0 += 1;
        } else {
            counts[truth].2 += 1;
        }
        for &g in &guesses {
            confusion[truth][g] += 1;
            if g != truth {
                counts[g].1 += 1;
            }
        }
    }
    (counts, confusion)
}

pub const TOY_VOCAB: [&str; 18] = [
    "the", "cat", "cats", "catalog", "sat", "on", "mat", "colour", "color", "colorant",
    "restrained", "restraint", "restrainabilities", "limit", "limited", "s", "a", "very",
];

pub fn random_corpus(rng: &mut impl Rng) -> Vec<Vec<String>> {
    let n_docs = rng.random_range(0..=50);
    (0..n_docs)
        .map(|_| {
            let len = rng.random_range(0..=40);
            (0..len)
                .map(|_| TOY_VOCAB.choose(rng).unwrap().to_string())
                .collect()
        })
        .collect()
}

/// A random valid phrase: literals, whole-word wildcards inside, and
/// substring wildcards cut from vocabulary words.
pub fn random_query(rng: &mut impl Rng) -> String {
    let len = rng.random_range(1..=4);
    let mut units = Vec::new();
    for k in 0..len {
        let inner = k > 0 && k + 1 < len;
        let roll = rng.random_range(0..10);
        let unit = if inner && roll < 3 {
            "*".to_string()
        } else if roll < 6 {
            let w: Vec<&str> = TOY_VOCAB.iter().copied().filter(|w| w.len() >= 3).collect();
            let w = w.choose(rng).unwrap();
            let cut = rng.random_range(3..=w.len());
            let suffix_len = rng.random_range(0..=(w.len() - cut).min(2));
            format!("{}*{}", &w[..cut], &w[w.len() - suffix_len..])
        } else if roll < 9 {
            TOY_VOCAB.choose(rng).unwrap().to_string()
        } else {
            "zebra".to_string()
        };
        units.push(unit);
    }
    units.join(" ")
}

const FILLER: [&str; 24] = [
    "lorem", "ipsum", "dolor", "amet", "consectetur", "adipiscing", "elit", "sed", "eiusmod",
    "tempor", "incididunt", "labore", "magna", "aliqua", "enim", "minim", "veniam", "quis",
    "nostrud", "exercitation", "ullamco", "laboris", "nisi", "commodo",
];

/// Pair templates: `{x}` / `{y}` placeholders.
type Templates = &'static [&'static str];

const SHARED_RELATION: Templates = &[
    "{x} in the {y}",
    "{y} with {x}",
    "{x} of {y}",
    "{y} has {x}",
    "{x}'s {y}",
];

pub const PLANTED_STEM: (&str, &str) = ("alpha", "beta");
pub const PLANTED_CHOICES: [(&str, &str); 5] = [
    ("epsilon", "zeta"),
    ("theta", "kappa"),
    ("gamma", "delta"),
    ("lambda", "sigma"),
    ("omega", "rho"),
];
pub const PLANTED_ANSWER: usize = 2;

fn templates_for(pair: (&str, &str)) -> Templates {
    match pair.0 {
        "alpha" | "gamma" => SHARED_RELATION,
        "epsilon" => &["{x} for {y}", "{y} on {x}", "{x} or {y}"],
        "theta" => &["{x} is {y}", "{y} to the {x}", "{x} in the {y}"],
        "lambda" => &["{x} after {y}", "{y} from {x}", "{y} with {x}"],
        "omega" => &["{x} like {y}", "{y} or {x}", "{x} into {y}"],
        _ => unreachable!(),
    }
}

/// ~200 documents of filler text with relation phrases planted for the
/// stem pair and every choice pair.
pub fn planted_corpus(rng: &mut impl Rng) -> Vec<String> {
    let mut pairs = vec![PLANTED_STEM];
    pairs.extend(PLANTED_CHOICES);
    (0..200)
        .map(|_| {
            let mut words: Vec<String> = (0..rng.random_range(10..30))
                .map(|_| FILLER.choose(rng).unwrap().to_string())
                .collect();
            for _ in 0..rng.random_range(0..=2) {
                let pair = *pairs.choose(rng).unwrap();
                let t = templates_for(pair).choose(rng).unwrap();
                let phrase = t.replace("{x}", pair.0).replace("{y}", pair.1);
                let at = rng.random_range(0..=words.len());
                words.insert(at, phrase);
            }
            words.join(" ")
        })
        .collect()
}

/// Splits the planted corpus the same way the oracle wants: lowercase
/// ASCII words, `'` as a separator.
pub fn naive_tokens(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_ascii_alphanumeric())
        .filter(|w| !w.is_empty())
        .map(|w| w.to_ascii_lowercase())
        .collect()
}

/// Random 10MB-ish English-like text with a Zipfian vocabulary.
pub fn bulk_text(rng: &mut impl Rng, bytes: usize) -> String {
    let syllables = ["ka", "lo", "mi", "ter", "san", "dor", "vel", "qu", "is", "ran", "to", "ple"];
    let vocab: Vec<String> = (0..20_000)
        .map(|_| {
            (0..rng.random_range(1..=4))
                .map(|_| *syllables.choose(rng).unwrap())
                .collect()
        })
        .collect();
    let common = ["the", "of", "in", "and", "to", "with", "is", "for", "on", "traffic", "street"];
    let mut out = String::with_capacity(bytes + 64);
    while out.len() < bytes {
        let r: f64 = rng.random();
        let w = if r < 0.3 {
            common[rng.random_range(0..common.len())]
        } else {
            // rank ~ 1/u gives a heavy head
            let u: f64 = rng.random_range(0.0001..1.0);
            let rank = ((1.0 / u) as usize).min(vocab.len()) - 1;
            vocab[rank].as_str()
        };
        out.push_str(w);
        out.push(if rng.random_range(0..12) == 0 { '\n' } else { ' ' });
    }
    out
}
