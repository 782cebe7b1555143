//! Relation vectors for word pairs.
//!
//! Each of the 64 joining terms is placed between the stemmed words of a pair
//! in both orders. The hit count of each phrase, transformed by `ln(x + 1)`,
//! gives one element; element `2j` comes from `X term_j Y` and `2j + 1` from
//! `Y term_j X`.

use std::error::Error as StdError;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::query::{alphabetic_len, MIN_WILDCARD_PREFIX};
use crate::tokenize::tokenize;

/// Number of joining terms.
pub const TERM_COUNT: usize = 64;
/// Elements per relation vector.
pub const VECTOR_LEN: usize = 2 * TERM_COUNT;

/// The default joining terms, in their canonical order and spacing.
pub const DEFAULT_JOINING_TERMS: [&str; TERM_COUNT] = [
    " ", " * not ", " * very ", " after ", " and not ", " are ", " at ", " at the ",
    " become* ", " but not ", " contain* ", " for ", " for example ", " for the ", " from ",
    " from the ", " get* ", " give* ", " go ", " goes ", " has ", " have ", " in ", " in the ",
    " instead of ", " into ", " is ", " is * ", " is the ", " lack* ", " like ", " like * ",
    " like the ", " make* ", " need* ", " not ", " not the ", " of ", " of the ", " on ",
    " onto ", " or ", " rather than ", " such as ", " than ", " that ", " the ", " their ",
    " then ", " this ", " to ", " to the ", " turn* ", " use* ", " when ", " which ", " will ",
    " with ", " with the ", " within ", " without ", " yet ", "s ", "s * ",
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PairError {
    #[error("pair {0:?} is not of the form x:y")]
    Malformed(String),
    #[error("pair member {0:?} contains no word characters")]
    EmptyMember(String),
}

/// An ordered word pair. Multiword members use underscores (`shoot_down`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WordPair {
    pub x: String,
    pub y: String,
}

impl WordPair {
    pub fn new(x: &str, y: &str) -> Result<Self, PairError> {
        Ok(WordPair {
            x: normalize_member(x)?,
            y: normalize_member(y)?,
        })
    }

    pub fn reversed(&self) -> WordPair {
        WordPair {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    /// Cache key, `x:y`.
    pub fn key(&self) -> String {
        self.to_string()
    }
}

fn normalize_member(member: &str) -> Result<String, PairError> {
    let tokens = member_tokens(member);
    if tokens.is_empty() {
        return Err(PairError::EmptyMember(member.to_string()));
    }
    Ok(tokens.join("_"))
}

fn member_tokens(member: &str) -> Vec<String> {
    tokenize(&member.replace('_', " "))
}

impl fmt::Display for WordPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.x, self.y)
    }
}

impl FromStr for WordPair {
    type Err = PairError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (x, y) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| PairError::Malformed(s.to_string()))?;
        if y.contains(':') {
            return Err(PairError::Malformed(s.to_string()));
        }
        WordPair::new(x, y)
    }
}

/// Truncates a word into a substring-wildcard pattern by length band:
/// over 10 characters drop the last 4 for `*`, 9-10 drop the last 3,
/// 3-8 append `*`, 2 or fewer unchanged.
///
/// Words whose retained prefix has fewer than three alphabetic characters
/// (possible only with digits) are left unchanged, since such a wildcard
/// would not be a legal query unit.
pub fn stem(word: &str) -> String {
    let len = word.chars().count();
    let keep = match len {
        0..=2 => return word.to_string(),
        3..=8 => len,
        9..=10 => len - 3,
        _ => len - 4,
    };
    let prefix: String = word.chars().take(keep).collect();
    if alphabetic_len(&prefix) < MIN_WILDCARD_PREFIX {
        return word.to_string();
    }
    prefix + "*"
}

/// Query fragment for one pair member: earlier words literal, last stemmed.
fn member_phrase(member: &str) -> String {
    let mut tokens = member_tokens(member);
    if let Some(last) = tokens.last_mut() {
        *last = stem(last);
    }
    tokens.join(" ")
}

#[derive(Debug, thiserror::Error)]
pub enum TermTableError {
    #[error("expected {TERM_COUNT} joining terms, found {0}")]
    WrongCount(usize),
    #[error("line {line}: joining term must be written in double quotes")]
    Unquoted { line: usize },
}

/// Ordered list of exactly 64 joining terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoiningTermTable {
    terms: Vec<String>,
}

impl Default for JoiningTermTable {
    fn default() -> Self {
        JoiningTermTable {
            terms: DEFAULT_JOINING_TERMS.iter().map(|t| t.to_string()).collect(),
        }
    }
}

impl JoiningTermTable {
    pub fn new(terms: Vec<String>) -> Result<Self, TermTableError> {
        if terms.len() != TERM_COUNT {
            return Err(TermTableError::WrongCount(terms.len()));
        }
        Ok(JoiningTermTable { terms })
    }

    /// Parses one double-quoted term per line; blank lines and `#` comments
    /// are skipped.
    pub fn parse(text: &str) -> Result<Self, TermTableError> {
        let mut terms = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let inner = line
                .strip_prefix('"')
                .and_then(|l| l.strip_suffix('"'))
                .filter(|_| line.len() >= 2)
                .ok_or(TermTableError::Unquoted { line: i + 1 })?;
            terms.push(inner.to_string());
        }
        Self::new(terms)
    }

    /// Inverse of [`JoiningTermTable::parse`].
    pub fn to_file_string(&self) -> String {
        self.terms.iter().map(|t| format!("\"{t}\"\n")).collect()
    }

    pub fn terms(&self) -> &[String] {
        &self.terms
    }

    /// Hex SHA-256 over the terms, newline-separated.
    pub fn checksum(&self) -> String {
        let mut hasher = Sha256::new();
        for t in &self.terms {
            hasher.update(t.as_bytes());
            hasher.update(b"\n");
        }
        hex::encode(hasher.finalize())
    }
}

/// The 128 phrase queries for `pair`, in vector element order.
pub fn generate_queries(pair: &WordPair, table: &JoiningTermTable) -> Vec<String> {
    let x = member_phrase(&pair.x);
    let y = member_phrase(&pair.y);
    let join = |a: &str, term: &str, b: &str| {
        std::iter::once(a)
            .chain(term.split_whitespace())
            .chain(std::iter::once(b))
            .collect::<Vec<_>>()
            .join(" ")
    };
    table
        .terms()
        .iter()
        .flat_map(|term| [join(&x, term, &y), join(&y, term, &x)])
        .collect()
}

/// Source of phrase hit counts.
pub trait HitProvider {
    type Error: StdError + Send + Sync + 'static;

    fn hits(&self, phrase: &str) -> Result<u64, Self::Error>;
}

impl<F, E> HitProvider for F
where
    F: Fn(&str) -> Result<u64, E>,
    E: StdError + Send + Sync + 'static,
{
    type Error = E;

    fn hits(&self, phrase: &str) -> Result<u64, E> {
        self(phrase)
    }
}

#[derive(Debug, thiserror::Error)]
#[error("hit query {query:?} failed: {source}")]
pub struct VectorError {
    pub query: String,
    #[source]
    pub source: Box<dyn StdError + Send + Sync>,
}

/// `ln(x + 1)`, the per-element transform.
pub fn log_transform(x: f64) -> f64 {
    x.ln_1p()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationVector {
    pub pair: WordPair,
    pub raw: Vec<u64>,
    pub values: Vec<f64>,
}

impl RelationVector {
    pub fn from_raw(pair: WordPair, raw: Vec<u64>) -> Self {
        let values = raw.iter().map(|&c| log_transform(c as f64)).collect();
        RelationVector { pair, raw, values }
    }

    pub fn is_zero(&self) -> bool {
        self.raw.iter().all(|&c| c == 0)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Cosine with another vector; 0 when either is all zeros.
    pub fn cosine(&self, other: &RelationVector) -> Result<f64, LengthMismatch> {
        cosine(&self.values, &other.values)
    }
}

/// Queries `provider` for every phrase of `pair`.
pub fn build_vector<P: HitProvider + ?Sized>(
    provider: &P,
    pair: &WordPair,
    table: &JoiningTermTable,
) -> Result<RelationVector, VectorError> {
    let raw = generate_queries(pair, table)
        .into_iter()
        .map(|query| {
            provider.hits(&query).map_err(|e| VectorError {
                query,
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RelationVector::from_raw(pair.clone(), raw))
}

/// [`build_vector`] over many pairs in parallel; output follows input order.
pub fn build_vectors<P>(
    provider: &P,
    pairs: &[WordPair],
    table: &JoiningTermTable,
) -> Result<Vec<RelationVector>, VectorError>
where
    P: HitProvider + Sync + ?Sized,
{
    pairs
        .par_iter()
        .map(|pair| build_vector(provider, pair, table))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("vector lengths differ: {0} vs {1}")]
pub struct LengthMismatch(pub usize, pub usize);

/// Cosine of the angle between `a` and `b`. A zero vector on either side
/// yields 0.
pub fn cosine(a: &[f64], b: &[f64]) -> Result<f64, LengthMismatch> {
    if a.len() != b.len() {
        return Err(LengthMismatch(a.len(), b.len()));
    }
    let (mut dot, mut aa, mut bb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        dot += x * y;
        aa += x * x;
        bb += y * y;
    }
    if aa == 0.0 || bb == 0.0 {
        return Ok(0.0);
    }
    Ok((dot / (aa.sqrt() * bb.sqrt())).clamp(-1.0, 1.0))
}
