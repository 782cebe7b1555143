//! Positional inverted index and wildcard phrase hit counting.
//!
//! The index keeps a sorted vocabulary, one postings list of
//! `(doc_id, position)` per term, and each document as a sequence of term
//! ids. Phrase queries pick their most selective pattern, walk its postings
//! and verify the remaining patterns against the stored token sequence.

mod corpus;
mod persist;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::query::{ParseError, PhraseQuery, TokenPattern};
use crate::relation::HitProvider;
use crate::tokenize::is_valid_token;

pub use corpus::{load_corpus, split_sections, CORPUS_SEPARATOR};

pub type DocId = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub doc_id: DocId,
    pub tokens: Vec<String>,
}

impl Document {
    pub fn new(doc_id: DocId, tokens: Vec<String>) -> Self {
        Document { doc_id, tokens }
    }

    /// Tokenizes `text` into a document.
    pub fn from_text(doc_id: DocId, text: &str) -> Self {
        Document::new(doc_id, crate::tokenize(text))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum IndexError {
    #[error("duplicate document id {0}")]
    DuplicateDocId(DocId),
    #[error("document {doc_id} holds malformed token {token:?}")]
    InvalidToken { doc_id: DocId, token: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("corrupt index file: {0}")]
    Format(String),
}

/// How hits are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum HitMode {
    /// Number of documents with at least one match.
    #[default]
    Document,
    /// Number of match start positions over all documents.
    Occurrence,
}

impl fmt::Display for HitMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HitMode::Document => "document",
            HitMode::Occurrence => "occurrence",
        })
    }
}

impl FromStr for HitMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "document" => Ok(HitMode::Document),
            "occurrence" => Ok(HitMode::Occurrence),
            other => Err(format!("unknown hit mode {other:?} (expected document|occurrence)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HitCount {
    pub count: u64,
    pub mode: HitMode,
}

/// Per-pattern set of vocabulary ids it accepts.
enum TermMatcher {
    Any,
    Ids(Vec<u32>),
}

impl TermMatcher {
    #[inline]
    fn accepts(&self, id: u32) -> bool {
        match self {
            TermMatcher::Any => true,
            TermMatcher::Ids(ids) => match ids.as_slice() {
                [only] => *only == id,
                ids => ids.binary_search(&id).is_ok(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PositionalIndex {
    /// Sorted, unique; a term's id is its position here.
    terms: Vec<String>,
    /// Per term id: `(doc slot, position)` ascending.
    postings: Vec<Vec<(u32, u32)>>,
    /// Doc slot -> external doc id, ascending.
    doc_ids: Vec<DocId>,
    /// Doc slot -> term ids in token order.
    docs: Vec<Vec<u32>>,
}

impl PositionalIndex {
    /// Builds an index, rejecting duplicate ids and malformed tokens.
    pub fn build<I>(docs: I) -> Result<Self, IndexError>
    where
        I: IntoIterator<Item = Document>,
    {
        let mut docs: Vec<Document> = docs.into_iter().collect();
        docs.sort_by_key(|d| d.doc_id);
        if let Some(w) = docs.windows(2).find(|w| w[0].doc_id == w[1].doc_id) {
            return Err(IndexError::DuplicateDocId(w[0].doc_id));
        }

        let mut vocab: BTreeMap<&str, u32> = BTreeMap::new();
        for doc in &docs {
            for token in &doc.tokens {
                if !vocab.contains_key(token.as_str()) {
                    if !is_valid_token(token) {
                        return Err(IndexError::InvalidToken {
                            doc_id: doc.doc_id,
                            token: token.clone(),
                        });
                    }
                    vocab.insert(token, 0);
                }
            }
        }
        for (id, slot) in vocab.values_mut().enumerate() {
            *slot = id as u32;
        }
        let lookup: HashMap<&str, u32> = vocab.iter().map(|(t, id)| (*t, *id)).collect();
        let encoded: Vec<Vec<u32>> = docs
            .iter()
            .map(|d| d.tokens.iter().map(|t| lookup[t.as_str()]).collect())
            .collect();
        let terms = vocab.keys().map(|t| t.to_string()).collect();
        let doc_ids = docs.iter().map(|d| d.doc_id).collect();
        Ok(Self::from_parts(terms, doc_ids, encoded))
    }

    /// Assembles an index from a sorted vocabulary and encoded documents,
    /// deriving the postings.
    fn from_parts(terms: Vec<String>, doc_ids: Vec<DocId>, docs: Vec<Vec<u32>>) -> Self {
        let mut postings = vec![Vec::new(); terms.len()];
        for (slot, doc) in docs.iter().enumerate() {
            for (pos, &id) in doc.iter().enumerate() {
                postings[id as usize].push((slot as u32, pos as u32));
            }
        }
        PositionalIndex {
            terms,
            postings,
            doc_ids,
            docs,
        }
    }

    pub fn doc_count(&self) -> usize {
        self.docs.len()
    }

    pub fn token_count(&self) -> usize {
        self.docs.iter().map(Vec::len).sum()
    }

    pub fn vocabulary_size(&self) -> usize {
        self.terms.len()
    }

    pub fn max_doc_len(&self) -> usize {
        self.docs.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Vocabulary in ascending order.
    pub fn vocabulary(&self) -> impl Iterator<Item = &str> {
        self.terms.iter().map(String::as_str)
    }

    fn term_id(&self, term: &str) -> Option<u32> {
        self.terms
            .binary_search_by(|t| t.as_str().cmp(term))
            .ok()
            .map(|i| i as u32)
    }

    /// `(doc_id, position)` pairs for `term`, ascending.
    pub fn postings(&self, term: &str) -> Option<Vec<(DocId, u32)>> {
        let id = self.term_id(term)?;
        Some(
            self.postings[id as usize]
                .iter()
                .map(|&(slot, pos)| (self.doc_ids[slot as usize], pos))
                .collect(),
        )
    }

    /// Tokens of the document with id `doc_id`.
    pub fn document(&self, doc_id: DocId) -> Option<Vec<&str>> {
        let slot = self.doc_ids.binary_search(&doc_id).ok()?;
        Some(
            self.docs[slot]
                .iter()
                .map(|&id| self.terms[id as usize].as_str())
                .collect(),
        )
    }

    fn matcher(&self, pattern: &TokenPattern) -> TermMatcher {
        match pattern {
            TokenPattern::AnyWord => TermMatcher::Any,
            TokenPattern::Literal(lit) => TermMatcher::Ids(self.term_id(lit).into_iter().collect()),
            TokenPattern::Substring { prefix, .. } => {
                let start = self.terms.partition_point(|t| t.as_str() < prefix.as_str());
                let ids = self.terms[start..]
                    .iter()
                    .take_while(|t| t.starts_with(prefix.as_str()))
                    .enumerate()
                    .filter(|(_, t)| pattern.matches(t))
                    .map(|(i, _)| (start + i) as u32)
                    .collect();
                TermMatcher::Ids(ids)
            }
        }
    }

    /// Counts matches of `query`: documents with at least one match, or all
    /// match start positions. Matches never span documents and may overlap.
    pub fn count_hits(&self, query: &PhraseQuery, mode: HitMode) -> HitCount {
        HitCount {
            count: self.count(query, mode),
            mode,
        }
    }

    fn count(&self, query: &PhraseQuery, mode: HitMode) -> u64 {
        let matchers: Vec<TermMatcher> = query.patterns().iter().map(|p| self.matcher(p)).collect();

        // Drive from the pattern with the fewest postings.
        let mut driver: Option<(usize, usize)> = None;
        for (i, m) in matchers.iter().enumerate() {
            if let TermMatcher::Ids(ids) = m {
                let size: usize = ids.iter().map(|&id| self.postings[id as usize].len()).sum();
                if size == 0 {
                    return 0;
                }
                if driver.is_none_or(|(_, best)| size < best) {
                    driver = Some((i, size));
                }
            }
        }
        let Some((offset, _)) = driver else {
            return 0;
        };
        let TermMatcher::Ids(driver_ids) = &matchers[offset] else {
            unreachable!("driver is never a whole-word wildcard");
        };

        let span = matchers.len();
        let mut matched_slots = Vec::new();
        let mut occurrences = 0u64;
        for &id in driver_ids {
            for &(slot, pos) in &self.postings[id as usize] {
                let Some(start) = (pos as usize).checked_sub(offset) else {
                    continue;
                };
                let doc = &self.docs[slot as usize];
                if start + span > doc.len() {
                    continue;
                }
                let window = &doc[start..start + span];
                if matchers.iter().zip(window).all(|(m, &t)| m.accepts(t)) {
                    occurrences += 1;
                    matched_slots.push(slot);
                }
            }
        }
        match mode {
            HitMode::Occurrence => occurrences,
            HitMode::Document => {
                matched_slots.sort_unstable();
                matched_slots.dedup();
                matched_slots.len() as u64
            }
        }
    }

    /// Hex SHA-256 of the serialized index; identifies the corpus.
    pub fn fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        self.write(&mut hasher)
            .expect("hashing into memory cannot fail");
        hex::encode(hasher.finalize())
    }
}

/// Shorthand for [`PositionalIndex::build`].
pub fn build_index<I>(docs: I) -> Result<PositionalIndex, IndexError>
where
    I: IntoIterator<Item = Document>,
{
    PositionalIndex::build(docs)
}

/// Answers phrase strings from a local index.
#[derive(Debug, Clone, Copy)]
pub struct IndexProvider<'a> {
    pub index: &'a PositionalIndex,
    pub mode: HitMode,
}

impl<'a> IndexProvider<'a> {
    pub fn new(index: &'a PositionalIndex, mode: HitMode) -> Self {
        IndexProvider { index, mode }
    }
}

impl HitProvider for IndexProvider<'_> {
    type Error = ParseError;

    fn hits(&self, phrase: &str) -> Result<u64, ParseError> {
        let query = PhraseQuery::parse(phrase)?;
        Ok(self.index.count_hits(&query, self.mode).count)
    }
}
