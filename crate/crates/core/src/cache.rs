//! On-disk cache of raw hit counts per word pair.
//!
//! Tab-separated:
//!
//! ```text
//! # relsim vector cache v1
//! # corpus  <index fingerprint>
//! # terms   <joining-term checksum>
//! # mode    document
//! traffic:street  544  460  ...
//! ```
//!
//! Counts are stored as decimal integers so the file is lossless; the log
//! transform is applied on load.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;

use crate::index::HitMode;
use crate::relation::{RelationVector, WordPair, VECTOR_LEN};

const HEADER: &str = "# relsim vector cache v1";

/// What a cache's counts were computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub corpus: String,
    pub terms: String,
    pub mode: HitMode,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "corpus {} / terms {} / mode {}", self.corpus, self.terms, self.mode)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("vector cache provenance mismatch: cache has {found}, active configuration is {expected}")]
    ProvenanceMismatch { expected: Provenance, found: Provenance },
    #[error("cache line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorCache {
    pub provenance: Provenance,
    entries: BTreeMap<String, Vec<u64>>,
}

impl VectorCache {
    pub fn new(provenance: Provenance) -> Self {
        VectorCache {
            provenance,
            entries: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, pair: &WordPair) -> bool {
        self.entries.contains_key(&pair.key())
    }

    pub fn insert(&mut self, vector: &RelationVector) {
        assert_eq!(vector.raw.len(), VECTOR_LEN, "cached vectors hold {VECTOR_LEN} counts");
        self.entries.insert(vector.pair.key(), vector.raw.clone());
    }

    pub fn get(&self, pair: &WordPair) -> Option<RelationVector> {
        self.entries
            .get(&pair.key())
            .map(|raw| RelationVector::from_raw(pair.clone(), raw.clone()))
    }

    pub fn raw(&self, pair: &WordPair) -> Option<&[u64]> {
        self.entries.get(&pair.key()).map(Vec::as_slice)
    }

    /// Errors unless the cache was computed under `expected`.
    pub fn check_provenance(&self, expected: &Provenance) -> Result<(), CacheError> {
        if &self.provenance == expected {
            Ok(())
        } else {
            Err(CacheError::ProvenanceMismatch {
                expected: expected.clone(),
                found: self.provenance.clone(),
            })
        }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = format!(
            "{HEADER}\n# corpus\t{}\n# terms\t{}\n# mode\t{}\n",
            self.provenance.corpus, self.provenance.terms, self.provenance.mode
        );
        for (key, raw) in &self.entries {
            out.push_str(key);
            for c in raw {
                out.push('\t');
                out.push_str(&c.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, CacheError> {
        let malformed = |line: usize, message: &str| CacheError::Malformed {
            line,
            message: message.to_string(),
        };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        match lines.next() {
            Some((_, HEADER)) => {}
            _ => return Err(malformed(1, "missing cache header")),
        }
        let mut meta = |name: &str| -> Result<String, CacheError> {
            let (line, l) = lines.next().ok_or_else(|| malformed(0, "truncated header"))?;
            l.strip_prefix("# ")
                .and_then(|l| l.split_once('\t'))
                .filter(|(k, _)| *k == name)
                .map(|(_, v)| v.to_string())
                .ok_or_else(|| malformed(line, &format!("expected {name} header")))
        };
        let corpus = meta("corpus")?;
        let terms = meta("terms")?;
        let mode = meta("mode")?.parse().map_err(|e: String| malformed(4, &e))?;
        let mut cache = VectorCache::new(Provenance { corpus, terms, mode });

        for (line, l) in lines {
            if l.trim().is_empty() || l.starts_with('#') {
                continue;
            }
            let mut fields = l.split('\t');
            let key = fields.next().unwrap_or_default();
            let pair: WordPair = key.parse().map_err(|e| malformed(line, &format!("{e}")))?;
            let raw = fields
                .map(|f| f.parse::<u64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| malformed(line, &format!("bad count: {e}")))?;
            if raw.len() != VECTOR_LEN {
                return Err(malformed(line, &format!("expected {VECTOR_LEN} counts, found {}", raw.len())));
            }
            cache.entries.insert(pair.key(), raw);
        }
        Ok(cache)
    }

    pub fn load(path: &Path) -> Result<Self, CacheError> {
        let text = fs::read_to_string(path).map_err(|source| CacheError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn save(&self, path: &Path) -> Result<(), CacheError> {
        fs::write(path, self.to_tsv()).map_err(|source| CacheError::Io {
            path: path.display().to_string(),
            source,
        })
    }
}
