//! Relational similarity between word pairs.
//!
//! A word pair `X:Y` is characterised by how often short phrases joining the
//! two words occur in a corpus. Each of 64 joining terms is placed between the
//! (stemmed) words in both orders, giving 128 wildcard phrase queries; the hit
//! counts, log-transformed, form a [`RelationVector`]. Two pairs are
//! relationally similar when the cosine between their vectors is large.
//!
//! On top of that measure the crate provides:
//!
//! - [`index`]: a positional inverted index over a local corpus that answers
//!   the wildcard phrase queries (`*` as a whole word or as a short substring).
//! - [`analogy`]: multiple-choice analogy solving with a margin threshold that
//!   trades precision against recall, and pool ranking.
//! - [`nounmod`]: nearest-neighbour classification of noun-modifier pairs into
//!   the relations of [`taxonomy`], evaluated with leave-one-out
//!   cross-validation and macroaveraged metrics.
//! - [`cache`] and [`report`]: persisted raw counts and report/CSV emission.

pub mod analogy;
pub mod cache;
pub mod data;
pub mod index;
pub mod metrics;
pub mod nounmod;
pub mod query;
pub mod relation;
pub mod report;
pub mod sweep;
pub mod taxonomy;
pub mod tiebreak;
pub mod tokenize;

pub use analogy::{AnalogyQuestion, EvalReport, GuessOutcome};
pub use index::{Document, HitMode, IndexProvider, PositionalIndex};
pub use query::{ParseError, PhraseQuery, TokenPattern};
pub use relation::{HitProvider, JoiningTermTable, RelationVector, WordPair};
pub use taxonomy::{Granularity, Group, RelationTaxonomy};
pub use tiebreak::TieBreak;
pub use tokenize::tokenize;
