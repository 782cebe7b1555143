//! Tab-separated input files.
//!
//! - Questions: `stemA:stemB<TAB>a1:b1<TAB>...<TAB>a5:b5<TAB><answer letter>`
//! - Noun-modifier pairs: `modifier<TAB>head<TAB>abbreviation[<TAB>ignored...]`
//! - Pair lists: one `x:y` per line
//!
//! Blank lines and lines starting with `#` are skipped everywhere.

use crate::analogy::AnalogyQuestion;
use crate::nounmod::LabeledNounModifier;
use crate::relation::WordPair;
use crate::taxonomy::RelationTaxonomy;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct DataError {
    pub line: usize,
    pub message: String,
}

fn records(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

fn err(line: usize, message: impl Into<String>) -> DataError {
    DataError {
        line,
        message: message.into(),
    }
}

fn parse_pair(line: usize, field: &str) -> Result<WordPair, DataError> {
    field.parse().map_err(|e| err(line, format!("{e}")))
}

pub fn parse_questions(text: &str) -> Result<Vec<AnalogyQuestion>, DataError> {
    records(text)
        .map(|(line, record)| {
            let fields: Vec<&str> = record.split('\t').map(str::trim).collect();
            if fields.len() < 4 {
                return Err(err(line, format!("expected stem, choices and answer, found {} fields", fields.len())));
            }
            let (letter, pairs) = fields.split_last().expect("non-empty");
            let answer = match letter.as_bytes() {
                [c @ b'a'..=b'z'] => (c - b'a') as usize,
                [c @ b'A'..=b'Z'] => (c - b'A') as usize,
                _ => return Err(err(line, format!("answer {letter:?} is not a choice letter"))),
            };
            let stem = parse_pair(line, pairs[0])?;
            let choices = pairs[1..]
                .iter()
                .map(|f| parse_pair(line, f))
                .collect::<Result<Vec<_>, _>>()?;
            AnalogyQuestion::new(stem, choices, answer).map_err(|e| err(line, e.to_string()))
        })
        .collect()
}

pub fn parse_noun_modifiers(text: &str) -> Result<Vec<LabeledNounModifier>, DataError> {
    let taxonomy = RelationTaxonomy;
    records(text)
        .map(|(line, record)| {
            let fields: Vec<&str> = record.split('\t').map(str::trim).collect();
            let [modifier, head, label, ..] = fields[..] else {
                return Err(err(line, "expected modifier, head and class abbreviation"));
            };
            taxonomy.class(label).map_err(|e| err(line, e.to_string()))?;
            let pair = WordPair::new(modifier, head).map_err(|e| err(line, e.to_string()))?;
            Ok(LabeledNounModifier {
                modifier: pair.x,
                head: pair.y,
                label: label.to_string(),
            })
        })
        .collect()
}

pub fn parse_pairs(text: &str) -> Result<Vec<WordPair>, DataError> {
    records(text)
        .map(|(line, record)| parse_pair(line, record))
        .collect()
}
