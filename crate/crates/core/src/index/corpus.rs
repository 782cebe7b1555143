//! Reading a corpus from disk.

use std::fs;
use std::path::Path;

use super::{DocId, Document, IndexError};

/// Line that separates documents inside a single corpus file.
pub const CORPUS_SEPARATOR: &str = "%%";

/// Loads documents from a directory (one file per document, ids assigned in
/// lexicographic filename order) or from a single `%%`-separated file.
pub fn load_corpus(path: &Path) -> Result<Vec<Document>, IndexError> {
    let io_err = |p: &Path, source| IndexError::Io {
        path: p.display().to_string(),
        source,
    };
    let meta = fs::metadata(path).map_err(|e| io_err(path, e))?;
    if meta.is_dir() {
        let mut files = Vec::new();
        for entry in fs::read_dir(path).map_err(|e| io_err(path, e))? {
            let entry = entry.map_err(|e| io_err(path, e))?;
            if entry.file_type().map_err(|e| io_err(path, e))?.is_file() {
                files.push(entry.path());
            }
        }
        files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
        files
            .iter()
            .enumerate()
            .map(|(i, file)| {
                let text = fs::read_to_string(file).map_err(|e| io_err(file, e))?;
                Ok(Document::from_text(i as DocId, &text))
            })
            .collect()
    } else {
        let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
        Ok(split_sections(&text)
            .into_iter()
            .enumerate()
            .map(|(i, section)| Document::from_text(i as DocId, &section))
            .collect())
    }
}

/// Splits text on lines consisting only of `%%`. Blank sections are dropped.
pub fn split_sections(text: &str) -> Vec<String> {
    let mut sections = Vec::new();
    let mut current = String::new();
    for line in text.lines() {
        if line.trim_end_matches('\r') == CORPUS_SEPARATOR {
            sections.push(std::mem::take(&mut current));
        } else {
            current.push_str(line);
            current.push('\n');
        }
    }
    sections.push(current);
    sections.retain(|s| !s.trim().is_empty());
    sections
}
