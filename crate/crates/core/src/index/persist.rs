//! Binary index file.
//!
//! Layout, all integers little-endian `u32`:
//! `"RSIX"`, version, term count, then each term as length + UTF-8 bytes,
//! document count, then each document as id, length, term ids.
//! Postings are rebuilt on load.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::Path;

use super::{IndexError, PositionalIndex};

const MAGIC: &[u8; 4] = b"RSIX";
const VERSION: u32 = 1;

fn put(w: &mut impl Write, v: u32) -> io::Result<()> {
    w.write_all(&v.to_le_bytes())
}

fn get(r: &mut impl Read) -> Result<u32, IndexError> {
    let mut buf = [0u8; 4];
    r.read_exact(&mut buf)
        .map_err(|e| IndexError::Format(format!("truncated: {e}")))?;
    Ok(u32::from_le_bytes(buf))
}

impl PositionalIndex {
    pub fn write(&self, w: &mut impl Write) -> io::Result<()> {
        w.write_all(MAGIC)?;
        put(w, VERSION)?;
        put(w, self.terms.len() as u32)?;
        for term in &self.terms {
            put(w, term.len() as u32)?;
            w.write_all(term.as_bytes())?;
        }
        put(w, self.docs.len() as u32)?;
        for (doc_id, doc) in self.doc_ids.iter().zip(&self.docs) {
            put(w, *doc_id)?;
            put(w, doc.len() as u32)?;
            for &id in doc {
                put(w, id)?;
            }
        }
        Ok(())
    }

    pub fn read(r: &mut impl Read) -> Result<Self, IndexError> {
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic)
            .map_err(|_| IndexError::Format("missing header".into()))?;
        if &magic != MAGIC {
            return Err(IndexError::Format("bad magic".into()));
        }
        let version = get(r)?;
        if version != VERSION {
            return Err(IndexError::Format(format!("unsupported version {version}")));
        }

        let n_terms = get(r)? as usize;
        let mut terms: Vec<String> = Vec::with_capacity(n_terms.min(1 << 20));
        for _ in 0..n_terms {
            let len = get(r)? as usize;
            let mut bytes = vec![0u8; len];
            r.read_exact(&mut bytes)
                .map_err(|e| IndexError::Format(format!("truncated term: {e}")))?;
            let term = String::from_utf8(bytes)
                .map_err(|_| IndexError::Format("term is not UTF-8".into()))?;
            if terms.last().is_some_and(|prev| *prev >= term) {
                return Err(IndexError::Format("vocabulary not strictly sorted".into()));
            }
            terms.push(term);
        }

        let n_docs = get(r)? as usize;
        let mut doc_ids = Vec::with_capacity(n_docs.min(1 << 20));
        let mut docs = Vec::with_capacity(n_docs.min(1 << 20));
        for _ in 0..n_docs {
            let doc_id = get(r)?;
            if doc_ids.last().is_some_and(|&prev| prev >= doc_id) {
                return Err(IndexError::Format("document ids not strictly ascending".into()));
            }
            let len = get(r)? as usize;
            let mut doc = Vec::with_capacity(len.min(1 << 24));
            for _ in 0..len {
                let id = get(r)?;
                if id as usize >= terms.len() {
                    return Err(IndexError::Format(format!("term id {id} out of range")));
                }
                doc.push(id);
            }
            doc_ids.push(doc_id);
            docs.push(doc);
        }
        let mut trailing = [0u8; 1];
        if r.read(&mut trailing).map_err(|e| IndexError::Format(e.to_string()))? != 0 {
            return Err(IndexError::Format("trailing bytes".into()));
        }
        Ok(PositionalIndex::from_parts(terms, doc_ids, docs))
    }

    pub fn save(&self, path: &Path) -> Result<(), IndexError> {
        let io_err = |source| IndexError::Io {
            path: path.display().to_string(),
            source,
        };
        let mut w = BufWriter::new(File::create(path).map_err(io_err)?);
        self.write(&mut w).map_err(io_err)?;
        w.flush().map_err(io_err)
    }

    pub fn load(path: &Path) -> Result<Self, IndexError> {
        let file = File::open(path).map_err(|source| IndexError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::read(&mut BufReader::new(file))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::{build_index, Document};

    #[test]
    fn round_trip_preserves_index() {
        let index = build_index([
            Document::from_text(4, "Water in the riverbed"),
            Document::from_text(1, "traffic in the street, street with traffic"),
            Document::from_text(9, ""),
        ])
        .unwrap();
        let mut bytes = Vec::new();
        index.write(&mut bytes).unwrap();
        let back = PositionalIndex::read(&mut bytes.as_slice()).unwrap();
        assert_eq!(back, index);
    }

    #[test]
    fn rejects_garbage() {
        assert!(PositionalIndex::read(&mut &b"nope"[..]).is_err());
        let index = build_index([Document::from_text(0, "a b")]).unwrap();
        let mut bytes = Vec::new();
        index.write(&mut bytes).unwrap();
        bytes.pop();
        assert!(PositionalIndex::read(&mut bytes.as_slice()).is_err());
        let mut extra = Vec::new();
        index.write(&mut extra).unwrap();
        extra.push(0);
        assert!(PositionalIndex::read(&mut extra.as_slice()).is_err());
    }
}
