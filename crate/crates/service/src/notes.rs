use std::collections::BTreeMap;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::atomic::write_atomic;

#[derive(Debug, Error)]
pub enum NotesError {
    #[error("notes file {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("notes file {path}, line {line}: expected sent_id<TAB>note")]
    Format { path: PathBuf, line: usize },
}

/// Per-sentence notes kept in a sidecar file, one `sent_id<TAB>note`
/// record per line. Backslash, tab, CR and LF inside notes are escaped.
#[derive(Clone, Debug)]
pub struct NoteStore {
    path: PathBuf,
    notes: BTreeMap<String, String>,
}

impl NoteStore {
    /// `<document>.notes.tsv`
    pub fn sidecar_path(document: &Path) -> PathBuf {
        let mut name = document.as_os_str().to_owned();
        name.push(".notes.tsv");
        PathBuf::from(name)
    }

    /// Load the sidecar if it exists; an absent file means no notes.
    pub fn open(path: PathBuf) -> Result<NoteStore, NotesError> {
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => String::new(),
            Err(source) => return Err(NotesError::Io { path, source }),
        };
        let mut notes = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let Some((id, note)) = line.split_once('\t') else {
                return Err(NotesError::Format { path, line: i + 1 });
            };
            notes.insert(unescape(id), unescape(note));
        }
        Ok(NoteStore { path, notes })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, sent_id: &str) -> Option<&str> {
        self.notes.get(sent_id).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.notes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.notes.is_empty()
    }

    /// Set (or with an empty `note`, remove) a note and write the file.
    pub fn set(&mut self, sent_id: &str, note: &str) -> Result<(), NotesError> {
        let previous = if note.is_empty() {
            self.notes.remove(sent_id)
        } else {
            self.notes.insert(sent_id.to_string(), note.to_string())
        };
        if let Err(e) = self.persist() {
            match previous {
                Some(p) => self.notes.insert(sent_id.to_string(), p),
                None => self.notes.remove(sent_id),
            };
            return Err(e);
        }
        Ok(())
    }

    fn persist(&self) -> Result<(), NotesError> {
        let mut out = String::new();
        for (id, note) in &self.notes {
            out.push_str(&escape(id));
            out.push('\t');
            out.push_str(&escape(note));
            out.push('\n');
        }
        write_atomic(&self.path, out.as_bytes()).map_err(|source| NotesError::Io {
            path: self.path.clone(),
            source,
        })
    }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '\t' => out.push_str("\\t"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out
}

fn unescape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match chars.next() {
            Some('t') => out.push('\t'),
            Some('n') => out.push('\n'),
            Some('r') => out.push('\r'),
            Some(other) => out.push(other),
            None => out.push('\\'),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn escaping_round_trips() {
        for s in ["plain", "tab\there", "two\nlines\r\n", "back\\slash\\n", "\\"] {
            assert_eq!(unescape(&escape(s)), s);
            assert!(!escape(s).contains(['\t', '\n', '\r']));
        }
    }

    #[test]
    fn sidecar_name() {
        assert_eq!(
            NoteStore::sidecar_path(Path::new("/data/x.conllu")),
            PathBuf::from("/data/x.conllu.notes.tsv")
        );
    }
}
