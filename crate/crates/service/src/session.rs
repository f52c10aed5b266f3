use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;
use treebank::conllu::{read_document, ReadError};
use treebank::validate::validate_sentence_at;
use treebank::{
    serialize_document, Document, Edit, EditError, IssueCode, Schema, Section, Sentence, Token,
    ValidationIssue,
};

use crate::atomic::write_atomic;
use crate::notes::{NoteStore, NotesError};

#[derive(Debug, Error)]
pub enum SessionError {
    #[error(transparent)]
    Read(#[from] ReadError),
    #[error(transparent)]
    Notes(#[from] NotesError),
    #[error("no sentence '{0}'")]
    NotFound(String),
    #[error("revision conflict: expected {expected}, document is at {current}")]
    Conflict { expected: u64, current: u64 },
    #[error(transparent)]
    Edit(#[from] EditError),
    #[error("cannot save: {0}")]
    Serialize(#[from] treebank::conllu::SerializeError),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// A sentence reference from a URL: a `sent_id`, or failing that a
/// 0-based index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SentenceRef(pub String);

impl From<&str> for SentenceRef {
    fn from(s: &str) -> Self {
        SentenceRef(s.to_string())
    }
}

impl From<usize> for SentenceRef {
    fn from(i: usize) -> Self {
        SentenceRef(i.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocumentSummary {
    pub path: PathBuf,
    pub sentences: usize,
    pub section: Option<Section>,
    pub revision: u64,
    pub dirty: bool,
    pub notes: usize,
    /// `sent_id` of every sentence in order (`null` where missing).
    pub sent_ids: Vec<Option<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SentencePayload {
    pub index: usize,
    pub sent_id: Option<String>,
    pub text: Option<String>,
    pub comments: Vec<String>,
    pub tokens: Vec<Token>,
    pub note: Option<String>,
    pub issues: Vec<ValidationIssue>,
    pub revision: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EditRequest {
    pub expected_revision: u64,
    pub edit: Edit,
}

/// One open document with its notes.
///
/// Edits change only the in-memory copy until [`Session::save`]; notes
/// are written to the sidecar as soon as they change.
#[derive(Debug)]
pub struct Session {
    path: PathBuf,
    doc: Document,
    notes: NoteStore,
    schema: Schema,
    revision: u64,
    dirty: bool,
}

impl Session {
    pub fn open(path: impl AsRef<Path>, schema: Schema) -> Result<Session, SessionError> {
        let path = path.as_ref().to_path_buf();
        let doc = read_document(&path)?;
        let notes = NoteStore::open(NoteStore::sidecar_path(&path))?;
        Ok(Session {
            path,
            doc,
            notes,
            schema,
            revision: 0,
            dirty: false,
        })
    }

    pub fn document(&self) -> &Document {
        &self.doc
    }

    pub fn schema(&self) -> &Schema {
        &self.schema
    }

    pub fn revision(&self) -> u64 {
        self.revision
    }

    pub fn is_dirty(&self) -> bool {
        self.dirty
    }

    pub fn summary(&self) -> DocumentSummary {
        DocumentSummary {
            path: self.path.clone(),
            sentences: self.doc.len(),
            section: self.doc.section,
            revision: self.revision,
            dirty: self.dirty,
            notes: self.notes.len(),
            sent_ids: self
                .doc
                .sentences
                .iter()
                .map(|s| s.sent_id().map(str::to_string))
                .collect(),
        }
    }

    pub fn resolve(&self, r: &SentenceRef) -> Result<usize, SessionError> {
        if let Some(i) = self.doc.find(&r.0) {
            return Ok(i);
        }
        match r.0.parse::<usize>() {
            Ok(i) if i < self.doc.len() => Ok(i),
            _ => Err(SessionError::NotFound(r.0.clone())),
        }
    }

    /// Notes are keyed by `sent_id`; sentences without one use `#<n>`.
    fn note_key(s: &Sentence, index: usize) -> String {
        s.sent_id().map_or_else(|| format!("#{}", index + 1), str::to_string)
    }

    fn issues(&self, index: usize) -> Vec<ValidationIssue> {
        let s = &self.doc.sentences[index];
        let mut issues = Vec::new();
        if let Some(id) = s.sent_id() {
            if let Some(first) = self.doc.sentences[..index]
                .iter()
                .position(|o| o.sent_id() == Some(id))
            {
                issues.push(ValidationIssue {
                    sentence: index,
                    sent_id: Some(id.to_string()),
                    token: None,
                    code: IssueCode::DuplicateSentId,
                    message: format!("sent_id '{id}' already used by sentence {}", first + 1),
                });
            }
        }
        issues.extend(validate_sentence_at(s, index, &self.schema));
        issues
    }

    fn payload(&self, index: usize) -> SentencePayload {
        let s = &self.doc.sentences[index];
        SentencePayload {
            index,
            sent_id: s.sent_id().map(str::to_string),
            text: s.text().map(str::to_string),
            comments: s.comments.clone(),
            tokens: s.tokens.clone(),
            note: self.notes.get(&Self::note_key(s, index)).map(str::to_string),
            issues: self.issues(index),
            revision: self.revision,
        }
    }

    pub fn sentence(&self, r: &SentenceRef) -> Result<SentencePayload, SessionError> {
        Ok(self.payload(self.resolve(r)?))
    }

    /// Apply one edit if `expected_revision` is current. A rejected edit
    /// leaves the document and revision unchanged.
    pub fn apply_edit(
        &mut self,
        r: &SentenceRef,
        edit: &Edit,
        expected_revision: u64,
    ) -> Result<SentencePayload, SessionError> {
        if expected_revision != self.revision {
            return Err(SessionError::Conflict {
                expected: expected_revision,
                current: self.revision,
            });
        }
        let index = self.resolve(r)?;
        let mut edited = self.doc.sentences[index].clone();
        edit.apply(&mut edited)?;
        self.doc.sentences[index] = edited;
        self.revision += 1;
        self.dirty = true;
        Ok(self.payload(index))
    }

    pub fn note(&self, r: &SentenceRef) -> Result<Option<String>, SessionError> {
        let index = self.resolve(r)?;
        let key = Self::note_key(&self.doc.sentences[index], index);
        Ok(self.notes.get(&key).map(str::to_string))
    }

    /// Set a note (empty text removes it); written to disk immediately.
    pub fn set_note(&mut self, r: &SentenceRef, text: &str) -> Result<(), SessionError> {
        let index = self.resolve(r)?;
        let key = Self::note_key(&self.doc.sentences[index], index);
        self.notes.set(&key, text)?;
        Ok(())
    }

    /// Write the document in canonical form; returns the byte count.
    pub fn save(&mut self) -> Result<usize, SessionError> {
        let text = serialize_document(&self.doc)?;
        write_atomic(&self.path, text.as_bytes()).map_err(|source| SessionError::Write {
            path: self.path.clone(),
            source,
        })?;
        self.dirty = false;
        Ok(text.len())
    }
}
