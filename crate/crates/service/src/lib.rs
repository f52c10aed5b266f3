//! Session state and HTTP endpoints for the annotation workbench.
//!
//! A [`Session`] holds one open document, its notes and a revision counter;
//! [`router`] exposes it over JSON.

mod atomic;
mod notes;
mod server;
mod session;

pub use notes::{NoteStore, NotesError};
pub use server::{router, serve, SharedSession};
pub use session::{
    DocumentSummary, EditRequest, Session, SessionError, SentencePayload, SentenceRef,
};
