//! In-memory model of CoNLL-U documents.
//!
//! Parsing followed by serialization reproduces the input byte for byte,
//! provided the input uses LF line endings, sorted FEATS and a single blank
//! line after every sentence. Any other valid input reaches that canonical
//! form after one pass.

mod document;
mod feats;
mod parse;
mod sentence;
mod token;
mod write;

pub use document::{Document, Section};
pub use feats::{parse_feats, FeatsError, FeatureSet};
pub use parse::{parse_document, read_document, ParseError, ParseErrorKind, ReadError};
pub use sentence::Sentence;
pub use token::{Misc, Token, TokenId};
pub use write::{serialize_document, serialize_sentence, write_document, SerializeError};

/// Column marker for an empty value.
pub const EMPTY: &str = "_";
