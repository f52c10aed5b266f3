//! Token edits that keep word IDs contiguous and heads pointing at the
//! right words.
//!
//! Every operation checks its preconditions before touching the sentence,
//! so a failed edit leaves the sentence unchanged.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::conllu::{parse_feats, FeatureSet, Misc, Sentence, Token, TokenId, EMPTY};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EditError {
    #[error("no token {0}")]
    NoSuchToken(TokenId),
    #[error("token {0} is a multiword range")]
    RangeToken(TokenId),
    #[error("split parts must be non-empty")]
    EmptyPart,
    #[error("parts '{0}' + '{1}' do not spell '{2}'")]
    NotConcatenative(String, String, String),
    #[error("range {0} covers only one of the words to join")]
    SplitsRange(TokenId),
    #[error("words {0} and {1} head each other")]
    MutualHeads(usize, usize),
    #[error("unknown field '{0}'")]
    UnknownField(String),
    #[error("invalid HEAD '{0}'")]
    InvalidHead(String),
    #[error("HEAD {head} outside 0..={words}")]
    HeadOutOfRange { head: usize, words: usize },
    #[error("HEAD of word {0} cannot point to itself")]
    SelfLoop(usize),
    #[error("invalid value for {field}: {reason}")]
    InvalidValue { field: String, reason: String },
}

/// Editable column, or a single feature inside FEATS.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Form,
    Lemma,
    Upos,
    Xpos,
    Feats,
    Head,
    Deprel,
    Deps,
    Misc,
    Feature(String),
}

impl FromStr for Field {
    type Err = EditError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "FORM" => Field::Form,
            "LEMMA" => Field::Lemma,
            "UPOS" => Field::Upos,
            "XPOS" => Field::Xpos,
            "FEATS" => Field::Feats,
            "HEAD" => Field::Head,
            "DEPREL" => Field::Deprel,
            "DEPS" => Field::Deps,
            "MISC" => Field::Misc,
            "ID" => return Err(EditError::UnknownField(s.to_string())),
            name if name.starts_with(|c: char| c.is_ascii_uppercase())
                && !name.contains(['=', '|'])
                && !name.contains(char::is_whitespace) =>
            {
                Field::Feature(name.to_string())
            }
            other => return Err(EditError::UnknownField(other.to_string())),
        })
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Form => "FORM",
            Field::Lemma => "LEMMA",
            Field::Upos => "UPOS",
            Field::Xpos => "XPOS",
            Field::Feats => "FEATS",
            Field::Head => "HEAD",
            Field::Deprel => "DEPREL",
            Field::Deps => "DEPS",
            Field::Misc => "MISC",
            Field::Feature(name) => name,
        })
    }
}

/// A single edit, as sent by the annotation UI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Edit {
    SetField {
        id: TokenId,
        field: String,
        value: String,
    },
    Split {
        id: usize,
        first: String,
        second: String,
        /// Allow parts that do not concatenate to the original form.
        #[serde(default)]
        free_form: bool,
    },
    Join {
        id: usize,
    },
}

impl Edit {
    pub fn apply(&self, s: &mut Sentence) -> Result<(), EditError> {
        match self {
            Edit::SetField { id, field, value } => set_field(s, *id, &field.parse()?, value),
            Edit::Split {
                id,
                first,
                second,
                free_form,
            } => split_token(s, *id, first, second, *free_form),
            Edit::Join { id } => join_tokens(s, *id),
        }
    }
}

fn word_position(s: &Sentence, id: usize) -> Result<usize, EditError> {
    s.position(TokenId::Word(id))
        .ok_or(EditError::NoSuchToken(TokenId::Word(id)))
}

/// Split word `id` into two words.
///
/// The first part keeps the annotation (except MISC) and stays in place;
/// the second part becomes word `id + 1`, headed by the first part with
/// UPOS `X`, DEPREL `dep`, and takes the original MISC. Later words and
/// heads shift up by one, and ranges covering `id` grow by one.
pub fn split_token(
    s: &mut Sentence,
    id: usize,
    first: &str,
    second: &str,
    free_form: bool,
) -> Result<(), EditError> {
    let pos = word_position(s, id)?;
    if first.is_empty() || second.is_empty() {
        return Err(EditError::EmptyPart);
    }
    let original = &s.tokens[pos];
    if !free_form && format!("{first}{second}") != original.form {
        return Err(EditError::NotConcatenative(
            first.into(),
            second.into(),
            original.form.clone(),
        ));
    }

    for token in &mut s.tokens {
        token.head = token.head.map(|h| if h > id { h + 1 } else { h });
        token.id = match token.id {
            TokenId::Word(i) if i > id => TokenId::Word(i + 1),
            TokenId::Range(a, b) if a > id => TokenId::Range(a + 1, b + 1),
            TokenId::Range(a, b) if b >= id => TokenId::Range(a, b + 1),
            other => other,
        };
    }

    let head_part = &mut s.tokens[pos];
    let misc = std::mem::take(&mut head_part.misc);
    head_part.form = first.to_string();
    let mut tail = Token::new(TokenId::Word(id + 1), second);
    tail.head = Some(id);
    tail.upos = Some("X".into());
    tail.deprel = Some("dep".into());
    tail.misc = misc;
    s.tokens.insert(pos + 1, tail);
    Ok(())
}

/// Merge words `id` and `id + 1`.
///
/// The merged word keeps the annotation of whichever word dominates the
/// other (word `id` when neither does) and the MISC of word `id + 1`. Dependents
/// of either word attach to the merged word.
pub fn join_tokens(s: &mut Sentence, id: usize) -> Result<(), EditError> {
    let left = word_position(s, id)?;
    let next = id + 1;
    let right = word_position(s, next)?;
    for r in s.ranges() {
        if r.id.covers(id) != r.id.covers(next) {
            return Err(EditError::SplitsRange(r.id));
        }
        if let TokenId::Range(a, b) = r.id {
            if a == id && b == next {
                return Err(EditError::SplitsRange(r.id));
            }
        }
    }
    let (left_head, right_head) = (s.tokens[left].head, s.tokens[right].head);
    if left_head == Some(next) && right_head == Some(id) {
        return Err(EditError::MutualHeads(id, next));
    }

    let keep_right = dominates(s, next, id);
    let right_token = s.tokens.remove(right);
    let left_token = &mut s.tokens[left];
    let form = format!("{}{}", left_token.form, right_token.form);
    let misc = right_token.misc.clone();
    if keep_right {
        *left_token = Token {
            id: TokenId::Word(id),
            ..right_token
        };
    }
    left_token.form = form;
    left_token.misc = misc;

    for token in &mut s.tokens {
        token.head = token.head.map(|h| if h > id { h - 1 } else { h });
        token.id = match token.id {
            TokenId::Word(i) if i > id => TokenId::Word(i - 1),
            TokenId::Range(a, b) if a > id => TokenId::Range(a - 1, b - 1),
            TokenId::Range(a, b) if b > id => TokenId::Range(a, b - 1),
            other => other,
        };
    }
    Ok(())
}

/// True when `ancestor` lies on the head chain above `word`.
fn dominates(s: &Sentence, ancestor: usize, word: usize) -> bool {
    let mut node = word;
    for _ in 0..=s.word_count() {
        match s.word(node).and_then(|t| t.head) {
            Some(h) if h == ancestor => return true,
            Some(h) if h != 0 => node = h,
            _ => return false,
        }
    }
    false
}

fn optional(value: &str) -> Option<String> {
    (!value.is_empty() && value != EMPTY).then(|| value.to_string())
}

fn check_column(field: &Field, value: &str) -> Result<(), EditError> {
    if value.contains(['\t', '\n', '\r']) {
        return Err(EditError::InvalidValue {
            field: field.to_string(),
            reason: "contains a tab or line break".into(),
        });
    }
    Ok(())
}

/// Set one column (or one feature) of a token.
///
/// `_` or an empty string clears optional columns; for a feature it removes
/// the feature. HEAD is range-checked here, but cycles are left to validation.
pub fn set_field(s: &mut Sentence, id: TokenId, field: &Field, value: &str) -> Result<(), EditError> {
    let words = s.word_count();
    let pos = s.position(id).ok_or(EditError::NoSuchToken(id))?;
    check_column(field, value)?;
    let token = &mut s.tokens[pos];
    match field {
        Field::Form => {
            if value.is_empty() {
                return Err(EditError::InvalidValue {
                    field: "FORM".into(),
                    reason: "empty".into(),
                });
            }
            token.form = value.to_string();
        }
        Field::Lemma => token.lemma = optional(value),
        Field::Upos => token.upos = optional(value),
        Field::Xpos => token.xpos = optional(value),
        Field::Deprel => token.deprel = optional(value),
        Field::Deps => token.deps = optional(value),
        Field::Misc => token.misc = Misc::parse(if value.is_empty() { EMPTY } else { value }),
        Field::Feats => {
            token.feats = parse_feats(if value.is_empty() { EMPTY } else { value })
                .map_err(|e| EditError::InvalidValue {
                    field: "FEATS".into(),
                    reason: e.to_string(),
                })?;
        }
        Field::Feature(name) => {
            let mut feats: FeatureSet = token.feats.clone();
            match optional(value) {
                None => {
                    feats.remove(name);
                }
                Some(v) => {
                    feats.insert(name.as_str(), v).map_err(|e| EditError::InvalidValue {
                        field: name.clone(),
                        reason: e.to_string(),
                    })?;
                }
            }
            token.feats = feats;
        }
        Field::Head => {
            let head = match optional(value) {
                None => None,
                Some(v) => {
                    let h: usize = v
                        .parse()
                        .map_err(|_| EditError::InvalidHead(v.clone()))?;
                    if h > words {
                        return Err(EditError::HeadOutOfRange { head: h, words });
                    }
                    if TokenId::Word(h) == id {
                        return Err(EditError::SelfLoop(h));
                    }
                    Some(h)
                }
            };
            if !id.is_word() {
                return Err(EditError::RangeToken(id));
            }
            token.head = head;
        }
    }
    Ok(())
}
