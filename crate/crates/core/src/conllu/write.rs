use std::fmt::Write as _;
use std::io;

use thiserror::Error;

use super::{Document, Sentence, Token, TokenId, EMPTY};

/// A token that cannot be written as a valid CoNLL-U line.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("sentence {sentence}, token {token}: {message}")]
pub struct SerializeError {
    pub sentence: usize,
    pub token: String,
    pub message: String,
}

fn check_column(name: &str, value: &str) -> Result<(), String> {
    if value.is_empty() {
        return Err(format!("{name} is empty"));
    }
    if value.contains(['\t', '\n', '\r']) {
        return Err(format!("{name} contains a tab or line break"));
    }
    Ok(())
}

fn check_token(token: &Token, expected_word: usize) -> Result<(), String> {
    match token.id {
        TokenId::Word(n) if n != expected_word => {
            return Err(format!("word ID {n} out of sequence, expected {expected_word}"))
        }
        TokenId::Range(a, b) if a != expected_word || a >= b => {
            return Err(format!("range {a}-{b} does not start at word {expected_word}"))
        }
        _ => {}
    }
    check_column("FORM", &token.form)?;
    for (name, col) in [
        ("LEMMA", &token.lemma),
        ("UPOS", &token.upos),
        ("XPOS", &token.xpos),
        ("DEPREL", &token.deprel),
        ("DEPS", &token.deps),
    ] {
        if let Some(v) = col {
            check_column(name, v)?;
        }
    }
    for item in &token.misc.0 {
        if item.contains(['\t', '\n', '\r', '|']) {
            return Err(format!("MISC item {item:?} contains a separator"));
        }
    }
    if token.misc.0.len() == 1 && token.misc.0[0].is_empty() {
        return Err("MISC is empty".into());
    }
    Ok(())
}

fn write_token(out: &mut String, token: &Token) {
    let opt = |v: &Option<String>| v.as_deref().unwrap_or(EMPTY).to_string();
    let head = token.head.map_or_else(|| EMPTY.to_string(), |h| h.to_string());
    let _ = writeln!(
        out,
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        token.id,
        token.form,
        opt(&token.lemma),
        opt(&token.upos),
        opt(&token.xpos),
        token.feats,
        head,
        opt(&token.deprel),
        opt(&token.deps),
        token.misc,
    );
}

fn write_sentence_into(
    out: &mut String,
    sentence: &Sentence,
    index: usize,
) -> Result<(), SerializeError> {
    if sentence.tokens.is_empty() {
        return Err(SerializeError {
            sentence: index,
            token: "-".into(),
            message: "sentence has no tokens".into(),
        });
    }
    let mut next_word = 1;
    let mut range_end = 0;
    for line in &sentence.comments {
        if !line.starts_with('#') || line.contains(['\n', '\r']) {
            return Err(SerializeError {
                sentence: index,
                token: "-".into(),
                message: format!("invalid comment line {line:?}"),
            });
        }
        out.push_str(line);
        out.push('\n');
    }
    for token in &sentence.tokens {
        let fail = |message| SerializeError {
            sentence: index,
            token: token.id.to_string(),
            message,
        };
        check_token(token, next_word).map_err(fail)?;
        match token.id {
            TokenId::Word(_) => next_word += 1,
            TokenId::Range(a, b) => {
                if a <= range_end {
                    return Err(fail("overlapping range".into()));
                }
                range_end = b;
            }
        }
        write_token(out, token);
    }
    if range_end >= next_word {
        return Err(SerializeError {
            sentence: index,
            token: format!("-{range_end}"),
            message: "range extends past the last word".into(),
        });
    }
    out.push('\n');
    Ok(())
}

/// Serialize one sentence, followed by its blank separator line.
pub fn serialize_sentence(sentence: &Sentence) -> Result<String, SerializeError> {
    let mut out = String::new();
    write_sentence_into(&mut out, sentence, 0)?;
    Ok(out)
}

/// Serialize a document in canonical form: LF endings, sorted FEATS,
/// one blank line after each sentence.
pub fn serialize_document(doc: &Document) -> Result<String, SerializeError> {
    let mut out = String::new();
    for (i, sentence) in doc.sentences.iter().enumerate() {
        write_sentence_into(&mut out, sentence, i)?;
    }
    Ok(out)
}

pub fn write_document<W: io::Write>(doc: &Document, mut writer: W) -> io::Result<usize> {
    let text = serialize_document(doc).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
    writer.write_all(text.as_bytes())?;
    Ok(text.len())
}
