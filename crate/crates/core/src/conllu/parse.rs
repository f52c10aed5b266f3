use std::path::Path;

use thiserror::Error;

use super::{parse_feats, Document, FeatsError, Misc, Sentence, Token, TokenId, EMPTY};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected 10 tab-separated columns, found {0}")]
    ColumnCount(usize),
    #[error("invalid ID '{0}'")]
    InvalidId(String),
    #[error("empty nodes (decimal IDs) are not supported")]
    EmptyNode,
    #[error("ID {found} out of sequence, expected {expected}")]
    OutOfSequence { expected: usize, found: String },
    #[error("range {0} overlaps the previous range")]
    RangeOverlap(String),
    #[error("range {0} extends past the last word of the sentence")]
    RangeBeyondSentence(String),
    #[error("column {0} is empty")]
    EmptyColumn(&'static str),
    #[error("invalid HEAD '{0}'")]
    InvalidHead(String),
    #[error("invalid FEATS: {0}")]
    Feats(#[from] FeatsError),
    #[error("comment line after token lines")]
    CommentAfterTokens,
    #[error("sentence has comments but no token lines")]
    NoTokens,
}

/// A malformed line, with its 1-based line number.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}: {content:?}")]
pub struct ParseError {
    pub line: usize,
    pub content: String,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
}

const COLUMNS: [&str; 10] = [
    "ID", "FORM", "LEMMA", "UPOS", "XPOS", "FEATS", "HEAD", "DEPREL", "DEPS", "MISC",
];

struct Pending {
    sentence: Sentence,
    start_line: usize,
    next_word: usize,
    last_range_end: usize,
    open_ranges: Vec<(usize, String)>,
}

impl Pending {
    fn new(line: usize) -> Pending {
        Pending {
            sentence: Sentence::default(),
            start_line: line,
            next_word: 1,
            last_range_end: 0,
            open_ranges: Vec::new(),
        }
    }

    fn is_empty(&self) -> bool {
        self.sentence.comments.is_empty() && self.sentence.tokens.is_empty()
    }

    fn finish(self) -> Result<Sentence, ParseError> {
        if self.sentence.tokens.is_empty() {
            return Err(ParseError {
                line: self.start_line,
                content: self.sentence.comments.first().cloned().unwrap_or_default(),
                kind: ParseErrorKind::NoTokens,
            });
        }
        let words = self.next_word - 1;
        if let Some((line, content)) = self.open_ranges.into_iter().find(|(_, c)| {
            c.split('\t')
                .next()
                .and_then(|id| id.parse::<TokenId>().ok())
                .is_some_and(|id| matches!(id, TokenId::Range(_, b) if b > words))
        }) {
            let id = content.split('\t').next().unwrap_or("").to_string();
            return Err(ParseError {
                line,
                content,
                kind: ParseErrorKind::RangeBeyondSentence(id),
            });
        }
        Ok(self.sentence)
    }
}

/// Parse CoNLL-U text. LF and CRLF line endings are accepted.
pub fn parse_document(input: &str) -> Result<Document, ParseError> {
    let input = input.strip_prefix('\u{feff}').unwrap_or(input);
    let mut sentences = Vec::new();
    let mut pending = Pending::new(1);

    for (i, raw) in input.split('\n').enumerate() {
        let line_no = i + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() {
            if !pending.is_empty() {
                let done = std::mem::replace(&mut pending, Pending::new(line_no + 1));
                sentences.push(done.finish()?);
            } else {
                pending.start_line = line_no + 1;
            }
            continue;
        }
        let error = |kind| ParseError {
            line: line_no,
            content: line.to_string(),
            kind,
        };
        if line.starts_with('#') {
            if !pending.sentence.tokens.is_empty() {
                return Err(error(ParseErrorKind::CommentAfterTokens));
            }
            pending.sentence.comments.push(line.to_string());
            continue;
        }
        let token = parse_token_line(line).map_err(error)?;
        match token.id {
            TokenId::Word(n) => {
                if n != pending.next_word {
                    return Err(error(ParseErrorKind::OutOfSequence {
                        expected: pending.next_word,
                        found: n.to_string(),
                    }));
                }
                pending.next_word += 1;
            }
            TokenId::Range(a, b) => {
                if a <= pending.last_range_end {
                    return Err(error(ParseErrorKind::RangeOverlap(token.id.to_string())));
                }
                if a != pending.next_word {
                    return Err(error(ParseErrorKind::OutOfSequence {
                        expected: pending.next_word,
                        found: token.id.to_string(),
                    }));
                }
                pending.last_range_end = b;
                pending.open_ranges.push((line_no, line.to_string()));
            }
        }
        pending.sentence.tokens.push(token);
    }
    if !pending.is_empty() {
        sentences.push(pending.finish()?);
    }
    Ok(Document::new(sentences))
}

fn optional(col: &str) -> Option<String> {
    (col != EMPTY).then(|| col.to_string())
}

fn parse_token_line(line: &str) -> Result<Token, ParseErrorKind> {
    let cols: Vec<&str> = line.split('\t').collect();
    if cols.len() != 10 {
        return Err(ParseErrorKind::ColumnCount(cols.len()));
    }
    if let Some(i) = cols.iter().position(|c| c.is_empty()) {
        return Err(ParseErrorKind::EmptyColumn(COLUMNS[i]));
    }
    if cols[0].contains('.') {
        return Err(ParseErrorKind::EmptyNode);
    }
    let id: TokenId = cols[0]
        .parse()
        .map_err(|_| ParseErrorKind::InvalidId(cols[0].to_string()))?;
    let head = match cols[6] {
        EMPTY => None,
        h if h.bytes().all(|b| b.is_ascii_digit()) => Some(
            h.parse()
                .map_err(|_| ParseErrorKind::InvalidHead(h.to_string()))?,
        ),
        h => return Err(ParseErrorKind::InvalidHead(h.to_string())),
    };
    Ok(Token {
        id,
        form: cols[1].to_string(),
        lemma: optional(cols[2]),
        upos: optional(cols[3]),
        xpos: optional(cols[4]),
        feats: parse_feats(cols[5])?,
        head,
        deprel: optional(cols[7]),
        deps: optional(cols[8]),
        misc: Misc::parse(cols[9]),
    })
}

/// Read and parse a file, recording its path on the document.
pub fn read_document(path: impl AsRef<Path>) -> Result<Document, ReadError> {
    let path = path.as_ref();
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| ReadError::Io {
        path: shown.clone(),
        source,
    })?;
    let mut doc = parse_document(&text).map_err(|source| ReadError::Parse {
        path: shown.clone(),
        source,
    })?;
    doc.source_path = Some(shown);
    Ok(doc)
}
