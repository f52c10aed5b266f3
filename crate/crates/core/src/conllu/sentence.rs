use serde::{Deserialize, Serialize};

use super::{Token, TokenId};

/// Ordered tokens plus the comment lines that precede them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sentence {
    /// Raw comment lines including the leading `#`.
    pub comments: Vec<String>,
    pub tokens: Vec<Token>,
    /// Annotator note. Not part of the CoNLL-U text.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Sentence {
    pub fn new(tokens: Vec<Token>) -> Sentence {
        Sentence {
            comments: Vec::new(),
            tokens,
            note: None,
        }
    }

    /// Value of a `# key = value` comment.
    pub fn meta(&self, key: &str) -> Option<&str> {
        self.comments.iter().find_map(|line| {
            let (k, v) = line.strip_prefix('#')?.split_once('=')?;
            (k.trim() == key).then(|| v.trim())
        })
    }

    pub fn sent_id(&self) -> Option<&str> {
        self.meta("sent_id")
    }

    pub fn text(&self) -> Option<&str> {
        self.meta("text")
    }

    /// Free translation. Indexed the same way as `text`.
    pub fn trans(&self) -> Option<&str> {
        self.meta("trans")
    }

    /// Replace the value of a `# key = value` comment, or append one.
    pub fn set_meta(&mut self, key: &str, value: &str) {
        let line = format!("# {key} = {value}");
        let existing = self.comments.iter().position(|line| {
            line.strip_prefix('#')
                .and_then(|l| l.split_once('='))
                .is_some_and(|(k, _)| k.trim() == key)
        });
        match existing {
            Some(i) => self.comments[i] = line,
            None => self.comments.push(line),
        }
    }

    /// Syntactic words (single-index lines) in order.
    pub fn words(&self) -> impl Iterator<Item = &Token> {
        self.tokens.iter().filter(|t| t.is_word())
    }

    pub fn ranges(&self) -> impl Iterator<Item = &Token> {
        self.tokens.iter().filter(|t| !t.is_word())
    }

    pub fn word_count(&self) -> usize {
        self.words().count()
    }

    /// Surface tokens: range lines count once and the words they cover are skipped.
    pub fn token_count(&self) -> usize {
        let words = self.word_count();
        let covered: usize = self
            .ranges()
            .map(|t| match t.id {
                TokenId::Range(a, b) => b - a + 1,
                TokenId::Word(_) => 0,
            })
            .sum();
        let ranges = self.ranges().count();
        words - covered + ranges
    }

    /// Position of a token in `tokens`.
    pub fn position(&self, id: TokenId) -> Option<usize> {
        self.tokens.iter().position(|t| t.id == id)
    }

    pub fn word(&self, index: usize) -> Option<&Token> {
        self.position(TokenId::Word(index)).map(|i| &self.tokens[i])
    }

    pub fn word_mut(&mut self, index: usize) -> Option<&mut Token> {
        self.position(TokenId::Word(index))
            .map(move |i| &mut self.tokens[i])
    }

    /// HEAD column of every word, in word order.
    pub fn heads(&self) -> Vec<Option<usize>> {
        self.words().map(|t| t.head).collect()
    }

    /// Surface text rebuilt from forms and `SpaceAfter=No`.
    pub fn surface_text(&self) -> String {
        let mut out = String::new();
        let mut skip_until = 0;
        for token in &self.tokens {
            match token.id {
                TokenId::Word(i) if i <= skip_until => continue,
                TokenId::Range(_, b) => skip_until = b,
                TokenId::Word(_) => {}
            }
            out.push_str(&token.form);
            if token.misc.get("SpaceAfter") != Some("No") {
                out.push(' ');
            }
        }
        out.truncate(out.trim_end().len());
        out
    }
}
