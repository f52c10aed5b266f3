use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{FeatureSet, EMPTY};

/// ID column: a syntactic word or a multiword token range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum TokenId {
    Word(usize),
    /// Inclusive word range `first-last`, `first < last`.
    Range(usize, usize),
}

impl TokenId {
    pub fn is_word(self) -> bool {
        matches!(self, TokenId::Word(_))
    }

    pub fn word(self) -> Option<usize> {
        match self {
            TokenId::Word(i) => Some(i),
            TokenId::Range(..) => None,
        }
    }

    /// First word covered by this ID.
    pub fn first(self) -> usize {
        match self {
            TokenId::Word(i) | TokenId::Range(i, _) => i,
        }
    }

    pub fn covers(self, word: usize) -> bool {
        match self {
            TokenId::Word(i) => i == word,
            TokenId::Range(a, b) => a <= word && word <= b,
        }
    }
}

impl fmt::Display for TokenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenId::Word(i) => write!(f, "{i}"),
            TokenId::Range(a, b) => write!(f, "{a}-{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid token ID '{0}'")]
pub struct InvalidTokenId(pub String);

fn parse_index(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for TokenId {
    type Err = InvalidTokenId;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || InvalidTokenId(s.to_string());
        match s.split_once('-') {
            None => match parse_index(s) {
                Some(i) if i > 0 => Ok(TokenId::Word(i)),
                _ => Err(err()),
            },
            Some((a, b)) => match (parse_index(a), parse_index(b)) {
                (Some(a), Some(b)) if a > 0 && a < b => Ok(TokenId::Range(a, b)),
                _ => Err(err()),
            },
        }
    }
}

impl From<TokenId> for String {
    fn from(id: TokenId) -> Self {
        id.to_string()
    }
}

impl TryFrom<String> for TokenId {
    type Error = InvalidTokenId;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// MISC column items, e.g. `SpaceAfter=No`. Kept verbatim and in order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Misc(pub Vec<String>);

impl Misc {
    pub fn parse(text: &str) -> Misc {
        if text == EMPTY {
            Misc::default()
        } else {
            Misc(text.split('|').map(str::to_string).collect())
        }
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value of a `key=value` item.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().find_map(|item| {
            item.split_once('=')
                .filter(|(k, _)| *k == key)
                .map(|(_, v)| v)
        })
    }
}

impl fmt::Display for Misc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str(EMPTY)
        } else {
            f.write_str(&self.0.join("|"))
        }
    }
}

/// One line of a sentence: a syntactic word or a multiword token.
///
/// Optional columns use `None` for the `_` marker.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub id: TokenId,
    pub form: String,
    pub lemma: Option<String>,
    pub upos: Option<String>,
    pub xpos: Option<String>,
    pub feats: FeatureSet,
    pub head: Option<usize>,
    pub deprel: Option<String>,
    pub deps: Option<String>,
    pub misc: Misc,
}

impl Token {
    /// A token with the given ID and form and every other column empty.
    pub fn new(id: TokenId, form: impl Into<String>) -> Token {
        Token {
            id,
            form: form.into(),
            lemma: None,
            upos: None,
            xpos: None,
            feats: FeatureSet::new(),
            head: None,
            deprel: None,
            deps: None,
            misc: Misc::default(),
        }
    }

    pub fn is_word(&self) -> bool {
        self.id.is_word()
    }

    /// Deprel without its subtype (`nmod:poss` -> `nmod`).
    pub fn base_deprel(&self) -> Option<&str> {
        self.deprel
            .as_deref()
            .map(|d| d.split_once(':').map_or(d, |(base, _)| base))
    }
}
