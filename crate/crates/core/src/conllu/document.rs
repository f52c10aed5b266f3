use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Sentence;

/// Text type of a treebank section.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Section {
    Essays,
    Newspapers,
    Instructional,
    PopularCulture,
    Biographical,
    Other,
}

impl Section {
    pub const ALL: [Section; 6] = [
        Section::Essays,
        Section::Newspapers,
        Section::Instructional,
        Section::PopularCulture,
        Section::Biographical,
        Section::Other,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::Essays => "essays",
            Section::Newspapers => "newspapers",
            Section::Instructional => "instructional",
            Section::PopularCulture => "popular culture",
            Section::Biographical => "biographical",
            Section::Other => "other",
        }
    }

    /// Guess the section from a sent_id prefix such as `ins_167`.
    ///
    /// Only the first two letters of the prefix before `_` are inspected,
    /// which accepts `ins`, `inst`, `pop`, `bio`, `ess`, `nws`, `news`, ...
    pub fn from_sent_id(sent_id: &str) -> Section {
        let prefix = sent_id
            .split(|c: char| c == '_' || c == '-' || c.is_ascii_digit())
            .next()
            .unwrap_or("")
            .to_ascii_lowercase();
        match prefix.get(..2) {
            Some("es") => Section::Essays,
            Some("nw") | Some("ne") => Section::Newspapers,
            Some("in") => Section::Instructional,
            Some("po") => Section::PopularCulture,
            Some("bi") => Section::Biographical,
            _ => Section::Other,
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Section {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace(['_', '-'], " ");
        Section::ALL
            .into_iter()
            .find(|sec| sec.name() == norm)
            .or(match norm.as_str() {
                "essay" => Some(Section::Essays),
                "newspaper" | "news" => Some(Section::Newspapers),
                "instructional texts" => Some(Section::Instructional),
                "popular culture articles" | "popular" => Some(Section::PopularCulture),
                "biographical texts" => Some(Section::Biographical),
                _ => None,
            })
            .ok_or_else(|| format!("unknown section '{s}'"))
    }
}

/// Ordered sentences, the unit of file I/O.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub sentences: Vec<Sentence>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section: Option<Section>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_path: Option<String>,
}

impl Document {
    pub fn new(sentences: Vec<Sentence>) -> Document {
        Document {
            sentences,
            section: None,
            source_path: None,
        }
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(Sentence::token_count).sum()
    }

    pub fn word_count(&self) -> usize {
        self.sentences.iter().map(Sentence::word_count).sum()
    }

    pub fn find(&self, sent_id: &str) -> Option<usize> {
        self.sentences
            .iter()
            .position(|s| s.sent_id() == Some(sent_id))
    }

    /// Append all sentences of `other`.
    pub fn extend(&mut self, other: Document) {
        self.sentences.extend(other.sentences);
    }

    /// Group sentences by section: the document's own label if set,
    /// otherwise inferred per sentence from its sent_id.
    pub fn split_by_section(&self) -> Vec<Document> {
        let mut groups: Vec<Document> = Vec::new();
        for sentence in &self.sentences {
            let section = self.section.unwrap_or_else(|| {
                sentence
                    .sent_id()
                    .map_or(Section::Other, Section::from_sent_id)
            });
            match groups.iter_mut().find(|d| d.section == Some(section)) {
                Some(doc) => doc.sentences.push(sentence.clone()),
                None => groups.push(Document {
                    sentences: vec![sentence.clone()],
                    section: Some(section),
                    source_path: self.source_path.clone(),
                }),
            }
        }
        groups.sort_by_key(|d| d.section);
        groups
    }
}
