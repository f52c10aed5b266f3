//! Structural and vocabulary checks run before a sentence is saved.
//!
//! Rules, in the order they are reported:
//!
//! | code | rule |
//! |------|------|
//! | `id-sequence` | word IDs are exactly `1..=n` |
//! | `root` | exactly one word has HEAD 0, and it alone has DEPREL `root` |
//! | `head-range` | every HEAD is present, in `0..=n` and not the word itself |
//! | `tree` | no cycles; every word reachable from the root |
//! | `upos` | UPOS in the schema |
//! | `deprel` | DEPREL in the schema |
//! | `feats` | FEATS names/values well formed (and whitelisted, if configured) |
//! | `range-annotation` | range lines leave HEAD, DEPREL and FEATS empty |
//! | `duplicate-sent-id` | sent_id unique within a document |

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::conllu::{Document, Sentence, TokenId};

/// The 17 universal part-of-speech tags.
pub const UNIVERSAL_UPOS: [&str; 17] = [
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM", "PART", "PRON", "PROPN",
    "PUNCT", "SCONJ", "SYM", "VERB", "X",
];

/// The 42 dependency relations used by the BOUN treebank.
pub const BOUN_DEPRELS: [&str; 42] = [
    "acl",
    "advcl",
    "advcl:cond",
    "advmod",
    "advmod:emph",
    "amod",
    "appos",
    "aux",
    "aux:q",
    "case",
    "cc",
    "cc:preconj",
    "ccomp",
    "clf",
    "compound",
    "compound:lvc",
    "compound:redup",
    "conj",
    "cop",
    "csubj",
    "dep",
    "det",
    "discourse",
    "dislocated",
    "fixed",
    "flat",
    "goeswith",
    "iobj",
    "list",
    "mark",
    "nmod",
    "nmod:poss",
    "nsubj",
    "nummod",
    "obj",
    "obl",
    "orphan",
    "parataxis",
    "punct",
    "root",
    "vocative",
    "xcomp",
];

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeatureWhitelist {
    /// Names accepted with any value.
    pub names: BTreeSet<String>,
    /// Accepted `(name, value)` pairs.
    pub pairs: BTreeSet<(String, String)>,
}

impl FeatureWhitelist {
    pub fn allows(&self, name: &str, value: &str) -> bool {
        self.names.contains(name) || self.pairs.contains(&(name.to_string(), value.to_string()))
    }
}

/// Allowed tag and label inventories.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Schema {
    pub upos: BTreeSet<String>,
    pub deprel: BTreeSet<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub features: Option<FeatureWhitelist>,
}

impl Default for Schema {
    fn default() -> Self {
        Schema {
            upos: UNIVERSAL_UPOS.iter().map(|s| s.to_string()).collect(),
            deprel: BOUN_DEPRELS.iter().map(|s| s.to_string()).collect(),
            features: None,
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SchemaError {
    #[error("line {0}: entry outside of a [section]")]
    NoSection(usize),
    #[error("line {0}: unknown section '{1}'")]
    UnknownSection(usize, String),
    #[error("the {0} set is empty")]
    EmptySet(&'static str),
    #[error("the deprel set must contain '{0}'")]
    MissingDeprel(&'static str),
}

impl Schema {
    /// Load a schema from its plain-text form:
    ///
    /// ```text
    /// [upos]
    /// NOUN
    /// [deprel]
    /// root
    /// punct
    /// [features]
    /// Case          # any value
    /// Number=Sing   # this value only
    /// ```
    ///
    /// Omitted sections keep their defaults; a `[features]` section turns
    /// on whitelisting.
    pub fn from_config(text: &str) -> Result<Schema, SchemaError> {
        enum Part {
            Upos,
            Deprel,
            Features,
        }
        let mut upos = None::<BTreeSet<String>>;
        let mut deprel = None::<BTreeSet<String>>;
        let mut features = None::<FeatureWhitelist>;
        let mut part = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                part = Some(match name.trim() {
                    "upos" => {
                        upos.get_or_insert_with(BTreeSet::new);
                        Part::Upos
                    }
                    "deprel" => {
                        deprel.get_or_insert_with(BTreeSet::new);
                        Part::Deprel
                    }
                    "features" => {
                        features.get_or_insert_with(FeatureWhitelist::default);
                        Part::Features
                    }
                    other => return Err(SchemaError::UnknownSection(i + 1, other.to_string())),
                });
                continue;
            }
            match part {
                None => return Err(SchemaError::NoSection(i + 1)),
                Some(Part::Upos) => {
                    upos.as_mut().unwrap().insert(line.to_string());
                }
                Some(Part::Deprel) => {
                    deprel.as_mut().unwrap().insert(line.to_string());
                }
                Some(Part::Features) => {
                    let wl = features.as_mut().unwrap();
                    match line.split_once('=') {
                        Some((n, v)) => {
                            wl.pairs.insert((n.trim().to_string(), v.trim().to_string()));
                        }
                        None => {
                            wl.names.insert(line.to_string());
                        }
                    }
                }
            }
        }
        let defaults = Schema::default();
        let schema = Schema {
            upos: upos.unwrap_or(defaults.upos),
            deprel: deprel.unwrap_or(defaults.deprel),
            features,
        };
        schema.check()?;
        Ok(schema)
    }

    pub fn check(&self) -> Result<(), SchemaError> {
        if self.upos.is_empty() {
            return Err(SchemaError::EmptySet("upos"));
        }
        if self.deprel.is_empty() {
            return Err(SchemaError::EmptySet("deprel"));
        }
        for required in ["root", "punct"] {
            if !self.deprel.contains(required) {
                return Err(SchemaError::MissingDeprel(required));
            }
        }
        Ok(())
    }

    /// Inverse of [`Schema::from_config`].
    pub fn to_config(&self) -> String {
        let mut out = String::from("[upos]\n");
        for u in &self.upos {
            out.push_str(u);
            out.push('\n');
        }
        out.push_str("[deprel]\n");
        for d in &self.deprel {
            out.push_str(d);
            out.push('\n');
        }
        if let Some(wl) = &self.features {
            out.push_str("[features]\n");
            for n in &wl.names {
                out.push_str(n);
                out.push('\n');
            }
            for (n, v) in &wl.pairs {
                out.push_str(&format!("{n}={v}\n"));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IssueCode {
    IdSequence,
    Root,
    HeadRange,
    Tree,
    Upos,
    Deprel,
    Feats,
    RangeAnnotation,
    DuplicateSentId,
}

impl IssueCode {
    pub fn as_str(self) -> &'static str {
        match self {
            IssueCode::IdSequence => "id-sequence",
            IssueCode::Root => "root",
            IssueCode::HeadRange => "head-range",
            IssueCode::Tree => "tree",
            IssueCode::Upos => "upos",
            IssueCode::Deprel => "deprel",
            IssueCode::Feats => "feats",
            IssueCode::RangeAnnotation => "range-annotation",
            IssueCode::DuplicateSentId => "duplicate-sent-id",
        }
    }
}

impl fmt::Display for IssueCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationIssue {
    /// Position of the sentence in its document.
    pub sentence: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sent_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub token: Option<TokenId>,
    pub code: IssueCode,
    pub message: String,
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.sent_id {
            Some(id) => write!(f, "{id}")?,
            None => write!(f, "sentence {}", self.sentence + 1)?,
        }
        if let Some(t) = self.token {
            write!(f, " token {t}")?;
        }
        write!(f, " [{}] {}", self.code, self.message)
    }
}

fn is_feature_name(name: &str) -> bool {
    let (base, layer) = match name.split_once('[') {
        Some((b, rest)) => match rest.strip_suffix(']') {
            Some(layer) => (b, Some(layer)),
            None => return false,
        },
        None => (name, None),
    };
    let mut chars = base.chars();
    chars.next().is_some_and(|c| c.is_ascii_uppercase())
        && chars.all(|c| c.is_ascii_alphanumeric())
        && layer.is_none_or(|l| {
            !l.is_empty() && l.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
        })
}

fn is_feature_value(value: &str) -> bool {
    value.split(',').all(|v| {
        let mut chars = v.chars();
        chars
            .next()
            .is_some_and(|c| c.is_ascii_uppercase() || c.is_ascii_digit())
            && chars.all(|c| c.is_ascii_alphanumeric())
    })
}

/// Check one sentence. `index` is its position in the document.
pub fn validate_sentence_at(s: &Sentence, index: usize, schema: &Schema) -> Vec<ValidationIssue> {
    let sent_id = s.sent_id().map(str::to_string);
    let mut issues = Vec::new();
    let mut push = |token: Option<TokenId>, code, message: String| {
        issues.push(ValidationIssue {
            sentence: index,
            sent_id: sent_id.clone(),
            token,
            code,
            message,
        })
    };

    let words: Vec<_> = s.words().collect();
    let n = words.len();

    // id-sequence
    let mut ids_ok = true;
    for (i, w) in words.iter().enumerate() {
        if w.id != TokenId::Word(i + 1) {
            push(
                Some(w.id),
                IssueCode::IdSequence,
                format!("word ID {} where {} was expected", w.id, i + 1),
            );
            ids_ok = false;
            break;
        }
    }
    for r in s.ranges() {
        if let TokenId::Range(_, b) = r.id {
            if b > n {
                push(
                    Some(r.id),
                    IssueCode::IdSequence,
                    format!("range {} covers missing words", r.id),
                );
                ids_ok = false;
            }
        }
    }

    // root
    let roots: Vec<_> = words.iter().filter(|w| w.head == Some(0)).collect();
    match roots.len() {
        0 => push(None, IssueCode::Root, "no word attached to the root (HEAD 0)".into()),
        1 => {
            if roots[0].deprel.as_deref() != Some("root") {
                push(
                    Some(roots[0].id),
                    IssueCode::Root,
                    "word with HEAD 0 must have DEPREL 'root'".into(),
                );
            }
        }
        k => push(
            Some(roots[1].id),
            IssueCode::Root,
            format!("{k} words attached to the root, expected exactly one"),
        ),
    }
    for w in &words {
        if w.deprel.as_deref() == Some("root") && w.head.is_some_and(|h| h != 0) {
            push(
                Some(w.id),
                IssueCode::Root,
                "DEPREL 'root' on a word whose HEAD is not 0".into(),
            );
        }
    }

    // head-range
    let mut heads_ok = ids_ok;
    if ids_ok {
        for w in &words {
            let id = w.id.first();
            match w.head {
                None => {
                    push(Some(w.id), IssueCode::HeadRange, "missing HEAD".into());
                    heads_ok = false;
                }
                Some(h) if h > n => {
                    push(
                        Some(w.id),
                        IssueCode::HeadRange,
                        format!("HEAD {h} outside 0..={n}"),
                    );
                    heads_ok = false;
                }
                Some(h) if h == id => {
                    push(Some(w.id), IssueCode::HeadRange, "HEAD points to the word itself".into());
                    heads_ok = false;
                }
                Some(_) => {}
            }
        }
    }

    // tree
    if heads_ok {
        let heads: Vec<usize> = words.iter().map(|w| w.head.unwrap_or(0)).collect();
        if let Some(word) = first_unrooted(&heads) {
            push(
                Some(TokenId::Word(word)),
                IssueCode::Tree,
                format!("word {word} is on a cycle or not reachable from the root"),
            );
        }
    }

    for w in &words {
        match w.upos.as_deref() {
            None => push(Some(w.id), IssueCode::Upos, "missing UPOS".into()),
            Some(u) if !schema.upos.contains(u) => push(
                Some(w.id),
                IssueCode::Upos,
                format!("unknown UPOS value '{u}'"),
            ),
            _ => {}
        }
    }
    for w in &words {
        match w.deprel.as_deref() {
            None => push(Some(w.id), IssueCode::Deprel, "missing DEPREL".into()),
            Some(d) if !schema.deprel.contains(d) => push(
                Some(w.id),
                IssueCode::Deprel,
                format!("unknown DEPREL value '{d}'"),
            ),
            _ => {}
        }
    }
    for w in &words {
        for (name, value) in w.feats.iter() {
            if !is_feature_name(name) || !is_feature_value(value) {
                push(
                    Some(w.id),
                    IssueCode::Feats,
                    format!("malformed feature '{name}={value}'"),
                );
            } else if let Some(wl) = &schema.features {
                if !wl.allows(name, value) {
                    push(
                        Some(w.id),
                        IssueCode::Feats,
                        format!("feature '{name}={value}' not permitted"),
                    );
                }
            }
        }
    }

    for r in s.ranges() {
        let mut filled = Vec::new();
        if r.head.is_some() {
            filled.push("HEAD");
        }
        if r.deprel.is_some() {
            filled.push("DEPREL");
        }
        if !r.feats.is_empty() {
            filled.push("FEATS");
        }
        if !filled.is_empty() {
            push(
                Some(r.id),
                IssueCode::RangeAnnotation,
                format!("multiword token has non-empty {}", filled.join(", ")),
            );
        }
    }

    issues.sort_by_key(|i| (i.token.map_or(0, TokenId::first), i.token.is_some_and(|t| t.is_word())));
    issues
}

/// The first word (1-based) that cannot reach the root by following heads.
///
/// `heads[i]` is the head of word `i + 1`; all heads must be in range.
pub fn first_unrooted(heads: &[usize]) -> Option<usize> {
    // 0 = unvisited, 1 = on current path, 2 = reaches root
    let mut state = vec![0u8; heads.len() + 1];
    state[0] = 2;
    for start in 1..=heads.len() {
        let mut path = Vec::new();
        let mut node = start;
        while state[node] == 0 {
            state[node] = 1;
            path.push(node);
            node = heads[node - 1];
        }
        if state[node] == 1 {
            return Some(start);
        }
        for p in path {
            state[p] = 2;
        }
    }
    None
}

/// Check one sentence on its own.
pub fn validate_sentence(s: &Sentence, schema: &Schema) -> Vec<ValidationIssue> {
    validate_sentence_at(s, 0, schema)
}

/// Check every sentence plus document-wide sent_id uniqueness, in document order.
pub fn validate_document(doc: &Document, schema: &Schema) -> Vec<ValidationIssue> {
    let mut issues = Vec::new();
    let mut seen: HashMap<&str, usize> = HashMap::new();
    for (i, s) in doc.sentences.iter().enumerate() {
        if let Some(id) = s.sent_id() {
            if let Some(first) = seen.insert(id, i) {
                issues.push(ValidationIssue {
                    sentence: i,
                    sent_id: Some(id.to_string()),
                    token: None,
                    code: IssueCode::DuplicateSentId,
                    message: format!("sent_id '{id}' already used by sentence {}", first + 1),
                });
                seen.insert(id, first);
            }
        }
        issues.extend(validate_sentence_at(s, i, schema));
    }
    issues
}
