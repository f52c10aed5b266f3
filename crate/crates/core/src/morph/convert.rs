use std::collections::HashMap;

use thiserror::Error;

use super::analysis::{parse_analysis, MorphemeKind, SakAnalysis};
use super::table::{ConversionRule, CATEGORY_TAGS, FEATURELESS_TAGS};
use crate::conllu::FeatureSet;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ConvertError {
    #[error("cannot parse analysis {input:?}: {reason}")]
    Syntax { input: String, reason: String },
    #[error("unknown tag '{0}'")]
    UnknownTag(String),
    #[error("line {line}: invalid UPOS mapping {content:?}")]
    UposMap { line: usize, content: String },
}

/// Result of converting one analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conversion {
    pub lemma: String,
    pub upos: String,
    pub feats: FeatureSet,
    /// Unknown tags dropped in lenient mode.
    pub dropped: Vec<String>,
}

/// Merge feature fragments given in morpheme order. When a name occurs in
/// several fragments the rightmost (outermost) morpheme's value wins.
pub fn resolve_conflicts<'a, I>(fragments: I) -> FeatureSet
where
    I: IntoIterator<Item = &'a FeatureSet>,
{
    let mut out = FeatureSet::new();
    for fragment in fragments {
        out.overlay(fragment);
    }
    out
}

const DEFAULT_UPOS: [(&str, &str); 12] = [
    ("Noun", "NOUN"),
    ("Verb", "VERB"),
    ("Adj", "ADJ"),
    ("Adverb", "ADV"),
    ("Pron", "PRON"),
    ("Pers", "PRON"),
    ("DemonsP", "PRON"),
    ("QuesP", "PRON"),
    ("ReflexP", "PRON"),
    ("PersP", "PRON"),
    ("QuantP", "PRON"),
    ("Punc", "PUNCT"),
];

/// Table-driven converter.
#[derive(Clone, Debug)]
pub struct Converter {
    rules: HashMap<String, FeatureSet>,
    upos: HashMap<String, String>,
    lenient: bool,
}

impl Default for Converter {
    fn default() -> Self {
        Converter {
            rules: ConversionRule::standard()
                .into_iter()
                .map(|r| (r.sak_tag, r.ud_features))
                .collect(),
            upos: DEFAULT_UPOS
                .iter()
                .map(|(c, u)| (c.to_string(), u.to_string()))
                .collect(),
            lenient: false,
        }
    }
}

impl Converter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Drop unknown tags (recording them in [`Conversion::dropped`]) instead of failing.
    pub fn lenient(mut self, lenient: bool) -> Self {
        self.lenient = lenient;
        self
    }

    pub fn set_upos(&mut self, category: &str, upos: &str) {
        self.upos.insert(category.to_string(), upos.to_string());
    }

    /// Override category mappings from `Category<TAB>UPOS` (or `Category=UPOS`) lines.
    pub fn load_upos_map(&mut self, text: &str) -> Result<(), ConvertError> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (cat, upos) = line
                .split_once('\t')
                .or_else(|| line.split_once('='))
                .map(|(c, u)| (c.trim(), u.trim()))
                .filter(|(c, u)| !c.is_empty() && !u.is_empty())
                .ok_or_else(|| ConvertError::UposMap {
                    line: i + 1,
                    content: raw.to_string(),
                })?;
            self.set_upos(cat, upos);
        }
        Ok(())
    }

    pub fn rule(&self, tag: &str) -> Option<&FeatureSet> {
        self.rules.get(tag)
    }

    pub fn upos_for(&self, category: &str) -> &str {
        self.upos.get(category).map_or("X", String::as_str)
    }

    fn is_passthrough(tag: &str) -> bool {
        CATEGORY_TAGS.contains(&tag) || FEATURELESS_TAGS.contains(&tag)
    }

    /// Features of one tag; `None` for category and featureless tags.
    fn fragment(&self, tag: &str, dropped: &mut Vec<String>) -> Result<Option<FeatureSet>, ConvertError> {
        if let Some(f) = self.rules.get(tag) {
            return Ok(Some(f.clone()));
        }
        if Self::is_passthrough(tag) || self.upos.contains_key(tag) {
            return Ok(None);
        }
        if self.lenient {
            dropped.push(tag.to_string());
            Ok(None)
        } else {
            Err(ConvertError::UnknownTag(tag.to_string()))
        }
    }

    /// True for a derivation that only builds a non-finite verb form
    /// (converb, participle, verbal noun) on a verbal stem.
    fn is_verb_form(&self, category: &str, tags: &[String]) -> bool {
        self.upos_for(category) == "VERB"
            && tags
                .iter()
                .any(|t| self.rules.get(t.as_str()).is_some_and(|f| f.get("VerbForm").is_some()))
    }

    /// Convert a parsed analysis.
    ///
    /// FEATS come from the morphemes after the last derivational boundary
    /// (the boundary morpheme's own tags included). The UPOS comes from the
    /// last category. The lemma is the root extended by every morpheme up to
    /// the last derivation that changes the category; derivations that keep
    /// the category (voice, ability, ...) do not change the lemma. Non-finite
    /// verb forms built on a verb stay verbs: no reset, no lemma change.
    pub fn convert(&self, analysis: &SakAnalysis) -> Result<Conversion, ConvertError> {
        let mut dropped = Vec::new();
        let mut category = analysis.root_category.as_str();
        let mut fragments = Vec::new();
        for tag in &analysis.root_tags {
            fragments.extend(self.fragment(tag, &mut dropped)?);
        }

        let mut lemma = analysis.root.clone();
        let mut pending_surface = String::new();
        for morpheme in &analysis.morphemes {
            pending_surface.push_str(&morpheme.surface);
            let mut tags = morpheme.tags.iter().map(String::as_str).peekable();
            if morpheme.kind == MorphemeKind::Derivational {
                let verb_form = self.is_verb_form(category, &morpheme.tags);
                if let Some(&first) = tags.peek() {
                    if CATEGORY_TAGS.contains(&first) || self.upos.contains_key(first) {
                        tags.next();
                        if !verb_form {
                            if first != category {
                                lemma.push_str(&pending_surface);
                                pending_surface.clear();
                            }
                            category = first;
                        }
                    }
                }
                if !verb_form {
                    fragments.clear();
                }
            }
            for tag in tags {
                fragments.extend(self.fragment(tag, &mut dropped)?);
            }
        }

        Ok(Conversion {
            lemma,
            upos: self.upos_for(category).to_string(),
            feats: resolve_conflicts(&fragments),
            dropped,
        })
    }

    /// Parse and convert one analysis line.
    pub fn convert_str(&self, line: &str) -> Result<Conversion, ConvertError> {
        self.convert(&parse_analysis(line)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conllu::parse_feats;

    fn feats(s: &str) -> FeatureSet {
        parse_feats(s).unwrap()
    }

    #[test]
    fn first_person_singular() {
        let c = Converter::new().convert_str("ben[Pron]+[A1sg]").unwrap();
        assert_eq!(c.feats.to_string(), "Number=Sing|Person=1");
    }

    #[test]
    fn imperative_verb() {
        let c = Converter::new()
            .convert_str("alın[Verb]+[Pos]+[Imp]+[A2sg]")
            .unwrap();
        assert_eq!(c.upos, "VERB");
        assert_eq!(c.lemma, "alın");
        assert_eq!(c.feats.to_string(), "Mood=Imp|Number=Sing|Person=2|Polarity=Pos");
    }

    #[test]
    fn past_then_narrative() {
        let c = Converter::new().convert_str("gel[Verb]+[Pos]+[Past]+[Narr]+[A3sg]").unwrap();
        assert_eq!(
            c.feats.to_string(),
            "Aspect=Perf|Evident=Nfh|Number=Sing|Person=3|Polarity=Pos|Tense=Past"
        );
    }

    #[test]
    fn resolve_rightmost_wins() {
        assert_eq!(resolve_conflicts(&[feats("Tense=Past")]), feats("Tense=Past"));
        assert_eq!(
            resolve_conflicts(&[feats("Aspect=Perf|Tense=Past|Evident=Fh"), feats("Tense=Past|Evident=Nfh")]),
            feats("Aspect=Perf|Evident=Nfh|Tense=Past")
        );
        assert_eq!(
            resolve_conflicts(&[feats("Number=Sing"), feats("Number=Plur")]),
            feats("Number=Plur")
        );
        assert!(resolve_conflicts(&[]).is_empty());
    }

    #[test]
    fn derivation_resets_features_and_changes_upos() {
        let c = Converter::new()
            .convert_str("al[Adj]&[Noun]+[A3sg]+Hn[P2sg]+[Nom]")
            .unwrap();
        assert_eq!(c.upos, "NOUN");
        assert_eq!(c.lemma, "al");
        assert_eq!(
            c.feats.to_string(),
            "Case=Nom|Number=Sing|Number[psor]=Sing|Person=3|Person[psor]=2"
        );

        let pass = Converter::new()
            .convert_str("al[Verb]&Hn[Verb+Pass]+[Pos]+[Imp]+[A2sg]")
            .unwrap();
        assert_eq!(pass.lemma, "al");
        assert_eq!(
            pass.feats.to_string(),
            "Mood=Imp|Number=Sing|Person=2|Polarity=Pos|Voice=Pass"
        );

        let dropped = Converter::new()
            .convert_str("gel[Verb]+[Pos]+[A3sg]&Hş[Noun]+[Acc]")
            .unwrap();
        assert_eq!(dropped.feats.to_string(), "Case=Acc");
        assert_eq!(dropped.lemma, "gelHş");
    }

    #[test]
    fn unknown_tags() {
        let strict = Converter::new();
        assert_eq!(
            strict.convert_str("Ali[Noun+Prop]+[A3sg]"),
            Err(ConvertError::UnknownTag("Prop".into()))
        );
        let lenient = Converter::new().lenient(true);
        let c = lenient.convert_str("Ali[Noun+Prop]+[A3sg]").unwrap();
        assert_eq!(c.dropped, vec!["Prop"]);
        assert_eq!(c.feats.to_string(), "Number=Sing|Person=3");
    }

    #[test]
    fn category_map_override() {
        let mut conv = Converter::new();
        assert_eq!(conv.convert_str("ve[Conj]").unwrap().upos, "X");
        conv.load_upos_map("Conj\tCCONJ\n# comment\nNum=NUM\n").unwrap();
        assert_eq!(conv.convert_str("ve[Conj]").unwrap().upos, "CCONJ");
        assert_eq!(conv.convert_str("iki[Num]+[Card]").unwrap().upos, "NUM");
        assert!(conv.load_upos_map("broken line").is_err());
    }

    #[test]
    fn punctuation_and_pronoun_categories() {
        let conv = Converter::new();
        assert_eq!(conv.convert_str(".[Punc]").unwrap().upos, "PUNCT");
        let sen = conv.convert_str("sen[Pron]+[PersP]+[A2sg]+[Pnon]+[Acc]").unwrap();
        assert_eq!(sen.upos, "PRON");
        assert_eq!(sen.feats.to_string(), "Case=Acc|Number=Sing|Person=2|PronType=Prs");
    }
}
