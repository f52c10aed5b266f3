use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::conllu::Document;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationCount<T> {
    pub label: String,
    pub count: usize,
    /// Share of all labelled words, in percent.
    pub percent: T,
}

/// Size, arc-length and inventory statistics of a document.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StatsReport<T> {
    pub sentences: usize,
    /// Surface tokens: a multiword range counts once.
    pub tokens: usize,
    /// Syntactic words.
    pub words: usize,
    pub avg_tokens_per_sentence: T,
    pub avg_words_per_sentence: T,
    /// Arcs with HEAD > 0, punctuation included.
    pub arcs: usize,
    pub arc_length_total: usize,
    pub avg_arc_length: T,
    /// Same, without words whose DEPREL is `punct`.
    pub arcs_no_punct: usize,
    pub arc_length_total_no_punct: usize,
    pub avg_arc_length_no_punct: T,
    pub unique_upos: usize,
    /// Distinct `Name=Value` pairs.
    pub unique_features: usize,
    pub unique_deprels: usize,
    /// Sorted by label.
    pub relations: Vec<RelationCount<T>>,
}

impl<T: Scalar> StatsReport<T> {
    pub fn relation(&self, label: &str) -> Option<&RelationCount<T>> {
        self.relations.iter().find(|r| r.label == label)
    }
}

pub fn treebank_stats<T: Scalar>(doc: &Document) -> StatsReport<T> {
    let mut upos = BTreeSet::new();
    let mut features = BTreeSet::new();
    let mut deprels: BTreeMap<&str, usize> = BTreeMap::new();
    let (mut arcs, mut total) = (0, 0);
    let (mut arcs_np, mut total_np) = (0, 0);

    for sentence in &doc.sentences {
        for word in sentence.words() {
            let id = word.id.first();
            if let Some(u) = &word.upos {
                upos.insert(u.as_str());
            }
            features.extend(word.feats.pairs());
            if let Some(d) = &word.deprel {
                *deprels.entry(d.as_str()).or_default() += 1;
            }
            if let Some(h) = word.head.filter(|&h| h > 0) {
                let len = h.abs_diff(id);
                arcs += 1;
                total += len;
                if word.deprel.as_deref() != Some("punct") {
                    arcs_np += 1;
                    total_np += len;
                }
            }
        }
    }

    let sentences = doc.len();
    let tokens = doc.token_count();
    let words = doc.word_count();
    let labelled: usize = deprels.values().sum();
    StatsReport {
        sentences,
        tokens,
        words,
        avg_tokens_per_sentence: T::ratio_or_zero(tokens, sentences),
        avg_words_per_sentence: T::ratio_or_zero(words, sentences),
        arcs,
        arc_length_total: total,
        avg_arc_length: T::ratio_or_zero(total, arcs),
        arcs_no_punct: arcs_np,
        arc_length_total_no_punct: total_np,
        avg_arc_length_no_punct: T::ratio_or_zero(total_np, arcs_np),
        unique_upos: upos.len(),
        unique_features: features.len(),
        unique_deprels: deprels.len(),
        relations: deprels
            .into_iter()
            .map(|(label, count)| RelationCount {
                label: label.to_string(),
                count,
                percent: T::percent(count, labelled),
            })
            .collect(),
    }
}
