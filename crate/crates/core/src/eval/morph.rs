use std::collections::HashSet;

use serde::Serialize;

use super::EvalError;
use crate::conllu::{Document, Token};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MorphCounts {
    pub words: usize,
    /// Words whose FEATS equal gold exactly.
    pub exact_words: usize,
    pub gold_features: usize,
    pub pred_features: usize,
    /// Feature pairs present in both (true positives).
    pub matched_features: usize,
}

impl MorphCounts {
    pub fn false_positives(&self) -> usize {
        self.pred_features - self.matched_features
    }

    pub fn false_negatives(&self) -> usize {
        self.gold_features - self.matched_features
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MorphScores<T> {
    pub token_accuracy: T,
    pub precision: T,
    pub recall: T,
    pub f1: T,
    pub counts: MorphCounts,
}

/// FEATS accuracy per word plus pooled feature precision, recall and F1.
/// Both documents must have the same words.
pub fn morph_scores<T: Scalar>(gold: &Document, pred: &Document) -> Result<MorphScores<T>, EvalError> {
    if gold.len() != pred.len() {
        return Err(EvalError::SentenceCount {
            gold: gold.len(),
            pred: pred.len(),
        });
    }
    let mut c = MorphCounts::default();
    for (i, (gs, ps)) in gold.sentences.iter().zip(&pred.sentences).enumerate() {
        let g: Vec<&Token> = gs.words().collect();
        let p: Vec<&Token> = ps.words().collect();
        for k in 0..g.len().max(p.len()) {
            match (g.get(k), p.get(k)) {
                (Some(gw), Some(pw)) if gw.form == pw.form => {
                    c.words += 1;
                    if gw.feats == pw.feats {
                        c.exact_words += 1;
                    }
                    let gold_pairs: HashSet<String> = gw.feats.pairs().collect();
                    c.gold_features += gold_pairs.len();
                    c.pred_features += pw.feats.len();
                    c.matched_features += pw.feats.pairs().filter(|p| gold_pairs.contains(p)).count();
                }
                _ => {
                    return Err(EvalError::Tokenization {
                        sentence: i,
                        word: k + 1,
                    })
                }
            }
        }
    }
    if c.words == 0 {
        return Err(EvalError::Empty);
    }
    // No features anywhere: nothing was missed and nothing was invented.
    let (precision, recall) = if c.gold_features == 0 && c.pred_features == 0 {
        (T::one(), T::one())
    } else {
        (
            T::ratio_or_zero(c.matched_features, c.pred_features),
            T::ratio_or_zero(c.matched_features, c.gold_features),
        )
    };
    Ok(MorphScores {
        token_accuracy: T::ratio(c.exact_words, c.words),
        precision,
        recall,
        f1: T::harmonic_mean(precision, recall),
        counts: c,
    })
}
