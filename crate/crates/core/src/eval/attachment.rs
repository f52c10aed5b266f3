use std::collections::HashMap;

use serde::Serialize;

use super::{EvalError, EvalOptions};
use crate::conllu::{Document, Sentence, Token};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Prf<T> {
    pub precision: T,
    pub recall: T,
    pub f1: T,
}

impl<T: Scalar> Prf<T> {
    fn from_counts(correct: usize, predicted: usize, gold: usize) -> Prf<T> {
        let precision = T::ratio_or_zero(correct, predicted);
        let recall = T::ratio_or_zero(correct, gold);
        Prf {
            precision,
            recall,
            f1: T::harmonic_mean(precision, recall),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AttachmentCounts {
    pub gold_words: usize,
    pub pred_words: usize,
    /// Word pairs with identical character spans.
    pub aligned_words: usize,
    pub correct_heads: usize,
    pub correct_labelled: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AttachmentScores<T> {
    pub uas: Prf<T>,
    pub las: Prf<T>,
    pub counts: AttachmentCounts,
}

fn spans(words: &[&Token]) -> (String, Vec<(usize, usize)>) {
    let mut text = String::new();
    let mut out = Vec::with_capacity(words.len());
    let mut offset = 0;
    for w in words {
        let form: String = w.form.chars().filter(|c| !c.is_whitespace()).collect();
        let len = form.chars().count();
        out.push((offset, offset + len));
        offset += len;
        text.push_str(&form);
    }
    (text, out)
}

/// Pairs of (gold word index, predicted word index), 0-based, whose forms
/// cover the same characters of the sentence text.
pub fn align_words(
    gold: &Sentence,
    pred: &Sentence,
    sentence: usize,
) -> Result<Vec<(usize, usize)>, EvalError> {
    let g: Vec<&Token> = gold.words().collect();
    let p: Vec<&Token> = pred.words().collect();
    let (gt, gs) = spans(&g);
    let (pt, ps) = spans(&p);
    if gt != pt {
        return Err(EvalError::TextMismatch(sentence));
    }
    let index: HashMap<(usize, usize), usize> = ps.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    Ok(gs
        .iter()
        .enumerate()
        .filter_map(|(i, s)| index.get(s).map(|&j| (i, j)))
        .collect())
}

fn check_documents(gold: &Document, pred: &Document) -> Result<(), EvalError> {
    if gold.len() != pred.len() {
        return Err(EvalError::SentenceCount {
            gold: gold.len(),
            pred: pred.len(),
        });
    }
    if gold.word_count() == 0 && pred.word_count() == 0 {
        return Err(EvalError::Empty);
    }
    Ok(())
}

fn counted(t: &Token, options: EvalOptions) -> bool {
    !(options.ignore_punct && t.deprel.as_deref() == Some("punct"))
}

/// UAS and LAS as precision/recall/F1 over character-aligned words.
///
/// With identical tokenization all three equal plain accuracy. Labels are
/// compared as full strings, subtypes included.
pub fn attachment_scores<T: Scalar>(
    gold: &Document,
    pred: &Document,
    options: EvalOptions,
) -> Result<AttachmentScores<T>, EvalError> {
    check_documents(gold, pred)?;
    let mut c = AttachmentCounts::default();
    for (i, (gs, ps)) in gold.sentences.iter().zip(&pred.sentences).enumerate() {
        let g: Vec<&Token> = gs.words().collect();
        let p: Vec<&Token> = ps.words().collect();
        let pairs = align_words(gs, ps, i)?;
        c.gold_words += g.iter().filter(|t| counted(t, options)).count();
        c.pred_words += p.iter().filter(|t| counted(t, options)).count();
        c.aligned_words += pairs.len();
        // gold word id (1-based) -> predicted word id (1-based)
        let mut to_pred = vec![None; g.len() + 1];
        to_pred[0] = Some(0);
        for &(gi, pi) in &pairs {
            to_pred[gi + 1] = Some(pi + 1);
        }
        for (gi, pi) in pairs {
            let (gw, pw) = (g[gi], p[pi]);
            if !counted(gw, options) || !counted(pw, options) {
                continue;
            }
            let head_ok = match (gw.head, pw.head) {
                (Some(gh), Some(ph)) => to_pred.get(gh).copied().flatten() == Some(ph),
                _ => false,
            };
            if head_ok {
                c.correct_heads += 1;
                if gw.deprel.is_some() && gw.deprel == pw.deprel {
                    c.correct_labelled += 1;
                }
            }
        }
    }
    Ok(AttachmentScores {
        uas: Prf::from_counts(c.correct_heads, c.pred_words, c.gold_words),
        las: Prf::from_counts(c.correct_labelled, c.pred_words, c.gold_words),
        counts: c,
    })
}
