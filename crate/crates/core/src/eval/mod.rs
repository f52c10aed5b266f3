//! Attachment scores, Cohen's kappa and morphological tagging metrics
//! between a gold and a predicted document.

mod attachment;
mod kappa;
mod morph;

use serde::Serialize;
use thiserror::Error;

pub use attachment::{align_words, attachment_scores, AttachmentCounts, AttachmentScores, Prf};
pub use kappa::{cohen_kappa, deprel_kappa};
pub use morph::{morph_scores, MorphCounts, MorphScores};

use crate::conllu::Document;
use crate::scalar::Scalar;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("gold has {gold} sentences, prediction has {pred}")]
    SentenceCount { gold: usize, pred: usize },
    #[error("nothing to evaluate: the documents contain no words")]
    Empty,
    #[error("sentence {0}: gold and predicted words spell different text")]
    TextMismatch(usize),
    #[error("sentence {sentence}: tokenization differs at word {word}")]
    Tokenization { sentence: usize, word: usize },
    #[error("label sequences differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("label sequences are empty")]
    EmptySequence,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvalOptions {
    /// Leave out words labelled `punct`.
    pub ignore_punct: bool,
}

/// Everything `eval` reports for a gold/prediction pair.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvalReport<T> {
    pub attachment: AttachmentScores<T>,
    /// Agreement on the DEPREL of aligned words.
    pub kappa: T,
    /// Present only when both documents have identical tokenization.
    pub morph: Option<MorphScores<T>>,
}

impl<T: Scalar> EvalReport<T> {
    pub fn uas_f1(&self) -> T {
        self.attachment.uas.f1
    }

    pub fn las_f1(&self) -> T {
        self.attachment.las.f1
    }
}

pub fn evaluate<T: Scalar>(
    gold: &Document,
    pred: &Document,
    options: EvalOptions,
) -> Result<EvalReport<T>, EvalError> {
    let attachment = attachment_scores(gold, pred, options)?;
    let kappa = deprel_kappa(gold, pred, options)?;
    let morph = match morph_scores(gold, pred) {
        Ok(m) => Some(m),
        Err(EvalError::Tokenization { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(EvalReport {
        attachment,
        kappa,
        morph,
    })
}
