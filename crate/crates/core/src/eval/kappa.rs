use std::collections::HashMap;
use std::hash::Hash;

use super::attachment::align_words;
use super::{EvalError, EvalOptions};
use crate::conllu::{Document, Token};
use crate::scalar::Scalar;

/// Cohen's kappa between two label sequences:
/// `(p_o - p_e) / (1 - p_e)`, with `p_o` the observed agreement rate and
/// `p_e` the agreement expected from the two marginal distributions.
///
/// Returns exactly one when chance agreement is already total (both
/// annotators used one and the same label throughout).
pub fn cohen_kappa<T: Scalar, L: Eq + Hash>(a: &[L], b: &[L]) -> Result<T, EvalError> {
    if a.len() != b.len() {
        return Err(EvalError::LengthMismatch(a.len(), b.len()));
    }
    if a.is_empty() {
        return Err(EvalError::EmptySequence);
    }
    let n = a.len();
    let agree = a.iter().zip(b).filter(|(x, y)| x == y).count();
    let mut marginals: HashMap<&L, (usize, usize)> = HashMap::new();
    for x in a {
        marginals.entry(x).or_default().0 += 1;
    }
    for y in b {
        marginals.entry(y).or_default().1 += 1;
    }
    // Scaled by n^2 to stay in integers until the final division.
    let chance: usize = marginals.values().map(|(ca, cb)| ca * cb).sum();
    let total = n * n;
    if chance == total {
        return Ok(T::one());
    }
    let numerator = T::from_count(agree * n) - T::from_count(chance);
    Ok(numerator / T::from_count(total - chance))
}

/// Kappa over the DEPREL labels of character-aligned words.
pub fn deprel_kappa<T: Scalar>(
    gold: &Document,
    pred: &Document,
    options: EvalOptions,
) -> Result<T, EvalError> {
    if gold.len() != pred.len() {
        return Err(EvalError::SentenceCount {
            gold: gold.len(),
            pred: pred.len(),
        });
    }
    let skip = |t: &Token| options.ignore_punct && t.deprel.as_deref() == Some("punct");
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for (i, (gs, ps)) in gold.sentences.iter().zip(&pred.sentences).enumerate() {
        let g: Vec<&Token> = gs.words().collect();
        let p: Vec<&Token> = ps.words().collect();
        for (gi, pi) in align_words(gs, ps, i)? {
            if skip(g[gi]) || skip(p[pi]) {
                continue;
            }
            a.push(g[gi].deprel.as_deref());
            b.push(p[pi].deprel.as_deref());
        }
    }
    if a.is_empty() {
        return Err(EvalError::Empty);
    }
    cohen_kappa(&a, &b)
}
