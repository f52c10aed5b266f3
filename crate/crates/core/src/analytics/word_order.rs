use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::conllu::{Document, Sentence};
use crate::scalar::Scalar;

/// Linear order of subject (S), object (O) and predicate (V).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Pattern {
    SOV,
    OSV,
    SVO,
    OVS,
    VSO,
    VOS,
    SV,
    VS,
    OV,
    VO,
}

impl Pattern {
    pub const TRIPLES: [Pattern; 6] = [
        Pattern::SOV,
        Pattern::OSV,
        Pattern::SVO,
        Pattern::OVS,
        Pattern::VSO,
        Pattern::VOS,
    ];
    pub const ALL: [Pattern; 10] = [
        Pattern::SOV,
        Pattern::OSV,
        Pattern::SVO,
        Pattern::OVS,
        Pattern::VSO,
        Pattern::VOS,
        Pattern::SV,
        Pattern::VS,
        Pattern::OV,
        Pattern::VO,
    ];

    pub fn is_triple(self) -> bool {
        Pattern::TRIPLES.contains(&self)
    }

    fn from_positions(v: usize, s: Option<usize>, o: Option<usize>) -> Option<Pattern> {
        use Pattern::*;
        Some(match (s, o) {
            (None, None) => return None,
            (Some(s), None) => if s < v { SV } else { VS },
            (None, Some(o)) => if o < v { OV } else { VO },
            (Some(s), Some(o)) => match (s < o, s < v, o < v) {
                (true, true, true) => SOV,
                (false, true, true) => OSV,
                (true, true, false) => SVO,
                (false, false, true) => OVS,
                (true, false, false) => VSO,
                (false, false, false) => VOS,
                // s < o, s > v, o < v and the mirror case cannot happen
                _ => unreachable!("inconsistent order"),
            },
        })
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WordOrderMode {
    PairsAndTriples,
    TriplesOnly,
}

/// Which words count as predicates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PredicateScope {
    /// The root of each sentence only.
    MainClause,
    /// The root plus every word attached as conj, advcl, ccomp, acl, csubj
    /// or parataxis (subtypes included).
    AllPredicates,
}

impl FromStr for PredicateScope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "main" | "main-clause" => Ok(PredicateScope::MainClause),
            "all" | "all-predicates" => Ok(PredicateScope::AllPredicates),
            other => Err(format!("unknown scope '{other}' (expected main or all)")),
        }
    }
}

const CLAUSAL: [&str; 7] = ["root", "conj", "advcl", "ccomp", "acl", "csubj", "parataxis"];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PatternCount<T> {
    pub pattern: Pattern,
    pub count: usize,
    pub percent: T,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WordOrderProfile<T> {
    pub mode: WordOrderMode,
    pub scope: PredicateScope,
    /// Every pattern of the mode, most frequent first (ties in canonical order).
    pub counts: Vec<PatternCount<T>>,
    pub total: usize,
}

impl<T: Scalar> WordOrderProfile<T> {
    pub fn count(&self, pattern: Pattern) -> usize {
        self.counts
            .iter()
            .find(|c| c.pattern == pattern)
            .map_or(0, |c| c.count)
    }

    /// The most frequent pattern, if anything was counted.
    pub fn modal(&self) -> Option<Pattern> {
        self.counts
            .first()
            .filter(|c| c.count > 0)
            .map(|c| c.pattern)
    }

    pub fn ranking(&self) -> Vec<Pattern> {
        self.counts.iter().map(|c| c.pattern).collect()
    }
}

fn is_predicate(scope: PredicateScope, deprel: Option<&str>, head: Option<usize>) -> bool {
    match scope {
        PredicateScope::MainClause => head == Some(0),
        PredicateScope::AllPredicates => {
            head == Some(0) || deprel.is_some_and(|d| CLAUSAL.contains(&d.split(':').next().unwrap_or(d)))
        }
    }
}

/// Patterns of one sentence, in predicate order.
pub fn sentence_patterns(s: &Sentence, scope: PredicateScope) -> Vec<Pattern> {
    let words: Vec<_> = s.words().collect();
    words
        .iter()
        .filter(|w| is_predicate(scope, w.deprel.as_deref(), w.head))
        .filter_map(|pred| {
            let v = pred.id.first();
            let dependents = words.iter().filter(|w| w.head == Some(v));
            let mut subj = None;
            let mut obj = None;
            for d in dependents {
                match d.base_deprel() {
                    Some("nsubj") | Some("csubj") if subj.is_none() => subj = Some(d.id.first()),
                    Some("obj") if obj.is_none() => obj = Some(d.id.first()),
                    _ => {}
                }
            }
            Pattern::from_positions(v, subj, obj)
        })
        .collect()
}

pub fn word_order_profile<T: Scalar>(
    doc: &Document,
    scope: PredicateScope,
    mode: WordOrderMode,
) -> WordOrderProfile<T> {
    let patterns: &[Pattern] = match mode {
        WordOrderMode::PairsAndTriples => &Pattern::ALL,
        WordOrderMode::TriplesOnly => &Pattern::TRIPLES,
    };
    let mut counts = vec![0usize; patterns.len()];
    for s in &doc.sentences {
        for p in sentence_patterns(s, scope) {
            if let Some(i) = patterns.iter().position(|&q| q == p) {
                counts[i] += 1;
            }
        }
    }
    let total: usize = counts.iter().sum();
    let mut out: Vec<PatternCount<T>> = patterns
        .iter()
        .zip(counts)
        .map(|(&pattern, count)| PatternCount {
            pattern,
            count,
            percent: T::percent(count, total),
        })
        .collect();
    out.sort_by_key(|c| std::cmp::Reverse(c.count));
    WordOrderProfile {
        mode,
        scope,
        counts: out,
        total,
    }
}
