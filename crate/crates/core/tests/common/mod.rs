#![allow(dead_code)]

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treebank::{FeatureSet, Misc, Sentence, Token, TokenId};

/// A sample sentence with FEATS in non-canonical order
/// (word 5 lists Tense after VerbForm).
pub const SAMPLE_SENTENCE: &str = "\
# sent_id = ins_167
# text = Sözü uzatıp seni merakta bıraktım galiba.
# trans = Probably, I beat around the bush and kept you in suspense.
1\tSözü\tsöz\tNOUN\tNoun\tCase=Acc|Number=Sing|Person=3\t2\tobj\t_\t_
2\tuzatıp\tuza\tVERB\tVerb\tPolarity=Pos|VerbForm=Conv|Voice=Cau\t5\tadvcl\t_\t_
3\tseni\tsen\tPRON\tPers\tCase=Acc|Number=Sing|Person=2\t5\tobj\t_\t_
4\tmerakta\tmerak\tNOUN\tNoun\tCase=Loc|Number=Sing|Person=3\t5\tobl\t_\t_
5\tbıraktım\tbırak\tVERB\tVerb\tAspect=Perf|Evident=Fh|Number=Sing|Person=1|Polarity=Pos|VerbForm=Fin|Tense=Past\t0\troot\t_\t_
6\tgaliba\tgaliba\tADV\tAdverb\t_\t5\tadvmod\t_\tSpaceAfter=No
7\t.\t.\tPUNCT\tPunc\t_\t5\tpunct\t_\tSpacesAfter=\\n

";

pub fn sample_sentence_canonical() -> String {
    SAMPLE_SENTENCE.replace(
        "VerbForm=Fin|Tense=Past",
        "Tense=Past|VerbForm=Fin",
    )
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Heads of a random well-formed tree over `n` words (exactly one root).
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        order.swap(i, j);
    }
    let mut heads = vec![0; n];
    for k in 1..n {
        let parent = order[rng.random_range(0..k)];
        heads[order[k] - 1] = parent;
    }
    heads
}

/// Arbitrary heads in `0..=n`, never pointing at the word itself.
pub fn random_heads(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    (1..=n)
        .map(|i| loop {
            let h = rng.random_range(0..=n);
            if h != i {
                break h;
            }
        })
        .collect()
}

const LABELS: [&str; 8] = ["nsubj", "obj", "obl", "amod", "advmod", "nmod:poss", "punct", "conj"];
const UPOS: [&str; 6] = ["NOUN", "VERB", "ADJ", "ADV", "PRON", "PUNCT"];
const FORMS: [&str; 10] = [
    "ev", "kedi", "süt", "içti", "güzel", "çok", "ağaç", "ışık", "gördü", ".",
];
const FEATS: [(&str, &[&str]); 5] = [
    ("Case", &["Nom", "Acc", "Dat", "Loc"]),
    ("Number", &["Sing", "Plur"]),
    ("Person", &["1", "2", "3"]),
    ("Number[psor]", &["Sing", "Plur"]),
    ("Polarity", &["Pos", "Neg"]),
];

pub fn sentence_from_heads(heads: &[usize]) -> Sentence {
    let tokens = heads
        .iter()
        .enumerate()
        .map(|(i, &h)| {
            let mut t = Token::new(TokenId::Word(i + 1), format!("w{}", i + 1));
            t.head = Some(h);
            t.deprel = Some(if h == 0 { "root".into() } else { LABELS[i % 6].into() });
            t.upos = Some(UPOS[i % 5].into());
            t
        })
        .collect();
    Sentence::new(tokens)
}

pub fn random_feats(rng: &mut impl Rng) -> FeatureSet {
    let mut feats = FeatureSet::new();
    for (name, values) in FEATS {
        if rng.random_bool(0.4) {
            feats.insert(name, *values.choose(rng).unwrap()).unwrap();
        }
    }
    feats
}

/// A random sentence that satisfies every validation rule, with comments,
/// optional multiword ranges, FEATS and MISC.
pub fn random_sentence(rng: &mut impl Rng, index: usize, max_words: usize) -> Sentence {
    let n = rng.random_range(1..=max_words);
    let heads = random_tree(rng, n);
    let mut words = Vec::new();
    for (i, &h) in heads.iter().enumerate() {
        let mut t = Token::new(TokenId::Word(i + 1), *FORMS.choose(rng).unwrap());
        if rng.random_bool(0.9) {
            t.lemma = Some(t.form.to_uppercase());
        }
        t.upos = Some(UPOS.choose(rng).unwrap().to_string());
        if rng.random_bool(0.5) {
            t.xpos = Some("Noun".into());
        }
        t.feats = random_feats(rng);
        t.head = Some(h);
        t.deprel = Some(if h == 0 { "root".into() } else { LABELS.choose(rng).unwrap().to_string() });
        if rng.random_bool(0.2) {
            t.misc = Misc(vec!["SpaceAfter=No".into()]);
        }
        words.push(t);
    }
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < words.len() {
        if i + 1 < words.len() && rng.random_bool(0.15) {
            let form = format!("{}{}", words[i].form, words[i + 1].form);
            tokens.push(Token::new(TokenId::Range(i + 1, i + 2), form));
            tokens.push(words[i].clone());
            tokens.push(words[i + 1].clone());
            i += 2;
        } else {
            tokens.push(words[i].clone());
            i += 1;
        }
    }
    let mut s = Sentence::new(tokens);
    s.comments.push(format!("# sent_id = gen_{index}"));
    let text = s.surface_text();
    s.comments.push(format!("# text = {text}"));
    if rng.random_bool(0.1) {
        s.comments.push("# a free-form comment".into());
    }
    s
}

/// Arcs as (dependent form, head form) pairs, sorted.
pub fn arc_multiset(s: &Sentence) -> Vec<(String, String)> {
    let mut arcs: Vec<(String, String)> = s
        .words()
        .map(|w| {
            let head = match w.head {
                Some(0) => "ROOT".to_string(),
                Some(h) => s.word(h).map_or("?".into(), |t| t.form.clone()),
                None => "_".into(),
            };
            (w.form.clone(), head)
        })
        .collect();
    arcs.sort();
    arcs
}
