mod common;

use common::*;
use treebank::validate::{first_unrooted, validate_document, validate_sentence, Schema};
use treebank::{parse_document, Document, IssueCode, Sentence, TokenId};

fn sample() -> Sentence {
    parse_document(SAMPLE_SENTENCE).unwrap().sentences.remove(0)
}

fn codes(s: &Sentence) -> Vec<IssueCode> {
    validate_sentence(s, &Schema::default())
        .into_iter()
        .map(|i| i.code)
        .collect()
}

#[test]
fn sample_sentence_is_clean() {
    assert!(validate_sentence(&sample(), &Schema::default()).is_empty());
}

#[test]
fn default_schema_inventories() {
    let schema = Schema::default();
    assert_eq!(schema.upos.len(), 17);
    assert_eq!(schema.deprel.len(), 42);
    assert!(schema.deprel.contains("nmod:poss"));
    assert!(schema.check().is_ok());
}

#[test]
fn id_sequence_rule() {
    let mut s = sample();
    s.tokens[3].id = TokenId::Word(9);
    assert_eq!(codes(&s), vec![IssueCode::IdSequence]);
}

#[test]
fn root_rule() {
    let mut s = sample();
    s.tokens[5].head = Some(0);
    s.tokens[5].deprel = Some("advmod".into());
    assert_eq!(codes(&s), vec![IssueCode::Root]);

    let mut s = sample();
    s.tokens[4].deprel = Some("ccomp".into());
    assert_eq!(codes(&s), vec![IssueCode::Root]);
}

#[test]
fn head_range_rule() {
    let mut s = sample();
    s.tokens[0].head = Some(8);
    assert_eq!(codes(&s), vec![IssueCode::HeadRange]);
    let mut s = sample();
    s.tokens[0].head = Some(1);
    assert_eq!(codes(&s), vec![IssueCode::HeadRange]);
    let mut s = sample();
    s.tokens[0].head = None;
    assert_eq!(codes(&s), vec![IssueCode::HeadRange]);
}

#[test]
fn tree_rule() {
    let mut s = sample();
    // 1 -> 2 -> 1
    s.tokens[1].head = Some(1);
    assert_eq!(codes(&s), vec![IssueCode::Tree]);
}

#[test]
fn upos_rule_message() {
    let mut s = sample();
    s.tokens[0].upos = Some("NOUNX".into());
    let issues = validate_sentence(&s, &Schema::default());
    assert_eq!(issues.len(), 1);
    assert_eq!(issues[0].code, IssueCode::Upos);
    assert_eq!(issues[0].token, Some(TokenId::Word(1)));
    assert!(issues[0].message.contains("unknown UPOS value"));
}

#[test]
fn deprel_rule() {
    let mut s = sample();
    s.tokens[3].deprel = Some("obl:tmod".into());
    assert_eq!(codes(&s), vec![IssueCode::Deprel]);
    let mut s = sample();
    s.tokens[3].deprel = Some("nmod:poss".into());
    assert!(codes(&s).is_empty());
}

#[test]
fn feats_rule() {
    let mut s = sample();
    s.tokens[0].feats.insert("case", "acc").unwrap();
    assert_eq!(codes(&s), vec![IssueCode::Feats]);

    let schema = Schema::from_config("[features]\nCase\nNumber=Sing\nPerson\nPolarity\nVerbForm\nVoice\nAspect\nEvident\nTense\n").unwrap();
    assert!(validate_sentence(&sample(), &schema).is_empty());
    let strict = Schema::from_config("[features]\nCase\nPerson\n").unwrap();
    let issues = validate_sentence(&sample(), &strict);
    assert!(issues.iter().all(|i| i.code == IssueCode::Feats));
    assert!(issues.iter().any(|i| i.message.contains("Number=Sing")));
}

#[test]
fn range_annotation_rule() {
    let text = "1-2\tab\t_\t_\t_\t_\t1\t_\t_\t_\n1\ta\t_\tNOUN\t_\t_\t0\troot\t_\t_\n2\tb\t_\tNOUN\t_\t_\t1\tnmod\t_\t_\n\n";
    let s = parse_document(text).unwrap().sentences.remove(0);
    let issues = validate_sentence(&s, &Schema::default());
    assert_eq!(issues.len(), 1);
    assert_eq!(issues[0].code, IssueCode::RangeAnnotation);
    assert_eq!(issues[0].token, Some(TokenId::Range(1, 2)));
}

#[test]
fn two_roots() {
    let s = sentence_from_heads(&[0, 0, 1]);
    assert_eq!(codes(&s), vec![IssueCode::Root]);
}

#[test]
fn duplicate_sent_ids() {
    let mut doc = parse_document(SAMPLE_SENTENCE).unwrap();
    doc.sentences.push(doc.sentences[0].clone());
    let issues = validate_document(&doc, &Schema::default());
    assert_eq!(issues.len(), 1);
    assert_eq!(issues[0].code, IssueCode::DuplicateSentId);
    assert_eq!(issues[0].sentence, 1);
}

#[test]
fn two_valid_sentences() {
    let mut r = rng(3);
    let doc = Document::new(vec![random_sentence(&mut r, 0, 8), random_sentence(&mut r, 1, 8)]);
    assert!(validate_document(&doc, &Schema::default()).is_empty());
}

#[test]
fn seeded_violations_are_reported_in_order() {
    let mut r = rng(11);
    let mut doc = Document::new((0..10).map(|i| random_sentence(&mut r, i, 8)).collect());
    assert!(validate_document(&doc, &Schema::default()).is_empty());
    let word_pos = |s: &Sentence| s.tokens.iter().position(|t| t.is_word()).unwrap();
    let p = word_pos(&doc.sentences[7]);
    doc.sentences[7].tokens[p].upos = Some("BOGUS".into());
    let p = word_pos(&doc.sentences[2]);
    doc.sentences[2].tokens[p].deprel = Some("not-a-label".into());
    let last = doc.sentences[5].tokens.len() - 1;
    doc.sentences[5].tokens[last].feats.insert("lower", "x").unwrap();

    let issues = validate_document(&doc, &Schema::default());
    let got: Vec<(usize, IssueCode)> = issues.iter().map(|i| (i.sentence, i.code)).collect();
    assert_eq!(
        got,
        vec![(2, IssueCode::Deprel), (5, IssueCode::Feats), (7, IssueCode::Upos)]
    );
    assert_eq!(issues, validate_document(&doc, &Schema::default()));
}

/// Brute force: follow heads n times from each word; a word is rooted iff
/// it reaches 0 within n steps.
fn reachability_oracle(heads: &[usize]) -> bool {
    (1..=heads.len()).all(|start| {
        let mut node = start;
        for _ in 0..=heads.len() {
            if node == 0 {
                return true;
            }
            node = heads[node - 1];
        }
        node == 0
    })
}

#[test]
fn cycle_detection_matches_oracle() {
    let mut r = rng(99);
    for _ in 0..5000 {
        let n = 1 + (rand::Rng::random_range(&mut r, 0..8));
        let heads = random_heads(&mut r, n);
        assert_eq!(
            first_unrooted(&heads).is_none(),
            reachability_oracle(&heads),
            "{heads:?}"
        );
    }
}

#[test]
fn schema_config_round_trip_and_errors() {
    let schema = Schema::default();
    assert_eq!(Schema::from_config(&schema.to_config()).unwrap(), schema);
    assert!(Schema::from_config("NOUN\n").is_err());
    assert!(Schema::from_config("[deprel]\nnsubj\n").is_err());
    assert!(Schema::from_config("[colors]\nred\n").is_err());
    let custom = Schema::from_config("# tags\n[upos]\nNOUN\nVERB\n").unwrap();
    assert_eq!(custom.upos.len(), 2);
    assert_eq!(custom.deprel.len(), 42);
}
