//! One test per acceptance criterion. Each prints a single `PASS`/`FAIL`
//! line before asserting, so `cargo test --test acceptance -- --nocapture`
//! doubles as a report.
//!
//! Criteria that need the BOUN treebank are ignored by default; point
//! `BOUN_TREEBANK` at a `.conllu` file or a directory of them and run with
//! `--ignored`.

mod common;

use std::path::{Path, PathBuf};
use std::time::Instant;

use common::*;
use rand::Rng;
use treebank::analytics::{
    is_projective, partition, treebank_stats, word_order_profile, Pattern, PredicateScope,
    SplitRatios, WordOrderMode,
};
use treebank::conllu::read_document;
use treebank::edit::{join_tokens, split_token};
use treebank::eval::{attachment_scores, cohen_kappa, morph_scores, EvalOptions};
use treebank::morph::Converter;
use treebank::validate::{first_unrooted, validate_document, validate_sentence, Schema};
use treebank::{
    parse_document, serialize_document, Document, IssueCode, Rational64, Section, Stats, TokenId,
};

fn report(criterion: &str, pass: bool, detail: impl AsRef<str>) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("{status} {criterion}: {}", detail.as_ref());
    assert!(pass, "{criterion}: {}", detail.as_ref());
}

fn boun() -> Document {
    let root = PathBuf::from(
        std::env::var("BOUN_TREEBANK").expect("set BOUN_TREEBANK to the treebank file or directory"),
    );
    let mut files: Vec<PathBuf> = if root.is_dir() {
        std::fs::read_dir(&root)
            .unwrap()
            .map(|e| e.unwrap().path())
            .filter(|p| p.extension().is_some_and(|x| x == "conllu"))
            .collect()
    } else {
        vec![root]
    };
    files.sort();
    let mut doc = Document::default();
    for f in &files {
        doc.extend(read_document(Path::new(f)).unwrap());
    }
    doc
}

const DEPRELS: [(&str, usize); 42] = [
    ("acl", 3494),
    ("advcl", 2595),
    ("advcl:cond", 269),
    ("advmod", 5278),
    ("advmod:emph", 1724),
    ("amod", 7869),
    ("appos", 506),
    ("aux", 39),
    ("aux:q", 269),
    ("case", 3290),
    ("cc", 2800),
    ("cc:preconj", 134),
    ("ccomp", 1512),
    ("clf", 122),
    ("compound", 2381),
    ("compound:lvc", 1218),
    ("compound:redup", 457),
    ("conj", 7250),
    ("cop", 1289),
    ("csubj", 546),
    ("dep", 9),
    ("det", 4938),
    ("discourse", 381),
    ("dislocated", 28),
    ("fixed", 12),
    ("flat", 2039),
    ("goeswith", 4),
    ("iobj", 164),
    ("list", 40),
    ("mark", 117),
    ("nmod", 1371),
    ("nmod:poss", 10393),
    ("nsubj", 8499),
    ("nummod", 1568),
    ("obj", 7381),
    ("obl", 12015),
    ("orphan", 84),
    ("parataxis", 209),
    ("punct", 20116),
    ("root", 9761),
    ("vocative", 88),
    ("xcomp", 125),
];

#[test]
fn round_trip_fidelity() {
    let mut r = rng(1);
    let sentences: Vec<_> = (0..1200).map(|i| random_sentence(&mut r, i, 15)).collect();
    let mut canonical = sample_sentence_canonical();
    canonical.push_str(&serialize_document(&Document::new(sentences)).unwrap());

    let start = Instant::now();
    let doc = parse_document(&canonical).unwrap();
    let out = serialize_document(&doc).unwrap();
    let identical = out == canonical;

    // Non-canonical input: BOM, CRLF, FEATS out of order, extra blank lines.
    let messy = format!("\u{feff}{}\n\n{canonical}", SAMPLE_SENTENCE.replace('\n', "\r\n"));
    let once = serialize_document(&parse_document(&messy).unwrap()).unwrap();
    let twice = serialize_document(&parse_document(&once).unwrap()).unwrap();
    let idempotent = once == twice && once.starts_with(&sample_sentence_canonical());
    let elapsed = start.elapsed();

    report(
        "round-trip",
        doc.len() >= 1000 && identical && idempotent && elapsed.as_secs_f64() < 5.0,
        format!(
            "{} sentences, byte-identical={identical}, idempotent={idempotent}, {:.2}s",
            doc.len(),
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
#[ignore = "needs the BOUN treebank in BOUN_TREEBANK"]
fn boun_statistics() {
    let s: Stats = treebank_stats(&boun());
    let mut mismatched: Vec<String> = DEPRELS
        .iter()
        .filter(|(l, c)| s.relation(l).map(|r| r.count) != Some(*c))
        .map(|(l, c)| format!("{l} {:?}!={c}", s.relation(l).map(|r| r.count)))
        .collect();
    if s.relations.len() != DEPRELS.len() {
        mismatched.push(format!("{} labels", s.relations.len()));
    }
    let arc_ok = (s.avg_arc_length - 2.86).abs() <= 0.05 || (s.avg_arc_length_no_punct - 2.86).abs() <= 0.05;
    let punct = s.relation("punct").map_or(0.0, |r| r.percent);
    let obl = s.relation("obl").map_or(0.0, |r| r.percent);
    report(
        "boun-stats",
        (s.sentences, s.tokens, s.words) == (9761, 121214, 122384)
            && (s.avg_tokens_per_sentence - 12.41).abs() <= 0.01
            && arc_ok
            && mismatched.is_empty()
            && (punct - 16.44).abs() < 0.005
            && (obl - 9.82).abs() < 0.005,
        format!(
            "{} sentences, {} tokens, {} words, {:.2} tok/sent, arc {:.3} / {:.3} (no punct), punct {punct:.2}%, obl {obl:.2}%, relation mismatches {mismatched:?}",
            s.sentences, s.tokens, s.words, s.avg_tokens_per_sentence, s.avg_arc_length, s.avg_arc_length_no_punct
        ),
    );
}

#[test]
fn partition_rule() {
    let rows = [
        (Section::Essays, 1953, 1561, 196),
        (Section::Newspapers, 1898, 1518, 190),
        (Section::Instructional, 1976, 1580, 198),
        (Section::PopularCulture, 1962, 1568, 197),
        (Section::Biographical, 1972, 1576, 198),
    ];
    let sections: Vec<Document> = rows
        .iter()
        .map(|&(section, n, ..)| {
            let sentences = (0..n)
                .map(|i| {
                    let mut s = sentence_from_heads(&[0]);
                    s.set_meta("sent_id", &format!("{}_{i}", section.name()));
                    s
                })
                .collect();
            Document { section: Some(section), ..Document::new(sentences) }
        })
        .collect();
    let total: usize = rows.iter().map(|r| r.1).sum();
    let mut ok = true;
    for seed in [0u64, 1, 2, 3, 12345] {
        let p = partition(&sections, &SplitRatios::default(), seed).unwrap();
        for (split, &(_, n, train, held)) in p.sections.iter().zip(&rows) {
            ok &= (split.total, split.train, split.dev, split.test) == (n, train, held, held);
        }
        let mut ids: Vec<String> = [&p.train, &p.dev, &p.test]
            .iter()
            .flat_map(|d| d.sentences.iter().map(|s| s.sent_id().unwrap().to_string()))
            .collect();
        ids.sort();
        ids.dedup();
        ok &= ids.len() == total && p.train.len() + p.dev.len() + p.test.len() == total;
    }
    report("partition", ok, "5 sections x 5 seeds, sizes match, disjoint and exhaustive");
}

#[test]
#[ignore = "needs the BOUN treebank in BOUN_TREEBANK"]
fn boun_word_order() {
    let doc = boun();
    let expected = [Pattern::SOV, Pattern::OVS, Pattern::VSO, Pattern::SVO, Pattern::OSV, Pattern::VOS];
    let mut lines = Vec::new();
    let mut any = false;
    for scope in [PredicateScope::MainClause, PredicateScope::AllPredicates] {
        let p = word_order_profile::<f64>(&doc, scope, WordOrderMode::TriplesOnly);
        let matches = p.modal() == Some(Pattern::SOV) && p.ranking() == expected;
        any |= matches;
        lines.push(format!(
            "{scope:?}: SOV {} (target 1456), OVS {} (target 549), ranking {:?}, match={matches}",
            p.count(Pattern::SOV),
            p.count(Pattern::OVS),
            p.ranking()
        ));
    }
    report("word-order", any, lines.join("; "));
}

#[test]
fn metrics_oracles() {
    let mut r = rng(2);
    let mut agree = 0;
    for _ in 0..200 {
        let n = r.random_range(1..=8);
        let gold = Document::new(vec![sentence_from_heads(&random_tree(&mut r, n))]);
        let mut pred = gold.clone();
        for id in 1..=n {
            let w = pred.sentences[0].word_mut(id).unwrap();
            if r.random_bool(0.3) {
                w.head = Some(r.random_range(0..=n));
            }
            if r.random_bool(0.3) {
                w.deprel = Some("obl".into());
            }
            if r.random_bool(0.5) {
                w.feats = random_feats(&mut r);
            }
        }
        let (g, p) = (&gold.sentences[0], &pred.sentences[0]);
        let heads = g.words().zip(p.words()).filter(|(a, b)| a.head == b.head).count();
        let labels = g
            .words()
            .zip(p.words())
            .filter(|(a, b)| a.head == b.head && a.deprel == b.deprel)
            .count();
        let (mut tp, mut gp, mut pp) = (0, 0, 0);
        for (a, b) in g.words().zip(p.words()) {
            let ga: Vec<String> = a.feats.pairs().collect();
            let pb: Vec<String> = b.feats.pairs().collect();
            tp += ga.iter().filter(|x| pb.contains(x)).count();
            gp += ga.len();
            pp += pb.len();
        }
        let s = attachment_scores::<Rational64>(&gold, &pred, EvalOptions::default()).unwrap();
        let m = morph_scores::<Rational64>(&gold, &pred).unwrap();
        let morph_ok = if gp + pp == 0 {
            m.recall == Rational64::from_integer(1)
        } else {
            (m.counts.matched_features, m.counts.gold_features, m.counts.pred_features) == (tp, gp, pp)
        };
        if s.uas.f1 == Rational64::new(heads as i64, n as i64)
            && s.las.f1 == Rational64::new(labels as i64, n as i64)
            && morph_ok
        {
            agree += 1;
        }
    }
    let k = |a: &[&str], b: &[&str]| cohen_kappa::<f64, _>(a, b).unwrap();
    let kappas = [
        k(&["x", "y", "x", "y"], &["x", "y", "x", "y"]),
        k(&["x", "x", "y", "y"], &["x", "y", "x", "y"]),
        k(&["x", "y", "x", "y"], &["y", "x", "y", "x"]),
    ];
    let kappa_ok = (kappas[0] - 1.0).abs() < 1e-12 && kappas[1].abs() < 1e-12 && (kappas[2] + 1.0).abs() < 1e-12;
    let doc = parse_document(SAMPLE_SENTENCE).unwrap();
    let id = attachment_scores::<f64>(&doc, &doc, EvalOptions::default()).unwrap();
    let identity = id.uas.f1 == 1.0 && id.las.f1 == 1.0;
    report(
        "metrics",
        agree == 200 && kappa_ok && identity,
        format!("{agree}/200 oracle agreements, kappa {kappas:?}, identity UAS/LAS = {}/{}", id.uas.f1, id.las.f1),
    );
}

#[test]
fn morph_conversion() {
    let conv = Converter::new();
    let mut failures = Vec::new();
    for (tag, printed) in treebank::morph::CONVERSION_TABLE {
        let mut expected: Vec<&str> = printed.split('|').map(str::trim).collect();
        expected.sort_by_key(|p| (p.split('=').next().unwrap().to_lowercase(), p.to_string()));
        let got = conv.convert_str(&format!("x[Noun]+[{tag}]")).map(|c| c.feats.to_string());
        if got.as_deref() != Ok(expected.join("|").as_str()) {
            failures.push(tag);
        }
    }
    let alin = conv.convert_str("alın[Verb]+[Pos]+[Imp]+[A2sg]").unwrap();
    let alin_ok = alin.upos == "VERB" && alin.feats.to_string() == "Mood=Imp|Number=Sing|Person=2|Polarity=Pos";
    report(
        "morph-conversion",
        failures.is_empty() && alin_ok,
        format!(
            "{}/{} rows, alın -> {} {}",
            treebank::morph::CONVERSION_TABLE.len() - failures.len(),
            treebank::morph::CONVERSION_TABLE.len(),
            alin.upos,
            alin.feats
        ),
    );
}

#[test]
fn projectivity() {
    let projective = is_projective(&sentence_from_heads(&[2, 5, 5, 5, 0]));
    let non_projective = !is_projective(&sentence_from_heads(&[2, 0, 1, 2]));
    let mut r = rng(3);
    let mut agree = 0;
    for _ in 0..1000 {
        let n = r.random_range(1..=12);
        let heads = random_tree(&mut r, n);
        let arcs: Vec<(usize, usize)> = heads.iter().enumerate().map(|(i, &h)| (h.min(i + 1), h.max(i + 1))).collect();
        let crossing = arcs.iter().any(|&(a, b)| arcs.iter().any(|&(c, d)| a < c && c < b && b < d));
        if is_projective(&sentence_from_heads(&heads)) == !crossing {
            agree += 1;
        }
    }
    report(
        "projectivity",
        projective && non_projective && agree == 1000,
        format!("reference trees {projective}/{non_projective}, {agree}/1000 random trees agree with the pairwise oracle"),
    );
}

#[test]
fn editor_properties() {
    let mut r = rng(4);
    let schema = Schema::default();
    let (mut valid, mut identity) = (0, 0);
    for i in 0..1000 {
        let mut s = random_sentence(&mut r, i, 10);
        let mut ok = true;
        for _ in 0..r.random_range(1..=20) {
            let n = s.word_count();
            let id = r.random_range(1..=n);
            if r.random_bool(0.5) {
                let form = s.word(id).unwrap().form.clone();
                match form.char_indices().nth(1) {
                    Some((cut, _)) => split_token(&mut s, id, &form[..cut], &form[cut..], false).unwrap(),
                    None => split_token(&mut s, id, &form, "x", true).unwrap(),
                }
            } else {
                let _ = join_tokens(&mut s, id);
            }
            ok &= validate_sentence(&s, &schema).is_empty()
                && first_unrooted(&s.heads().iter().map(|h| h.unwrap()).collect::<Vec<_>>()).is_none();
        }
        valid += usize::from(ok);

        let before = arc_multiset(&s);
        let original = s.clone();
        let id = r.random_range(1..=s.word_count());
        split_token(&mut s, id, "p", "q", true).unwrap();
        join_tokens(&mut s, id).unwrap();
        s.word_mut(id).unwrap().form = original.word(id).unwrap().form.clone();
        identity += usize::from(arc_multiset(&s) == before && s == original);
    }
    report(
        "editor",
        valid == 1000 && identity == 1000,
        format!("{valid}/1000 sequences stay valid, {identity}/1000 split-join identities"),
    );
}

#[test]
fn validator_rule_fixtures() {
    let schema = Schema::default();
    let base = parse_document(SAMPLE_SENTENCE).unwrap().sentences.remove(0);
    let range = "1-2\tab\t_\t_\t_\t_\t1\t_\t_\t_\n1\ta\t_\tNOUN\t_\t_\t0\troot\t_\t_\n2\tb\t_\tNOUN\t_\t_\t1\tnmod\t_\t_\n\n";
    let mut fixtures = Vec::new();
    let mut s = base.clone();
    s.tokens[3].id = TokenId::Word(9);
    fixtures.push((IssueCode::IdSequence, s));
    let mut s = base.clone();
    s.tokens[5].head = Some(0);
    fixtures.push((IssueCode::Root, s));
    let mut s = base.clone();
    s.tokens[0].head = Some(8);
    fixtures.push((IssueCode::HeadRange, s));
    let mut s = base.clone();
    s.tokens[1].head = Some(1);
    fixtures.push((IssueCode::Tree, s));
    let mut s = base.clone();
    s.tokens[0].upos = Some("NOUNX".into());
    fixtures.push((IssueCode::Upos, s));
    let mut s = base.clone();
    s.tokens[0].deprel = Some("subject".into());
    fixtures.push((IssueCode::Deprel, s));
    let mut s = base.clone();
    s.tokens[0].feats.insert("case", "acc").unwrap();
    fixtures.push((IssueCode::Feats, s));
    fixtures.push((IssueCode::RangeAnnotation, parse_document(range).unwrap().sentences.remove(0)));

    let mut exact = 0;
    let mut upos_message = false;
    for (code, s) in &fixtures {
        let issues = validate_sentence(s, &schema);
        if issues.len() == 1 && issues[0].code == *code {
            exact += 1;
        }
        upos_message |= issues.iter().any(|i| i.message.starts_with("unknown UPOS value 'NOUNX'"));
    }
    let clean = validate_sentence(&base, &schema).is_empty();
    report(
        "validator-rules",
        exact == 8 && upos_message && clean,
        format!("{exact}/8 fixtures trigger exactly their rule, unknown-UPOS message={upos_message}, clean baseline={clean}"),
    );
}

#[test]
#[ignore = "needs the BOUN treebank in BOUN_TREEBANK"]
fn boun_validates_clean() {
    let doc = boun();
    let issues = validate_document(&doc, &Schema::default());
    let sample: Vec<String> = issues.iter().take(5).map(|i| i.to_string()).collect();
    report(
        "validator-boun",
        issues.is_empty(),
        format!("{} sentences, {} issues {sample:?}", doc.len(), issues.len()),
    );
}
