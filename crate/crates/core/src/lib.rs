//! Toolkit for CoNLL-U dependency treebanks.
//!
//! The crate covers the whole life cycle of a treebank file:
//!
//! * [`conllu`] reads and writes documents losslessly,
//! * [`validate`] checks sentences against a tag/label [`Schema`],
//! * [`edit`] splits, joins and updates tokens while keeping IDs and heads consistent,
//! * [`morph`] converts analyzer output into lemma/UPOS/FEATS,
//! * [`analytics`] computes corpus statistics, word-order profiles, projectivity and splits,
//! * [`eval`] scores parses (UAS/LAS), agreement (Cohen's kappa) and morphology.
//!
//! Numeric results are generic over [`Scalar`], so the same code produces
//! `f64` reports for humans and exact [`Rational64`] values for checking.
//!
//! ```
//! use treebank::{parse_document, serialize_document, Schema, Stats};
//! use treebank::validate::validate_document;
//!
//! let text = "1\tAli\tAli\tPROPN\t_\t_\t2\tnsubj\t_\t_\n\
//!             2\tgeldi\tgel\tVERB\t_\tNumber=Sing|Person=3\t0\troot\t_\t_\n\n";
//! let doc = parse_document(text).unwrap();
//! assert_eq!(serialize_document(&doc).unwrap(), text);
//! assert!(validate_document(&doc, &Schema::default()).is_empty());
//!
//! let stats: Stats = treebank::analytics::treebank_stats(&doc);
//! assert_eq!(stats.avg_arc_length, 1.0);
//! ```

pub mod analytics;
pub mod conllu;
pub mod edit;
pub mod eval;
pub mod morph;
pub mod scalar;
pub mod validate;

pub use conllu::{
    parse_document, parse_feats, serialize_document, Document, FeatureSet, Misc, Section,
    Sentence, Token, TokenId,
};
pub use edit::{Edit, EditError, Field};
pub use scalar::Scalar;
pub use validate::{IssueCode, Schema, ValidationIssue};

pub use num_rational::Rational64;

/// Corpus statistics with floating point averages.
pub type Stats = analytics::StatsReport<f64>;
/// Corpus statistics with exact rational averages.
pub type ExactStats = analytics::StatsReport<Rational64>;
pub type WordOrder = analytics::WordOrderProfile<f64>;
pub type EvalReport = eval::EvalReport<f64>;
pub type ExactEvalReport = eval::EvalReport<Rational64>;
pub type AttachmentScores = eval::AttachmentScores<f64>;
pub type MorphScores = eval::MorphScores<f64>;
