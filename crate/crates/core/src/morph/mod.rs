//! Conversion of Sak-style morphological analyses into UD lemma, UPOS and FEATS.
//!
//! An analysis looks like `al[Verb]&Hn[Verb+Pass]+[Pos]+[Imp]+[A2sg]`: a
//! root, its bracketed category, then morphemes introduced by `+`
//! (inflectional) or `&` (derivational), each with an optional surface
//! string and a bracketed tag.

mod analysis;
mod convert;
mod table;

pub use analysis::{parse_analysis, Morpheme, MorphemeKind, SakAnalysis};
pub use convert::{resolve_conflicts, Conversion, ConvertError, Converter};
pub use table::{ConversionRule, CATEGORY_TAGS, CONVERSION_TABLE, FEATURELESS_TAGS};
