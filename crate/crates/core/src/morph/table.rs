use crate::conllu::{parse_feats, FeatureSet};

/// Analyzer tag to UD features. FEATS strings keep the order of the
/// reference table, not canonical order.
pub const CONVERSION_TABLE: [(&str, &str); 59] = [
    ("A1sg", "Number=Sing|Person=1"),
    ("A2sg", "Number=Sing|Person=2"),
    ("A3sg", "Number=Sing|Person=3"),
    ("A1pl", "Number=Plur|Person=1"),
    ("A2pl", "Number=Plur|Person=2"),
    ("A3pl", "Number=Plur|Person=3"),
    ("P1sg", "Number[psor]=Sing|Person[psor]=1"),
    ("P2sg", "Number[psor]=Sing|Person[psor]=2"),
    ("P3sg", "Number[psor]=Sing|Person[psor]=3"),
    ("P1pl", "Number[psor]=Plur|Person[psor]=1"),
    ("P2pl", "Number[psor]=Plur|Person[psor]=2"),
    ("P3pl", "Number[psor]=Plur|Person[psor]=3"),
    ("Abl", "Case=Abl"),
    ("Acc", "Case=Acc"),
    ("Dat", "Case=Dat"),
    ("Equ", "Case=Equ"),
    ("Gen", "Case=Gen"),
    ("Ins", "Case=Ins"),
    ("Loc", "Case=Loc"),
    ("Nom", "Case=Nom"),
    ("Pass", "Voice=Pass"),
    ("Caus", "Voice=Cau"),
    ("Reflex", "Voice=Rfl"),
    ("Recip", "Voice=Rcp"),
    ("Able", "Mood=Abil"),
    ("Repeat", "Mood=Iter"),
    ("Hastily", "Mood=Rapid"),
    ("Almost", "Mood=Pro"),
    ("Stay", "Mood=Dur"),
    ("While", "VerbForm=Conv|Mood=Imp"),
    ("ByDoingSo", "VerbForm=Conv|Mood=Imp"),
    ("Pos", "Polarity=Pos"),
    ("Neg", "Polarity=Neg"),
    ("Past", "Aspect=Perf|Tense=Past|Evident=Fh"),
    ("Narr", "Tense=Past|Evident=Nfh"),
    ("Fut", "Tense=Fut|Aspect=Imp"),
    ("Aor", "Tense=Aor|Aspect=Hab"),
    ("Pres", "Tense=Pres|Aspect=Imp"),
    ("Desr", "Mood=Des"),
    ("Cond", "Mood=Cnd"),
    ("Neces", "Mood=Nec"),
    ("Opt", "Mood=Opt"),
    ("Imp", "Mood=Imp"),
    ("Prog1", "Aspect=Prog|Tense=Pres"),
    ("Prog2", "Aspect=Prog|Tense=Pres"),
    ("DemonsP", "PronType=Dem"),
    ("QuesP", "PronType=Ind"),
    ("ReflexP", "PronType=Prs|Reflex=Yes"),
    ("PersP", "PronType=Prs"),
    ("QuantP", "PronType=Ind"),
    ("Card", "NumType=Card"),
    ("Ord", "NumType=Ord"),
    ("Distrib", "NumType=Dist"),
    ("Ratio", "NumType=Frac"),
    ("Range", "NumType=Range"),
    ("Inf", "VerbForm=Vnoun"),
    ("FutPart", "VerbForm=Part|Tense=Future|Aspect=Imp"),
    ("PastPart", "VerbForm=Part|Tense=Past|Aspect=Perf"),
    ("PresPart", "VerbForm=Part|Tense=Pres"),
];

/// Part-of-speech categories of the analyzer. They pick the UPOS and carry
/// no features.
pub const CATEGORY_TAGS: [&str; 14] = [
    "Noun", "Verb", "Adj", "Adverb", "Pron", "Num", "Punc", "Conj", "Det", "Postp", "Ques",
    "Interj", "Dup", "Pers",
];

/// Inflectional tags that mark the absence of a feature.
pub const FEATURELESS_TAGS: [&str; 1] = ["Pnon"];

/// One row of the conversion table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConversionRule {
    pub sak_tag: String,
    pub ud_features: FeatureSet,
}

impl ConversionRule {
    pub fn standard() -> Vec<ConversionRule> {
        CONVERSION_TABLE
            .iter()
            .map(|(tag, feats)| ConversionRule {
                sak_tag: tag.to_string(),
                ud_features: parse_feats(feats).expect("conversion table is well formed"),
            })
            .collect()
    }
}
