use std::fmt;

use super::convert::ConvertError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphemeKind {
    /// `+`
    Inflectional,
    /// `&` (or the analyzer's original `-`)
    Derivational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morpheme {
    pub kind: MorphemeKind,
    /// Underlying form, e.g. `Hn`; empty for zero morphemes.
    pub surface: String,
    /// Bracket contents split on `+`: `[Verb+Pass]` gives `["Verb", "Pass"]`.
    pub tags: Vec<String>,
}

/// One analysis of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SakAnalysis {
    pub root: String,
    pub root_category: String,
    /// Extra tags inside the root bracket, e.g. `Prop` in `[Noun+Prop]`.
    pub root_tags: Vec<String>,
    pub morphemes: Vec<Morpheme>,
}

fn bracket_tags(content: &str, input: &str) -> Result<Vec<String>, ConvertError> {
    let tags: Vec<String> = content.split('+').map(str::to_string).collect();
    if tags.iter().any(|t| t.is_empty()) {
        return Err(ConvertError::Syntax {
            input: input.to_string(),
            reason: format!("empty tag in [{content}]"),
        });
    }
    Ok(tags)
}

/// Parse `root[Cat]` followed by `+surface[Tag]` / `&surface[Tag]` items.
pub fn parse_analysis(input: &str) -> Result<SakAnalysis, ConvertError> {
    let syntax = |reason: &str| ConvertError::Syntax {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let text = input.trim();
    let open = text.find('[').ok_or_else(|| syntax("missing [category]"))?;
    let root = &text[..open];
    if root.is_empty() {
        return Err(syntax("empty root"));
    }
    if root.contains(['+', '&', ']']) {
        return Err(syntax("morpheme before the root category"));
    }
    let mut rest = &text[open + 1..];
    let close = rest.find(']').ok_or_else(|| syntax("unclosed ["))?;
    let mut root_tags = bracket_tags(&rest[..close], input)?;
    let root_category = root_tags.remove(0);
    rest = &rest[close + 1..];

    let mut morphemes = Vec::new();
    while !rest.is_empty() {
        let kind = match rest.chars().next() {
            Some('+') => MorphemeKind::Inflectional,
            Some('&') | Some('-') => MorphemeKind::Derivational,
            _ => return Err(syntax("expected '+' or '&' before a morpheme")),
        };
        rest = &rest[1..];
        let open = rest.find('[').ok_or_else(|| syntax("morpheme without [tag]"))?;
        let surface = &rest[..open];
        if surface.contains(['+', '&', ']']) {
            return Err(syntax("morpheme without [tag]"));
        }
        let after = &rest[open + 1..];
        let close = after.find(']').ok_or_else(|| syntax("unclosed ["))?;
        morphemes.push(Morpheme {
            kind,
            surface: surface.to_string(),
            tags: bracket_tags(&after[..close], input)?,
        });
        rest = &after[close + 1..];
    }
    Ok(SakAnalysis {
        root: root.to_string(),
        root_category,
        root_tags,
        morphemes,
    })
}

impl fmt::Display for SakAnalysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}", self.root, self.root_category)?;
        for t in &self.root_tags {
            write!(f, "+{t}")?;
        }
        f.write_str("]")?;
        for m in &self.morphemes {
            let marker = match m.kind {
                MorphemeKind::Inflectional => '+',
                MorphemeKind::Derivational => '&',
            };
            write!(f, "{marker}{}[{}]", m.surface, m.tags.join("+"))?;
        }
        Ok(())
    }
}
