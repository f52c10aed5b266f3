use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FeatsError {
    #[error("feature pair '{0}' has no '='")]
    MissingEquals(String),
    #[error("duplicate feature '{0}'")]
    Duplicate(String),
    #[error("empty feature name or value in '{0}'")]
    Empty(String),
    #[error("feature pair '{0}' contains '=', '|' or whitespace in a name or value")]
    InvalidChar(String),
}

/// Morphological features of a word.
///
/// Names are unique. Iteration and serialization follow the CoNLL-U order:
/// names sorted case-insensitively (ties broken by the exact string).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(
    try_from = "BTreeMap<String, String>",
    into = "BTreeMap<String, String>"
)]
pub struct FeatureSet {
    entries: Vec<(String, String)>,
}

fn compare_names(a: &str, b: &str) -> Ordering {
    a.chars()
        .flat_map(char::to_lowercase)
        .cmp(b.chars().flat_map(char::to_lowercase))
        .then_with(|| a.cmp(b))
}

fn is_legal_part(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c == '=' || c == '|' || c.is_whitespace())
}

impl FeatureSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.position(name).ok().map(|i| self.entries[i].1.as_str())
    }

    pub fn contains(&self, name: &str, value: &str) -> bool {
        self.get(name) == Some(value)
    }

    /// Insert or replace a feature, returning the previous value.
    pub fn insert(
        &mut self,
        name: impl Into<String>,
        value: impl Into<String>,
    ) -> Result<Option<String>, FeatsError> {
        let (name, value) = (name.into(), value.into());
        if name.is_empty() || value.is_empty() {
            return Err(FeatsError::Empty(format!("{name}={value}")));
        }
        if !is_legal_part(&name) || !is_legal_part(&value) {
            return Err(FeatsError::InvalidChar(format!("{name}={value}")));
        }
        match self.position(&name) {
            Ok(i) => Ok(Some(std::mem::replace(&mut self.entries[i].1, value))),
            Err(i) => {
                self.entries.insert(i, (name, value));
                Ok(None)
            }
        }
    }

    pub fn remove(&mut self, name: &str) -> Option<String> {
        self.position(name).ok().map(|i| self.entries.remove(i).1)
    }

    /// Entries in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(n, v)| (n.as_str(), v.as_str()))
    }

    /// `Name=Value` strings in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = String> + '_ {
        self.iter().map(|(n, v)| format!("{n}={v}"))
    }

    /// Copy every entry of `other` into `self`, overwriting shared names.
    pub fn overlay(&mut self, other: &FeatureSet) {
        for (n, v) in other.iter() {
            // Both sides already passed validation.
            let _ = self.insert(n, v);
        }
    }

    fn position(&self, name: &str) -> Result<usize, usize> {
        self.entries
            .binary_search_by(|(n, _)| compare_names(n, name))
    }
}

/// Parse a FEATS column value.
pub fn parse_feats(text: &str) -> Result<FeatureSet, FeatsError> {
    let mut set = FeatureSet::new();
    if text == super::EMPTY {
        return Ok(set);
    }
    for pair in text.split('|') {
        let (name, value) = pair
            .split_once('=')
            .ok_or_else(|| FeatsError::MissingEquals(pair.to_string()))?;
        if name.is_empty() || value.is_empty() {
            return Err(FeatsError::Empty(pair.to_string()));
        }
        if !is_legal_part(name) || !is_legal_part(value) {
            return Err(FeatsError::InvalidChar(pair.to_string()));
        }
        if set.insert(name, value)?.is_some() {
            return Err(FeatsError::Duplicate(name.to_string()));
        }
    }
    Ok(set)
}

impl FromStr for FeatureSet {
    type Err = FeatsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_feats(s)
    }
}

impl fmt::Display for FeatureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str(super::EMPTY);
        }
        for (i, (n, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{n}={v}")?;
        }
        Ok(())
    }
}

impl TryFrom<BTreeMap<String, String>> for FeatureSet {
    type Error = FeatsError;

    fn try_from(map: BTreeMap<String, String>) -> Result<Self, Self::Error> {
        let mut set = FeatureSet::new();
        for (n, v) in map {
            set.insert(n, v)?;
        }
        Ok(set)
    }
}

impl From<FeatureSet> for BTreeMap<String, String> {
    fn from(set: FeatureSet) -> Self {
        set.entries.into_iter().collect()
    }
}

impl<'a> FromIterator<(&'a str, &'a str)> for FeatureSet {
    /// Later entries overwrite earlier ones. Panics on illegal names or values.
    fn from_iter<I: IntoIterator<Item = (&'a str, &'a str)>>(iter: I) -> Self {
        let mut set = FeatureSet::new();
        for (n, v) in iter {
            set.insert(n, v).expect("illegal feature");
        }
        set
    }
}
