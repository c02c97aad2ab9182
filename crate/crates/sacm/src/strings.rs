//! Multilingual strings and utility attachments.
//!
//! Element text is stored as a [`MultiLangString`]: an ordered list of
//! entries, at most one per language tag. A tag names either a natural
//! language ("en", "de") or a computer language ("ocl"), so the same
//! description can carry prose and a machine-readable form side by side.

use crate::error::{Error, Result};
use crate::gid::Gid;

/// A single piece of text in one language.
///
/// When `expression_ref` is set the entry links to an `Expression` element
/// in a terminology package that models the phrase structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LangString {
    pub lang: String,
    pub content: String,
    pub expression_ref: Option<Gid>,
}

impl LangString {
    pub fn new(lang: impl Into<String>, content: impl Into<String>) -> Self {
        LangString {
            lang: lang.into(),
            content: content.into(),
            expression_ref: None,
        }
    }

    pub fn with_expression(mut self, expr: Gid) -> Self {
        self.expression_ref = Some(expr);
        self
    }
}

/// Ordered set of [`LangString`]s, at most one per language tag.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiLangString {
    entries: Vec<LangString>,
}

impl MultiLangString {
    pub fn new() -> Self {
        MultiLangString::default()
    }

    /// Single-entry string in the given language.
    pub fn of(lang: impl Into<String>, content: impl Into<String>) -> Self {
        let mut s = MultiLangString::new();
        s.set(LangString::new(lang, content));
        s
    }

    /// English-tagged single entry, the common case for authored fixtures.
    pub fn en(content: impl Into<String>) -> Self {
        MultiLangString::of("en", content)
    }

    /// Inserts an entry, replacing any existing entry with the same tag.
    pub fn set(&mut self, entry: LangString) {
        match self.entries.iter_mut().find(|e| e.lang == entry.lang) {
            Some(existing) => *existing = entry,
            None => self.entries.push(entry),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[LangString] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut Vec<LangString> {
        &mut self.entries
    }

    /// Content for an exact language match, falling back to the first entry
    /// in document order. The fallback keeps report output deterministic for
    /// documents that do not carry the requested language.
    pub fn localize(&self, lang: &str) -> Result<&str> {
        if self.entries.is_empty() {
            return Err(Error::EmptyString);
        }
        let entry = self
            .entries
            .iter()
            .find(|e| e.lang == lang)
            .unwrap_or(&self.entries[0]);
        Ok(&entry.content)
    }
}

impl From<&str> for MultiLangString {
    fn from(content: &str) -> Self {
        MultiLangString::en(content)
    }
}

/// Instantiation rule attached to a model element. The content is recorded
/// verbatim and surfaced in reports; it is never executed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplementationConstraint {
    pub content: MultiLangString,
}

/// Free-form annotation that is not part of an element's description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Note {
    pub content: MultiLangString,
}

/// Key/value extension attached to a model element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedValue {
    pub key: String,
    pub value: MultiLangString,
}
