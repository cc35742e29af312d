//! Parsing, serialization, and canonicalization between the object model
//! and profile-constrained TEI XML.
//!
//! Reading happens in three passes: the XML layer builds an element tree,
//! the conformance pass checks every element, attribute, and child
//! sequence against the serialization profile, and the mapping pass turns
//! the tree into model values. Mapping only runs when conformance found no
//! errors, so it can rely on the profile's shape guarantees; the handful
//! of constraints the profile language cannot express (positional
//! representation binding, context-dependent attributes, numeric orders)
//! are enforced during mapping.
//!
//! Writing is the inverse fixed mapping. The writer emits the one
//! canonical shape: profile-ordered attributes, canonical child order,
//! two-space indentation, `\n` endings. [`canonicalize`] is literally
//! parse followed by serialize, which makes `serialize(parse(d))`
//! trivially equal to `canonicalize(d)` and canonicalization idempotent;
//! the test suites check both properties byte for byte.
//!
//! Two document shapes exist: a `body` document (one lexicon plus optional
//! bibliography records, `xmlns` on the root) and free-standing `entry` or
//! `etym` fragments (no `xmlns`). Fragment parsing validates the entry in
//! place; document parsing defers model validation to assembly so every
//! finding is reported once, with file labels.

mod read;
mod write;

pub use read::{parse_document, parse_entry};
pub use write::{serialize_document, serialize_entry, serialize_etymology};

use alloc::vec::Vec;

use crate::diag::Diagnostic;
use crate::model::{Bibliography, Lexicon};
use crate::profile::SerializationProfile;

/// Outcome of a parse: diagnostics plus, when none of them is an error,
/// the parsed value.
#[derive(Debug, Clone)]
pub struct ParseReport<T> {
    /// Present exactly when `diagnostics` contains no error.
    pub value: Option<T>,
    pub diagnostics: Vec<Diagnostic>,
}

impl<T> ParseReport<T> {
    pub(crate) fn finish(value: T, diagnostics: Vec<Diagnostic>) -> Self {
        let value = if diagnostics.iter().any(|d| d.is_error()) {
            None
        } else {
            Some(value)
        };
        ParseReport { value, diagnostics }
    }

    pub(crate) fn failed(diagnostics: Vec<Diagnostic>) -> Self {
        debug_assert!(diagnostics.iter().any(|d| d.is_error()));
        ParseReport {
            value: None,
            diagnostics,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.value.is_some()
    }
}

/// One parsed `body` document: a lexicon and its bibliography records.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedDocument {
    pub lexicon: Lexicon,
    pub bibliographies: Vec<Bibliography>,
}

impl From<ParsedDocument> for crate::model::AssemblyInput {
    fn from(doc: ParsedDocument) -> Self {
        let mut input = crate::model::AssemblyInput::new(doc.lexicon);
        input.bibliographies = doc.bibliographies;
        input
    }
}

/// Parse a document or fragment and re-serialize it canonically. The root
/// element picks the shape: `body` for documents, `entry` for fragments.
pub fn canonicalize(bytes: &[u8], profile: &SerializationProfile) -> ParseReport<Vec<u8>> {
    read::canonicalize(bytes, profile)
}
