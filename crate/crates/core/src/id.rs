//! Node identifiers and references.
//!
//! Ids are XML NCNames (`xml:id` values). A [`Ref`] is a by-id reference
//! plus the source position of the referencing attribute when the reference
//! came from a document; the position is carried for diagnostics only and
//! is ignored by equality, ordering, and hashing so that semantically equal
//! values compare equal regardless of where they were written.

use alloc::string::String;
use core::cmp::Ordering;
use core::hash::{Hash, Hasher};

use crate::diag::Pos;

/// An `xml:id` value. The newtype does not enforce NCName syntax on its
/// own; construction of a resource validates every authored id and rejects
/// bad ones with `E-ID-SYNTAX`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub String);

impl NodeId {
    pub fn new(id: impl Into<String>) -> Self {
        NodeId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl core::fmt::Display for NodeId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for NodeId {
    fn from(s: &str) -> Self {
        NodeId::new(s)
    }
}

/// Reference to a node by id.
#[derive(Debug, Clone)]
pub struct Ref {
    pub target: NodeId,
    /// Position of the referencing attribute in the source document, when
    /// the reference was parsed rather than authored in memory.
    pub pos: Option<Pos>,
}

impl Ref {
    pub fn new(target: impl Into<NodeId>) -> Self {
        Ref {
            target: target.into(),
            pos: None,
        }
    }

    pub fn at(target: impl Into<NodeId>, pos: Pos) -> Self {
        Ref {
            target: target.into(),
            pos: Some(pos),
        }
    }
}

impl From<&str> for Ref {
    fn from(s: &str) -> Self {
        Ref::new(NodeId::new(s))
    }
}

impl PartialEq for Ref {
    fn eq(&self, other: &Self) -> bool {
        self.target == other.target
    }
}

impl Eq for Ref {}

impl PartialOrd for Ref {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ref {
    fn cmp(&self, other: &Self) -> Ordering {
        self.target.cmp(&other.target)
    }
}

impl Hash for Ref {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.target.hash(state);
    }
}

/// NameStartChar from XML 1.0, minus the colon (NCName restriction).
fn ncname_start_char(c: char) -> bool {
    matches!(c,
        'A'..='Z' | '_' | 'a'..='z'
        | '\u{C0}'..='\u{D6}' | '\u{D8}'..='\u{F6}' | '\u{F8}'..='\u{2FF}'
        | '\u{370}'..='\u{37D}' | '\u{37F}'..='\u{1FFF}'
        | '\u{200C}'..='\u{200D}' | '\u{2070}'..='\u{218F}'
        | '\u{2C00}'..='\u{2FEF}' | '\u{3001}'..='\u{D7FF}'
        | '\u{F900}'..='\u{FDCF}' | '\u{FDF0}'..='\u{FFFD}'
        | '\u{10000}'..='\u{EFFFF}')
}

fn ncname_char(c: char) -> bool {
    ncname_start_char(c)
        || matches!(c,
            '-' | '.' | '0'..='9' | '\u{B7}'
            | '\u{300}'..='\u{36F}' | '\u{203F}'..='\u{2040}')
}

/// XML Name characters additionally allow the colon. The XML reader uses
/// these; id validation uses the NCName forms above.
pub(crate) fn name_start_char(c: char) -> bool {
    c == ':' || ncname_start_char(c)
}

pub(crate) fn name_char(c: char) -> bool {
    c == ':' || ncname_char(c)
}

/// True when `s` is a valid NCName (a colon-free XML name).
pub fn is_ncname(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if ncname_start_char(c) => chars.all(ncname_char),
        _ => false,
    }
}

/// Light well-formedness check for language tags: 1-8 character ASCII
/// alphanumeric subtags separated by single hyphens, first subtag
/// alphabetic. Deliberately not a registry lookup.
pub fn is_language_tag(s: &str) -> bool {
    let mut first = true;
    for part in s.split('-') {
        let len_ok = (1..=8).contains(&part.len());
        let chars_ok = if first {
            part.bytes().all(|b| b.is_ascii_alphabetic())
        } else {
            part.bytes().all(|b| b.is_ascii_alphanumeric())
        };
        if !len_ok || !chars_ok {
            return false;
        }
        first = false;
    }
    !first
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn ncname_accepts_typical_ids() {
        for id in ["center_form", "a", "_x", "sense-1.2", "ety_kentron", "κέντρον"] {
            assert!(is_ncname(id), "{id}");
        }
    }

    #[test]
    fn ncname_rejects_bad_ids() {
        for id in ["", "1abc", "-a", ".a", "a b", "a:b", "#a", "a\u{2028}b"] {
            assert!(!is_ncname(id), "{id}");
        }
    }

    #[test]
    fn language_tags() {
        for tag in ["en", "fr", "grc", "sga", "ine", "en-US", "x-private", "und"] {
            assert!(is_language_tag(tag), "{tag}");
        }
        for tag in ["", "-en", "en-", "e n", "toolongtag9", "en--US", "9en", "en_US"] {
            assert!(!is_language_tag(tag), "{tag}");
        }
    }

    #[test]
    fn ref_equality_ignores_position() {
        let a = Ref::new("x");
        let b = Ref::at("x", Pos::new(4, 7));
        assert_eq!(a, b);
        let mut set = BTreeSet::new();
        set.insert(a);
        assert!(set.contains(&b));
    }
}
