//! The core lexicon object model.
//!
//! A [`LexicalResource`] holds lexicons, resource-level cross-references,
//! and bibliography records. Entries own their forms, senses, etymology,
//! subentries, and entry-level bibliography; every id-bearing node is
//! registered in a resource-wide index, so references resolve in one
//! lookup.
//!
//! Model values can represent invalid states (a missing lemma, duplicate
//! ids, reference cycles): parsing and validation need to describe such
//! data to diagnose it. [`build_resource`] is the validating constructor
//! that refuses invalid input; [`crate::validate::validate_resource`]
//! re-checks any resource.
//!
//! Nodes parsed from XML remember their source position in a `pos` field.
//! Positions are provenance, not content: equality ignores them, so a
//! value round-tripped through serialization compares equal to the
//! original.

mod build;
mod check;
mod walk;

pub use build::{assemble, build_resource, AssemblyInput};
pub(crate) use build::{check_entry_ids, run_checks, Labels};
pub(crate) use check::check_entry;
pub(crate) use walk::{entry_items, Step};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::diag::{Diagnostic, Pos};
use crate::etymology::{EtyLink, Etymology};
use crate::id::{NodeId, Ref};
use crate::mrd::{Form, GrammaticalFeature};

/// Structural equality that skips `pos` fields: compares exactly the named
/// fields.
macro_rules! eq_fields {
    ($ty:ident: $($field:ident),+ $(,)?) => {
        impl PartialEq for $ty {
            fn eq(&self, other: &Self) -> bool {
                $(self.$field == other.$field)&&+
            }
        }
        impl Eq for $ty {}
    };
}
pub(crate) use eq_fields;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntryKind {
    /// An ordinary headword entry.
    Standard,
    /// A historical stage another entry derives from.
    Etymon,
    /// A parallel descendant of a shared ancestor.
    Cognate,
    /// A subentry: multiword expression or other related entry.
    Related,
}

impl EntryKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EntryKind::Standard => "standard",
            EntryKind::Etymon => "etymon",
            EntryKind::Cognate => "cognate",
            EntryKind::Related => "related",
        }
    }

    pub fn from_str(s: &str) -> Option<EntryKind> {
        [
            EntryKind::Standard,
            EntryKind::Etymon,
            EntryKind::Cognate,
            EntryKind::Related,
        ]
        .into_iter()
        .find(|k| k.as_str() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TextKind {
    Definition,
    Example,
    Gloss,
}

/// A piece of running text: definition, example, or gloss.
#[derive(Debug, Clone)]
pub struct TextRepresentation {
    pub kind: TextKind,
    pub text: String,
    pub language: Option<String>,
    /// Bibliography records backing this text.
    pub bibliography_refs: Vec<Ref>,
    pub pos: Option<Pos>,
}

eq_fields!(TextRepresentation: kind, text, language, bibliography_refs);

impl TextRepresentation {
    fn of(kind: TextKind, text: impl Into<String>) -> Self {
        TextRepresentation {
            kind,
            text: text.into(),
            language: None,
            bibliography_refs: Vec::new(),
            pos: None,
        }
    }

    pub fn definition(text: impl Into<String>) -> Self {
        Self::of(TextKind::Definition, text)
    }

    pub fn example(text: impl Into<String>) -> Self {
        Self::of(TextKind::Example, text)
    }

    pub fn gloss(text: impl Into<String>) -> Self {
        Self::of(TextKind::Gloss, text)
    }
}

#[derive(Debug, Clone)]
pub struct Sense {
    pub id: Option<NodeId>,
    pub grammatical_features: Vec<GrammaticalFeature>,
    pub definitions: Vec<TextRepresentation>,
    pub examples: Vec<TextRepresentation>,
    pub subsenses: Vec<Sense>,
    pub pos: Option<Pos>,
}

eq_fields!(Sense: id, grammatical_features, definitions, examples, subsenses);

impl Sense {
    pub fn new() -> Self {
        Sense {
            id: None,
            grammatical_features: Vec::new(),
            definitions: Vec::new(),
            examples: Vec::new(),
            subsenses: Vec::new(),
            pos: None,
        }
    }

    pub fn with_definition(text: impl Into<String>) -> Self {
        let mut sense = Sense::new();
        sense.definitions.push(TextRepresentation::definition(text));
        sense
    }

    /// A sense must say something: at least one definition, example,
    /// feature, or subsense.
    pub fn is_empty(&self) -> bool {
        self.definitions.is_empty()
            && self.examples.is_empty()
            && self.grammatical_features.is_empty()
            && self.subsenses.is_empty()
    }
}

impl Default for Sense {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone)]
pub struct LexicalEntry {
    pub id: Option<NodeId>,
    pub kind: EntryKind,
    /// Language of the entry when it differs from the lexicon's, required
    /// for etymon/cognate entries.
    pub language: Option<String>,
    /// Display label for the language as a source dictionary prints it
    /// ("OIr.", "Gk."), for etymon/cognate entries.
    pub display_lang: Option<String>,
    /// Short translation equivalent, typical on etymon/cognate entries.
    pub gloss: Option<TextRepresentation>,
    /// The lemma form. Exactly one is required for a valid entry; the
    /// option exists so invalid input remains representable.
    pub lemma: Option<Form>,
    /// Further forms (variants, inflected forms, stems, parts).
    pub forms: Vec<Form>,
    pub senses: Vec<Sense>,
    pub etymology: Option<Etymology>,
    /// Related entries: multiword expressions and other subentries.
    pub subentries: Vec<LexicalEntry>,
    /// Relation of a subentry to its host: "multiWordExpression" or
    /// "related". Set on subentries only.
    pub re_type: Option<String>,
    /// Entry-scoped bibliography records.
    pub bibliographies: Vec<Bibliography>,
    pub pos: Option<Pos>,
}

eq_fields!(LexicalEntry: id, kind, language, display_lang, gloss, lemma, forms, senses,
    etymology, subentries, re_type, bibliographies);

impl LexicalEntry {
    pub fn new(kind: EntryKind) -> Self {
        LexicalEntry {
            id: None,
            kind,
            language: None,
            display_lang: None,
            gloss: None,
            lemma: None,
            forms: Vec::new(),
            senses: Vec::new(),
            etymology: None,
            subentries: Vec::new(),
            re_type: None,
            bibliographies: Vec::new(),
            pos: None,
        }
    }

    /// Standard entry with a plain lemma.
    pub fn standard(lemma_orth: impl Into<String>) -> Self {
        let mut entry = LexicalEntry::new(EntryKind::Standard);
        entry.lemma = Some(Form::with_orth(crate::mrd::FormClass::Lemma, lemma_orth));
        entry
    }

    /// First orthography of the lemma form.
    pub fn lemma_orth(&self) -> Option<&str> {
        self.lemma.as_ref().and_then(Form::first_orth)
    }

    pub fn is_mwe(&self) -> bool {
        self.kind == EntryKind::Related
            && self
                .lemma
                .as_ref()
                .is_some_and(|lemma| !lemma.segments.is_empty())
    }
}

#[derive(Debug, Clone)]
pub struct Lexicon {
    /// Language code of the lexicon. `None` is representable (and flagged
    /// W-NO-LANG) so documents without one can be diagnosed.
    pub language: Option<String>,
    pub entries: Vec<LexicalEntry>,
    pub pos: Option<Pos>,
}

eq_fields!(Lexicon: language, entries);

impl Lexicon {
    pub fn new(language: Option<String>) -> Self {
        Lexicon {
            language,
            entries: Vec::new(),
            pos: None,
        }
    }
}

/// One target of a cross-reference, with its 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossRefTarget {
    pub target: Ref,
    pub order: u32,
}

/// A typed, directed link from one node to ordered targets: semantic
/// relations, see-also pointers, and similar. Authored at resource level;
/// never synthesized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossRef {
    pub id: NodeId,
    /// Relation vocabulary (synonymy, antonymy, seeAlso, …). Open set.
    pub ref_type: String,
    pub source: Ref,
    pub targets: Vec<CrossRefTarget>,
}

impl CrossRef {
    pub fn new(
        id: impl Into<NodeId>,
        ref_type: impl Into<String>,
        source: impl Into<Ref>,
        targets: impl IntoIterator<Item = Ref>,
    ) -> Self {
        CrossRef {
            id: id.into(),
            ref_type: ref_type.into(),
            source: source.into(),
            targets: targets
                .into_iter()
                .enumerate()
                .map(|(i, target)| CrossRefTarget {
                    target,
                    order: i as u32 + 1,
                })
                .collect(),
        }
    }
}

/// A bibliography record: citation text plus the nodes it documents.
#[derive(Debug, Clone)]
pub struct Bibliography {
    pub id: NodeId,
    pub citation: String,
    /// Nodes this record is attached to (the back-links are derived).
    pub attached_to: Vec<Ref>,
    pub pos: Option<Pos>,
}

eq_fields!(Bibliography: id, citation, attached_to);

impl Bibliography {
    pub fn new(id: impl Into<NodeId>, citation: impl Into<String>) -> Self {
        Bibliography {
            id: id.into(),
            citation: citation.into(),
            attached_to: Vec::new(),
            pos: None,
        }
    }
}

/// Borrowed handle to any id-bearing node.
#[derive(Debug, Clone, Copy)]
pub enum Node<'a> {
    Entry(&'a LexicalEntry),
    Form(&'a Form),
    Sense(&'a Sense),
    Etymology(&'a Etymology),
    Link(&'a EtyLink),
    CrossRef(&'a CrossRef),
    Bibliography(&'a Bibliography),
}

impl<'a> Node<'a> {
    pub fn id(&self) -> Option<&'a NodeId> {
        match self {
            Node::Entry(n) => n.id.as_ref(),
            Node::Form(n) => n.id.as_ref(),
            Node::Sense(n) => n.id.as_ref(),
            Node::Etymology(n) => n.id.as_ref(),
            Node::Link(n) => n.id.as_ref(),
            Node::CrossRef(n) => Some(&n.id),
            Node::Bibliography(n) => Some(&n.id),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Node::Entry(_) => "entry",
            Node::Form(_) => "form",
            Node::Sense(_) => "sense",
            Node::Etymology(_) => "etymology",
            Node::Link(_) => "link",
            Node::CrossRef(_) => "crossref",
            Node::Bibliography(_) => "bibliography",
        }
    }

    pub fn pos(&self) -> Option<Pos> {
        match self {
            Node::Entry(n) => n.pos,
            Node::Form(n) => n.pos,
            Node::Sense(n) => n.pos,
            Node::Etymology(n) => n.pos,
            Node::Link(n) => n.pos,
            Node::CrossRef(_) => None,
            Node::Bibliography(n) => n.pos,
        }
    }
}

/// Typed operation failures for query operations. Validation diagnostics
/// cover the same ground for whole-resource reports; these carry the
/// specific failure to the caller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpError {
    /// No node with this id exists.
    UnknownId(String),
    /// A reference names an id that does not exist.
    DanglingReference(String),
    /// The id resolves, but to the wrong kind of node.
    WrongKind {
        id: String,
        expected: &'static str,
        actual: &'static str,
    },
    /// The entry is not a multiword expression.
    NotAnMwe(String),
    /// The entry has no etymology.
    NoEtymology(String),
    /// The etymology chain revisited a stage.
    CyclicEtymology(String),
}

impl core::fmt::Display for OpError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            OpError::UnknownId(id) => write!(f, "no node with id '{id}'"),
            OpError::DanglingReference(id) => write!(f, "reference to missing id '{id}'"),
            OpError::WrongKind {
                id,
                expected,
                actual,
            } => write!(f, "'{id}' is a {actual}, expected a {expected}"),
            OpError::NotAnMwe(id) => write!(f, "entry '{id}' is not a multiword expression"),
            OpError::NoEtymology(id) => write!(f, "entry '{id}' has no etymology"),
            OpError::CyclicEtymology(id) => {
                write!(f, "etymology of '{id}' revisits a stage (cycle)")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct IndexEntry {
    path: Vec<Step>,
    /// Ordinal (walk order) of the owning entry; `None` for
    /// resource-level cross-references and bibliography records.
    entry_ordinal: Option<u32>,
    lexicon: Option<u32>,
}

/// A complete lexical resource. Fields are private: mutation goes through
/// [`LexicalResource::into_parts`] and reconstruction, which keeps the id
/// index consistent.
#[derive(Debug, Clone)]
pub struct LexicalResource {
    lexicons: Vec<Lexicon>,
    crossrefs: Vec<CrossRef>,
    bibliographies: Vec<Bibliography>,
    /// id → location. On duplicate ids the first declaration wins; the
    /// duplicates are diagnosed, not indexed.
    index: BTreeMap<String, IndexEntry>,
    /// Walk paths of all entries, indexed by ordinal.
    entry_paths: Vec<Vec<Step>>,
}

eq_fields!(LexicalResource: lexicons, crossrefs, bibliographies);

impl LexicalResource {
    /// Assemble a resource without validating. Duplicate ids resolve to
    /// the first declaration; [`build_resource`] is the checked
    /// constructor.
    pub fn new(
        lexicons: Vec<Lexicon>,
        crossrefs: Vec<CrossRef>,
        bibliographies: Vec<Bibliography>,
    ) -> Self {
        let mut resource = LexicalResource {
            lexicons,
            crossrefs,
            bibliographies,
            index: BTreeMap::new(),
            entry_paths: Vec::new(),
        };
        resource.reindex();
        resource
    }

    pub fn empty() -> Self {
        Self::new(Vec::new(), Vec::new(), Vec::new())
    }

    fn reindex(&mut self) {
        let mut index = BTreeMap::new();
        let mut entry_paths = Vec::new();
        for item in self.walk_items() {
            if let Node::Entry(_) = item.node {
                entry_paths.push(item.path.clone());
            }
            if let Some(id) = item.node.id() {
                index
                    .entry(String::from(id.as_str()))
                    .or_insert(IndexEntry {
                        path: item.path,
                        entry_ordinal: item.entry_ordinal,
                        lexicon: item.lexicon,
                    });
            }
        }
        self.index = index;
        self.entry_paths = entry_paths;
    }

    pub fn lexicons(&self) -> &[Lexicon] {
        &self.lexicons
    }

    pub fn crossrefs(&self) -> &[CrossRef] {
        &self.crossrefs
    }

    pub fn bibliographies(&self) -> &[Bibliography] {
        &self.bibliographies
    }

    pub fn into_parts(self) -> (Vec<Lexicon>, Vec<CrossRef>, Vec<Bibliography>) {
        (self.lexicons, self.crossrefs, self.bibliographies)
    }

    pub fn contains_id(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.index.keys().map(String::as_str)
    }

    /// Resolve an id to its node.
    pub fn node(&self, id: &str) -> Option<Node<'_>> {
        let entry = self.index.get(id)?;
        Some(self.node_at(&entry.path))
    }

    /// The entry that owns the node with this id (the entry itself when
    /// the id names an entry). `None` for resource-level nodes.
    pub fn owning_entry(&self, id: &str) -> Option<&LexicalEntry> {
        self.owning_entry_ordinal(id)
            .map(|ord| self.entry_by_ordinal(ord))
    }

    pub(crate) fn owning_entry_ordinal(&self, id: &str) -> Option<u32> {
        self.index.get(id)?.entry_ordinal
    }

    /// Lexicon index of the node with this id, when it sits in one.
    pub fn lexicon_of(&self, id: &str) -> Option<u32> {
        self.index.get(id)?.lexicon
    }

    pub(crate) fn entry_count(&self) -> usize {
        self.entry_paths.len()
    }

    pub(crate) fn entry_by_ordinal(&self, ordinal: u32) -> &LexicalEntry {
        match self.node_at(&self.entry_paths[ordinal as usize]) {
            Node::Entry(e) => e,
            _ => unreachable!("entry path resolves to an entry"),
        }
    }

    /// Every entry in the resource, subentries included, document order.
    pub fn entries(&self) -> impl Iterator<Item = &LexicalEntry> {
        self.entries_with_ordinals().map(|(_, e)| e)
    }

    pub fn entries_with_ordinals(&self) -> impl Iterator<Item = (u32, &LexicalEntry)> {
        (0..self.entry_paths.len()).map(|i| (i as u32, self.entry_by_ordinal(i as u32)))
    }

    /// Resolve a cross-reference: its targets in target order.
    pub fn resolve(&self, xref: &CrossRef) -> Result<Vec<Node<'_>>, OpError> {
        let mut targets: Vec<&CrossRefTarget> = xref.targets.iter().collect();
        targets.sort_by_key(|t| t.order);
        targets
            .into_iter()
            .map(|t| {
                self.node(t.target.target.as_str())
                    .ok_or_else(|| OpError::DanglingReference(t.target.target.as_str().into()))
            })
            .collect()
    }

    /// Bibliography records (resource- and entry-level) attached to the
    /// node with this id, document order.
    pub fn bibliographies_for(&self, id: &str) -> Vec<&Bibliography> {
        let mut out = Vec::new();
        for item in self.walk_items() {
            if let Node::Bibliography(bib) = item.node {
                if bib.attached_to.iter().any(|r| r.target.as_str() == id) {
                    out.push(bib);
                }
            }
        }
        out
    }

    /// Attach one more bibliography record at resource level, returning
    /// the extended resource. Fails when the record's id collides
    /// (E-ID-DUP), is not an NCName (E-ID-SYNTAX), or points at a missing
    /// node (E-REF-DANGLING).
    pub fn attach_bibliography(
        &self,
        bibliography: Bibliography,
    ) -> Result<LexicalResource, Diagnostic> {
        use alloc::format;
        if !crate::id::is_ncname(bibliography.id.as_str()) {
            return Err(Diagnostic::new(
                "E-ID-SYNTAX",
                format!("id '{}' is not a valid NCName", bibliography.id),
            )
            .on_node(bibliography.id.as_str()));
        }
        if self.contains_id(bibliography.id.as_str()) {
            return Err(Diagnostic::new(
                "E-ID-DUP",
                format!("id '{}' is already declared", bibliography.id),
            )
            .on_node(bibliography.id.as_str()));
        }
        for r in &bibliography.attached_to {
            if !self.contains_id(r.target.as_str()) {
                return Err(Diagnostic::new(
                    "E-REF-DANGLING",
                    format!(
                        "bibliography '{}' is attached to missing id '{}'",
                        bibliography.id, r.target
                    ),
                )
                .on_node(bibliography.id.as_str()));
            }
        }
        let mut bibliographies = self.bibliographies.clone();
        bibliographies.push(bibliography);
        Ok(LexicalResource::new(
            self.lexicons.clone(),
            self.crossrefs.clone(),
            bibliographies,
        ))
    }
}
