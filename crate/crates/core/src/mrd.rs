//! Forms and morphology: the machine-readable-dictionary extensions.
//!
//! A [`Form`] covers the lemma, orthographic variants, inflected forms, and
//! morphological units (stems, word parts), discriminated by [`FormClass`].
//! Spelling/pronunciation pairs live in [`FormRepresentation`]s; a form can
//! carry several (regional spellings of one inflected form, for example).
//! Multiword expressions keep their component links as [`MweSegment`]s on
//! the lemma form of a related entry.

use alloc::string::String;
use alloc::vec::Vec;

use crate::diag::Pos;
use crate::id::{NodeId, Ref};
use crate::model::{eq_fields, EntryKind, LexicalEntry, LexicalResource, Node, OpError};

/// Authored class of a form. `variant` and `inflected` are the convenience
/// classes from dictionary practice; [`FormClass::semantic`] maps them onto
/// the underlying related-form/word-form distinction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormClass {
    Lemma,
    RelatedForm,
    WordForm,
    Stem,
    WordPart,
    Variant,
    Inflected,
}

impl FormClass {
    pub const ALL: [FormClass; 7] = [
        FormClass::Lemma,
        FormClass::RelatedForm,
        FormClass::WordForm,
        FormClass::Stem,
        FormClass::WordPart,
        FormClass::Variant,
        FormClass::Inflected,
    ];

    /// Serialization token (the `form/@type` value).
    pub fn token(self) -> &'static str {
        match self {
            FormClass::Lemma => "lemma",
            FormClass::RelatedForm => "related",
            FormClass::WordForm => "wordForm",
            FormClass::Stem => "stem",
            FormClass::WordPart => "part",
            FormClass::Variant => "variant",
            FormClass::Inflected => "inflected",
        }
    }

    pub fn from_token(token: &str) -> Option<FormClass> {
        Self::ALL.into_iter().find(|c| c.token() == token)
    }

    /// Collapse the convenience classes onto the core distinction:
    /// a variant is a related form, an inflected form is a word form.
    pub fn semantic(self) -> FormClass {
        match self {
            FormClass::Variant => FormClass::RelatedForm,
            FormClass::Inflected => FormClass::WordForm,
            other => other,
        }
    }
}

/// How a grammatical feature was authored, so it serializes back the same
/// way. `NamedInGroup` is only expressible for the features that have named
/// elements (`pos`, `number`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FeatureSyntax {
    /// `<pos>…</pos>` or `<number>…</number>` inside a `gramGrp`.
    NamedInGroup,
    /// `<gram type="…">…</gram>` inside a `gramGrp`.
    GramInGroup,
    /// `<gram type="…">…</gram>` directly under the form.
    GramBare,
}

/// Named elements available for [`FeatureSyntax::NamedInGroup`].
pub const NAMED_FEATURES: [&str; 2] = ["pos", "number"];

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrammaticalFeature {
    pub name: String,
    pub value: String,
    pub syntax: FeatureSyntax,
}

impl GrammaticalFeature {
    /// Feature with the idiomatic syntax for its name: named element when
    /// one exists, typed `gram` otherwise.
    pub fn new(name: impl Into<String>, value: impl Into<String>) -> Self {
        let name = name.into();
        let syntax = if NAMED_FEATURES.contains(&name.as_str()) {
            FeatureSyntax::NamedInGroup
        } else {
            FeatureSyntax::GramInGroup
        };
        GrammaticalFeature {
            name,
            value: value.into(),
            syntax,
        }
    }

    pub fn bare(name: impl Into<String>, value: impl Into<String>) -> Self {
        GrammaticalFeature {
            name: name.into(),
            value: value.into(),
            syntax: FeatureSyntax::GramBare,
        }
    }
}

/// Usage label (geographic, register, domain, …).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Usage {
    pub usage_type: String,
    pub value: String,
}

impl Usage {
    pub fn new(usage_type: impl Into<String>, value: impl Into<String>) -> Self {
        Usage {
            usage_type: usage_type.into(),
            value: value.into(),
        }
    }
}

/// One spelling of a form with its optional pronunciation and
/// representation-scoped usage labels.
#[derive(Debug, Clone)]
pub struct FormRepresentation {
    pub orthography: String,
    pub pronunciation: Option<String>,
    pub language: Option<String>,
    pub usages: Vec<Usage>,
    pub pos: Option<Pos>,
}

eq_fields!(FormRepresentation: orthography, pronunciation, language, usages);

impl FormRepresentation {
    pub fn new(orthography: impl Into<String>) -> Self {
        FormRepresentation {
            orthography: orthography.into(),
            pronunciation: None,
            language: None,
            usages: Vec::new(),
            pos: None,
        }
    }

    pub fn with_pron(mut self, pron: impl Into<String>) -> Self {
        self.pronunciation = Some(pron.into());
        self
    }
}

/// Component link of a multiword expression: which form the component is,
/// where it sits (1-based, consecutive), and its surface text.
#[derive(Debug, Clone)]
pub struct MweSegment {
    pub corresp: Ref,
    pub order: u32,
    pub surface: String,
    pub pos: Option<Pos>,
}

eq_fields!(MweSegment: corresp, order, surface);

impl MweSegment {
    pub fn new(corresp: impl Into<Ref>, order: u32, surface: impl Into<String>) -> Self {
        MweSegment {
            corresp: corresp.into(),
            order,
            surface: surface.into(),
            pos: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Form {
    pub id: Option<NodeId>,
    pub class: FormClass,
    pub representations: Vec<FormRepresentation>,
    /// Form-scoped grammatical features, in authored order.
    pub grammatical_features: Vec<GrammaticalFeature>,
    /// Form-scoped usage labels (representation-scoped ones live on the
    /// representations).
    pub usages: Vec<Usage>,
    /// Only the lemma form may nest forms (its variants).
    pub nested_forms: Vec<Form>,
    /// Multiword-expression component segments, on the lemma form of a
    /// related entry.
    pub segments: Vec<MweSegment>,
    pub pos: Option<Pos>,
}

eq_fields!(Form: id, class, representations, grammatical_features, usages, nested_forms, segments);

impl Form {
    pub fn new(class: FormClass) -> Self {
        Form {
            id: None,
            class,
            representations: Vec::new(),
            grammatical_features: Vec::new(),
            usages: Vec::new(),
            nested_forms: Vec::new(),
            segments: Vec::new(),
            pos: None,
        }
    }

    /// Form with one plain representation.
    pub fn with_orth(class: FormClass, orth: impl Into<String>) -> Self {
        let mut form = Form::new(class);
        form.representations.push(FormRepresentation::new(orth));
        form
    }

    pub fn first_orth(&self) -> Option<&str> {
        self.representations.first().map(|r| r.orthography.as_str())
    }

    /// This form and every form nested below it, document order.
    pub fn with_descendants(&self) -> Vec<&Form> {
        let mut out = Vec::new();
        fn push<'a>(form: &'a Form, out: &mut Vec<&'a Form>) {
            out.push(form);
            for nested in &form.nested_forms {
                push(nested, out);
            }
        }
        push(self, &mut out);
        out
    }
}

/// All forms of the entry (lemma first, nested forms included), document
/// order. The basis for the class partition: each form appears exactly once.
pub fn all_forms(entry: &LexicalEntry) -> Vec<&Form> {
    let mut out = Vec::new();
    if let Some(lemma) = &entry.lemma {
        out.extend(lemma.with_descendants());
    }
    for form in &entry.forms {
        out.extend(form.with_descendants());
    }
    out
}

/// Forms of the entry whose authored class is exactly `class`.
pub fn forms_by_class(entry: &LexicalEntry, class: FormClass) -> Vec<&Form> {
    all_forms(entry)
        .into_iter()
        .filter(|f| f.class == class)
        .collect()
}

/// One row of an inflection table: a spelling with the grammatical features
/// of its form and the applicable usage labels (form-scoped first, then
/// representation-scoped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InflectionRow<'a> {
    pub orthography: &'a str,
    pub features: &'a [GrammaticalFeature],
    pub usages: Vec<&'a Usage>,
}

/// Inflection table over every form that is semantically a word form
/// (authored `wordForm` or `inflected`), one row per representation,
/// document order.
pub fn inflection_table(entry: &LexicalEntry) -> Vec<InflectionRow<'_>> {
    let mut rows = Vec::new();
    for form in all_forms(entry) {
        if form.class.semantic() != FormClass::WordForm {
            continue;
        }
        for rep in &form.representations {
            let mut usages: Vec<&Usage> = form.usages.iter().collect();
            usages.extend(rep.usages.iter());
            rows.push(InflectionRow {
                orthography: &rep.orthography,
                features: &form.grammatical_features,
                usages,
            });
        }
    }
    rows
}

/// Resolved multiword-expression component: the segment, the form it names,
/// and the entry that owns that form.
#[derive(Debug, Clone)]
pub struct MweComponent<'a> {
    pub segment: &'a MweSegment,
    pub form: &'a Form,
    pub owner: &'a LexicalEntry,
}

/// Resolve the components of a multiword expression, in segment order.
///
/// `entry_id` must name a related entry whose lemma form carries segments;
/// each segment's `corresp` must resolve to a form.
pub fn mwe_components<'a>(
    resource: &'a LexicalResource,
    entry_id: &str,
) -> Result<Vec<MweComponent<'a>>, OpError> {
    let entry = match resource.node(entry_id) {
        None => return Err(OpError::UnknownId(entry_id.into())),
        Some(Node::Entry(e)) => e,
        Some(other) => {
            return Err(OpError::WrongKind {
                id: entry_id.into(),
                expected: "entry",
                actual: other.kind_name(),
            })
        }
    };
    let segments = match (&entry.kind, &entry.lemma) {
        (EntryKind::Related, Some(lemma)) if !lemma.segments.is_empty() => &lemma.segments,
        _ => return Err(OpError::NotAnMwe(entry_id.into())),
    };

    let mut ordered: Vec<&MweSegment> = segments.iter().collect();
    ordered.sort_by_key(|s| s.order);

    let mut out = Vec::new();
    for segment in ordered {
        let id = segment.corresp.target.as_str();
        let form = match resource.node(id) {
            None => return Err(OpError::DanglingReference(id.into())),
            Some(Node::Form(f)) => f,
            Some(other) => {
                return Err(OpError::WrongKind {
                    id: id.into(),
                    expected: "form",
                    actual: other.kind_name(),
                })
            }
        };
        let owner = resource
            .owning_entry(id)
            .expect("a resolved form always has an owning entry");
        out.push(MweComponent {
            segment,
            form,
            owner,
        });
    }
    Ok(out)
}

/// Surface string of a multiword expression: segment surfaces in order,
/// joined with single spaces. `None` when the entry is not an MWE.
pub fn mwe_surface(entry: &LexicalEntry) -> Option<String> {
    let lemma = entry.lemma.as_ref()?;
    if entry.kind != EntryKind::Related || lemma.segments.is_empty() {
        return None;
    }
    let mut ordered: Vec<&MweSegment> = lemma.segments.iter().collect();
    ordered.sort_by_key(|s| s.order);
    let parts: Vec<&str> = ordered.iter().map(|s| s.surface.as_str()).collect();
    Some(parts.join(" "))
}
