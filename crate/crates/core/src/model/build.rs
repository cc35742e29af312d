//! Resource assembly and whole-resource checks.
//!
//! [`assemble`] joins parsed documents (and in-memory parts) into one
//! resource and runs the full rulebook over it: entry-local invariants,
//! id uniqueness and syntax, reference resolution, cross-reference shape,
//! and etymological acyclicity. It always returns the assembled resource;
//! the report says whether it is valid. [`build_resource`] is the strict
//! variant for API construction: first error wins, no resource on failure.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::check::check_lexicon;
use super::walk::{Step, WalkItem};
use super::{
    Bibliography, CrossRef, LexicalResource, Lexicon, Node,
};
use crate::diag::{Diagnostic, Pos, ValidationReport};
use crate::etymology::{cycle_diagnostic, cycle_sets, EtyTargetKind, Etymology};
use crate::id::{is_ncname, Ref};
use crate::model::{EntryKind, LexicalEntry, Sense, TextRepresentation};

/// One document's contribution to a resource: its lexicon, the file label
/// used in diagnostics, and any document-level bibliography records.
#[derive(Debug, Clone)]
pub struct AssemblyInput {
    pub lexicon: Lexicon,
    pub label: Option<String>,
    pub bibliographies: Vec<Bibliography>,
}

impl AssemblyInput {
    pub fn new(lexicon: Lexicon) -> Self {
        AssemblyInput {
            lexicon,
            label: None,
            bibliographies: Vec::new(),
        }
    }

    pub fn labeled(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

/// File labels for diagnostics, aligned with the assembled resource.
pub(crate) struct Labels {
    lexicon_files: Vec<Option<String>>,
    bibliography_files: Vec<Option<String>>,
}

impl Labels {
    pub(crate) fn none_for(resource: &LexicalResource) -> Self {
        Labels {
            lexicon_files: resource.lexicons().iter().map(|_| None).collect(),
            bibliography_files: resource.bibliographies().iter().map(|_| None).collect(),
        }
    }

    fn of_lexicon(&self, lexicon: Option<u32>) -> Option<&str> {
        self.lexicon_files
            .get(lexicon? as usize)?
            .as_deref()
    }

    /// File of the document that declared `id`, via the declaring node's
    /// lexicon (resource-level records have their own label list).
    fn of_id(&self, resource: &LexicalResource, id: &str) -> Option<String> {
        self.of_lexicon(resource.lexicon_of(id)).map(String::from)
    }
}

/// Assemble documents plus in-memory parts into a resource and validate
/// everything. Lexicons keep the given order; document bibliographies come
/// before the free-standing ones.
pub fn assemble(
    inputs: Vec<AssemblyInput>,
    crossrefs: Vec<CrossRef>,
    bibliographies: Vec<Bibliography>,
) -> (LexicalResource, ValidationReport) {
    let mut lexicons = Vec::new();
    let mut lexicon_files = Vec::new();
    let mut bibs = Vec::new();
    let mut bibliography_files = Vec::new();
    for input in inputs {
        lexicon_files.push(input.label.clone());
        lexicons.push(input.lexicon);
        for bib in input.bibliographies {
            bibliography_files.push(input.label.clone());
            bibs.push(bib);
        }
    }
    for bib in bibliographies {
        bibliography_files.push(None);
        bibs.push(bib);
    }

    let resource = LexicalResource::new(lexicons, crossrefs, bibs);
    let labels = Labels {
        lexicon_files,
        bibliography_files,
    };
    let diagnostics = run_checks(&resource, &labels);
    (resource, ValidationReport::new(diagnostics))
}

/// Validating constructor: returns the resource only when every invariant
/// holds, otherwise the first error in document order. Warnings and infos
/// do not block construction; `validate_resource` reports them.
pub fn build_resource(
    lexicons: Vec<Lexicon>,
    crossrefs: Vec<CrossRef>,
    bibliographies: Vec<Bibliography>,
) -> Result<LexicalResource, Diagnostic> {
    let inputs = lexicons.into_iter().map(AssemblyInput::new).collect();
    let (resource, report) = assemble(inputs, crossrefs, bibliographies);
    match report.first_error() {
        Some(error) => Err(error.clone()),
        None => Ok(resource),
    }
}

/// The full rulebook. Shared by `assemble` (with file labels) and
/// `validate_resource` (without).
pub(crate) fn run_checks(resource: &LexicalResource, labels: &Labels) -> Vec<Diagnostic> {
    let mut out = Vec::new();

    // Entry-local invariants, tagged with the owning document.
    for (l, lexicon) in resource.lexicons().iter().enumerate() {
        let mut local = Vec::new();
        check_lexicon(lexicon, &mut local);
        let file = labels.of_lexicon(Some(l as u32));
        for mut diag in local {
            if diag.file.is_none() {
                diag.file = file.map(String::from);
            }
            out.push(diag);
        }
    }
    for bib in resource.bibliographies() {
        if bib.citation.is_empty() {
            out.push(
                Diagnostic::new("E-EMPTY-TEXT", "empty bibliography citation".into())
                    .at_opt(bib.pos)
                    .on_node(bib.id.as_str()),
            );
        }
    }

    check_ids(resource, labels, &mut out);
    check_refs(resource, labels, &mut out);
    check_crossrefs(resource, &mut out);

    for cycle in cycle_sets(resource) {
        out.push(cycle_diagnostic(resource, &cycle, |id| {
            let node = resource.node(id)?;
            Some((labels.of_id(resource, id), node.pos()?))
        }));
    }

    out
}

/// Id syntax and uniqueness over every id-bearing node, in document order.
/// Duplicates are flagged at the later declaration, citing the first.
fn check_ids(resource: &LexicalResource, labels: &Labels, out: &mut Vec<Diagnostic>) {
    let items = resource.walk_items();
    check_ids_over(
        &items,
        |item| match item.path.first() {
            Some(Step::Bibliography(i)) => labels
                .bibliography_files
                .get(*i as usize)
                .and_then(|f| f.as_deref())
                .map(String::from),
            _ => labels.of_lexicon(item.lexicon).map(String::from),
        },
        out,
    );
}

/// Id checks for a free-standing entry, as parsed from a fragment.
pub(crate) fn check_entry_ids(entry: &LexicalEntry, out: &mut Vec<Diagnostic>) {
    let items = super::entry_items(entry);
    check_ids_over(&items, |_| None, out);
}

fn check_ids_over(
    items: &[WalkItem<'_>],
    file_of: impl Fn(&WalkItem<'_>) -> Option<String>,
    out: &mut Vec<Diagnostic>,
) {
    struct First {
        file: Option<String>,
        pos: Option<Pos>,
        kind: &'static str,
    }
    let mut seen: BTreeMap<String, First> = BTreeMap::new();

    for item in items {
        let Some(id) = item.node.id() else { continue };
        let file = file_of(item);
        let pos = item.node.pos();

        if !is_ncname(id.as_str()) {
            let mut diag = Diagnostic::new(
                "E-ID-SYNTAX",
                format!("id '{id}' is not a valid NCName"),
            )
            .at_opt(pos)
            .on_node(id.as_str());
            diag.file = file.clone();
            out.push(diag);
        }

        match seen.get(id.as_str()) {
            None => {
                seen.insert(
                    String::from(id.as_str()),
                    First {
                        file: file.clone(),
                        pos,
                        kind: item.node.kind_name(),
                    },
                );
            }
            Some(first) => {
                let where_first = match (&first.file, first.pos) {
                    (Some(f), Some(p)) => format!(" at {f}:{p}"),
                    (None, Some(p)) => format!(" at {p}"),
                    (Some(f), None) => format!(" in {f}"),
                    (None, None) => String::new(),
                };
                let mut diag = Diagnostic::new(
                    "E-ID-DUP",
                    format!(
                        "id '{id}' already declared on a {}{where_first}",
                        first.kind
                    ),
                )
                .at_opt(pos)
                .on_node(id.as_str());
                diag.file = file;
                out.push(diag);
            }
        }
    }
}

/// What a reference is allowed to resolve to.
#[derive(Debug, Clone, Copy)]
enum Expect {
    AnyNode,
    Form,
    Bibliography,
    /// Aspects point at an entry, or at a form or sense of one.
    Aspect,
    /// Link target aspect: an aspect whose owning entry kind must agree
    /// with the authored link kind.
    LinkTarget(EtyTargetKind),
}

struct RefUse<'a> {
    r: &'a Ref,
    expect: Expect,
    what: &'static str,
    /// Nearest id-bearing ancestor, for the diagnostic's node field.
    node: Option<&'a str>,
    /// Fallback position when the reference itself has none.
    pos: Option<Pos>,
    file: Option<String>,
}

fn check_refs(resource: &LexicalResource, labels: &Labels, out: &mut Vec<Diagnostic>) {
    for use_ in collect_refs(resource, labels) {
        let id = use_.r.target.as_str();
        let pos = use_.r.pos.or(use_.pos);
        let mut push = |d: Diagnostic| {
            let mut d = d.at_opt(pos).on_node_opt(use_.node);
            d.file = use_.file.clone();
            out.push(d);
        };
        let Some(node) = resource.node(id) else {
            push(Diagnostic::new(
                "E-REF-DANGLING",
                format!("{} points to missing id '{id}'", use_.what),
            ));
            continue;
        };
        let kind = node.kind_name();
        match use_.expect {
            Expect::AnyNode => {}
            Expect::Form => {
                if !matches!(node, Node::Form(_)) {
                    push(Diagnostic::new(
                        "E-REF-KIND",
                        format!("{} must point to a form; '{id}' is a {kind}", use_.what),
                    ));
                }
            }
            Expect::Bibliography => {
                if !matches!(node, Node::Bibliography(_)) {
                    push(Diagnostic::new(
                        "E-REF-KIND",
                        format!(
                            "{} must point to a bibliography record; '{id}' is a {kind}",
                            use_.what
                        ),
                    ));
                }
            }
            Expect::Aspect => {
                if !matches!(node, Node::Entry(_) | Node::Form(_) | Node::Sense(_)) {
                    push(Diagnostic::new(
                        "E-REF-KIND",
                        format!(
                            "{} must point to an entry, form, or sense; '{id}' is a {kind}",
                            use_.what
                        ),
                    ));
                }
            }
            Expect::LinkTarget(link_kind) => {
                if !matches!(node, Node::Entry(_) | Node::Form(_) | Node::Sense(_)) {
                    push(Diagnostic::new(
                        "E-REF-KIND",
                        format!(
                            "{} must point to an entry, form, or sense; '{id}' is a {kind}",
                            use_.what
                        ),
                    ));
                } else if let Some(owner) = resource.owning_entry(id) {
                    let conflict = match owner.kind {
                        EntryKind::Etymon => link_kind != EtyTargetKind::Etymon,
                        EntryKind::Cognate => link_kind != EtyTargetKind::Cognate,
                        _ => false,
                    };
                    if conflict {
                        push(Diagnostic::new(
                            "E-REF-KIND",
                            format!(
                                "link marked {} but '{id}' belongs to a {} entry",
                                link_kind.as_str(),
                                owner.kind.as_str()
                            ),
                        ));
                    }
                }
            }
        }
    }
}

fn collect_refs<'a>(resource: &'a LexicalResource, labels: &Labels) -> Vec<RefUse<'a>> {
    let mut out = Vec::new();
    for (l, lexicon) in resource.lexicons().iter().enumerate() {
        let file = labels.of_lexicon(Some(l as u32)).map(String::from);
        for entry in &lexicon.entries {
            collect_entry_refs(entry, &file, &mut out);
        }
    }
    for (i, bib) in resource.bibliographies().iter().enumerate() {
        let file = labels
            .bibliography_files
            .get(i)
            .and_then(|f| f.as_deref())
            .map(String::from);
        for r in &bib.attached_to {
            out.push(RefUse {
                r,
                expect: Expect::AnyNode,
                what: "bibliography attachment",
                node: Some(bib.id.as_str()),
                pos: bib.pos,
                file: file.clone(),
            });
        }
    }
    out
}

fn collect_entry_refs<'a>(
    entry: &'a LexicalEntry,
    file: &Option<String>,
    out: &mut Vec<RefUse<'a>>,
) {
    let entry_id = entry.id.as_ref().map(|i| i.as_str());

    for form in entry.lemma.iter().chain(&entry.forms) {
        collect_form_refs(form, entry_id, file, out);
    }
    if let Some(gloss) = &entry.gloss {
        collect_text_refs(gloss, entry_id, file, out);
    }
    for sense in &entry.senses {
        collect_sense_refs(sense, entry_id, file, out);
    }
    if let Some(ety) = &entry.etymology {
        collect_ety_refs(ety, entry_id, file, out);
    }
    for sub in &entry.subentries {
        collect_entry_refs(sub, file, out);
    }
    for bib in &entry.bibliographies {
        for r in &bib.attached_to {
            out.push(RefUse {
                r,
                expect: Expect::AnyNode,
                what: "bibliography attachment",
                node: Some(bib.id.as_str()),
                pos: bib.pos,
                file: file.clone(),
            });
        }
    }
}

fn collect_form_refs<'a>(
    form: &'a crate::mrd::Form,
    entry_id: Option<&'a str>,
    file: &Option<String>,
    out: &mut Vec<RefUse<'a>>,
) {
    let node = form.id.as_ref().map(|i| i.as_str()).or(entry_id);
    for seg in &form.segments {
        out.push(RefUse {
            r: &seg.corresp,
            expect: Expect::Form,
            what: "segment reference",
            node,
            pos: seg.pos.or(form.pos),
            file: file.clone(),
        });
    }
    for nested in &form.nested_forms {
        collect_form_refs(nested, entry_id, file, out);
    }
}

fn collect_sense_refs<'a>(
    sense: &'a Sense,
    entry_id: Option<&'a str>,
    file: &Option<String>,
    out: &mut Vec<RefUse<'a>>,
) {
    let node = sense.id.as_ref().map(|i| i.as_str()).or(entry_id);
    for text in sense.definitions.iter().chain(&sense.examples) {
        for r in &text.bibliography_refs {
            out.push(RefUse {
                r,
                expect: Expect::Bibliography,
                what: "text source reference",
                node,
                pos: text.pos.or(sense.pos),
                file: file.clone(),
            });
        }
    }
    for sub in &sense.subsenses {
        collect_sense_refs(sub, entry_id, file, out);
    }
}

fn collect_text_refs<'a>(
    text: &'a TextRepresentation,
    node: Option<&'a str>,
    file: &Option<String>,
    out: &mut Vec<RefUse<'a>>,
) {
    for r in &text.bibliography_refs {
        out.push(RefUse {
            r,
            expect: Expect::Bibliography,
            what: "text source reference",
            node,
            pos: text.pos,
            file: file.clone(),
        });
    }
}

fn collect_ety_refs<'a>(
    ety: &'a Etymology,
    entry_id: Option<&'a str>,
    file: &Option<String>,
    out: &mut Vec<RefUse<'a>>,
) {
    let ety_node = ety.id.as_ref().map(|i| i.as_str()).or(entry_id);
    for r in &ety.bibliography_refs {
        out.push(RefUse {
            r,
            expect: Expect::Bibliography,
            what: "etymology source reference",
            node: ety_node,
            pos: ety.pos,
            file: file.clone(),
        });
    }
    for link in &ety.links {
        let node = link.id.as_ref().map(|i| i.as_str()).or(ety_node);
        for r in &link.source_aspects {
            out.push(RefUse {
                r,
                expect: Expect::Aspect,
                what: "link source",
                node,
                pos: link.pos,
                file: file.clone(),
            });
        }
        for r in &link.target_aspects {
            out.push(RefUse {
                r,
                expect: Expect::LinkTarget(link.target_kind),
                what: "link target",
                node,
                pos: link.pos,
                file: file.clone(),
            });
        }
    }
    for sub in &ety.sub_etymologies {
        collect_ety_refs(sub, entry_id, file, out);
    }
}

fn check_crossrefs(resource: &LexicalResource, out: &mut Vec<Diagnostic>) {
    for xref in resource.crossrefs() {
        let node = xref.id.as_str();

        if !resource.contains_id(xref.source.target.as_str()) {
            out.push(
                Diagnostic::new(
                    "E-REF-DANGLING",
                    format!(
                        "cross-reference source points to missing id '{}'",
                        xref.source.target
                    ),
                )
                .at_opt(xref.source.pos)
                .on_node(node),
            );
        }
        if xref.targets.is_empty() {
            out.push(
                Diagnostic::new("E-LINK-TARGET", "cross-reference has no targets".into())
                    .on_node(node),
            );
        }

        let mut ordered: Vec<_> = xref.targets.iter().collect();
        ordered.sort_by_key(|t| t.order);
        for (i, target) in ordered.iter().enumerate() {
            let expected = i as u32 + 1;
            if target.order != expected {
                out.push(
                    Diagnostic::new(
                        "E-XREF-ORDER",
                        format!(
                            "target orders must run 1..{} consecutively; found {}",
                            xref.targets.len(),
                            target.order
                        ),
                    )
                    .on_node(node),
                );
                break;
            }
        }

        for target in &xref.targets {
            let id = target.target.target.as_str();
            if !resource.contains_id(id) {
                out.push(
                    Diagnostic::new(
                        "E-REF-DANGLING",
                        format!("cross-reference target points to missing id '{id}'"),
                    )
                    .at_opt(target.target.pos)
                    .on_node(node),
                );
                continue;
            }
            if id == xref.source.target.as_str() {
                out.push(
                    Diagnostic::new(
                        "E-XREF-SELF",
                        format!("cross-reference lists its source '{id}' as a target"),
                    )
                    .on_node(node),
                );
            }
            if let (Some(sl), Some(tl)) = (
                resource.lexicon_of(xref.source.target.as_str()),
                resource.lexicon_of(id),
            ) {
                if sl != tl {
                    out.push(
                        Diagnostic::new(
                            "I-XREF-LEXICON",
                            format!("cross-reference to '{id}' spans lexicons"),
                        )
                        .on_node(node),
                    );
                }
            }
        }
    }
}
