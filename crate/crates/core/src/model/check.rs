//! Entry-local invariant checks.
//!
//! One implementation serves every path: `build_resource` (API
//! construction), `assemble` (document ingestion), `validate_resource`
//! (re-validation), and `parse_entry` (fragments). Positions come from the
//! nodes themselves, so parsed data is diagnosed at its source location
//! and in-memory data without positions still gets the same diagnostics.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{EntryKind, LexicalEntry, Lexicon, Sense, TextKind, TextRepresentation};
use crate::diag::{Diagnostic, Pos};
use crate::etymology::{check_temporal_consistency, DateKind, EtyDate, EtyLink, Etymology};
use crate::id::is_language_tag;
use crate::mrd::{Form, FormClass, Usage, NAMED_FEATURES};

/// Attribute a diagnostic to the nearest id-bearing node unless it already
/// names one.
fn tag(node: Option<&str>, d: Diagnostic) -> Diagnostic {
    match node {
        Some(id) if d.node.is_none() => d.on_node(id),
        _ => d,
    }
}

pub(crate) fn check_lexicon(lexicon: &Lexicon, out: &mut Vec<Diagnostic>) {
    match &lexicon.language {
        None => out.push(
            Diagnostic::new("W-NO-LANG", "lexicon declares no language".into())
                .at_opt(lexicon.pos),
        ),
        Some(lang) => check_language(lang, lexicon.pos, None, out),
    }
    for entry in &lexicon.entries {
        check_entry(entry, false, out);
    }
}

/// Check one entry and everything it owns, recursively.
pub(crate) fn check_entry(entry: &LexicalEntry, is_subentry: bool, out: &mut Vec<Diagnostic>) {
    let node = entry.id.as_ref().map(|id| String::from(id.as_str()));
    let node = node.as_deref();

    // Kind coherence.
    if is_subentry {
        if entry.kind != EntryKind::Related {
            out.push(tag(
                node,
                Diagnostic::new(
                    "E-ENTRY-KIND",
                    format!("a subentry must be a related entry, not {}", entry.kind.as_str()),
                )
                .at_opt(entry.pos),
            ));
        }
        match entry.re_type.as_deref() {
            Some("multiWordExpression") | Some("related") => {}
            Some(other) => out.push(tag(
                node,
                Diagnostic::new(
                    "E-ENTRY-KIND",
                    format!("unknown subentry relation '{other}'"),
                )
                .at_opt(entry.pos),
            )),
            None => out.push(tag(
                node,
                Diagnostic::new(
                    "E-ENTRY-KIND",
                    "a subentry must state its relation to the host entry".into(),
                )
                .at_opt(entry.pos),
            )),
        }
        // A subentry serializes as `re`, which carries only forms and
        // senses; anything else has no home in the serialization.
        let extras: [(bool, &str); 6] = [
            (entry.language.is_some(), "a language"),
            (entry.display_lang.is_some(), "a language label"),
            (entry.gloss.is_some(), "a gloss"),
            (entry.etymology.is_some(), "an etymology"),
            (!entry.subentries.is_empty(), "nested subentries"),
            (!entry.bibliographies.is_empty(), "bibliography records"),
        ];
        for (present, what) in extras {
            if present {
                out.push(tag(
                    node,
                    Diagnostic::new(
                        "E-UNSERIALIZABLE",
                        format!("a subentry cannot carry {what}"),
                    )
                    .at_opt(entry.pos),
                ));
            }
        }
    } else {
        if entry.kind == EntryKind::Related {
            out.push(tag(
                node,
                Diagnostic::new(
                    "E-ENTRY-KIND",
                    "related entries exist only as subentries".into(),
                )
                .at_opt(entry.pos),
            ));
        }
        if entry.re_type.is_some() {
            out.push(tag(
                node,
                Diagnostic::new(
                    "E-ENTRY-KIND",
                    "only subentries carry a host relation".into(),
                )
                .at_opt(entry.pos),
            ));
        }
    }
    if matches!(entry.kind, EntryKind::Etymon | EntryKind::Cognate) && entry.language.is_none() {
        out.push(tag(
            node,
            Diagnostic::new(
                "E-ENTRY-KIND",
                format!("a {} entry requires a language", entry.kind.as_str()),
            )
            .at_opt(entry.pos),
        ));
    }
    if let Some(lang) = &entry.language {
        check_language(lang, entry.pos, node, out);
    }
    if let Some(display) = &entry.display_lang {
        if display.is_empty() {
            out.push(tag(
                node,
                Diagnostic::new("E-EMPTY-TEXT", "empty language label".into()).at_opt(entry.pos),
            ));
        }
    }
    if let Some(gloss) = &entry.gloss {
        check_text(gloss, "gloss", TextKind::Gloss, out, node);
    }

    // Exactly one lemma.
    match &entry.lemma {
        None => out.push(tag(
            node,
            Diagnostic::new("E-LEMMA-MISSING", "entry has no lemma form".into())
                .at_opt(entry.pos),
        )),
        Some(lemma) => {
            if lemma.class != FormClass::Lemma {
                out.push(tag(
                    node,
                    Diagnostic::new(
                        "E-LEMMA-MISSING",
                        format!(
                            "the lemma slot holds a {} form, not a lemma",
                            lemma.class.token()
                        ),
                    )
                    .at_opt(lemma.pos.or(entry.pos)),
                ));
            }
            check_form(entry, lemma, true, is_subentry, out, node);
        }
    }
    for form in &entry.forms {
        if form.class == FormClass::Lemma {
            out.push(
                Diagnostic::new(
                    "E-LEMMA-EXTRA",
                    "entry declares more than one lemma form".into(),
                )
                .at_opt(form.pos.or(entry.pos))
                .on_node_opt(form.id.as_ref().map(|i| i.as_str()).or(node)),
            );
        }
        check_form(entry, form, false, is_subentry, out, node);
    }

    // Senses.
    if entry.kind == EntryKind::Standard && !is_subentry && entry.senses.is_empty() {
        out.push(tag(
            node,
            Diagnostic::new("W-NO-SENSE", "standard entry has no senses".into())
                .at_opt(entry.pos),
        ));
    }
    if is_subentry && !entry.senses.is_empty() {
        let pos = entry.senses[0].pos.or(entry.pos);
        out.push(tag(
            node,
            Diagnostic::new("I-RE-SENSE", "subentry carries its own senses".into()).at_opt(pos),
        ));
    }
    for sense in &entry.senses {
        check_sense(sense, out, node);
    }

    if let Some(ety) = &entry.etymology {
        check_etymology(ety, out, node);
        out.extend(check_temporal_consistency(ety));
    }

    for sub in &entry.subentries {
        check_entry(sub, true, out);
    }

    for bib in &entry.bibliographies {
        if bib.citation.is_empty() {
            out.push(
                Diagnostic::new("E-EMPTY-TEXT", "empty bibliography citation".into())
                    .at_opt(bib.pos)
                    .on_node(bib.id.as_str()),
            );
        }
    }
}

fn check_form(
    entry: &LexicalEntry,
    form: &Form,
    is_lemma_slot: bool,
    is_subentry: bool,
    out: &mut Vec<Diagnostic>,
    entry_id: Option<&str>,
) {
    let node = form
        .id
        .as_ref()
        .map(|i| i.as_str())
        .or(entry_id)
        .map(String::from);
    let node = node.as_deref();

    if form.representations.is_empty() && form.segments.is_empty() {
        out.push(tag(
            node,
            Diagnostic::new(
                "E-FORM-EMPTY",
                "form has neither representations nor segments".into(),
            )
            .at_opt(form.pos),
        ));
    }

    if !form.nested_forms.is_empty() && form.class != FormClass::Lemma {
        out.push(tag(
            node,
            Diagnostic::new(
                "E-FORM-NESTED",
                format!(
                    "a {} form cannot nest forms; only the lemma can",
                    form.class.token()
                ),
            )
            .at_opt(form.pos),
        ));
    }

    // Segments belong on the lemma form of a multiword expression.
    if !form.segments.is_empty() {
        let mwe_context = is_subentry
            && entry.kind == EntryKind::Related
            && entry.re_type.as_deref() == Some("multiWordExpression")
            && is_lemma_slot;
        if !mwe_context {
            let pos = form.segments[0].pos.or(form.pos);
            out.push(tag(
                node,
                Diagnostic::new(
                    "E-SEG-CONTEXT",
                    "component segments are only allowed on the lemma of a multiword expression"
                        .into(),
                )
                .at_opt(pos),
            ));
        }
        let mut ordered: Vec<_> = form.segments.iter().collect();
        ordered.sort_by_key(|s| s.order);
        for (i, seg) in ordered.iter().enumerate() {
            let expected = i as u32 + 1;
            if seg.order != expected {
                out.push(tag(
                    node,
                    Diagnostic::new(
                        "E-SEG-ORDER",
                        format!(
                            "segment orders must run 1..{} consecutively; found {}",
                            form.segments.len(),
                            seg.order
                        ),
                    )
                    .at_opt(seg.pos.or(form.pos)),
                ));
                break;
            }
        }
        for seg in &form.segments {
            if seg.surface.is_empty() {
                out.push(tag(
                    node,
                    Diagnostic::new("E-EMPTY-TEXT", "empty segment surface".into())
                        .at_opt(seg.pos.or(form.pos)),
                ));
            }
        }
    }

    for rep in &form.representations {
        if rep.orthography.is_empty() {
            out.push(tag(
                node,
                Diagnostic::new("E-EMPTY-TEXT", "empty orthography".into())
                    .at_opt(rep.pos.or(form.pos)),
            ));
        }
        if rep.pronunciation.as_deref() == Some("") {
            out.push(tag(
                node,
                Diagnostic::new("E-EMPTY-TEXT", "empty pronunciation".into())
                    .at_opt(rep.pos.or(form.pos)),
            ));
        }
        if let Some(lang) = &rep.language {
            check_language(lang, rep.pos.or(form.pos), node, out);
        }
        for usage in &rep.usages {
            check_usage(usage, rep.pos.or(form.pos), node, out);
        }
    }
    for usage in &form.usages {
        check_usage(usage, form.pos, node, out);
    }

    for feature in &form.grammatical_features {
        if feature.name.is_empty() || feature.value.is_empty() {
            out.push(tag(
                node,
                Diagnostic::new("E-EMPTY-TEXT", "empty grammatical feature".into())
                    .at_opt(form.pos),
            ));
        }
        if feature.syntax == crate::mrd::FeatureSyntax::NamedInGroup
            && !NAMED_FEATURES.contains(&feature.name.as_str())
        {
            out.push(tag(
                node,
                Diagnostic::new(
                    "E-UNSERIALIZABLE",
                    format!(
                        "feature '{}' has no named element; use the typed gram syntax",
                        feature.name
                    ),
                )
                .at_opt(form.pos),
            ));
        }
    }

    for nested in &form.nested_forms {
        if nested.class == FormClass::Lemma {
            out.push(
                Diagnostic::new(
                    "E-LEMMA-EXTRA",
                    "entry declares more than one lemma form".into(),
                )
                .at_opt(nested.pos.or(form.pos))
                .on_node_opt(nested.id.as_ref().map(|i| i.as_str()).or(entry_id)),
            );
        }
        check_form(entry, nested, false, is_subentry, out, entry_id);
    }
}

fn check_usage(usage: &Usage, pos: Option<Pos>, node: Option<&str>, out: &mut Vec<Diagnostic>) {
    if usage.usage_type.is_empty() || usage.value.is_empty() {
        out.push(tag(
            node,
            Diagnostic::new("E-EMPTY-TEXT", "empty usage label".into()).at_opt(pos),
        ));
    }
}

fn check_sense(sense: &Sense, out: &mut Vec<Diagnostic>, entry_id: Option<&str>) {
    let node = sense
        .id
        .as_ref()
        .map(|i| i.as_str())
        .or(entry_id)
        .map(String::from);
    let node = node.as_deref();

    if sense.is_empty() {
        out.push(
            Diagnostic::new(
                "E-SENSE-EMPTY",
                "sense has no definition, example, feature, or subsense".into(),
            )
            .at_opt(sense.pos)
            .on_node_opt(node),
        );
    }
    for text in &sense.definitions {
        check_text(text, "definition", TextKind::Definition, out, node);
    }
    for text in &sense.examples {
        check_text(text, "example", TextKind::Example, out, node);
    }
    for feature in &sense.grammatical_features {
        if feature.name.is_empty() || feature.value.is_empty() {
            out.push(
                Diagnostic::new("E-EMPTY-TEXT", "empty grammatical feature".into())
                    .at_opt(sense.pos)
                    .on_node_opt(node),
            );
        }
        if feature.syntax == crate::mrd::FeatureSyntax::GramBare {
            out.push(
                Diagnostic::new(
                    "E-UNSERIALIZABLE",
                    "sense features use the grouped syntax only".into(),
                )
                .at_opt(sense.pos)
                .on_node_opt(node),
            );
        }
    }
    for sub in &sense.subsenses {
        check_sense(sub, out, entry_id);
    }
}

fn check_text(
    text: &TextRepresentation,
    what: &str,
    expected: TextKind,
    out: &mut Vec<Diagnostic>,
    node: Option<&str>,
) {
    if text.text.is_empty() {
        out.push(
            Diagnostic::new("E-EMPTY-TEXT", format!("empty {what}"))
                .at_opt(text.pos)
                .on_node_opt(node),
        );
    }
    if text.kind != expected {
        out.push(
            Diagnostic::new(
                "E-UNSERIALIZABLE",
                format!("a {what} slot holds text of a different kind"),
            )
            .at_opt(text.pos)
            .on_node_opt(node),
        );
    }
    if let Some(lang) = &text.language {
        check_language(lang, text.pos, node, out);
    }
}

fn check_etymology(ety: &Etymology, out: &mut Vec<Diagnostic>, entry_id: Option<&str>) {
    let node = ety
        .id
        .as_ref()
        .map(|i| i.as_str())
        .or(entry_id)
        .map(String::from);
    let node = node.as_deref();

    if ety.ety_type.is_empty() {
        out.push(
            Diagnostic::new(
                "E-EMPTY-TEXT",
                "empty etymology type; use 'unknown' when the process is unknown".into(),
            )
            .at_opt(ety.pos)
            .on_node_opt(node),
        );
    }

    let mut ordered: Vec<&EtyLink> = ety.links.iter().collect();
    ordered.sort_by_key(|l| l.order);
    for (i, link) in ordered.iter().enumerate() {
        let expected = i as u32 + 1;
        if link.order != expected {
            out.push(
                Diagnostic::new(
                    "E-LINK-ORDER",
                    format!(
                        "link orders must run 1..{} consecutively; found {}",
                        ety.links.len(),
                        link.order
                    ),
                )
                .at_opt(link.pos.or(ety.pos))
                .on_node_opt(link.id.as_ref().map(|i| i.as_str()).or(node)),
            );
            break;
        }
    }

    for link in &ety.links {
        check_link(link, out, node);
    }
    for sub in &ety.sub_etymologies {
        check_etymology(sub, out, entry_id);
    }
}

fn check_link(link: &EtyLink, out: &mut Vec<Diagnostic>, ety_id: Option<&str>) {
    let node = link
        .id
        .as_ref()
        .map(|i| i.as_str())
        .or(ety_id)
        .map(String::from);
    let node = node.as_deref();

    if link.link_type.is_empty() {
        out.push(tag(
            node,
            Diagnostic::new(
                "E-EMPTY-TEXT",
                "empty link type; use 'unknown' when the process is unknown".into(),
            )
            .at_opt(link.pos),
        ));
    }
    if link.target_aspects.is_empty() {
        out.push(tag(
            node,
            Diagnostic::new("E-LINK-TARGET", "etymological link has no target".into())
                .at_opt(link.pos),
        ));
    }
    for display in [&link.display_lang, &link.display_orth, &link.display_gloss] {
        if display.as_deref() == Some("") {
            out.push(tag(
                node,
                Diagnostic::new("E-EMPTY-TEXT", "empty display field on link".into())
                    .at_opt(link.pos),
            ));
        }
    }
    if let Some(date) = &link.date {
        check_date(date, link.pos, node, out);
    }
}

fn check_date(
    date: &EtyDate,
    link_pos: Option<Pos>,
    node: Option<&str>,
    out: &mut Vec<Diagnostic>,
) {
    let pos = date.pos.or(link_pos);
    if date.text.is_empty() {
        out.push(tag(
            node,
            Diagnostic::new("E-EMPTY-TEXT", "empty date text".into()).at_opt(pos),
        ));
    }
    let bad = match date.kind {
        DateKind::Point => date.year_start.is_none() || date.year_start != date.year_end,
        DateKind::Range => match (date.year_start, date.year_end) {
            (Some(s), Some(e)) => s > e,
            _ => true,
        },
        DateKind::Relative => date.year_start.is_some() || date.year_end.is_some(),
    };
    if bad {
        let detail = match date.kind {
            DateKind::Point => "a point date needs one year",
            DateKind::Range => "a range needs start <= end years",
            DateKind::Relative => "a relative date carries no years",
        };
        out.push(tag(
            node,
            Diagnostic::new("E-DATE-RANGE", format!("inconsistent date: {detail}")).at_opt(pos),
        ));
    }
}

fn check_language(lang: &str, pos: Option<Pos>, node: Option<&str>, out: &mut Vec<Diagnostic>) {
    if !is_language_tag(lang) {
        out.push(
            Diagnostic::new(
                "E-LANG-SYNTAX",
                format!("'{lang}' is not a well-formed language tag"),
            )
            .at_opt(pos)
            .on_node_opt(node),
        );
    }
}
