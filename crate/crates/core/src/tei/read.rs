//! Reader: profile conformance and the XML-to-model mapping.
//!
//! Conformance walks the element tree against the profile and reports
//! every violation with its source position. Mapping runs only on
//! conforming trees; it enforces the remaining context constraints the
//! profile language cannot state (positional binding of `pron`/`usg` to
//! the most recent `orth`, citation children by citation type, numeric
//! order attributes, fragment-only references) and records each node's
//! source position for later diagnostics.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::diag::Diagnostic;
use crate::etymology::{DateKind, EtyDate, EtyLink, EtyTargetKind, Etymology};
use crate::id::{NodeId, Ref};
use crate::model::{
    check_entry, check_entry_ids, Bibliography, EntryKind, LexicalEntry, Lexicon, Sense, TextKind,
    TextRepresentation,
};
use crate::mrd::{
    FeatureSyntax, Form, FormClass, FormRepresentation, GrammaticalFeature, MweSegment, Usage,
};
use crate::profile::{ContentModel, ElementRule, SerializationProfile};
use crate::xml::{self, XmlAttr, XmlElement, XmlNode};

use super::write::{serialize_document, serialize_entry};
use super::{ParseReport, ParsedDocument};

/// Collapse XML whitespace runs to single spaces and trim the ends.
pub(super) fn normalize_ws(s: &str) -> String {
    let mut out = String::new();
    for word in s.split_ascii_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(word);
    }
    out
}

fn has_error(diags: &[Diagnostic]) -> bool {
    diags.iter().any(|d| d.is_error())
}

/// Parse one free-standing `entry` fragment and validate it in place.
/// References are kept as written; nothing is resolved.
pub fn parse_entry(bytes: &[u8], profile: &SerializationProfile) -> ParseReport<LexicalEntry> {
    match xml::parse(bytes) {
        Ok(doc) => entry_from_root(&doc.root, profile),
        Err(e) => ParseReport::failed(vec![e.into_diagnostic()]),
    }
}

/// Parse one `body` document into a lexicon plus bibliography records.
/// Only serialization-level findings are reported here; model validation
/// happens at assembly, once, with file labels.
pub fn parse_document(bytes: &[u8], profile: &SerializationProfile) -> ParseReport<ParsedDocument> {
    match xml::parse(bytes) {
        Ok(doc) => document_from_root(&doc.root, profile),
        Err(e) => ParseReport::failed(vec![e.into_diagnostic()]),
    }
}

pub(super) fn canonicalize(
    bytes: &[u8],
    profile: &SerializationProfile,
) -> ParseReport<Vec<u8>> {
    let doc = match xml::parse(bytes) {
        Ok(doc) => doc,
        Err(e) => return ParseReport::failed(vec![e.into_diagnostic()]),
    };
    match doc.root.name.as_str() {
        "entry" => reserialize(entry_from_root(&doc.root, profile), |e| {
            serialize_entry(e, profile)
        }),
        "body" => reserialize(document_from_root(&doc.root, profile), |d| {
            serialize_document(d, profile)
        }),
        other => ParseReport::failed(vec![Diagnostic::new(
            "E-PROFILE-ELEMENT",
            format!("root element must be 'entry' or 'body', found '{other}'"),
        )
        .at(doc.root.pos)]),
    }
}

fn reserialize<T>(
    report: ParseReport<T>,
    write: impl FnOnce(&T) -> Result<Vec<u8>, Vec<Diagnostic>>,
) -> ParseReport<Vec<u8>> {
    let mut diags = report.diagnostics;
    match report.value {
        None => ParseReport {
            value: None,
            diagnostics: diags,
        },
        Some(value) => match write(&value) {
            Ok(bytes) => ParseReport::finish(bytes, diags),
            Err(errs) => {
                diags.extend(errs);
                ParseReport::failed(diags)
            }
        },
    }
}

fn entry_from_root(root: &XmlElement, profile: &SerializationProfile) -> ParseReport<LexicalEntry> {
    let mut diags = Vec::new();
    conform_root(root, "entry", profile, &mut diags);
    if has_error(&diags) {
        return ParseReport::failed(diags);
    }
    let mut mapper = Mapper { profile, diags };
    let entry = mapper.entry(root);
    let mut diags = mapper.diags;
    if !has_error(&diags) {
        check_entry(&entry, false, &mut diags);
        check_entry_ids(&entry, &mut diags);
    }
    ParseReport::finish(entry, diags)
}

fn document_from_root(
    root: &XmlElement,
    profile: &SerializationProfile,
) -> ParseReport<ParsedDocument> {
    let mut diags = Vec::new();
    conform_root(root, "body", profile, &mut diags);
    if has_error(&diags) {
        return ParseReport::failed(diags);
    }
    let mut mapper = Mapper { profile, diags };
    let doc = mapper.document(root);
    ParseReport::finish(doc, mapper.diags)
}

// --- profile conformance ---------------------------------------------------

fn conform_root(
    root: &XmlElement,
    expected: &str,
    profile: &SerializationProfile,
    out: &mut Vec<Diagnostic>,
) {
    if root.name != expected {
        out.push(
            Diagnostic::new(
                "E-PROFILE-ELEMENT",
                format!("expected root element '{expected}', found '{}'", root.name),
            )
            .at(root.pos),
        );
        return;
    }
    match profile.element(&root.name) {
        Some(rule) => conform_element(root, rule, profile, None, out),
        None => out.push(
            Diagnostic::new(
                "E-PROFILE-ELEMENT",
                format!("element '{}' is not in the serialization profile", root.name),
            )
            .at(root.pos),
        ),
    }
}

fn conform_element(
    elem: &XmlElement,
    rule: &ElementRule,
    profile: &SerializationProfile,
    node: Option<&str>,
    out: &mut Vec<Diagnostic>,
) {
    let node = elem.attr("xml:id").or(node);
    let tag = |d: Diagnostic| d.on_node_opt(node);

    for attr in &elem.attrs {
        if attr.name == "xmlns" {
            if attr.value != profile.namespace {
                out.push(tag(Diagnostic::new(
                    "E-PROFILE-ATTR",
                    format!(
                        "namespace '{}' does not match the profile namespace '{}'",
                        attr.value, profile.namespace
                    ),
                )
                .at(attr.pos)));
            }
            continue;
        }
        if attr.name.contains(':') && attr.name != "xml:id" && attr.name != "xml:lang" {
            out.push(tag(Diagnostic::new(
                "E-PROFILE-ATTR",
                format!("namespaced attribute '{}' is not supported", attr.name),
            )
            .at(attr.pos)));
            continue;
        }
        match rule.attr(&attr.name) {
            None => out.push(tag(Diagnostic::new(
                "E-PROFILE-ATTR",
                format!("attribute '{}' is not allowed on '{}'", attr.name, elem.name),
            )
            .at(attr.pos))),
            Some(ar) => {
                if !ar.allows(&attr.value) {
                    out.push(tag(Diagnostic::new(
                        "E-PROFILE-ATTR",
                        format!(
                            "value '{}' is not allowed for '{}' attribute '{}'",
                            attr.value, elem.name, attr.name
                        ),
                    )
                    .at(attr.pos)));
                }
            }
        }
    }
    for ar in &rule.attrs {
        if ar.required && elem.attr(&ar.name).is_none() {
            out.push(tag(Diagnostic::new(
                "E-ATTR-REQUIRED",
                format!("'{}' requires attribute '{}'", elem.name, ar.name),
            )
            .at(elem.pos)));
        }
    }

    let mut last_index = 0usize;
    let mut counts: Vec<(&str, u32)> = Vec::new();
    for child_node in &elem.children {
        let child = match child_node {
            XmlNode::Text(t) => {
                if rule.content == ContentModel::Children
                    && !t.text.chars().all(|c| matches!(c, ' ' | '\t' | '\n'))
                {
                    out.push(tag(Diagnostic::new(
                        "E-PROFILE-STRUCT",
                        format!("'{}' does not allow text content", elem.name),
                    )
                    .at(t.pos)));
                }
                continue;
            }
            XmlNode::Element(child) => child,
        };
        let Some(child_rule) = profile.element(&child.name) else {
            out.push(tag(Diagnostic::new(
                "E-PROFILE-ELEMENT",
                format!("element '{}' is not in the serialization profile", child.name),
            )
            .at(child.pos)));
            continue;
        };
        match rule.child(&child.name) {
            None => out.push(tag(Diagnostic::new(
                "E-PROFILE-ELEMENT",
                format!(
                    "element '{}' is not allowed inside '{}'",
                    child.name, elem.name
                ),
            )
            .at(child.pos))),
            Some(cr) => {
                let index = rule.child_index(&child.name).unwrap_or(0);
                if rule.ordered && index < last_index {
                    out.push(tag(Diagnostic::new(
                        "E-PROFILE-STRUCT",
                        format!(
                            "element '{}' out of order inside '{}'",
                            child.name, elem.name
                        ),
                    )
                    .at(child.pos)));
                }
                if rule.ordered {
                    last_index = last_index.max(index);
                }
                let count = match counts.iter_mut().find(|(n, _)| *n == child.name) {
                    Some((_, c)) => {
                        *c += 1;
                        *c
                    }
                    None => {
                        counts.push((child.name.as_str(), 1));
                        1
                    }
                };
                if cr.max.is_some_and(|max| count == max + 1) {
                    out.push(tag(Diagnostic::new(
                        "E-PROFILE-STRUCT",
                        format!(
                            "'{}' allows at most {} '{}' child element(s)",
                            elem.name,
                            cr.max.unwrap(),
                            child.name
                        ),
                    )
                    .at(child.pos)));
                }
            }
        }
        conform_element(child, child_rule, profile, node, out);
    }
}

// --- mapping ----------------------------------------------------------------

struct Mapper<'p> {
    profile: &'p SerializationProfile,
    diags: Vec<Diagnostic>,
}

impl Mapper<'_> {
    /// Element text under its profile text policy.
    fn text(&self, elem: &XmlElement) -> String {
        match self.profile.element(&elem.name).map(|r| r.content) {
            Some(ContentModel::Normalized) => normalize_ws(&elem.text_content()),
            _ => elem.text_content(),
        }
    }

    fn id_of(&self, elem: &XmlElement) -> Option<NodeId> {
        elem.attr("xml:id").map(NodeId::from)
    }

    /// Space-separated fragment references (`#id ...`).
    fn refs(&mut self, attr: &XmlAttr, elem_name: &str) -> Vec<Ref> {
        let mut out = Vec::new();
        for token in attr.value.split_ascii_whitespace() {
            match token.strip_prefix('#') {
                Some(id) => out.push(Ref::at(id, attr.pos)),
                None => self.diags.push(
                    Diagnostic::new(
                        "E-PROFILE-ATTR",
                        format!(
                            "reference '{token}' in '{elem_name}' attribute '{}' must be a fragment reference ('#id')",
                            attr.name
                        ),
                    )
                    .at(attr.pos),
                ),
            }
        }
        out
    }

    fn single_ref(&mut self, attr: &XmlAttr, elem_name: &str) -> Option<Ref> {
        let mut tokens = attr.value.split_ascii_whitespace();
        let (first, rest) = (tokens.next(), tokens.next());
        let (Some(token), None) = (first, rest) else {
            self.diags.push(
                Diagnostic::new(
                    "E-PROFILE-ATTR",
                    format!(
                        "attribute '{}' on '{}' must hold exactly one reference",
                        attr.name, elem_name
                    ),
                )
                .at(attr.pos),
            );
            return None;
        };
        match token.strip_prefix('#') {
            Some(id) => Some(Ref::at(id, attr.pos)),
            None => {
                self.diags.push(
                    Diagnostic::new(
                        "E-PROFILE-ATTR",
                        format!(
                            "reference '{token}' in '{elem_name}' attribute '{}' must be a fragment reference ('#id')",
                            attr.name
                        ),
                    )
                    .at(attr.pos),
                );
                None
            }
        }
    }

    /// `1`-based order attribute.
    fn order_number(&mut self, attr: &XmlAttr, elem_name: &str) -> Option<u32> {
        match attr.value.parse::<u32>() {
            Ok(n) => Some(n),
            Err(_) => {
                self.diags.push(
                    Diagnostic::new(
                        "E-PROFILE-ATTR",
                        format!(
                            "attribute '{}' on '{}' must be a non-negative integer, not '{}'",
                            attr.name, elem_name, attr.value
                        ),
                    )
                    .at(attr.pos),
                );
                None
            }
        }
    }

    /// Flag attributes the model cannot keep in this context, so nothing
    /// is dropped silently.
    fn flag_attrs(&mut self, elem: &XmlElement, names: &[&str], context: &str) {
        for name in names {
            if let Some(attr) = elem.attr_node(name) {
                self.diags.push(
                    Diagnostic::new(
                        "E-PROFILE-STRUCT",
                        format!("attribute '{name}' is not allowed on {context}"),
                    )
                    .at(attr.pos),
                );
            }
        }
    }

    fn document(&mut self, root: &XmlElement) -> ParsedDocument {
        let mut lexicon = Lexicon::new(root.attr("xml:lang").map(String::from));
        lexicon.pos = Some(root.pos);
        let mut bibliographies = Vec::new();
        for child in root.elements() {
            match child.name.as_str() {
                "entry" => lexicon.entries.push(self.entry(child)),
                "bibl" => bibliographies.push(self.bibl(child)),
                _ => {}
            }
        }
        ParsedDocument {
            lexicon,
            bibliographies,
        }
    }

    fn entry(&mut self, elem: &XmlElement) -> LexicalEntry {
        let kind = elem
            .attr("type")
            .and_then(EntryKind::from_str)
            .unwrap_or(EntryKind::Standard);
        let mut entry = LexicalEntry::new(kind);
        entry.id = self.id_of(elem);
        entry.language = elem.attr("xml:lang").map(String::from);
        entry.pos = Some(elem.pos);
        for child in elem.elements() {
            match child.name.as_str() {
                "lang" => entry.display_lang = Some(self.text(child)),
                "form" => {
                    let form = self.form(child, false);
                    if form.class == FormClass::Lemma && entry.lemma.is_none() {
                        entry.lemma = Some(form);
                    } else {
                        entry.forms.push(form);
                    }
                }
                "gloss" => entry.gloss = Some(self.text_rep(child, TextKind::Gloss)),
                "sense" => {
                    let sense = self.sense(child);
                    entry.senses.push(sense);
                }
                "etym" => {
                    let ety = self.etym(child);
                    entry.etymology = Some(ety);
                }
                "re" => {
                    let sub = self.re(child);
                    entry.subentries.push(sub);
                }
                "bibl" => {
                    let bib = self.bibl(child);
                    entry.bibliographies.push(bib);
                }
                _ => {}
            }
        }
        entry
    }

    fn re(&mut self, elem: &XmlElement) -> LexicalEntry {
        let mut entry = LexicalEntry::new(EntryKind::Related);
        entry.re_type = elem.attr("type").map(String::from);
        entry.id = self.id_of(elem);
        entry.pos = Some(elem.pos);
        for child in elem.elements() {
            match child.name.as_str() {
                "form" => {
                    let form = self.form(child, true);
                    if form.class == FormClass::Lemma && entry.lemma.is_none() {
                        entry.lemma = Some(form);
                    } else {
                        entry.forms.push(form);
                    }
                }
                "sense" => {
                    let sense = self.sense(child);
                    entry.senses.push(sense);
                }
                _ => {}
            }
        }
        entry
    }

    fn form(&mut self, elem: &XmlElement, inside_re: bool) -> Form {
        let class = match elem.attr("type") {
            Some(t) => FormClass::from_token(t).unwrap_or(FormClass::Variant),
            None if inside_re => FormClass::Lemma,
            None => {
                self.diags.push(
                    Diagnostic::new(
                        "E-ATTR-REQUIRED",
                        "'form' requires attribute 'type' outside 're'".into(),
                    )
                    .at(elem.pos),
                );
                FormClass::Variant
            }
        };
        let mut form = Form::new(class);
        form.id = self.id_of(elem);
        form.pos = Some(elem.pos);
        // `orth` opens a representation; `pron` and `usg` bind to the open
        // one. `usg` before any `orth` labels the whole form.
        let mut current: Option<usize> = None;
        for child in elem.elements() {
            match child.name.as_str() {
                "orth" => {
                    let mut rep = FormRepresentation::new(self.text(child));
                    rep.language = child.attr("xml:lang").map(String::from);
                    rep.pos = Some(child.pos);
                    form.representations.push(rep);
                    current = Some(form.representations.len() - 1);
                }
                "pron" => match current {
                    Some(i) => {
                        let rep = &mut form.representations[i];
                        if rep.pronunciation.is_some() {
                            self.diags.push(
                                Diagnostic::new(
                                    "E-PROFILE-STRUCT",
                                    "representation already has a pronunciation".into(),
                                )
                                .at(child.pos),
                            );
                        }
                        rep.pronunciation = Some(self.text(child));
                    }
                    None => self.diags.push(
                        Diagnostic::new(
                            "E-PROFILE-STRUCT",
                            "'pron' appears before any 'orth' in 'form'".into(),
                        )
                        .at(child.pos),
                    ),
                },
                "usg" => {
                    let usage =
                        Usage::new(child.attr("type").unwrap_or(""), self.text(child));
                    match current {
                        Some(i) => form.representations[i].usages.push(usage),
                        None => form.usages.push(usage),
                    }
                }
                "gramGrp" => self.gram_group(child, &mut form.grammatical_features),
                "gram" => {
                    let feature = GrammaticalFeature {
                        name: child.attr("type").unwrap_or("").to_string(),
                        value: self.text(child),
                        syntax: FeatureSyntax::GramBare,
                    };
                    form.grammatical_features.push(feature);
                }
                "form" => {
                    let nested = self.form(child, false);
                    form.nested_forms.push(nested);
                }
                "seg" => {
                    if let Some(seg) = self.seg(child) {
                        form.segments.push(seg);
                    }
                }
                _ => {}
            }
        }
        form
    }

    fn gram_group(&mut self, elem: &XmlElement, out: &mut Vec<GrammaticalFeature>) {
        for child in elem.elements() {
            match child.name.as_str() {
                "pos" | "number" => out.push(GrammaticalFeature {
                    name: child.name.clone(),
                    value: self.text(child),
                    syntax: FeatureSyntax::NamedInGroup,
                }),
                "gram" => out.push(GrammaticalFeature {
                    name: child.attr("type").unwrap_or("").to_string(),
                    value: self.text(child),
                    syntax: FeatureSyntax::GramInGroup,
                }),
                _ => {}
            }
        }
    }

    fn seg(&mut self, elem: &XmlElement) -> Option<MweSegment> {
        let corresp = elem.attr_node("corresp")?;
        let order = elem.attr_node("n")?;
        let corresp = self.single_ref(corresp, "seg")?;
        let order = self.order_number(order, "seg")?;
        let mut seg = MweSegment::new(corresp, order, self.text(elem));
        seg.pos = Some(elem.pos);
        Some(seg)
    }

    fn sense(&mut self, elem: &XmlElement) -> Sense {
        let mut sense = Sense::new();
        sense.id = self.id_of(elem);
        sense.pos = Some(elem.pos);
        for child in elem.elements() {
            match child.name.as_str() {
                "gramGrp" => self.gram_group(child, &mut sense.grammatical_features),
                "def" => {
                    let def = self.text_rep(child, TextKind::Definition);
                    sense.definitions.push(def);
                }
                "cit" => {
                    if let Some(example) = self.example(child) {
                        sense.examples.push(example);
                    }
                }
                "sense" => {
                    let sub = self.sense(child);
                    sense.subsenses.push(sub);
                }
                _ => {}
            }
        }
        sense
    }

    /// `def`, `quote`, and `gloss` elements all carry text with an optional
    /// language and bibliography references.
    fn text_rep(&mut self, elem: &XmlElement, kind: TextKind) -> TextRepresentation {
        let text = self.text(elem);
        let mut rep = match kind {
            TextKind::Definition => TextRepresentation::definition(text),
            TextKind::Example => TextRepresentation::example(text),
            TextKind::Gloss => TextRepresentation::gloss(text),
        };
        rep.language = elem.attr("xml:lang").map(String::from);
        if let Some(attr) = elem.attr_node("source") {
            rep.bibliography_refs = self.refs(attr, &elem.name);
        }
        rep.pos = Some(elem.pos);
        rep
    }

    /// A `cit` inside `sense`: an example quotation.
    fn example(&mut self, elem: &XmlElement) -> Option<TextRepresentation> {
        match elem.attr("type") {
            Some("example") => {}
            Some(other) => {
                self.diags.push(
                    Diagnostic::new(
                        "E-PROFILE-STRUCT",
                        format!("citation type '{other}' is not allowed inside 'sense'"),
                    )
                    .at(elem.pos),
                );
                return None;
            }
            None => return None,
        }
        self.flag_attrs(elem, &["subtype", "n", "corresp", "xml:id"], "an example citation");
        let mut example = None;
        for child in elem.elements() {
            match child.name.as_str() {
                "quote" => example = Some(self.text_rep(child, TextKind::Example)),
                other => self.diags.push(
                    Diagnostic::new(
                        "E-PROFILE-STRUCT",
                        format!("'{other}' is only allowed in etymological citations"),
                    )
                    .at(child.pos),
                ),
            }
        }
        let Some(mut example) = example else {
            self.diags.push(
                Diagnostic::new(
                    "E-PROFILE-STRUCT",
                    "'cit' of type 'example' requires a 'quote'".into(),
                )
                .at(elem.pos),
            );
            return None;
        };
        if let Some(attr) = elem.attr_node("source") {
            example.bibliography_refs = self.refs(attr, "cit");
        }
        example.pos = Some(elem.pos);
        Some(example)
    }

    fn etym(&mut self, elem: &XmlElement) -> Etymology {
        let mut ety = Etymology::new(elem.attr("type").unwrap_or("unknown"));
        ety.id = self.id_of(elem);
        ety.pos = Some(elem.pos);
        if let Some(attr) = elem.attr_node("source") {
            ety.bibliography_refs = self.refs(attr, "etym");
        }
        for child in elem.elements() {
            match child.name.as_str() {
                "cit" => {
                    if let Some(link) = self.ety_link(child) {
                        ety.links.push(link);
                    }
                }
                "etym" => {
                    let sub = self.etym(child);
                    ety.sub_etymologies.push(sub);
                }
                _ => {}
            }
        }
        ety
    }

    /// A `cit` inside `etym`: one etymological link.
    fn ety_link(&mut self, elem: &XmlElement) -> Option<EtyLink> {
        let target_kind = match elem.attr("type") {
            Some("etymon") => EtyTargetKind::Etymon,
            Some("cognate") => EtyTargetKind::Cognate,
            Some(other) => {
                self.diags.push(
                    Diagnostic::new(
                        "E-PROFILE-STRUCT",
                        format!("citation type '{other}' is not allowed inside 'etym'"),
                    )
                    .at(elem.pos),
                );
                return None;
            }
            None => return None,
        };
        let order = match elem.attr_node("n") {
            Some(attr) => self.order_number(attr, "cit")?,
            None => {
                self.diags.push(
                    Diagnostic::new(
                        "E-ATTR-REQUIRED",
                        "an etymological citation requires attribute 'n'".into(),
                    )
                    .at(elem.pos),
                );
                return None;
            }
        };
        let target_aspects = match elem.attr_node("corresp") {
            Some(attr) => self.refs(attr, "cit"),
            None => {
                self.diags.push(
                    Diagnostic::new(
                        "E-ATTR-REQUIRED",
                        "an etymological citation requires attribute 'corresp'".into(),
                    )
                    .at(elem.pos),
                );
                return None;
            }
        };
        let source_aspects = match elem.attr_node("source") {
            Some(attr) => self.refs(attr, "cit"),
            None => Vec::new(),
        };
        let mut link = EtyLink {
            id: self.id_of(elem),
            link_type: elem.attr("subtype").unwrap_or("unknown").to_string(),
            target_kind,
            source_aspects,
            target_aspects,
            order,
            date: None,
            display_lang: None,
            display_orth: None,
            display_gloss: None,
            pos: Some(elem.pos),
        };
        for child in elem.elements() {
            match child.name.as_str() {
                "lang" => link.display_lang = Some(self.text(child)),
                "orth" => {
                    self.flag_attrs(child, &["xml:lang"], "a link orthography");
                    link.display_orth = Some(self.text(child));
                }
                "gloss" => {
                    self.flag_attrs(child, &["xml:lang", "source"], "a link gloss");
                    link.display_gloss = Some(self.text(child));
                }
                "date" => link.date = Some(self.date(child)),
                "quote" => self.diags.push(
                    Diagnostic::new(
                        "E-PROFILE-STRUCT",
                        "'quote' is only allowed in example citations".into(),
                    )
                    .at(child.pos),
                ),
                _ => {}
            }
        }
        Some(link)
    }

    fn date(&mut self, elem: &XmlElement) -> EtyDate {
        let text = self.text(elem);
        let when = elem.attr_node("when");
        let from = elem.attr_node("from");
        let to = elem.attr_node("to");
        let mut date = if let Some(when) = when {
            if from.is_some() || to.is_some() {
                self.diags.push(
                    Diagnostic::new(
                        "E-PROFILE-STRUCT",
                        "'date' cannot carry both 'when' and a range".into(),
                    )
                    .at(elem.pos),
                );
            }
            match self.year(when) {
                Some(year) => EtyDate::point(year, text),
                None => EtyDate::relative(text),
            }
        } else if from.is_some() || to.is_some() {
            let start = from.and_then(|attr| self.year(attr));
            let end = to.and_then(|attr| self.year(attr));
            let downgraded =
                (from.is_some() && start.is_none()) || (to.is_some() && end.is_none());
            if downgraded {
                EtyDate::relative(text)
            } else {
                EtyDate {
                    kind: DateKind::Range,
                    text,
                    year_start: start,
                    year_end: end,
                    pos: None,
                }
            }
        } else {
            EtyDate::relative(text)
        };
        date.pos = Some(elem.pos);
        date
    }

    /// A year attribute. Non-numeric values downgrade the date to relative
    /// with a warning; the text survives, the attribute does not.
    fn year(&mut self, attr: &XmlAttr) -> Option<i32> {
        match attr.value.parse::<i32>() {
            Ok(year) => Some(year),
            Err(_) => {
                self.diags.push(
                    Diagnostic::new(
                        "W-DATE-NUM",
                        format!(
                            "date attribute '{}' value '{}' is not a plain year; treating the date as relative",
                            attr.name, attr.value
                        ),
                    )
                    .at(attr.pos),
                );
                None
            }
        }
    }

    fn bibl(&mut self, elem: &XmlElement) -> Bibliography {
        let mut bib = Bibliography::new(elem.attr("xml:id").unwrap_or(""), self.text(elem));
        if let Some(attr) = elem.attr_node("corresp") {
            bib.attached_to = self.refs(attr, "bibl");
        }
        bib.pos = Some(elem.pos);
        bib
    }
}
