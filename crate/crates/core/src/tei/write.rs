//! Writer: the one canonical serialization.
//!
//! There is exactly one output shape for a given model value, so equal
//! models produce identical bytes and canonical documents re-read to the
//! same model. States the element set cannot express are refused with
//! `E-UNSERIALIZABLE` rather than written lossily; each refusal here is
//! also a validation finding, except the two encoding-level guards
//! (XML character validity, pre-normalized text in normalized slots),
//! which are properties of the encoding rather than the model and can
//! only be violated by API-built values.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::diag::{Diagnostic, Pos};
use crate::etymology::{DateKind, EtyDate, EtyLink, Etymology};
use crate::id::Ref;
use crate::model::{
    Bibliography, EntryKind, LexicalEntry, Sense, TextKind, TextRepresentation,
};
use crate::mrd::{FeatureSyntax, Form, FormClass, GrammaticalFeature, Usage, NAMED_FEATURES};
use crate::profile::{ContentModel, SerializationProfile};
use crate::xml::{xml_char, XmlWriter};

use super::read::normalize_ws;
use super::ParsedDocument;

/// Serialize one free-standing entry fragment (no namespace declaration).
pub fn serialize_entry(
    entry: &LexicalEntry,
    profile: &SerializationProfile,
) -> Result<Vec<u8>, Vec<Diagnostic>> {
    let mut w = Writer::new(profile);
    w.entry(entry);
    w.finish()
}

/// Serialize a full `body` document. The namespace is always declared on
/// the root.
pub fn serialize_document(
    doc: &ParsedDocument,
    profile: &SerializationProfile,
) -> Result<Vec<u8>, Vec<Diagnostic>> {
    let mut w = Writer::new(profile);
    let mut attrs: Vec<(&str, &str)> = Vec::new();
    attrs.push(("xmlns", profile.namespace.as_str()));
    if let Some(lang) = &doc.lexicon.language {
        attrs.push(("xml:lang", lang));
    }
    w.open("body", &attrs, None, doc.lexicon.pos);
    for entry in &doc.lexicon.entries {
        w.entry(entry);
    }
    for bib in &doc.bibliographies {
        w.bibl(bib);
    }
    w.close("body");
    w.finish()
}

/// Serialize one etymology as a free-standing `etym` fragment.
pub fn serialize_etymology(
    ety: &Etymology,
    profile: &SerializationProfile,
) -> Result<Vec<u8>, Vec<Diagnostic>> {
    let mut w = Writer::new(profile);
    w.etym(ety, None);
    w.finish()
}

struct Writer<'p> {
    w: XmlWriter,
    profile: &'p SerializationProfile,
    diags: Vec<Diagnostic>,
}

impl<'p> Writer<'p> {
    fn new(profile: &'p SerializationProfile) -> Self {
        Writer {
            w: XmlWriter::new(),
            profile,
            diags: Vec::new(),
        }
    }

    fn finish(self) -> Result<Vec<u8>, Vec<Diagnostic>> {
        if self.diags.is_empty() {
            Ok(self.w.finish().into_bytes())
        } else {
            Err(self.diags)
        }
    }

    fn refuse(&mut self, message: String, node: Option<&str>, pos: Option<Pos>) {
        self.diags.push(
            Diagnostic::new("E-UNSERIALIZABLE", message)
                .at_opt(pos)
                .on_node_opt(node),
        );
    }

    // --- guarded emission ---------------------------------------------

    fn guard_attrs(
        &mut self,
        elem: &str,
        attrs: &[(&str, &str)],
        node: Option<&str>,
        pos: Option<Pos>,
    ) {
        for (name, value) in attrs {
            if let Some(c) = value.chars().find(|&c| !xml_char(c)) {
                self.refuse(
                    format!(
                        "attribute '{name}' on '{elem}' contains a character XML cannot encode (U+{:04X})",
                        c as u32
                    ),
                    node,
                    pos,
                );
            }
        }
    }

    fn guard_text(&mut self, elem: &str, text: &str, node: Option<&str>, pos: Option<Pos>) {
        if let Some(c) = text.chars().find(|&c| !xml_char(c)) {
            self.refuse(
                format!(
                    "text of '{elem}' contains a character XML cannot encode (U+{:04X})",
                    c as u32
                ),
                node,
                pos,
            );
        }
        let normalized = self
            .profile
            .element(elem)
            .is_some_and(|r| r.content == ContentModel::Normalized);
        if normalized && normalize_ws(text) != text {
            self.refuse(
                format!("text of '{elem}' must be whitespace-normalized"),
                node,
                pos,
            );
        }
    }

    fn open(&mut self, name: &str, attrs: &[(&str, &str)], node: Option<&str>, pos: Option<Pos>) {
        self.guard_attrs(name, attrs, node, pos);
        self.w.open(name, attrs);
    }

    fn leaf(
        &mut self,
        name: &str,
        attrs: &[(&str, &str)],
        text: &str,
        node: Option<&str>,
        pos: Option<Pos>,
    ) {
        self.guard_attrs(name, attrs, node, pos);
        self.guard_text(name, text, node, pos);
        self.w.leaf(name, attrs, text);
    }

    fn close(&mut self, name: &str) {
        self.w.close(name);
    }

    /// Join references into a `#a #b` attribute value. Whitespace inside a
    /// target would split it into two references on re-read.
    fn join_refs(&mut self, refs: &[Ref], node: Option<&str>, pos: Option<Pos>) -> String {
        let mut out = String::new();
        for r in refs {
            let target = r.target.as_str();
            if target.chars().any(|c| c.is_ascii_whitespace()) {
                self.refuse(
                    format!("reference target '{target}' contains whitespace"),
                    node,
                    r.pos.or(pos),
                );
            }
            if !out.is_empty() {
                out.push(' ');
            }
            out.push('#');
            out.push_str(target);
        }
        out
    }

    fn kind_guard(
        &mut self,
        text: &TextRepresentation,
        expected: TextKind,
        what: &str,
        node: Option<&str>,
    ) {
        if text.kind != expected {
            self.refuse(
                format!("a {what} slot holds text of a different kind"),
                node,
                text.pos,
            );
        }
    }

    // --- model emission -------------------------------------------------

    fn entry(&mut self, entry: &LexicalEntry) {
        let node = entry.id.as_ref().map(|i| i.as_str());
        if entry.kind == EntryKind::Related {
            self.refuse(
                "related entries exist only as subentries".into(),
                node,
                entry.pos,
            );
            return;
        }
        if entry.re_type.is_some() {
            self.refuse("only subentries carry a host relation".into(), node, entry.pos);
        }
        let mut attrs: Vec<(&str, &str)> = Vec::new();
        if let Some(id) = &entry.id {
            attrs.push(("xml:id", id.as_str()));
        }
        if entry.kind != EntryKind::Standard {
            attrs.push(("type", entry.kind.as_str()));
        }
        if let Some(lang) = &entry.language {
            attrs.push(("xml:lang", lang));
        }
        self.open("entry", &attrs, node, entry.pos);
        if let Some(display) = &entry.display_lang {
            self.leaf("lang", &[], display, node, entry.pos);
        }
        self.lemma_and_forms(entry, false, node);
        if let Some(gloss) = &entry.gloss {
            self.kind_guard(gloss, TextKind::Gloss, "gloss", node);
            let mut attrs: Vec<(&str, String)> = Vec::new();
            if let Some(lang) = &gloss.language {
                attrs.push(("xml:lang", lang.clone()));
            }
            if !gloss.bibliography_refs.is_empty() {
                let refs = self.join_refs(&gloss.bibliography_refs, node, gloss.pos);
                attrs.push(("source", refs));
            }
            let pairs = borrow_attrs(&attrs);
            self.leaf("gloss", &pairs, &gloss.text, node, gloss.pos.or(entry.pos));
        }
        for sense in &entry.senses {
            self.sense(sense, node);
        }
        if let Some(ety) = &entry.etymology {
            self.etym(ety, node);
        }
        for sub in &entry.subentries {
            self.re_entry(sub, node);
        }
        for bib in &entry.bibliographies {
            self.bibl(bib);
        }
        self.close("entry");
    }

    /// The lemma always precedes the other forms, so the first lemma-class
    /// form on re-read lands back in the lemma slot.
    fn lemma_and_forms(&mut self, entry: &LexicalEntry, in_re: bool, node: Option<&str>) {
        let mut slot_filled = false;
        match &entry.lemma {
            Some(lemma) if lemma.class != FormClass::Lemma => self.refuse(
                format!(
                    "the lemma slot holds a {} form, not a lemma",
                    lemma.class.token()
                ),
                node,
                lemma.pos.or(entry.pos),
            ),
            Some(lemma) => {
                slot_filled = true;
                self.form(lemma, in_re, node);
            }
            None => {}
        }
        for form in &entry.forms {
            if form.class == FormClass::Lemma && !slot_filled {
                self.refuse(
                    "a lemma form cannot be serialized outside the lemma slot".into(),
                    node,
                    form.pos.or(entry.pos),
                );
                continue;
            }
            self.form(form, in_re, node);
        }
    }

    fn form(&mut self, form: &Form, in_re: bool, entry_node: Option<&str>) {
        let node = form.id.as_ref().map(|i| i.as_str()).or(entry_node);
        let mut attrs: Vec<(&str, &str)> = Vec::new();
        if !(in_re && form.class == FormClass::Lemma) {
            attrs.push(("type", form.class.token()));
        }
        if let Some(id) = &form.id {
            attrs.push(("xml:id", id.as_str()));
        }
        self.open("form", &attrs, node, form.pos);
        for usage in &form.usages {
            self.usg(usage, node, form.pos);
        }
        for rep in &form.representations {
            let pos = rep.pos.or(form.pos);
            let mut attrs: Vec<(&str, &str)> = Vec::new();
            if let Some(lang) = &rep.language {
                attrs.push(("xml:lang", lang));
            }
            self.leaf("orth", &attrs, &rep.orthography, node, pos);
            if let Some(pron) = &rep.pronunciation {
                self.leaf("pron", &[], pron, node, pos);
            }
            for usage in &rep.usages {
                self.usg(usage, node, pos);
            }
        }
        self.features(&form.grammatical_features, true, node, form.pos);
        for nested in &form.nested_forms {
            self.form(nested, false, entry_node);
        }
        for seg in &form.segments {
            let pos = seg.pos.or(form.pos);
            let corresp = self.join_refs(core::slice::from_ref(&seg.corresp), node, pos);
            let n = seg.order.to_string();
            self.leaf("seg", &[("corresp", &corresp), ("n", &n)], &seg.surface, node, pos);
        }
        self.close("form");
    }

    fn usg(&mut self, usage: &Usage, node: Option<&str>, pos: Option<Pos>) {
        self.leaf("usg", &[("type", &usage.usage_type)], &usage.value, node, pos);
    }

    /// Emit grammatical features. Consecutive in-group features share one
    /// `gramGrp`; a bare feature stands alone and breaks the run.
    fn features(
        &mut self,
        feats: &[GrammaticalFeature],
        allow_bare: bool,
        node: Option<&str>,
        pos: Option<Pos>,
    ) {
        let mut i = 0;
        while i < feats.len() {
            if feats[i].syntax == FeatureSyntax::GramBare {
                if allow_bare {
                    self.leaf("gram", &[("type", &feats[i].name)], &feats[i].value, node, pos);
                } else {
                    self.refuse("sense features use the grouped syntax only".into(), node, pos);
                }
                i += 1;
                continue;
            }
            let start = i;
            while i < feats.len() && feats[i].syntax != FeatureSyntax::GramBare {
                i += 1;
            }
            self.open("gramGrp", &[], node, pos);
            for f in &feats[start..i] {
                match f.syntax {
                    FeatureSyntax::NamedInGroup => {
                        if NAMED_FEATURES.contains(&f.name.as_str()) {
                            let name = f.name.clone();
                            self.leaf(&name, &[], &f.value, node, pos);
                        } else {
                            self.refuse(
                                format!(
                                    "feature '{}' has no named element; use the typed gram syntax",
                                    f.name
                                ),
                                node,
                                pos,
                            );
                        }
                    }
                    FeatureSyntax::GramInGroup => {
                        self.leaf("gram", &[("type", &f.name)], &f.value, node, pos);
                    }
                    FeatureSyntax::GramBare => {}
                }
            }
            self.close("gramGrp");
        }
    }

    fn sense(&mut self, sense: &Sense, entry_node: Option<&str>) {
        let node = sense.id.as_ref().map(|i| i.as_str()).or(entry_node);
        let mut attrs: Vec<(&str, &str)> = Vec::new();
        if let Some(id) = &sense.id {
            attrs.push(("xml:id", id.as_str()));
        }
        self.open("sense", &attrs, node, sense.pos);
        if !sense.grammatical_features.is_empty() {
            self.features(&sense.grammatical_features, false, node, sense.pos);
        }
        for def in &sense.definitions {
            self.kind_guard(def, TextKind::Definition, "definition", node);
            let pos = def.pos.or(sense.pos);
            let mut attrs: Vec<(&str, String)> = Vec::new();
            if !def.bibliography_refs.is_empty() {
                let refs = self.join_refs(&def.bibliography_refs, node, def.pos);
                attrs.push(("source", refs));
            }
            if let Some(lang) = &def.language {
                attrs.push(("xml:lang", lang.clone()));
            }
            let pairs = borrow_attrs(&attrs);
            self.leaf("def", &pairs, &def.text, node, pos);
        }
        for example in &sense.examples {
            self.kind_guard(example, TextKind::Example, "example", node);
            let pos = example.pos.or(sense.pos);
            let mut attrs: Vec<(&str, String)> = Vec::new();
            attrs.push(("type", "example".to_string()));
            if !example.bibliography_refs.is_empty() {
                let refs = self.join_refs(&example.bibliography_refs, node, example.pos);
                attrs.push(("source", refs));
            }
            let pairs = borrow_attrs(&attrs);
            self.open("cit", &pairs, node, pos);
            let mut attrs: Vec<(&str, &str)> = Vec::new();
            if let Some(lang) = &example.language {
                attrs.push(("xml:lang", lang));
            }
            self.leaf("quote", &attrs, &example.text, node, pos);
            self.close("cit");
        }
        for sub in &sense.subsenses {
            self.sense(sub, entry_node);
        }
        self.close("sense");
    }

    fn etym(&mut self, ety: &Etymology, entry_node: Option<&str>) {
        let node = ety.id.as_ref().map(|i| i.as_str()).or(entry_node);
        let mut attrs: Vec<(&str, String)> = Vec::new();
        if ety.ety_type != "unknown" {
            attrs.push(("type", ety.ety_type.clone()));
        }
        if !ety.bibliography_refs.is_empty() {
            let refs = self.join_refs(&ety.bibliography_refs, node, ety.pos);
            attrs.push(("source", refs));
        }
        if let Some(id) = &ety.id {
            attrs.push(("xml:id", id.as_str().to_string()));
        }
        let pairs = borrow_attrs(&attrs);
        self.open("etym", &pairs, node, ety.pos);
        for link in &ety.links {
            self.link(link, node);
        }
        for sub in &ety.sub_etymologies {
            self.etym(sub, entry_node);
        }
        self.close("etym");
    }

    fn link(&mut self, link: &EtyLink, ety_node: Option<&str>) {
        let node = link.id.as_ref().map(|i| i.as_str()).or(ety_node);
        let mut attrs: Vec<(&str, String)> = Vec::new();
        attrs.push(("type", link.target_kind.as_str().to_string()));
        if link.link_type != "unknown" {
            attrs.push(("subtype", link.link_type.clone()));
        }
        attrs.push(("n", link.order.to_string()));
        let corresp = self.join_refs(&link.target_aspects, node, link.pos);
        attrs.push(("corresp", corresp));
        if !link.source_aspects.is_empty() {
            let refs = self.join_refs(&link.source_aspects, node, link.pos);
            attrs.push(("source", refs));
        }
        if let Some(id) = &link.id {
            attrs.push(("xml:id", id.as_str().to_string()));
        }
        let pairs = borrow_attrs(&attrs);
        self.open("cit", &pairs, node, link.pos);
        if let Some(lang) = &link.display_lang {
            self.leaf("lang", &[], lang, node, link.pos);
        }
        if let Some(orth) = &link.display_orth {
            self.leaf("orth", &[], orth, node, link.pos);
        }
        if let Some(gloss) = &link.display_gloss {
            self.leaf("gloss", &[], gloss, node, link.pos);
        }
        if let Some(date) = &link.date {
            self.date(date, node, link.pos);
        }
        self.close("cit");
    }

    /// The attribute layout is decided by the date kind; a kind whose years
    /// the layout cannot carry is refused, a kind whose years merely
    /// contradict each other (a backwards range) is written as stored and
    /// left to validation.
    fn date(&mut self, date: &EtyDate, node: Option<&str>, link_pos: Option<Pos>) {
        let pos = date.pos.or(link_pos);
        let mut attrs: Vec<(&str, String)> = Vec::new();
        match date.kind {
            DateKind::Point => match (date.year_start, date.year_end) {
                (Some(start), Some(end)) if start == end => {
                    attrs.push(("when", start.to_string()));
                }
                _ => self.refuse(
                    "a point date needs exactly one year to serialize".into(),
                    node,
                    pos,
                ),
            },
            DateKind::Range => {
                if date.year_start.is_none() && date.year_end.is_none() {
                    self.refuse(
                        "a range date needs at least one year to serialize".into(),
                        node,
                        pos,
                    );
                }
                if let Some(start) = date.year_start {
                    attrs.push(("from", start.to_string()));
                }
                if let Some(end) = date.year_end {
                    attrs.push(("to", end.to_string()));
                }
            }
            DateKind::Relative => {
                if date.year_start.is_some() || date.year_end.is_some() {
                    self.refuse("a relative date cannot carry years".into(), node, pos);
                }
            }
        }
        let pairs = borrow_attrs(&attrs);
        self.leaf("date", &pairs, &date.text, node, pos);
    }

    fn re_entry(&mut self, entry: &LexicalEntry, host_node: Option<&str>) {
        let node = entry.id.as_ref().map(|i| i.as_str()).or(host_node);
        if entry.kind != EntryKind::Related {
            self.refuse(
                format!("a subentry must be a related entry, not {}", entry.kind.as_str()),
                node,
                entry.pos,
            );
        }
        let re_type = match entry.re_type.as_deref() {
            Some(t @ ("multiWordExpression" | "related")) => t,
            Some(other) => {
                self.refuse(format!("unknown subentry relation '{other}'"), node, entry.pos);
                other
            }
            None => {
                self.refuse(
                    "a subentry must state its relation to the host entry".into(),
                    node,
                    entry.pos,
                );
                "related"
            }
        };
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
                self.refuse(format!("a subentry cannot carry {what}"), node, entry.pos);
            }
        }
        let mut attrs: Vec<(&str, &str)> = Vec::new();
        attrs.push(("type", re_type));
        if let Some(id) = &entry.id {
            attrs.push(("xml:id", id.as_str()));
        }
        self.open("re", &attrs, node, entry.pos);
        self.lemma_and_forms(entry, true, node);
        for sense in &entry.senses {
            self.sense(sense, node);
        }
        self.close("re");
    }

    fn bibl(&mut self, bib: &Bibliography) {
        let node = Some(bib.id.as_str());
        let mut attrs: Vec<(&str, String)> = Vec::new();
        attrs.push(("xml:id", bib.id.as_str().to_string()));
        if !bib.attached_to.is_empty() {
            let refs = self.join_refs(&bib.attached_to, node, bib.pos);
            attrs.push(("corresp", refs));
        }
        let pairs = borrow_attrs(&attrs);
        self.leaf("bibl", &pairs, &bib.citation, node, bib.pos);
    }
}

fn borrow_attrs<'a>(attrs: &'a [(&'static str, String)]) -> Vec<(&'static str, &'a str)> {
    attrs.iter().map(|(k, v)| (*k, v.as_str())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::id::NodeId;
    use crate::mrd::MweSegment;
    use alloc::vec;

    fn profile() -> SerializationProfile {
        SerializationProfile::default_profile()
    }

    fn minimal_entry() -> LexicalEntry {
        let mut entry = LexicalEntry::standard("center");
        entry.id = Some(NodeId::new("e1"));
        entry.senses.push(Sense::with_definition("a middle point"));
        entry
    }

    #[test]
    fn canonical_entry_shape() {
        let bytes = serialize_entry(&minimal_entry(), &profile()).unwrap();
        assert_eq!(
            core::str::from_utf8(&bytes).unwrap(),
            "<entry xml:id=\"e1\">\n  <form type=\"lemma\">\n    <orth>center</orth>\n  </form>\n  <sense>\n    <def>a middle point</def>\n  </sense>\n</entry>\n"
        );
    }

    #[test]
    fn feature_runs_share_a_group_and_bare_features_break_them() {
        let mut form = Form::with_orth(FormClass::Lemma, "w");
        form.grammatical_features = vec![
            GrammaticalFeature::new("pos", "noun"),
            GrammaticalFeature::new("gender", "neuter"),
            GrammaticalFeature::bare("number", "plural"),
            GrammaticalFeature::new("pos", "verb"),
        ];
        let mut entry = minimal_entry();
        entry.lemma = Some(form);
        entry.senses = vec![Sense::with_definition("d")];
        let bytes = serialize_entry(&entry, &profile()).unwrap();
        let text = core::str::from_utf8(&bytes).unwrap();
        assert_eq!(
            text,
            "<entry xml:id=\"e1\">\n  <form type=\"lemma\">\n    <orth>w</orth>\n    <gramGrp>\n      <pos>noun</pos>\n      <gram type=\"gender\">neuter</gram>\n    </gramGrp>\n    <gram type=\"number\">plural</gram>\n    <gramGrp>\n      <pos>verb</pos>\n    </gramGrp>\n  </form>\n  <sense>\n    <def>d</def>\n  </sense>\n</entry>\n"
        );
    }

    #[test]
    fn refuses_what_the_element_set_cannot_express() {
        let profile = profile();

        let mut entry = minimal_entry();
        entry.lemma = Some(Form::with_orth(FormClass::Variant, "x"));
        let errs = serialize_entry(&entry, &profile).unwrap_err();
        assert!(errs.iter().all(|d| d.code == "E-UNSERIALIZABLE"));
        assert!(errs[0].message.contains("lemma slot holds a variant form"));

        let mut entry = minimal_entry();
        entry.senses[0].grammatical_features = vec![GrammaticalFeature::bare("pos", "noun")];
        let errs = serialize_entry(&entry, &profile).unwrap_err();
        assert!(errs[0].message.contains("grouped syntax"));

        let mut entry = minimal_entry();
        entry.kind = EntryKind::Related;
        assert!(serialize_entry(&entry, &profile).is_err());

        let mut sub = LexicalEntry::new(EntryKind::Related);
        sub.re_type = Some("multiWordExpression".into());
        sub.lemma = Some(Form::with_orth(FormClass::Lemma, "dead center"));
        sub.etymology = Some(Etymology::new("borrowing"));
        let mut entry = minimal_entry();
        entry.subentries.push(sub);
        let errs = serialize_entry(&entry, &profile).unwrap_err();
        assert!(errs[0].message.contains("a subentry cannot carry an etymology"));
    }

    #[test]
    fn refuses_unencodable_strings() {
        let profile = profile();

        // Control character in verbatim text.
        let mut entry = minimal_entry();
        entry.lemma = Some(Form::with_orth(FormClass::Lemma, "a\u{0}b"));
        let errs = serialize_entry(&entry, &profile).unwrap_err();
        assert!(errs[0].message.contains("U+0000"));

        // Unnormalized text in a normalized slot.
        let mut entry = minimal_entry();
        entry.display_lang = Some("Middle  English".into());
        let errs = serialize_entry(&entry, &profile).unwrap_err();
        assert!(errs[0].message.contains("whitespace-normalized"));

        // Whitespace inside a reference target.
        let mut sub = LexicalEntry::new(EntryKind::Related);
        sub.re_type = Some("multiWordExpression".into());
        let mut lemma = Form::new(FormClass::Lemma);
        lemma.segments.push(MweSegment::new("dead form", 1, "dead"));
        sub.lemma = Some(lemma);
        let mut entry = minimal_entry();
        entry.subentries.push(sub);
        let errs = serialize_entry(&entry, &profile).unwrap_err();
        assert!(errs[0].message.contains("contains whitespace"));
    }

    #[test]
    fn date_layouts_follow_the_kind() {
        let profile = profile();
        let mut ety = Etymology::new("borrowing");
        let mut link = EtyLink::to_etymon("inheritance", 1, "t1");
        link.date = Some(EtyDate::point(1538, "1538"));
        ety.links.push(link);
        let bytes = serialize_etymology(&ety, &profile).unwrap();
        let text = core::str::from_utf8(&bytes).unwrap();
        assert!(text.contains("<date when=\"1538\">1538</date>"));

        let mut ety = Etymology::new("borrowing");
        let mut link = EtyLink::to_etymon("inheritance", 1, "t1");
        link.date = Some(EtyDate::range(900, 1100, "Old English period"));
        ety.links.push(link);
        let bytes = serialize_etymology(&ety, &profile).unwrap();
        let text = core::str::from_utf8(&bytes).unwrap();
        assert!(text.contains("<date from=\"900\" to=\"1100\">Old English period</date>"));

        let mut ety = Etymology::new("borrowing");
        let mut link = EtyLink::to_etymon("inheritance", 1, "t1");
        link.date = Some(EtyDate::relative("before the conquest"));
        ety.links.push(link);
        let bytes = serialize_etymology(&ety, &profile).unwrap();
        let text = core::str::from_utf8(&bytes).unwrap();
        assert!(text.contains("<date>before the conquest</date>"));

        // A relative date with years has no attribute layout.
        let mut ety = Etymology::new("borrowing");
        let mut link = EtyLink::to_etymon("inheritance", 1, "t1");
        let mut date = EtyDate::relative("tenth century");
        date.year_start = Some(900);
        link.date = Some(date);
        ety.links.push(link);
        assert!(serialize_etymology(&ety, &profile).is_err());
    }

    #[test]
    fn unknown_types_are_omitted_from_attributes() {
        let profile = profile();
        let mut ety = Etymology::new("unknown");
        let mut link = EtyLink::to_etymon("unknown", 1, "t1");
        link.display_lang = Some("F.".into());
        ety.links.push(link);
        let bytes = serialize_etymology(&ety, &profile).unwrap();
        let text = core::str::from_utf8(&bytes).unwrap();
        assert_eq!(
            text,
            "<etym>\n  <cit type=\"etymon\" n=\"1\" corresp=\"#t1\">\n    <lang>F.</lang>\n  </cit>\n</etym>\n"
        );
    }
}
