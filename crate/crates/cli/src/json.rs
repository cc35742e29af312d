//! Deterministic JSON interchange for a validated store.
//!
//! Export refuses a store whose report contains errors. The payload
//! carries the full model (entries, forms, senses, cross-references,
//! etymologies, bibliography records) and omits diagnostics. Objects are
//! key-sorted and empty slots are dropped, so equal models export
//! byte-identical documents; `import_json` reverses the mapping and
//! reproduces an equal model.

use lmfkit_core::etymology::{DateKind, EtyDate, EtyLink, EtyTargetKind, Etymology};
use lmfkit_core::model::{
    Bibliography, CrossRef, CrossRefTarget, EntryKind, TextKind, TextRepresentation,
};
use lmfkit_core::mrd::{
    FeatureSyntax, Form, FormClass, FormRepresentation, GrammaticalFeature, MweSegment, Usage,
};
use lmfkit_core::{LexicalEntry, LexicalResource, Lexicon, NodeId, Ref};
use serde_json::{Map, Value};

use crate::store::Store;

/// Version tag carried in the top-level `format` field.
pub const FORMAT: &str = "lmfkit-json/1";

/// Export failure: the store does not validate cleanly. This is a
/// tool-level code, not a registered model diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExportError {
    pub code: &'static str,
    pub message: String,
}

impl core::fmt::Display for ExportError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} {}", self.code, self.message)
    }
}

impl std::error::Error for ExportError {}

/// Render the store's model as one key-sorted JSON document. Errors in
/// the report make the model unexportable.
pub fn export_json(store: &Store) -> Result<String, ExportError> {
    if store.report.has_errors() {
        let first = store.report.first_error().expect("errors counted");
        return Err(ExportError {
            code: "E-EXPORT-INVALID",
            message: format!(
                "store has {} validation error(s); first: {} {}",
                store.report.errors, first.code, first.message
            ),
        });
    }
    Ok(render_resource(&store.resource))
}

/// The export body without the validity gate. Key order is the map's
/// natural (sorted) order; `serde_json`'s default map keeps it.
pub fn render_resource(resource: &LexicalResource) -> String {
    let mut root = Map::new();
    root.insert("format".into(), Value::String(FORMAT.into()));
    root.insert(
        "lexicons".into(),
        Value::Array(resource.lexicons().iter().map(lexicon_value).collect()),
    );
    put_list(&mut root, "crossrefs", resource.crossrefs(), crossref_value);
    put_list(
        &mut root,
        "bibliographies",
        resource.bibliographies(),
        bibliography_value,
    );
    Value::Object(root).to_string()
}

fn put_str(m: &mut Map<String, Value>, key: &str, s: &str) {
    m.insert(key.into(), Value::String(s.into()));
}

fn put_opt(m: &mut Map<String, Value>, key: &str, s: &Option<String>) {
    if let Some(s) = s {
        put_str(m, key, s);
    }
}

fn put_id(m: &mut Map<String, Value>, key: &str, id: &Option<NodeId>) {
    if let Some(id) = id {
        put_str(m, key, id.as_str());
    }
}

fn put_list<T>(m: &mut Map<String, Value>, key: &str, items: &[T], f: impl Fn(&T) -> Value) {
    if !items.is_empty() {
        m.insert(key.into(), Value::Array(items.iter().map(f).collect()));
    }
}

fn put_refs(m: &mut Map<String, Value>, key: &str, refs: &[Ref]) {
    put_list(m, key, refs, |r| Value::String(r.target.as_str().into()));
}

fn lexicon_value(lexicon: &Lexicon) -> Value {
    let mut m = Map::new();
    put_opt(&mut m, "language", &lexicon.language);
    put_list(&mut m, "entries", &lexicon.entries, entry_value);
    Value::Object(m)
}

fn entry_value(entry: &LexicalEntry) -> Value {
    let mut m = Map::new();
    put_id(&mut m, "id", &entry.id);
    put_str(&mut m, "kind", entry.kind.as_str());
    put_opt(&mut m, "language", &entry.language);
    put_opt(&mut m, "display_lang", &entry.display_lang);
    if let Some(gloss) = &entry.gloss {
        m.insert("gloss".into(), text_value(gloss));
    }
    if let Some(lemma) = &entry.lemma {
        m.insert("lemma".into(), form_value(lemma));
    }
    put_list(&mut m, "forms", &entry.forms, form_value);
    put_list(&mut m, "senses", &entry.senses, sense_value);
    if let Some(ety) = &entry.etymology {
        m.insert("etymology".into(), etymology_value(ety));
    }
    put_list(&mut m, "subentries", &entry.subentries, entry_value);
    put_opt(&mut m, "re_type", &entry.re_type);
    put_list(
        &mut m,
        "bibliographies",
        &entry.bibliographies,
        bibliography_value,
    );
    Value::Object(m)
}

fn form_value(form: &Form) -> Value {
    let mut m = Map::new();
    put_id(&mut m, "id", &form.id);
    put_str(&mut m, "class", form.class.token());
    put_list(&mut m, "representations", &form.representations, rep_value);
    put_list(
        &mut m,
        "features",
        &form.grammatical_features,
        feature_value,
    );
    put_list(&mut m, "usages", &form.usages, usage_value);
    put_list(&mut m, "nested_forms", &form.nested_forms, form_value);
    put_list(&mut m, "segments", &form.segments, segment_value);
    Value::Object(m)
}

fn rep_value(rep: &FormRepresentation) -> Value {
    let mut m = Map::new();
    put_str(&mut m, "orthography", &rep.orthography);
    put_opt(&mut m, "pronunciation", &rep.pronunciation);
    put_opt(&mut m, "language", &rep.language);
    put_list(&mut m, "usages", &rep.usages, usage_value);
    Value::Object(m)
}

fn usage_value(usage: &Usage) -> Value {
    let mut m = Map::new();
    put_str(&mut m, "type", &usage.usage_type);
    put_str(&mut m, "value", &usage.value);
    Value::Object(m)
}

fn syntax_token(syntax: FeatureSyntax) -> &'static str {
    match syntax {
        FeatureSyntax::NamedInGroup => "named",
        FeatureSyntax::GramInGroup => "gram",
        FeatureSyntax::GramBare => "bare",
    }
}

fn feature_value(feature: &GrammaticalFeature) -> Value {
    let mut m = Map::new();
    put_str(&mut m, "name", &feature.name);
    put_str(&mut m, "value", &feature.value);
    put_str(&mut m, "syntax", syntax_token(feature.syntax));
    Value::Object(m)
}

fn segment_value(seg: &MweSegment) -> Value {
    let mut m = Map::new();
    put_str(&mut m, "corresp", seg.corresp.target.as_str());
    m.insert("order".into(), Value::from(seg.order));
    put_str(&mut m, "surface", &seg.surface);
    Value::Object(m)
}

fn sense_value(sense: &lmfkit_core::model::Sense) -> Value {
    let mut m = Map::new();
    put_id(&mut m, "id", &sense.id);
    put_list(
        &mut m,
        "features",
        &sense.grammatical_features,
        feature_value,
    );
    put_list(&mut m, "definitions", &sense.definitions, text_value);
    put_list(&mut m, "examples", &sense.examples, text_value);
    put_list(&mut m, "subsenses", &sense.subsenses, sense_value);
    Value::Object(m)
}

fn text_value(text: &TextRepresentation) -> Value {
    let mut m = Map::new();
    put_str(&mut m, "text", &text.text);
    put_opt(&mut m, "language", &text.language);
    put_refs(&mut m, "sources", &text.bibliography_refs);
    Value::Object(m)
}

fn etymology_value(ety: &Etymology) -> Value {
    let mut m = Map::new();
    put_id(&mut m, "id", &ety.id);
    put_str(&mut m, "type", &ety.ety_type);
    put_refs(&mut m, "sources", &ety.bibliography_refs);
    put_list(&mut m, "links", &ety.links, link_value);
    put_list(
        &mut m,
        "sub_etymologies",
        &ety.sub_etymologies,
        etymology_value,
    );
    Value::Object(m)
}

fn link_value(link: &EtyLink) -> Value {
    let mut m = Map::new();
    put_id(&mut m, "id", &link.id);
    put_str(&mut m, "kind", link.target_kind.as_str());
    put_str(&mut m, "type", &link.link_type);
    m.insert("order".into(), Value::from(link.order));
    put_refs(&mut m, "targets", &link.target_aspects);
    put_refs(&mut m, "sources", &link.source_aspects);
    if let Some(date) = &link.date {
        m.insert("date".into(), date_value(date));
    }
    put_opt(&mut m, "display_lang", &link.display_lang);
    put_opt(&mut m, "display_orth", &link.display_orth);
    put_opt(&mut m, "display_gloss", &link.display_gloss);
    Value::Object(m)
}

fn date_kind_token(kind: DateKind) -> &'static str {
    match kind {
        DateKind::Point => "point",
        DateKind::Range => "range",
        DateKind::Relative => "relative",
    }
}

fn date_value(date: &EtyDate) -> Value {
    let mut m = Map::new();
    put_str(&mut m, "kind", date_kind_token(date.kind));
    put_str(&mut m, "text", &date.text);
    if let Some(y) = date.year_start {
        m.insert("year_start".into(), Value::from(y));
    }
    if let Some(y) = date.year_end {
        m.insert("year_end".into(), Value::from(y));
    }
    Value::Object(m)
}

fn crossref_value(xref: &CrossRef) -> Value {
    let mut m = Map::new();
    put_str(&mut m, "id", xref.id.as_str());
    put_str(&mut m, "type", &xref.ref_type);
    put_str(&mut m, "source", xref.source.target.as_str());
    put_list(&mut m, "targets", &xref.targets, |t| {
        let mut tm = Map::new();
        put_str(&mut tm, "target", t.target.target.as_str());
        tm.insert("order".into(), Value::from(t.order));
        Value::Object(tm)
    });
    Value::Object(m)
}

fn bibliography_value(bib: &Bibliography) -> Value {
    let mut m = Map::new();
    put_str(&mut m, "id", bib.id.as_str());
    put_str(&mut m, "citation", &bib.citation);
    put_refs(&mut m, "attached_to", &bib.attached_to);
    Value::Object(m)
}

/// Import failure: malformed JSON, an unsupported format tag, or a shape
/// the exporter never produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImportError(pub String);

impl core::fmt::Display for ImportError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ImportError {}

type R<T> = Result<T, ImportError>;

/// Rebuild the model from an exported document. The result compares
/// equal to the exported resource; no validation is re-run here.
pub fn import_json(text: &str) -> R<LexicalResource> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| ImportError(format!("malformed JSON: {e}")))?;
    let root = as_obj(&value, "document")?;
    let format = req_str(root, "format", "document")?;
    if format != FORMAT {
        return Err(ImportError(format!(
            "unsupported format '{format}'; expected '{FORMAT}'"
        )));
    }
    let lexicons = list_field(root, "lexicons", lexicon_from)?;
    let crossrefs = list_field(root, "crossrefs", crossref_from)?;
    let bibliographies = list_field(root, "bibliographies", bibliography_from)?;
    Ok(LexicalResource::new(lexicons, crossrefs, bibliographies))
}

fn as_obj<'a>(v: &'a Value, ctx: &str) -> R<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| ImportError(format!("{ctx}: expected an object")))
}

fn req_str(m: &Map<String, Value>, key: &str, ctx: &str) -> R<String> {
    match m.get(key) {
        Some(Value::String(s)) => Ok(s.clone()),
        Some(_) => Err(ImportError(format!("{ctx}: '{key}' must be a string"))),
        None => Err(ImportError(format!("{ctx}: missing '{key}'"))),
    }
}

fn opt_str(m: &Map<String, Value>, key: &str, ctx: &str) -> R<Option<String>> {
    match m.get(key) {
        Some(Value::String(s)) => Ok(Some(s.clone())),
        Some(_) => Err(ImportError(format!("{ctx}: '{key}' must be a string"))),
        None => Ok(None),
    }
}

fn opt_id(m: &Map<String, Value>, key: &str, ctx: &str) -> R<Option<NodeId>> {
    Ok(opt_str(m, key, ctx)?.map(NodeId::new))
}

fn req_u32(m: &Map<String, Value>, key: &str, ctx: &str) -> R<u32> {
    m.get(key)
        .and_then(Value::as_u64)
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| ImportError(format!("{ctx}: '{key}' must be a small whole number")))
}

fn opt_i32(m: &Map<String, Value>, key: &str, ctx: &str) -> R<Option<i32>> {
    match m.get(key) {
        None => Ok(None),
        Some(v) => v
            .as_i64()
            .and_then(|n| i32::try_from(n).ok())
            .map(Some)
            .ok_or_else(|| ImportError(format!("{ctx}: '{key}' must be a year number"))),
    }
}

/// A missing list key means empty; the exporter drops empty lists.
fn list_field<T>(
    m: &Map<String, Value>,
    key: &str,
    f: impl Fn(&Value) -> R<T>,
) -> R<Vec<T>> {
    match m.get(key) {
        None => Ok(Vec::new()),
        Some(Value::Array(items)) => items.iter().map(f).collect(),
        Some(_) => Err(ImportError(format!("'{key}' must be a list"))),
    }
}

fn refs_field(m: &Map<String, Value>, key: &str, ctx: &str) -> R<Vec<Ref>> {
    list_field(m, key, |v| {
        v.as_str()
            .map(Ref::new)
            .ok_or_else(|| ImportError(format!("{ctx}: '{key}' holds non-string reference")))
    })
}

fn lexicon_from(v: &Value) -> R<Lexicon> {
    let m = as_obj(v, "lexicon")?;
    let mut lexicon = Lexicon::new(opt_str(m, "language", "lexicon")?);
    lexicon.entries = list_field(m, "entries", entry_from)?;
    Ok(lexicon)
}

fn entry_from(v: &Value) -> R<LexicalEntry> {
    let m = as_obj(v, "entry")?;
    let kind_token = req_str(m, "kind", "entry")?;
    let kind = EntryKind::from_str(&kind_token)
        .ok_or_else(|| ImportError(format!("entry: unknown kind '{kind_token}'")))?;
    let mut entry = LexicalEntry::new(kind);
    entry.id = opt_id(m, "id", "entry")?;
    entry.language = opt_str(m, "language", "entry")?;
    entry.display_lang = opt_str(m, "display_lang", "entry")?;
    entry.gloss = match m.get("gloss") {
        Some(v) => Some(text_from(v, TextKind::Gloss)?),
        None => None,
    };
    entry.lemma = match m.get("lemma") {
        Some(v) => Some(form_from(v)?),
        None => None,
    };
    entry.forms = list_field(m, "forms", form_from)?;
    entry.senses = list_field(m, "senses", sense_from)?;
    entry.etymology = match m.get("etymology") {
        Some(v) => Some(etymology_from(v)?),
        None => None,
    };
    entry.subentries = list_field(m, "subentries", entry_from)?;
    entry.re_type = opt_str(m, "re_type", "entry")?;
    entry.bibliographies = list_field(m, "bibliographies", bibliography_from)?;
    Ok(entry)
}

fn form_from(v: &Value) -> R<Form> {
    let m = as_obj(v, "form")?;
    let token = req_str(m, "class", "form")?;
    let class = FormClass::from_token(&token)
        .ok_or_else(|| ImportError(format!("form: unknown class '{token}'")))?;
    Ok(Form {
        id: opt_id(m, "id", "form")?,
        class,
        representations: list_field(m, "representations", rep_from)?,
        grammatical_features: list_field(m, "features", feature_from)?,
        usages: list_field(m, "usages", usage_from)?,
        nested_forms: list_field(m, "nested_forms", form_from)?,
        segments: list_field(m, "segments", segment_from)?,
        pos: None,
    })
}

fn rep_from(v: &Value) -> R<FormRepresentation> {
    let m = as_obj(v, "representation")?;
    Ok(FormRepresentation {
        orthography: req_str(m, "orthography", "representation")?,
        pronunciation: opt_str(m, "pronunciation", "representation")?,
        language: opt_str(m, "language", "representation")?,
        usages: list_field(m, "usages", usage_from)?,
        pos: None,
    })
}

fn usage_from(v: &Value) -> R<Usage> {
    let m = as_obj(v, "usage")?;
    Ok(Usage {
        usage_type: req_str(m, "type", "usage")?,
        value: req_str(m, "value", "usage")?,
    })
}

fn feature_from(v: &Value) -> R<GrammaticalFeature> {
    let m = as_obj(v, "feature")?;
    let token = req_str(m, "syntax", "feature")?;
    let syntax = match token.as_str() {
        "named" => FeatureSyntax::NamedInGroup,
        "gram" => FeatureSyntax::GramInGroup,
        "bare" => FeatureSyntax::GramBare,
        other => {
            return Err(ImportError(format!("feature: unknown syntax '{other}'")));
        }
    };
    Ok(GrammaticalFeature {
        name: req_str(m, "name", "feature")?,
        value: req_str(m, "value", "feature")?,
        syntax,
    })
}

fn segment_from(v: &Value) -> R<MweSegment> {
    let m = as_obj(v, "segment")?;
    Ok(MweSegment {
        corresp: Ref::new(req_str(m, "corresp", "segment")?.as_str()),
        order: req_u32(m, "order", "segment")?,
        surface: req_str(m, "surface", "segment")?,
        pos: None,
    })
}

fn sense_from(v: &Value) -> R<lmfkit_core::model::Sense> {
    let m = as_obj(v, "sense")?;
    let mut sense = lmfkit_core::model::Sense::new();
    sense.id = opt_id(m, "id", "sense")?;
    sense.grammatical_features = list_field(m, "features", feature_from)?;
    sense.definitions = list_field(m, "definitions", |v| text_from(v, TextKind::Definition))?;
    sense.examples = list_field(m, "examples", |v| text_from(v, TextKind::Example))?;
    sense.subsenses = list_field(m, "subsenses", sense_from)?;
    Ok(sense)
}

fn text_from(v: &Value, kind: TextKind) -> R<TextRepresentation> {
    let m = as_obj(v, "text")?;
    let body = req_str(m, "text", "text")?;
    let mut text = match kind {
        TextKind::Definition => TextRepresentation::definition(body),
        TextKind::Example => TextRepresentation::example(body),
        TextKind::Gloss => TextRepresentation::gloss(body),
    };
    text.language = opt_str(m, "language", "text")?;
    text.bibliography_refs = refs_field(m, "sources", "text")?;
    Ok(text)
}

fn etymology_from(v: &Value) -> R<Etymology> {
    let m = as_obj(v, "etymology")?;
    let mut ety = Etymology::new(req_str(m, "type", "etymology")?);
    ety.id = opt_id(m, "id", "etymology")?;
    ety.bibliography_refs = refs_field(m, "sources", "etymology")?;
    ety.links = list_field(m, "links", link_from)?;
    ety.sub_etymologies = list_field(m, "sub_etymologies", etymology_from)?;
    Ok(ety)
}

fn link_from(v: &Value) -> R<EtyLink> {
    let m = as_obj(v, "link")?;
    let kind_token = req_str(m, "kind", "link")?;
    let target_kind = match kind_token.as_str() {
        "etymon" => EtyTargetKind::Etymon,
        "cognate" => EtyTargetKind::Cognate,
        other => return Err(ImportError(format!("link: unknown kind '{other}'"))),
    };
    Ok(EtyLink {
        id: opt_id(m, "id", "link")?,
        link_type: req_str(m, "type", "link")?,
        target_kind,
        source_aspects: refs_field(m, "sources", "link")?,
        target_aspects: refs_field(m, "targets", "link")?,
        order: req_u32(m, "order", "link")?,
        date: match m.get("date") {
            Some(v) => Some(date_from(v)?),
            None => None,
        },
        display_lang: opt_str(m, "display_lang", "link")?,
        display_orth: opt_str(m, "display_orth", "link")?,
        display_gloss: opt_str(m, "display_gloss", "link")?,
        pos: None,
    })
}

fn date_from(v: &Value) -> R<EtyDate> {
    let m = as_obj(v, "date")?;
    let token = req_str(m, "kind", "date")?;
    let kind = match token.as_str() {
        "point" => DateKind::Point,
        "range" => DateKind::Range,
        "relative" => DateKind::Relative,
        other => return Err(ImportError(format!("date: unknown kind '{other}'"))),
    };
    Ok(EtyDate {
        kind,
        text: req_str(m, "text", "date")?,
        year_start: opt_i32(m, "year_start", "date")?,
        year_end: opt_i32(m, "year_end", "date")?,
        pos: None,
    })
}

fn crossref_from(v: &Value) -> R<CrossRef> {
    let m = as_obj(v, "crossref")?;
    Ok(CrossRef {
        id: NodeId::new(req_str(m, "id", "crossref")?),
        ref_type: req_str(m, "type", "crossref")?,
        source: Ref::new(req_str(m, "source", "crossref")?.as_str()),
        targets: list_field(m, "targets", |v| {
            let tm = as_obj(v, "crossref target")?;
            Ok(CrossRefTarget {
                target: Ref::new(req_str(tm, "target", "crossref target")?.as_str()),
                order: req_u32(tm, "order", "crossref target")?,
            })
        })?,
    })
}

fn bibliography_from(v: &Value) -> R<Bibliography> {
    let m = as_obj(v, "bibliography")?;
    let mut bib = Bibliography::new(
        req_str(m, "id", "bibliography")?.as_str(),
        req_str(m, "citation", "bibliography")?,
    );
    bib.attached_to = refs_field(m, "attached_to", "bibliography")?;
    Ok(bib)
}
