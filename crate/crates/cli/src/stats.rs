//! Corpus statistics. Every count is a full scan over the resource, so
//! the numbers stay honest no matter what the indexes say.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use lmfkit_core::etymology::Etymology;
use lmfkit_core::model::{EntryKind, Sense};
use lmfkit_core::mrd::{all_forms, FormClass};
use lmfkit_core::{LexicalEntry, Severity};
use serde_json::{Map, Value};

use crate::store::Store;

const ENTRY_KINDS: [EntryKind; 4] = [
    EntryKind::Standard,
    EntryKind::Etymon,
    EntryKind::Cognate,
    EntryKind::Related,
];

const SEVERITIES: [Severity; 3] = [Severity::Error, Severity::Warning, Severity::Info];

/// Corpus tallies. Entry kinds, form classes, and severities always have
/// a row (possibly zero); link types appear as encountered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatsReport {
    pub entries_by_kind: BTreeMap<&'static str, usize>,
    pub forms_by_class: BTreeMap<&'static str, usize>,
    /// Sense nodes, subsenses included.
    pub senses: usize,
    /// Subentries typed as multiword expressions.
    pub mwes: usize,
    /// Etymology sections, nested sub-etymologies included.
    pub etymologies: usize,
    pub links_by_type: BTreeMap<String, usize>,
    pub diagnostics_by_severity: BTreeMap<&'static str, usize>,
}

impl StatsReport {
    pub fn entries(&self) -> usize {
        self.entries_by_kind.values().sum()
    }

    pub fn forms(&self) -> usize {
        self.forms_by_class.values().sum()
    }

    pub fn links(&self) -> usize {
        self.links_by_type.values().sum()
    }

    pub fn diagnostics(&self) -> usize {
        self.diagnostics_by_severity.values().sum()
    }
}

pub fn stats(store: &Store) -> StatsReport {
    let mut report = StatsReport {
        entries_by_kind: ENTRY_KINDS.iter().map(|k| (k.as_str(), 0)).collect(),
        forms_by_class: FormClass::ALL.iter().map(|c| (c.token(), 0)).collect(),
        senses: 0,
        mwes: 0,
        etymologies: 0,
        links_by_type: BTreeMap::new(),
        diagnostics_by_severity: SEVERITIES.iter().map(|s| (s.as_str(), 0)).collect(),
    };
    for lexicon in store.resource.lexicons() {
        for entry in &lexicon.entries {
            scan_entry(entry, &mut report);
        }
    }
    for d in &store.report.diagnostics {
        *report
            .diagnostics_by_severity
            .get_mut(d.severity.as_str())
            .expect("fixed severity rows") += 1;
    }
    report
}

fn scan_entry(entry: &LexicalEntry, report: &mut StatsReport) {
    *report
        .entries_by_kind
        .get_mut(entry.kind.as_str())
        .expect("fixed kind rows") += 1;
    for form in all_forms(entry) {
        *report
            .forms_by_class
            .get_mut(form.class.token())
            .expect("fixed class rows") += 1;
    }
    for sense in &entry.senses {
        scan_sense(sense, report);
    }
    if entry.kind == EntryKind::Related
        && entry.re_type.as_deref() == Some("multiWordExpression")
    {
        report.mwes += 1;
    }
    if let Some(ety) = &entry.etymology {
        scan_etymology(ety, report);
    }
    for sub in &entry.subentries {
        scan_entry(sub, report);
    }
}

fn scan_sense(sense: &Sense, report: &mut StatsReport) {
    report.senses += 1;
    for sub in &sense.subsenses {
        scan_sense(sub, report);
    }
}

fn scan_etymology(ety: &Etymology, report: &mut StatsReport) {
    report.etymologies += 1;
    for link in &ety.links {
        *report.links_by_type.entry(link.link_type.clone()).or_default() += 1;
    }
    for sub in &ety.sub_etymologies {
        scan_etymology(sub, report);
    }
}

/// Indented totals-then-breakdown listing. Fixed rows keep their model
/// order; link types are alphabetical.
pub fn stats_text(report: &StatsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "entries: {}", report.entries());
    for kind in ENTRY_KINDS {
        let _ = writeln!(out, "  {}: {}", kind.as_str(), report.entries_by_kind[kind.as_str()]);
    }
    let _ = writeln!(out, "forms: {}", report.forms());
    for class in FormClass::ALL {
        let _ = writeln!(out, "  {}: {}", class.token(), report.forms_by_class[class.token()]);
    }
    let _ = writeln!(out, "senses: {}", report.senses);
    let _ = writeln!(out, "multiword expressions: {}", report.mwes);
    let _ = writeln!(out, "etymologies: {}", report.etymologies);
    let _ = writeln!(out, "links: {}", report.links());
    for (link_type, count) in &report.links_by_type {
        let _ = writeln!(out, "  {link_type}: {count}");
    }
    let _ = writeln!(out, "diagnostics: {}", report.diagnostics());
    for severity in SEVERITIES {
        let _ = writeln!(
            out,
            "  {}: {}",
            severity.as_str(),
            report.diagnostics_by_severity[severity.as_str()]
        );
    }
    out
}

/// The same numbers as one key-sorted JSON document.
pub fn stats_json(report: &StatsReport) -> String {
    fn counts<K: AsRef<str>>(map: &BTreeMap<K, usize>) -> Value {
        let mut m = Map::new();
        for (key, count) in map {
            m.insert(key.as_ref().into(), Value::from(*count));
        }
        Value::Object(m)
    }

    let mut root = Map::new();
    root.insert("entries".into(), counts(&report.entries_by_kind));
    root.insert("forms".into(), counts(&report.forms_by_class));
    root.insert("senses".into(), Value::from(report.senses));
    root.insert("mwes".into(), Value::from(report.mwes));
    root.insert("etymologies".into(), Value::from(report.etymologies));
    root.insert("links".into(), counts(&report.links_by_type));
    root.insert(
        "diagnostics".into(),
        counts(&report.diagnostics_by_severity),
    );
    Value::Object(root).to_string()
}
