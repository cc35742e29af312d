//! Text renderings: diagnostic lines, whole reports, etymology traces.

use std::fmt::Write as _;

use lmfkit_core::etymology::ety_chain;
use lmfkit_core::model::{Node, OpError};
use lmfkit_core::{Diagnostic, ValidationReport};
use serde_json::{Map, Value};

use crate::store::{lookup, Store};

/// One fixed-format line per diagnostic:
/// `SEVERITY CODE file:line:col node message`, with `-` for parts the
/// diagnostic does not carry.
pub fn diagnostic_line(d: &Diagnostic) -> String {
    let mut line = String::new();
    let _ = write!(
        line,
        "{} {} {}:",
        d.severity.as_str(),
        d.code,
        d.file.as_deref().unwrap_or("-")
    );
    match d.pos {
        Some(pos) => {
            let _ = write!(line, "{}:{}", pos.line, pos.col);
        }
        None => line.push_str("-:-"),
    }
    let _ = write!(
        line,
        " {} {}",
        d.node.as_deref().unwrap_or("-"),
        d.message
    );
    line
}

/// One line per diagnostic, in the report's deterministic order. A clean
/// report renders as the empty string.
pub fn report_text(report: &ValidationReport) -> String {
    let mut out = String::new();
    for d in &report.diagnostics {
        out.push_str(&diagnostic_line(d));
        out.push('\n');
    }
    out
}

/// The report as one key-sorted JSON document.
pub fn report_json(report: &ValidationReport) -> String {
    let mut root = Map::new();
    root.insert(
        "diagnostics".into(),
        Value::Array(report.diagnostics.iter().map(diagnostic_value).collect()),
    );
    root.insert("errors".into(), Value::from(report.errors));
    root.insert("warnings".into(), Value::from(report.warnings));
    root.insert("infos".into(), Value::from(report.infos));
    Value::Object(root).to_string()
}

fn diagnostic_value(d: &Diagnostic) -> Value {
    let mut m = Map::new();
    m.insert("severity".into(), Value::String(d.severity.as_str().into()));
    m.insert("code".into(), Value::String(d.code.into()));
    if let Some(file) = &d.file {
        m.insert("file".into(), Value::String(file.clone()));
    }
    if let Some(pos) = d.pos {
        m.insert("line".into(), Value::from(pos.line));
        m.insert("col".into(), Value::from(pos.col));
    }
    if let Some(node) = &d.node {
        m.insert("node".into(), Value::String(node.clone()));
    }
    m.insert("message".into(), Value::String(d.message.clone()));
    Value::Object(m)
}

/// Why a trace could not be produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceError {
    /// No entry's lemma matches the headword.
    NotFound(String),
    /// Matching entries exist but none carries an etymology.
    NoEtymology(String),
    /// The etymology cannot be walked; the store's validation report
    /// explains why (dangling target or a revisited stage).
    Broken(String),
}

impl core::fmt::Display for TraceError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TraceError::NotFound(h) => write!(f, "no entry found for '{h}'"),
            TraceError::NoEtymology(h) => write!(f, "entry for '{h}' has no etymology"),
            TraceError::Broken(msg) => write!(f, "etymology cannot be traced: {msg}"),
        }
    }
}

impl std::error::Error for TraceError {}

/// Render the etymological chain of a headword on one line:
///
/// `center ←(borrowing)← centre [fr] ←(inheritance)← centrum [la] '…'`
///
/// Each step shows the link type, the stage's lemma, and its language;
/// the final stage's gloss closes the line when one exists. The first
/// matching entry that carries an etymology is traced.
pub fn etym_trace(store: &Store, headword: &str) -> Result<String, TraceError> {
    let matches = lookup(store, headword);
    if matches.is_empty() {
        return Err(TraceError::NotFound(headword.to_string()));
    }
    let resource = &store.resource;
    let entry = matches
        .iter()
        .filter_map(|summary| match resource.node(&summary.id) {
            Some(Node::Entry(entry)) => Some(entry),
            _ => None,
        })
        .find(|entry| entry.etymology.is_some())
        .ok_or_else(|| TraceError::NoEtymology(headword.to_string()))?;

    let id = entry.id.as_ref().expect("indexed entries carry ids");
    let chain = ety_chain(resource, id.as_str()).map_err(|e| match e {
        OpError::NoEtymology(_) => TraceError::NoEtymology(headword.to_string()),
        other => TraceError::Broken(other.to_string()),
    })?;

    let mut out = String::new();
    let head = entry
        .lemma
        .as_ref()
        .and_then(|form| form.first_orth())
        .unwrap_or(headword);
    out.push_str(head);
    for step in &chain {
        let orth = step
            .entry
            .lemma
            .as_ref()
            .and_then(|form| form.first_orth())
            .or(step.link.display_orth.as_deref())
            .or(step.entry.id.as_ref().map(|id| id.as_str()))
            .unwrap_or("?");
        let lang = step
            .entry
            .language
            .as_deref()
            .or(step.link.display_lang.as_deref())
            .unwrap_or("?");
        let _ = write!(out, " \u{2190}({})\u{2190} {} [{}]", step.link.link_type, orth, lang);
    }
    let gloss = chain.last().and_then(|step| {
        step.entry
            .gloss
            .as_ref()
            .map(|g| g.text.as_str())
            .or(step.link.display_gloss.as_deref())
    });
    if let Some(gloss) = gloss {
        let _ = write!(out, " '{gloss}'");
    }
    Ok(out)
}
