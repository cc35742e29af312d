//! Corpus ingestion and the read-only store.
//!
//! A store is built once and never mutated. Documents are merged in a
//! fixed sort order (lexicon language, content hash, path), not in the
//! order the paths were given, so the same set of files produces the
//! same store and the same report regardless of command-line order.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io;
use std::path::PathBuf;

use lmfkit_core::model::{assemble, AssemblyInput, EntryKind, Node};
use lmfkit_core::tei::parse_document;
use lmfkit_core::{LexicalResource, SerializationProfile, ValidationReport};
use sha2::{Digest, Sha256};
use unicode_normalization::UnicodeNormalization;

/// One ingested file: the path as given plus its content hash.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceFile {
    pub path: String,
    /// SHA-256 of the raw bytes, lowercase hex.
    pub sha256: String,
}

/// An immutable corpus: the merged resource, its validation report, the
/// headword index, and the provenance of every source file.
#[derive(Debug, Clone)]
pub struct Store {
    pub resource: LexicalResource,
    /// Parse and model diagnostics for the whole corpus, labeled with the
    /// file each one came from.
    pub report: ValidationReport,
    /// NFC-normalized lemma orthography to ids of top-level standard
    /// entries, in document order. Index lookups agree with a full scan;
    /// there is no case folding.
    pub lemma_index: BTreeMap<String, Vec<String>>,
    /// In merge order.
    pub source_files: Vec<SourceFile>,
}

/// Failure outside the document model. Parse and validation problems are
/// diagnostics in the report, not errors.
#[derive(Debug)]
pub enum IngestError {
    Io { path: PathBuf, error: io::Error },
}

impl fmt::Display for IngestError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IngestError::Io { path, error } => {
                write!(f, "cannot read {}: {}", path.display(), error)
            }
        }
    }
}

impl std::error::Error for IngestError {}

/// NFC-normalize a headword or orthography. Index keys and queries both
/// pass through here, and nothing else is normalized away.
pub fn nfc(s: &str) -> String {
    s.nfc().collect()
}

/// Parse every file and merge the documents into one resource with one
/// validation report. An empty path list yields an empty store and an
/// empty report.
pub fn ingest(
    paths: &[PathBuf],
    profile: &SerializationProfile,
) -> Result<Store, IngestError> {
    struct FileDoc {
        path: String,
        sha256: String,
        language: Option<String>,
        doc: Option<lmfkit_core::tei::ParsedDocument>,
        diagnostics: Vec<lmfkit_core::Diagnostic>,
    }

    let mut files = Vec::new();
    for path in paths {
        let bytes = fs::read(path).map_err(|error| IngestError::Io {
            path: path.clone(),
            error,
        })?;
        let sha256 = hex(&Sha256::digest(&bytes));
        let label = path.display().to_string();
        let mut parsed = parse_document(&bytes, profile);
        for d in &mut parsed.diagnostics {
            if d.file.is_none() {
                d.file = Some(label.clone());
            }
        }
        files.push(FileDoc {
            language: parsed
                .value
                .as_ref()
                .and_then(|doc| doc.lexicon.language.clone()),
            path: label,
            sha256,
            doc: parsed.value,
            diagnostics: parsed.diagnostics,
        });
    }

    files.sort_by(|a, b| {
        (&a.language, &a.sha256, &a.path).cmp(&(&b.language, &b.sha256, &b.path))
    });

    let mut diagnostics = Vec::new();
    let mut inputs = Vec::new();
    let mut source_files = Vec::new();
    for file in files {
        diagnostics.extend(file.diagnostics);
        source_files.push(SourceFile {
            path: file.path.clone(),
            sha256: file.sha256,
        });
        if let Some(doc) = file.doc {
            inputs.push(AssemblyInput::from(doc).labeled(file.path));
        }
    }

    let (resource, model_report) = assemble(inputs, Vec::new(), Vec::new());
    diagnostics.extend(model_report.diagnostics);
    let report = ValidationReport::new(diagnostics);
    let lemma_index = index_lemmas(&resource);
    Ok(Store {
        resource,
        report,
        lemma_index,
        source_files,
    })
}

fn hex(bytes: &[u8]) -> String {
    let mut out = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

/// Every orthography of every standard entry's lemma, NFC-normalized.
/// Entries without an id cannot be addressed and are skipped.
fn index_lemmas(resource: &LexicalResource) -> BTreeMap<String, Vec<String>> {
    let mut index: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for lexicon in resource.lexicons() {
        for entry in &lexicon.entries {
            if entry.kind != EntryKind::Standard {
                continue;
            }
            let (Some(id), Some(lemma)) = (&entry.id, &entry.lemma) else {
                continue;
            };
            for rep in &lemma.representations {
                let ids = index.entry(nfc(&rep.orthography)).or_default();
                if !ids.iter().any(|i| i == id.as_str()) {
                    ids.push(id.as_str().to_string());
                }
            }
        }
    }
    index
}

/// Summary row for one matched entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntrySummary {
    pub id: String,
    /// Language of the owning lexicon.
    pub language: Option<String>,
    /// Number of top-level senses.
    pub senses: usize,
}

/// Case-sensitive exact match on any lemma orthography. Results come in
/// document order; a miss is an empty list, not an error.
pub fn lookup(store: &Store, headword: &str) -> Vec<EntrySummary> {
    let Some(ids) = store.lemma_index.get(&nfc(headword)) else {
        return Vec::new();
    };
    ids.iter()
        .filter_map(|id| summarize(store, id))
        .collect()
}

fn summarize(store: &Store, id: &str) -> Option<EntrySummary> {
    let entry = match store.resource.node(id)? {
        Node::Entry(entry) => entry,
        _ => return None,
    };
    let language = store
        .resource
        .lexicon_of(id)
        .and_then(|l| store.resource.lexicons().get(l as usize))
        .and_then(|lexicon| lexicon.language.clone());
    Some(EntrySummary {
        id: id.to_string(),
        language,
        senses: entry.senses.len(),
    })
}
