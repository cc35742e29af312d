//! Shared plumbing for the corpus-level suites: fixture paths, scratch
//! corpora on disk, and a linear-scan lookup oracle.

#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use lmfkit::store::{ingest, nfc, EntrySummary, Store};
use lmfkit_core::model::EntryKind;
use lmfkit_core::tei::serialize_document;
use lmfkit_core::SerializationProfile;

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture(name: &str) -> PathBuf {
    fixtures_dir().join(name)
}

pub fn profile() -> SerializationProfile {
    SerializationProfile::default_profile()
}

pub fn ingest_fixtures(names: &[&str]) -> Store {
    let paths: Vec<PathBuf> = names.iter().map(|n| fixture(n)).collect();
    ingest(&paths, &profile()).expect("fixtures are readable")
}

pub fn ingest_paths(paths: &[PathBuf]) -> Store {
    ingest(paths, &profile()).expect("corpus files are readable")
}

/// Write one document under `dir` and hand back its path.
pub fn write_doc(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).expect("scratch dir is writable");
    path
}

/// Minimal well-formed document wrapper.
pub fn doc(lang: &str, entries_xml: &str) -> String {
    format!(
        "<body xmlns=\"http://www.tei-c.org/ns/1.0\" xml:lang=\"{lang}\">\n{entries_xml}</body>\n"
    )
}

/// Minimal clean entry: one lemma orthography, one sense.
pub fn entry_xml(id: &str, orth: &str, def: &str) -> String {
    format!(
        "  <entry xml:id=\"{id}\">\n    <form type=\"lemma\">\n      <orth>{orth}</orth>\n    </form>\n    <sense>\n      <def>{def}</def>\n    </sense>\n  </entry>\n"
    )
}

/// Serialize a generated document into `dir`. Generated documents share
/// an id namespace, so multi-file corpora must come from a single seed.
pub fn write_generated(dir: &Path, name: &str, doc: &lmfkit_core::tei::ParsedDocument) -> PathBuf {
    let bytes = serialize_document(doc, &profile()).expect("generated documents serialize");
    let path = dir.join(name);
    fs::write(&path, bytes).expect("scratch dir is writable");
    path
}

/// The full-scan reference for `lookup`: same matching rule, no index.
pub fn scan_lookup(store: &Store, headword: &str) -> Vec<EntrySummary> {
    let key = nfc(headword);
    let mut out = Vec::new();
    for lexicon in store.resource.lexicons() {
        for entry in &lexicon.entries {
            if entry.kind != EntryKind::Standard {
                continue;
            }
            let (Some(id), Some(lemma)) = (&entry.id, &entry.lemma) else {
                continue;
            };
            if lemma
                .representations
                .iter()
                .any(|rep| nfc(&rep.orthography) == key)
            {
                out.push(EntrySummary {
                    id: id.as_str().to_string(),
                    language: lexicon.language.clone(),
                    senses: entry.senses.len(),
                });
            }
        }
    }
    out
}

/// Every distinct lemma orthography in the store, NFC-normalized.
pub fn all_lemma_orths(store: &Store) -> Vec<String> {
    let mut orths = Vec::new();
    for lexicon in store.resource.lexicons() {
        for entry in &lexicon.entries {
            if entry.kind != EntryKind::Standard {
                continue;
            }
            let Some(lemma) = &entry.lemma else { continue };
            for rep in &lemma.representations {
                let orth = nfc(&rep.orthography);
                if !orths.contains(&orth) {
                    orths.push(orth);
                }
            }
        }
    }
    orths
}
