//! Fixture plumbing shared by the integration suites. Fixtures live in
//! `fixtures/` at the workspace root; fault seeds in `fixtures/faults/`.

#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use lmfkit_core::model::{assemble, AssemblyInput};
use lmfkit_core::tei::{parse_document, ParsedDocument};
use lmfkit_core::{LexicalResource, SerializationProfile, ValidationReport};

/// Documents with a `body` root; the fragment fixture is listed separately.
pub const DOCUMENT_FIXTURES: [&str; 3] = ["figure3.xml", "klein-center.xml", "harvest.xml"];

pub const FRAGMENT_FIXTURES: [&str; 1] = ["figure3-entry.xml"];

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn read_fixture(name: &str) -> Vec<u8> {
    let path = fixtures_dir().join(name);
    fs::read(&path).unwrap_or_else(|e| panic!("read {}: {e}", path.display()))
}

pub fn profile() -> SerializationProfile {
    SerializationProfile::default_profile()
}

/// Parse a clean document fixture, panicking on any diagnostic at all.
pub fn parse_fixture_document(name: &str) -> ParsedDocument {
    let report = parse_document(&read_fixture(name), &profile());
    assert!(
        report.diagnostics.is_empty(),
        "{name} should parse without diagnostics, got {:#?}",
        report.diagnostics
    );
    report.value.expect("clean parse yields a document")
}

pub fn assemble_fixtures(names: &[&str]) -> (LexicalResource, ValidationReport) {
    let inputs = names
        .iter()
        .map(|name| AssemblyInput::from(parse_fixture_document(name)).labeled(*name))
        .collect();
    assemble(inputs, Vec::new(), Vec::new())
}

/// Assemble fixtures that must validate without a single diagnostic.
pub fn assemble_clean(names: &[&str]) -> LexicalResource {
    let (resource, report) = assemble_fixtures(names);
    assert!(
        report.diagnostics.is_empty(),
        "{names:?} should validate cleanly, got {:#?}",
        report.diagnostics
    );
    resource
}
