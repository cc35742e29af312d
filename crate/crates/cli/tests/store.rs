//! Store construction and lookup: ingestion merging, order independence,
//! duplicate-id reporting across files, the index against a full scan.

mod common;

use lmfkit::json::render_resource;
use lmfkit::store::{ingest, lookup, nfc};
use lmfkit_core::arb::document_from_seed;
use lmfkit_core::model::EntryKind;

use common::{
    all_lemma_orths, doc, entry_xml, fixture, ingest_fixtures, ingest_paths, profile,
    scan_lookup, write_doc, write_generated,
};

#[test]
fn two_fixture_files_build_one_clean_store() {
    let store = ingest_fixtures(&["figure3.xml", "klein-center.xml"]);
    assert!(store.report.diagnostics.is_empty(), "{:#?}", store.report);

    let mut standard = 0;
    let mut etymon = 0;
    let mut cognate = 0;
    for lexicon in store.resource.lexicons() {
        for entry in &lexicon.entries {
            match entry.kind {
                EntryKind::Standard => standard += 1,
                EntryKind::Etymon => etymon += 1,
                EntryKind::Cognate => cognate += 1,
                EntryKind::Related => {}
            }
        }
    }
    assert!(standard >= 2, "expected at least two standard entries");
    assert_eq!(etymon, 4);
    assert_eq!(cognate, 4);

    assert_eq!(store.source_files.len(), 2);
    for file in &store.source_files {
        assert_eq!(file.sha256.len(), 64);
        assert!(file.sha256.chars().all(|c| c.is_ascii_hexdigit()));
        assert!(!file.sha256.contains(char::is_uppercase));
    }
    assert_ne!(store.source_files[0].sha256, store.source_files[1].sha256);
}

#[test]
fn empty_path_list_yields_empty_store_and_report() {
    let store = ingest(&[], &profile()).expect("nothing to read");
    assert!(store.resource.lexicons().is_empty());
    assert!(store.report.diagnostics.is_empty());
    assert!(store.lemma_index.is_empty());
    assert!(store.source_files.is_empty());
}

#[test]
fn missing_file_is_an_ingest_error() {
    let missing = fixture("no-such-file.xml");
    let err = ingest(&[missing], &profile()).expect_err("missing file");
    assert!(err.to_string().contains("no-such-file.xml"));
}

#[test]
fn duplicate_ids_across_files_cite_both_files() {
    let dir = tempfile::tempdir().expect("tempdir");
    let a = write_doc(
        dir.path(),
        "a.xml",
        &doc("en", &entry_xml("shared", "alpha", "first letter")),
    );
    let b = write_doc(
        dir.path(),
        "b.xml",
        &doc("en", &entry_xml("shared", "beta", "second letter")),
    );

    for path in [&a, &b] {
        let alone = ingest_paths(std::slice::from_ref(path));
        assert!(alone.report.diagnostics.is_empty(), "{:#?}", alone.report);
    }

    let store = ingest_paths(&[a.clone(), b.clone()]);
    let dups: Vec<_> = store
        .report
        .diagnostics
        .iter()
        .filter(|d| d.code == "E-ID-DUP")
        .collect();
    assert_eq!(dups.len(), 1, "{:#?}", store.report.diagnostics);
    let d = dups[0];
    assert_eq!(d.node.as_deref(), Some("shared"));
    let a_str = a.display().to_string();
    let b_str = b.display().to_string();
    let file = d.file.as_deref().expect("dup diagnostic names its file");
    let cited = [&a_str, &b_str]
        .into_iter()
        .find(|p| p.as_str() != file)
        .expect("one path is the file, the other is cited");
    assert!(
        d.message.contains(cited.as_str()),
        "message should cite the other file: {}",
        d.message
    );
}

#[test]
fn lookup_is_case_sensitive_and_exact() {
    let store = ingest_fixtures(&["klein-center.xml"]);
    let hit = lookup(&store, "center");
    assert_eq!(hit.len(), 1);
    assert_eq!(hit[0].id, "center");
    assert_eq!(hit[0].language.as_deref(), Some("en"));
    assert_eq!(hit[0].senses, 1);

    assert!(lookup(&store, "CENTER").is_empty());
    assert!(lookup(&store, "center ").is_empty());
    assert!(lookup(&store, "cent").is_empty());
}

#[test]
fn lookup_covers_lemma_representations_only() {
    // klein's "centre" is a variant form, not a lemma representation.
    let store = ingest_fixtures(&["klein-center.xml"]);
    assert!(lookup(&store, "centre").is_empty());

    // A second orthography inside the lemma does match.
    let dir = tempfile::tempdir().expect("tempdir");
    let text = doc(
        "en",
        "  <entry xml:id=\"colour\">\n    <form type=\"lemma\">\n      <orth>colour</orth>\n      <orth>color</orth>\n    </form>\n    <sense>\n      <def>hue</def>\n    </sense>\n  </entry>\n",
    );
    let path = write_doc(dir.path(), "colour.xml", &text);
    let store = ingest_paths(&[path]);
    assert!(store.report.diagnostics.is_empty(), "{:#?}", store.report);
    assert_eq!(lookup(&store, "colour").len(), 1);
    assert_eq!(lookup(&store, "color").len(), 1);
    assert_eq!(lookup(&store, "color")[0].id, "colour");
}

#[test]
fn lookup_normalizes_to_nfc_without_case_folding() {
    let dir = tempfile::tempdir().expect("tempdir");
    // Decomposed e + combining acute in the document.
    let text = doc("fr", &entry_xml("cafe", "cafe\u{0301}", "coffee house"));
    let path = write_doc(dir.path(), "cafe.xml", &text);
    let store = ingest_paths(&[path]);
    assert!(store.report.diagnostics.is_empty(), "{:#?}", store.report);

    // Composed query finds the decomposed orthography and vice versa.
    assert_eq!(lookup(&store, "caf\u{e9}").len(), 1);
    assert_eq!(lookup(&store, "cafe\u{0301}").len(), 1);
    assert!(store.lemma_index.contains_key(&nfc("caf\u{e9}")));
    // Case still matters.
    assert!(lookup(&store, "Caf\u{e9}").is_empty());
}

#[test]
fn ingestion_is_order_independent() {
    let names = ["figure3.xml", "klein-center.xml", "harvest.xml"];
    let forward = ingest_fixtures(&names);
    let reversed = ingest_fixtures(&["harvest.xml", "klein-center.xml", "figure3.xml"]);
    let rotated = ingest_fixtures(&["klein-center.xml", "harvest.xml", "figure3.xml"]);

    for other in [&reversed, &rotated] {
        assert_eq!(forward.resource, other.resource);
        assert_eq!(forward.report, other.report);
        assert_eq!(forward.lemma_index, other.lemma_index);
        assert_eq!(forward.source_files, other.source_files);
        assert_eq!(render_resource(&forward.resource), render_resource(&other.resource));
    }
}

#[test]
fn index_agrees_with_a_full_scan_on_a_generated_corpus() {
    let dir = tempfile::tempdir().expect("tempdir");
    let generated = document_from_seed(0x10aD, 200);
    let path = write_generated(dir.path(), "corpus.xml", &generated);
    let store = ingest_paths(&[path]);
    assert!(
        !store.report.has_errors(),
        "generated corpora are valid: {:#?}",
        store.report
    );

    let orths = all_lemma_orths(&store);
    assert!(orths.len() >= 100, "corpus should be diverse, got {}", orths.len());

    let mut cases = 0;
    for orth in &orths {
        assert_eq!(lookup(&store, orth), scan_lookup(&store, orth), "headword {orth}");
        cases += 1;
        // Case-flipped and suffixed variants must agree as well (almost
        // always misses).
        let upper = orth.to_uppercase();
        assert_eq!(lookup(&store, &upper), scan_lookup(&store, &upper));
        let miss = format!("{orth}zz");
        assert_eq!(lookup(&store, &miss), scan_lookup(&store, &miss));
        cases += 2;
    }
    assert!(cases >= 300, "expected a broad case set, ran {cases}");

    // Index keys and scan-visible orthographies are the same set.
    let index_keys: Vec<&String> = store.lemma_index.keys().collect();
    for key in index_keys {
        assert!(!scan_lookup(&store, key).is_empty(), "stale index key {key}");
    }
}

#[test]
fn every_index_hit_is_a_standard_entry_in_document_order() {
    let store = ingest_fixtures(&["figure3.xml", "klein-center.xml", "harvest.xml"]);
    for (key, ids) in &store.lemma_index {
        let summaries = lookup(&store, key);
        assert_eq!(summaries.len(), ids.len());
        let scanned = scan_lookup(&store, key);
        assert_eq!(summaries, scanned, "index and scan disagree on {key}");
    }
}
