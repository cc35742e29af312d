//! JSON interchange: deterministic exports, model-complete round-trips,
//! and the validity gate.

mod common;

use lmfkit::json::{export_json, import_json, render_resource, FORMAT};
use lmfkit::store::ingest;
use lmfkit_core::arb::document_from_seed;
use serde_json::Value;

use common::{fixture, ingest_fixtures, ingest_paths, profile, write_generated};

#[test]
fn empty_store_exports_an_empty_lexicon_list() {
    let store = ingest(&[], &profile()).expect("nothing to read");
    let json = export_json(&store).expect("empty store is valid");
    assert_eq!(json, format!("{{\"format\":\"{FORMAT}\",\"lexicons\":[]}}"));
}

#[test]
fn figure3_export_carries_the_model_counts() {
    let store = ingest_fixtures(&["figure3.xml"]);
    let json = export_json(&store).expect("figure3 is valid");
    assert!(!json.contains("diagnostic"), "diagnostics are not exported");

    let value: Value = serde_json::from_str(&json).expect("well-formed export");
    let root = value.as_object().expect("object root");
    assert_eq!(root["format"], Value::String(FORMAT.into()));
    let entries = root["lexicons"][0]["entries"]
        .as_array()
        .expect("entry list");
    assert_eq!(entries.len(), 2);

    // The headword entry: four forms counting the nested variant, two
    // senses, one multiword subentry with ordered segments.
    let center = entries[0].as_object().expect("entry object");
    assert_eq!(center["kind"], "standard");
    let mut forms = 0;
    if let Some(lemma) = center.get("lemma") {
        forms += 1 + count_nested(lemma);
    }
    for form in center.get("forms").and_then(Value::as_array).into_iter().flatten() {
        forms += 1 + count_nested(form);
    }
    assert_eq!(forms, 4);
    assert_eq!(center["senses"].as_array().map(Vec::len), Some(2));

    let subentries = center["subentries"].as_array().expect("subentry list");
    assert_eq!(subentries.len(), 1);
    assert_eq!(subentries[0]["re_type"], "multiWordExpression");
    let segments = subentries[0]["lemma"]["segments"]
        .as_array()
        .expect("segments");
    let seen: Vec<(String, u64, String)> = segments
        .iter()
        .map(|s| {
            (
                s["surface"].as_str().unwrap().to_string(),
                s["order"].as_u64().unwrap(),
                s["corresp"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(
        seen,
        [
            ("dead".to_string(), 1, "dead_form".to_string()),
            ("center".to_string(), 2, "center_form".to_string()),
        ]
    );
}

fn count_nested(form: &Value) -> usize {
    form.get("nested_forms")
        .and_then(Value::as_array)
        .map(|nested| nested.iter().map(|f| 1 + count_nested(f)).sum())
        .unwrap_or(0)
}

#[test]
fn export_is_deterministic_across_runs_and_orders() {
    let forward = ingest_fixtures(&["figure3.xml", "klein-center.xml", "harvest.xml"]);
    let reversed = ingest_fixtures(&["harvest.xml", "figure3.xml", "klein-center.xml"]);
    let a = export_json(&forward).expect("valid corpus");
    let b = export_json(&reversed).expect("valid corpus");
    assert_eq!(a, b);
    for _ in 0..5 {
        assert_eq!(export_json(&forward).expect("valid corpus"), a);
    }
}

#[test]
fn import_reproduces_the_exported_model() {
    for seed in [1u64, 0xBEEF, 0x5EED_5EED, 42, 7_777_777] {
        let dir = tempfile::tempdir().expect("tempdir");
        let generated = document_from_seed(seed, 4);
        let path = write_generated(dir.path(), "gen.xml", &generated);
        let store = ingest_paths(&[path]);
        assert!(!store.report.has_errors(), "seed {seed}: {:#?}", store.report);

        let json = export_json(&store).expect("generated stores are valid");
        let imported = import_json(&json).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(imported, store.resource, "seed {seed}");
        // And the re-export of the import is byte-identical.
        assert_eq!(render_resource(&imported), json, "seed {seed}");
    }
}

#[test]
fn fixture_corpus_round_trips_through_json() {
    let store = ingest_fixtures(&["figure3.xml", "klein-center.xml", "harvest.xml"]);
    let json = export_json(&store).expect("valid corpus");
    let imported = import_json(&json).expect("own export imports");
    assert_eq!(imported, store.resource);
}

#[test]
fn export_refuses_a_store_with_errors() {
    let store = ingest_paths(&[fixture("faults/04-duplicate-id.xml")]);
    assert!(store.report.has_errors());
    let err = export_json(&store).expect_err("invalid store must not export");
    assert_eq!(err.code, "E-EXPORT-INVALID");
    assert!(err.message.contains("validation error"), "{}", err.message);
    // Warnings alone do not block an export.
    let clean = ingest_fixtures(&["figure3.xml"]);
    assert!(export_json(&clean).is_ok());
}

#[test]
fn import_rejects_foreign_documents() {
    assert!(import_json("not json").is_err());
    assert!(import_json("{\"lexicons\":[]}").is_err(), "format field is required");
    let wrong = "{\"format\":\"lmfkit-json/2\",\"lexicons\":[]}";
    let err = import_json(wrong).expect_err("wrong version");
    assert!(err.to_string().contains("lmfkit-json/2"));
    let bad_entry = format!(
        "{{\"format\":\"{FORMAT}\",\"lexicons\":[{{\"entries\":[{{\"kind\":\"nonsense\"}}]}}]}}"
    );
    assert!(import_json(&bad_entry).is_err());
}
