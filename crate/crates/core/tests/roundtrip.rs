//! Canonicalization properties over the fixture corpus: serializing a
//! parse equals canonicalizing the bytes, canonicalization is idempotent,
//! and surface-level rewrites (attribute order, whitespace, entities,
//! quoting, comments) all collapse to one canonical form.

mod common;

use lmfkit_core::tei::{
    canonicalize, parse_document, parse_entry, serialize_document, serialize_entry,
};

/// Canonical bytes of a fixture, panicking when it does not parse.
fn canonical(name: &str, bytes: &[u8]) -> Vec<u8> {
    let report = canonicalize(bytes, &common::profile());
    report
        .value
        .unwrap_or_else(|| panic!("{name} should canonicalize, got {:#?}", report.diagnostics))
}

/// Every parseable fixture, clean corpus and fault seeds alike. Fault
/// seeds that fail conformance have no canonical form and are skipped;
/// model-level faults still parse and must round-trip.
fn parseable_fixtures() -> Vec<(String, Vec<u8>)> {
    let mut out = Vec::new();
    for name in common::DOCUMENT_FIXTURES
        .iter()
        .chain(common::FRAGMENT_FIXTURES.iter())
    {
        out.push((name.to_string(), common::read_fixture(name)));
    }
    let faults = common::fixtures_dir().join("faults");
    if faults.is_dir() {
        let mut entries: Vec<_> = std::fs::read_dir(&faults)
            .unwrap()
            .map(|e| e.unwrap().path())
            .filter(|p| p.extension().is_some_and(|x| x == "xml"))
            .collect();
        entries.sort();
        for path in entries {
            let name = format!("faults/{}", path.file_name().unwrap().to_string_lossy());
            let bytes = std::fs::read(&path).unwrap();
            if canonicalize(&bytes, &common::profile()).is_ok() {
                out.push((name, bytes));
            }
        }
    }
    out
}

#[test]
fn serialize_of_parse_equals_canonicalize() {
    for (name, bytes) in parseable_fixtures() {
        let profile = common::profile();
        let serialized = if bytes.trim_ascii_start().starts_with(b"<entry") {
            let entry = parse_entry(&bytes, &profile).value.expect("fragment parses");
            serialize_entry(&entry, &profile).expect("fragment serializes")
        } else {
            let doc = parse_document(&bytes, &profile).value.expect("document parses");
            serialize_document(&doc, &profile).expect("document serializes")
        };
        let canon = canonical(&name, &bytes);
        assert_eq!(
            String::from_utf8_lossy(&serialized),
            String::from_utf8_lossy(&canon),
            "serialize(parse({name})) != canonicalize({name})"
        );
    }
}

#[test]
fn canonicalize_is_idempotent_on_every_fixture() {
    for (name, bytes) in parseable_fixtures() {
        let once = canonical(&name, &bytes);
        let twice = canonical(&name, &once);
        assert_eq!(
            String::from_utf8_lossy(&once),
            String::from_utf8_lossy(&twice),
            "canonicalize({name}) is not idempotent"
        );
    }
}

#[test]
fn parse_of_canonical_form_equals_parse_of_original() {
    let profile = common::profile();
    for name in common::DOCUMENT_FIXTURES {
        let bytes = common::read_fixture(name);
        let original = parse_document(&bytes, &profile).value.expect("parses");
        let canon = canonical(name, &bytes);
        let reparsed = parse_document(&canon, &profile).value.expect("reparses");
        assert_eq!(original, reparsed, "{name} changed across canonicalization");
    }
}

/// Rewrites that XML itself treats as equivalent: the canonical form must
/// not see them.
#[test]
fn surface_perturbations_share_the_canonical_form() {
    let original = String::from_utf8(common::read_fixture("figure3-entry.xml")).unwrap();
    let baseline = canonical("figure3-entry.xml", original.as_bytes());

    let attr_reordered = original
        .replace(
            "<form type=\"lemma\" xml:id=\"center_form\">",
            "<form xml:id=\"center_form\" type=\"lemma\">",
        )
        .replace(
            "<seg corresp=\"#dead_form\" n=\"1\">",
            "<seg n=\"1\" corresp=\"#dead_form\">",
        );
    assert_ne!(attr_reordered, original);

    let whitespace_perturbed = original
        .replace("  <form type=\"inflected\">", "\t\t<form type=\"inflected\" >")
        .replace("</sense>\n", "</sense>\n\n\n")
        .replace("<re type=\"multiWordExpression\">", "<re\n   type=\"multiWordExpression\"\n>");

    let entity_escaped = original
        .replace("<orth>center</orth>", "<orth>c&#101;nt&#x65;r</orth>")
        .replace("<pron>'sentʃ</pron>", "<pron>&apos;sent&#x283;</pron>")
        .replace("<quote>earth center</quote>", "<quote>earth&#32;center</quote>");
    assert_ne!(entity_escaped, original);

    let single_quoted = original
        .replace("type=\"lemma\" xml:id=\"center_form\"", "type='lemma' xml:id='center_form'")
        .replace("corresp=\"#dead_form\" n=\"1\"", "corresp='#dead_form' n='1'");

    let commented = original
        .replace(
            "<entry>",
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<!-- regional spellings -->\n<entry>",
        )
        .replace("</sense>", "</sense><!-- sense ends -->");

    for (label, variant) in [
        ("attribute order", attr_reordered),
        ("whitespace", whitespace_perturbed),
        ("entity escapes", entity_escaped),
        ("quote style", single_quoted),
        ("comments and declaration", commented),
    ] {
        let canon = canonical(label, variant.as_bytes());
        assert_eq!(
            String::from_utf8_lossy(&canon),
            String::from_utf8_lossy(&baseline),
            "{label} perturbation changed the canonical form"
        );
    }
}

/// The fragment's canonical form is also what serializing its model value
/// produces; the canonical form of the canonical form is itself.
#[test]
fn figure3_fragment_canonical_form_is_stable() {
    let bytes = common::read_fixture("figure3-entry.xml");
    let profile = common::profile();
    let canon = canonical("figure3-entry.xml", &bytes);

    let entry = parse_entry(&canon, &profile).value.expect("canonical form parses");
    let original = parse_entry(&bytes, &profile).value.expect("original parses");
    assert_eq!(entry, original);

    let reserialized = serialize_entry(&entry, &profile).expect("serializes");
    assert_eq!(reserialized, canon);
}
