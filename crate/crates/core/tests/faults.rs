//! Seeded-fault corpus. Every file under `fixtures/faults/` plants exactly
//! one defect; reading it and assembling the result must produce exactly
//! one diagnostic, with the expected code, at the planted position.
//! Positions are resolved from the fixture text itself (a marker substring
//! plus a character offset), so the expectations survive reformatting and
//! stay anchored to the seeded construct.
//!
//! Codes that no document can trigger (cross-reference checks, API-only
//! model states) are seeded through the model API instead.

mod common;

use lmfkit_core::diag::Pos;
use lmfkit_core::etymology::Etymology;
use lmfkit_core::model::{assemble, AssemblyInput, Bibliography, CrossRef, EntryKind, Sense, TextRepresentation};
use lmfkit_core::mrd::{FeatureSyntax, Form, FormClass, GrammaticalFeature};
use lmfkit_core::tei::parse_document;
use lmfkit_core::{Diagnostic, LexicalEntry, Lexicon, NodeId, Ref};

/// Where the seeded construct sits in the file.
enum Loc {
    /// `chars` characters into the `occurrence`-th match of the marker.
    Marker(&'static str, usize, usize),
    /// Absolute position, for files the marker search cannot read
    /// (invalid UTF-8).
    Abs(u32, u32),
}

/// First occurrence of `marker`, offset zero: the common case.
fn at(marker: &'static str) -> Loc {
    Loc::Marker(marker, 0, 0)
}

struct Case {
    file: &'static str,
    code: &'static str,
    loc: Loc,
    /// Required message fragment.
    needle: &'static str,
    /// Expected `node` field, where one is pinned.
    node: Option<&'static str>,
}

fn case(
    file: &'static str,
    code: &'static str,
    loc: Loc,
    needle: &'static str,
    node: Option<&'static str>,
) -> Case {
    Case {
        file,
        code,
        loc,
        needle,
        node,
    }
}

fn cases() -> Vec<Case> {
    vec![
        case(
            "01-dangling-seg-ref.xml",
            "E-REF-DANGLING",
            at("corresp=\"#missing_form\""),
            "segment reference points to missing id 'missing_form'",
            None,
        ),
        case(
            "02-dangling-link-target.xml",
            "E-REF-DANGLING",
            at("corresp=\"#ghost\""),
            "link target points to missing id 'ghost'",
            None,
        ),
        case(
            "03-dangling-bibl-attachment.xml",
            "E-REF-DANGLING",
            at("corresp=\"#nothing\""),
            "bibliography attachment points to missing id 'nothing'",
            Some("bib_flora"),
        ),
        case(
            "04-duplicate-id.xml",
            "E-ID-DUP",
            Loc::Marker("<entry xml:id=\"mallow\"", 1, 0),
            "id 'mallow' already declared on a entry",
            Some("mallow"),
        ),
        case(
            "05-missing-lemma.xml",
            "E-LEMMA-MISSING",
            at("<entry xml:id=\"sorrel\""),
            "entry has no lemma form",
            Some("sorrel"),
        ),
        case(
            "06-extra-lemma.xml",
            "E-LEMMA-EXTRA",
            at("<form type=\"lemma\" xml:id=\"vetch_second\""),
            "more than one lemma form",
            Some("vetch_second"),
        ),
        case(
            "07-seg-order-gap.xml",
            "E-SEG-ORDER",
            at("<seg corresp=\"#fruit_form\" n=\"3\""),
            "segment orders must run 1..2 consecutively; found 3",
            None,
        ),
        case(
            "08-seg-order-zero.xml",
            "E-SEG-ORDER",
            at("<seg corresp=\"#sea_form\" n=\"0\""),
            "segment orders must run 1..2 consecutively; found 0",
            None,
        ),
        case(
            "09-seg-outside-mwe.xml",
            "E-SEG-CONTEXT",
            at("<seg corresp=\"#briar_form\""),
            "only allowed on the lemma of a multiword expression",
            Some("thorn_form"),
        ),
        case(
            "10-ety-cycle-pair.xml",
            "E-ETY-CYCLE",
            at("<entry xml:id=\"chicken\""),
            "etymological links form a cycle: chicken -> egg",
            Some("chicken"),
        ),
        case(
            "11-ety-cycle-self.xml",
            "E-ETY-CYCLE",
            at("<entry xml:id=\"bootstrap\""),
            "etymological links form a cycle: bootstrap",
            Some("bootstrap"),
        ),
        case(
            "12-unknown-element.xml",
            "E-PROFILE-ELEMENT",
            at("<platypus/>"),
            "element 'platypus' is not in the serialization profile",
            Some("heron"),
        ),
        case(
            "13-misplaced-element.xml",
            "E-PROFILE-ELEMENT",
            at("<quote>fresh mint"),
            "element 'quote' is not allowed inside 'form'",
            Some("mint"),
        ),
        case(
            "14-unknown-attribute.xml",
            "E-PROFILE-ATTR",
            Loc::Marker(" lang=\"en\"", 0, 1),
            "attribute 'lang' is not allowed on 'orth'",
            Some("tansy"),
        ),
        case(
            "15-bad-attribute-value.xml",
            "E-PROFILE-ATTR",
            at("type=\"gerund\""),
            "value 'gerund' is not allowed for 'form' attribute 'type'",
            Some("reed"),
        ),
        case(
            "16-missing-usg-type.xml",
            "E-ATTR-REQUIRED",
            at("<usg>"),
            "'usg' requires attribute 'type'",
            Some("haar"),
        ),
        case(
            "17-missing-seg-n.xml",
            "E-ATTR-REQUIRED",
            at("<seg corresp=\"#dune_form\">"),
            "'seg' requires attribute 'n'",
            Some("dune"),
        ),
        case(
            "18-child-out-of-order.xml",
            "E-PROFILE-STRUCT",
            at("<form type=\"lemma\">"),
            "element 'form' out of order inside 'entry'",
            Some("plover"),
        ),
        case(
            "19-too-many-glosses.xml",
            "E-PROFILE-STRUCT",
            at("<gloss>husk"),
            "'entry' allows at most 1 'gloss'",
            Some("ety_skel"),
        ),
        case(
            "20-stray-text.xml",
            "E-PROFILE-STRUCT",
            at("stray prose"),
            "'entry' does not allow text content",
            Some("gorse"),
        ),
        case(
            "21-foreign-namespace.xml",
            "E-PROFILE-ATTR",
            at("xmlns="),
            "namespace 'http://example.org/lexicon' does not match the profile namespace",
            None,
        ),
        case(
            "22-mismatched-tags.xml",
            "E-XML-MALFORMED",
            Loc::Marker("</entry>", 0, 2),
            "end tag '</entry>' does not match '<sense>'",
            None,
        ),
        case(
            "23-wrong-encoding.xml",
            "E-XML-ENCODING",
            at("encoding="),
            "unsupported encoding 'latin-1'",
            None,
        ),
        case(
            "24-invalid-utf8.xml",
            "E-XML-ENCODING",
            Loc::Abs(4, 13),
            "invalid UTF-8",
            None,
        ),
        case(
            "25-bad-language-tag.xml",
            "E-LANG-SYNTAX",
            at("<entry xml:id=\"loch\""),
            "'en_US' is not a well-formed language tag",
            Some("loch"),
        ),
        case(
            "26-link-order-gap.xml",
            "E-LINK-ORDER",
            at("<cit type=\"etymon\" n=\"3\""),
            "link orders must run 1..2 consecutively; found 3",
            Some("anchor_etym"),
        ),
        case(
            "27-link-without-target.xml",
            "E-LINK-TARGET",
            at("<cit type=\"etymon\" n=\"1\" corresp=\"\""),
            "etymological link has no target",
            Some("petrel"),
        ),
        case(
            "28-backwards-date-range.xml",
            "E-DATE-RANGE",
            at("<date from=\"1100\""),
            "a range needs start <= end years",
            None,
        ),
        case(
            "29-one-sided-date-range.xml",
            "E-DATE-RANGE",
            at("<date from=\"1200\""),
            "a range needs start <= end years",
            None,
        ),
        case(
            "30-non-numeric-date.xml",
            "W-DATE-NUM",
            at("when=\"c900\""),
            "value 'c900' is not a plain year",
            None,
        ),
        case(
            "31-dates-not-monotonic.xml",
            "W-ETY-DATE",
            at("<date when=\"1300\""),
            "link 2 dated 1300 postdates link 1 dated 1000",
            None,
        ),
        case(
            "32-empty-definition.xml",
            "E-EMPTY-TEXT",
            at("<def></def>"),
            "empty definition",
            Some("coppice"),
        ),
        case(
            "33-empty-sense.xml",
            "E-SENSE-EMPTY",
            at("<sense xml:id=\"moss_s1\"/>"),
            "no definition, example, feature, or subsense",
            Some("moss_s1"),
        ),
        case(
            "34-entry-without-senses.xml",
            "W-NO-SENSE",
            at("<entry xml:id=\"sedge\""),
            "standard entry has no senses",
            Some("sedge"),
        ),
        case(
            "35-lexicon-without-language.xml",
            "W-NO-LANG",
            at("<body"),
            "lexicon declares no language",
            None,
        ),
        case(
            "36-subentry-with-senses.xml",
            "I-RE-SENSE",
            at("<sense xml:id=\"hedgerow_s1\""),
            "subentry carries its own senses",
            Some("hedgerow"),
        ),
        case(
            "37-nested-nonlemma-form.xml",
            "E-FORM-NESTED",
            at("<form type=\"variant\" xml:id=\"bourn_variant\""),
            "a variant form cannot nest forms",
            Some("bourn_variant"),
        ),
        case(
            "38-form-without-content.xml",
            "E-FORM-EMPTY",
            at("<form type=\"inflected\" xml:id=\"elm_bare\"/>"),
            "neither representations nor segments",
            Some("elm_bare"),
        ),
        case(
            "39-etymon-without-language.xml",
            "E-ENTRY-KIND",
            at("<entry xml:id=\"ety_wald\""),
            "a etymon entry requires a language",
            Some("ety_wald"),
        ),
        case(
            "40-order-not-a-number.xml",
            "E-PROFILE-ATTR",
            at("n=\"-1\""),
            "attribute 'n' on 'seg' must be a non-negative integer, not '-1'",
            None,
        ),
        case(
            "41-pron-before-orth.xml",
            "E-PROFILE-STRUCT",
            at("<pron>"),
            "'pron' appears before any 'orth' in 'form'",
            None,
        ),
        case(
            "42-second-pronunciation.xml",
            "E-PROFILE-STRUCT",
            Loc::Marker("<pron>", 1, 0),
            "representation already has a pronunciation",
            None,
        ),
        case(
            "43-quote-in-etymon-citation.xml",
            "E-PROFILE-STRUCT",
            at("<quote>herba"),
            "'quote' is only allowed in example citations",
            None,
        ),
        case(
            "44-etymon-citation-in-sense.xml",
            "E-PROFILE-STRUCT",
            at("<cit type=\"etymon\""),
            "citation type 'etymon' is not allowed inside 'sense'",
            None,
        ),
        case(
            "45-date-with-when-and-range.xml",
            "E-PROFILE-STRUCT",
            at("<date when=\"900\" from=\"800\""),
            "'date' cannot carry both 'when' and a range",
            None,
        ),
        case(
            "46-seg-to-non-form.xml",
            "E-REF-KIND",
            at("corresp=\"#crab\""),
            "segment reference must point to a form; 'crab' is a entry",
            None,
        ),
        case(
            "47-link-kind-conflict.xml",
            "E-REF-KIND",
            at("corresp=\"#ety_fenestra\""),
            "link marked cognate but 'ety_fenestra' belongs to a etymon entry",
            None,
        ),
        case(
            "48-def-source-not-bibliography.xml",
            "E-REF-KIND",
            at("source=\"#fern_form\""),
            "text source reference must point to a bibliography record; 'fern_form' is a form",
            None,
        ),
        case(
            "49-bad-id-syntax.xml",
            "E-ID-SYNTAX",
            at("<entry xml:id=\"1bad\""),
            "id '1bad' is not a valid NCName",
            Some("1bad"),
        ),
        case(
            "50-doctype.xml",
            "E-XML-MALFORMED",
            at("<!DOCTYPE"),
            "DOCTYPE declarations are not supported",
            None,
        ),
        case(
            "51-duplicate-attribute.xml",
            "E-XML-MALFORMED",
            Loc::Marker("xml:id=", 1, 0),
            "duplicate attribute 'xml:id'",
            None,
        ),
        case(
            "52-bad-orth-language.xml",
            "E-LANG-SYNTAX",
            at("<orth xml:lang=\"123\""),
            "'123' is not a well-formed language tag",
            None,
        ),
        case(
            "53-empty-orthography.xml",
            "E-EMPTY-TEXT",
            at("<orth></orth>"),
            "empty orthography",
            Some("corrie"),
        ),
    ]
}

/// Line and column (1-based, columns in characters) of a byte offset.
fn pos_at(text: &str, byte: usize) -> Pos {
    let before = &text[..byte];
    let line = before.matches('\n').count() as u32 + 1;
    let col = before.chars().rev().take_while(|&c| c != '\n').count() as u32 + 1;
    Pos::new(line, col)
}

fn resolve(text: &str, loc: &Loc) -> Pos {
    match loc {
        Loc::Abs(line, col) => Pos::new(*line, *col),
        Loc::Marker(marker, occurrence, chars) => {
            let mut from = 0usize;
            let mut found = None;
            for _ in 0..=*occurrence {
                let i = text[from..]
                    .find(marker)
                    .unwrap_or_else(|| panic!("marker {marker:?} not found"));
                found = Some(from + i);
                from += i + 1;
            }
            let mut byte = found.unwrap();
            byte += text[byte..]
                .chars()
                .take(*chars)
                .map(|c| c.len_utf8())
                .sum::<usize>();
            pos_at(text, byte)
        }
    }
}

/// Serialization-level findings from the read, plus model-level findings
/// from assembly when the read produced a document.
fn diagnostics_for(name: &str, bytes: &[u8]) -> Vec<Diagnostic> {
    let report = parse_document(bytes, &common::profile());
    let mut diags = report.diagnostics;
    if let Some(doc) = report.value {
        let (_, assembled) = assemble(
            vec![AssemblyInput::from(doc).labeled(name)],
            vec![],
            vec![],
        );
        diags.extend(assembled.diagnostics);
    }
    diags
}

#[test]
fn every_seeded_fault_yields_exactly_its_diagnostic() {
    for c in cases() {
        let name = format!("faults/{}", c.file);
        let bytes = common::read_fixture(&name);
        let text = String::from_utf8_lossy(&bytes).into_owned();
        let expected = resolve(&text, &c.loc);

        let diags = diagnostics_for(&name, &bytes);
        assert_eq!(
            diags.len(),
            1,
            "{}: expected one diagnostic, got {:#?}",
            c.file,
            diags
        );
        let d = &diags[0];
        assert_eq!(d.code, c.code, "{}: {d:?}", c.file);
        assert_eq!(d.pos, Some(expected), "{}: {d:?}", c.file);
        assert!(
            d.message.contains(c.needle),
            "{}: message {:?} lacks {:?}",
            c.file,
            d.message,
            c.needle
        );
        if let Some(node) = c.node {
            assert_eq!(d.node.as_deref(), Some(node), "{}: {d:?}", c.file);
        }
    }
}

/// The same id declared in two otherwise clean documents: one E-ID-DUP,
/// filed against the later document and citing the earlier one.
#[test]
fn duplicate_ids_across_files_cite_both_files() {
    let parse = |name: &str| {
        let report = parse_document(&common::read_fixture(name), &common::profile());
        assert!(report.diagnostics.is_empty(), "{name}: {:#?}", report.diagnostics);
        report.value.expect("clean parse")
    };

    for name in ["faults/dup-a.xml", "faults/dup-b.xml"] {
        let doc = parse(name);
        let (_, solo) = assemble(
            vec![AssemblyInput::from(doc).labeled(name)],
            vec![],
            vec![],
        );
        assert!(solo.diagnostics.is_empty(), "{name} alone: {:#?}", solo.diagnostics);
    }

    let inputs = vec![
        AssemblyInput::from(parse("faults/dup-a.xml")).labeled("faults/dup-a.xml"),
        AssemblyInput::from(parse("faults/dup-b.xml")).labeled("faults/dup-b.xml"),
    ];
    let (_, report) = assemble(inputs, vec![], vec![]);
    assert_eq!(report.diagnostics.len(), 1, "{:#?}", report.diagnostics);
    let d = &report.diagnostics[0];
    assert_eq!(d.code, "E-ID-DUP");
    assert_eq!(d.file.as_deref(), Some("faults/dup-b.xml"));
    assert_eq!(d.node.as_deref(), Some("shared_entry"));
    assert!(
        d.message
            .contains("already declared on a entry at faults/dup-a.xml:"),
        "{}",
        d.message
    );
}

// --- API-seeded mutations for codes no document can carry ------------------

fn entry(id: &str, orth: &str, def: &str) -> LexicalEntry {
    let mut e = LexicalEntry::standard(orth);
    e.id = Some(NodeId::new(id));
    let mut sense = Sense::new();
    sense.definitions.push(TextRepresentation::definition(def));
    e.senses.push(sense);
    e
}

fn lexicon_of(entries: Vec<LexicalEntry>) -> Vec<AssemblyInput> {
    let mut lex = Lexicon::new(Some("en".to_string()));
    lex.entries = entries;
    vec![AssemblyInput::new(lex)]
}

fn two(base: &str) -> Vec<LexicalEntry> {
    vec![
        entry(&format!("{base}1"), "alpha", "first"),
        entry(&format!("{base}2"), "beta", "second"),
    ]
}

/// One seeded mutation: assemble and expect exactly one diagnostic.
fn expect_one(
    label: &str,
    code: &str,
    needle: &str,
    inputs: Vec<AssemblyInput>,
    crossrefs: Vec<CrossRef>,
    bibliographies: Vec<Bibliography>,
) {
    let (_, report) = assemble(inputs, crossrefs, bibliographies);
    assert_eq!(
        report.diagnostics.len(),
        1,
        "{label}: {:#?}",
        report.diagnostics
    );
    let d = &report.diagnostics[0];
    assert_eq!(d.code, code, "{label}: {d:?}");
    assert!(
        d.message.contains(needle),
        "{label}: message {:?} lacks {:?}",
        d.message,
        needle
    );
}

#[test]
fn api_seeded_crossref_mutations() {
    let xref = |targets: Vec<Ref>| CrossRef::new("x1", "synonymy", Ref::new("e1"), targets);

    let mut skewed = xref(vec![Ref::new("e2")]);
    skewed.targets[0].order = 2;
    expect_one(
        "non-consecutive target orders",
        "E-XREF-ORDER",
        "target orders must run 1..1 consecutively; found 2",
        lexicon_of(two("e")),
        vec![skewed],
        vec![],
    );

    expect_one(
        "source among targets",
        "E-XREF-SELF",
        "cross-reference lists its source 'e1' as a target",
        lexicon_of(two("e")),
        vec![xref(vec![Ref::new("e1")])],
        vec![],
    );

    expect_one(
        "no targets",
        "E-LINK-TARGET",
        "cross-reference has no targets",
        lexicon_of(two("e")),
        vec![xref(vec![])],
        vec![],
    );

    expect_one(
        "dangling source",
        "E-REF-DANGLING",
        "cross-reference source points to missing id 'nope'",
        lexicon_of(two("e")),
        vec![CrossRef::new("x1", "synonymy", Ref::new("nope"), vec![Ref::new("e2")])],
        vec![],
    );

    expect_one(
        "dangling target",
        "E-REF-DANGLING",
        "cross-reference target points to missing id 'nowhere'",
        lexicon_of(two("e")),
        vec![xref(vec![Ref::new("nowhere")])],
        vec![],
    );

    // Source and target in different lexicons: informational, not an error.
    let mut lex_a = Lexicon::new(Some("en".to_string()));
    lex_a.entries.push(entry("e1", "alpha", "first"));
    let mut lex_b = Lexicon::new(Some("de".to_string()));
    lex_b.entries.push(entry("e2", "beta", "second"));
    expect_one(
        "cross-lexicon reference",
        "I-XREF-LEXICON",
        "cross-reference to 'e2' spans lexicons",
        vec![AssemblyInput::new(lex_a), AssemblyInput::new(lex_b)],
        vec![xref(vec![Ref::new("e2")])],
        vec![],
    );
}

#[test]
fn api_seeded_model_mutations() {
    // A subentry may not carry an etymology; `re` has nowhere to put one.
    let mut host = entry("host", "gallows", "a frame for hanging");
    let mut sub = LexicalEntry::new(EntryKind::Related);
    sub.re_type = Some("related".to_string());
    sub.lemma = Some(Form::with_orth(FormClass::Lemma, "gallows humour"));
    sub.etymology = Some(Etymology::new("unknown"));
    host.subentries.push(sub);
    expect_one(
        "subentry with etymology",
        "E-UNSERIALIZABLE",
        "a subentry cannot carry an etymology",
        lexicon_of(vec![host]),
        vec![],
        vec![],
    );

    // A named-element feature whose name has no element in the profile.
    let mut e = entry("e1", "alpha", "first");
    e.lemma.as_mut().unwrap().grammatical_features.push(GrammaticalFeature {
        name: "aspect".to_string(),
        value: "perfective".to_string(),
        syntax: FeatureSyntax::NamedInGroup,
    });
    expect_one(
        "form feature without a named element",
        "E-UNSERIALIZABLE",
        "feature 'aspect' has no named element; use the typed gram syntax",
        lexicon_of(vec![e]),
        vec![],
        vec![],
    );

    // Sense features serialize only through gramGrp.
    let mut e = entry("e1", "alpha", "first");
    e.senses[0]
        .grammatical_features
        .push(GrammaticalFeature {
            name: "pos".to_string(),
            value: "noun".to_string(),
            syntax: FeatureSyntax::GramBare,
        });
    expect_one(
        "bare sense feature",
        "E-UNSERIALIZABLE",
        "sense features use the grouped syntax only",
        lexicon_of(vec![e]),
        vec![],
        vec![],
    );

    // A definition slot holding an example.
    let mut e = entry("e1", "alpha", "first");
    e.senses[0]
        .definitions
        .push(TextRepresentation::example("used as an example"));
    expect_one(
        "definition slot holding an example",
        "E-UNSERIALIZABLE",
        "slot holds text of a different kind",
        lexicon_of(vec![e]),
        vec![],
        vec![],
    );

    // The lemma slot must hold a lemma-classed form.
    let mut e = entry("e1", "alpha", "first");
    e.lemma = Some(Form::with_orth(FormClass::Variant, "alfa"));
    expect_one(
        "variant in the lemma slot",
        "E-LEMMA-MISSING",
        "the lemma slot holds a variant form, not a lemma",
        lexicon_of(vec![e]),
        vec![],
        vec![],
    );

    // Kind coherence, host side and subentry side.
    let mut host = entry("host", "gallows", "a frame for hanging");
    let mut sub = entry("sub", "gallows bird", "one who deserves hanging");
    sub.senses.clear();
    sub.re_type = Some("related".to_string());
    host.subentries.push(sub);
    expect_one(
        "standard entry as subentry",
        "E-ENTRY-KIND",
        "a subentry must be a related entry, not standard",
        lexicon_of(vec![host]),
        vec![],
        vec![],
    );

    let mut host = entry("host", "gallows", "a frame for hanging");
    let mut sub = LexicalEntry::new(EntryKind::Related);
    sub.re_type = Some("compound".to_string());
    sub.lemma = Some(Form::with_orth(FormClass::Lemma, "gallows pole"));
    host.subentries.push(sub);
    expect_one(
        "unknown relation",
        "E-ENTRY-KIND",
        "unknown subentry relation 'compound'",
        lexicon_of(vec![host]),
        vec![],
        vec![],
    );

    let mut host = entry("host", "gallows", "a frame for hanging");
    let mut sub = LexicalEntry::new(EntryKind::Related);
    sub.lemma = Some(Form::with_orth(FormClass::Lemma, "gallows pole"));
    host.subentries.push(sub);
    expect_one(
        "relation left unstated",
        "E-ENTRY-KIND",
        "a subentry must state its relation to the host entry",
        lexicon_of(vec![host]),
        vec![],
        vec![],
    );

    let mut top = LexicalEntry::new(EntryKind::Related);
    top.id = Some(NodeId::new("stray"));
    top.lemma = Some(Form::with_orth(FormClass::Lemma, "stray"));
    expect_one(
        "related entry at top level",
        "E-ENTRY-KIND",
        "related entries exist only as subentries",
        lexicon_of(vec![top]),
        vec![],
        vec![],
    );

    let mut e = entry("e1", "alpha", "first");
    e.re_type = Some("related".to_string());
    expect_one(
        "host relation on a top-level entry",
        "E-ENTRY-KIND",
        "only subentries carry a host relation",
        lexicon_of(vec![e]),
        vec![],
        vec![],
    );

    expect_one(
        "empty bibliography citation",
        "E-EMPTY-TEXT",
        "empty bibliography citation",
        lexicon_of(two("e")),
        vec![],
        vec![Bibliography::new("bib_blank", "")],
    );
}
