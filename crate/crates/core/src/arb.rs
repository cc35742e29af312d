//! Seeded generators for valid model values.
//!
//! The proptest strategies wrap deterministic builders keyed by a single
//! seed, so a failing case replays exactly from its shrunk seed. Builders
//! guarantee every invariant the validator checks: unique NCName ids,
//! resolvable references of the right kind, consecutive orders, senses with
//! content, languages on etymon and cognate entries, monotonic link dates.
//! A generated document therefore serializes without refusal, re-reads to
//! an equal model, and assembles with an empty report.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use proptest::prelude::*;

use crate::etymology::{EtyDate, EtyLink, EtyTargetKind, Etymology};
use crate::id::{NodeId, Ref};
use crate::model::{
    Bibliography, EntryKind, LexicalEntry, Lexicon, Sense, TextRepresentation,
};
use crate::mrd::{
    FeatureSyntax, Form, FormClass, FormRepresentation, GrammaticalFeature, MweSegment, Usage,
};
use crate::tei::ParsedDocument;

/// A document with at least `entries` standard entries (etymon and cognate
/// entries come on top). Sizes stay small; coverage comes from case count.
pub fn arb_document() -> impl Strategy<Value = ParsedDocument> {
    (any::<u64>(), 2usize..7).prop_map(|(seed, entries)| document_from_seed(seed, entries))
}

/// A self-contained standard entry: forms, senses, features, subentries,
/// and entry-level bibliography records, but no references that would leave
/// the fragment.
pub fn arb_entry() -> impl Strategy<Value = LexicalEntry> {
    any::<u64>().prop_map(entry_from_seed)
}

pub fn document_from_seed(seed: u64, standard_entries: usize) -> ParsedDocument {
    Builder::new(seed).document(standard_entries)
}

pub fn entry_from_seed(seed: u64) -> LexicalEntry {
    let mut b = Builder::new(seed);
    let bibs: Vec<String> = Vec::new();
    let mut entry = b.standard_entry(&bibs);
    if b.g.chance(30) {
        let id = b.ids.fresh("bib");
        let mut bib = Bibliography::new(id.as_str(), b.citation());
        if let Some(host) = &entry.id {
            bib.attached_to.push(Ref::new(host.as_str()));
        }
        entry.bibliographies.push(bib);
    }
    entry
}

/// xorshift64*; deterministic and cheap.
struct Gen(u64);

impl Gen {
    fn new(seed: u64) -> Self {
        Gen(seed | 1)
    }

    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform in `0..n`; `n` must be positive.
    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    fn chance(&mut self, pct: usize) -> bool {
        self.below(100) < pct
    }

    fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        &xs[self.below(xs.len())]
    }
}

/// Document-wide id allocator: uniqueness by numbering, shape by prefix.
struct Ids {
    next: u32,
}

impl Ids {
    fn fresh(&mut self, prefix: &str) -> String {
        self.next += 1;
        format!("{prefix}{}", self.next)
    }
}

const STEMS: [&str; 24] = [
    "harrow", "quern", "sickle", "byre", "croft", "garth", "thole", "withy", "skep", "flail",
    "mattock", "coulter", "swath", "rick", "stook", "haft", "adze", "froe", "weir", "sluice",
    "leat", "kiln", "œillet", "κέντρον",
];
const PRONS: [&str; 6] = ["ˈhæroʊ", "kwɜːn", "ˈsɪkəl", "baɪə", "ɡɑːθ", "ˈmætək"];
const LANGS: [&str; 10] = ["en", "fr", "la", "grc", "ang", "non", "goh", "enm", "fro", "de"];
const DISPLAY_LANGS: [&str; 6] = [
    "French", "Latin", "Greek", "Old English", "Old Norse", "Middle English",
];
const USAGES: [(&str, &str); 6] = [
    ("geo", "U.S"),
    ("geo", "U.K"),
    ("dom", "farming"),
    ("dom", "milling"),
    ("reg", "archaic"),
    ("reg", "dialect"),
];
const PROCESSES: [&str; 5] = ["inheritance", "borrowing", "metaphor", "compounding", "unknown"];
const POS_VALUES: [&str; 4] = ["noun", "verb", "adjective", "adverb"];
const NUMBER_VALUES: [&str; 2] = ["singular", "plural"];
const GRAM_PAIRS: [(&str, &str); 4] = [
    ("gender", "neuter"),
    ("case", "dative"),
    ("aspect", "perfective"),
    ("mood", "subjunctive"),
];
const GLOSSES: [&str; 6] = [
    "a hand tool",
    "an enclosure",
    "a water channel",
    "point, spike",
    "a drying frame",
    "a woven basket",
];
const DEF_HEADS: [&str; 5] = [
    "a frame of",
    "an implement for",
    "a channel carrying",
    "the stacked part of",
    "a yard beside",
];
const DEF_TAILS: [&str; 5] = [
    "cut reeds",
    "the threshing floor",
    "water to the wheel",
    "a harvested field",
    "the cattle shed",
];
const RELATIVE_DATES: [&str; 3] = ["before the conquest", "early borrowings", "uncertain"];

struct Builder {
    g: Gen,
    ids: Ids,
}

impl Builder {
    fn new(seed: u64) -> Self {
        Builder {
            g: Gen::new(seed),
            ids: Ids { next: 0 },
        }
    }

    // --- vocabulary -----------------------------------------------------

    fn word(&mut self) -> String {
        self.g.pick(&STEMS).to_string()
    }

    fn definition_text(&mut self) -> String {
        format!("{} {}", self.g.pick(&DEF_HEADS), self.g.pick(&DEF_TAILS))
    }

    fn example_text(&mut self) -> String {
        format!("the {} stood by the {}", self.word(), self.word())
    }

    fn citation(&mut self) -> String {
        format!("Field Names {}, {}", self.g.below(90) + 10, 1880 + self.g.below(60))
    }

    fn usage(&mut self) -> Usage {
        let (t, v) = *self.g.pick(&USAGES);
        Usage::new(t, v)
    }

    fn language(&mut self) -> String {
        self.g.pick(&LANGS).to_string()
    }

    // --- forms ------------------------------------------------------------

    fn representation(&mut self) -> FormRepresentation {
        let mut rep = FormRepresentation::new(self.word());
        if self.g.chance(50) {
            rep.pronunciation = Some(self.g.pick(&PRONS).to_string());
        }
        if self.g.chance(20) {
            rep.language = Some(self.language());
        }
        if self.g.chance(25) {
            rep.usages.push(self.usage());
        }
        rep
    }

    fn feature(&mut self, allow_bare: bool) -> GrammaticalFeature {
        match self.g.below(if allow_bare { 3 } else { 2 }) {
            0 => {
                if self.g.chance(50) {
                    GrammaticalFeature {
                        name: "pos".into(),
                        value: self.g.pick(&POS_VALUES).to_string(),
                        syntax: FeatureSyntax::NamedInGroup,
                    }
                } else {
                    GrammaticalFeature {
                        name: "number".into(),
                        value: self.g.pick(&NUMBER_VALUES).to_string(),
                        syntax: FeatureSyntax::NamedInGroup,
                    }
                }
            }
            1 => {
                let (name, value) = *self.g.pick(&GRAM_PAIRS);
                GrammaticalFeature {
                    name: name.into(),
                    value: value.into(),
                    syntax: FeatureSyntax::GramInGroup,
                }
            }
            _ => {
                let (name, value) = *self.g.pick(&GRAM_PAIRS);
                GrammaticalFeature::bare(name, value)
            }
        }
    }

    /// A non-lemma form. `force_id` is set when the form must be a segment
    /// target.
    fn plain_form(&mut self, force_id: bool) -> Form {
        let classes = [
            FormClass::Variant,
            FormClass::Inflected,
            FormClass::WordForm,
            FormClass::Stem,
            FormClass::WordPart,
            FormClass::RelatedForm,
        ];
        let mut form = Form::new(*self.g.pick(&classes));
        if force_id || self.g.chance(60) {
            form.id = Some(NodeId::new(self.ids.fresh("f")));
        }
        form.representations.push(self.representation());
        if self.g.chance(20) {
            form.representations.push(self.representation());
        }
        if self.g.chance(25) {
            form.usages.push(self.usage());
        }
        for _ in 0..self.g.below(3) {
            let feature = self.feature(true);
            form.grammatical_features.push(feature);
        }
        form
    }

    /// A lemma form, optionally nesting variant forms the way print
    /// dictionaries fold regional spellings under the headword.
    fn lemma(&mut self, force_id: bool) -> Form {
        let mut lemma = Form::new(FormClass::Lemma);
        if force_id || self.g.chance(50) {
            lemma.id = Some(NodeId::new(self.ids.fresh("f")));
        }
        lemma.representations.push(self.representation());
        if self.g.chance(30) {
            lemma.usages.push(self.usage());
        }
        for _ in 0..self.g.below(3) {
            let feature = self.feature(true);
            lemma.grammatical_features.push(feature);
        }
        for _ in 0..self.g.below(3) {
            let mut nested = self.plain_form(false);
            nested.class = if self.g.chance(60) {
                FormClass::Variant
            } else {
                FormClass::Inflected
            };
            nested.nested_forms.clear();
            lemma.nested_forms.push(nested);
        }
        lemma
    }

    // --- senses -----------------------------------------------------------

    fn definition(&mut self, bibs: &[String]) -> TextRepresentation {
        let mut text = TextRepresentation::definition(self.definition_text());
        if self.g.chance(15) {
            text.language = Some(self.language());
        }
        if !bibs.is_empty() && self.g.chance(25) {
            text.bibliography_refs
                .push(Ref::new(self.g.pick(bibs).as_str()));
        }
        text
    }

    fn sense(&mut self, depth: usize, bibs: &[String]) -> Sense {
        let mut sense = Sense::new();
        if self.g.chance(60) {
            sense.id = Some(NodeId::new(self.ids.fresh("s")));
        }
        if self.g.chance(30) {
            let feature = self.feature(false);
            sense.grammatical_features.push(feature);
        }
        for _ in 0..1 + self.g.below(2) {
            let def = self.definition(bibs);
            sense.definitions.push(def);
        }
        if self.g.chance(40) {
            let mut example = TextRepresentation::example(self.example_text());
            if self.g.chance(15) {
                example.language = Some(self.language());
            }
            if !bibs.is_empty() && self.g.chance(20) {
                example
                    .bibliography_refs
                    .push(Ref::new(self.g.pick(bibs).as_str()));
            }
            sense.examples.push(example);
        }
        if depth > 0 && self.g.chance(25) {
            let sub = self.sense(depth - 1, bibs);
            sense.subsenses.push(sub);
        }
        sense
    }

    // --- entries ----------------------------------------------------------

    /// A standard entry without etymology (the document builder adds one so
    /// it can also create the target entries).
    fn standard_entry(&mut self, bibs: &[String]) -> LexicalEntry {
        let mut entry = LexicalEntry::new(EntryKind::Standard);
        entry.id = Some(NodeId::new(self.ids.fresh("e")));
        if self.g.chance(15) {
            entry.language = Some(self.language());
        }
        let want_mwe = self.g.chance(30);
        entry.lemma = Some(self.lemma(want_mwe));
        for _ in 0..self.g.below(3) {
            let form = self.plain_form(want_mwe);
            entry.forms.push(form);
        }
        for _ in 0..1 + self.g.below(2) {
            let sense = self.sense(1, bibs);
            entry.senses.push(sense);
        }
        if want_mwe {
            let sub = self.mwe_subentry(&entry);
            entry.subentries.push(sub);
        }
        if self.g.chance(15) {
            let sub = self.related_subentry();
            entry.subentries.push(sub);
        }
        entry
    }

    /// A multiword expression over the host's forms: the subentry lemma
    /// carries the component segments.
    fn mwe_subentry(&mut self, host: &LexicalEntry) -> LexicalEntry {
        let mut targets: Vec<String> = Vec::new();
        if let Some(lemma) = &host.lemma {
            if let Some(id) = &lemma.id {
                targets.push(id.as_str().to_string());
            }
        }
        for form in &host.forms {
            if let Some(id) = &form.id {
                targets.push(id.as_str().to_string());
            }
        }

        let mut sub = LexicalEntry::new(EntryKind::Related);
        sub.re_type = Some("multiWordExpression".into());
        if self.g.chance(60) {
            sub.id = Some(NodeId::new(self.ids.fresh("re")));
        }
        let mut lemma = Form::new(FormClass::Lemma);
        let surfaces: Vec<String> = (0..targets.len()).map(|_| self.word()).collect();
        if self.g.chance(60) {
            lemma
                .representations
                .push(FormRepresentation::new(surfaces.join(" ")));
        }
        for (i, target) in targets.iter().enumerate() {
            lemma.segments.push(MweSegment::new(
                Ref::new(target.as_str()),
                i as u32 + 1,
                surfaces[i].as_str(),
            ));
        }
        sub.lemma = Some(lemma);
        sub
    }

    fn related_subentry(&mut self) -> LexicalEntry {
        let mut sub = LexicalEntry::new(EntryKind::Related);
        sub.re_type = Some("related".into());
        if self.g.chance(50) {
            sub.id = Some(NodeId::new(self.ids.fresh("re")));
        }
        sub.lemma = Some(Form::with_orth(FormClass::Lemma, self.word()));
        if self.g.chance(30) {
            let form = self.plain_form(false);
            sub.forms.push(form);
        }
        sub
    }

    /// An etymon or cognate entry: language always present, usually with a
    /// gloss, never with senses.
    fn stage_entry(&mut self, kind: EntryKind) -> LexicalEntry {
        let mut entry = LexicalEntry::new(kind);
        entry.id = Some(NodeId::new(self.ids.fresh("ety")));
        entry.language = Some(self.language());
        if self.g.chance(30) {
            entry.display_lang = Some(self.g.pick(&DISPLAY_LANGS).to_string());
        }
        entry.lemma = Some(Form::with_orth(FormClass::Lemma, self.word()));
        if self.g.chance(60) {
            entry.gloss = Some(TextRepresentation::gloss(
                self.g.pick(&GLOSSES).to_string(),
            ));
        }
        entry
    }

    // --- etymology ----------------------------------------------------------

    fn date(&mut self, year: i32) -> EtyDate {
        match self.g.below(3) {
            0 => {
                let text = if self.g.chance(50) {
                    format!("{year}")
                } else {
                    format!("c. {year}")
                };
                EtyDate::point(year, text)
            }
            1 => {
                let start = year - (self.g.below(60) as i32);
                EtyDate::range(start, year, format!("{start} to {year}"))
            }
            _ => EtyDate::relative(self.g.pick(&RELATIVE_DATES).to_string()),
        }
    }

    /// One etymology container: links first, then possibly a nested
    /// sub-etymology. Every link targets a freshly created stage entry,
    /// pushed to `stages`; the first etymon stage may recurse with its own
    /// etymology while depth remains.
    fn etymology(
        &mut self,
        depth: usize,
        host_id: &str,
        stages: &mut Vec<LexicalEntry>,
        bibs: &[String],
    ) -> Etymology {
        let mut ety = Etymology::new(*self.g.pick(&PROCESSES));
        if self.g.chance(20) {
            ety.id = Some(NodeId::new(self.ids.fresh("ety")));
        }
        if !bibs.is_empty() && self.g.chance(20) {
            ety.bibliography_refs
                .push(Ref::new(self.g.pick(bibs).as_str()));
        }

        let mut year = 1500 - self.g.below(200) as i32;
        let mut prev_stage: Option<String> = None;
        let mut first_etymon: Option<usize> = None;
        for order in 1..=1 + self.g.below(3) as u32 {
            let etymon = self.g.chance(70);
            let kind = if etymon {
                EntryKind::Etymon
            } else {
                EntryKind::Cognate
            };
            let stage = self.stage_entry(kind);
            let stage_id = stage.id.as_ref().expect("stage entries carry ids").as_str().to_string();
            let mut link = EtyLink::new(
                if etymon {
                    EtyTargetKind::Etymon
                } else {
                    EtyTargetKind::Cognate
                },
                *self.g.pick(&PROCESSES),
                order,
                stage_id.as_str(),
            );
            if self.g.chance(20) {
                link.id = Some(NodeId::new(self.ids.fresh("ln")));
            }
            if self.g.chance(20) {
                let source = prev_stage.as_deref().unwrap_or(host_id);
                link.source_aspects.push(Ref::new(source));
            }
            if self.g.chance(50) {
                year -= (50 + self.g.below(200)) as i32;
                let date = self.date(year);
                // Later links are older stages; track the representative
                // year so a range's start cannot postdate the next link.
                if let Some(rep) = date.representative_year() {
                    year = rep;
                }
                link.date = Some(date);
            }
            if self.g.chance(40) {
                link.display_lang = Some(self.g.pick(&DISPLAY_LANGS).to_string());
                link.display_orth = Some(self.word());
            }
            if self.g.chance(25) {
                link.display_gloss = Some(self.g.pick(&GLOSSES).to_string());
            }
            if etymon {
                if first_etymon.is_none() {
                    first_etymon = Some(stages.len());
                }
                prev_stage = Some(stage_id);
            }
            stages.push(stage);
            ety.links.push(link);
        }

        // Recursive etymology: the first stage derives further.
        if depth > 1 && self.g.chance(35) {
            if let Some(i) = first_etymon {
                let stage_id = stages[i]
                    .id
                    .as_ref()
                    .expect("stage entries carry ids")
                    .as_str()
                    .to_string();
                let deeper = self.etymology(depth - 1, &stage_id, stages, bibs);
                stages[i].etymology = Some(deeper);
            }
        }
        // Branch point: a nested container with its own links.
        if depth > 1 && self.g.chance(30) {
            let sub = self.etymology(depth - 1, host_id, stages, bibs);
            ety.sub_etymologies.push(sub);
        }
        ety
    }

    // --- document ----------------------------------------------------------

    fn document(&mut self, standard_entries: usize) -> ParsedDocument {
        let mut bib_ids: Vec<String> = Vec::new();
        let mut bibliographies: Vec<Bibliography> = Vec::new();
        for _ in 0..self.g.below(3) {
            let id = self.ids.fresh("bib");
            bibliographies.push(Bibliography::new(id.as_str(), self.citation()));
            bib_ids.push(id);
        }

        let mut entries: Vec<LexicalEntry> = Vec::new();
        for _ in 0..standard_entries {
            let mut entry = self.standard_entry(&bib_ids);
            if self.g.chance(40) {
                let host_id = entry
                    .id
                    .as_ref()
                    .expect("standard entries carry ids")
                    .as_str()
                    .to_string();
                let mut stages = Vec::new();
                let ety = self.etymology(3, &host_id, &mut stages, &bib_ids);
                entry.etymology = Some(ety);
                entries.push(entry);
                entries.extend(stages);
            } else {
                entries.push(entry);
            }
        }

        // Attach some records to entries now that ids exist.
        for bib in &mut bibliographies {
            if !entries.is_empty() && self.g.chance(50) {
                let target = entries[self.g.below(entries.len())]
                    .id
                    .as_ref()
                    .expect("generated entries carry ids")
                    .as_str()
                    .to_string();
                bib.attached_to.push(Ref::new(target.as_str()));
            }
        }

        let mut lexicon = Lexicon::new(Some(self.language()));
        lexicon.entries = entries;
        ParsedDocument {
            lexicon,
            bibliographies,
        }
    }
}
