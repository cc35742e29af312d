//! Document-order traversal of a resource.
//!
//! The walk visits every node that can carry an id, in the order the
//! canonical serialization writes them: per entry, the entry itself, the
//! lemma and its nested forms, further forms, senses (subsenses after
//! their parent), the etymology (links, then sub-etymologies), subentries,
//! entry bibliography; per resource, lexicons, then cross-references, then
//! resource bibliography. Entry ordinals count entries in this order.

use alloc::vec::Vec;

use super::{LexicalEntry, LexicalResource, Node, Sense};
use crate::etymology::Etymology;
use crate::mrd::Form;

/// One step of a node path. Paths survive only as long as the resource
/// they index is structurally unchanged; `reindex` rebuilds them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    Lexicon(u32),
    Entry(u32),
    Subentry(u32),
    Lemma,
    Form(u32),
    NestedForm(u32),
    Sense(u32),
    Subsense(u32),
    Etymology,
    SubEtymology(u32),
    Link(u32),
    CrossRef(u32),
    Bibliography(u32),
    EntryBibliography(u32),
}

pub(crate) struct WalkItem<'a> {
    pub node: Node<'a>,
    pub path: Vec<Step>,
    pub entry_ordinal: Option<u32>,
    pub lexicon: Option<u32>,
}

struct Walker<'a> {
    items: Vec<WalkItem<'a>>,
    next_entry_ordinal: u32,
    lexicon: Option<u32>,
}

impl<'a> Walker<'a> {
    fn push(&mut self, node: Node<'a>, path: &[Step], entry_ordinal: Option<u32>) {
        self.items.push(WalkItem {
            node,
            path: path.to_vec(),
            entry_ordinal,
            lexicon: self.lexicon,
        });
    }

    fn entry(&mut self, entry: &'a LexicalEntry, path: &mut Vec<Step>) {
        let ordinal = self.next_entry_ordinal;
        self.next_entry_ordinal += 1;
        self.push(Node::Entry(entry), path, Some(ordinal));

        if let Some(lemma) = &entry.lemma {
            path.push(Step::Lemma);
            self.form(lemma, path, ordinal);
            path.pop();
        }
        for (i, form) in entry.forms.iter().enumerate() {
            path.push(Step::Form(i as u32));
            self.form(form, path, ordinal);
            path.pop();
        }
        for (i, sense) in entry.senses.iter().enumerate() {
            path.push(Step::Sense(i as u32));
            self.sense(sense, path, ordinal);
            path.pop();
        }
        if let Some(ety) = &entry.etymology {
            path.push(Step::Etymology);
            self.etymology(ety, path, ordinal);
            path.pop();
        }
        for (i, sub) in entry.subentries.iter().enumerate() {
            path.push(Step::Subentry(i as u32));
            self.entry(sub, path);
            path.pop();
        }
        for (i, bib) in entry.bibliographies.iter().enumerate() {
            path.push(Step::EntryBibliography(i as u32));
            self.push(Node::Bibliography(bib), path, Some(ordinal));
            path.pop();
        }
    }

    fn form(&mut self, form: &'a Form, path: &mut Vec<Step>, ordinal: u32) {
        self.push(Node::Form(form), path, Some(ordinal));
        for (i, nested) in form.nested_forms.iter().enumerate() {
            path.push(Step::NestedForm(i as u32));
            self.form(nested, path, ordinal);
            path.pop();
        }
    }

    fn sense(&mut self, sense: &'a Sense, path: &mut Vec<Step>, ordinal: u32) {
        self.push(Node::Sense(sense), path, Some(ordinal));
        for (i, sub) in sense.subsenses.iter().enumerate() {
            path.push(Step::Subsense(i as u32));
            self.sense(sub, path, ordinal);
            path.pop();
        }
    }

    fn etymology(&mut self, ety: &'a Etymology, path: &mut Vec<Step>, ordinal: u32) {
        self.push(Node::Etymology(ety), path, Some(ordinal));
        for (i, link) in ety.links.iter().enumerate() {
            path.push(Step::Link(i as u32));
            self.push(Node::Link(link), path, Some(ordinal));
            path.pop();
        }
        for (i, sub) in ety.sub_etymologies.iter().enumerate() {
            path.push(Step::SubEtymology(i as u32));
            self.etymology(sub, path, ordinal);
            path.pop();
        }
    }
}

/// Walk a free-standing entry (no resource context): the entry and every
/// id-bearing node under it, in document order.
pub(crate) fn entry_items(entry: &LexicalEntry) -> Vec<WalkItem<'_>> {
    let mut walker = Walker {
        items: Vec::new(),
        next_entry_ordinal: 0,
        lexicon: None,
    };
    let mut path: Vec<Step> = Vec::new();
    walker.entry(entry, &mut path);
    walker.items
}

impl LexicalResource {
    pub(crate) fn walk_items(&self) -> Vec<WalkItem<'_>> {
        let mut walker = Walker {
            items: Vec::new(),
            next_entry_ordinal: 0,
            lexicon: None,
        };
        let mut path: Vec<Step> = Vec::new();
        for (l, lexicon) in self.lexicons().iter().enumerate() {
            walker.lexicon = Some(l as u32);
            path.push(Step::Lexicon(l as u32));
            for (e, entry) in lexicon.entries.iter().enumerate() {
                path.push(Step::Entry(e as u32));
                walker.entry(entry, &mut path);
                path.pop();
            }
            path.pop();
        }
        walker.lexicon = None;
        for (i, xref) in self.crossrefs().iter().enumerate() {
            walker.push(Node::CrossRef(xref), &[Step::CrossRef(i as u32)], None);
        }
        for (i, bib) in self.bibliographies().iter().enumerate() {
            walker.push(Node::Bibliography(bib), &[Step::Bibliography(i as u32)], None);
        }
        walker.items
    }

    /// Resolve a walk path. Paths come from the index, so steps are in
    /// bounds by construction.
    pub(crate) fn node_at(&self, path: &[Step]) -> Node<'_> {
        enum Cursor<'a> {
            Top,
            Entry(&'a LexicalEntry),
            Form(&'a Form),
            Sense(&'a Sense),
            Etymology(&'a Etymology),
            Done(Node<'a>),
        }

        let mut cursor = Cursor::Top;
        let mut lexicon: Option<&super::Lexicon> = None;
        for step in path {
            cursor = match (cursor, *step) {
                (Cursor::Top, Step::Lexicon(l)) => {
                    lexicon = Some(&self.lexicons()[l as usize]);
                    Cursor::Top
                }
                (Cursor::Top, Step::Entry(e)) => {
                    Cursor::Entry(&lexicon.expect("lexicon step precedes entry").entries[e as usize])
                }
                (Cursor::Top, Step::CrossRef(i)) => {
                    Cursor::Done(Node::CrossRef(&self.crossrefs()[i as usize]))
                }
                (Cursor::Top, Step::Bibliography(i)) => {
                    Cursor::Done(Node::Bibliography(&self.bibliographies()[i as usize]))
                }
                (Cursor::Entry(entry), Step::Subentry(i)) => {
                    Cursor::Entry(&entry.subentries[i as usize])
                }
                (Cursor::Entry(entry), Step::Lemma) => {
                    Cursor::Form(entry.lemma.as_ref().expect("lemma step requires a lemma"))
                }
                (Cursor::Entry(entry), Step::Form(i)) => Cursor::Form(&entry.forms[i as usize]),
                (Cursor::Entry(entry), Step::Sense(i)) => Cursor::Sense(&entry.senses[i as usize]),
                (Cursor::Entry(entry), Step::Etymology) => {
                    Cursor::Etymology(entry.etymology.as_ref().expect("etymology step"))
                }
                (Cursor::Entry(entry), Step::EntryBibliography(i)) => {
                    Cursor::Done(Node::Bibliography(&entry.bibliographies[i as usize]))
                }
                (Cursor::Form(form), Step::NestedForm(i)) => {
                    Cursor::Form(&form.nested_forms[i as usize])
                }
                (Cursor::Sense(sense), Step::Subsense(i)) => {
                    Cursor::Sense(&sense.subsenses[i as usize])
                }
                (Cursor::Etymology(ety), Step::SubEtymology(i)) => {
                    Cursor::Etymology(&ety.sub_etymologies[i as usize])
                }
                (Cursor::Etymology(ety), Step::Link(i)) => {
                    Cursor::Done(Node::Link(&ety.links[i as usize]))
                }
                _ => unreachable!("inconsistent walk path"),
            };
        }
        match cursor {
            Cursor::Entry(e) => Node::Entry(e),
            Cursor::Form(f) => Node::Form(f),
            Cursor::Sense(s) => Node::Sense(s),
            Cursor::Etymology(e) => Node::Etymology(e),
            Cursor::Done(n) => n,
            Cursor::Top => unreachable!("empty walk path"),
        }
    }
}
