//! Etymology: typed, dated links between lexical entries.
//!
//! An [`Etymology`] hangs off a lexical entry and holds [`EtyLink`]s, each
//! connecting source aspects (the derived side) to target aspects (the
//! earlier historical stage: an etymon or cognate entry, or a form or sense
//! of one). Links are ordered; order 1 is the most recent derivation step.
//! Branch points nest as sub-etymologies.
//!
//! Link sources may be left empty, meaning "the previous stage": the target
//! of the nearest preceding etymon link in the same etymology, or the host
//! entry when there is none. This mirrors how dictionary etymologies chain
//! (`F. centre, fr. L. centrum, fr. Gk. κέντρον`) without repeating every
//! stage.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::diag::{Diagnostic, Pos};
use crate::id::{NodeId, Ref};
use crate::model::{eq_fields, LexicalEntry, LexicalResource, Node, OpError};

/// Whether a link reaches an etymon (a chain stage) or a cognate (a
/// parallel descendant). Authored, and checked against the kind of the
/// resolved target entry during validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EtyTargetKind {
    Etymon,
    Cognate,
}

impl EtyTargetKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EtyTargetKind::Etymon => "etymon",
            EtyTargetKind::Cognate => "cognate",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DateKind {
    Point,
    Range,
    Relative,
}

/// A date on an etymological link. Point and range dates carry numeric
/// years (negative = BCE); relative dates ("before the borrowing of X")
/// keep only their text and stay out of temporal checks.
#[derive(Debug, Clone)]
pub struct EtyDate {
    pub kind: DateKind,
    /// Display text, always present.
    pub text: String,
    pub year_start: Option<i32>,
    pub year_end: Option<i32>,
    pub pos: Option<Pos>,
}

eq_fields!(EtyDate: kind, text, year_start, year_end);

impl EtyDate {
    pub fn point(year: i32, text: impl Into<String>) -> Self {
        EtyDate {
            kind: DateKind::Point,
            text: text.into(),
            year_start: Some(year),
            year_end: Some(year),
            pos: None,
        }
    }

    pub fn range(start: i32, end: i32, text: impl Into<String>) -> Self {
        EtyDate {
            kind: DateKind::Range,
            text: text.into(),
            year_start: Some(start),
            year_end: Some(end),
            pos: None,
        }
    }

    pub fn relative(text: impl Into<String>) -> Self {
        EtyDate {
            kind: DateKind::Relative,
            text: text.into(),
            year_start: None,
            year_end: None,
            pos: None,
        }
    }

    /// Year used for monotonicity checks; `None` opts the date out.
    pub fn representative_year(&self) -> Option<i32> {
        self.year_start.or(self.year_end)
    }
}

#[derive(Debug, Clone)]
pub struct EtyLink {
    pub id: Option<NodeId>,
    /// Process vocabulary: inheritance, borrowing, metaphor, compounding,
    /// … Open set; "unknown" is the explicit default, never the empty
    /// string.
    pub link_type: String,
    pub target_kind: EtyTargetKind,
    /// The derived side. Empty means the implicit previous stage.
    pub source_aspects: Vec<Ref>,
    /// The earlier stage: entries, or forms/senses of entries. Non-empty.
    pub target_aspects: Vec<Ref>,
    /// 1-based position in the host etymology, consecutive.
    pub order: u32,
    pub date: Option<EtyDate>,
    /// Display copies for rendering without resolving the target: the
    /// source dictionary's language label, orthography, and gloss.
    pub display_lang: Option<String>,
    pub display_orth: Option<String>,
    pub display_gloss: Option<String>,
    pub pos: Option<Pos>,
}

eq_fields!(EtyLink: id, link_type, target_kind, source_aspects, target_aspects, order, date,
    display_lang, display_orth, display_gloss);

impl EtyLink {
    pub fn new(
        target_kind: EtyTargetKind,
        link_type: impl Into<String>,
        order: u32,
        target: impl Into<Ref>,
    ) -> Self {
        EtyLink {
            id: None,
            link_type: link_type.into(),
            target_kind,
            source_aspects: Vec::new(),
            target_aspects: vec![target.into()],
            order,
            date: None,
            display_lang: None,
            display_orth: None,
            display_gloss: None,
            pos: None,
        }
    }

    pub fn to_etymon(link_type: impl Into<String>, order: u32, target: impl Into<Ref>) -> Self {
        Self::new(EtyTargetKind::Etymon, link_type, order, target)
    }

    pub fn to_cognate(link_type: impl Into<String>, order: u32, target: impl Into<Ref>) -> Self {
        Self::new(EtyTargetKind::Cognate, link_type, order, target)
    }
}

#[derive(Debug, Clone)]
pub struct Etymology {
    pub id: Option<NodeId>,
    /// Overall process type; "unknown" is the explicit default.
    pub ety_type: String,
    pub bibliography_refs: Vec<Ref>,
    pub links: Vec<EtyLink>,
    pub sub_etymologies: Vec<Etymology>,
    pub pos: Option<Pos>,
}

eq_fields!(Etymology: id, ety_type, bibliography_refs, links, sub_etymologies);

impl Etymology {
    pub fn new(ety_type: impl Into<String>) -> Self {
        Etymology {
            id: None,
            ety_type: ety_type.into(),
            bibliography_refs: Vec::new(),
            links: Vec::new(),
            sub_etymologies: Vec::new(),
            pos: None,
        }
    }

    /// All links of this etymology and its sub-etymologies, document order.
    pub fn flat_links(&self) -> Vec<&EtyLink> {
        let mut out: Vec<&EtyLink> = self.links.iter().collect();
        for sub in &self.sub_etymologies {
            out.extend(sub.flat_links());
        }
        out
    }
}

/// One chain step: the link taken and the entry it reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep<'a> {
    pub link: &'a EtyLink,
    pub entry: &'a LexicalEntry,
}

/// Owning-entry ordinals of a link's effective sources. An authored empty
/// source list resolves to the target of the nearest preceding etymon link
/// in flattened order, or to the host entry.
fn effective_source_ordinals(
    resource: &LexicalResource,
    host: u32,
    flat: &[&EtyLink],
    i: usize,
) -> Vec<u32> {
    let link = flat[i];
    if !link.source_aspects.is_empty() {
        return link
            .source_aspects
            .iter()
            .filter_map(|r| resource.owning_entry_ordinal(r.target.as_str()))
            .collect();
    }
    for prev in flat[..i].iter().rev() {
        if prev.target_kind == EtyTargetKind::Etymon {
            if let Some(first) = prev.target_aspects.first() {
                if let Some(ord) = resource.owning_entry_ordinal(first.target.as_str()) {
                    return vec![ord];
                }
            }
            return Vec::new();
        }
    }
    vec![host]
}

fn host_entry<'a>(
    resource: &'a LexicalResource,
    entry_id: &str,
) -> Result<(&'a LexicalEntry, u32), OpError> {
    match resource.node(entry_id) {
        None => Err(OpError::UnknownId(entry_id.into())),
        Some(Node::Entry(e)) => Ok((
            e,
            resource
                .owning_entry_ordinal(entry_id)
                .expect("indexed entry has an ordinal"),
        )),
        Some(other) => Err(OpError::WrongKind {
            id: entry_id.into(),
            expected: "entry",
            actual: other.kind_name(),
        }),
    }
}

/// The etymological chain of an entry: the sequence of etymon stages
/// reachable through its own etymology, most recent first.
///
/// The walk repeatedly takes the first unused link (document order, links
/// before sub-etymologies) whose effective sources include an
/// already-reached stage. Etymon links extend the chain; cognate links are
/// consumed without extending it. The walk fails on a dangling target and
/// on a chain that revisits a stage.
pub fn ety_chain<'a>(
    resource: &'a LexicalResource,
    entry_id: &str,
) -> Result<Vec<ChainStep<'a>>, OpError> {
    let (entry, host) = host_entry(resource, entry_id)?;
    let ety = entry
        .etymology
        .as_ref()
        .ok_or_else(|| OpError::NoEtymology(entry_id.into()))?;
    let flat = ety.flat_links();

    let mut chain = Vec::new();
    let mut reached = vec![host];
    let mut used = vec![false; flat.len()];

    loop {
        let mut advanced = false;
        for i in 0..flat.len() {
            if used[i] {
                continue;
            }
            let sources = effective_source_ordinals(resource, host, &flat, i);
            if !sources.iter().any(|s| reached.contains(s)) {
                continue;
            }
            used[i] = true;
            advanced = true;
            // Cognate links and (invalid) targetless links are consumed
            // without extending the chain.
            if flat[i].target_kind == EtyTargetKind::Etymon {
                if let Some(target) = flat[i].target_aspects.first() {
                    let id = target.target.as_str();
                    let ord = resource
                        .owning_entry_ordinal(id)
                        .ok_or_else(|| OpError::DanglingReference(id.into()))?;
                    if reached.contains(&ord) {
                        return Err(OpError::CyclicEtymology(entry_id.into()));
                    }
                    reached.push(ord);
                    chain.push(ChainStep {
                        link: flat[i],
                        entry: resource.entry_by_ordinal(ord),
                    });
                }
            }
            break;
        }
        if !advanced {
            return Ok(chain);
        }
    }
}

/// All cognate entries reachable from the entry's own etymology links,
/// deduplicated, document order of the links.
pub fn cognates_of<'a>(
    resource: &'a LexicalResource,
    entry_id: &str,
) -> Result<Vec<&'a LexicalEntry>, OpError> {
    let (entry, _) = host_entry(resource, entry_id)?;
    let ety = entry
        .etymology
        .as_ref()
        .ok_or_else(|| OpError::NoEtymology(entry_id.into()))?;

    let mut seen = Vec::new();
    let mut out = Vec::new();
    for link in ety.flat_links() {
        if link.target_kind != EtyTargetKind::Cognate {
            continue;
        }
        for target in &link.target_aspects {
            let id = target.target.as_str();
            let ord = resource
                .owning_entry_ordinal(id)
                .ok_or_else(|| OpError::DanglingReference(id.into()))?;
            if !seen.contains(&ord) {
                seen.push(ord);
                out.push(resource.entry_by_ordinal(ord));
            }
        }
    }
    Ok(out)
}

/// Warn (`W-ETY-DATE`) when dated links in one etymology container are not
/// monotonic: larger orders are older stages, so representative years must
/// not increase with order. Relative and undated links are skipped.
/// Sub-etymologies are checked independently.
pub fn check_temporal_consistency(ety: &Etymology) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    check_temporal_container(ety, &mut out);
    out
}

fn check_temporal_container(ety: &Etymology, out: &mut Vec<Diagnostic>) {
    let mut dated: Vec<(&EtyLink, i32)> = ety
        .links
        .iter()
        .filter_map(|l| {
            l.date
                .as_ref()
                .and_then(EtyDate::representative_year)
                .map(|y| (l, y))
        })
        .collect();
    dated.sort_by_key(|(l, _)| l.order);
    for pair in dated.windows(2) {
        let (earlier, y_earlier) = pair[0];
        let (later, y_later) = pair[1];
        if y_later > y_earlier {
            let pos = later
                .date
                .as_ref()
                .and_then(|d| d.pos)
                .or(later.pos);
            out.push(
                Diagnostic::new(
                    "W-ETY-DATE",
                    format!(
                        "link {} dated {} postdates link {} dated {}; farther stages should be older",
                        later.order, y_later, earlier.order, y_earlier
                    ),
                )
                .at_opt(pos),
            );
        }
    }
    for sub in &ety.sub_etymologies {
        check_temporal_container(sub, out);
    }
}

/// Directed derivation edges over entry ordinals: one edge per (effective
/// source, target) pair of every link in the resource, deduplicated, in
/// walk order. Dangling references contribute no edges (they are reported
/// separately).
pub fn etymology_edges(resource: &LexicalResource) -> Vec<(u32, u32)> {
    let mut edges = Vec::new();
    for (host, entry) in resource.entries_with_ordinals() {
        let Some(ety) = &entry.etymology else { continue };
        let flat = ety.flat_links();
        for i in 0..flat.len() {
            let sources = effective_source_ordinals(resource, host, &flat, i);
            for target in &flat[i].target_aspects {
                let Some(t) = resource.owning_entry_ordinal(target.target.as_str()) else {
                    continue;
                };
                for &s in &sources {
                    if !edges.contains(&(s, t)) {
                        edges.push((s, t));
                    }
                }
            }
        }
    }
    edges
}

/// Entry-ordinal cycles in the derivation graph, each cycle sorted by
/// ordinal, cycles sorted by first member.
pub(crate) fn cycle_sets(resource: &LexicalResource) -> Vec<Vec<u32>> {
    let n = resource.entry_count();
    let edges = etymology_edges(resource);
    let mut adj = vec![Vec::new(); n];
    for &(s, t) in &edges {
        adj[s as usize].push(t as usize);
    }

    let mut cycles: Vec<Vec<u32>> = strongly_connected(&adj)
        .into_iter()
        .filter(|scc| scc.len() > 1 || adj[scc[0]].contains(&scc[0]))
        .map(|mut scc| {
            scc.sort_unstable();
            scc.into_iter().map(|v| v as u32).collect()
        })
        .collect();
    cycles.sort();
    cycles
}

/// Check the resource's derivation graph for cycles (`E-ETY-CYCLE`), one
/// diagnostic per cycle naming every member.
pub fn check_acyclic(resource: &LexicalResource) -> Vec<Diagnostic> {
    cycle_sets(resource)
        .into_iter()
        .map(|cycle| cycle_diagnostic(resource, &cycle, |_| None))
        .collect()
}

/// Build the diagnostic for one cycle; `pos_of` lets callers with a source
/// map attach the position of a member's id declaration.
pub(crate) fn cycle_diagnostic(
    resource: &LexicalResource,
    cycle: &[u32],
    pos_of: impl Fn(&str) -> Option<(Option<String>, Pos)>,
) -> Diagnostic {
    let mut labels = Vec::new();
    let mut node: Option<&NodeId> = None;
    let mut located: Option<(Option<String>, Pos)> = None;
    for &ord in cycle {
        let entry = resource.entry_by_ordinal(ord);
        match &entry.id {
            Some(id) => {
                if node.is_none() {
                    node = Some(id);
                }
                if located.is_none() {
                    located = pos_of(id.as_str());
                }
                labels.push(String::from(id.as_str()));
            }
            None => labels.push(format!("entry #{ord}")),
        }
    }
    let mut diag = Diagnostic::new(
        "E-ETY-CYCLE",
        format!("etymological links form a cycle: {}", labels.join(" -> ")),
    );
    if let Some(id) = node {
        diag = diag.on_node(id.as_str());
    }
    if let Some((file, pos)) = located {
        diag = diag.at(pos);
        if let Some(file) = file {
            diag = diag.in_file(file);
        }
    }
    diag
}

/// Iterative Tarjan strongly-connected components. Returns each component
/// as node indexes; singletons included.
fn strongly_connected(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0usize;
    let mut sccs: Vec<Vec<usize>> = Vec::new();

    for start in 0..n {
        if index[start] != UNSET {
            continue;
        }
        // Explicit DFS frames: (node, next child position).
        let mut frames: Vec<(usize, usize)> = vec![(start, 0)];
        while let Some(&(v, ci)) = frames.last() {
            if ci == 0 {
                index[v] = next;
                low[v] = next;
                next += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if ci < adj[v].len() {
                frames.last_mut().unwrap().1 += 1;
                let w = adj[v][ci];
                if index[w] == UNSET {
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if let Some(&(parent, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut scc = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        scc.push(w);
                        if w == v {
                            break;
                        }
                    }
                    sccs.push(scc);
                }
            }
        }
    }
    sccs
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn tarjan_finds_components() {
        // 0→1→2→0 is a cycle; 3→4 is not; 5 self-loop is its own SCC.
        let adj = vec![vec![1], vec![2], vec![0], vec![4], vec![], vec![5]];
        let mut sccs = strongly_connected(&adj);
        for scc in &mut sccs {
            scc.sort_unstable();
        }
        sccs.sort();
        assert_eq!(sccs, vec![vec![0, 1, 2], vec![3], vec![4], vec![5]]);
    }

    #[test]
    fn temporal_check_flags_increasing_years() {
        let mut ety = Etymology::new("borrowing");
        let mut l1 = EtyLink::to_etymon("borrowing", 1, "a");
        l1.date = Some(EtyDate::point(1300, "c. 1300"));
        let mut l2 = EtyLink::to_etymon("inheritance", 2, "b");
        l2.date = Some(EtyDate::point(1500, "1500"));
        ety.links = vec![l1, l2];
        let diags = check_temporal_consistency(&ety);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].code, "W-ETY-DATE");
        assert!(diags[0].message.contains("1500"));
    }

    #[test]
    fn temporal_check_accepts_decreasing_and_skips_relative() {
        let mut ety = Etymology::new("inheritance");
        let mut l1 = EtyLink::to_etymon("borrowing", 1, "a");
        l1.date = Some(EtyDate::point(1300, "c. 1300"));
        let mut l2 = EtyLink::to_etymon("inheritance", 2, "b");
        l2.date = Some(EtyDate::relative("before the conquest".to_string()));
        let mut l3 = EtyLink::to_etymon("inheritance", 3, "c");
        l3.date = Some(EtyDate::range(-800, -700, "8th c. BCE"));
        ety.links = vec![l1, l2, l3];
        assert!(check_temporal_consistency(&ety).is_empty());
    }

    #[test]
    fn representative_year_prefers_start() {
        assert_eq!(EtyDate::range(100, 200, "x").representative_year(), Some(100));
        assert_eq!(EtyDate::relative("x").representative_year(), None);
        let mut d = EtyDate::relative("x");
        d.year_end = Some(50);
        assert_eq!(d.representative_year(), Some(50));
    }
}
