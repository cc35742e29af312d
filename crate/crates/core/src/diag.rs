//! Coded diagnostics and validation reports.
//!
//! Every problem the toolkit can raise carries a stable code from
//! [`REGISTRY`]. Severity is fixed by the code prefix: `E-` error, `W-`
//! warning, `I-` info. Errors are violations of stated model or
//! serialization constraints; warnings are heuristic quality signals;
//! infos are permitted-but-notable constructs.

use alloc::string::String;
use alloc::vec::Vec;

/// 1-based line/column position in a source document. Columns count
/// characters, not bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl Pos {
    pub const fn new(line: u32, col: u32) -> Self {
        Pos { line, col }
    }
}

impl core::fmt::Display for Pos {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Error,
    Warning,
    Info,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Error => "ERROR",
            Severity::Warning => "WARNING",
            Severity::Info => "INFO",
        }
    }

    /// Severity implied by a code prefix. Unknown prefixes are errors.
    pub fn of_code(code: &str) -> Severity {
        if code.starts_with("W-") {
            Severity::Warning
        } else if code.starts_with("I-") {
            Severity::Info
        } else {
            Severity::Error
        }
    }
}

/// One diagnostic: a registered code plus whatever location context the
/// producer had. `file` is filled in by multi-document ingestion; in-memory
/// parses leave it empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: &'static str,
    pub severity: Severity,
    pub file: Option<String>,
    pub pos: Option<Pos>,
    /// Id of the node the diagnostic is about, when one exists.
    pub node: Option<String>,
    pub message: String,
}

impl Diagnostic {
    /// New diagnostic for a registered code. Severity comes from the
    /// registry; debug builds assert the code is actually registered.
    pub fn new(code: &'static str, message: String) -> Self {
        debug_assert!(lookup(code).is_some(), "unregistered diagnostic code");
        Diagnostic {
            code,
            severity: Severity::of_code(code),
            file: None,
            pos: None,
            node: None,
            message,
        }
    }

    pub fn at(mut self, pos: Pos) -> Self {
        self.pos = Some(pos);
        self
    }

    pub fn at_opt(mut self, pos: Option<Pos>) -> Self {
        self.pos = pos;
        self
    }

    pub fn on_node(mut self, id: impl Into<String>) -> Self {
        self.node = Some(id.into());
        self
    }

    pub fn on_node_opt(mut self, id: Option<&str>) -> Self {
        if let Some(id) = id {
            self.node = Some(String::from(id));
        }
        self
    }

    pub fn in_file(mut self, file: impl Into<String>) -> Self {
        self.file = Some(file.into());
        self
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }

    /// Sort key: document order (file, position, with unlocated entries
    /// last), then code, then node and message as final tiebreakers so the
    /// order is total and reproducible.
    fn sort_key(&self) -> (u8, &str, u8, u32, u32, &str, &str, &str) {
        let (fp, file) = match &self.file {
            None => (0u8, ""),
            Some(f) => (1u8, f.as_str()),
        };
        let (pp, line, col) = match self.pos {
            Some(p) => (0u8, p.line, p.col),
            None => (1u8, 0, 0),
        };
        (
            fp,
            file,
            pp,
            line,
            col,
            self.code,
            self.node.as_deref().unwrap_or(""),
            self.message.as_str(),
        )
    }
}

/// Diagnostics plus per-severity tallies. Construction recounts, so the
/// counts always equal the tallies over `diagnostics`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub diagnostics: Vec<Diagnostic>,
    pub errors: usize,
    pub warnings: usize,
    pub infos: usize,
}

impl ValidationReport {
    pub fn new(mut diagnostics: Vec<Diagnostic>) -> Self {
        diagnostics.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let mut report = ValidationReport {
            diagnostics,
            errors: 0,
            warnings: 0,
            infos: 0,
        };
        report.recount();
        report
    }

    fn recount(&mut self) {
        self.errors = 0;
        self.warnings = 0;
        self.infos = 0;
        for d in &self.diagnostics {
            match d.severity {
                Severity::Error => self.errors += 1,
                Severity::Warning => self.warnings += 1,
                Severity::Info => self.infos += 1,
            }
        }
    }

    pub fn has_errors(&self) -> bool {
        self.errors > 0
    }

    pub fn merge(mut self, other: ValidationReport) -> Self {
        self.diagnostics.extend(other.diagnostics);
        Self::new(self.diagnostics)
    }

    pub fn first_error(&self) -> Option<&Diagnostic> {
        self.diagnostics.iter().find(|d| d.is_error())
    }
}

/// Registry row: the code, its severity, and a one-line description.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeInfo {
    pub code: &'static str,
    pub severity: Severity,
    pub description: &'static str,
}

macro_rules! codes {
    ($($code:literal => $desc:literal,)*) => {
        &[$(CodeInfo {
            code: $code,
            severity: match $code.as_bytes()[0] {
                b'W' => Severity::Warning,
                b'I' => Severity::Info,
                _ => Severity::Error,
            },
            description: $desc,
        },)*]
    };
}

/// All diagnostic codes, sorted by code. Codes are append-only and never
/// renumbered; tooling may rely on them.
pub const REGISTRY: &[CodeInfo] = codes![
    "E-ATTR-REQUIRED" => "a required attribute is missing",
    "E-DATE-RANGE" => "etymology date years contradict the date kind",
    "E-EMPTY-TEXT" => "a text field that must be non-empty is empty or blank",
    "E-ENTRY-KIND" => "entry fields contradict its kind, or a grammatical feature misuses the named-element syntax",
    "E-ETY-CYCLE" => "etymological links form a reference cycle",
    "E-FORM-EMPTY" => "a form carries no representations and no segments",
    "E-FORM-NESTED" => "nested forms are only permitted under the lemma form",
    "E-ID-DUP" => "the same id is declared more than once in the resource",
    "E-ID-SYNTAX" => "an id is not a valid XML NCName",
    "E-LANG-SYNTAX" => "a language code is not a well-formed tag",
    "E-LEMMA-EXTRA" => "an entry declares more than one lemma form",
    "E-LEMMA-MISSING" => "an entry has no lemma form",
    "E-LINK-ORDER" => "etymological link orders are not consecutive from 1",
    "E-LINK-TARGET" => "an etymological link or cross-reference has no target",
    "E-PROFILE-ATTR" => "an attribute is not permitted here by the serialization profile",
    "E-PROFILE-ELEMENT" => "an element is not permitted here by the serialization profile",
    "E-PROFILE-STRUCT" => "element content violates a structural rule of the profile",
    "E-REF-DANGLING" => "a reference target id does not exist in the resource",
    "E-REF-KIND" => "a reference resolves to a node of the wrong kind",
    "E-SEG-CONTEXT" => "component segments appear outside a multiword expression form",
    "E-SEG-ORDER" => "segment orders are not consecutive from 1",
    "E-SENSE-EMPTY" => "a sense has no definition, example, feature, or subsense",
    "E-UNSERIALIZABLE" => "a model value has no representation under the active profile",
    "E-XML-ENCODING" => "the document is not UTF-8 or declares another encoding",
    "E-XML-MALFORMED" => "the document is not well-formed XML",
    "E-XREF-ORDER" => "cross-reference target orders are not consecutive from 1",
    "E-XREF-SELF" => "a cross-reference lists its own source among its targets",
    "I-RE-SENSE" => "a related-entry subentry carries its own senses",
    "I-XREF-LEXICON" => "a cross-reference spans two lexicons",
    "W-DATE-NUM" => "an etymology date attribute is not a number",
    "W-ETY-DATE" => "etymology dates are not monotonic along the chain",
    "W-NO-LANG" => "a lexicon declares no language",
    "W-NO-SENSE" => "a standard entry has no senses",
];

pub fn lookup(code: &str) -> Option<&'static CodeInfo> {
    REGISTRY
        .binary_search_by(|info| info.code.cmp(code))
        .ok()
        .map(|i| &REGISTRY[i])
}
